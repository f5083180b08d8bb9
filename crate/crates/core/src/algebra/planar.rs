//! The Euclidean group of the plane, E(2), on homogeneous coordinates `(x, y, 1)`.
//!
//! ```text
//! L  = [[0, -i, 0], [i, 0, 0], [0, 0, 0]]
//! Px = [[0,  0, i], [0, 0, 0], [0, 0, 0]]
//! Py = [[0,  0, 0], [0, 0, i], [0, 0, 0]]
//! ```
//!
//! `exp(−iaPx)` translates by `a` along x; `exp(−iθL)` rotates by `θ` about the origin.

use std::fmt;

use nalgebra::Matrix3;
use num_complex::Complex64;

use super::checks::RelationCheck;
use super::expm::{expm, max_abs, CMatrix};
use super::structure::{structure_constants, StructureConstants};
use super::{bracket, GeneratorLabel, GeneratorSet};
use crate::error::{ensure_finite, Result};

pub type Matrix3C = CMatrix<3>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlanarLabel {
    L,
    Px,
    Py,
}

impl PlanarLabel {
    pub const ALL: [PlanarLabel; 3] = [PlanarLabel::L, PlanarLabel::Px, PlanarLabel::Py];

    /// Little-group generator playing the same role: `J3 → L`, `N1 → Px`, `N2 → Py`.
    pub fn little_group_partner(self) -> GeneratorLabel {
        match self {
            PlanarLabel::L => GeneratorLabel::J3,
            PlanarLabel::Px => GeneratorLabel::N1,
            PlanarLabel::Py => GeneratorLabel::N2,
        }
    }
}

impl fmt::Display for PlanarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlanarLabel::L => "L",
            PlanarLabel::Px => "Px",
            PlanarLabel::Py => "Py",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlanarGenerator {
    pub label: PlanarLabel,
    pub matrix: Matrix3C,
}

pub fn planar_generator(label: PlanarLabel) -> PlanarGenerator {
    let i = Complex64::new(0.0, 1.0);
    let mut m = Matrix3C::zeros();
    match label {
        PlanarLabel::L => {
            m[(0, 1)] = -i;
            m[(1, 0)] = i;
        }
        PlanarLabel::Px => m[(0, 2)] = i,
        PlanarLabel::Py => m[(1, 2)] = i,
    }
    PlanarGenerator { label, matrix: m }
}

/// `exp(−i·a·G)` as a real 3×3 matrix on `(x, y, 1)`.
pub fn planar_element(label: PlanarLabel, a: f64) -> Result<Matrix3<f64>> {
    ensure_finite("a", a)?;
    let g = planar_generator(label).matrix;
    Ok(expm(&(g * Complex64::new(0.0, -a))).map(|z| z.re))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlanarReport {
    pub relations: Vec<RelationCheck>,
    pub plane: StructureConstants,
    pub little_group: StructureConstants,
    /// Largest coefficient difference between `{L, Px, Py}` and `{J3, N1, N2}`.
    pub structure_difference: f64,
}

impl PlanarReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(RelationCheck::passed)
    }
}

/// Checks the three E(2) commutators and compares E(2)'s structure constants
/// with those of `{J3, N1, N2}` taken from `set`.
pub fn planar_commutation_check(set: &GeneratorSet, tol: f64) -> PlanarReport {
    let [l, px, py] = PlanarLabel::ALL.map(|p| planar_generator(p).matrix);
    let i = Complex64::new(0.0, 1.0);
    let mut relations = vec![
        RelationCheck::new("[Px,Py] = 0", max_abs(&bracket(&px, &py)), tol),
        RelationCheck::new("[L,Px] = iPy", max_abs(&(bracket(&l, &px) - py * i)), tol),
        RelationCheck::new("[L,Py] = -iPx", max_abs(&(bracket(&l, &py) + px * i)), tol),
    ];

    let plane = structure_constants(&[l, px, py]);
    let little_group =
        structure_constants(&PlanarLabel::ALL.map(|p| *set.matrix(p.little_group_partner())));
    let structure_difference = plane.max_difference(&little_group);
    relations.push(RelationCheck::new(
        "E(2) structure constants = {J3,N1,N2} structure constants",
        structure_difference
            .max(plane.closure_residual)
            .max(little_group.closure_residual),
        tol,
    ));

    PlanarReport {
        relations,
        plane,
        little_group,
        structure_difference,
    }
}
