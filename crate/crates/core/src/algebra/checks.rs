//! Commutation-relation and little-group invariance suites.
//!
//! Every check runs against a [`GeneratorSet`] so the same suite can be pointed
//! at a corrupted set as a negative control.

use num_complex::Complex64;

use super::expm::max_abs;
use super::planar::planar_commutation_check;
use super::{
    bracket, group_element, FourVector, Generator, GeneratorLabel, GeneratorSet, Matrix4C,
};

/// Tolerance for commutators and structure constants.
pub const COMMUTATOR_TOL: f64 = 1e-12;
/// Tolerance for `‖Λp − p‖∞` in the invariance checks.
pub const INVARIANCE_TOL: f64 = 1e-9;
/// Parameter range and sample count for the invariance checks.
pub const INVARIANCE_THETA_RANGE: (f64, f64) = (-5.0, 5.0);
pub const INVARIANCE_SAMPLES: usize = 20;
pub const REST_MASSES: [f64; 3] = [0.5, 1.0, 10.0];
pub const LIGHTLIKE_ENERGIES: [f64; 3] = [0.5, 1.0, 10.0];

/// One named identity and its worst residual.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
}

impl RelationCheck {
    pub fn new(name: impl Into<String>, max_residual: f64, tolerance: f64) -> Self {
        RelationCheck {
            name: name.into(),
            max_residual,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.max_residual <= self.tolerance
    }
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn rhs_name(sign: f64, label: &str) -> String {
    match sign {
        s if s > 0.0 => format!("i{label}"),
        s if s < 0.0 => format!("-i{label}"),
        _ => "0".to_string(),
    }
}

/// `[A_i, B_j] = sign · i ε_ijk C_k`, one check per listed pair.
fn family(
    set: &GeneratorSet,
    a: [GeneratorLabel; 3],
    b: [GeneratorLabel; 3],
    c: [GeneratorLabel; 3],
    sign: f64,
    pairs: &[(usize, usize)],
    tol: f64,
) -> Vec<RelationCheck> {
    let i = Complex64::new(0.0, 1.0);
    pairs
        .iter()
        .map(|&(p, q)| {
            let comm = bracket(set.matrix(a[p]), set.matrix(b[q]));
            let mut expected = Matrix4C::zeros();
            let mut target = String::from("0");
            for (k, &label) in c.iter().enumerate() {
                let e = sign * levi_civita(p, q, k);
                if e != 0.0 {
                    expected += set.matrix(label) * (i * e);
                    target = rhs_name(e, label.as_str());
                }
            }
            let name = format!("[{},{}] = {}", a[p], b[q], target);
            RelationCheck::new(name, max_abs(&(comm - expected)), tol)
        })
        .collect()
}

/// The Lorentz algebra: rotations close, boosts transform as vectors, boosts
/// commute into rotations. 15 relations.
pub fn lorentz_relations(set: &GeneratorSet) -> Vec<RelationCheck> {
    let j = GeneratorLabel::ROTATIONS;
    let k = GeneratorLabel::BOOSTS;
    let upper = [(0, 1), (0, 2), (1, 2)];
    let all: Vec<(usize, usize)> = (0..3).flat_map(|p| (0..3).map(move |q| (p, q))).collect();

    let mut out = family(set, j, j, j, 1.0, &upper, COMMUTATOR_TOL);
    out.extend(family(set, j, k, k, 1.0, &all, COMMUTATOR_TOL));
    out.extend(family(set, k, k, j, -1.0, &upper, COMMUTATOR_TOL));
    out
}

/// The massless little group `{J3, N1, N2}`. 3 relations.
pub fn little_group_relations(set: &GeneratorSet) -> Vec<RelationCheck> {
    use GeneratorLabel::*;
    let i = Complex64::new(0.0, 1.0);
    let m = |l| *set.matrix(l);
    vec![
        RelationCheck::new(
            "[N1,N2] = 0",
            max_abs(&bracket(&m(N1), &m(N2))),
            COMMUTATOR_TOL,
        ),
        RelationCheck::new(
            "[J3,N1] = iN2",
            max_abs(&(bracket(&m(J3), &m(N1)) - m(N2) * i)),
            COMMUTATOR_TOL,
        ),
        RelationCheck::new(
            "[J3,N2] = -iN1",
            max_abs(&(bracket(&m(J3), &m(N2)) + m(N1) * i)),
            COMMUTATOR_TOL,
        ),
    ]
}

pub fn theta_samples() -> Vec<f64> {
    let (lo, hi) = INVARIANCE_THETA_RANGE;
    let n = INVARIANCE_SAMPLES;
    (0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect()
}

fn worst_displacement(g: &Generator, momenta: &[FourVector]) -> f64 {
    let mut worst = 0.0f64;
    for theta in theta_samples() {
        let elem = group_element(g, theta).expect("finite sample parameter");
        for p in momenta {
            worst = worst.max((elem.apply(p) - *p).max_abs());
        }
    }
    worst
}

/// Rotations fix a massive particle at rest; `N1`, `N2`, `J3` fix a lightlike
/// momentum along z. 6 checks.
pub fn invariance_checks(set: &GeneratorSet) -> Vec<RelationCheck> {
    use GeneratorLabel::*;
    let rest: Vec<FourVector> = REST_MASSES
        .iter()
        .map(|&m| FourVector::at_rest(m))
        .collect();
    let light: Vec<FourVector> = LIGHTLIKE_ENERGIES
        .iter()
        .map(|&w| FourVector::lightlike_z(w))
        .collect();

    let mut out = Vec::new();
    for label in [J1, J2, J3] {
        out.push(RelationCheck::new(
            format!("exp(-i theta {label}) fixes (0,0,0,m)"),
            worst_displacement(set.get(label), &rest),
            INVARIANCE_TOL,
        ));
    }
    for label in [N1, N2, J3] {
        out.push(RelationCheck::new(
            format!("exp(-i theta {label}) fixes (0,0,w,w)"),
            worst_displacement(set.get(label), &light),
            INVARIANCE_TOL,
        ));
    }
    out
}

/// Everything: Lorentz algebra, little group, E(2) relations, the structure
/// constant match, and the invariance checks.
pub fn full_suite(set: &GeneratorSet) -> Vec<RelationCheck> {
    let mut out = lorentz_relations(set);
    out.extend(little_group_relations(set));
    out.extend(planar_commutation_check(set, COMMUTATOR_TOL).relations);
    out.extend(invariance_checks(set));
    out
}
