//! Lorentz-group generators in the four-vector representation, their
//! one-parameter subgroups, and Wigner's little groups.
//!
//! All matrices act on column vectors `(x, y, z, t)`. Rotation generators act
//! right-handedly on `(x, y, z)` and the group element attached to a generator
//! `G` and parameter `θ` is `exp(−iθG)`. Nonzero entries (row, column):
//!
//! | generator | entries |
//! |-----------|---------|
//! | `J1` | `(y,z) = −i`, `(z,y) = i` |
//! | `J2` | `(z,x) = −i`, `(x,z) = i` |
//! | `J3` | `(x,y) = −i`, `(y,x) = i` |
//! | `K1` | `(x,t) = i`, `(t,x) = i` |
//! | `K2` | `(y,t) = i`, `(t,y) = i` |
//! | `K3` | `(z,t) = i`, `(t,z) = i` |
//! | `N1 = K1 − J2` | `(x,t) = i`, `(t,x) = i`, `(x,z) = −i`, `(z,x) = i` |
//! | `N2 = K2 + J1` | `(y,t) = i`, `(t,y) = i`, `(y,z) = −i`, `(z,y) = i` |
//!
//! With these, `exp(−iηK3)` restricted to `(z, t)` is
//! `[[cosh η, sinh η], [sinh η, cosh η]]` and `exp(−iθJ3)` rotates x toward y.

pub mod checks;
pub mod contraction;
pub mod expm;
mod four_vector;
pub mod planar;
pub mod structure;

use std::fmt;
use std::str::FromStr;

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use self::expm::{expm, CMatrix};
pub use self::four_vector::FourVector;
use crate::error::{ensure_finite, Error, Result};

/// 4×4 complex matrix acting on `(x, y, z, t)`.
pub type Matrix4C = CMatrix<4>;

pub(crate) const X: usize = 0;
pub(crate) const Y: usize = 1;
pub(crate) const Z: usize = 2;
pub(crate) const T: usize = 3;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorLabel {
    J1,
    J2,
    J3,
    K1,
    K2,
    K3,
    N1,
    N2,
}

impl GeneratorLabel {
    pub const ALL: [GeneratorLabel; 8] = [
        GeneratorLabel::J1,
        GeneratorLabel::J2,
        GeneratorLabel::J3,
        GeneratorLabel::K1,
        GeneratorLabel::K2,
        GeneratorLabel::K3,
        GeneratorLabel::N1,
        GeneratorLabel::N2,
    ];

    pub const ROTATIONS: [GeneratorLabel; 3] =
        [GeneratorLabel::J1, GeneratorLabel::J2, GeneratorLabel::J3];
    pub const BOOSTS: [GeneratorLabel; 3] =
        [GeneratorLabel::K1, GeneratorLabel::K2, GeneratorLabel::K3];

    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorLabel::J1 => "J1",
            GeneratorLabel::J2 => "J2",
            GeneratorLabel::J3 => "J3",
            GeneratorLabel::K1 => "K1",
            GeneratorLabel::K2 => "K2",
            GeneratorLabel::K3 => "K3",
            GeneratorLabel::N1 => "N1",
            GeneratorLabel::N2 => "N2",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeneratorLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorLabel::ALL
            .iter()
            .copied()
            .find(|l| l.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// A Lie-algebra element of the Lorentz group in the vector representation.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub label: GeneratorLabel,
    pub matrix: Matrix4C,
}

fn rotation_matrix(axis: usize) -> Matrix4C {
    // (J_k)_{ab} = -i ε_{kab} on the spatial block
    let (a, b) = ((axis + 1) % 3, (axis + 2) % 3);
    let mut m = Matrix4C::zeros();
    m[(a, b)] = -I;
    m[(b, a)] = I;
    m
}

fn boost_matrix(axis: usize) -> Matrix4C {
    let mut m = Matrix4C::zeros();
    m[(axis, T)] = I;
    m[(T, axis)] = I;
    m
}

/// The canonical generator for `label`.
pub fn generator(label: GeneratorLabel) -> Generator {
    GeneratorSet::canonical().get(label).clone()
}

/// All eight generators, indexed by label.
///
/// Kept as a set so the check suite can run against a deliberately broken
/// copy (see [`GeneratorSet::corrupted`]).
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    generators: Vec<Generator>,
}

impl GeneratorSet {
    pub fn canonical() -> Self {
        let j = [rotation_matrix(X), rotation_matrix(Y), rotation_matrix(Z)];
        let k = [boost_matrix(X), boost_matrix(Y), boost_matrix(Z)];
        Self::from_rotations_and_boosts(j, k)
    }

    /// Canonical set with the sign of the `(x, t)` entry of `K1` flipped.
    /// `N1` is rebuilt from the corrupted `K1`.
    pub fn corrupted() -> Self {
        let j = [rotation_matrix(X), rotation_matrix(Y), rotation_matrix(Z)];
        let mut k = [boost_matrix(X), boost_matrix(Y), boost_matrix(Z)];
        k[0][(X, T)] = -k[0][(X, T)];
        Self::from_rotations_and_boosts(j, k)
    }

    fn from_rotations_and_boosts(j: [Matrix4C; 3], k: [Matrix4C; 3]) -> Self {
        let n1 = k[0] - j[1];
        let n2 = k[1] + j[0];
        let matrices = [j[0], j[1], j[2], k[0], k[1], k[2], n1, n2];
        let generators = GeneratorLabel::ALL
            .iter()
            .zip(matrices)
            .map(|(&label, matrix)| Generator { label, matrix })
            .collect();
        GeneratorSet { generators }
    }

    pub fn get(&self, label: GeneratorLabel) -> &Generator {
        &self.generators[label.index()]
    }

    pub fn matrix(&self, label: GeneratorLabel) -> &Matrix4C {
        &self.get(label).matrix
    }
}

/// `ab − ba`.
pub fn bracket<const D: usize>(a: &CMatrix<D>, b: &CMatrix<D>) -> CMatrix<D> {
    a * b - b * a
}

pub fn commutator(a: &Generator, b: &Generator) -> Matrix4C {
    bracket(&a.matrix, &b.matrix)
}

/// Where a group element came from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Provenance {
    Identity,
    OneParameter {
        label: GeneratorLabel,
        parameter: f64,
    },
    Product,
}

/// A real Lorentz transformation acting on `(x, y, z, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    pub matrix: Matrix4<f64>,
    pub provenance: Provenance,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            matrix: Matrix4::identity(),
            provenance: Provenance::Identity,
        }
    }

    pub fn apply(&self, p: &FourVector) -> FourVector {
        FourVector::from_vector(&(self.matrix * p.to_vector()))
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: self.matrix * other.matrix,
            provenance: Provenance::Product,
        }
    }

    pub fn determinant(&self) -> f64 {
        self.matrix.determinant()
    }

    /// The `(z, t)` block.
    pub fn block_zt(&self) -> Matrix2<f64> {
        self.matrix.fixed_view::<2, 2>(Z, Z).into_owned()
    }

    pub fn to_complex(&self) -> Matrix4C {
        self.matrix.map(|r| Complex64::new(r, 0.0))
    }
}

/// `exp(−iθG)`. The generators are chosen so that `−iG` is real, so the
/// exponential is real up to rounding; the imaginary part is dropped.
pub fn group_element(g: &Generator, theta: f64) -> Result<GroupElement> {
    ensure_finite("theta", theta)?;
    let full = expm(&(g.matrix * Complex64::new(0.0, -theta)));
    debug_assert!(full
        .iter()
        .all(|z| z.im.abs() <= 1e-12 * (1.0 + z.re.abs())));
    Ok(GroupElement {
        matrix: full.map(|z| z.re),
        provenance: Provenance::OneParameter {
            label: g.label,
            parameter: theta,
        },
    })
}

/// True iff `max |elem·p − p| ≤ tol`.
pub fn leaves_invariant(elem: &GroupElement, p: &FourVector, tol: f64) -> bool {
    (elem.apply(p) - *p).max_abs() <= tol
}

#[cfg(test)]
mod tests {
    use super::expm::max_abs;
    use super::*;
    use std::f64::consts::PI;

    /// Plain Taylor series, no scaling: independent of the library's expm.
    fn series_exp(a: &Matrix4C, terms: usize) -> Matrix4C {
        let mut sum = Matrix4C::identity();
        let mut term = Matrix4C::identity();
        for k in 1..terms {
            term = term * a / Complex64::new(k as f64, 0.0);
            sum += term;
        }
        sum
    }

    #[test]
    fn labels_parse_and_reject() {
        assert_eq!("n1".parse::<GeneratorLabel>().unwrap(), GeneratorLabel::N1);
        assert_eq!(" K3".parse::<GeneratorLabel>().unwrap(), GeneratorLabel::K3);
        assert_eq!(
            "K4".parse::<GeneratorLabel>(),
            Err(Error::UnknownLabel("K4".into()))
        );
    }

    #[test]
    fn n_generators_are_linear_combinations() {
        use GeneratorLabel::*;
        assert_eq!(
            generator(N1).matrix,
            generator(K1).matrix - generator(J2).matrix
        );
        assert_eq!(
            generator(N2).matrix,
            generator(K2).matrix + generator(J1).matrix
        );
    }

    #[test]
    fn traceless_hermitian_and_real_exponents() {
        for label in GeneratorLabel::ALL {
            let g = generator(label);
            assert_eq!(g.matrix.trace(), Complex64::new(0.0, 0.0), "{label}");
            // -iG real
            assert!((g.matrix * Complex64::new(0.0, -1.0))
                .iter()
                .all(|z| z.im == 0.0));
        }
        for label in GeneratorLabel::ROTATIONS {
            let g = generator(label).matrix;
            assert_eq!(g, g.adjoint(), "{label} must be Hermitian");
        }
    }

    #[test]
    fn j3_rotates_x_toward_y() {
        let j3 = generator(GeneratorLabel::J3);
        for &theta in &[0.1, 0.7, 1.3, -2.0] {
            let oracle = series_exp(&(j3.matrix * Complex64::new(0.0, -theta)), 30);
            let e = group_element(&j3, theta).unwrap();
            assert!(max_abs(&(oracle - e.to_complex())) < 1e-14);
            let p = e.apply(&FourVector::new(1.0, 0.0, 0.0, 0.0));
            assert!((p.x - theta.cos()).abs() < 1e-14);
            assert!((p.y - theta.sin()).abs() < 1e-14);
            assert_eq!((p.z, p.t), (0.0, 0.0));
        }
    }

    #[test]
    fn exponential_matches_series_oracle_for_every_generator() {
        for label in GeneratorLabel::ALL {
            let g = generator(label);
            for &theta in &[-1.5, 0.4, 1.0] {
                let oracle = series_exp(&(g.matrix * Complex64::new(0.0, -theta)), 30);
                let e = group_element(&g, theta).unwrap();
                assert!(
                    max_abs(&(oracle - e.to_complex())) < 1e-13,
                    "{label} θ={theta}"
                );
            }
        }
    }

    #[test]
    fn boost_block_is_hyperbolic() {
        let k3 = generator(GeneratorLabel::K3);
        for &eta in &[0.5, 3.0, 20.0] {
            let b = group_element(&k3, eta).unwrap().block_zt();
            let expected = Matrix2::new(eta.cosh(), eta.sinh(), eta.sinh(), eta.cosh());
            let rel = (b - expected).abs().max() / eta.cosh();
            assert!(rel < 1e-13, "η={eta}: {rel}");
        }
    }

    #[test]
    fn zero_parameter_and_full_turn() {
        for label in GeneratorLabel::ALL {
            let e = group_element(&generator(label), 0.0).unwrap();
            assert_eq!(e.matrix, Matrix4::identity());
        }
        let turn = group_element(&generator(GeneratorLabel::J3), 2.0 * PI).unwrap();
        assert!((turn.matrix - Matrix4::identity()).abs().max() < 1e-13);
    }

    #[test]
    fn non_finite_parameter_rejected() {
        let g = generator(GeneratorLabel::J1);
        assert!(matches!(
            group_element(&g, f64::NAN),
            Err(Error::NonFinite { name: "theta", .. })
        ));
        assert!(group_element(&g, f64::INFINITY).is_err());
    }

    #[test]
    fn little_group_examples() {
        let j1 = group_element(&generator(GeneratorLabel::J1), 1.2).unwrap();
        for &m in &[0.1, 1.0, 938.0] {
            assert!(leaves_invariant(&j1, &FourVector::at_rest(m), 1e-12));
        }
        let n1 = group_element(&generator(GeneratorLabel::N1), 0.7).unwrap();
        assert!(leaves_invariant(&n1, &FourVector::lightlike_z(2.5), 1e-12));
        // a boost moves the rest momentum
        let k1 = group_element(&generator(GeneratorLabel::K1), 0.7).unwrap();
        assert!(!leaves_invariant(&k1, &FourVector::at_rest(1.0), 1e-6));
        let id = GroupElement::identity();
        assert!(leaves_invariant(
            &id,
            &FourVector::new(3.0, -1.0, 2.0, 7.0),
            1e-300
        ));
    }

    #[test]
    fn determinant_is_one() {
        for label in GeneratorLabel::ALL {
            let e = group_element(&generator(label), 1.7).unwrap();
            assert!((e.determinant() - 1.0).abs() < 1e-10, "{label}");
        }
    }

    #[test]
    fn corrupted_set_differs_only_in_boost_x() {
        let good = GeneratorSet::canonical();
        let bad = GeneratorSet::corrupted();
        assert_ne!(
            good.matrix(GeneratorLabel::K1),
            bad.matrix(GeneratorLabel::K1)
        );
        assert_ne!(
            good.matrix(GeneratorLabel::N1),
            bad.matrix(GeneratorLabel::N1)
        );
        assert_eq!(
            good.matrix(GeneratorLabel::J2),
            bad.matrix(GeneratorLabel::J2)
        );
    }
}
