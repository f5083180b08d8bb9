//! Structure constants of three-generator Lie algebras, extracted numerically
//! from matrix realizations so algebras in different dimensions can be compared.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use super::bracket;
use super::expm::{max_abs, CMatrix};

/// `[X_a, X_b] = Σ_c coeffs[a][b][c] X_c` for a three-element basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    pub coeffs: [[[Complex64; 3]; 3]; 3],
    /// Largest entry of `[X_a, X_b] − Σ_c f X_c` over all pairs; zero when the
    /// basis closes under commutation.
    pub closure_residual: f64,
}

impl StructureConstants {
    /// Largest coefficient difference between two algebras, basis element by basis element.
    pub fn max_difference(&self, other: &StructureConstants) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    worst = worst.max((self.coeffs[a][b][c] - other.coeffs[a][b][c]).norm());
                }
            }
        }
        worst
    }
}

fn inner<const D: usize>(a: &CMatrix<D>, b: &CMatrix<D>) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Projects every commutator of `basis` onto the span of `basis` (Frobenius inner product).
///
/// Panics if the basis is linearly dependent.
pub fn structure_constants<const D: usize>(basis: &[CMatrix<D>; 3]) -> StructureConstants {
    let gram = Matrix3::from_fn(|c, d| inner(&basis[c], &basis[d]));
    let gram_inv = gram
        .try_inverse()
        .expect("basis must be linearly independent");

    let mut coeffs = [[[Complex64::new(0.0, 0.0); 3]; 3]; 3];
    let mut closure_residual = 0.0f64;
    for a in 0..3 {
        for b in 0..3 {
            let comm = bracket(&basis[a], &basis[b]);
            let rhs = Vector3::from_fn(|c, _| inner(&basis[c], &comm));
            let f = gram_inv * rhs;
            let mut rebuilt = CMatrix::<D>::zeros();
            for c in 0..3 {
                coeffs[a][b][c] = f[c];
                rebuilt += basis[c] * f[c];
            }
            closure_residual = closure_residual.max(max_abs(&(comm - rebuilt)));
        }
    }
    StructureConstants {
        coeffs,
        closure_residual,
    }
}
