//! Small dense complex matrices and their exponential.

use nalgebra::{Const, DimMin, SMatrix};
use num_complex::Complex64;

pub type CMatrix<const D: usize> = SMatrix<Complex64, D, D>;

/// Largest entry modulus.
pub fn max_abs<const D: usize>(a: &CMatrix<D>) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `exp(a)` by nalgebra's scaled Padé approximant.
pub fn expm<const D: usize>(a: &CMatrix<D>) -> CMatrix<D>
where
    Const<D>: DimMin<Const<D>, Output = Const<D>>,
{
    a.exp()
}
