//! Contraction of the massive little group into the massless one under a boost along z.
//!
//! Boost the rest frame to rapidity `η` along +z with `Λ = exp(−iηK3)`. The
//! transverse rotation generators seen from the boosted frame, `Λ J Λ⁻¹`,
//! grow like `e^η`; rescaled by `e^{−η}` they converge:
//!
//! ```text
//!  e^{−η} Λ J2 Λ⁻¹  →  CONTRACTION_FACTOR · N1
//! −e^{−η} Λ J1 Λ⁻¹  →  CONTRACTION_FACTOR · N2
//! ```
//!
//! The deviation from the limit is exactly proportional to `e^{−2η}`.
//! Boosting toward −z instead produces generators that fix the lightlike
//! vector along −z, which are not multiples of `N1`/`N2`.

use num_complex::Complex64;

use super::expm::CMatrix;
use super::{generator, group_element, GeneratorLabel, Matrix4C};
use crate::error::Result;

/// Proportionality constant between the contracted transverse rotation and
/// `N1` (resp. `N2`). Found with a brute-force matrix exponential at η = 10.
pub const CONTRACTION_FACTOR: f64 = -0.5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContractionSource {
    J1,
    J2,
}

impl ContractionSource {
    pub fn rotation(self) -> GeneratorLabel {
        match self {
            ContractionSource::J1 => GeneratorLabel::J1,
            ContractionSource::J2 => GeneratorLabel::J2,
        }
    }

    /// The massless generator the rotation contracts into.
    pub fn limit_label(self) -> GeneratorLabel {
        match self {
            ContractionSource::J1 => GeneratorLabel::N2,
            ContractionSource::J2 => GeneratorLabel::N1,
        }
    }

    fn sign(self) -> f64 {
        match self {
            ContractionSource::J1 => -1.0,
            ContractionSource::J2 => 1.0,
        }
    }
}

/// `± e^{−η} Λ(η) J Λ(η)⁻¹`, minus sign for `J1`.
pub fn contracted_generator(eta: f64, source: ContractionSource) -> Result<Matrix4C> {
    let k3 = generator(GeneratorLabel::K3);
    let boost = group_element(&k3, eta)?.to_complex();
    let unboost = group_element(&k3, -eta)?.to_complex();
    let j = generator(source.rotation()).matrix;
    let scale = Complex64::new(source.sign() * (-eta).exp(), 0.0);
    Ok(boost * j * unboost * scale)
}

/// `CONTRACTION_FACTOR · N`.
pub fn contraction_limit(source: ContractionSource) -> Matrix4C {
    generator(source.limit_label()).matrix * Complex64::new(CONTRACTION_FACTOR, 0.0)
}

pub fn frobenius_norm<const D: usize>(m: &CMatrix<D>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Frobenius distance from the contracted generator at `eta` to its limit.
pub fn contraction_residual(eta: f64, source: ContractionSource) -> Result<f64> {
    let m = contracted_generator(eta, source)?;
    Ok(frobenius_norm(&(m - contraction_limit(source))))
}
