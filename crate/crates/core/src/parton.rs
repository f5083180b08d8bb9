//! Time-scale bookkeeping behind parton incoherence.
//!
//! A hadron at rapidity `η` has its internal oscillation period dilated by
//! `e^η`, while a counter-propagating probe, travelling along the negative
//! light-cone axis where the hadron is contracted, crosses it in a time shrunk
//! by `e^{−η}`. Their ratio `e^{−2η}` is the coherence ratio: once it is small
//! the probe sees the constituents as free and incoherent.
//!
//! The growth in the number of partons has no formula of its own here; the
//! measurable proxy is the widening of the momentum distribution along `q_u`,
//! available from [`crate::momentum`].

use crate::error::{Error, Result};

pub const PROTON_MASS_GEV: f64 = 0.938;

/// Beam energy and particle mass in GeV.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BeamSpec {
    pub energy: f64,
    pub mass: f64,
}

impl BeamSpec {
    pub fn new(energy: f64, mass: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidBeam(format!(
                "mass must be positive and finite, got {mass}"
            )));
        }
        if !energy.is_finite() {
            return Err(Error::InvalidBeam(format!(
                "energy must be finite, got {energy}"
            )));
        }
        if energy < mass {
            return Err(Error::InvalidBeam(format!(
                "energy {energy} GeV is below the mass {mass} GeV"
            )));
        }
        Ok(BeamSpec { energy, mass })
    }

    pub fn proton(energy: f64) -> Result<Self> {
        BeamSpec::new(energy, PROTON_MASS_GEV)
    }
}

/// `η = arccosh(E/m)`, equivalently `tanh⁻¹ v`.
pub fn rapidity_from_beam(beam: &BeamSpec) -> f64 {
    (beam.energy / beam.mass).acosh()
}

/// Dilation of the internal oscillation period, `e^η`.
pub fn period_dilation(eta: f64) -> f64 {
    eta.exp()
}

/// Contraction of the probe's crossing time, `e^{−η}`.
pub fn interaction_time_contraction(eta: f64) -> f64 {
    (-eta).exp()
}

/// Interaction time over oscillation period, `e^{−2η}`.
pub fn coherence_ratio(eta: f64) -> f64 {
    interaction_time_contraction(eta) / period_dilation(eta)
}
