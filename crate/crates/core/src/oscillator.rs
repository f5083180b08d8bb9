//! Covariant harmonic-oscillator wave functions on the longitudinal `(z, t)` plane.
//!
//! The transverse coordinates are spectators under a boost along z and are
//! dropped; their only trace is [`degeneracy`]. The time-like factor is frozen
//! to the ground-state Gaussian, so a state is labelled by the longitudinal
//! excitation `n` and the rapidity `η` alone.
//!
//! In light-cone coordinates `u = (z + t)/√2`, `v = (z − t)/√2` the boosted
//! wave function is
//!
//! ```text
//! ψ_η^n = (1/(π n! 2^n))^{1/2} H_n((e^{−η}u + e^{η}v)/√2) exp{−½(e^{−2η}u² + e^{2η}v²)}
//! ```
//!
//! which at `η = 0` separates into `(1/π)^{1/4} e^{−t²/2} ψ_n(z)`.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use crate::algebra::FourVector;
use crate::error::{ensure_finite, Error, Result};
use crate::grid::{FieldValues, GridSpec, Quadrature, Representation, ScalarField};

pub const MAX_HERMITE_DEGREE: u32 = 30;
/// Largest spacing accepted by [`eigenvalue_check`].
pub const MAX_EIGEN_SPACING: f64 = 0.05;
/// Points with `|ψ|` below this are excluded from the eigenvalue ratio.
pub const EIGEN_PSI_FLOOR: f64 = 1e-3;
pub const MIN_EIGEN_POINTS: usize = 16;

/// Longitudinal excitation `n` of a hadron moving with rapidity `eta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscillatorState {
    pub n: u32,
    pub eta: f64,
}

impl OscillatorState {
    pub fn new(n: u32, eta: f64) -> Result<Self> {
        if n > MAX_HERMITE_DEGREE {
            return Err(Error::DegreeOutOfRange(n));
        }
        ensure_finite("eta", eta)?;
        Ok(OscillatorState { n, eta })
    }

    pub fn ground(eta: f64) -> Result<Self> {
        OscillatorState::new(0, eta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LightConePoint {
    pub u: f64,
    pub v: f64,
}

impl LightConePoint {
    pub fn to_zt(self) -> (f64, f64) {
        (
            (self.u + self.v) * FRAC_1_SQRT_2,
            (self.u - self.v) * FRAC_1_SQRT_2,
        )
    }
}

pub fn lightcone(z: f64, t: f64) -> LightConePoint {
    LightConePoint {
        u: (z + t) * FRAC_1_SQRT_2,
        v: (z - t) * FRAC_1_SQRT_2,
    }
}

/// A boost along z scales the light-cone axes: `u → e^η u`, `v → e^{−η} v`.
pub fn boost_lightcone(eta: f64, p: LightConePoint) -> LightConePoint {
    LightConePoint {
        u: eta.exp() * p.u,
        v: (-eta).exp() * p.v,
    }
}

/// Space-time positions of the two constituents.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuarkPairCoordinates {
    pub x_a: FourVector,
    pub x_b: FourVector,
}

/// Hadron position `X = (x_a + x_b)/2` and separation `x = (x_a − x_b)/(2√2)`.
pub fn relative_coordinates(pair: &QuarkPairCoordinates) -> (FourVector, FourVector) {
    let center = (pair.x_a + pair.x_b) * 0.5;
    let separation = (pair.x_a - pair.x_b) * (1.0 / (2.0 * SQRT_2));
    (center, separation)
}

/// Physicists' Hermite polynomial by upward recurrence.
pub fn hermite(n: u32, x: f64) -> Result<f64> {
    if n > MAX_HERMITE_DEGREE {
        return Err(Error::DegreeOutOfRange(n));
    }
    Ok(hermite_unchecked(n, x))
}

fn hermite_unchecked(n: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(1/(π n! 2^n))^{1/2}`.
pub fn normalization_constant(n: u32) -> f64 {
    let factorial: f64 = (1..=n).map(f64::from).product();
    (1.0 / (PI * factorial * 2f64.powi(n as i32))).sqrt()
}

pub fn boosted_wavefunction(state: &OscillatorState, z: f64, t: f64) -> f64 {
    let LightConePoint { u, v } = lightcone(z, t);
    let (shrink, stretch) = ((-state.eta).exp(), state.eta.exp());
    let argument = (shrink * u + stretch * v) * FRAC_1_SQRT_2;
    let gaussian = (-0.5 * ((shrink * u).powi(2) + (stretch * v).powi(2))).exp();
    normalization_constant(state.n) * hermite_unchecked(state.n, argument) * gaussian
}

/// Wave function of the hadron at rest.
pub fn rest_wavefunction(n: u32, z: f64, t: f64) -> Result<f64> {
    Ok(boosted_wavefunction(&OscillatorState::new(n, 0.0)?, z, t))
}

/// Samples `ψ_η^n` on `grid`.
pub fn sample(state: &OscillatorState, grid: &GridSpec) -> ScalarField {
    let values = grid.sample(|z, t| boosted_wavefunction(state, z, t));
    ScalarField::new(
        *grid,
        FieldValues::Real(values),
        *state,
        Representation::SpaceTime,
    )
    .expect("sample count matches grid")
}

/// `∬ |ψ|² dz dt` by the trapezoid rule, with coverage warnings.
pub fn normalization(state: &OscillatorState, grid: &GridSpec) -> Quadrature {
    Quadrature {
        value: sample(state, grid).norm_squared(),
        warnings: grid.coverage_warnings(state.eta),
    }
}

/// `∬ ψ_a ψ_b dz dt`.
pub fn overlap(a: &OscillatorState, b: &OscillatorState, grid: &GridSpec) -> Quadrature {
    let value =
        grid.integrate(|z, t| boosted_wavefunction(a, z, t) * boosted_wavefunction(b, z, t));
    let mut warnings = grid.coverage_warnings(a.eta);
    for w in grid.coverage_warnings(b.eta) {
        if !warnings.contains(&w) {
            warnings.push(w);
        }
    }
    Quadrature { value, warnings }
}

/// Estimates `λ` in `½{(z² − t²) − (∂²_z − ∂²_t)} ψ = λ ψ` for the rest state `n`.
///
/// Second derivatives use the three-point central stencil on interior points;
/// the estimate is the median of the pointwise ratio over points with
/// `|ψ| > EIGEN_PSI_FLOOR`. With the spacelike-positive signature the frozen
/// time factor contributes `−½`, so `λ = n`.
pub fn eigenvalue_check(n: u32, grid: &GridSpec) -> Result<f64> {
    let state = OscillatorState::new(n, 0.0)?;
    let (dz, dt) = (grid.dz(), grid.dt());
    let spacing = dz.max(dt);
    if spacing > MAX_EIGEN_SPACING {
        return Err(Error::SpacingTooCoarse {
            spacing,
            max: MAX_EIGEN_SPACING,
        });
    }
    let psi = sample(&state, grid);
    let FieldValues::Real(values) = &psi.values else {
        unreachable!("space-time samples are real")
    };
    let at = |i: usize, j: usize| values[grid.index(i, j)];

    let mut ratios = Vec::new();
    for i in 1..grid.n_z - 1 {
        let z = grid.z(i);
        for j in 1..grid.n_t - 1 {
            let center = at(i, j);
            if center.abs() <= EIGEN_PSI_FLOOR {
                continue;
            }
            let t = grid.t(j);
            let d2z = (at(i + 1, j) - 2.0 * center + at(i - 1, j)) / (dz * dz);
            let d2t = (at(i, j + 1) - 2.0 * center + at(i, j - 1)) / (dt * dt);
            let applied = 0.5 * ((z * z - t * t) * center - (d2z - d2t));
            ratios.push(applied / center);
        }
    }
    if ratios.len() < MIN_EIGEN_POINTS {
        return Err(Error::DegenerateRatio {
            valid: ratios.len(),
            required: MIN_EIGEN_POINTS,
        });
    }
    ratios.sort_by(f64::total_cmp);
    let mid = ratios.len() / 2;
    Ok(if ratios.len() % 2 == 0 {
        0.5 * (ratios[mid - 1] + ratios[mid])
    } else {
        ratios[mid]
    })
}

/// Variance of z under the boosted ground-state density, `cosh(2η)/2`.
pub fn marginal_variance(eta: f64) -> f64 {
    0.5 * (2.0 * eta).cosh()
}

/// Coefficients of `u²` and `v²` in the exponent of `|ψ_η|`, `(e^{−2η}, e^{2η})`.
pub fn quadratic_form_coefficients(eta: f64) -> (f64, f64) {
    ((-2.0 * eta).exp(), (2.0 * eta).exp())
}

/// Semi-axes of the `|ψ_η| = e^{−1/2}|ψ_η(0)|` ellipse along `(u, v)`: `(e^η, e^{−η})`.
pub fn squeeze_semi_axes(eta: f64) -> (f64, f64) {
    (eta.exp(), (-eta).exp())
}

/// Number of three-dimensional oscillator states `(n_x, n_y, n_z)` with total
/// excitation `level`.
pub fn degeneracy(level: u64) -> u64 {
    (level + 1) * (level + 2) / 2
}
