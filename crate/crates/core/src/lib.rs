//! Wigner's little groups in the four-vector representation, their contraction
//! under Lorentz boosts, and the Lorentz-squeezed covariant harmonic oscillator.
//!
//! * [`algebra`]: generator matrices, one-parameter subgroups, little-group
//!   invariance, E(2) comparison, and the boost contraction.
//! * [`oscillator`]: rest and boosted oscillator wave functions on the `(z, t)`
//!   plane, light-cone coordinates, quadrature and finite-difference checks.
//! * [`momentum`]: momentum-energy wave functions and a direct numerical
//!   Fourier transform.
//! * [`parton`]: time-dilation and coherence-ratio scalings from beam kinematics.
//! * [`cli`]: the command-line front end.
//!
//! Natural units throughout (`c = 1`, unit oscillator strength). The Minkowski
//! interval is `x² + y² + z² − t²`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod grid;
pub mod momentum;
pub mod oscillator;
pub mod parton;

pub use error::{Error, Result};
