//! Momentum-energy wave functions and the space-time → momentum-energy transform.
//!
//! Light-cone momentum variables are `q_u = (q_0 + q_z)/√2` and
//! `q_v = (q_0 − q_z)/√2`, so `q_u` runs along the positive light cone
//! `q_0 = q_z`. With that labelling the transform of the boosted ground state is
//!
//! ```text
//! φ_η = (1/π)^{1/2} exp{−½(e^{−2η} q_u² + e^{2η} q_v²)}
//! ```
//!
//! the same squeezed Gaussian as in space-time: both distributions stretch
//! along their positive light-cone axes as `η` grows.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::FourVector;
use crate::error::{Error, Result};
use crate::grid::{FieldValues, GridSpec, GridWarning, Representation, ScalarField};
use crate::oscillator::{sample, OscillatorState};

/// Momentum-energy conjugates of `(z, t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumPoint {
    pub q_z: f64,
    pub q_0: f64,
}

impl MomentumPoint {
    pub fn new(q_z: f64, q_0: f64) -> Self {
        MomentumPoint { q_z, q_0 }
    }

    /// Coordinate along the positive light cone.
    pub fn q_u(&self) -> f64 {
        (self.q_0 + self.q_z) * FRAC_1_SQRT_2
    }

    pub fn q_v(&self) -> f64 {
        (self.q_0 - self.q_z) * FRAC_1_SQRT_2
    }

    pub fn from_lightcone(q_u: f64, q_v: f64) -> Self {
        MomentumPoint {
            q_z: (q_u - q_v) * FRAC_1_SQRT_2,
            q_0: (q_u + q_v) * FRAC_1_SQRT_2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuarkPairMomenta {
    pub p_a: FourVector,
    pub p_b: FourVector,
}

/// Total momentum `P = p_a + p_b` and relative momentum `q = √2 (p_a − p_b)`.
pub fn pair_momenta(pair: &QuarkPairMomenta) -> (FourVector, FourVector) {
    (pair.p_a + pair.p_b, (pair.p_a - pair.p_b) * SQRT_2)
}

/// Analytic momentum-energy wave function of the boosted ground state.
pub fn momentum_wavefunction(eta: f64, q: &MomentumPoint) -> f64 {
    let (qu, qv) = (q.q_u(), q.q_v());
    let exponent = (-2.0 * eta).exp() * qu * qu + (2.0 * eta).exp() * qv * qv;
    (-0.5 * exponent).exp() / PI.sqrt()
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierTransform {
    pub field: ScalarField,
    pub warnings: Vec<GridWarning>,
}

/// `φ(q_z, q_0) = (1/2π) ∬ ψ(z, t) exp{−i(q_z z − q_0 t)} dz dt` by the
/// trapezoid rule on the input grid, evaluated at every point of `momentum_grid`.
///
/// The kernel factorizes, so the double sum is done one axis at a time:
/// `O(n_z n_t n_q0 + n_z n_q0 n_qz)` rather than the naive product of grid sizes.
pub fn fourier_numeric(field: &ScalarField, momentum_grid: &GridSpec) -> Result<FourierTransform> {
    if field.representation != Representation::SpaceTime {
        return Err(Error::WrongRepresentation {
            expected: Representation::SpaceTime.as_str(),
            found: field.representation.as_str(),
        });
    }
    let FieldValues::Real(psi) = &field.values else {
        return Err(Error::WrongRepresentation {
            expected: "real space-time",
            found: "complex",
        });
    };
    let g = &field.grid;
    let (wz, wt) = (g.z_weights(), g.t_weights());
    let (zs, ts) = (g.z_values(), g.t_values());
    let qzs = momentum_grid.z_values();
    let q0s = momentum_grid.t_values();

    // inner sum over t: rows[i][k] = Σ_j w_j ψ_ij e^{+i q0_k t_j}
    let time_kernel: Vec<Vec<Complex64>> = q0s
        .iter()
        .map(|&q0| {
            ts.iter()
                .zip(&wt)
                .map(|(&t, &w)| Complex64::cis(q0 * t) * w)
                .collect()
        })
        .collect();
    let rows: Vec<Vec<Complex64>> = psi
        .par_chunks(g.n_t)
        .map(|row| {
            time_kernel
                .iter()
                .map(|kernel| kernel.iter().zip(row).map(|(k, &p)| k * p).sum())
                .collect()
        })
        .collect();

    // outer sum over z: φ[m][k] = (1/2π) Σ_i w_i e^{−i qz_m z_i} rows[i][k]
    let prefactor = 1.0 / (2.0 * PI);
    let values: Vec<Complex64> = qzs
        .par_iter()
        .flat_map_iter(|&qz| {
            let kernel: Vec<Complex64> = zs
                .iter()
                .zip(&wz)
                .map(|(&z, &w)| Complex64::cis(-qz * z) * (w * prefactor))
                .collect();
            (0..q0s.len())
                .map(|k| {
                    kernel
                        .iter()
                        .zip(&rows)
                        .map(|(c, row)| c * row[k])
                        .sum::<Complex64>()
                })
                .collect::<Vec<_>>()
        })
        .collect();

    let transformed = ScalarField::new(
        *momentum_grid,
        FieldValues::Complex(values),
        field.state,
        Representation::MomentumEnergy,
    )?;
    Ok(FourierTransform {
        field: transformed,
        warnings: g.coverage_warnings(field.state.eta),
    })
}

/// Momentum grid used by [`fourier_check`] by default: same half-width as the
/// space-time quadrature grid, at least 256 samples per axis.
pub fn momentum_grid_default(eta: f64) -> GridSpec {
    let spread = eta.abs().exp();
    let needed = (20.0 * spread * spread).ceil() as usize;
    GridSpec::symmetric(6.0 * spread, 256.max(needed + needed % 2)).expect("valid default grid")
}

/// Numerical transform of the boosted ground state compared with the analytic
/// momentum wave function.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCheck {
    pub eta: f64,
    /// `max | |φ_numeric| − φ_analytic |` over the momentum grid.
    pub max_abs_error: f64,
    /// `|∬|φ|² dq − ∬|ψ|² dz dt|`.
    pub parseval_error: f64,
    pub space_norm: f64,
    pub momentum_norm: f64,
    /// Largest `|Im φ|`; the ground-state transform is real.
    pub max_imaginary: f64,
    /// Smallest `Re φ`; the ground-state transform is positive.
    pub min_real: f64,
    pub warnings: Vec<GridWarning>,
}

pub fn fourier_check(
    eta: f64,
    space_grid: &GridSpec,
    momentum_grid: &GridSpec,
) -> Result<FourierCheck> {
    let state = OscillatorState::ground(eta)?;
    let psi = sample(&state, space_grid);
    let FourierTransform {
        field,
        mut warnings,
    } = fourier_numeric(&psi, momentum_grid)?;
    for w in momentum_grid.coverage_warnings(eta) {
        if !warnings.contains(&w) {
            warnings.push(w);
        }
    }
    let FieldValues::Complex(phi) = &field.values else {
        unreachable!("transform output is complex")
    };

    let mut max_abs_error = 0.0f64;
    let mut max_imaginary = 0.0f64;
    let mut min_real = f64::INFINITY;
    for (k, value) in phi.iter().enumerate() {
        let q = MomentumPoint::new(
            momentum_grid.z(k / momentum_grid.n_t),
            momentum_grid.t(k % momentum_grid.n_t),
        );
        max_abs_error = max_abs_error.max((value.norm() - momentum_wavefunction(eta, &q)).abs());
        max_imaginary = max_imaginary.max(value.im.abs());
        min_real = min_real.min(value.re);
    }
    let space_norm = psi.norm_squared();
    let momentum_norm = field.norm_squared();
    Ok(FourierCheck {
        eta,
        max_abs_error,
        parseval_error: (momentum_norm - space_norm).abs(),
        space_norm,
        momentum_norm,
        max_imaginary,
        min_real,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn pair_momentum_examples() {
        let p = FourVector::new(0.3, 0.1, -2.0, 4.0);
        let (total, rel) = pair_momenta(&QuarkPairMomenta { p_a: p, p_b: p });
        assert_eq!(total, p * 2.0);
        assert_eq!(rel, FourVector::ZERO);

        let pair = QuarkPairMomenta {
            p_a: FourVector::new(0.0, 0.0, 1.0, 1.0),
            p_b: FourVector::new(0.0, 0.0, 0.0, 1.0),
        };
        let (total, rel) = pair_momenta(&pair);
        assert_eq!(total, FourVector::new(0.0, 0.0, 1.0, 2.0));
        assert_abs_diff_eq!(rel.z, SQRT_2, epsilon = 1e-15);
        assert_eq!((rel.x, rel.y, rel.t), (0.0, 0.0, 0.0));
    }

    #[test]
    fn lightcone_momentum_round_trip() {
        let q = MomentumPoint::new(0.7, -1.9);
        let back = MomentumPoint::from_lightcone(q.q_u(), q.q_v());
        assert_abs_diff_eq!(back.q_z, q.q_z, epsilon = 1e-14);
        assert_abs_diff_eq!(back.q_0, q.q_0, epsilon = 1e-14);
        // positive light cone has q_v = 0
        assert_eq!(MomentumPoint::new(2.0, 2.0).q_v(), 0.0);
    }

    #[test]
    fn analytic_momentum_function() {
        let origin = MomentumPoint::new(0.0, 0.0);
        assert_abs_diff_eq!(
            momentum_wavefunction(0.0, &origin),
            0.5641895835477563,
            epsilon = 1e-15
        );
        // isotropic at rest
        let a = momentum_wavefunction(0.0, &MomentumPoint::new(1.2, 0.0));
        let b = momentum_wavefunction(0.0, &MomentumPoint::new(0.0, 1.2));
        assert_abs_diff_eq!(a, b, epsilon = 1e-15);
        // elongated along q_u for η > 0
        let along_u = momentum_wavefunction(1.0, &MomentumPoint::from_lightcone(1.5, 0.0));
        let along_v = momentum_wavefunction(1.0, &MomentumPoint::from_lightcone(0.0, 1.5));
        assert!(along_u > along_v);
    }

    #[test]
    fn same_squeeze_as_space_time() {
        use crate::oscillator::{boosted_wavefunction, lightcone};
        let s = OscillatorState::ground(0.8).unwrap();
        for &(a, b) in &[(0.4, -1.1), (2.0, 0.3), (-0.9, -0.9)] {
            let lc = lightcone(a, b);
            let q = MomentumPoint::from_lightcone(lc.u, lc.v);
            assert_abs_diff_eq!(
                momentum_wavefunction(0.8, &q),
                boosted_wavefunction(&s, a, b),
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn rejects_momentum_input() {
        let s = OscillatorState::ground(0.0).unwrap();
        let g = GridSpec::symmetric(6.0, 32).unwrap();
        let once = fourier_numeric(&sample(&s, &g), &g).unwrap();
        assert!(matches!(
            fourier_numeric(&once.field, &g),
            Err(Error::WrongRepresentation { .. })
        ));
    }

    #[test]
    fn ground_state_transform_matches_analytic() {
        for eta in [0.0, 0.5, 1.0] {
            let check = fourier_check(
                eta,
                &GridSpec::quadrature_default(eta),
                &momentum_grid_default(eta),
            )
            .unwrap();
            assert!(check.warnings.is_empty());
            assert!(
                check.max_abs_error < 1e-6,
                "η={eta}: {}",
                check.max_abs_error
            );
            assert!(check.parseval_error < 1e-5);
            assert!(check.max_imaginary < 1e-12);
            assert!(check.min_real > -1e-12);
        }
    }

    #[test]
    fn doubling_resolution_shrinks_error() {
        let eta: f64 = 0.5;
        let half = 6.0 * eta.exp();
        let q = GridSpec::symmetric(3.0, 33).unwrap();
        let coarse = fourier_check(eta, &GridSpec::symmetric(half, 24).unwrap(), &q).unwrap();
        let fine = fourier_check(eta, &GridSpec::symmetric(half, 48).unwrap(), &q).unwrap();
        assert!(
            fine.max_abs_error <= coarse.max_abs_error / 4.0 || fine.max_abs_error < 1e-8,
            "{} -> {}",
            coarse.max_abs_error,
            fine.max_abs_error
        );
    }
}
