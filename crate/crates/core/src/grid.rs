//! Rectangular sampling grids, trapezoidal quadrature, and sampled fields.
//!
//! A [`GridSpec`] describes a uniform grid on a plane whose first axis is `z`
//! (or `q_z`) and second axis is `t` (or `q_0`). Samples are stored z-major:
//! index `i_z * n_t + i_t`.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oscillator::OscillatorState;

pub const MIN_SAMPLES: usize = 16;
/// The grid must extend this many `e^{|η|}` units from the origin in every direction.
pub const TAIL_GUARD_WIDTHS: f64 = 6.0;
/// Smallest acceptable aliasing exponent, see [`GridSpec::aliasing_exponent`].
pub const MIN_ALIASING_EXPONENT: f64 = 36.0;
pub const DEFAULT_RESOLUTION: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub z_min: f64,
    pub z_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub n_z: usize,
    pub n_t: usize,
}

impl GridSpec {
    pub fn new(
        z_min: f64,
        z_max: f64,
        t_min: f64,
        t_max: f64,
        n_z: usize,
        n_t: usize,
    ) -> Result<Self> {
        let bounds = [z_min, z_max, t_min, t_max];
        if bounds.iter().any(|b| !b.is_finite()) {
            return Err(Error::InvalidGrid(format!("non-finite bounds {bounds:?}")));
        }
        if z_min >= z_max || t_min >= t_max {
            return Err(Error::InvalidGrid(format!(
                "bounds must be increasing, got z {z_min}..{z_max}, t {t_min}..{t_max}"
            )));
        }
        if n_z < MIN_SAMPLES || n_t < MIN_SAMPLES {
            return Err(Error::InvalidGrid(format!(
                "need at least {MIN_SAMPLES} samples per axis, got {n_z}x{n_t}"
            )));
        }
        Ok(GridSpec {
            z_min,
            z_max,
            t_min,
            t_max,
            n_z,
            n_t,
        })
    }

    /// Square grid `[−half, half]²` with `n` samples per axis.
    pub fn symmetric(half_width: f64, n: usize) -> Result<Self> {
        GridSpec::new(-half_width, half_width, -half_width, half_width, n, n)
    }

    /// Default quadrature grid for a state boosted to rapidity `eta`: half-width
    /// `6 e^{|η|}`, at least 512 samples per axis, more when the squeezed
    /// direction would otherwise alias.
    pub fn quadrature_default(eta: f64) -> Self {
        let spread = eta.abs().exp();
        let needed = (20.0 * spread * spread).ceil() as usize;
        let n = DEFAULT_RESOLUTION.max(needed + needed % 2);
        GridSpec::symmetric(TAIL_GUARD_WIDTHS * spread, n).expect("valid default grid")
    }

    pub fn len(&self) -> usize {
        self.n_z * self.n_t
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dz(&self) -> f64 {
        (self.z_max - self.z_min) / (self.n_z - 1) as f64
    }

    pub fn dt(&self) -> f64 {
        (self.t_max - self.t_min) / (self.n_t - 1) as f64
    }

    pub fn z(&self, i: usize) -> f64 {
        self.z_min + (self.z_max - self.z_min) * i as f64 / (self.n_z - 1) as f64
    }

    pub fn t(&self, j: usize) -> f64 {
        self.t_min + (self.t_max - self.t_min) * j as f64 / (self.n_t - 1) as f64
    }

    pub fn z_values(&self) -> Vec<f64> {
        (0..self.n_z).map(|i| self.z(i)).collect()
    }

    pub fn t_values(&self) -> Vec<f64> {
        (0..self.n_t).map(|j| self.t(j)).collect()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.n_t + j
    }

    /// Trapezoid weights along z, including the spacing.
    pub fn z_weights(&self) -> Vec<f64> {
        trapezoid_weights(self.n_z, self.dz())
    }

    pub fn t_weights(&self) -> Vec<f64> {
        trapezoid_weights(self.n_t, self.dt())
    }

    /// Evaluates `f(z, t)` at every grid point, z-major, rows in parallel.
    pub fn sample<F>(&self, f: F) -> Vec<f64>
    where
        F: Fn(f64, f64) -> f64 + Sync,
    {
        let ts = self.t_values();
        (0..self.n_z)
            .into_par_iter()
            .flat_map_iter(|i| {
                let z = self.z(i);
                ts.iter().map(move |&t| (z, t)).collect::<Vec<_>>()
            })
            .map(|(z, t)| f(z, t))
            .collect()
    }

    /// Trapezoidal integral of z-major samples. Summation order is fixed.
    pub fn integrate_samples(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.len(), "sample count does not match grid");
        let wz = self.z_weights();
        let wt = self.t_weights();
        values
            .chunks(self.n_t)
            .zip(&wz)
            .map(|(row, w)| w * row.iter().zip(&wt).map(|(v, u)| v * u).sum::<f64>())
            .sum()
    }

    pub fn integrate<F>(&self, f: F) -> f64
    where
        F: Fn(f64, f64) -> f64 + Sync,
    {
        self.integrate_samples(&self.sample(f))
    }

    /// Distance from the origin to the nearest edge.
    pub fn inscribed_radius(&self) -> f64 {
        (-self.z_min)
            .min(self.z_max)
            .min(-self.t_min)
            .min(self.t_max)
    }

    /// Exponent `a` of the leading aliasing term `e^{−a}` of the trapezoid rule
    /// applied to `|ψ_η|²`: the reciprocal lattice vector along the squeezed
    /// light-cone direction, damped by the Gaussian's transform.
    pub fn aliasing_exponent(&self, eta: f64) -> f64 {
        let kz = 2.0 * PI / self.dz();
        let kt = 2.0 * PI / self.dt();
        0.25 * (-2.0 * eta.abs()).exp() * (kz * kz + kt * kt)
    }

    /// Warnings for a ground-state-width Gaussian squeezed by `eta`.
    pub fn coverage_warnings(&self, eta: f64) -> Vec<GridWarning> {
        let mut warnings = Vec::new();
        let required = TAIL_GUARD_WIDTHS * eta.abs().exp();
        let available = self.inscribed_radius();
        if available < required {
            warnings.push(GridWarning::TailNotCovered {
                required,
                available,
            });
        }
        let exponent = self.aliasing_exponent(eta);
        if exponent < MIN_ALIASING_EXPONENT {
            warnings.push(GridWarning::UnderResolved { exponent });
        }
        warnings
    }
}

fn trapezoid_weights(n: usize, h: f64) -> Vec<f64> {
    let mut w = vec![h; n];
    w[0] = 0.5 * h;
    w[n - 1] = 0.5 * h;
    w
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{},{}:{}:{}",
            self.z_min, self.z_max, self.n_z, self.t_min, self.t_max, self.n_t
        )
    }
}

fn parse_axis(s: &str) -> Result<(f64, f64, usize)> {
    let bad = || Error::InvalidGrid(format!("expected MIN:MAX:COUNT, got `{s}`"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo = parts[0].trim().parse::<f64>().map_err(|_| bad())?;
    let hi = parts[1].trim().parse::<f64>().map_err(|_| bad())?;
    let n = parts[2].trim().parse::<usize>().map_err(|_| bad())?;
    Ok((lo, hi, n))
}

/// `ZMIN:ZMAX:NZ[,TMIN:TMAX:NT]`; the t axis copies the z axis when omitted.
impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut axes = s.split(',');
        let z = parse_axis(axes.next().unwrap_or(""))?;
        let t = match axes.next() {
            Some(a) => parse_axis(a)?,
            None => z,
        };
        if axes.next().is_some() {
            return Err(Error::InvalidGrid(format!("too many axes in `{s}`")));
        }
        GridSpec::new(z.0, z.1, t.0, t.1, z.2, t.2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GridWarning {
    /// The window does not contain the Gaussian tail.
    TailNotCovered { required: f64, available: f64 },
    /// The spacing is too coarse for the squeezed direction.
    UnderResolved { exponent: f64 },
}

impl fmt::Display for GridWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridWarning::TailNotCovered {
                required,
                available,
            } => write!(
                f,
                "grid reaches {available} from the origin, tail guard needs {required}"
            ),
            GridWarning::UnderResolved { exponent } => write!(
                f,
                "grid spacing too coarse for the squeezed axis (aliasing ~ e^-{exponent:.1})"
            ),
        }
    }
}

/// A quadrature result with any grid warnings raised along the way.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub warnings: Vec<GridWarning>,
}

impl Quadrature {
    pub fn is_clean(&self) -> bool {
        self.warnings.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    SpaceTime,
    MomentumEnergy,
}

impl Representation {
    pub fn as_str(self) -> &'static str {
        match self {
            Representation::SpaceTime => "space-time",
            Representation::MomentumEnergy => "momentum-energy",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FieldValues {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

impl FieldValues {
    pub fn len(&self) -> usize {
        match self {
            FieldValues::Real(v) => v.len(),
            FieldValues::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Standard deviations of a density along the two light-cone axes
/// `(a + b)/√2` and `(a − b)/√2` of the grid plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LightConeSpread {
    pub sigma_u: f64,
    pub sigma_v: f64,
}

impl LightConeSpread {
    pub fn ratio(&self) -> f64 {
        self.sigma_u / self.sigma_v
    }
}

/// Wave-function samples on a grid, tagged with the state and representation.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarField {
    pub grid: GridSpec,
    pub values: FieldValues,
    pub state: OscillatorState,
    pub representation: Representation,
}

impl ScalarField {
    pub fn new(
        grid: GridSpec,
        values: FieldValues,
        state: OscillatorState,
        representation: Representation,
    ) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "{} samples for a {}x{} grid",
                values.len(),
                grid.n_z,
                grid.n_t
            )));
        }
        Ok(ScalarField {
            grid,
            values,
            state,
            representation,
        })
    }

    /// `|value|²` at every sample.
    pub fn density(&self) -> Vec<f64> {
        match &self.values {
            FieldValues::Real(v) => v.iter().map(|x| x * x).collect(),
            FieldValues::Complex(v) => v.iter().map(|z| z.norm_sqr()).collect(),
        }
    }

    /// `∬ |value|²` by the trapezoid rule.
    pub fn norm_squared(&self) -> f64 {
        self.grid.integrate_samples(&self.density())
    }

    pub fn lightcone_spread(&self) -> LightConeSpread {
        let density = self.density();
        let g = &self.grid;
        let total = g.integrate_samples(&density);
        let moment = |f: &dyn Fn(f64, f64) -> f64| -> f64 {
            let weighted: Vec<f64> = density
                .iter()
                .enumerate()
                .map(|(k, d)| d * f(g.z(k / g.n_t), g.t(k % g.n_t)))
                .collect();
            g.integrate_samples(&weighted) / total
        };
        let u = |a: f64, b: f64| (a + b) / SQRT_2;
        let v = |a: f64, b: f64| (a - b) / SQRT_2;
        let mean_u = moment(&u);
        let mean_v = moment(&v);
        let var_u = moment(&|a, b| (u(a, b) - mean_u).powi(2));
        let var_v = moment(&|a, b| (v(a, b) - mean_v).powi(2));
        LightConeSpread {
            sigma_u: var_u.sqrt(),
            sigma_v: var_v.sqrt(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::new(1.0, -1.0, -1.0, 1.0, 32, 32).is_err());
        assert!(GridSpec::new(-1.0, 1.0, -1.0, 1.0, 8, 32).is_err());
        assert!(GridSpec::new(f64::NAN, 1.0, -1.0, 1.0, 32, 32).is_err());
        assert!("1:2".parse::<GridSpec>().is_err());
        assert!("-1:1:32,-1:1:32,0:1:16".parse::<GridSpec>().is_err());
        assert!("-1:1:x".parse::<GridSpec>().is_err());
    }

    #[test]
    fn parses_one_or_two_axes() {
        let g: GridSpec = "-3:3:41".parse().unwrap();
        assert_eq!(g, GridSpec::symmetric(3.0, 41).unwrap());
        let g: GridSpec = "-4:2:17,-1:1:33".parse().unwrap();
        assert_eq!((g.z_min, g.z_max, g.n_z), (-4.0, 2.0, 17));
        assert_eq!((g.t_min, g.t_max, g.n_t), (-1.0, 1.0, 33));
        assert_eq!(g.to_string().parse::<GridSpec>().unwrap(), g);
    }

    #[test]
    fn endpoints_are_exact_and_spacing_uniform() {
        let g = GridSpec::new(-2.5, 7.0, 0.0, 1.0, 20, 16).unwrap();
        assert_eq!(g.z(0), -2.5);
        assert_eq!(g.z(19), 7.0);
        assert_eq!(g.t(15), 1.0);
        assert!((g.z(5) - g.z(4) - g.dz()).abs() < 1e-14);
    }

    #[test]
    fn trapezoid_is_exact_for_bilinear() {
        let g = GridSpec::new(0.0, 2.0, -1.0, 3.0, 17, 33).unwrap();
        // ∫0^2 ∫-1^3 (1 + z + 2zt) dt dz = 8 + 8 + 2·2·4
        let v = g.integrate(|z, t| 1.0 + z + 2.0 * z * t);
        assert!((v - 32.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn gaussian_integral_is_spectrally_accurate() {
        let g = GridSpec::symmetric(8.0, 64).unwrap();
        let v = g.integrate(|z, t| (-(z * z + t * t)).exp());
        assert!((v - PI).abs() < 1e-13);
    }

    #[test]
    fn default_grid_grows_with_rapidity() {
        assert_eq!(GridSpec::quadrature_default(0.0).n_z, 512);
        assert_eq!(GridSpec::quadrature_default(1.0).n_z, 512);
        let g = GridSpec::quadrature_default(2.0);
        assert!(g.n_z > 1000);
        for eta in [0.0, 0.5, 1.0, 1.5, 2.0, -2.0] {
            let g = GridSpec::quadrature_default(eta);
            assert!(g.coverage_warnings(eta).is_empty(), "η={eta}");
        }
    }

    #[test]
    fn warnings_flag_narrow_and_coarse_grids() {
        let narrow = GridSpec::symmetric(4.0, 256).unwrap();
        assert!(matches!(
            narrow.coverage_warnings(0.0)[..],
            [GridWarning::TailNotCovered { .. }]
        ));
        let coarse = GridSpec::symmetric(6.0 * 2f64.exp(), 512).unwrap();
        assert!(matches!(
            coarse.coverage_warnings(2.0)[..],
            [GridWarning::UnderResolved { .. }]
        ));
    }
}
