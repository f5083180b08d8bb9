//! Real space-time four-vectors in natural units, components ordered (x, y, z, t).

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Vector4;

/// A four-vector `(x, y, z, t)` with `c = 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FourVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl FourVector {
    pub const ZERO: FourVector = FourVector::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        FourVector { x, y, z, t }
    }

    /// Four-momentum of a particle of mass `m` at rest.
    pub const fn at_rest(m: f64) -> Self {
        FourVector::new(0.0, 0.0, 0.0, m)
    }

    /// Lightlike four-momentum of energy `omega` travelling along +z.
    pub const fn lightlike_z(omega: f64) -> Self {
        FourVector::new(0.0, 0.0, omega, omega)
    }

    /// Minkowski interval `x² + y² + z² − t²` (spacelike-positive signature).
    pub fn interval(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z - self.t * self.t
    }

    pub fn max_abs(&self) -> f64 {
        self.x
            .abs()
            .max(self.y.abs())
            .max(self.z.abs())
            .max(self.t.abs())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite() && self.t.is_finite()
    }

    pub fn to_vector(self) -> Vector4<f64> {
        Vector4::new(self.x, self.y, self.z, self.t)
    }

    pub fn from_vector(v: &Vector4<f64>) -> Self {
        FourVector::new(v[0], v[1], v[2], v[3])
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector::new(
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
            self.t + rhs.t,
        )
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector::new(
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
            self.t - rhs.t,
        )
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        FourVector::new(self.x * s, self.y * s, self.z * s, self.t * s)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        self * -1.0
    }
}
