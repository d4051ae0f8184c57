//! Complex scalars and the global comparison tolerance.

use num_complex::Complex64;

/// Ground-field element. All category data and invariants are complex doubles.
pub type Scalar = Complex64;

/// Relative tolerance for scalar comparisons.
///
/// Two scalars are considered equal when `|a - b| <= eps * max(1, |a|, |b|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(eps: f64) -> Self {
        assert!(eps > 0.0, "tolerance must be positive");
        Tolerance { eps }
    }

    pub fn approx_eq(&self, a: Scalar, b: Scalar) -> bool {
        let scale = 1f64.max(a.norm()).max(b.norm());
        (a - b).norm() <= self.eps * scale
    }

    pub fn is_zero(&self, a: Scalar) -> bool {
        self.approx_eq(a, Scalar::new(0.0, 0.0))
    }
}

pub fn scalar(re: f64, im: f64) -> Scalar {
    Scalar::new(re, im)
}

pub fn real(re: f64) -> Scalar {
    Scalar::new(re, 0.0)
}

pub const ONE: Scalar = Scalar::new(1.0, 0.0);
pub const ZERO: Scalar = Scalar::new(0.0, 0.0);
