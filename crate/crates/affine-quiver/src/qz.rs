//! Exact arithmetic in Q/Z.
//!
//! Characters of finite abelian groups take values on the unit circle.
//! Identifying `t in Q/Z` with `e^{2 pi i t}` lets kernels, stabilizers and
//! equality of characters be decided exactly; complex floats appear only at
//! the final inner-product step of the brute-force path.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::complex::Complex64;
use num::rational::Ratio;
use num::{ToPrimitive, Zero};

/// An element of Q/Z stored as a reduced fraction in `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Qz(Ratio<i64>);

impl Qz {
    pub const ZERO: Qz = Qz(Ratio::new_raw(0, 1));

    /// Reduces `numer/denom` modulo 1. Panics on `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Qz {
        assert!(denom != 0, "zero denominator");
        let r = Ratio::new(numer, denom);
        Qz(r - r.floor())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Additive order in Q/Z, i.e. the reduced denominator.
    pub fn order(&self) -> i64 {
        self.denom()
    }

    /// Integer multiple `k * self` in Q/Z.
    pub fn scale(&self, k: i64) -> Qz {
        let r = self.0 * Ratio::from_integer(k);
        Qz(r - r.floor())
    }

    /// The point `e^{2 pi i t}` on the unit circle.
    pub fn to_complex(&self) -> Complex64 {
        let t = self.0.to_f64().expect("finite rational");
        let angle = 2.0 * std::f64::consts::PI * t;
        Complex64::new(angle.cos(), angle.sin())
    }
}

impl Add for Qz {
    type Output = Qz;
    fn add(self, rhs: Qz) -> Qz {
        let r = self.0 + rhs.0;
        Qz(r - r.floor())
    }
}

impl Sub for Qz {
    type Output = Qz;
    fn sub(self, rhs: Qz) -> Qz {
        let r = self.0 - rhs.0;
        Qz(r - r.floor())
    }
}

impl Neg for Qz {
    type Output = Qz;
    fn neg(self) -> Qz {
        Qz::ZERO - self
    }
}

impl fmt::Display for Qz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Qz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
