use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{GaussianRational, Rational};

/// Exact field coefficients for polynomials and matrices.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on division by zero, like the underlying big-number types.
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    fn inv(&self) -> Self {
        Self::one().div(self)
    }

    /// Text used by the canonical polynomial printer. `None` means the value
    /// needs parentheses when used as a multiplier.
    fn render(&self) -> String;

    /// True when rendered as a single signed number (no parentheses needed).
    fn is_simple(&self) -> bool;

    /// Sign of a simple value, used to print `+` / `-` separators.
    fn is_negative_simple(&self) -> bool;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn render(&self) -> String {
        super::format_rational(self)
    }
    fn is_simple(&self) -> bool {
        true
    }
    fn is_negative_simple(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn from_rational(q: Rational) -> Self {
        GaussianRational::real(q)
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_simple(&self) -> bool {
        Zero::is_zero(&self.im) || Zero::is_zero(&self.re)
    }
    fn is_negative_simple(&self) -> bool {
        if Zero::is_zero(&self.im) {
            self.re.is_negative()
        } else {
            Zero::is_zero(&self.re) && self.im.is_negative()
        }
    }
}
