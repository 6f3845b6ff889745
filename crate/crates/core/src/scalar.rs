//! Coefficient rings for series and polynomials.
//!
//! Everything in this crate that does arithmetic on coefficients is generic
//! over [`Scalar`]. The exact rings (`BigInt`, `BigRational`, and the
//! fixed-width `Ratio<i64>`) are what the identity checks run on; `f64` and
//! `f32` are accepted so the same kernels can be reused for numeric work.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

/// A commutative ring with unity, plus just enough structure to invert
/// units and embed small integers.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn unit_inverse(&self) -> Option<Self> {
        match *self {
            1 | -1 => Some(*self),
            _ => None,
        }
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn unit_inverse(&self) -> Option<Self> {
                if *self == 0.0 {
                    None
                } else {
                    Some(1.0 / *self)
                }
            }
        }
    )*};
}

float_scalar!(f32, f64);

/// `BigRational` from an `i64` numerator and denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Lift a big integer into the rationals.
pub fn int_to_rat(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Integer value of a rational with unit denominator.
pub fn rat_to_int(v: &BigRational) -> Option<BigInt> {
    if v.is_integer() {
        Some(v.to_integer())
    } else {
        None
    }
}
