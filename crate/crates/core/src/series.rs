//! Truncated formal power series in one indeterminate.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `t^0 ..= t^N`; everything above is unknown, not zero. Binary operations
//! return the smaller of the two operand orders and never invent precision.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Zero-pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The indeterminate `t` itself.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![T::zero(), T::one()], order)
    }

    /// `1 + t + ... + t^m`.
    pub fn geometric_poly(m: usize, order: usize) -> Self {
        Self::new(vec![T::one(); m + 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^i`, `None` above the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    pub fn constant_term(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiply by `t^shift`, dropping what falls past the order.
    pub fn shift(&self, shift: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![T::zero(); shift.min(order + 1)];
        coeffs.extend(
            self.coeffs
                .iter()
                .take((order + 1).saturating_sub(shift))
                .cloned(),
        );
        Self::new(coeffs, order)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// Reciprocal by forward substitution. The constant term must be a
    /// unit of `T`; for integer rings that means `±1`, and the result then
    /// stays integral.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitConstantTerm(format!("{c0:?}")))?;
        let order = self.order();
        let mut out: Vec<T> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for k in 1..=order {
            let mut acc = T::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = acc + a.clone() * out[k - i].clone();
                }
            }
            out.push(-acc * inv0.clone());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Integer power; negative exponents go through [`inverse`](Self::inverse).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Termwise derivative; the order drops by one (order 0 stays 0 with a
    /// zero coefficient).
    pub fn derivative(&self) -> Self {
        let order = self.order();
        if order == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            coeffs: (1..=order)
                .map(|i| self.coeffs[i].clone() * T::from_i64(i as i64))
                .collect(),
        }
    }

    /// `outer(inner(t))` by Horner's rule over the series ring.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        // Coefficient j of the composite depends only on outer[0..=j].
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Convert coefficients into another ring.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries::neg(self)
    }
}

/// The series `y(x)` with `y(0) = 0` and `y = x * p_m(y)^b`, by fixed-point
/// iteration from `y = 0`. Each pass fixes at least one more coefficient,
/// so `order + 1` passes always suffice.
pub fn solve_carlitz_y<T: Scalar>(m: usize, b: i64, order: usize) -> TruncatedSeries<T> {
    let p = TruncatedSeries::<T>::geometric_poly(m, order);
    let mut y = TruncatedSeries::zero(order);
    for _ in 0..=order {
        let next = p
            .compose(&y)
            .and_then(|py| py.pow(b))
            .expect("p_m(y) has unit constant term")
            .shift(1);
        if next == y {
            break;
        }
        y = next;
    }
    y
}

impl<T: Scalar> TruncatedSeries<T> {
    /// `true` if this is exactly `1` up to the order.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntSeries, Series};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn rats(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn from_poly_pads_and_truncates() {
        assert_eq!(
            ints(&IntSeries::from_poly(&[1, 1, 1], 5)),
            [1, 1, 1, 0, 0, 0]
        );
        assert_eq!(ints(&IntSeries::from_poly(&[1], 3)), [1, 0, 0, 0]);
        assert_eq!(ints(&IntSeries::from_poly(&[1, 1, 1, 1], 2)), [1, 1, 1]);
    }

    #[test]
    fn mul_examples() {
        let p = IntSeries::from_poly(&[1, 1, 1], 4);
        assert_eq!(ints(&p.mul(&p)), [1, 2, 3, 2, 1]);
        assert_eq!(p.mul(&IntSeries::one(4)), p);
        let a = IntSeries::from_poly(&[1, 1], 2);
        let b = IntSeries::from_poly(&[1, -1], 2);
        assert_eq!(ints(&(&a * &b)), [1, 0, -1]);
    }

    #[test]
    fn mul_takes_min_order() {
        let a = IntSeries::from_poly(&[1, 1], 7);
        let b = IntSeries::from_poly(&[1, 1], 3);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn inverse_examples() {
        let p3 = Series::geometric_poly(3, 9);
        assert_eq!(
            rats(&p3.inverse().unwrap()),
            [1, -1, 0, 0, 1, -1, 0, 0, 1, -1]
        );
        assert!(Series::one(4).inverse().unwrap().is_one());
        let p1 = IntSeries::from_poly(&[1, 1], 4);
        assert_eq!(ints(&p1.inverse().unwrap()), [1, -1, 1, -1, 1]);
    }

    #[test]
    fn inverse_errors() {
        let s = IntSeries::from_poly(&[0, 1], 3);
        assert_eq!(s.inverse(), Err(Error::ZeroConstantTerm));
        let s = IntSeries::from_poly(&[2, 1], 3);
        assert!(matches!(s.inverse(), Err(Error::NonUnitConstantTerm(_))));
        // Over the rationals 2 is a unit.
        let s = Series::from_poly(&[2, 1], 2).inverse().unwrap();
        assert_eq!(s.coeffs()[2], BigRational::new(1.into(), 8.into()));
    }

    #[test]
    fn pow_examples() {
        let p3 = IntSeries::geometric_poly(3, 9);
        assert_eq!(
            ints(&p3.pow(3).unwrap()),
            [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]
        );
        assert_eq!(
            ints(&p3.pow(-2).unwrap()),
            [1, -2, 1, 0, 2, -4, 2, 0, 3, -6]
        );
        assert!(p3.pow(0).unwrap().is_one());
        let z = IntSeries::from_poly(&[0, 1], 3);
        assert_eq!(z.pow(-1), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            ints(&IntSeries::from_poly(&[1, 1, 1], 2).derivative()),
            [1, 2]
        );
        assert!(IntSeries::from_poly(&[5], 3).derivative().is_zero());
        assert_eq!(
            ints(&IntSeries::geometric_poly(3, 3).derivative()),
            [1, 2, 3]
        );
        assert_eq!(IntSeries::from_poly(&[5], 0).derivative().order(), 0);
    }

    #[test]
    fn compose_examples() {
        let outer = IntSeries::from_poly(&[1, 1, 1], 4);
        let inner = IntSeries::from_poly(&[0, 0, 1], 4);
        assert_eq!(ints(&outer.compose(&inner).unwrap()), [1, 0, 1, 0, 1]);
        let c = outer.compose(&IntSeries::zero(4)).unwrap();
        assert_eq!(ints(&c), [1, 0, 0, 0, 0]);
        let outer = IntSeries::from_poly(&[1, 1], 2);
        let inner = IntSeries::from_poly(&[0, 1, 1], 2);
        assert_eq!(ints(&outer.compose(&inner).unwrap()), [1, 1, 1]);
        let bad = IntSeries::from_poly(&[1, 1], 2);
        assert_eq!(outer.compose(&bad), Err(Error::NonzeroInnerConstant));
    }

    #[test]
    fn shift_drops_overflow() {
        let s = IntSeries::from_poly(&[1, 2, 3], 2);
        assert_eq!(ints(&s.shift(1)), [0, 1, 2]);
        assert_eq!(ints(&s.shift(5)), [0, 0, 0]);
    }

    #[test]
    fn carlitz_y_examples() {
        let y: IntSeries = solve_carlitz_y(2, 0, 6);
        assert_eq!(ints(&y), [0, 1, 0, 0, 0, 0, 0]);

        let y: IntSeries = solve_carlitz_y(2, 1, 3);
        assert_eq!(ints(&y), [0, 1, 1, 2]);
    }

    #[test]
    fn carlitz_y_residual_vanishes() {
        for m in 1..=4usize {
            for b in -2..=2i64 {
                let order = 12;
                let y: Series = solve_carlitz_y(m, b, order);
                let rhs = Series::geometric_poly(m, order)
                    .compose(&y)
                    .unwrap()
                    .pow(b)
                    .unwrap()
                    .shift(1);
                assert!(y.sub(&rhs).is_zero(), "m={m} b={b}");
            }
        }
    }

    #[test]
    fn float_series_share_the_kernel() {
        let s = TruncatedSeries::<f64>::from_poly(&[1, 1], 3)
            .inverse()
            .unwrap();
        assert_eq!(s.coeffs(), &[1.0, -1.0, 1.0, -1.0]);
        let _: TruncatedSeries<BigInt> = TruncatedSeries::variable(3);
    }
}
