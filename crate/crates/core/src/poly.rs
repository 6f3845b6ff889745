//! Dense univariate polynomials with trimmed representation.

use std::fmt;

use num_traits::Zero;

use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// `coeffs[i]` is the coefficient of `x^i`; the last entry is nonzero
/// unless the polynomial is zero, in which case `coeffs` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^power`.
    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `x^power`.
    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `x^degree * p(1/x)` with respect to a nominal degree, which must be
    /// at least the actual degree.
    pub fn reversed(&self, degree: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= degree));
        Self::new((0..=degree).rev().map(|i| self.coeff(i)).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        TruncatedSeries::new(self.coeffs.clone(), order)
    }
}

/// Ascending powers, zero terms suppressed: `2x^2 - x^3`.
impl<T: Scalar + fmt::Display + PartialOrd> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if i == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::IntPolynomial;

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPolynomial::from_i64s(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let one_minus_x = IntPolynomial::from_i64s(&[1, -1]);
        assert_eq!(one_minus_x.pow(2), IntPolynomial::from_i64s(&[1, -2, 1]));
        let p = IntPolynomial::x().sub(&IntPolynomial::x().mul(&one_minus_x.pow(2)));
        assert_eq!(p, IntPolynomial::from_i64s(&[0, 0, 2, -1]));
        assert_eq!(p.eval(&2.into()), (8 - 8).into());
    }

    #[test]
    fn reversal() {
        let p = IntPolynomial::from_i64s(&[0, 1, 3]);
        assert_eq!(p.reversed(3), IntPolynomial::from_i64s(&[0, 3, 1]));
        assert_eq!(IntPolynomial::one().reversed(0), IntPolynomial::one());
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::from_i64s(&[0, 0, 2, -1]).to_string(),
            "2x^2 - x^3"
        );
        assert_eq!(IntPolynomial::from_i64s(&[1]).to_string(), "1");
        assert_eq!(IntPolynomial::from_i64s(&[0, -1]).to_string(), "-x");
        assert_eq!(
            IntPolynomial::from_i64s(&[-3, 0, 1]).to_string(),
            "-3 + x^2"
        );
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
