//! Column generating functions `F_k^+`, `F_k^-`, their numerator
//! polynomials `P_k^(m)`, the `f`-numbers, and the Carlitz diagonal
//! generating functions `G_m(a, b; x) = sum_k <a + bk, k>_m x^k`.
//!
//! Every constructor that produces a generating function compares it with
//! directly computed coefficients before returning.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coefficients::{binomial, coeff, coeff_any_degree};
use crate::error::{Error, Result};
use crate::scalar::{int_to_rat, rat};
use crate::series::solve_carlitz_y;
use crate::{CoeffKey, IntPolynomial, IntSeries, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnSign {
    /// `sum_{n >= 0} <n, k>_m x^n`
    Positive,
    /// `sum_{n >= 1} <-n, k>_m x^n`
    Negative,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ColumnGF {
    pub k: usize,
    pub m: i64,
    pub sign: ColumnSign,
    pub series: IntSeries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FNumberSeq {
    pub m: i64,
    pub values: Vec<BigInt>,
}

fn check_degree(m: i64) -> Result<()> {
    if m < 1 {
        Err(Error::InvalidDegree(m))
    } else {
        Ok(())
    }
}

/// `x (1 - x)^m`
fn recurrence_factor(m: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[1, -1]).pow(m as u32).shift(1)
}

/// `P_0, ..., P_{k_max}` from `P_k = P_{k-1} - x (1-x)^m P_{k-m-1}` with
/// `P_0 = 1`, `P_1 = x` and `P_k = 0` below zero.
pub fn pk_sequence(m: i64, k_max: usize) -> Result<Vec<IntPolynomial>> {
    check_degree(m)?;
    let factor = recurrence_factor(m);
    let mut seq: Vec<IntPolynomial> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let p = match k {
            0 => IntPolynomial::one(),
            1 => IntPolynomial::x(),
            _ => {
                let back = k as i64 - m - 1;
                let tail = if back >= 0 {
                    factor.mul(&seq[back as usize])
                } else {
                    IntPolynomial::zero()
                };
                seq[k - 1].sub(&tail)
            }
        };
        seq.push(p);
    }
    Ok(seq)
}

pub fn pk_by_recurrence(m: i64, k: i64) -> Result<IntPolynomial> {
    check_degree(m)?;
    if k < 0 {
        return Ok(IntPolynomial::zero());
    }
    Ok(pk_sequence(m, k as usize)?.pop().unwrap())
}

/// `P_k = sum_{i = ceil(k/m)}^{k} <i, k-i>_{m-1} x^i (1-x)^{k-i}`.
pub fn pk_by_explicit(m: i64, k: usize) -> Result<IntPolynomial> {
    check_degree(m)?;
    let k = k as i64;
    let one_minus_x = IntPolynomial::from_i64s(&[1, -1]);
    let mut sum = IntPolynomial::zero();
    for i in Integer::div_ceil(&k, &m)..=k {
        let c = coeff_any_degree(i, k - i, m - 1);
        if c.is_zero() {
            continue;
        }
        let term = one_minus_x.pow((k - i) as u32).shift(i as usize).scale(&c);
        sum = sum.add(&term);
    }
    Ok(sum)
}

/// Checks `(1 - y + x(1-x)^m y^{m+1}) * sum_k P_k y^k = 1 + (x-1) y` through
/// `y^order_y`, coefficient by coefficient in `y`, with `P_k` taken from
/// the explicit sum.
pub fn pk_gf_check(m: i64, order_y: usize) -> Result<bool> {
    check_degree(m)?;
    let factor = recurrence_factor(m);
    let pk: Vec<IntPolynomial> = (0..=order_y)
        .map(|k| pk_by_explicit(m, k))
        .collect::<Result<_>>()?;
    for k in 0..=order_y {
        let mut lhs = pk[k].clone();
        if k >= 1 {
            lhs = lhs.sub(&pk[k - 1]);
        }
        if k as i64 > m {
            lhs = lhs.add(&factor.mul(&pk[k - m as usize - 1]));
        }
        let rhs = match k {
            0 => IntPolynomial::one(),
            1 => IntPolynomial::from_i64s(&[-1, 1]),
            _ => IntPolynomial::zero(),
        };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds `F_k^+ = P_k / (1-x)^{k+1}` or
/// `F_k^- = (-1)^k x (x^k P_k(1/x)) / (1-x)^{k+1}` through `x^order`
/// and compares each coefficient with the direct value. The negative
/// column starts at `x^1`: its `x^n` coefficient is `<-n,k>_m` for `n >= 1`.
pub fn column_gf(k: usize, m: i64, sign: ColumnSign, order: usize) -> Result<ColumnGF> {
    check_degree(m)?;
    let pk = pk_by_recurrence(m, k as i64)?;
    let denom = IntSeries::from_poly(&[1, -1], order)
        .pow(-(k as i64 + 1))
        .expect("1 - x is invertible");
    let series = match sign {
        ColumnSign::Positive => denom.mul(&pk.to_series(order)),
        ColumnSign::Negative => {
            let rev = pk.reversed(k).shift(1);
            let s = denom.mul(&rev.to_series(order));
            if k % 2 == 1 {
                s.neg()
            } else {
                s
            }
        }
    };
    for (n, got) in series.coeffs().iter().enumerate() {
        let n = n as i64;
        let want = match sign {
            ColumnSign::Positive => coeff(CoeffKey::new(n, k as i64, m)?),
            ColumnSign::Negative if n == 0 => BigInt::zero(),
            ColumnSign::Negative => coeff(CoeffKey::new(-n, k as i64, m)?),
        };
        if *got != want {
            return Err(Error::Mismatch(format!(
                "column k={k} m={m} {sign:?}: x^{n} has {got}, direct value {want}"
            )));
        }
    }
    Ok(ColumnGF { k, m, sign, series })
}

/// `((x+s)^{k+1} - (x-s)^{k+1}) / (2^{k+1} s)` with `s^2 = x(4-3x)`.
/// Only odd powers of `s` survive the difference, so the result is
/// `2^{-k} sum_{j odd} C(k+1, j) x^{k+1-j} (x(4-3x))^{(j-1)/2}`.
pub fn pk2_closed_form(k: usize) -> IntPolynomial {
    let s_squared = IntPolynomial::from_i64s(&[0, 4, -3]);
    let mut numer = IntPolynomial::zero();
    for j in (1..=k + 1).step_by(2) {
        let term = s_squared
            .pow(((j - 1) / 2) as u32)
            .shift(k + 1 - j)
            .scale(&binomial((k + 1) as i64, j as i64));
        numer = numer.add(&term);
    }
    let two_k = BigInt::one() << k;
    let coeffs = numer
        .coeffs()
        .iter()
        .map(|c| {
            assert!(
                (c % &two_k).is_zero(),
                "closed form is not integral at k={k}"
            );
            c / &two_k
        })
        .collect();
    IntPolynomial::new(coeffs)
}

pub fn pk2_closed_form_check(k_max: usize) -> bool {
    let seq = pk_sequence(2, k_max).expect("m = 2 is valid");
    (0..=k_max).all(|k| pk2_closed_form(k) == seq[k])
}

/// `f_n = 2^n P_n(1/2)` for `n < count`, checked to be integers satisfying
/// `f_n = 2 f_{n-1} - f_{n-m-1}` for `n >= 2`.
pub fn f_numbers(m: i64, count: usize) -> Result<FNumberSeq> {
    check_degree(m)?;
    if count == 0 {
        return Ok(FNumberSeq {
            m,
            values: Vec::new(),
        });
    }
    let half = rat(1, 2);
    let mut values = Vec::with_capacity(count);
    for (n, p) in pk_sequence(m, count - 1)?.iter().enumerate() {
        let scaled = p.map(int_to_rat).eval(&half) * BigRational::from_integer(BigInt::one() << n);
        if !scaled.is_integer() {
            return Err(Error::Mismatch(format!(
                "2^{n} P_{n}(1/2) = {scaled} is not an integer"
            )));
        }
        values.push(scaled.to_integer());
    }
    let seq = FNumberSeq { m, values };
    for n in 2..count {
        let want = f_recurrence_step(&seq.values, n, m);
        if seq.values[n] != want {
            return Err(Error::Mismatch(format!(
                "f_{n} breaks the recurrence for m={m}"
            )));
        }
    }
    Ok(seq)
}

fn f_recurrence_step(values: &[BigInt], n: usize, m: i64) -> BigInt {
    let back = n as i64 - m - 1;
    let tail = if back >= 0 {
        values[back as usize].clone()
    } else {
        BigInt::zero()
    };
    BigInt::from(2) * &values[n - 1] - tail
}

/// The `f`-numbers from the recurrence alone, seeded `f_0 = f_1 = 1`.
pub fn f_numbers_by_recurrence(m: i64, count: usize) -> Vec<BigInt> {
    let mut values: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let v = if n < 2 {
            BigInt::one()
        } else {
            f_recurrence_step(&values, n, m)
        };
        values.push(v);
    }
    values
}

/// `G_m(a, b; x) = p_m(y)^{a+1} / (p_m(y) - b y p_m'(y))` with
/// `y = x p_m(y)^b`, checked against `<a + bk, k>_m` for every `k <= order`.
pub fn carlitz_gf(a: i64, b: i64, m: i64, order: usize) -> Result<Series> {
    check_degree(m)?;
    let mu = m as usize;
    let y: Series = solve_carlitz_y(mu, b, order);
    let p = Series::geometric_poly(mu, order);
    let dp_coeffs: Vec<i64> = (1..=m).collect();
    let dp = Series::from_poly(&dp_coeffs, order);
    let py = p.compose(&y)?;
    let dpy = dp.compose(&y)?;
    let numer = py.pow(a + 1)?;
    let denom = py.sub(&y.mul(&dpy).scale(&BigRational::from_integer(b.into())));
    let g = numer.mul(&denom.inverse()?);
    for (k, got) in g.coeffs().iter().enumerate() {
        let k = k as i64;
        let want = int_to_rat(&coeff(CoeffKey::new(a + b * k, k, m)?));
        if *got != want {
            return Err(Error::Mismatch(format!(
                "G_{m}({a},{b}): x^{k} has {got}, direct value {want}"
            )));
        }
    }
    Ok(g)
}

/// `S^2 (1 + x)(1 - 3x) = 1` for the central trinomial series `S`.
pub fn euler_gf_check(order: usize) -> bool {
    let central: Vec<BigInt> = (0..=order as i64)
        .map(|k| coeff(CoeffKey::new(k, k, 2).unwrap()))
        .collect();
    let s = IntSeries::new(central, order);
    let factor = IntSeries::from_poly(&[1, -2, -3], order);
    s.mul(&s).mul(&factor).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn pk_recurrence_examples() {
        for m in 1..=5 {
            for k in 1..=m {
                assert_eq!(pk_by_recurrence(m, k).unwrap(), poly(&[0, 1]));
            }
            assert_eq!(pk_by_recurrence(m, 0).unwrap(), IntPolynomial::one());
            assert!(pk_by_recurrence(m, -1).unwrap().is_zero());
        }
        assert_eq!(pk_by_recurrence(2, 3).unwrap(), poly(&[0, 0, 2, -1]));
        assert_eq!(pk_by_recurrence(0, 3), Err(Error::InvalidDegree(0)));
    }

    #[test]
    fn pk_explicit_examples() {
        assert_eq!(pk_by_explicit(2, 3).unwrap(), poly(&[0, 0, 2, -1]));
        assert_eq!(pk_by_explicit(3, 0).unwrap(), IntPolynomial::one());
        // m = 1: binomial columns have P_k = x^k.
        assert_eq!(
            pk_by_explicit(1, 4).unwrap(),
            IntPolynomial::monomial(1.into(), 4)
        );
    }

    #[test]
    fn pk_gf_examples() {
        assert!(pk_gf_check(2, 12).unwrap());
        assert!(pk_gf_check(1, 12).unwrap());
        assert!(pk_gf_check(4, 0).unwrap());
    }

    #[test]
    fn column_examples() {
        let c = column_gf(0, 2, ColumnSign::Positive, 6).unwrap();
        assert_eq!(ints(c.series.coeffs()), [1; 7]);
        let c = column_gf(1, 3, ColumnSign::Positive, 5).unwrap();
        assert_eq!(ints(c.series.coeffs()), [0, 1, 2, 3, 4, 5]);
        let c = column_gf(4, 3, ColumnSign::Negative, 3).unwrap();
        assert_eq!(ints(c.series.coeffs()), [0, 1, 2, 3]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(pk2_closed_form(0), IntPolynomial::one());
        assert_eq!(pk2_closed_form(1), poly(&[0, 1]));
        assert_eq!(pk2_closed_form(3), poly(&[0, 0, 2, -1]));
        assert!(pk2_closed_form_check(12));
    }

    #[test]
    fn f_number_examples() {
        assert_eq!(
            ints(&f_numbers(2, 8).unwrap().values),
            [1, 1, 2, 3, 5, 8, 13, 21]
        );
        assert_eq!(
            ints(&f_numbers(3, 7).unwrap().values),
            [1, 1, 2, 4, 7, 13, 24]
        );
        for m in 1..=5 {
            assert_eq!(f_numbers(m, 1).unwrap().values, [BigInt::one()]);
            assert_eq!(
                f_numbers(m, 20).unwrap().values,
                f_numbers_by_recurrence(m, 20)
            );
        }
    }

    #[test]
    fn carlitz_examples() {
        let g = carlitz_gf(0, 1, 2, 5).unwrap();
        let want: Vec<BigRational> = [1, 1, 3, 7, 19, 51].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(g.coeffs(), want.as_slice());
        // b = 0 collapses to p_m(x)^a.
        let g = carlitz_gf(3, 0, 2, 8).unwrap();
        let direct = Series::geometric_poly(2, 8).pow(3).unwrap();
        assert_eq!(g, direct);
        carlitz_gf(1, -1, 2, 10).unwrap();
    }

    #[test]
    fn euler_examples() {
        assert!(euler_gf_check(0));
        assert!(euler_gf_check(5));
        assert!(euler_gf_check(50));
    }
}
