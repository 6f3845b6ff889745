//! Trinomial (`m = 2`) identities that come through the Gegenbauer
//! connection, plus the numeric checks: the integral representation,
//! the binomial theorem for negative rows, and the convergent
//! series.
//!
//! Exact statements return pairs of `BigRational`s. Analytic ones return a
//! [`NumericCheck`]; all float sums run in a fixed left-to-right order.

use std::f64::consts::PI;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::coefficients::{binomial, coeff, row};
use crate::error::{Error, Result};
use crate::quadrature::CompositeGaussLegendre;
use crate::scalar::{int_to_rat, rat};
use crate::{CoeffKey, Series};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericCheck {
    pub description: String,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl NumericCheck {
    pub fn new(
        description: impl Into<String>,
        computed: f64,
        expected: f64,
        tolerance: f64,
    ) -> Self {
        let passed = (computed - expected).abs() <= tolerance;
        NumericCheck {
            description: description.into(),
            computed,
            expected,
            tolerance,
            passed,
        }
    }

    pub fn error(&self) -> f64 {
        (self.computed - self.expected).abs()
    }
}

/// `C_j^(alpha)(x)`: the coefficient of `t^j` in `(1 - 2xt + t^2)^{-alpha}`.
pub fn gegenbauer(alpha: i64, j: usize, x: &BigRational) -> BigRational {
    let base = Series::new(
        vec![
            BigRational::one(),
            -(x.clone() * rat(2, 1)),
            BigRational::one(),
        ],
        j,
    );
    base.pow(-alpha).expect("constant term is 1").coeffs()[j].clone()
}

fn trinomial(n: i64, k: i64) -> BigInt {
    coeff(CoeffKey::new(n, k, 2).expect("m = 2"))
}

/// `(-1)^k sum_{1 <= j_1 < ... < j_k <= n+k-1} prod (1 + 2 cos(j_i pi / (n+k)))`.
pub fn dilcher_sum(n: i64, k: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain(format!("Dilcher sum needs n >= 1, got {n}")));
    }
    if k > 8 || n + k as i64 > 14 {
        return Err(Error::TooLarge(format!("Dilcher sum with n={n}, k={k}")));
    }
    let span = n + k as i64;
    let factors: Vec<f64> = (1..span)
        .map(|j| 1.0 + 2.0 * (j as f64 * PI / span as f64).cos())
        .collect();
    let sum: f64 = factors
        .iter()
        .combinations(k)
        .map(|tuple| tuple.into_iter().product::<f64>())
        .sum();
    Ok(if k % 2 == 1 { -sum } else { sum })
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, `(x)_0 = 1`.
pub fn pochhammer(x: &BigRational, n: i64) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, i| acc * (x.clone() + rat(i, 1)))
}

/// Both sides of
/// `sum_{k=0}^n (-1)^k (k+p) <-p,k>_2 / ((n-k)! (k+n+1)! C(2p+k+n, 2p-1))
///  = (3/4)^n / (2 n! (p + 1/2)_n)`.
pub fn rainville_32(p: i64, n: i64) -> Result<(BigRational, BigRational)> {
    if p < 1 {
        return Err(Error::Domain(format!("p must be positive, got {p}")));
    }
    let mut lhs = BigRational::zero();
    for k in 0..=n {
        let num = BigInt::from(k + p) * trinomial(-p, k);
        let den = factorial(n - k) * factorial(k + n + 1) * binomial(2 * p + k + n, 2 * p - 1);
        let term = BigRational::new(num, den);
        lhs = if k.is_odd() { lhs - term } else { lhs + term };
    }
    let rhs = num_traits::pow(rat(3, 4), n as usize)
        / (int_to_rat(&(BigInt::from(2) * factorial(n))) * pochhammer(&rat(2 * p + 1, 2), n));
    Ok((lhs, rhs))
}

/// Both sides of
/// `sum_{k=0}^{floor(n/2)} (p+n-2k) <-p, n-2k>_2 / (k! (p)_{n+1-k}) = (-1)^n / n!`.
pub fn rainville_36(p: i64, n: i64) -> Result<(BigRational, BigRational)> {
    if p < 1 {
        return Err(Error::Domain(format!("p must be positive, got {p}")));
    }
    let pr = rat(p, 1);
    let mut lhs = BigRational::zero();
    for k in 0..=n / 2 {
        let num = int_to_rat(&(BigInt::from(p + n - 2 * k) * trinomial(-p, n - 2 * k)));
        lhs += num / (int_to_rat(&factorial(k)) * pochhammer(&pr, n + 1 - k));
    }
    let sign = if n.is_odd() { -1 } else { 1 };
    let rhs = BigRational::new(BigInt::from(sign), factorial(n));
    Ok((lhs, rhs))
}

/// `2^n sqrt(3) pi / (3^{3n-1} ((n-1)!)^4)`.
pub fn brafman_closed_form(n: i64) -> f64 {
    let fact = factorial(n - 1).to_f64().unwrap();
    2f64.powi(n as i32) * 3f64.sqrt() * PI / (3f64.powi(3 * n as i32 - 1) * fact.powi(4))
}

/// Terms `(-1)^k (k+n) (k!)^2 / ((k+2n-1)!)^2 <-n,k>_2^3` for `k < terms`,
/// each evaluated exactly and rounded once.
fn brafman_terms(n: i64, terms: usize) -> Vec<f64> {
    let coeffs = row(-n, 2, terms.saturating_sub(1)).expect("m = 2");
    coeffs
        .iter()
        .take(terms)
        .enumerate()
        .map(|(k, c)| {
            let k = k as i64;
            // (k!)^2 / ((k+2n-1)!)^2 = 1 / ((k+1) ... (k+2n-1))^2
            let rising: BigInt =
                (k + 1..k + 2 * n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
            let num = BigInt::from(k + n) * c * c * c;
            let term = BigRational::new(num, &rising * &rising).to_f64().unwrap();
            if k.is_odd() {
                -term
            } else {
                term
            }
        })
        .collect()
}

pub fn brafman_partial(n: i64, terms: usize, tolerance: f64) -> Result<NumericCheck> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "Brafman series needs n >= 1, got {n}"
        )));
    }
    let sum: f64 = brafman_terms(n, terms).iter().sum();
    Ok(NumericCheck::new(
        format!("Brafman n={n}, {terms} terms"),
        sum,
        brafman_closed_form(n),
        tolerance,
    ))
}

/// Cesaro mean of the Brafman partial sums.
pub fn brafman_cesaro(n: i64, terms: usize, tolerance: f64) -> Result<NumericCheck> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "Brafman series needs n >= 1, got {n}"
        )));
    }
    let mut partial = 0.0;
    let mut mean_acc = 0.0;
    for t in brafman_terms(n, terms) {
        partial += t;
        mean_acc += partial;
    }
    Ok(NumericCheck::new(
        format!("Brafman n={n}, Cesaro mean of {terms} partial sums"),
        mean_acc / terms as f64,
        brafman_closed_form(n),
        tolerance,
    ))
}

/// `sum_k (n+1/2)_k / (2n)_k <-n,k>_2 t^k` against
/// `2^{n-1/2} (1+t+t^2)^{-1/2} (1 + t/2 + sqrt(1+t+t^2))^{1/2-n}`.
pub fn hgf_series(n: i64, t: f64, terms: usize, tolerance: f64) -> Result<NumericCheck> {
    if t.abs() >= 1.0 {
        return Err(Error::Domain(format!("|t| must be below 1, got {t}")));
    }
    if n < 1 {
        return Err(Error::Domain(format!("n must be positive, got {n}")));
    }
    let coeffs = row(-n, 2, terms.saturating_sub(1))?;
    let nf = n as f64;
    let mut ratio = 1.0;
    let mut power = 1.0;
    let mut sum = 0.0;
    for (k, c) in coeffs.iter().take(terms).enumerate() {
        sum += ratio * c.to_f64().unwrap() * power;
        ratio *= (nf + 0.5 + k as f64) / (2.0 * nf + k as f64);
        power *= t;
    }
    let q = (1.0 + t + t * t).sqrt();
    let closed = 2f64.powf(nf - 0.5) / q * (1.0 + t / 2.0 + q).powf(0.5 - nf);
    Ok(NumericCheck::new(
        format!("hypergeometric series n={n}, t={t}, {terms} terms"),
        sum,
        closed,
        tolerance,
    ))
}

/// `(2/pi) int_0^{pi/2} (sin((m+1)t) / sin t)^n cos((nm - 2k) t) dt`,
/// 64-point Gauss-Legendre on 8 panels.
pub fn integral_coeff(n: i64, k: i64, m: i64, tolerance: f64) -> Result<NumericCheck> {
    if n < 0 {
        return Err(Error::NegativeN(n));
    }
    let key = CoeffKey::new(n, k, m)?;
    let rule = CompositeGaussLegendre::<f64>::new(64, 8);
    let (mf, ni) = ((m + 1) as f64, n as i32);
    let freq = (n * m - 2 * k) as f64;
    let integral = rule.integrate(0.0, PI / 2.0, |t| {
        let s = t.sin();
        // Removable singularity at t = 0.
        let ratio = if s.abs() < 1e-300 {
            mf
        } else {
            (mf * t).sin() / s
        };
        ratio.powi(ni) * (freq * t).cos()
    });
    Ok(NumericCheck::new(
        format!("integral representation n={n}, k={k}, m={m}"),
        2.0 / PI * integral,
        coeff(key).to_f64().unwrap(),
        tolerance,
    ))
}

/// `sum_{k < terms} <n,k>_m x^k y^{mn-k}` against `(sum_i x^i y^{m-i})^n`
/// for negative `n`, inside `|p_m(x/y) - 1| < 1`.
pub fn numeric_binomial_check(
    n: i64,
    m: i64,
    x: f64,
    y: f64,
    terms: usize,
    tolerance: f64,
) -> Result<NumericCheck> {
    if n >= 0 {
        return Err(Error::Domain(format!(
            "numeric check is for negative n, got {n}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidDegree(m));
    }
    let z = x / y;
    let pz: f64 = (0..=m).map(|i| z.powi(i as i32)).sum();
    if (pz - 1.0).abs() >= 1.0 {
        return Err(Error::Domain(format!("|p_{m}({z}) - 1| >= 1")));
    }
    let coeffs = row(n, m, terms.saturating_sub(1))?;
    let top = (m * n) as i32;
    let mut sum = 0.0;
    for (k, c) in coeffs.iter().take(terms).enumerate() {
        sum += c.to_f64().unwrap() * x.powi(k as i32) * y.powi(top - k as i32);
    }
    let base: f64 = (0..=m)
        .map(|i| x.powi(i as i32) * y.powi((m - i) as i32))
        .sum();
    Ok(NumericCheck::new(
        format!("negative-row binomial theorem n={n}, m={m}, x={x}, y={y}"),
        sum,
        base.powi(n as i32),
        tolerance,
    ))
}

/// Partial sum of `sum_{k >= 0, m | n+k} <(n+k)/m, k>_m 2^{-k/m}` over
/// `l = (n+k)/m < terms`, against `2^{1 + n/m} f_n`.
pub fn identity2_partial_sum(n: i64, m: i64, terms: usize, tolerance: f64) -> Result<NumericCheck> {
    if n < 0 {
        return Err(Error::NegativeN(n));
    }
    let f = crate::genfun::f_numbers(m, n as usize + 1)?.values[n as usize]
        .to_f64()
        .unwrap();
    let mut sum = 0.0;
    for l in 0..terms as i64 {
        let k = m * l - n;
        if k < 0 {
            continue;
        }
        let c = coeff(CoeffKey::new(l, k, m)?).to_f64().unwrap();
        sum += c * 2f64.powf(-(k as f64) / m as f64);
    }
    Ok(NumericCheck::new(
        format!("column sum at 1/2, n={n}, m={m}, {terms} terms"),
        sum,
        2f64.powf(1.0 + n as f64 / m as f64) * f,
        tolerance,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gegenbauer_examples() {
        assert_eq!(gegenbauer(-3, 3, &rat(-1, 2)), rat(7, 1));
        assert_eq!(gegenbauer(5, 0, &rat(3, 7)), rat(1, 1));
        assert_eq!(-gegenbauer(-2, 1, &rat(1, 2)), rat(2, 1));
        // Positive order: C_1^(1)(x) = 2x, C_2^(1)(x) = 4x^2 - 1.
        assert_eq!(gegenbauer(1, 2, &rat(1, 3)), rat(4, 9) - rat(1, 1));
    }

    #[test]
    fn dilcher_examples() {
        assert!((dilcher_sum(1, 1).unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(dilcher_sum(4, 0).unwrap(), 1.0);
        let want = trinomial(-2, 2).to_f64().unwrap();
        assert!((dilcher_sum(2, 2).unwrap() - want).abs() < 1e-9);
        assert!(matches!(dilcher_sum(3, 9), Err(Error::TooLarge(_))));
        assert!(matches!(dilcher_sum(10, 6), Err(Error::TooLarge(_))));
        assert!(matches!(dilcher_sum(0, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn rainville_examples() {
        assert_eq!(rainville_32(1, 0).unwrap(), (rat(1, 2), rat(1, 2)));
        assert_eq!(rainville_32(2, 0).unwrap(), (rat(1, 2), rat(1, 2)));
        assert_eq!(rainville_36(1, 1).unwrap(), (rat(-1, 1), rat(-1, 1)));
        assert_eq!(rainville_36(1, 0).unwrap(), (rat(1, 1), rat(1, 1)));
        assert!(rainville_36(0, 1).is_err());
    }

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(&rat(1, 2), 0), rat(1, 1));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
    }

    #[test]
    fn brafman_closed_form_values() {
        assert!((brafman_closed_form(1) - 1.2091995761561452).abs() < 1e-14);
        assert!((brafman_closed_form(2) - 4.0 * 3f64.sqrt() * PI / 243.0).abs() < 1e-15);
    }

    #[test]
    fn hgf_examples() {
        let c = hgf_series(2, 0.0, 5, 1e-15).unwrap();
        assert_eq!(c.computed, 1.0);
        assert!(c.passed, "{c:?}");
        assert!(hgf_series(1, 0.25, 200, 1e-10).unwrap().passed);
        assert!(hgf_series(3, -0.5, 400, 1e-10).unwrap().passed);
        assert!(matches!(
            hgf_series(1, 1.0, 10, 1e-10),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn integral_examples() {
        let c = integral_coeff(0, 0, 2, 1e-12).unwrap();
        assert!(c.passed, "{c:?}");
        assert!(integral_coeff(0, 3, 2, 1e-12).unwrap().passed);
        assert!(integral_coeff(3, 4, 3, 1e-8).unwrap().passed);
        assert!(integral_coeff(2, 2, 2, 1e-8).unwrap().passed);
        assert!(matches!(
            integral_coeff(-1, 0, 2, 1e-8),
            Err(Error::NegativeN(-1))
        ));
    }

    #[test]
    fn numeric_binomial_examples() {
        let c = numeric_binomial_check(-1, 2, 0.1, 1.0, 60, 1e-10).unwrap();
        assert!(c.passed && (c.expected - 1.0 / 1.11).abs() < 1e-15);
        assert!(
            numeric_binomial_check(-2, 3, -0.05, 1.0, 60, 1e-10)
                .unwrap()
                .passed
        );
        let c = numeric_binomial_check(-3, 2, 0.0, 2.0, 10, 1e-15).unwrap();
        assert_eq!((c.computed, c.expected), (2f64.powi(-6), 2f64.powi(-6)));
        assert!(numeric_binomial_check(-1, 2, 0.9, 1.0, 60, 1e-10).is_err());
    }

    #[test]
    fn identity2_numeric() {
        for m in 1..=4 {
            for n in 0..=6 {
                let c = identity2_partial_sum(n, m, 200, 1e-9).unwrap();
                assert!(c.passed, "{c:?}");
            }
        }
    }
}
