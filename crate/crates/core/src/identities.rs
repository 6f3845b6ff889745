//! Registry of exactly checkable identities for polynomial coefficients,
//! and the machinery to evaluate them over parameter grids.
//!
//! Each [`IdentitySpec`] pairs a grid generator with a checker that returns
//! both sides as exact rationals. Checkers take a [`Mutation`] so that the
//! test-suite can confirm a perturbed checker is caught by the grid.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::coefficients::{binomial, chi, coeff_any_degree, multinomial_sum, row_window};
use crate::genfun::f_numbers_by_recurrence;
use crate::scalar::int_to_rat;
use crate::trinomial::{
    brafman_partial, dilcher_sum, gegenbauer, hgf_series, identity2_partial_sum, integral_coeff,
    numeric_binomial_check, rainville_32, rainville_36, NumericCheck,
};
use crate::GaussianInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    Quick,
    Desk,
    Deep,
}

impl Profile {
    /// Bound on `|n|`, `r`, `s`.
    pub fn n_max(self) -> i64 {
        match self {
            Profile::Quick => 4,
            Profile::Desk => 10,
            Profile::Deep => 14,
        }
    }

    pub fn m_max(self) -> i64 {
        match self {
            Profile::Quick => 3,
            Profile::Desk => 5,
            Profile::Deep => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Profile::Quick => "quick",
            Profile::Desk => "desk",
            Profile::Deep => "deep",
        }
    }
}

impl std::str::FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Profile::Quick),
            "desk" => Ok(Profile::Desk),
            "deep" => Ok(Profile::Deep),
            _ => Err(format!(
                "unknown profile {s:?} (expected quick, desk or deep)"
            )),
        }
    }
}

/// One grid point: named integer parameters in a fixed order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(Vec<(&'static str, i64)>);

impl Params {
    pub fn new(pairs: &[(&'static str, i64)]) -> Self {
        Params(pairs.to_vec())
    }

    pub fn get(&self, name: &str) -> i64 {
        self.0
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
            .unwrap_or_else(|| panic!("grid point has no parameter {name:?}"))
    }

    pub fn pairs(&self) -> &[(&'static str, i64)] {
        &self.0
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// A deliberate perturbation of a checker: flip the sign of one side, or
/// move the principal summation bound (or reflected index).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mutation {
    pub flip_sign: bool,
    pub bound_shift: i64,
}

impl Mutation {
    pub const NONE: Mutation = Mutation {
        flip_sign: false,
        bound_shift: 0,
    };

    fn sign(&self) -> BigInt {
        if self.flip_sign {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn bound(&self, b: i64) -> i64 {
        b + self.bound_shift
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl Comparison {
    fn ints(lhs: BigInt, rhs: BigInt) -> Self {
        Comparison {
            lhs: int_to_rat(&lhs),
            rhs: int_to_rat(&rhs),
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub type Checker = fn(&Params, Mutation) -> Comparison;

#[derive(Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    /// Where the binomial original is catalogued.
    pub source: &'static str,
    /// Human-readable ranges, for reports.
    pub grid_label: fn(Profile) -> String,
    pub grid: fn(Profile) -> Vec<Params>,
    pub check: Checker,
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub grid: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates every point, keeping all counterexamples in grid order.
pub fn run_points(
    id: &str,
    grid: String,
    points: &[Params],
    check: Checker,
    mutation: Mutation,
) -> IdentityReport {
    let start = Instant::now();
    let failures: Vec<Failure> = points
        .par_iter()
        .filter_map(|p| {
            let c = check(p, mutation);
            (!c.holds()).then(|| Failure {
                params: p.clone(),
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
            })
        })
        .collect();
    IdentityReport {
        id: id.to_string(),
        grid,
        checked: points.len(),
        failures,
        elapsed: start.elapsed(),
    }
}

pub fn run_identity_with(
    spec: &IdentitySpec,
    profile: Profile,
    mutation: Mutation,
) -> IdentityReport {
    let points = (spec.grid)(profile);
    run_points(
        spec.id,
        (spec.grid_label)(profile),
        &points,
        spec.check,
        mutation,
    )
}

pub fn run_identity(spec: &IdentitySpec, profile: Profile) -> IdentityReport {
    run_identity_with(spec, profile, Mutation::NONE)
}

/// All registry entries in registry order.
pub fn run_suite(profile: Profile) -> Vec<IdentityReport> {
    registry()
        .par_iter()
        .map(|spec| run_identity(spec, profile))
        .collect()
}

pub fn find(id: &str) -> Option<IdentitySpec> {
    registry().into_iter().find(|s| s.id == id)
}

/// `p_m(i)^n` in the Gaussian integers.
pub fn gaussian_pow(m: i64, n: u64) -> GaussianInt {
    // i^j cycles through 1, i, -1, -i.
    let (mut re, mut im) = (0i64, 0i64);
    for j in 0..=m {
        match j % 4 {
            0 => re += 1,
            1 => im += 1,
            2 => re -= 1,
            _ => im -= 1,
        }
    }
    let mut base = GaussianInt::new(re.into(), im.into());
    let mut acc = GaussianInt::new(BigInt::one(), BigInt::zero());
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// The case table for the even- and odd-index alternating row sums, valid
/// for `n >= 1`: by `m mod 4` these are `(1, 0)`,
/// `2^{n/2} (cos, sin)(n pi / 4)`, `(cos, sin)(n pi / 2)` and `(0, 0)`,
/// evaluated exactly.
pub fn parity_sums_closed_form(m: i64, n: u64) -> (BigInt, BigInt) {
    assert!(n >= 1);
    let pow2 = |e: u64| BigInt::one() << e;
    match m.rem_euclid(4) {
        0 => (BigInt::one(), BigInt::zero()),
        1 => {
            // 2^{n/2} cos(n pi/4), 2^{n/2} sin(n pi/4): the sqrt(2) from an
            // odd n cancels against cos/sin = +-1/sqrt(2).
            let half = pow2(n / 2);
            let odd = pow2((n - 1) / 2);
            let z = BigInt::zero();
            match n % 8 {
                0 => (half, z),
                1 => (odd.clone(), odd),
                2 => (z, half),
                3 => (-odd.clone(), odd),
                4 => (-half, z),
                5 => (-odd.clone(), -odd),
                6 => (z, -half),
                _ => (odd.clone(), -odd),
            }
        }
        2 => {
            let (c, s) = [(1, 0), (0, 1), (-1, 0), (0, -1)][(n % 4) as usize];
            (BigInt::from(c), BigInt::from(s))
        }
        _ => (BigInt::zero(), BigInt::zero()),
    }
}

// ---------------------------------------------------------------------------
// grids

fn degrees(p: Profile) -> std::ops::RangeInclusive<i64> {
    1..=p.m_max()
}

fn signed(p: Profile) -> std::ops::RangeInclusive<i64> {
    -p.n_max()..=p.n_max()
}

fn nonneg(p: Profile) -> std::ops::RangeInclusive<i64> {
    0..=p.n_max()
}

/// Full support `0..=m|n|` plus five values outside it.
fn k_range(n: i64, m: i64) -> std::ops::RangeInclusive<i64> {
    -2..=m * n.abs() + 3
}

fn grid_mnk(p: Profile, ns: std::ops::RangeInclusive<i64>, skip_k0: bool) -> Vec<Params> {
    let mut out = Vec::new();
    for m in degrees(p) {
        for n in ns.clone() {
            for k in k_range(n, m) {
                if skip_k0 && k == 0 {
                    continue;
                }
                out.push(Params::new(&[("m", m), ("n", n), ("k", k)]));
            }
        }
    }
    out
}

fn grid_mn(p: Profile, ns: std::ops::RangeInclusive<i64>, eqs: i64) -> Vec<Params> {
    let mut out = Vec::new();
    for m in degrees(p) {
        for n in ns.clone() {
            for eq in 0..eqs {
                if eqs > 1 {
                    out.push(Params::new(&[("m", m), ("n", n), ("eq", eq)]));
                } else {
                    out.push(Params::new(&[("m", m), ("n", n)]));
                }
            }
        }
    }
    out
}

fn label_signed(p: Profile) -> String {
    format!(
        "m=1..{}, n=-{}..{}, k=-2..m|n|+3",
        p.m_max(),
        p.n_max(),
        p.n_max()
    )
}

fn label_nonneg(p: Profile) -> String {
    format!("m=1..{}, n=0..{}, k=-2..mn+3", p.m_max(), p.n_max())
}

fn label_mn(p: Profile) -> String {
    format!("m=1..{}, n=0..{}", p.m_max(), p.n_max())
}

// ---------------------------------------------------------------------------
// checkers

fn c(n: i64, k: i64, m: i64) -> BigInt {
    coeff_any_degree(n, k, m)
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Row `n` as a lookup closure returning zero outside `0..len`.
fn row_fn(n: i64, m: i64, len: i64) -> impl Fn(i64) -> BigInt {
    let row = row_window(n, m, len.max(0) as usize);
    move |k: i64| {
        usize::try_from(k)
            .ok()
            .and_then(|k| row.get(k))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

fn t2_factorial(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k) = (p.get("m"), p.get("n"), p.get("k"));
    Comparison::ints(
        mu.sign() * multinomial_sum(n, k, m, mu.bound(n)),
        c(n, k, m),
    )
}

fn t2_symmetry(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k) = (p.get("m"), p.get("n"), p.get("k"));
    Comparison::ints(c(n, k, m), mu.sign() * c(n, mu.bound(m * n - k), m))
}

fn t2_absorption(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k) = (p.get("m"), p.get("n"), p.get("k"));
    let prev = row_fn(n - 1, m, k.max(0) + 1);
    let sum: BigInt = (1..=mu.bound(m)).map(|i| big(i) * prev(k - i)).sum();
    Comparison::ints(big(k) * c(n, k, m), mu.sign() * big(n) * sum)
}

fn t2_vandermonde(p: &Params, mu: Mutation) -> Comparison {
    let (m, r, s, k) = (p.get("m"), p.get("r"), p.get("s"), p.get("k"));
    let rr = row_fn(r, m, k + 1);
    let ss = row_fn(s, m, k + 1);
    let lhs: BigInt = (0..=mu.bound(k)).map(|i| rr(i) * ss(k - i)).sum();
    Comparison::ints(lhs, mu.sign() * c(r + s, k, m))
}

fn t2_addition(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k) = (p.get("m"), p.get("n"), p.get("k"));
    let prev = row_fn(n - 1, m, k.max(0) + 1);
    let rhs: BigInt = (0..=mu.bound(m)).map(|i| prev(k - i)).sum();
    Comparison::ints(c(n, k, m), mu.sign() * rhs)
}

/// Both sides as bivariate polynomials in `(x, y)`, stored sparsely by
/// exponent pair. A nonzero coefficient off the line `a + b = mn` on the
/// right is added to the compared value so it cannot go unnoticed.
fn t2_binomial_theorem(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k) = (p.get("m"), p.get("n"), p.get("k"));
    let mut rhs: BTreeMap<(i64, i64), BigInt> = BTreeMap::from([((0, 0), BigInt::one())]);
    for _ in 0..n {
        let mut next: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for ((a, b), v) in &rhs {
            for i in 0..=mu.bound(m) {
                *next.entry((a + i, b + m - i)).or_default() += v;
            }
        }
        rhs = next;
    }
    let mut got = rhs.get(&(k, m * n - k)).cloned().unwrap_or_default();
    for ((a, b), v) in &rhs {
        if a + b != m * n {
            got += v.abs();
        }
    }
    let lhs = if (0..=m * n).contains(&k) {
        c(n, k, m)
    } else {
        BigInt::zero()
    };
    Comparison::ints(mu.sign() * lhs, got)
}

fn t2_upper_summation(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k) = (p.get("m"), p.get("n"), p.get("k"));
    let lhs: BigInt = (0..=mu.bound(n)).map(|l| c(l, k, m)).sum();
    let next = row_fn(n + 1, m, k.max(0) + 2);
    let rhs: BigInt = (0..=k).map(|i| big(chi(m - 1, i)) * next(k - i + 1)).sum();
    Comparison::ints(lhs, mu.sign() * rhs)
}

fn t2_parallel_summation(p: &Params, mu: Mutation) -> Comparison {
    let (m, r, n) = (p.get("m"), p.get("r"), p.get("n"));
    let lhs: BigInt = (0..=mu.bound(n)).map(|k| c(r + k, m * k, m)).sum();
    let top = row_fn(r + n + 1, m, m * r + 2);
    let rhs: BigInt = (0..=m * r)
        .map(|i| big(chi(m - 1, i)) * top(m * r - i + 1))
        .sum();
    Comparison::ints(lhs, mu.sign() * rhs)
}

fn t2_horizontal(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k) = (p.get("m"), p.get("n"), p.get("k"));
    let cur = row_fn(n, m, k.max(0) + 1);
    let rhs: BigInt = (1..=mu.bound(m))
        .map(|i| big((n + 1) * i - k) * cur(k - i))
        .sum();
    Comparison::ints(big(k) * cur(k), mu.sign() * rhs)
}

fn id1_chi_convolution(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k) = (p.get("m"), p.get("n"), p.get("k"));
    let cur = row_fn(n, m, k.max(0) + 1);
    let lhs: BigInt = (0..=mu.bound(k)).map(|j| big(chi(m, j)) * cur(k - j)).sum();
    Comparison::ints(lhs, mu.sign() * c(n - 1, k, m))
}

/// Column `n` at `x = 1/2`. `(1-x)^{n+1} sum_l <l,n>_m x^l` is formed from
/// direct coefficients up to `x^{2n+2}`; it must be a polynomial of degree
/// at most `n` (any coefficient above is added in absolute value), and its
/// value at `1/2` times `2^{n+1}` must equal `2 f_n` from the recurrence.
fn id2_column_at_half(p: &Params, mu: Mutation) -> Comparison {
    let (m, n) = (p.get("m"), p.get("n"));
    let len = 2 * n + 3;
    let column: Vec<BigInt> = (0..len).map(|l| c(l, n, m)).collect();
    let mut q = vec![BigInt::zero(); len as usize];
    for j in 0..=(n + 1) {
        let b = binomial(n + 1, j);
        let b = if j.is_odd() { -b } else { b };
        for l in 0..(len - j) {
            q[(l + j) as usize] += &b * &column[l as usize];
        }
    }
    let half = BigRational::new(BigInt::one(), big(2));
    let mut lhs = BigRational::zero();
    let mut pow = BigRational::one();
    for (j, qj) in q.iter().enumerate() {
        let j = j as i64;
        if j <= mu.bound(n) {
            lhs += int_to_rat(qj) * &pow;
        } else if j > n {
            lhs += int_to_rat(&qj.abs());
        }
        pow *= &half;
    }
    lhs *= int_to_rat(&(BigInt::one() << (n + 1)));
    let f = &f_numbers_by_recurrence(m, n as usize + 1)[n as usize];
    Comparison {
        lhs,
        rhs: int_to_rat(&(mu.sign() * big(2) * f)),
    }
}

fn id3_alternating_diagonal(p: &Params, mu: Mutation) -> Comparison {
    let (m, n) = (p.get("m"), p.get("n"));
    let lhs: BigInt = (0..=mu.bound(n))
        .map(|k| {
            let v = c(n - k, k, m);
            if (n - k).is_odd() {
                -v
            } else {
                v
            }
        })
        .sum();
    Comparison::ints(lhs, mu.sign() * big(chi(m + 1, n)))
}

fn id4_weighted_diagonal(p: &Params, mu: Mutation) -> Comparison {
    let (m, n) = (p.get("m"), p.get("n"));
    let top = Integer::div_floor(&(m * n), &(m + 1));
    let mut lhs = BigRational::zero();
    for k in 0..=mu.bound(top) {
        let v = BigRational::new(c(n - k, k, m) * big(n), big(n - k));
        lhs = if (n - k).is_odd() { lhs - v } else { lhs + v };
    }
    let rhs = if n % (m + 2) == 0 { m + 1 } else { -1 };
    Comparison {
        lhs,
        rhs: int_to_rat(&(mu.sign() * big(rhs))),
    }
}

fn id5_parity_sums(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, eq) = (p.get("m"), p.get("n"), p.get("eq"));
    let cur = row_fn(n, m, m * n + 1);
    let g = gaussian_pow(m, n as u64);
    let (top, offset, target) = if eq == 0 {
        (Integer::div_floor(&(m * n), &2), 0, g.re)
    } else {
        (Integer::div_floor(&(m * n - 1), &2), 1, g.im)
    };
    let lhs: BigInt = (0..=mu.bound(top))
        .map(|j| {
            let v = cur(2 * j + offset);
            if j.is_odd() {
                -v
            } else {
                v
            }
        })
        .sum();
    Comparison::ints(lhs, mu.sign() * target)
}

fn id6_shifted_products(p: &Params, mu: Mutation) -> Comparison {
    let (m, r, s, q, k, eq) = (
        p.get("m"),
        p.get("r"),
        p.get("s"),
        p.get("q"),
        p.get("k"),
        p.get("eq"),
    );
    let rr = row_fn(r, m, m * r + 1);
    let ss = row_fn(s, m, m * s + 1);
    let lo = (-q).max(-k);
    let hi = (m * r - q).min(m * s - k);
    let lhs: BigInt = (lo..=mu.bound(hi)).map(|l| rr(q + l) * ss(k + l)).sum();
    let idx = if eq == 0 {
        m * r - q + k
    } else {
        m * s + q - k
    };
    Comparison::ints(lhs, mu.sign() * c(r + s, idx, m))
}

fn id7_square_sums(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, eq) = (p.get("m"), p.get("n"), p.get("eq"));
    let cur = row_fn(n, m, m * n + 1);
    let weight = |k: i64| -> BigInt {
        match eq {
            0 => BigInt::one(),
            1 => big(k),
            _ => big(k * k),
        }
    };
    let sum: BigInt = (0..=mu.bound(m * n))
        .map(|k| weight(k) * cur(k) * cur(k))
        .sum();
    let central = c(2 * n, m * n, m);
    let (lhs, rhs) = match eq {
        0 => (sum, central),
        1 => (big(2) * sum, big(m * n) * central),
        _ => {
            let inner: BigInt = (1..=m)
                .map(|i| big(i * (m * (n - 1) + i)) * c(2 * n - 1, m * n - i, m))
                .sum();
            (big(2 * n - 1) * sum, big(n * n) * inner)
        }
    };
    Comparison::ints(lhs, mu.sign() * rhs)
}

fn id8_alternating_squares(p: &Params, mu: Mutation) -> Comparison {
    let (m, n) = (p.get("m"), p.get("n"));
    let cur = row_fn(n, m, m * n + 1);
    let lhs: BigInt = (0..=mu.bound(m * n))
        .map(|k| {
            let v = cur(k) * cur(k);
            if k.is_odd() {
                -v
            } else {
                v
            }
        })
        .sum();
    let rhs = if (m * n).is_odd() {
        BigInt::zero()
    } else if m.is_even() {
        c(n, m * n / 2, m)
    } else {
        (0..=n)
            .map(|i| {
                let v = binomial(n, i) * c(2 * n, m * n / 2 - i, (m - 1) / 2);
                if i.is_odd() {
                    -v
                } else {
                    v
                }
            })
            .sum()
    };
    Comparison::ints(lhs, mu.sign() * rhs)
}

fn id9_quadrinomial_squares(p: &Params, mu: Mutation) -> Comparison {
    let r = p.get("r");
    let cur = row_fn(2 * r, 3, 6 * r + 1);
    let lhs: BigInt = (0..=mu.bound(6 * r))
        .map(|k| {
            let v = cur(k) * cur(k);
            if k.is_odd() {
                -v
            } else {
                v
            }
        })
        .sum();
    let b = binomial(4 * r, r);
    let rhs = if r.is_odd() { -b } else { b };
    Comparison::ints(lhs, mu.sign() * rhs)
}

fn id10_binomial_transforms(p: &Params, mu: Mutation) -> Comparison {
    let (m, n, k, eq) = (p.get("m"), p.get("n"), p.get("k"), p.get("eq"));
    if eq == 0 {
        let lo = Integer::div_ceil(&k, &m).max(0);
        let lhs: BigInt = (lo..=mu.bound(n))
            .map(|l| binomial(n, l) * c(l, k, m))
            .sum();
        let rhs: BigInt = (0..=n)
            .map(|j| (BigInt::one() << (n - j)) * binomial(n, j) * c(j, k - j, m - 1))
            .sum();
        Comparison::ints(lhs, mu.sign() * rhs)
    } else {
        let cur = row_fn(n, m, m * n + 1);
        let lhs: BigInt = (k.max(0)..=mu.bound(m * n))
            .map(|l| cur(l) * binomial(l, k))
            .sum();
        let rhs: BigInt = (0..=n)
            .map(|j| {
                let v = binomial(n, j) * binomial((m + 1) * j, k + n);
                if (n - j).is_odd() {
                    -v
                } else {
                    v
                }
            })
            .sum();
        Comparison::ints(lhs, mu.sign() * rhs)
    }
}

// ---------------------------------------------------------------------------
// registry

fn grid_signed(p: Profile) -> Vec<Params> {
    grid_mnk(p, signed(p), false)
}

fn grid_signed_k_nonzero(p: Profile) -> Vec<Params> {
    grid_mnk(p, signed(p), true)
}

fn grid_nonneg(p: Profile) -> Vec<Params> {
    grid_mnk(p, nonneg(p), false)
}

fn grid_rsk(p: Profile) -> Vec<Params> {
    let mut out = Vec::new();
    for m in degrees(p) {
        for r in signed(p) {
            for s in signed(p) {
                for k in -2..=m * (r.abs() + s.abs()) + 3 {
                    out.push(Params::new(&[("m", m), ("r", r), ("s", s), ("k", k)]));
                }
            }
        }
    }
    out
}

fn grid_parallel(p: Profile) -> Vec<Params> {
    let mut out = Vec::new();
    for m in degrees(p) {
        for r in nonneg(p) {
            for n in nonneg(p) {
                out.push(Params::new(&[("m", m), ("r", r), ("n", n)]));
            }
        }
    }
    out
}

fn grid_mn_plain(p: Profile) -> Vec<Params> {
    grid_mn(p, nonneg(p), 1)
}

fn grid_mn_positive(p: Profile) -> Vec<Params> {
    grid_mn(p, 1..=p.n_max(), 1)
}

fn grid_mn_two(p: Profile) -> Vec<Params> {
    grid_mn(p, nonneg(p), 2)
}

fn grid_mn_three(p: Profile) -> Vec<Params> {
    grid_mn(p, nonneg(p), 3)
}

fn grid_shifted(p: Profile) -> Vec<Params> {
    let mut out = Vec::new();
    for m in degrees(p) {
        for r in nonneg(p) {
            for s in nonneg(p) {
                for q in -1..=m * r + 1 {
                    for k in -1..=m * s + 1 {
                        for eq in 0..2 {
                            out.push(Params::new(&[
                                ("m", m),
                                ("r", r),
                                ("s", s),
                                ("q", q),
                                ("k", k),
                                ("eq", eq),
                            ]));
                        }
                    }
                }
            }
        }
    }
    out
}

fn grid_r(p: Profile) -> Vec<Params> {
    nonneg(p).map(|r| Params::new(&[("r", r)])).collect()
}

fn grid_transforms(p: Profile) -> Vec<Params> {
    let mut out = Vec::new();
    for m in degrees(p) {
        for n in nonneg(p) {
            for k in k_range(n, m) {
                for eq in 0..2 {
                    out.push(Params::new(&[("m", m), ("n", n), ("k", k), ("eq", eq)]));
                }
            }
        }
    }
    out
}

pub fn registry() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec {
            id: "T2-i",
            description: "factorial (multinomial) expansion equals the coefficient, n >= 0",
            source: "multinomial theorem",
            grid_label: label_nonneg,
            grid: grid_nonneg,
            check: t2_factorial,
        },
        IdentitySpec {
            id: "T2-ii",
            description: "symmetry <n,k> = <n,mn-k>, n >= 0",
            source: "self-reciprocity of 1 + t + ... + t^m",
            grid_label: label_nonneg,
            grid: grid_nonneg,
            check: t2_symmetry,
        },
        IdentitySpec {
            id: "T2-iii",
            description: "absorption k<n,k> = n sum_{i=1}^m i <n-1,k-i>, all n, k != 0",
            source: "Gould, Combinatorial Identities (absorption)",
            grid_label: label_signed,
            grid: grid_signed_k_nonzero,
            check: t2_absorption,
        },
        IdentitySpec {
            id: "T2-iv",
            description: "Vandermonde convolution sum_{i+j=k} <r,i><s,j> = <r+s,k>, all r, s",
            source: "Vandermonde convolution",
            grid_label: |p| format!("m=1..{}, r,s=-{n}..{n}, k=-2..m(|r|+|s|)+3", p.m_max(), n = p.n_max()),
            grid: grid_rsk,
            check: t2_vandermonde,
        },
        IdentitySpec {
            id: "T2-v",
            description: "addition <n,k> = sum_{i=0}^m <n-1,k-i>, all n",
            source: "Pascal addition rule",
            grid_label: label_signed,
            grid: grid_signed,
            check: t2_addition,
        },
        IdentitySpec {
            id: "T2-vi",
            description: "binomial theorem sum_k <n,k> x^k y^{mn-k} = (sum_i x^i y^{m-i})^n, n >= 0",
            source: "binomial theorem",
            grid_label: label_nonneg,
            grid: grid_nonneg,
            check: t2_binomial_theorem,
        },
        IdentitySpec {
            id: "T2-vii",
            description: "upper summation sum_{l<=n} <l,k> = sum_i chi_{m-1}(i) <n+1,k-i+1>, n >= 0",
            source: "Gould, Combinatorial Identities (upper summation)",
            grid_label: label_nonneg,
            grid: grid_nonneg,
            check: t2_upper_summation,
        },
        IdentitySpec {
            id: "T2-viii",
            description: "parallel summation sum_{k<=n} <r+k,mk> = sum_i chi_{m-1}(i) <r+n+1,mr-i+1>, r >= 0",
            source: "Gould, Combinatorial Identities (parallel summation)",
            grid_label: |p| format!("m=1..{}, r,n=0..{}", p.m_max(), p.n_max()),
            grid: grid_parallel,
            check: t2_parallel_summation,
        },
        IdentitySpec {
            id: "T2-ix",
            description: "horizontal recurrence k<n,k> = sum_{i=1}^m ((n+1)i-k) <n,k-i>, all n",
            source: "binomial horizontal recurrence",
            grid_label: label_signed,
            grid: grid_signed,
            check: t2_horizontal,
        },
        IdentitySpec {
            id: "ID1",
            description: "sum_j chi_m(j) <n,k-j> = <n-1,k>, all n",
            source: "Gould, Combinatorial Identities 1.5",
            grid_label: label_signed,
            grid: grid_signed,
            check: id1_chi_convolution,
        },
        IdentitySpec {
            id: "ID2",
            description: "column n at 1/2: sum_l <l,n> 2^{-l} = 2 f_n, via the rational column generating function",
            source: "Gould, Combinatorial Identities 1.23",
            grid_label: label_mn,
            grid: grid_mn_plain,
            check: id2_column_at_half,
        },
        IdentitySpec {
            id: "ID3",
            description: "sum_{k<=n} (-1)^{n-k} <n-k,k> = chi_{m+1}(n), n >= 0",
            source: "Benjamin and Quinn, Proofs that Really Count, 175",
            grid_label: label_mn,
            grid: grid_mn_plain,
            check: id3_alternating_diagonal,
        },
        IdentitySpec {
            id: "ID4",
            description: "sum_k (-1)^{n-k} <n-k,k> n/(n-k) = (m+1)[m+2 | n] - [m+2 does not divide n], n >= 1",
            source: "Gould, Combinatorial Identities 1.68",
            grid_label: |p| format!("m=1..{}, n=1..{}", p.m_max(), p.n_max()),
            grid: grid_mn_positive,
            check: id4_weighted_diagonal,
        },
        IdentitySpec {
            id: "ID5",
            description: "alternating even/odd row sums are Re/Im of p_m(i)^n",
            source: "Gould, Combinatorial Identities 1.90 and 1.96",
            grid_label: |p| format!("{}, eq=even,odd", label_mn(p)),
            grid: grid_mn_two,
            check: id5_parity_sums,
        },
        IdentitySpec {
            id: "ID6",
            description: "sum_l <r,q+l><s,k+l> = <r+s,mr-q+k> = <r+s,ms+q-k>, r, s >= 0",
            source: "Graham, Knuth and Patashnik, Concrete Mathematics 5.23",
            grid_label: |p| format!("m=1..{}, r,s=0..{}, q=-1..mr+1, k=-1..ms+1, eq=both", p.m_max(), p.n_max()),
            grid: grid_shifted,
            check: id6_shifted_products,
        },
        IdentitySpec {
            id: "ID7",
            description: "sums of k^j <n,k>^2 for j = 0, 1, 2",
            source: "Gould, Combinatorial Identities 3.78 and 3.79",
            grid_label: |p| format!("{}, eq=0,1,2", label_mn(p)),
            grid: grid_mn_three,
            check: id7_square_sums,
        },
        IdentitySpec {
            id: "ID8",
            description: "alternating sum of squares by parity of mn, m and n",
            source: "Gould, Combinatorial Identities 3.81",
            grid_label: label_mn,
            grid: grid_mn_plain,
            check: id8_alternating_squares,
        },
        IdentitySpec {
            id: "ID9",
            description: "sum_k (-1)^k <2r,k>_3^2 = (-1)^r C(4r,r)",
            source: "Gould, Combinatorial Identities 3.57",
            grid_label: |p| format!("r=0..{}", p.n_max()),
            grid: grid_r,
            check: id9_quadrinomial_squares,
        },
        IdentitySpec {
            id: "ID10",
            description: "binomial transforms of rows and columns",
            source: "Benjamin and Quinn, Proofs that Really Count, 155",
            grid_label: |p| format!("{}, eq=both", label_nonneg(p)),
            grid: grid_transforms,
            check: id10_binomial_transforms,
        },
    ]
}

// ---------------------------------------------------------------------------
// numeric and exact special-function checks

fn float_text(v: f64) -> String {
    format!("{v:.11e}")
}

fn numeric_report(
    id: &str,
    grid: &str,
    checks: Vec<(Params, crate::Result<NumericCheck>)>,
) -> IdentityReport {
    let start = Instant::now();
    let checked = checks.len();
    let failures = checks
        .into_iter()
        .filter_map(|(params, check)| match check {
            Ok(c) if c.passed => None,
            Ok(c) => Some(Failure {
                params,
                lhs: float_text(c.computed),
                rhs: float_text(c.expected),
            }),
            Err(e) => Some(Failure {
                params,
                lhs: format!("error: {e}"),
                rhs: String::new(),
            }),
        })
        .collect();
    IdentityReport {
        id: id.to_string(),
        grid: grid.to_string(),
        checked,
        failures,
        elapsed: start.elapsed(),
    }
}

fn exact_report(
    id: &str,
    grid: &str,
    points: Vec<(Params, crate::Result<(BigRational, BigRational)>)>,
) -> IdentityReport {
    let start = Instant::now();
    let checked = points.len();
    let failures = points
        .into_iter()
        .filter_map(|(params, pair)| match pair {
            Ok((l, r)) if l == r => None,
            Ok((l, r)) => Some(Failure {
                params,
                lhs: l.to_string(),
                rhs: r.to_string(),
            }),
            Err(e) => Some(Failure {
                params,
                lhs: format!("error: {e}"),
                rhs: String::new(),
            }),
        })
        .collect();
    IdentityReport {
        id: id.to_string(),
        grid: grid.to_string(),
        checked,
        failures,
        elapsed: start.elapsed(),
    }
}

fn gegenbauer_report() -> IdentityReport {
    let minus_half = BigRational::new(-BigInt::one(), big(2));
    let half = BigRational::new(BigInt::one(), big(2));
    let mut points = Vec::new();
    for n in -4..=6 {
        for k in 0..=15i64 {
            let direct = int_to_rat(&c(n, k, 2));
            let at_minus = gegenbauer(-n, k as usize, &minus_half);
            points.push((
                Params::new(&[("n", n), ("k", k), ("x", -1)]),
                Ok((at_minus, direct.clone())),
            ));
            let at_plus = gegenbauer(-n, k as usize, &half);
            let at_plus = if k.is_odd() { -at_plus } else { at_plus };
            points.push((
                Params::new(&[("n", n), ("k", k), ("x", 1)]),
                Ok((at_plus, direct)),
            ));
        }
    }
    exact_report(
        "N-gegenbauer",
        "n=-4..6, k=0..15, x=-1/2 and 1/2 (x param is 2x)",
        points,
    )
}

fn dilcher_report() -> IdentityReport {
    let mut checks = Vec::new();
    for n in 1..=6 {
        for k in 0..=6i64 {
            let check = dilcher_sum(n, k as usize).map(|v| {
                NumericCheck::new(
                    format!("Dilcher n={n}, k={k}"),
                    v,
                    c(-n, k, 2).to_f64().unwrap(),
                    1e-6,
                )
            });
            checks.push((Params::new(&[("n", n), ("k", k)]), check));
        }
    }
    numeric_report("N-dilcher", "n=1..6, k=0..6, tol 1e-6", checks)
}

fn integral_report() -> IdentityReport {
    let mut checks = Vec::new();
    for m in 1..=4 {
        for n in 0..=6 {
            for k in 0..=m * n {
                checks.push((
                    Params::new(&[("m", m), ("n", n), ("k", k)]),
                    integral_coeff(n, k, m, 1e-8),
                ));
            }
        }
    }
    numeric_report("N-integral", "m=1..4, n=0..6, k=0..mn, tol 1e-8", checks)
}

fn hgf_report() -> IdentityReport {
    let mut checks = Vec::new();
    for n in 1..=3 {
        for tq in [-2i64, -1, 1, 2] {
            let terms = if tq.abs() == 1 { 200 } else { 400 };
            let t = tq as f64 / 4.0;
            checks.push((
                Params::new(&[("n", n), ("t_quarters", tq)]),
                hgf_series(n, t, terms, 1e-10),
            ));
        }
    }
    numeric_report(
        "N-hgf",
        "n=1..3, t=+-1/4 (200 terms), +-1/2 (400 terms), tol 1e-10",
        checks,
    )
}

fn brafman_report() -> IdentityReport {
    let checks = vec![
        (
            Params::new(&[("n", 2), ("terms", 100_000)]),
            brafman_partial(2, 100_000, 1e-3),
        ),
        (
            Params::new(&[("n", 3), ("terms", 5_000)]),
            brafman_partial(3, 5_000, 1e-6),
        ),
    ];
    numeric_report(
        "N-brafman",
        "n=2 (1e5 terms, tol 1e-3), n=3 (5e3 terms, tol 1e-6)",
        checks,
    )
}

const BINOMIAL_POINTS: [(i64, i64); 5] = [(10, 1), (-5, 1), (0, 1), (20, 2), (-30, 2)];

fn negative_binomial_report() -> IdentityReport {
    let mut checks = Vec::new();
    for m in 1..=4 {
        for n in -4..=-1 {
            for (x100, y) in BINOMIAL_POINTS {
                let x = x100 as f64 / 100.0;
                let check = numeric_binomial_check(n, m, x, y as f64, 300, 1e-10);
                checks.push((
                    Params::new(&[("m", m), ("n", n), ("x_hundredths", x100), ("y", y)]),
                    check,
                ));
            }
        }
    }
    numeric_report(
        "N-binomial-neg",
        "m=1..4, n=-4..-1, (x,y) in (0.1,1) (-0.05,1) (0,1) (0.2,2) (-0.3,2), 300 terms, tol 1e-10",
        checks,
    )
}

fn rainville_report(
    id: &str,
    n_max: i64,
    f: fn(i64, i64) -> crate::Result<(BigRational, BigRational)>,
) -> IdentityReport {
    let mut points = Vec::new();
    for p in 1..=6 {
        for n in 0..=n_max {
            points.push((Params::new(&[("p", p), ("n", n)]), f(p, n)));
        }
    }
    exact_report(id, &format!("p=1..6, n=0..{n_max}, exact"), points)
}

fn column_half_report() -> IdentityReport {
    let mut checks = Vec::new();
    for m in 1..=4 {
        for n in 0..=6 {
            checks.push((
                Params::new(&[("m", m), ("n", n)]),
                identity2_partial_sum(n, m, 300, 1e-8),
            ));
        }
    }
    numeric_report(
        "N-column-half",
        "m=1..4, n=0..6, 300 terms, tol 1e-8",
        checks,
    )
}

pub const NUMERIC_IDS: [&str; 9] = [
    "N-gegenbauer",
    "N-dilcher",
    "N-integral",
    "N-hgf",
    "N-brafman",
    "N-binomial-neg",
    "N-rainville32",
    "N-rainville36",
    "N-column-half",
];

/// Runs one special-function check by id.
pub fn run_numeric(id: &str) -> Option<IdentityReport> {
    Some(match id {
        "N-gegenbauer" => gegenbauer_report(),
        "N-dilcher" => dilcher_report(),
        "N-integral" => integral_report(),
        "N-hgf" => hgf_report(),
        "N-brafman" => brafman_report(),
        "N-binomial-neg" => negative_binomial_report(),
        "N-rainville32" => rainville_report("N-rainville32", 8, rainville_32),
        "N-rainville36" => rainville_report("N-rainville36", 10, rainville_36),
        "N-column-half" => column_half_report(),
        _ => return None,
    })
}

pub fn run_numeric_suite() -> Vec<IdentityReport> {
    NUMERIC_IDS
        .par_iter()
        .map(|id| run_numeric(id).expect("registered"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: &str, pairs: &[(&'static str, i64)]) -> Comparison {
        (find(id).unwrap().check)(&Params::new(pairs), Mutation::NONE)
    }

    fn ints(c: &Comparison) -> (BigInt, BigInt) {
        (c.lhs.to_integer(), c.rhs.to_integer())
    }

    #[test]
    fn registry_has_nineteen_unique_entries() {
        let reg = registry();
        assert_eq!(reg.len(), 19);
        let mut ids: Vec<_> = reg.iter().map(|s| s.id).collect();
        ids.dedup();
        assert_eq!(ids.len(), 19);
    }

    #[test]
    fn worked_examples() {
        let v = check("T2-iv", &[("m", 2), ("r", 1), ("s", 1), ("k", 2)]);
        assert_eq!(ints(&v), (big(3), big(3)));
        let v = check("ID3", &[("m", 2), ("n", 5)]);
        assert_eq!(ints(&v), (big(-1), big(-1)));
        let v = check("T2-ii", &[("m", 3), ("n", 3), ("k", 2)]);
        assert_eq!(ints(&v), (big(6), big(6)));
        let v = check("T2-vii", &[("m", 2), ("n", 2), ("k", 2)]);
        assert_eq!(ints(&v), (big(4), big(4)));
        let v = check("T2-ix", &[("m", 2), ("n", 2), ("k", 2)]);
        assert_eq!(ints(&v), (big(6), big(6)));
        let v = check("ID4", &[("m", 2), ("n", 4)]);
        assert_eq!(ints(&v), (big(3), big(3)));
        let v = check("ID7", &[("m", 2), ("n", 2), ("eq", 0)]);
        assert_eq!(ints(&v), (big(19), big(19)));
        let v = check("ID7", &[("m", 2), ("n", 2), ("eq", 1)]);
        assert_eq!(ints(&v), (big(76), big(76)));
        let v = check("ID8", &[("m", 2), ("n", 2)]);
        assert_eq!(ints(&v), (big(3), big(3)));
        let v = check("ID9", &[("r", 1)]);
        assert_eq!(ints(&v), (big(-4), big(-4)));
        let v = check("ID10", &[("m", 2), ("n", 2), ("k", 2), ("eq", 0)]);
        assert_eq!(ints(&v), (big(5), big(5)));
        let v = check("ID10", &[("m", 2), ("n", 2), ("k", 2), ("eq", 1)]);
        assert_eq!(ints(&v), (big(15), big(15)));
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_pow(2, 2), GaussianInt::new(big(-1), big(0)));
        assert_eq!(gaussian_pow(1, 2), GaussianInt::new(big(0), big(2)));
        assert_eq!(gaussian_pow(7, 0), GaussianInt::new(big(1), big(0)));
        assert_eq!(gaussian_pow(3, 5), GaussianInt::new(big(0), big(0)));
    }

    #[test]
    fn case_table_matches_gaussian_powers() {
        for m in 1..=12 {
            for n in 1..=40u64 {
                let g = gaussian_pow(m, n);
                assert_eq!(parity_sums_closed_form(m, n), (g.re, g.im), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn empty_grid_reports_nothing() {
        let r = run_points("empty", "none".into(), &[], t2_symmetry, Mutation::NONE);
        assert_eq!(r.checked, 0);
        assert!(r.passed());
    }

    #[test]
    fn quick_profile_passes() {
        for r in run_suite(Profile::Quick) {
            assert!(
                r.passed(),
                "{} failed: {:?}",
                r.id,
                &r.failures[..r.failures.len().min(3)]
            );
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = find("ID6").unwrap();
        let mutation = Mutation {
            flip_sign: true,
            bound_shift: 0,
        };
        let a = run_identity_with(&spec, Profile::Quick, mutation);
        let b = run_identity_with(&spec, Profile::Quick, mutation);
        assert_eq!(a.failures, b.failures);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn numeric_suite_passes() {
        let reports = run_numeric_suite();
        assert_eq!(reports.len(), NUMERIC_IDS.len());
        for r in reports {
            assert!(
                r.passed(),
                "{} failed: {:?}",
                r.id,
                &r.failures[..r.failures.len().min(3)]
            );
        }
        assert!(run_numeric("N-nope").is_none());
    }

    #[test]
    fn report_json_shape() {
        let spec = find("ID9").unwrap();
        let r = run_identity_with(
            &spec,
            Profile::Quick,
            Mutation {
                flip_sign: true,
                bound_shift: 0,
            },
        );
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let obj = v.as_object().unwrap();
        let keys: Vec<_> = obj.keys().map(String::as_str).collect();
        assert_eq!(keys, ["checked", "failures", "grid", "id"]);
        let f = &v["failures"][0];
        assert!(f["params"]["r"].is_i64());
        assert!(f["lhs"].is_string() && f["rhs"].is_string());
    }
}
