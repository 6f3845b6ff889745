//! Polynomial coefficients `<n, k>_m = [t^k] (1 + t + ... + t^m)^n`.
//!
//! Three independent routes are provided:
//!
//! - [`coeff_by_series`]: raise `p_m` to the `n`-th power in the series ring
//!   and read off the coefficient.
//! - [`coeff_by_recurrence`]: build rows with the addition rule
//!   `row(n) = row(n-1) * p_m`, walking down for negative `n` by exact
//!   deconvolution. This is the default and is memoized in a [`CoeffCache`].
//! - [`coeff_by_binom_reduction`]: reduce the degree `m` one step at a time
//!   against binomial coefficients until `m = 1`.
//!
//! [`multinomial_oracle`] enumerates the factorial expansion directly and is
//! only meant for testing.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::IntSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffKey {
    n: i64,
    k: i64,
    m: i64,
}

impl CoeffKey {
    pub fn new(n: i64, k: i64, m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidDegree(m));
        }
        Ok(CoeffKey { n, k, m })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Outside the support by the zero clauses of the definition.
    fn is_structural_zero(&self) -> bool {
        self.k < 0 || (self.n >= 0 && self.k > self.m * self.n)
    }
}

/// `chi_m(k) = <-1, k>_m`: period `m + 1`, pattern `1, -1, 0, ..., 0`.
/// `m = 0` is allowed and gives `[k = 0]`.
pub fn chi(m: i64, k: i64) -> i64 {
    assert!(m >= 0, "chi needs m >= 0, got {m}");
    if k < 0 {
        return 0;
    }
    if m == 0 {
        return i64::from(k == 0);
    }
    match k.rem_euclid(m + 1) {
        0 => 1,
        1 => -1,
        _ => 0,
    }
}

/// Binomial coefficient for any integer upper index, `C(n, k) = 0` for
/// `k < 0`. Negative `n` follows upper negation.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || (n >= 0 && k > n) {
        return BigInt::zero();
    }
    if n >= 0 {
        let k = k.min(n - k);
        return falling_over_factorial(n, k);
    }
    let c = binomial(k - n - 1, k);
    if k.is_odd() {
        -c
    } else {
        c
    }
}

/// `n (n-1) ... (n-k+1) / k!`, accumulated with exact divisions.
fn falling_over_factorial(n: i64, k: i64) -> BigInt {
    let mut c = BigInt::one();
    for j in 0..k {
        c = c * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    c
}

/// Memo of computed row prefixes, keyed by `(n, m)`. A stored prefix of
/// length `L` answers every `CoeffKey` with `0 <= k < L`.
#[derive(Debug, Default)]
pub struct CoeffCache {
    rows: RwLock<HashMap<(i64, i64), Vec<BigInt>>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
}

impl CoeffCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> CacheStats {
        let entries = self.rows.read().unwrap().values().map(Vec::len).sum();
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            entries,
        }
    }

    pub fn clear(&self) {
        self.rows.write().unwrap().clear();
        self.hits.store(0, Ordering::Relaxed);
        self.misses.store(0, Ordering::Relaxed);
    }

    pub fn get(&self, key: &CoeffKey) -> Option<BigInt> {
        let rows = self.rows.read().unwrap();
        rows.get(&(key.n, key.m))
            .and_then(|row| usize::try_from(key.k).ok().and_then(|k| row.get(k)))
            .cloned()
    }

    fn cached_row(&self, n: i64, m: i64, len: usize) -> Option<Vec<BigInt>> {
        let rows = self.rows.read().unwrap();
        let row = rows.get(&(n, m))?;
        if row.len() >= len {
            return Some(row[..len].to_vec());
        }
        // A complete non-negative row extends by zeros.
        if n >= 0 && row.len() > (m * n) as usize {
            let mut out = row.clone();
            out.resize(len, BigInt::zero());
            return Some(out);
        }
        None
    }

    fn store_row(&self, n: i64, m: i64, row: &[BigInt]) {
        let mut rows = self.rows.write().unwrap();
        let slot = rows.entry((n, m)).or_default();
        if slot.len() < row.len() {
            *slot = row.to_vec();
        }
    }

    /// Prefix `row(n)[0..len]`, building and caching every intermediate
    /// row between 0 and `n` that is not already wide enough.
    fn row_prefix(&self, n: i64, m: i64, len: usize) -> Vec<BigInt> {
        if let Some(row) = self.cached_row(n, m, len) {
            return row;
        }
        // Widen the build so that nearby queries do not rebuild.
        let mut width = len.max(64).next_power_of_two();
        if n >= 0 {
            width = width.min((m * n) as usize + 1).max(len);
        }
        let step = n.signum();
        let mut current = unit_row(width);
        let mut j = 0;
        while j != n {
            j += step;
            if let Some(row) = self.cached_row(j, m, width) {
                current = row;
                continue;
            }
            current = if step > 0 {
                convolve_with_pm(&current, m as usize)
            } else {
                deconvolve_by_pm(&current, m as usize)
            };
            self.store_row(j, m, &current);
        }
        if n == 0 {
            self.store_row(0, m, &current);
        }
        current.truncate(len);
        current
    }
}

fn unit_row(width: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); width];
    row[0] = BigInt::one();
    row
}

/// `row(n) = row(n-1) * p_m`, same width.
fn convolve_with_pm(prev: &[BigInt], m: usize) -> Vec<BigInt> {
    // Running window sum of the last m + 1 entries.
    let mut out = Vec::with_capacity(prev.len());
    let mut window = BigInt::zero();
    for j in 0..prev.len() {
        window += &prev[j];
        if j > m {
            window -= &prev[j - m - 1];
        }
        out.push(window.clone());
    }
    out
}

/// Solve `row(n) = row(n-1) * p_m` for `row(n-1)`, left to right.
fn deconvolve_by_pm(row: &[BigInt], m: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(row.len());
    for j in 0..row.len() {
        let mut v = row[j].clone();
        for i in 1..=m.min(j) {
            v -= &out[j - i];
        }
        out.push(v);
    }
    out
}

fn global_cache() -> &'static CoeffCache {
    static CACHE: OnceLock<CoeffCache> = OnceLock::new();
    CACHE.get_or_init(CoeffCache::new)
}

/// Direct extraction `[t^k] p_m(t)^n` from the series ring.
pub fn coeff_by_series(key: CoeffKey) -> BigInt {
    if key.is_structural_zero() {
        return BigInt::zero();
    }
    let k = key.k as usize;
    IntSeries::geometric_poly(key.m as usize, k)
        .pow(key.n)
        .expect("p_m has unit constant term")
        .coeffs()[k]
        .clone()
}

/// Row recurrence through a caller-owned cache.
pub fn coeff_by_recurrence_in(key: CoeffKey, cache: &CoeffCache) -> BigInt {
    if key.is_structural_zero() {
        return BigInt::zero();
    }
    if let Some(v) = cache.get(&key) {
        cache.hits.fetch_add(1, Ordering::Relaxed);
        return v;
    }
    cache.misses.fetch_add(1, Ordering::Relaxed);
    let k = key.k as usize;
    cache.row_prefix(key.n, key.m, k + 1).swap_remove(k)
}

/// Row recurrence through the process-wide cache.
pub fn coeff_by_recurrence(key: CoeffKey) -> BigInt {
    coeff_by_recurrence_in(key, global_cache())
}

/// Degree reduction `<n,k>_m = sum_i <i, k-i>_{m-1} C(n, i)`, bottoming out
/// at `<n,k>_1 = C(n,k)`.
pub fn coeff_by_binom_reduction(key: CoeffKey) -> BigInt {
    type Memo = RwLock<HashMap<(i64, i64, i64), BigInt>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);

    fn reduce(n: i64, k: i64, m: i64, memo: &Memo) -> BigInt {
        if k < 0 || (n >= 0 && k > m * n) {
            return BigInt::zero();
        }
        if m == 1 {
            return binomial(n, k);
        }
        // Only non-negative upper indices recur, so only those are memoized.
        if n >= 0 {
            if let Some(v) = memo.read().unwrap().get(&(n, k, m)) {
                return v.clone();
            }
        }
        let lo = Integer::div_ceil(&k, &m);
        let hi = if n >= 0 { k.min(n) } else { k };
        let mut sum = BigInt::zero();
        // C(n, i) built incrementally; valid for negative n as well.
        let mut c = falling_over_factorial(n, lo);
        for i in lo..=hi {
            let inner = reduce(i, k - i, m - 1, memo);
            if !inner.is_zero() {
                sum += inner * &c;
            }
            c = c * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        if n >= 0 {
            memo.write().unwrap().insert((n, k, m), sum.clone());
        }
        sum
    }

    reduce(key.n, key.k, key.m, memo)
}

/// The default algorithm (row recurrence, cached).
pub fn coeff(key: CoeffKey) -> BigInt {
    coeff_by_recurrence(key)
}

/// `<n, k>_m` with `m = 0` read as the constant polynomial `1`, so that
/// `<n, k>_0 = [k = 0]`. Several identities lower the degree by one and
/// land there when `m = 1`.
pub fn coeff_any_degree(n: i64, k: i64, m: i64) -> BigInt {
    assert!(m >= 0, "degree must be non-negative, got {m}");
    if m == 0 {
        return BigInt::from(i64::from(k == 0));
    }
    coeff(CoeffKey { n, k, m })
}

/// `[<n,0>_m, ..., <n,L>_m]` with `L = mn` when `n >= 0` and `mn <= limit`,
/// otherwise `L = limit`.
pub fn row(n: i64, m: i64, limit: usize) -> Result<Vec<BigInt>> {
    if m < 1 {
        return Err(Error::InvalidDegree(m));
    }
    let last = if n >= 0 && ((m * n) as usize) <= limit {
        (m * n) as usize
    } else {
        limit
    };
    Ok(global_cache().row_prefix(n, m, last + 1))
}

/// Exactly `len` entries `<n, 0>_m ..= <n, len-1>_m`, zero-padded past the
/// support; `m = 0` is read as in [`coeff_any_degree`].
pub fn row_window(n: i64, m: i64, len: usize) -> Vec<BigInt> {
    assert!(m >= 0, "degree must be non-negative, got {m}");
    if len == 0 {
        return Vec::new();
    }
    if m == 0 {
        return unit_row(len);
    }
    let mut out = global_cache().row_prefix(n, m, len);
    out.resize(len, BigInt::zero());
    out
}

/// Factorial expansion: sum over tuples `(n_1, ..., n_m)` with
/// `sum n_i <= n` and `sum i n_i = k` of `n! / ((n - sum n_i)! n_1! ... n_m!)`.
/// Exponential time; a reference for tests only.
pub fn multinomial_oracle(n: i64, k: i64, m: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeN(n));
    }
    if m < 1 {
        return Err(Error::InvalidDegree(m));
    }
    Ok(multinomial_sum(n, k, m, n))
}

/// Same enumeration with the tuple total capped at `max_total` instead of
/// `n`.
pub(crate) fn multinomial_sum(n: i64, k: i64, m: i64, max_total: i64) -> BigInt {
    if k < 0 || max_total < 0 {
        return BigInt::zero();
    }
    let mut fact = vec![BigInt::one()];
    for i in 1..=n {
        let next = &fact[(i - 1) as usize] * BigInt::from(i);
        fact.push(next);
    }

    struct Walk<'a> {
        n: i64,
        max_total: i64,
        fact: &'a [BigInt],
        sum: BigInt,
    }

    impl Walk<'_> {
        // Chooses n_i for i = part, part-1, ..., 1; `denom` carries the
        // product of the chosen factorials.
        fn go(&mut self, part: i64, k_left: i64, used: i64, denom: BigInt) {
            if part == 0 {
                if k_left == 0 {
                    let rest = &self.fact[(self.n - used) as usize];
                    self.sum += &self.fact[self.n as usize] / (denom * rest);
                }
                return;
            }
            let cap = (k_left / part).min(self.max_total.min(self.n) - used);
            for c in 0..=cap {
                let d = &denom * &self.fact[c as usize];
                self.go(part - 1, k_left - part * c, used + c, d);
            }
        }
    }

    let mut walk = Walk {
        n,
        max_total,
        fact: &fact,
        sum: BigInt::zero(),
    };
    walk.go(m, k, 0, BigInt::one());
    walk.sum
}
