//! Exact polynomial (extended binomial) coefficients
//! `<n, k>_m = [t^k] (1 + t + ... + t^m)^n` for every integer `n`, their
//! column and diagonal generating functions, and machine checks of the
//! identities they satisfy.
//!
//! Arithmetic kernels are generic over [`Scalar`]; the aliases below fix the
//! rings used throughout the crate.

pub mod cli;
pub mod coefficients;
pub mod error;
pub mod genfun;
pub mod identities;
pub mod poly;
pub mod quadrature;
pub mod scalar;
pub mod series;
pub mod trinomial;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;

pub use coefficients::{chi, coeff, CoeffCache, CoeffKey};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use series::TruncatedSeries;

/// Exact series over the rationals.
pub type Series = TruncatedSeries<BigRational>;
/// Exact series over the integers (inversion limited to `±1` constant terms).
pub type IntSeries = TruncatedSeries<BigInt>;
/// Floating-point series, for numeric spot checks.
pub type FloatSeries = TruncatedSeries<f64>;
pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRational>;
/// `a + b i` with arbitrary-precision parts.
pub type GaussianInt = Complex<BigInt>;
