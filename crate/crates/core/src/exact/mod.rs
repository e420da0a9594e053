//! Exact scalars and polynomials.
//!
//! [`Rat`] is an arbitrary-precision rational, always kept in lowest terms
//! with a positive denominator. [`UPoly`] is a dense univariate polynomial
//! and [`MPoly`] a sparse multivariate polynomial over a fixed, named
//! variable list. [`symmetric`] holds the complete homogeneous symmetric
//! polynomials and the divided-difference sums built on them.

mod interpolate;
mod mpoly;
pub mod symmetric;
mod upoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use interpolate::{interpolate, interpolate_vector};
pub use mpoly::{Exponents, MPoly};
pub use symmetric::{alternating_binomial_sum, divided_difference_sum, hk, hk_poly, hk_row};
pub use upoly::UPoly;

/// Arbitrary-precision rational number in lowest terms.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_to_rat(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Returns the integer value of `q`, or `None` when `q` has a denominator.
pub fn rat_to_int(q: &Rat) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Exact integer quotient `a / b`, failing when `b` does not divide `a`.
pub fn exact_div(a: &BigInt, b: &BigInt, what: &str) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::domain(format!("{what}: division by zero")));
    }
    let (q, r) = a.div_rem(b);
    if !r.is_zero() {
        return Err(Error::invariant(format!("{what}: {b} does not divide {a}")));
    }
    Ok(q)
}

/// Greatest common divisor of a sequence of integers (nonnegative; zero for
/// an empty or all-zero sequence).
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
        .abs()
}
