//! Exact arithmetic kernel.
//!
//! Every value in this crate is an exact rational or a dense polynomial in a
//! single symbolic parameter `ℓ` with rational coefficients. Real parameters
//! of the identities are instantiated as rationals.

mod binomial;
mod polynomial;

pub use binomial::{binomial, factorial, falling_factorial, finite_difference, BinomialArg};
pub use polynomial::Polynomial;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The rational `num/den`.
///
/// # Panics
/// If `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for a non-negative integer exponent.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `4^n` as a rational.
pub fn four_pow(n: u32) -> Rational {
    Rational::from_integer(BigInt::one() << (2 * n as usize))
}

/// `(-1)^k`.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
