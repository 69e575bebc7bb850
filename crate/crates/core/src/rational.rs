//! Exact rational scalars used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;

/// The scalar type of every exact computation in this crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Rational from numerator and denominator.
pub fn q_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}
