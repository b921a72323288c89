//! Exact rational arithmetic used throughout the crate.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms
//! with a positive denominator. Its `Display`/`FromStr` forms are the
//! canonical text rendering used everywhere: `"p/q"` for proper
//! fractions, a bare integer otherwise.

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact fraction: arbitrary-precision numerator over positive
/// denominator, always reduced.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational value of an unsigned count (ballot weights, voter totals).
pub fn rat_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_forms() {
        assert_eq!(ratio(26, 4).to_string(), "13/2");
        assert_eq!(ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(rat(17).to_string(), "17");
        assert_eq!("13/2".parse::<Rational>().unwrap(), ratio(13, 2));
        assert_eq!("17".parse::<Rational>().unwrap(), rat(17));
    }
}
