//! Exact rational coefficients.
//!
//! Every coefficient is an arbitrary-precision rational kept in canonical
//! reduced form: gcd(|numerator|, denominator) = 1 and denominator > 0.
//! `Ratio` re-establishes both invariants on every operation, so equality
//! is structural and exact and nothing ever overflows.

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// The coefficient field.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

/// Rational scalar `numer/denom`.
///
/// Panics on a zero denominator; callers that take untrusted input must
/// validate before constructing.
pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exact non-negative integer power.
pub fn pow(base: &Scalar, exp: u32) -> Scalar {
    Scalar::new(base.numer().pow(exp), base.denom().pow(exp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn construction_reduces_to_canonical_form() {
        assert_eq!(ratio(4, 6), ratio(2, 3));
        assert_eq!(ratio(1, -2), ratio(-1, 2));
        assert_eq!(ratio(-3, -9), ratio(1, 3));
        assert!(ratio(-1, 2).denom() > &BigInt::from(0));
        assert_eq!(ratio(0, 7), Scalar::zero());
    }

    #[test]
    fn arithmetic_stays_exact_at_large_magnitudes() {
        let big = Scalar::new(BigInt::from(10u8).pow(30u32), BigInt::from(3));
        let inv = big.recip();
        assert!((big * inv).is_one());
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow(&ratio(-2, 3), 3), ratio(-8, 27));
        assert_eq!(pow(&ratio(5, 7), 0), int(1));
        assert_eq!(pow(&int(-1), 4), int(1));
    }
}
