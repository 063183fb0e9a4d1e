//! Exact rational scalars.
//!
//! Every quantity in this crate is an arbitrary-precision rational; there is
//! no floating point anywhere. `num_rational::BigRational` already maintains
//! the invariants we need (lowest terms, positive denominator, value
//! equality), so the scalar type is an alias plus the textual encoding used
//! by the JSON interfaces: `"p"` or `"p/q"`, decimal-free.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms.
pub type Scalar = num_rational::BigRational;

/// Scalar from an integer.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Scalar `p/q`. Panics if `q == 0`; intended for literals in code and tests.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a decimal-free rational string: `"p"` or `"p/q"` with an optional
/// leading sign on `p`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let p: BigInt = num.trim().parse().map_err(|_| bad())?;
    let q: BigInt = match den {
        Some(q) => q.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Scalar::new(p, q))
}

/// Formats a scalar as `"p"` or `"p/q"`; the exact inverse of
/// [`parse_scalar`] on canonical values.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True when `x` is strictly positive.
pub fn is_positive(x: &Scalar) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7", "5/10"] {
            let v = parse_scalar(s).unwrap();
            let canon = format_scalar(&v);
            assert_eq!(parse_scalar(&canon).unwrap(), v);
        }
        // reduction to lowest terms and sign normalization
        assert_eq!(format_scalar(&parse_scalar("5/10").unwrap()), "1/2");
        assert_eq!(format_scalar(&parse_scalar("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_malformed_input() {
        for s in ["", "1.5", "1/0", "a/b", "1//2", "/2"] {
            assert!(parse_scalar(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn ratio_reduces() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(-1, -2), ratio(1, 2));
    }
}
