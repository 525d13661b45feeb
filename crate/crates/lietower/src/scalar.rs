//! Exact rational scalars.
//!
//! Every number in this crate is a `Scalar`: an arbitrary-precision rational
//! kept in lowest terms with a positive denominator. No floating point is
//! used anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Scalar = num_rational::BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"` or `"p/q"` exactly. Rejects zero denominators and anything
/// that is not an integer ratio.
pub fn parse_rational(text: &str) -> Result<Scalar> {
    let s = text.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = BigInt::from_str(num_str)
        .map_err(|_| Error::Parse(format!("invalid rational `{text}`")))?;
    let denom = match den_str {
        Some(d) => {
            BigInt::from_str(d).map_err(|_| Error::Parse(format!("invalid rational `{text}`")))?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    if denom.is_negative() {
        return Err(Error::Parse(format!(
            "denominator must be positive in `{text}`"
        )));
    }
    Ok(Scalar::new(numer, denom))
}

/// Canonical string form: `"p"` when the denominator is 1, `"p/q"` otherwise.
pub fn rational_string(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
