//! Exact rational scalars and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats as `"p/q"`, including `"p/1"` for integers.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`. The result is normalised, but a
/// zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |message: &str| Error::Parse {
        location: format!("rational {s:?}"),
        message: message.to_string(),
    };
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad("numerator is not an integer"))?;
    let q: BigInt = q.parse().map_err(|_| bad("denominator is not an integer"))?;
    if q.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(p, q))
}
