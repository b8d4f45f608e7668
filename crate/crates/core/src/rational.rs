//! Exact rational values and the binomial convention used by every recursion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Binomial coefficient with the out-of-range convention: zero whenever
/// `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Rational {
    Rational::from_integer(BigInt::from(binom_i128(n, k)))
}

/// Machine-word binomial for the small arguments that occur inside the
/// recursion sums. Arguments stay below 3·max_degree, far from overflow.
pub(crate) fn binom_i128(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `num/den`, or just `num` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("malformed integer `{0}`")]
    Integer(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("`{0}` is not in lowest terms with a positive denominator")]
    NotCanonical(String),
}

/// Parses the `num/den` form written by [`format_rational`]. Only canonical
/// spellings are accepted so that files round-trip byte for byte.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = parse_int(num)?;
    let Some(den) = den else {
        return Ok(Rational::from_integer(num));
    };
    let den = parse_int(den)?;
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    let value = Rational::new(num.clone(), den.clone());
    if den.is_negative() || den.is_one() || *value.numer() != num || *value.denom() != den {
        return Err(ParseRationalError::NotCanonical(s.to_string()));
    }
    Ok(value)
}

fn parse_int(s: &str) -> Result<BigInt, ParseRationalError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Integer(s.to_string()));
    }
    if (digits.len() > 1 && digits.starts_with('0')) || s == "-0" {
        return Err(ParseRationalError::Integer(s.to_string()));
    }
    BigInt::from_str(s).map_err(|_| ParseRationalError::Integer(s.to_string()))
}
