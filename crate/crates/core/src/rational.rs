//! Parsing and display of exact rationals.
//!
//! Inputs accept `p/q` and plain decimal strings. A decimal is read off
//! its literal digits (`0.25` becomes `1/4`), never through an f64
//! round trip, so the exact pipeline stays exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parse `p/q`, an integer, or a decimal literal into an exact rational.
pub fn parse_rational(input: &str) -> Result<BigRational, ParseRationalError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let malformed = || ParseRationalError::Malformed(input.to_string());

    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_digits(num).ok_or_else(malformed)?;
        let den = parse_digits(den).ok_or_else(malformed)?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(input.to_string()));
        }
        BigRational::new(num, den)
    } else if let Some((int_part, frac_part)) = body.split_once('.') {
        // Digits to the right of the point contribute frac / 10^len.
        let int_part = if int_part.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(int_part).ok_or_else(malformed)?
        };
        if frac_part.is_empty() {
            return Err(malformed());
        }
        let frac = parse_digits(frac_part).ok_or_else(malformed)?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        BigRational::new(int_part * &scale + frac, scale)
    } else {
        BigRational::from_integer(parse_digits(body).ok_or_else(malformed)?)
    };
    Ok(if sign < 0 { -value } else { value })
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Render in lowest terms: `p/q`, or just `p` for integers.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Rational to nearest f64.
pub fn rational_to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("3/4"), Ok(rat(3, 4)));
        assert_eq!(parse_rational("-3/2"), Ok(rat(-3, 2)));
        assert_eq!(parse_rational("+6/4"), Ok(rat(3, 2)));
    }

    #[test]
    fn parses_integers_and_decimals() {
        assert_eq!(parse_rational("17"), Ok(rat(17, 1)));
        assert_eq!(parse_rational("-2"), Ok(rat(-2, 1)));
        assert_eq!(parse_rational("0.25"), Ok(rat(1, 4)));
        assert_eq!(parse_rational("-1.5"), Ok(rat(-3, 2)));
        assert_eq!(parse_rational(".5"), Ok(rat(1, 2)));
        // Literal digits, not float round-trip.
        assert_eq!(parse_rational("0.1"), Ok(rat(1, 10)));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "1/", "/2", "1//2", "1.2.3", "1.", "--3", "1e5"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
        assert_eq!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator("1/0".into()))
        );
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format_rational(&rat(36, 1)), "36");
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat(2, 4)), "1/2");
        assert_eq!(format_rational(&rat(0, 7)), "0");
    }

    #[test]
    fn round_trips_through_parse() {
        for s in ["3/4", "-3/2", "36", "0", "-1/1000000000000000000000"] {
            let v = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&v)).unwrap(), v);
        }
    }
}
