//! Exact scalar arithmetic: arbitrary-precision rationals.
//!
//! Every quantity in this crate is a [`Rational`], stored in lowest terms
//! with a positive denominator. Floats appear nowhere outside SVG rendering.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` with arbitrary-precision integer parts.
///
/// Rejects zero denominators, fractional decimal notation, and anything
/// that is not an integer on both sides of the slash. A negative
/// denominator is accepted and normalized away.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let mut parts = s.splitn(2, '/');
    let numer_str = parts.next().unwrap().trim();
    let numer: BigInt = numer_str
        .parse()
        .map_err(|_| Error::Parse(format!("`{numer_str}` is not an integer")))?;
    match parts.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(denom_str) => {
            let denom_str = denom_str.trim();
            let denom: BigInt = denom_str
                .parse()
                .map_err(|_| Error::Parse(format!("`{denom_str}` is not an integer")))?;
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Renders a rational as `"p"` (denominator one) or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact conversion to `f64`, used only when emitting figures.
pub fn to_f64(r: &Rational) -> f64 {
    let numer = r.numer();
    let denom = r.denom();
    // Good enough for plot coordinates; exact for small integers.
    let n = numer.to_string().parse::<f64>().unwrap_or(if numer.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    let d = denom.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), ratio(-2, 3));
        // negative denominator normalizes
        assert_eq!(parse_rational("3/-4").unwrap(), ratio(-3, 4));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("1/").is_err());
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format_rational(&ratio(4, 8)), "1/2");
        assert_eq!(format_rational(&int(-7)), "-7");
        assert_eq!(format_rational(&ratio(-1, 3)), "-1/3");
    }
}
