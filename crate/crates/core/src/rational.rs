//! Exact rational scalars shared by the coordinate models.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::ParseError;

/// Exact rational number. No geometric predicate in this crate uses floats.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `n` or `n/d` (optional sign, decimal digits only).
pub fn parse_rational(s: &str) -> Result<Q, ParseError> {
    let err = || ParseError::Rational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let int = |t: &str| -> Result<BigInt, ParseError> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || digits.len() > 512 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        t.parse::<BigInt>().map_err(|_| err())
    };
    let n = int(num)?;
    let d = match den {
        Some(d) => int(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn format_rational(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Lossy conversion, used only by the diagram renderer.
pub fn to_f64(v: &Q) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or_else(|| if v.is_negative() { f64::MIN } else { f64::MAX })
}

/// Uniform rational with numerator in `[-bound, bound]` and denominator in `[1, bound]`.
pub fn sample_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Q {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    q_frac(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), q(3));
        assert_eq!(parse_rational("-1").unwrap(), q(-1));
        assert_eq!(parse_rational("4/6").unwrap(), q_frac(2, 3));
        assert_eq!(parse_rational("-2/-4").unwrap(), q_frac(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a", "1.5", "1//2", "--1", "/3", "3/"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&q_frac(-4, 6)), "-2/3");
        assert_eq!(format_rational(&q(7)), "7");
    }
}
