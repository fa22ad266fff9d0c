//! Text syntax for points and model selectors.
//!
//! Points are written `x,y` where each coordinate is an integer or an exact
//! fraction `n/d`, e.g. `3,-1/2`. Models are `ag2:<p>`, `rational` or
//! `moulton`.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::rational::{format_rational, parse_rational, Q};

/// Longest accepted point literal.
const MAX_POINT_LEN: usize = 1024;

pub fn parse_point(s: &str) -> Result<(Q, Q), ParseError> {
    if s.len() > MAX_POINT_LEN {
        return Err(ParseError::PointSyntax(format!("{}...", s.chars().take(32).collect::<String>())));
    }
    let t = s.trim();
    let t = t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(t);
    let (x, y) = t.split_once(',').ok_or_else(|| ParseError::PointSyntax(s.to_string()))?;
    if y.contains(',') {
        return Err(ParseError::PointSyntax(s.to_string()));
    }
    Ok((parse_rational(x)?, parse_rational(y)?))
}

pub fn format_point(x: &Q, y: &Q) -> String {
    format!("{},{}", format_rational(x), format_rational(y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelSpec {
    /// AG(2,p); primality is checked when the plane is built.
    Finite(u64),
    Rational,
    Moulton,
}

impl FromStr for ModelSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim() {
            "rational" => Ok(ModelSpec::Rational),
            "moulton" => Ok(ModelSpec::Moulton),
            other => {
                let order = other.strip_prefix("ag2:").ok_or_else(|| ParseError::UnknownModel(s.to_string()))?;
                if order.is_empty() || order.len() > 19 || !order.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(ParseError::Order(s.to_string()));
                }
                order.parse().map(ModelSpec::Finite).map_err(|_| ParseError::Order(s.to_string()))
            }
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Finite(p) => write!(f, "ag2:{p}"),
            ModelSpec::Rational => f.write_str("rational"),
            ModelSpec::Moulton => f.write_str("moulton"),
        }
    }
}

pub fn parse_model(s: &str) -> Result<ModelSpec, ParseError> {
    s.parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};
    use proptest::prelude::*;

    #[test]
    fn points() {
        assert_eq!(parse_point("2,0").unwrap(), (q(2), q(0)));
        assert_eq!(parse_point("-1/2, 3").unwrap(), (q_frac(-1, 2), q(3)));
        assert_eq!(parse_point("(1,-2)").unwrap(), (q(1), q(-2)));
        for bad in ["", "1", "1,2,3", "a,b", "1;2", "1/0,1", ","] {
            assert!(parse_point(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn models() {
        assert_eq!(parse_model("ag2:5").unwrap(), ModelSpec::Finite(5));
        assert_eq!(parse_model("ag2:4").unwrap(), ModelSpec::Finite(4));
        assert_eq!(parse_model("rational").unwrap(), ModelSpec::Rational);
        assert_eq!(parse_model("moulton").unwrap(), ModelSpec::Moulton);
        for bad in ["ag2:", "ag2:-3", "ag2:x", "ag3:5", "euclid", "ag2:99999999999999999999"] {
            assert!(parse_model(bad).is_err(), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn point_format_round_trips(a in -10_000i64..10_000, b in 1i64..500, c in -10_000i64..10_000, d in 1i64..500) {
            let (x, y) = (q_frac(a, b), q_frac(c, d));
            prop_assert_eq!(parse_point(&format_point(&x, &y)).unwrap(), (x, y));
        }

        #[test]
        fn parse_point_never_panics(s in "\\PC{0,40}") {
            let _ = parse_point(&s);
        }

        #[test]
        fn model_display_round_trips(p in 0u64..1_000_000) {
            let m = ModelSpec::Finite(p);
            prop_assert_eq!(parse_model(&m.to_string()).unwrap(), m);
        }
    }
}
