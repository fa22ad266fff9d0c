//! The coordinate plane over the rationals, AG(2,Q).

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::incidence::{AffinePlane, Meet, SeedRng};
use crate::rational::{format_rational, q, sample_rational, to_f64, Q};

use super::DEFAULT_SAMPLE_BOUND;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoint {
    pub x: Q,
    pub y: Q,
}

impl QPoint {
    pub fn new(x: Q, y: Q) -> Self {
        QPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        QPoint { x: q(x), y: q(y) }
    }

    pub fn offset(&self, dx: i64, dy: i64) -> Self {
        QPoint { x: &self.x + q(dx), y: &self.y + q(dy) }
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", format_rational(&self.x), format_rational(&self.y))
    }
}

impl Serialize for QPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&format_rational(&self.x))?;
        t.serialize_element(&format_rational(&self.y))?;
        t.end()
    }
}

/// `x = c` or `y = slope·x + intercept` (interpreted per model).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QLine {
    Vertical { x: Q },
    Sloped { slope: Q, intercept: Q },
}

impl QLine {
    pub fn vertical(x: Q) -> Self {
        QLine::Vertical { x }
    }

    pub fn sloped(slope: Q, intercept: Q) -> Self {
        QLine::Sloped { slope, intercept }
    }
}

impl fmt::Display for QLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QLine::Vertical { x } => write!(f, "x={}", format_rational(x)),
            QLine::Sloped { slope, intercept } if intercept.is_negative() => {
                write!(f, "y={}x-{}", format_rational(slope), format_rational(&-intercept))
            }
            QLine::Sloped { slope, intercept } => {
                write!(f, "y={}x+{}", format_rational(slope), format_rational(intercept))
            }
        }
    }
}

/// Solves `[a11 a12; a21 a22]·[u v]ᵀ = [r1 r2]ᵀ` by Cramer's rule.
pub(crate) fn solve2(a11: &Q, a12: &Q, a21: &Q, a22: &Q, r1: &Q, r2: &Q) -> Option<(Q, Q)> {
    let det = a11 * a22 - a12 * a21;
    if det.is_zero() {
        return None;
    }
    let u = (r1 * a22 - a12 * r2) / &det;
    let v = (a11 * r2 - r1 * a21) / &det;
    Some((u, v))
}

/// AG(2,Q): the classical Desarguesian coordinate plane.
#[derive(Debug, Clone)]
pub struct RationalPlane {
    sample_bound: i64,
}

impl Default for RationalPlane {
    fn default() -> Self {
        RationalPlane { sample_bound: DEFAULT_SAMPLE_BOUND }
    }
}

impl RationalPlane {
    pub fn new() -> Self {
        Self::default()
    }

    /// Bound on numerators and denominators of sampled coordinates.
    pub fn with_sample_bound(sample_bound: i64) -> Self {
        RationalPlane { sample_bound: sample_bound.max(1) }
    }
}

pub(crate) fn continuous_aux_candidates(origin: &QPoint) -> Vec<QPoint> {
    vec![origin.offset(0, 1), origin.offset(1, 0), origin.offset(1, 1)]
}

impl AffinePlane for RationalPlane {
    type Point = QPoint;
    type Line = QLine;

    fn model_id(&self) -> String {
        "rational".into()
    }

    fn owns_point(&self, _p: &QPoint) -> bool {
        true
    }

    fn owns_line(&self, _l: &QLine) -> bool {
        true
    }

    fn on_line(&self, p: &QPoint, l: &QLine) -> bool {
        match l {
            QLine::Vertical { x } => &p.x == x,
            QLine::Sloped { slope, intercept } => p.y == slope * &p.x + intercept,
        }
    }

    fn line_through(&self, p: &QPoint, q: &QPoint) -> Result<QLine> {
        if p.x == q.x {
            return Ok(QLine::vertical(p.x.clone()));
        }
        let slope = (&q.y - &p.y) / (&q.x - &p.x);
        let intercept = &p.y - &slope * &p.x;
        Ok(QLine::sloped(slope, intercept))
    }

    fn parallel_line(&self, p: &QPoint, l: &QLine) -> Result<QLine> {
        Ok(match l {
            QLine::Vertical { .. } => QLine::vertical(p.x.clone()),
            QLine::Sloped { slope, .. } => QLine::sloped(slope.clone(), &p.y - slope * &p.x),
        })
    }

    fn intersect(&self, l: &QLine, m: &QLine) -> Result<Meet<QPoint>> {
        Ok(match (l, m) {
            (QLine::Vertical { .. }, QLine::Vertical { .. }) => Meet::Parallel,
            (QLine::Vertical { x }, QLine::Sloped { slope, intercept })
            | (QLine::Sloped { slope, intercept }, QLine::Vertical { x }) => {
                Meet::Point(QPoint::new(x.clone(), slope * x + intercept))
            }
            (
                QLine::Sloped { slope: m1, intercept: b1 },
                QLine::Sloped { slope: m2, intercept: b2 },
            ) => {
                if m1 == m2 {
                    Meet::Parallel
                } else {
                    let x = (b2 - b1) / (m1 - m2);
                    let y = m1 * &x + b1;
                    Meet::Point(QPoint::new(x, y))
                }
            }
        })
    }

    fn sample_point(&self, rng: &mut SeedRng) -> QPoint {
        QPoint::new(sample_rational(rng, self.sample_bound), sample_rational(rng, self.sample_bound))
    }

    fn sample_point_on(&self, l: &QLine, rng: &mut SeedRng) -> QPoint {
        let t = sample_rational(rng, self.sample_bound);
        match l {
            QLine::Vertical { x } => QPoint::new(x.clone(), t),
            QLine::Sloped { slope, intercept } => {
                let y = slope * &t + intercept;
                QPoint::new(t, y)
            }
        }
    }

    fn lines_through_pair(&self, p: &QPoint, q: &QPoint) -> Vec<QLine> {
        let mut out = Vec::new();
        if p.x == q.x {
            out.push(QLine::vertical(p.x.clone()));
        }
        let one = Q::one();
        if let Some((m, b)) = solve2(&p.x, &one, &q.x, &one, &p.y, &q.y) {
            out.push(QLine::sloped(m, b));
        }
        out
    }

    fn aux_candidates(&self, origin: &QPoint) -> Vec<QPoint> {
        continuous_aux_candidates(origin)
    }

    fn coords(&self, p: &QPoint) -> Option<(Q, Q)> {
        Some((p.x.clone(), p.y.clone()))
    }

    fn point_at(&self, x: &Q, y: &Q) -> Result<QPoint> {
        Ok(QPoint::new(x.clone(), y.clone()))
    }

    fn line_polyline(&self, l: &QLine, xs: (f64, f64), ys: (f64, f64)) -> Option<Vec<(f64, f64)>> {
        Some(match l {
            QLine::Vertical { x } => vec![(to_f64(x), ys.0), (to_f64(x), ys.1)],
            QLine::Sloped { slope, intercept } => {
                let (m, b) = (to_f64(slope), to_f64(intercept));
                vec![(xs.0, m * xs.0 + b), (xs.1, m * xs.1 + b)]
            }
        })
    }
}

/// Draws a coordinate uniformly from a small signed range; used by
/// directed searches that need points on a chosen side of an axis.
pub(crate) fn sample_signed<R: Rng + ?Sized>(rng: &mut R, bound: i64, positive: bool) -> Q {
    let n = rng.gen_range(1..=bound);
    let d = rng.gen_range(1..=bound);
    let v = crate::rational::q_frac(n, d);
    if positive {
        v
    } else {
        -v
    }
}
