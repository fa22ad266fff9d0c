//! The Moulton plane over the rationals.
//!
//! Lines are the verticals `x = c`, the straight lines `y = m·x + b` with
//! `m >= 0`, and the bent lines with `m < 0`, which follow `y = m·x + b` for
//! `x <= 0` and `y = 2m·x + b` for `x > 0`. Parallel classes are the
//! verticals and, for non-vertical lines, the slope parameter `m`. The plane
//! satisfies the affine axioms but not Desargues' axiom.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::Result;
use crate::incidence::{AffinePlane, Meet, SeedRng};
use crate::rational::{format_rational, q, sample_rational, to_f64, Q};

use super::rational::{continuous_aux_candidates, solve2, QLine, QPoint};
use super::DEFAULT_SAMPLE_BOUND;

/// A Moulton line; the slope parameter is the left-hand slope.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoultonLine(pub QLine);

impl MoultonLine {
    pub fn vertical(x: Q) -> Self {
        MoultonLine(QLine::vertical(x))
    }

    pub fn sloped(slope: Q, intercept: Q) -> Self {
        MoultonLine(QLine::sloped(slope, intercept))
    }

    pub fn is_bent(&self) -> bool {
        matches!(&self.0, QLine::Sloped { slope, .. } if slope.is_negative())
    }
}

impl fmt::Display for MoultonLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            QLine::Vertical { x } => write!(f, "x={}", format_rational(x)),
            QLine::Sloped { slope, intercept } => write!(
                f,
                "{}(m={},b={})",
                if slope.is_negative() { "bent" } else { "straight" },
                format_rational(slope),
                format_rational(intercept)
            ),
        }
    }
}

/// Effective slope of parameter `m` at abscissa `x`.
fn effective_slope(m: &Q, x: &Q) -> Q {
    if m.is_negative() && x.is_positive() {
        m * q(2)
    } else {
        m.clone()
    }
}

/// `y` of the non-vertical Moulton line `(m, b)` at `x`.
pub fn moulton_eval(m: &Q, b: &Q, x: &Q) -> Q {
    effective_slope(m, x) * x + b
}

#[derive(Debug, Clone)]
pub struct MoultonPlane {
    sample_bound: i64,
}

impl Default for MoultonPlane {
    fn default() -> Self {
        MoultonPlane { sample_bound: DEFAULT_SAMPLE_BOUND }
    }
}

impl MoultonPlane {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_sample_bound(sample_bound: i64) -> Self {
        MoultonPlane { sample_bound: sample_bound.max(1) }
    }

    pub fn sample_bound(&self) -> i64 {
        self.sample_bound
    }

    /// The unique Moulton line through two distinct points.
    pub fn moulton_join(&self, p: &QPoint, other: &QPoint) -> MoultonLine {
        if p.x == other.x {
            return MoultonLine::vertical(p.x.clone());
        }
        let (l, r) = if p.x < other.x { (p, other) } else { (other, p) };
        let m0 = (&r.y - &l.y) / (&r.x - &l.x);
        if !m0.is_negative() {
            let b = &l.y - &m0 * &l.x;
            return MoultonLine::sloped(m0, b);
        }
        if !l.x.is_positive() && !r.x.is_positive() {
            // both on the closed left side: the parameter is the slope itself
            let b = &l.y - &m0 * &l.x;
            return MoultonLine::sloped(m0, b);
        }
        if l.x.is_positive() {
            // both strictly right: effective slope 2m
            let b = &l.y - &m0 * &l.x;
            return MoultonLine::sloped(m0 / q(2), b);
        }
        // straddling the bend: y_l = m·x_l + b, y_r = 2m·x_r + b
        let m = (&r.y - &l.y) / (q(2) * &r.x - &l.x);
        let b = &l.y - &m * &l.x;
        MoultonLine::sloped(m, b)
    }
}

impl AffinePlane for MoultonPlane {
    type Point = QPoint;
    type Line = MoultonLine;

    fn model_id(&self) -> String {
        "moulton".into()
    }

    fn owns_point(&self, _p: &QPoint) -> bool {
        true
    }

    fn owns_line(&self, _l: &MoultonLine) -> bool {
        true
    }

    fn on_line(&self, p: &QPoint, l: &MoultonLine) -> bool {
        match &l.0 {
            QLine::Vertical { x } => &p.x == x,
            QLine::Sloped { slope, intercept } => p.y == moulton_eval(slope, intercept, &p.x),
        }
    }

    fn line_through(&self, p: &QPoint, q: &QPoint) -> Result<MoultonLine> {
        Ok(self.moulton_join(p, q))
    }

    fn parallel_line(&self, p: &QPoint, l: &MoultonLine) -> Result<MoultonLine> {
        Ok(match &l.0 {
            QLine::Vertical { .. } => MoultonLine::vertical(p.x.clone()),
            QLine::Sloped { slope, .. } => {
                let b = &p.y - effective_slope(slope, &p.x) * &p.x;
                MoultonLine::sloped(slope.clone(), b)
            }
        })
    }

    fn intersect(&self, l: &MoultonLine, m: &MoultonLine) -> Result<Meet<QPoint>> {
        Ok(match (&l.0, &m.0) {
            (QLine::Vertical { .. }, QLine::Vertical { .. }) => Meet::Parallel,
            (QLine::Vertical { x }, QLine::Sloped { slope, intercept })
            | (QLine::Sloped { slope, intercept }, QLine::Vertical { x }) => {
                Meet::Point(QPoint::new(x.clone(), moulton_eval(slope, intercept, x)))
            }
            (
                QLine::Sloped { slope: m1, intercept: b1 },
                QLine::Sloped { slope: m2, intercept: b2 },
            ) => {
                if m1 == m2 {
                    return Ok(Meet::Parallel);
                }
                // left branch, x <= 0
                let x = (b2 - b1) / (m1 - m2);
                if !x.is_positive() {
                    let y = m1 * &x + b1;
                    return Ok(Meet::Point(QPoint::new(x, y)));
                }
                // right branch, x > 0
                let (s1, s2) = (effective_slope(m1, &Q::one()), effective_slope(m2, &Q::one()));
                if s1 != s2 {
                    let x = (b2 - b1) / (&s1 - &s2);
                    if x.is_positive() {
                        let y = &s1 * &x + b1;
                        return Ok(Meet::Point(QPoint::new(x, y)));
                    }
                }
                // distinct slope parameters always cross exactly once
                unreachable!("Moulton lines {l} and {m} with distinct slopes do not meet")
            }
        })
    }

    fn sample_point(&self, rng: &mut SeedRng) -> QPoint {
        QPoint::new(sample_rational(rng, self.sample_bound), sample_rational(rng, self.sample_bound))
    }

    fn sample_point_on(&self, l: &MoultonLine, rng: &mut SeedRng) -> QPoint {
        let t = sample_rational(rng, self.sample_bound);
        match &l.0 {
            QLine::Vertical { x } => QPoint::new(x.clone(), t),
            QLine::Sloped { slope, intercept } => {
                let y = moulton_eval(slope, intercept, &t);
                QPoint::new(t, y)
            }
        }
    }

    /// Solves each line family separately: verticals, straight lines
    /// (`m >= 0`), and bent lines (`m < 0`) through the piecewise system.
    fn lines_through_pair(&self, p: &QPoint, q: &QPoint) -> Vec<MoultonLine> {
        let mut out = Vec::new();
        if p.x == q.x {
            out.push(MoultonLine::vertical(p.x.clone()));
        }
        let one = Q::one();
        if let Some((m, b)) = solve2(&p.x, &one, &q.x, &one, &p.y, &q.y) {
            if !m.is_negative() {
                out.push(MoultonLine::sloped(m, b));
            }
        }
        let scale = |x: &Q| if x.is_positive() { x * crate::rational::q(2) } else { x.clone() };
        if let Some((m, b)) = solve2(&scale(&p.x), &one, &scale(&q.x), &one, &p.y, &q.y) {
            if m.is_negative() {
                out.push(MoultonLine::sloped(m, b));
            }
        }
        out.sort();
        out.dedup();
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

    fn line_polyline(&self, l: &MoultonLine, xs: (f64, f64), ys: (f64, f64)) -> Option<Vec<(f64, f64)>> {
        Some(match &l.0 {
            QLine::Vertical { x } => vec![(to_f64(x), ys.0), (to_f64(x), ys.1)],
            QLine::Sloped { slope, intercept } => {
                let (m, b) = (to_f64(slope), to_f64(intercept));
                let eval = |x: f64| if m < 0.0 && x > 0.0 { 2.0 * m * x + b } else { m * x + b };
                let mut pts = vec![(xs.0, eval(xs.0))];
                if xs.0 < 0.0 && xs.1 > 0.0 {
                    pts.push((0.0, b));
                }
                pts.push((xs.1, eval(xs.1)));
                pts
            }
        })
    }
}
