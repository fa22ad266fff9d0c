//! The coordinate plane AG(2,p) over the prime field Z_p.

use std::fmt;

use rand::Rng;
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use super::MAX_FINITE_ORDER;
use crate::error::{GeometryError, Result};
use crate::incidence::{AffinePlane, Meet, SeedRng};
use crate::rational::{q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitePoint {
    order: u32,
    x: u32,
    y: u32,
}

impl FinitePoint {
    pub fn x(&self) -> u32 {
        self.x
    }
    pub fn y(&self) -> u32 {
        self.y
    }
}

impl fmt::Display for FinitePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for FinitePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiniteLineKind {
    /// `y = slope·x + intercept`
    Sloped { slope: u32, intercept: u32 },
    /// `x = c`
    Vertical { x: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteLine {
    order: u32,
    kind: FiniteLineKind,
}

impl FiniteLine {
    pub fn kind(&self) -> FiniteLineKind {
        self.kind
    }

    fn index(&self) -> usize {
        let p = self.order as usize;
        match self.kind {
            FiniteLineKind::Sloped { slope, intercept } => slope as usize * p + intercept as usize,
            FiniteLineKind::Vertical { x } => p * p + x as usize,
        }
    }
}

impl fmt::Display for FiniteLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FiniteLineKind::Sloped { slope, intercept } => write!(f, "y={slope}x+{intercept}"),
            FiniteLineKind::Vertical { x } => write!(f, "x={x}"),
        }
    }
}

/// AG(2,p) for prime `p`, with every line's point set precomputed.
#[derive(Debug, Clone)]
pub struct FinitePlane {
    order: u32,
    line_points: Vec<Vec<FinitePoint>>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FinitePlane {
    /// Builds AG(2,p). Orders above [`MAX_FINITE_ORDER`] are rejected.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p > MAX_FINITE_ORDER as u64 {
            return Err(GeometryError::InvalidOrder(p));
        }
        let order = p as u32;
        let mut plane = FinitePlane { order, line_points: Vec::new() };
        let lines = plane.all_lines();
        plane.line_points = lines
            .iter()
            .map(|l| match l.kind {
                FiniteLineKind::Sloped { slope, intercept } => (0..order)
                    .map(|x| plane.pt(x, plane.add(plane.mul(slope, x), intercept)))
                    .collect(),
                FiniteLineKind::Vertical { x } => (0..order).map(|y| plane.pt(x, y)).collect(),
            })
            .collect();
        Ok(plane)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The point `(x mod p, y mod p)`.
    pub fn pt(&self, x: u32, y: u32) -> FinitePoint {
        FinitePoint { order: self.order, x: x % self.order, y: y % self.order }
    }

    pub fn sloped(&self, slope: u32, intercept: u32) -> FiniteLine {
        FiniteLine {
            order: self.order,
            kind: FiniteLineKind::Sloped { slope: slope % self.order, intercept: intercept % self.order },
        }
    }

    pub fn vertical(&self, x: u32) -> FiniteLine {
        FiniteLine { order: self.order, kind: FiniteLineKind::Vertical { x: x % self.order } }
    }

    fn all_lines(&self) -> Vec<FiniteLine> {
        let p = self.order;
        let mut out = Vec::with_capacity((p * p + p) as usize);
        for m in 0..p {
            for b in 0..p {
                out.push(self.sloped(m, b));
            }
        }
        for c in 0..p {
            out.push(self.vertical(c));
        }
        out
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.order as u64) as u32
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.order as u64 - b as u64) % self.order as u64) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.order as u64) as u32
    }
    fn inv(&self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.order));
        let (mut base, mut exp, mut acc) = (a as u64 % self.order as u64, self.order as u64 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.order as u64;
            }
            base = base * base % self.order as u64;
            exp >>= 1;
        }
        acc as u32
    }
}

impl AffinePlane for FinitePlane {
    type Point = FinitePoint;
    type Line = FiniteLine;

    fn model_id(&self) -> String {
        format!("ag2:{}", self.order)
    }

    fn owns_point(&self, p: &FinitePoint) -> bool {
        p.order == self.order && p.x < self.order && p.y < self.order
    }

    fn owns_line(&self, l: &FiniteLine) -> bool {
        l.order == self.order
            && match l.kind {
                FiniteLineKind::Sloped { slope, intercept } => slope < self.order && intercept < self.order,
                FiniteLineKind::Vertical { x } => x < self.order,
            }
    }

    fn on_line(&self, p: &FinitePoint, l: &FiniteLine) -> bool {
        match l.kind {
            FiniteLineKind::Sloped { slope, intercept } => p.y == self.add(self.mul(slope, p.x), intercept),
            FiniteLineKind::Vertical { x } => p.x == x,
        }
    }

    fn line_through(&self, p: &FinitePoint, q: &FinitePoint) -> Result<FiniteLine> {
        if p.x == q.x {
            return Ok(self.vertical(p.x));
        }
        let slope = self.mul(self.sub(q.y, p.y), self.inv(self.sub(q.x, p.x)));
        let intercept = self.sub(p.y, self.mul(slope, p.x));
        Ok(self.sloped(slope, intercept))
    }

    fn parallel_line(&self, p: &FinitePoint, l: &FiniteLine) -> Result<FiniteLine> {
        Ok(match l.kind {
            FiniteLineKind::Sloped { slope, .. } => self.sloped(slope, self.sub(p.y, self.mul(slope, p.x))),
            FiniteLineKind::Vertical { .. } => self.vertical(p.x),
        })
    }

    fn intersect(&self, l: &FiniteLine, m: &FiniteLine) -> Result<Meet<FinitePoint>> {
        use FiniteLineKind::*;
        Ok(match (l.kind, m.kind) {
            (Vertical { .. }, Vertical { .. }) => Meet::Parallel,
            (Vertical { x }, Sloped { slope, intercept }) | (Sloped { slope, intercept }, Vertical { x }) => {
                Meet::Point(self.pt(x, self.add(self.mul(slope, x), intercept)))
            }
            (Sloped { slope: m1, intercept: b1 }, Sloped { slope: m2, intercept: b2 }) => {
                if m1 == m2 {
                    Meet::Parallel
                } else {
                    let x = self.mul(self.sub(b2, b1), self.inv(self.sub(m1, m2)));
                    Meet::Point(self.pt(x, self.add(self.mul(m1, x), b1)))
                }
            }
        })
    }

    fn sample_point(&self, rng: &mut SeedRng) -> FinitePoint {
        self.pt(rng.gen_range(0..self.order), rng.gen_range(0..self.order))
    }

    fn sample_point_on(&self, l: &FiniteLine, rng: &mut SeedRng) -> FinitePoint {
        let pts = &self.line_points[l.index()];
        pts[rng.gen_range(0..pts.len())]
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn points(&self) -> Option<Vec<FinitePoint>> {
        let p = self.order;
        Some((0..p).flat_map(|x| (0..p).map(move |y| (x, y))).map(|(x, y)| self.pt(x, y)).collect())
    }

    fn lines(&self) -> Option<Vec<FiniteLine>> {
        Some(self.all_lines())
    }

    fn points_on(&self, l: &FiniteLine) -> Option<Vec<FinitePoint>> {
        self.owns_line(l).then(|| self.line_points[l.index()].clone())
    }

    fn parallel_classes(&self) -> Option<Vec<Vec<FiniteLine>>> {
        let p = self.order;
        let mut classes: Vec<Vec<FiniteLine>> =
            (0..p).map(|m| (0..p).map(|b| self.sloped(m, b)).collect()).collect();
        classes.push((0..p).map(|c| self.vertical(c)).collect());
        Some(classes)
    }

    fn coords(&self, p: &FinitePoint) -> Option<(Q, Q)> {
        Some((q(p.x as i64), q(p.y as i64)))
    }

    fn point_at(&self, x: &Q, y: &Q) -> Result<FinitePoint> {
        use num_traits::ToPrimitive;
        let coord = |v: &Q| {
            v.is_integer()
                .then(|| v.to_integer().to_u32())
                .flatten()
                .filter(|c| *c < self.order)
        };
        match (coord(x), coord(y)) {
            (Some(a), Some(b)) => Ok(self.pt(a, b)),
            _ => Err(GeometryError::NotAPoint(
                format!("{},{}", crate::rational::format_rational(x), crate::rational::format_rational(y)),
                self.model_id(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_follow_order() {
        for (p, pts, lines, classes) in [(2u64, 4, 6, 3), (3, 9, 12, 4), (5, 25, 30, 6), (7, 49, 56, 8)] {
            let plane = FinitePlane::new(p).unwrap();
            assert_eq!(plane.points().unwrap().len(), pts);
            assert_eq!(plane.lines().unwrap().len(), lines);
            let cls = plane.parallel_classes().unwrap();
            assert_eq!(cls.len(), classes);
            assert!(cls.iter().all(|c| c.len() == p as usize));
            for l in plane.lines().unwrap() {
                assert_eq!(plane.points_on(&l).unwrap().len(), p as usize);
            }
        }
    }

    #[test]
    fn parallel_classes_partition_points() {
        let plane = FinitePlane::new(5).unwrap();
        let all = plane.points().unwrap();
        for class in plane.parallel_classes().unwrap() {
            let mut covered: Vec<_> = class.iter().flat_map(|l| plane.points_on(l).unwrap()).collect();
            covered.sort();
            assert_eq!(covered, all);
        }
    }

    #[test]
    fn rejects_bad_orders() {
        for p in [0u64, 1, 4, 6, 9, 15, 131] {
            assert_eq!(FinitePlane::new(p).unwrap_err(), GeometryError::InvalidOrder(p));
        }
        assert!(FinitePlane::new(13).is_ok());
        assert!(FinitePlane::new(MAX_FINITE_ORDER as u64).is_ok());
    }

    #[test]
    fn foreign_handles_are_rejected() {
        let p3 = FinitePlane::new(3).unwrap();
        let p5 = FinitePlane::new(5).unwrap();
        let foreign = p5.pt(4, 4);
        let l = p3.sloped(0, 0);
        assert!(matches!(p3.incident(&foreign, &l), Err(GeometryError::ModelMismatch { .. })));
        assert!(matches!(p3.parallel_through(&p3.pt(0, 0), &p5.vertical(1)), Err(GeometryError::ModelMismatch { .. })));
    }

    #[test]
    fn point_at_requires_in_range_integers() {
        let plane = FinitePlane::new(3).unwrap();
        assert_eq!(plane.point_at(&q(2), &q(1)).unwrap(), plane.pt(2, 1));
        assert!(plane.point_at(&q(3), &q(0)).is_err());
        assert!(plane.point_at(&crate::rational::q_frac(1, 2), &q(0)).is_err());
        assert!(plane.point_at(&q(-1), &q(0)).is_err());
    }
}
