//! Finite incidence structures given by explicit point sets.
//!
//! Nothing is assumed about the structure: `join`, `parallel_through` and
//! `meet` are answered by search and fail when the axioms they rely on do
//! not hold. Used for fixtures and as a brute-force cross-check of the
//! coordinate models.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::incidence::{AffinePlane, Meet, SeedRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExplicitPoint(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExplicitLine(pub u32);

impl fmt::Display for ExplicitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

impl fmt::Display for ExplicitLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

#[derive(Debug, Clone)]
pub struct ExplicitPlane {
    name: String,
    point_count: u32,
    lines: Vec<BTreeSet<u32>>,
}

impl ExplicitPlane {
    /// Points are `0..point_count`; each line is the set of its point ids.
    pub fn new(name: impl Into<String>, point_count: u32, lines: Vec<Vec<u32>>) -> Result<Self> {
        let lines: Vec<BTreeSet<u32>> = lines.into_iter().map(|l| l.into_iter().collect()).collect();
        if lines.iter().flatten().any(|&p| p >= point_count) {
            return Err(GeometryError::DegenerateInput("line references an unknown point"));
        }
        Ok(ExplicitPlane { name: name.into(), point_count, lines })
    }

    /// Copies the point sets of any finite model.
    pub fn from_model<M: AffinePlane>(plane: &M) -> Option<(Self, Vec<M::Point>)> {
        let points = plane.points()?;
        let lines = plane.lines()?;
        let index = |p: &M::Point| points.iter().position(|x| x == p).unwrap() as u32;
        let sets = lines
            .iter()
            .map(|l| plane.points_on(l).unwrap_or_default().iter().map(index).collect())
            .collect();
        let me = ExplicitPlane::new(format!("explicit({})", plane.model_id()), points.len() as u32, sets).ok()?;
        Some((me, points))
    }

    fn set(&self, l: &ExplicitLine) -> &BTreeSet<u32> {
        &self.lines[l.0 as usize]
    }
}

impl AffinePlane for ExplicitPlane {
    type Point = ExplicitPoint;
    type Line = ExplicitLine;

    fn model_id(&self) -> String {
        self.name.clone()
    }

    fn owns_point(&self, p: &ExplicitPoint) -> bool {
        p.0 < self.point_count
    }

    fn owns_line(&self, l: &ExplicitLine) -> bool {
        (l.0 as usize) < self.lines.len()
    }

    fn on_line(&self, p: &ExplicitPoint, l: &ExplicitLine) -> bool {
        self.set(l).contains(&p.0)
    }

    fn line_through(&self, p: &ExplicitPoint, q: &ExplicitPoint) -> Result<ExplicitLine> {
        let found = self.lines_through_pair(p, q);
        match found.as_slice() {
            [l] => Ok(*l),
            _ => Err(GeometryError::NoUniqueJoin),
        }
    }

    fn parallel_line(&self, p: &ExplicitPoint, l: &ExplicitLine) -> Result<ExplicitLine> {
        let target = self.set(l);
        let found: Vec<_> = (0..self.lines.len() as u32)
            .map(ExplicitLine)
            .filter(|m| self.on_line(p, m) && self.set(m).is_disjoint(target))
            .collect();
        match found.as_slice() {
            [m] => Ok(*m),
            _ => Err(GeometryError::NoUniqueParallel),
        }
    }

    fn intersect(&self, l: &ExplicitLine, m: &ExplicitLine) -> Result<Meet<ExplicitPoint>> {
        let common: Vec<u32> = self.set(l).intersection(self.set(m)).copied().collect();
        match common.as_slice() {
            [] => Ok(Meet::Parallel),
            [x] => Ok(Meet::Point(ExplicitPoint(*x))),
            _ if self.set(l) == self.set(m) => Ok(Meet::Coincident),
            _ => Err(GeometryError::NoUniqueJoin),
        }
    }

    fn sample_point(&self, rng: &mut SeedRng) -> ExplicitPoint {
        ExplicitPoint(rng.gen_range(0..self.point_count.max(1)))
    }

    fn sample_point_on(&self, l: &ExplicitLine, rng: &mut SeedRng) -> ExplicitPoint {
        let set: Vec<u32> = self.set(l).iter().copied().collect();
        ExplicitPoint(set[rng.gen_range(0..set.len())])
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn points(&self) -> Option<Vec<ExplicitPoint>> {
        Some((0..self.point_count).map(ExplicitPoint).collect())
    }

    fn lines(&self) -> Option<Vec<ExplicitLine>> {
        Some((0..self.lines.len() as u32).map(ExplicitLine).collect())
    }

    fn points_on(&self, l: &ExplicitLine) -> Option<Vec<ExplicitPoint>> {
        self.owns_line(l).then(|| self.set(l).iter().copied().map(ExplicitPoint).collect())
    }
}
