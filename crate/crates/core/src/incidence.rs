//! The affine-plane contract.
//!
//! Every construction in this crate talks to geometry exclusively through
//! [`AffinePlane`]: incidence, the joining line of two points, the parallel
//! to a line through a point, and the meet of two lines. Points and lines are
//! opaque handles; coordinates live inside the concrete models.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::rational::Q;

/// Deterministic generator used by every sampled check.
pub type SeedRng = ChaCha8Rng;

/// Outcome of intersecting two lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Meet<P> {
    /// The lines are distinct and share exactly this point.
    Point(P),
    /// Distinct lines with no common point.
    Parallel,
    /// Both handles name the same line.
    Coincident,
}

impl<P> Meet<P> {
    pub fn point(self) -> Option<P> {
        match self {
            Meet::Point(p) => Some(p),
            _ => None,
        }
    }
}

/// An incidence structure satisfying (or, for test fixtures, meant to be
/// checked against) the affine axioms.
///
/// Implementors provide the unchecked primitives; the provided methods
/// validate handle ownership and degenerate inputs before delegating.
pub trait AffinePlane: Sync {
    type Point: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync + Serialize;
    type Line: Clone + Eq + Hash + Debug + Display + Send + Sync;

    /// Model identifier as used on the command line, e.g. `ag2:5`.
    fn model_id(&self) -> String;

    fn owns_point(&self, p: &Self::Point) -> bool;
    fn owns_line(&self, l: &Self::Line) -> bool;

    fn on_line(&self, p: &Self::Point, l: &Self::Line) -> bool;
    /// Requires `p != q`.
    fn line_through(&self, p: &Self::Point, q: &Self::Point) -> Result<Self::Line>;
    fn parallel_line(&self, p: &Self::Point, l: &Self::Line) -> Result<Self::Line>;
    fn intersect(&self, l: &Self::Line, m: &Self::Line) -> Result<Meet<Self::Point>>;

    /// Uniformly (finite) or boundedly (infinite) random point.
    fn sample_point(&self, rng: &mut SeedRng) -> Self::Point;
    fn sample_point_on(&self, l: &Self::Line, rng: &mut SeedRng) -> Self::Point;

    fn is_finite(&self) -> bool {
        false
    }
    /// All points, for finite models.
    fn points(&self) -> Option<Vec<Self::Point>> {
        None
    }
    /// All lines, for finite models.
    fn lines(&self) -> Option<Vec<Self::Line>> {
        None
    }
    fn points_on(&self, _l: &Self::Line) -> Option<Vec<Self::Point>> {
        None
    }

    /// Parallel classes of a finite model.
    fn parallel_classes(&self) -> Option<Vec<Vec<Self::Line>>> {
        let lines = self.lines()?;
        let mut classes: Vec<Vec<Self::Line>> = Vec::new();
        for l in lines {
            let slot = classes.iter_mut().find(|c| {
                matches!(
                    self.intersect(&c[0], &l),
                    Ok(Meet::Parallel | Meet::Coincident)
                )
            });
            match slot {
                Some(c) => c.push(l),
                None => classes.push(vec![l]),
            }
        }
        Some(classes)
    }

    /// Every line of the model carrying both points, found without going
    /// through [`AffinePlane::line_through`]. Used by the A1 checks.
    fn lines_through_pair(&self, p: &Self::Point, q: &Self::Point) -> Vec<Self::Line> {
        match self.lines() {
            Some(all) => all
                .into_iter()
                .filter(|l| self.on_line(p, l) && self.on_line(q, l))
                .collect(),
            None => self.line_through(p, q).into_iter().collect(),
        }
    }

    /// Ordered candidates for the canonical auxiliary point near `origin`.
    fn aux_candidates(&self, _origin: &Self::Point) -> Vec<Self::Point> {
        let mut pts = self.points().unwrap_or_default();
        pts.sort();
        pts
    }

    /// Coordinates of a point, when the model has them.
    fn coords(&self, _p: &Self::Point) -> Option<(Q, Q)> {
        None
    }
    /// Polyline through the part of `l` over the given ranges, for models
    /// embedded in the coordinate plane. Only used for rendering.
    fn line_polyline(&self, _l: &Self::Line, _xs: (f64, f64), _ys: (f64, f64)) -> Option<Vec<(f64, f64)>> {
        None
    }

    fn point_at(&self, x: &Q, y: &Q) -> Result<Self::Point> {
        Err(GeometryError::NotAPoint(
            format!("{x},{y}"),
            self.model_id(),
        ))
    }

    // ----- checked operations -----

    fn check_point(&self, p: &Self::Point) -> Result<()> {
        if self.owns_point(p) {
            Ok(())
        } else {
            Err(GeometryError::ModelMismatch { model: self.model_id() })
        }
    }

    fn check_line(&self, l: &Self::Line) -> Result<()> {
        if self.owns_line(l) {
            Ok(())
        } else {
            Err(GeometryError::ModelMismatch { model: self.model_id() })
        }
    }

    fn incident(&self, p: &Self::Point, l: &Self::Line) -> Result<bool> {
        self.check_point(p)?;
        self.check_line(l)?;
        Ok(self.on_line(p, l))
    }

    /// The line `PQ`.
    fn join(&self, p: &Self::Point, q: &Self::Point) -> Result<Self::Line> {
        self.check_point(p)?;
        self.check_point(q)?;
        if p == q {
            return Err(GeometryError::DegenerateJoin);
        }
        self.line_through(p, q)
    }

    /// The unique line through `p` parallel to `l`; `l` itself when `p ∈ l`.
    fn parallel_through(&self, p: &Self::Point, l: &Self::Line) -> Result<Self::Line> {
        self.check_point(p)?;
        self.check_line(l)?;
        if self.on_line(p, l) {
            return Ok(l.clone());
        }
        self.parallel_line(p, l)
    }

    fn meet(&self, l: &Self::Line, m: &Self::Line) -> Result<Meet<Self::Point>> {
        self.check_line(l)?;
        self.check_line(m)?;
        if l == m {
            return Ok(Meet::Coincident);
        }
        self.intersect(l, m)
    }

    /// Coincident lines count as parallel.
    fn parallel(&self, l: &Self::Line, m: &Self::Line) -> Result<bool> {
        Ok(!matches!(self.meet(l, m)?, Meet::Point(_)))
    }

    /// Requires pairwise distinct points.
    fn collinear(&self, p: &Self::Point, q: &Self::Point, r: &Self::Point) -> Result<bool> {
        if p == q || q == r || p == r {
            return Err(GeometryError::DegenerateInput("collinearity needs three distinct points"));
        }
        let l = self.join(p, q)?;
        self.incident(r, &l)
    }
}

/// Three distinct non-collinear points together with their sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeVertex<P, L> {
    pub vertices: [P; 3],
    /// Sides `AB`, `BC`, `CA`.
    pub sides: [L; 3],
}

impl<P: Clone, L> ThreeVertex<P, L> {
    pub fn new<M>(plane: &M, a: &P, b: &P, c: &P) -> Result<Self>
    where
        M: AffinePlane<Point = P, Line = L>,
    {
        if plane.collinear(a, b, c)? {
            return Err(GeometryError::DegenerateInput("three-vertex vertices are collinear"));
        }
        Ok(ThreeVertex {
            vertices: [a.clone(), b.clone(), c.clone()],
            sides: [plane.join(a, b)?, plane.join(b, c)?, plane.join(c, a)?],
        })
    }
}

/// `meet` that must produce a single point; used inside constructions.
pub(crate) fn meet_point<M: AffinePlane>(
    plane: &M,
    l: &M::Line,
    m: &M::Line,
    step: &'static str,
) -> Result<M::Point> {
    plane
        .meet(l, m)?
        .point()
        .ok_or(GeometryError::ConstructionFailed(step))
}

/// Structural invariants of the incidence API, checked exhaustively on a
/// finite model. Returns the first failure as a message.
pub fn check_incidence_invariants<M: AffinePlane>(plane: &M) -> std::result::Result<(), String> {
    let points = plane.points().ok_or("model is not finite")?;
    let lines = plane.lines().ok_or("model is not finite")?;
    let e = |err: GeometryError| err.to_string();

    for l in &lines {
        let n = points.iter().filter(|p| plane.on_line(p, l)).count();
        if n < 2 {
            return Err(format!("line {l} carries {n} points"));
        }
    }
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let pq = plane.join(p, q).map_err(e)?;
            let qp = plane.join(q, p).map_err(e)?;
            if pq != qp {
                return Err(format!("join({p},{q}) != join({q},{p})"));
            }
            if !plane.on_line(p, &pq) || !plane.on_line(q, &pq) {
                return Err(format!("join({p},{q}) misses an endpoint"));
            }
        }
    }
    for p in &points {
        for l in &lines {
            let r = plane.parallel_through(p, l).map_err(e)?;
            if !plane.on_line(p, &r) || !plane.parallel(&r, l).map_err(e)? {
                return Err(format!("parallel_through({p},{l}) is wrong"));
            }
            if plane.parallel_through(p, &r).map_err(e)? != r {
                return Err(format!("parallel_through not idempotent at ({p},{l})"));
            }
            if !plane.on_line(p, l) {
                let disjoint = lines
                    .iter()
                    .filter(|m| plane.on_line(p, m))
                    .filter(|m| points.iter().all(|x| !(plane.on_line(x, m) && plane.on_line(x, l))))
                    .count();
                if disjoint != 1 {
                    return Err(format!("{disjoint} lines through {p} miss {l}"));
                }
            }
        }
    }
    for l in &lines {
        for m in &lines {
            if l == m {
                continue;
            }
            if let Meet::Point(x) = plane.meet(l, m).map_err(e)? {
                if !plane.on_line(&x, l) || !plane.on_line(&x, m) {
                    return Err(format!("meet({l},{m}) = {x} is not on both lines"));
                }
                if let Some(y) = points.iter().find(|y| **y != x && plane.on_line(y, l) && plane.on_line(y, m)) {
                    return Err(format!("{l} and {m} share {x} and {y}"));
                }
            }
        }
    }
    check_parallelism_equivalence(plane, &lines).map_err(|s| s.to_string())
}

/// Reflexivity, symmetry and transitivity of `parallel` over all line triples.
pub fn check_parallelism_equivalence<M: AffinePlane>(
    plane: &M,
    lines: &[M::Line],
) -> std::result::Result<(), String> {
    let n = lines.len();
    let mut rel = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            rel[i * n + j] = plane.parallel(&lines[i], &lines[j]).map_err(|e| e.to_string())?;
        }
    }
    for i in 0..n {
        if !rel[i * n + i] {
            return Err(format!("parallelism not reflexive at {}", lines[i]));
        }
        for j in 0..n {
            if rel[i * n + j] != rel[j * n + i] {
                return Err(format!("parallelism not symmetric at {}, {}", lines[i], lines[j]));
            }
            if !rel[i * n + j] {
                continue;
            }
            for k in 0..n {
                if rel[j * n + k] && !rel[i * n + k] {
                    return Err(format!(
                        "parallelism not transitive at {}, {}, {}",
                        lines[i], lines[j], lines[k]
                    ));
                }
            }
        }
    }
    Ok(())
}
