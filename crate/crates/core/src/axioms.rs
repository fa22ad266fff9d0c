//! Configuration checkers: the affine axioms A1–A3, Desargues' axiom for
//! triangles on three parallel lines, the little Pappus property for two
//! parallel carriers, and the little Hessenberg implication between them.
//!
//! Finite models are swept exhaustively (up to a configurable size),
//! infinite ones are sampled with a seeded generator.

use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::incidence::{AffinePlane, Meet, SeedRng};
use crate::models::rational::sample_signed;
use crate::rational::sample_rational;
use crate::report::{CheckReport, Witness};

/// Limits for exhaustive sweeps and sampled searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Sample count for infinite models (or finite ones above the caps).
    pub budget: u64,
    /// Largest point count for which Desargues is swept exhaustively.
    /// The default, 25, covers AG(2,p) for p <= 5.
    pub desargues_max_points: usize,
    /// Largest point count for which little Pappus is swept exhaustively.
    pub pappus_max_points: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 1000, desargues_max_points: 25, pappus_max_points: 49 }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions { budget, ..Self::default() }
    }

    /// Sweeps every finite model exhaustively, regardless of size.
    pub fn exhaustive() -> Self {
        SearchOptions { budget: 1000, desargues_max_points: usize::MAX, pappus_max_points: usize::MAX }
    }
}

/// Triangles `ABC`, `A₁B₁C₁` with `AA₁`, `BB₁`, `CC₁` three distinct
/// parallel lines.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DesarguesConfig<P> {
    pub a: P,
    pub a1: P,
    pub b: P,
    pub b1: P,
    pub c: P,
    pub c1: P,
}

impl<P: Clone + Eq> DesarguesConfig<P> {
    /// Checks the shape of the configuration and both hypotheses
    /// `AB ∥ A₁B₁`, `BC ∥ B₁C₁`. Degenerate input yields `false`.
    pub fn hypotheses_hold<M: AffinePlane<Point = P>>(&self, plane: &M) -> Result<bool> {
        let pairs = [(&self.a, &self.a1), (&self.b, &self.b1), (&self.c, &self.c1)];
        if pairs.iter().any(|(x, y)| x == y) {
            return Ok(false);
        }
        let axes = [plane.join(&self.a, &self.a1)?, plane.join(&self.b, &self.b1)?, plane.join(&self.c, &self.c1)?];
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            if axes[i] == axes[j] || !plane.parallel(&axes[i], &axes[j])? {
                return Ok(false);
            }
        }
        if plane.collinear(&self.a, &self.b, &self.c)? || plane.collinear(&self.a1, &self.b1, &self.c1)? {
            return Ok(false);
        }
        Ok(plane.parallel(&plane.join(&self.a, &self.b)?, &plane.join(&self.a1, &self.b1)?)?
            && plane.parallel(&plane.join(&self.b, &self.c)?, &plane.join(&self.b1, &self.c1)?)?)
    }

    /// `AC ∥ A₁C₁`.
    pub fn conclusion_holds<M: AffinePlane<Point = P>>(&self, plane: &M) -> Result<bool> {
        plane.parallel(&plane.join(&self.a, &self.c)?, &plane.join(&self.a1, &self.c1)?)
    }

    pub fn to_witness(&self, note: impl Into<String>) -> Witness<P> {
        Witness::new(
            &[("A", &self.a), ("A1", &self.a1), ("B", &self.b), ("B1", &self.b1), ("C", &self.c), ("C1", &self.c1)],
            note,
        )
    }

    pub fn from_witness(w: &Witness<P>) -> Option<Self> {
        Some(DesarguesConfig {
            a: w.get("A")?.clone(),
            a1: w.get("A1")?.clone(),
            b: w.get("B")?.clone(),
            b1: w.get("B1")?.clone(),
            c: w.get("C")?.clone(),
            c1: w.get("C1")?.clone(),
        })
    }
}

/// Triples `A,B,C` and `A₁,B₁,C₁` on two distinct parallel carriers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PappusConfig<P> {
    pub a: P,
    pub b: P,
    pub c: P,
    pub a1: P,
    pub b1: P,
    pub c1: P,
}

impl<P: Clone + Eq> PappusConfig<P> {
    /// Carriers distinct and parallel, triples distinct, and
    /// `AB₁ ∥ BC₁`, `BA₁ ∥ CB₁`.
    pub fn hypotheses_hold<M: AffinePlane<Point = P>>(&self, plane: &M) -> Result<bool> {
        let (a, b, c, a1, b1, c1) = (&self.a, &self.b, &self.c, &self.a1, &self.b1, &self.c1);
        if a == b || b == c || a == c || a1 == b1 || b1 == c1 || a1 == c1 {
            return Ok(false);
        }
        let g = plane.join(a, b)?;
        let h = plane.join(a1, b1)?;
        if g == h || !plane.parallel(&g, &h)? || !plane.incident(c, &g)? || !plane.incident(c1, &h)? {
            return Ok(false);
        }
        Ok(plane.parallel(&plane.join(a, b1)?, &plane.join(b, c1)?)?
            && plane.parallel(&plane.join(b, a1)?, &plane.join(c, b1)?)?)
    }

    /// `AA₁ ∥ CC₁`.
    pub fn conclusion_holds<M: AffinePlane<Point = P>>(&self, plane: &M) -> Result<bool> {
        plane.parallel(&plane.join(&self.a, &self.a1)?, &plane.join(&self.c, &self.c1)?)
    }

    pub fn to_witness(&self, note: impl Into<String>) -> Witness<P> {
        Witness::new(
            &[("A", &self.a), ("B", &self.b), ("C", &self.c), ("A1", &self.a1), ("B1", &self.b1), ("C1", &self.c1)],
            note,
        )
    }

    pub fn from_witness(w: &Witness<P>) -> Option<Self> {
        Some(PappusConfig {
            a: w.get("A")?.clone(),
            b: w.get("B")?.clone(),
            c: w.get("C")?.clone(),
            a1: w.get("A1")?.clone(),
            b1: w.get("B1")?.clone(),
            c1: w.get("C1")?.clone(),
        })
    }
}

/// Re-checks a reported Desargues violation through the incidence API.
pub fn desargues_witness_reproduces<M: AffinePlane>(plane: &M, w: &Witness<M::Point>) -> Result<bool> {
    let Some(cfg) = DesarguesConfig::from_witness(w) else {
        return Ok(false);
    };
    Ok(cfg.hypotheses_hold(plane)? && !cfg.conclusion_holds(plane)?)
}

/// Re-checks a reported little-Pappus violation through the incidence API.
pub fn pappus_witness_reproduces<M: AffinePlane>(plane: &M, w: &Witness<M::Point>) -> Result<bool> {
    let Some(cfg) = PappusConfig::from_witness(w) else {
        return Ok(false);
    };
    Ok(cfg.hypotheses_hold(plane)? && !cfg.conclusion_holds(plane)?)
}

// ---------------------------------------------------------------------------
// A1–A3

/// Reports for the three affine axioms.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReports<P> {
    pub a1: CheckReport<P>,
    pub a2: CheckReport<P>,
    pub a3: CheckReport<P>,
}

impl<P> AxiomReports<P> {
    pub fn passed(&self) -> bool {
        self.a1.passed() && self.a2.passed() && self.a3.passed()
    }

    pub fn reports(&self) -> [&CheckReport<P>; 3] {
        [&self.a1, &self.a2, &self.a3]
    }
}

/// Checks A1 (unique join), A2 (unique parallel) and A3 (a non-collinear
/// triple). Exhaustive on finite models; `budget` samples otherwise.
pub fn check_axioms<M: AffinePlane>(plane: &M, budget: u64, rng: &mut SeedRng) -> AxiomReports<M::Point> {
    match (plane.points(), plane.lines()) {
        (Some(points), Some(lines)) => check_axioms_finite(plane, &points, &lines),
        _ => check_axioms_sampled(plane, budget.max(1), rng),
    }
}

fn check_axioms_finite<M: AffinePlane>(plane: &M, points: &[M::Point], lines: &[M::Line]) -> AxiomReports<M::Point> {
    let model = plane.model_id();
    let sets: Vec<Vec<M::Point>> = lines
        .iter()
        .map(|l| plane.points_on(l).unwrap_or_else(|| points.iter().filter(|p| plane.on_line(p, l)).cloned().collect()))
        .collect();
    let on = |p: &M::Point, i: usize| sets[i].contains(p);

    let mut a1 = CheckReport::new("A1 unique join", model.clone(), true);
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            a1.examined += 1;
            let through: Vec<usize> = (0..lines.len()).filter(|&k| on(p, k) && on(q, k)).collect();
            if through.len() != 1 {
                a1.record(Witness::new(&[("P", p), ("Q", q)], format!("{} joining lines", through.len())));
                continue;
            }
            match plane.join(p, q) {
                Ok(l) if l == lines[through[0]] => {}
                _ => a1.record(Witness::new(&[("P", p), ("Q", q)], "join disagrees with enumeration")),
            }
        }
    }

    let mut a2 = CheckReport::new("A2 unique parallel", model.clone(), true);
    for p in points {
        for (k, l) in lines.iter().enumerate() {
            if on(p, k) {
                continue;
            }
            a2.examined += 1;
            let missing: Vec<usize> = (0..lines.len())
                .filter(|&m| on(p, m) && sets[m].iter().all(|x| !on(x, k)))
                .collect();
            if missing.len() != 1 {
                a2.record(Witness::new(&[("P", p)], format!("{} lines through P miss {l}", missing.len())));
                continue;
            }
            match plane.parallel_through(p, l) {
                Ok(r) if r == lines[missing[0]] => {}
                _ => a2.record(Witness::new(&[("P", p)], format!("parallel_through disagrees for {l}"))),
            }
        }
    }

    let mut a3 = CheckReport::new("A3 non-collinear triple", model, true);
    let mut witness = None;
    'outer: for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            for r in points.iter().skip(j + 1) {
                a3.examined += 1;
                if !(0..lines.len()).any(|k| on(p, k) && on(q, k) && on(r, k)) {
                    witness = Some((p.clone(), q.clone(), r.clone()));
                    break 'outer;
                }
            }
        }
    }
    match witness {
        Some((p, q, r)) => a3.note(format!("witness triple {p} {q} {r}")),
        None => a3.record(Witness::new(&[], "every triple of points is collinear")),
    }
    AxiomReports { a1, a2, a3 }
}

fn check_axioms_sampled<M: AffinePlane>(plane: &M, budget: u64, rng: &mut SeedRng) -> AxiomReports<M::Point> {
    let model = plane.model_id();

    let mut a1 = CheckReport::new("A1 unique join", model.clone(), false);
    while a1.examined < budget {
        let (p, q) = (plane.sample_point(rng), plane.sample_point(rng));
        if p == q {
            continue;
        }
        a1.examined += 1;
        let family = plane.lines_through_pair(&p, &q);
        let ok = match plane.join(&p, &q) {
            Ok(l) => family == [l.clone()] && plane.on_line(&p, &l) && plane.on_line(&q, &l),
            Err(_) => false,
        };
        if !ok {
            a1.record(Witness::new(&[("P", &p), ("Q", &q)], format!("{} candidate lines", family.len())));
        }
    }

    let mut a2 = CheckReport::new("A2 unique parallel", model.clone(), false);
    while a2.examined < budget {
        let (u, v) = (plane.sample_point(rng), plane.sample_point(rng));
        let p = plane.sample_point(rng);
        let Ok(l) = plane.join(&u, &v) else { continue };
        if plane.on_line(&p, &l) {
            continue;
        }
        a2.examined += 1;
        if let Err(note) = sampled_parallel_ok(plane, &p, &l, rng) {
            a2.record(Witness::new(&[("P", &p), ("U", &u), ("V", &v)], note));
        }
    }

    let mut a3 = CheckReport::new("A3 non-collinear triple", model, false);
    let mut found = false;
    while a3.examined < budget.max(16) {
        let (p, q, r) = (plane.sample_point(rng), plane.sample_point(rng), plane.sample_point(rng));
        if p == q || q == r || p == r {
            continue;
        }
        a3.examined += 1;
        if let Ok(false) = plane.collinear(&p, &q, &r) {
            a3.note(format!("witness triple {p} {q} {r}"));
            found = true;
            break;
        }
    }
    if !found {
        a3.record(Witness::new(&[], "no non-collinear triple sampled"));
    }
    AxiomReports { a1, a2, a3 }
}

fn sampled_parallel_ok<M: AffinePlane>(
    plane: &M,
    p: &M::Point,
    l: &M::Line,
    rng: &mut SeedRng,
) -> std::result::Result<(), String> {
    let r = plane.parallel_through(p, l).map_err(|e| e.to_string())?;
    if !plane.on_line(p, &r) {
        return Err("parallel misses P".into());
    }
    if plane.meet(&r, l).map_err(|e| e.to_string())? != Meet::Parallel {
        return Err(format!("parallel {r} meets {l}"));
    }
    for _ in 0..4 {
        let x = plane.sample_point_on(&r, rng);
        if plane.on_line(&x, l) {
            return Err(format!("{x} lies on both {r} and {l}"));
        }
    }
    // every other line through P meets l in a point of both
    for _ in 0..4 {
        let target = if rng.gen_bool(0.5) { plane.sample_point_on(l, rng) } else { plane.sample_point(rng) };
        if &target == p {
            continue;
        }
        let m = plane.join(p, &target).map_err(|e| e.to_string())?;
        if m == r {
            continue;
        }
        match plane.meet(&m, l).map_err(|e| e.to_string())? {
            Meet::Point(x) if plane.on_line(&x, &m) && plane.on_line(&x, l) => {}
            other => return Err(format!("line {m} through P does not meet {l} properly: {other:?}")),
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Desargues

/// Visits every Desargues configuration whose axes lie in `class` and
/// whose hypotheses hold: ordered axis triples, then `A ≠ A₁` on the first
/// axis, `B` on the second and `C` on the third; `B₁` and `C₁` are forced
/// by the hypotheses. Configurations with a collinear triangle are skipped.
pub fn visit_desargues_configs<M, F>(plane: &M, class: &[M::Line], mut visit: F) -> Result<()>
where
    M: AffinePlane,
    F: FnMut(DesarguesConfig<M::Point>) -> Result<()>,
{
    let on: Vec<Vec<M::Point>> = class
        .iter()
        .map(|l| plane.points_on(l).ok_or(GeometryError::UnsupportedModel))
        .collect::<Result<_>>()?;
    let n = class.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                for a in &on[i] {
                    for a1 in &on[i] {
                        if a == a1 {
                            continue;
                        }
                        for b in &on[j] {
                            let b1 = forced_vertex(plane, a1, &plane.join(a, b)?, &class[j])?;
                            for c in &on[k] {
                                let c1 = forced_vertex(plane, &b1, &plane.join(b, c)?, &class[k])?;
                                if plane.collinear(a, b, c)? || plane.collinear(a1, &b1, &c1)? {
                                    continue;
                                }
                                visit(DesarguesConfig {
                                    a: a.clone(),
                                    a1: a1.clone(),
                                    b: b.clone(),
                                    b1: b1.clone(),
                                    c: c.clone(),
                                    c1,
                                })?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The point on `axis` reached from `from` parallel to `side`.
fn forced_vertex<M: AffinePlane>(plane: &M, from: &M::Point, side: &M::Line, axis: &M::Line) -> Result<M::Point> {
    crate::incidence::meet_point(plane, &plane.parallel_through(from, side)?, axis, "forced vertex")
}

/// Checks `AB ∥ A₁B₁ ∧ BC ∥ B₁C₁ ⇒ AC ∥ A₁C₁` for triangles on three
/// distinct parallel lines.
pub fn check_desargues<M: AffinePlane>(plane: &M, opts: &SearchOptions, rng: &mut SeedRng) -> CheckReport<M::Point> {
    let points = plane.points();
    match (points, plane.parallel_classes()) {
        (Some(pts), Some(classes)) if pts.len() <= opts.desargues_max_points => {
            let model = plane.model_id();
            let parts: Vec<CheckReport<M::Point>> = classes
                .par_iter()
                .map(|class| {
                    let mut rep = CheckReport::new("Desargues D1", model.clone(), true);
                    let res = visit_desargues_configs(plane, class, |cfg| {
                        rep.examined += 1;
                        if !cfg.conclusion_holds(plane)? {
                            rep.record(cfg.to_witness("AC not parallel to A1C1"));
                        }
                        Ok(())
                    });
                    if let Err(e) = res {
                        rep.record(Witness::new(&[], format!("sweep aborted: {e}")));
                    }
                    rep
                })
                .collect();
            let mut report = CheckReport::new("Desargues D1", model, true);
            for p in parts {
                report.merge(p);
            }
            report
        }
        _ => sample_desargues(plane, opts.budget.max(1), rng),
    }
}

fn sample_desargues<M: AffinePlane>(plane: &M, budget: u64, rng: &mut SeedRng) -> CheckReport<M::Point> {
    let mut report = CheckReport::new("Desargues D1", plane.model_id(), false);
    let directed = !plane.is_finite() && plane.coords(&plane.sample_point(&mut rng.clone())).is_some();
    if directed {
        report.note("directed search: every other configuration has its first axis crossing the y-axis with negative slope");
    }
    let mut attempts = 0u64;
    while report.examined < budget && attempts < budget.saturating_mul(20) {
        attempts += 1;
        let use_bend = directed && attempts.is_multiple_of(2);
        let Some(cfg) = sample_desargues_config(plane, rng, use_bend) else { continue };
        report.examined += 1;
        match cfg.conclusion_holds(plane) {
            Ok(true) => {}
            Ok(false) => report.record(cfg.to_witness("AC not parallel to A1C1")),
            Err(e) => report.record(cfg.to_witness(format!("error: {e}"))),
        }
    }
    report
}

/// A point left (`x < 0`) or right (`x > 0`) of the y-axis, for models with coordinates.
fn sample_on_side<M: AffinePlane>(plane: &M, rng: &mut SeedRng, right: bool) -> Option<M::Point> {
    let x = sample_signed(rng, 20, right);
    let y = sample_rational(rng, 20);
    plane.point_at(&x, &y).ok()
}

fn sample_desargues_config<M: AffinePlane>(
    plane: &M,
    rng: &mut SeedRng,
    bend: bool,
) -> Option<DesarguesConfig<M::Point>> {
    let (a, a1) = if bend {
        // A left, A1 right and lower: the axis AA1 has negative slope across the bend
        let a = sample_on_side(plane, rng, false)?;
        let a1 = sample_on_side(plane, rng, true)?;
        let (_, ya) = plane.coords(&a)?;
        let (_, ya1) = plane.coords(&a1)?;
        if ya1 < ya {
            (a, a1)
        } else {
            let (xa1, _) = plane.coords(&a1)?;
            (a, plane.point_at(&xa1, &(ya - crate::rational::q(1))).ok()?)
        }
    } else {
        (plane.sample_point(rng), plane.sample_point(rng))
    };
    if a == a1 {
        return None;
    }
    let axis_a = plane.join(&a, &a1).ok()?;
    let b = plane.sample_point(rng);
    let c = plane.sample_point(rng);
    if plane.on_line(&b, &axis_a) || plane.on_line(&c, &axis_a) {
        return None;
    }
    let axis_b = plane.parallel_through(&b, &axis_a).ok()?;
    if plane.on_line(&c, &axis_b) {
        return None;
    }
    let axis_c = plane.parallel_through(&c, &axis_a).ok()?;
    let b1 = forced_vertex(plane, &a1, &plane.join(&a, &b).ok()?, &axis_b).ok()?;
    let c1 = forced_vertex(plane, &b1, &plane.join(&b, &c).ok()?, &axis_c).ok()?;
    let cfg = DesarguesConfig { a, a1, b, b1, c, c1 };
    cfg.hypotheses_hold(plane).ok()?.then_some(cfg)
}

// ---------------------------------------------------------------------------
// Little Pappus

/// Visits every little-Pappus configuration with carriers in `class`:
/// ordered carrier pairs `(g, h)`, distinct ordered `A, B, C` on `g`, and
/// `B₁` on `h`; `C₁` and `A₁` are forced by the two hypotheses. Skips
/// placements where `A₁, B₁, C₁` are not distinct.
pub fn visit_pappus_configs<M, F>(plane: &M, class: &[M::Line], mut visit: F) -> Result<()>
where
    M: AffinePlane,
    F: FnMut(PappusConfig<M::Point>) -> Result<()>,
{
    let on: Vec<Vec<M::Point>> = class
        .iter()
        .map(|l| plane.points_on(l).ok_or(GeometryError::UnsupportedModel))
        .collect::<Result<_>>()?;
    for (gi, g) in on.iter().enumerate() {
        for (hi, h) in on.iter().enumerate() {
            if gi == hi {
                continue;
            }
            for a in g {
                for b in g {
                    if a == b {
                        continue;
                    }
                    for c in g {
                        if c == a || c == b {
                            continue;
                        }
                        for b1 in h {
                            let c1 = forced_vertex(plane, b, &plane.join(a, b1)?, &class[hi])?;
                            let a1 = forced_vertex(plane, b, &plane.join(c, b1)?, &class[hi])?;
                            if a1 == *b1 || c1 == *b1 || a1 == c1 {
                                continue;
                            }
                            visit(PappusConfig {
                                a: a.clone(),
                                b: b.clone(),
                                c: c.clone(),
                                a1,
                                b1: b1.clone(),
                                c1,
                            })?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks `AB₁ ∥ BC₁ ∧ BA₁ ∥ CB₁ ⇒ AA₁ ∥ CC₁` for triples on two distinct
/// parallel lines.
pub fn check_little_pappus<M: AffinePlane>(plane: &M, opts: &SearchOptions, rng: &mut SeedRng) -> CheckReport<M::Point> {
    match (plane.points(), plane.parallel_classes()) {
        (Some(pts), Some(classes)) if pts.len() <= opts.pappus_max_points => {
            let model = plane.model_id();
            let parts: Vec<CheckReport<M::Point>> = classes
                .par_iter()
                .map(|class| {
                    let mut rep = CheckReport::new("little Pappus", model.clone(), true);
                    let res = visit_pappus_configs(plane, class, |cfg| {
                        rep.examined += 1;
                        if !cfg.conclusion_holds(plane)? {
                            rep.record(cfg.to_witness("AA1 not parallel to CC1"));
                        }
                        Ok(())
                    });
                    if let Err(e) = res {
                        rep.record(Witness::new(&[], format!("sweep aborted: {e}")));
                    }
                    rep
                })
                .collect();
            let mut report = CheckReport::new("little Pappus", model, true);
            for p in parts {
                report.merge(p);
            }
            report
        }
        _ => sample_pappus(plane, opts.budget.max(1), rng),
    }
}

fn sample_pappus<M: AffinePlane>(plane: &M, budget: u64, rng: &mut SeedRng) -> CheckReport<M::Point> {
    let mut report = CheckReport::new("little Pappus", plane.model_id(), false);
    let mut attempts = 0u64;
    while report.examined < budget && attempts < budget.saturating_mul(20) {
        attempts += 1;
        let Some(cfg) = sample_pappus_config(plane, rng) else { continue };
        report.examined += 1;
        match cfg.conclusion_holds(plane) {
            Ok(true) => {}
            Ok(false) => report.record(cfg.to_witness("AA1 not parallel to CC1")),
            Err(e) => report.record(cfg.to_witness(format!("error: {e}"))),
        }
    }
    report
}

fn sample_pappus_config<M: AffinePlane>(plane: &M, rng: &mut SeedRng) -> Option<PappusConfig<M::Point>> {
    let (u, v) = (plane.sample_point(rng), plane.sample_point(rng));
    let g = plane.join(&u, &v).ok()?;
    let (a, b, c) = (plane.sample_point_on(&g, rng), plane.sample_point_on(&g, rng), plane.sample_point_on(&g, rng));
    let b1 = plane.sample_point(rng);
    if a == b || b == c || a == c || plane.on_line(&b1, &g) {
        return None;
    }
    let h = plane.parallel_through(&b1, &g).ok()?;
    let c1 = forced_vertex(plane, &b, &plane.join(&a, &b1).ok()?, &h).ok()?;
    let a1 = forced_vertex(plane, &b, &plane.join(&c, &b1).ok()?, &h).ok()?;
    let cfg = PappusConfig { a, b, c, a1, b1, c1 };
    cfg.hypotheses_hold(plane).ok()?.then_some(cfg)
}

// ---------------------------------------------------------------------------
// Hessenberg

/// The little Hessenberg implication on a finite model: sweeps Desargues
/// and little Pappus exhaustively and fails only if Desargues holds while
/// Pappus does not.
pub fn check_hessenberg<M: AffinePlane>(plane: &M) -> Result<CheckReport<M::Point>> {
    if !plane.is_finite() {
        return Err(GeometryError::UnsupportedModel);
    }
    let opts = SearchOptions::exhaustive();
    let mut rng = <SeedRng as rand::SeedableRng>::seed_from_u64(0);
    let d = check_desargues(plane, &opts, &mut rng);
    let p = check_little_pappus(plane, &opts, &mut rng);
    let mut report = CheckReport::new("Hessenberg (Desargues implies little Pappus)", plane.model_id(), true);
    report.examined = d.examined + p.examined;
    report.note(format!("Desargues: {} ({} configurations)", d.verdict(), d.examined));
    report.note(format!("little Pappus: {} ({} configurations)", p.verdict(), p.examined));
    if d.passed() && !p.passed() {
        for w in p.violations {
            report.record(Witness { note: format!("Desargues holds but {}", w.note), points: w.points });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{ExplicitPlane, FinitePlane};
    use rand::SeedableRng;

    fn rng() -> SeedRng {
        SeedRng::seed_from_u64(1)
    }

    #[test]
    fn ag3_axioms_hold_with_36_pairs() {
        let plane = FinitePlane::new(3).unwrap();
        let r = check_axioms(&plane, 1, &mut rng());
        assert!(r.passed());
        assert_eq!(r.a1.examined, 36);
        // 9 points × 8 lines missing each point
        assert_eq!(r.a2.examined, 72);
    }

    #[test]
    fn one_line_structure_fails_a3() {
        let plane = ExplicitPlane::new("one-line", 3, vec![vec![0, 1, 2]]).unwrap();
        let r = check_axioms(&plane, 1, &mut rng());
        assert!(r.a1.passed());
        assert!(r.a2.passed());
        assert!(!r.a3.passed());
    }

    #[test]
    fn ag2_has_no_desargues_configurations() {
        let plane = FinitePlane::new(2).unwrap();
        let r = check_desargues(&plane, &SearchOptions::default(), &mut rng());
        assert_eq!(r.examined, 0);
        assert!(r.passed());
    }

    #[test]
    fn hessenberg_requires_finite_model() {
        let plane = crate::models::RationalPlane::new();
        assert_eq!(check_hessenberg(&plane).unwrap_err(), GeometryError::UnsupportedModel);
    }
}
