//! Addition of the points of a line.
//!
//! For points `A`, `B` on the line `OI` and an auxiliary point `B₁` off it:
//!
//! 1. `P₁` is the meet of the parallel to `OI` through `B₁` with the
//!    parallel to `OB₁` through `A`;
//! 2. `C = A + B` is the meet of `OI` with the parallel to `BB₁` through `P₁`.
//!
//! In a Desarguesian plane `C` does not depend on `B₁`, and `(OI, +)` is an
//! abelian group with identity `O`. The negative of `A` is the meet of `OI`
//! with the parallel to `OP₁` through the auxiliary point.
//!
//! Every operation returns a trace of all constructed points and lines.

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::incidence::{meet_point, AffinePlane, SeedRng};
use crate::report::{CheckReport, Witness};

/// A line `OI` with origin `O` and unit `I ≠ O`.
#[derive(Debug, Clone)]
pub struct LineFrame<'a, M: AffinePlane> {
    plane: &'a M,
    line: M::Line,
    origin: M::Point,
    unit: M::Point,
}

impl<'a, M: AffinePlane> LineFrame<'a, M> {
    pub fn new(plane: &'a M, origin: M::Point, unit: M::Point) -> Result<Self> {
        if origin == unit {
            return Err(GeometryError::InvalidFrame("origin and unit coincide"));
        }
        let line = plane.join(&origin, &unit)?;
        Ok(LineFrame { plane, line, origin, unit })
    }

    pub fn plane(&self) -> &'a M {
        self.plane
    }
    pub fn line(&self) -> &M::Line {
        &self.line
    }
    pub fn origin(&self) -> &M::Point {
        &self.origin
    }
    /// Names the line; the construction itself never uses it.
    pub fn unit(&self) -> &M::Point {
        &self.unit
    }

    pub fn contains(&self, p: &M::Point) -> bool {
        self.plane.owns_point(p) && self.plane.on_line(p, &self.line)
    }

    /// All points of the frame line (finite models only), origin first.
    pub fn points(&self) -> Option<Vec<M::Point>> {
        let mut pts = self.plane.points_on(&self.line)?;
        pts.sort();
        if let Some(i) = pts.iter().position(|p| p == &self.origin) {
            let o = pts.remove(i);
            pts.insert(0, o);
        }
        Some(pts)
    }

    /// Every point off the frame line, in the model's order (finite models only).
    pub fn off_line_points(&self) -> Option<Vec<M::Point>> {
        let mut pts: Vec<_> = self.plane.points()?.into_iter().filter(|p| !self.contains(p)).collect();
        pts.sort();
        Some(pts)
    }

    /// First point of the model's candidate sequence not on the line.
    pub fn canonical_aux(&self) -> Result<M::Point> {
        self.plane
            .aux_candidates(&self.origin)
            .into_iter()
            .find(|p| !self.contains(p))
            .ok_or(GeometryError::EmptyCandidates)
    }

    fn check_operand(&self, name: &'static str, p: &M::Point) -> Result<()> {
        self.plane.check_point(p)?;
        if self.contains(p) {
            Ok(())
        } else {
            Err(GeometryError::InvalidOperand { name, point: p.to_string() })
        }
    }

    fn check_aux(&self, aux: &M::Point) -> Result<()> {
        self.plane.check_point(aux)?;
        if self.contains(aux) {
            Err(GeometryError::InvalidAuxiliary(aux.to_string()))
        } else {
            Ok(())
        }
    }

    pub fn sample_on_line(&self, rng: &mut SeedRng) -> M::Point {
        self.plane.sample_point_on(&self.line, rng)
    }
}

/// Full record of one addition `A + B = C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditionTrace<P, L> {
    pub a: P,
    pub b: P,
    /// `B₁`, off the frame line.
    pub aux: P,
    /// `P₁`.
    pub helper: P,
    /// `OB₁`.
    pub origin_aux: L,
    /// `BB₁`.
    pub operand_aux: L,
    /// Parallel to the frame line through `B₁`.
    pub aux_parallel: L,
    /// Parallel to `OB₁` through `A`.
    pub operand_parallel: L,
    /// Parallel to `BB₁` through `P₁`.
    pub result_parallel: L,
    pub result: P,
}

/// Steps of the negation construction for `A ≠ O`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegationSteps<P, L> {
    /// `Ā₁`, off the frame line.
    pub aux: P,
    /// `P₁`.
    pub helper: P,
    /// `OĀ₁`.
    pub origin_aux: L,
    /// Parallel to the frame line through `Ā₁`.
    pub aux_parallel: L,
    /// Parallel to `OĀ₁` through `A`.
    pub operand_parallel: L,
    /// `OP₁`.
    pub origin_helper: L,
    /// Parallel to `OP₁` through `Ā₁`.
    pub result_parallel: L,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegationTrace<P, L> {
    pub a: P,
    pub result: P,
    /// `None` for `A = O`, whose negative is `O` itself.
    pub steps: Option<NegationSteps<P, L>>,
    /// Whether `A + Ā = O` under the frame's canonical addition.
    pub verified: bool,
}

/// Adds `a + b` using the given auxiliary point.
pub fn add_with_aux<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    a: &M::Point,
    b: &M::Point,
    aux: &M::Point,
) -> Result<AdditionTrace<M::Point, M::Line>> {
    frame.check_operand("A", a)?;
    frame.check_operand("B", b)?;
    frame.check_aux(aux)?;
    let plane = frame.plane;

    let aux_parallel = plane.parallel_through(aux, &frame.line)?;
    let origin_aux = plane.join(&frame.origin, aux)?;
    let operand_parallel = plane.parallel_through(a, &origin_aux)?;
    let helper = meet_point(plane, &aux_parallel, &operand_parallel, "P1")?;

    let operand_aux = plane.join(b, aux)?;
    let result_parallel = plane.parallel_through(&helper, &operand_aux)?;
    let result = meet_point(plane, &result_parallel, &frame.line, "C")?;

    Ok(AdditionTrace {
        a: a.clone(),
        b: b.clone(),
        aux: aux.clone(),
        helper,
        origin_aux,
        operand_aux,
        aux_parallel,
        operand_parallel,
        result_parallel,
        result,
    })
}

/// `a + b` with the canonical auxiliary point, as a full trace.
pub fn add_trace<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    a: &M::Point,
    b: &M::Point,
) -> Result<AdditionTrace<M::Point, M::Line>> {
    add_with_aux(frame, a, b, &frame.canonical_aux()?)
}

/// `a + b`.
pub fn add<M: AffinePlane>(frame: &LineFrame<'_, M>, a: &M::Point, b: &M::Point) -> Result<M::Point> {
    Ok(add_trace(frame, a, b)?.result)
}

/// The negative of `a`, constructed through the given auxiliary point.
pub fn negate_with_aux<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    a: &M::Point,
    aux: &M::Point,
) -> Result<NegationTrace<M::Point, M::Line>> {
    frame.check_operand("A", a)?;
    frame.check_aux(aux)?;
    if a == &frame.origin {
        return Ok(NegationTrace { a: a.clone(), result: a.clone(), steps: None, verified: true });
    }
    let plane = frame.plane;
    let aux_parallel = plane.parallel_through(aux, &frame.line)?;
    let origin_aux = plane.join(&frame.origin, aux)?;
    let operand_parallel = plane.parallel_through(a, &origin_aux)?;
    let helper = meet_point(plane, &aux_parallel, &operand_parallel, "P1")?;
    let origin_helper = plane.join(&frame.origin, &helper)?;
    let result_parallel = plane.parallel_through(aux, &origin_helper)?;
    let result = meet_point(plane, &result_parallel, &frame.line, "negative")?;
    let verified = add(frame, a, &result)? == frame.origin;
    Ok(NegationTrace {
        a: a.clone(),
        result,
        steps: Some(NegationSteps {
            aux: aux.clone(),
            helper,
            origin_aux,
            aux_parallel,
            operand_parallel,
            origin_helper,
            result_parallel,
        }),
        verified,
    })
}

pub fn negate<M: AffinePlane>(frame: &LineFrame<'_, M>, a: &M::Point) -> Result<NegationTrace<M::Point, M::Line>> {
    negate_with_aux(frame, a, &frame.canonical_aux()?)
}

// ---------------------------------------------------------------------------
// property checks

/// Operands and auxiliaries examined by the sweeps below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Samples for infinite models.
    pub budget: u64,
    /// Auxiliary candidates per sampled pair in the independence search.
    pub aux_per_pair: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { budget: 200, aux_per_pair: 8 }
    }
}

/// Compares `add_with_aux(a, b, ·)` over all candidates.
pub fn check_aux_independence<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    a: &M::Point,
    b: &M::Point,
    candidates: &[M::Point],
) -> Result<CheckReport<M::Point>> {
    let (first, rest) = candidates.split_first().ok_or(GeometryError::EmptyCandidates)?;
    let mut report = CheckReport::new("auxiliary independence", frame.plane.model_id(), true);
    let base = add_with_aux(frame, a, b, first)?;
    report.examined += 1;
    for aux in rest {
        let other = add_with_aux(frame, a, b, aux)?;
        report.examined += 1;
        if other.result != base.result {
            report.record(Witness::new(
                &[("A", a), ("B", b), ("B1", &base.aux), ("C", &base.result), ("B1'", &other.aux), ("C'", &other.result)],
                "sum depends on the auxiliary point",
            ));
        }
    }
    Ok(report)
}

/// Independence result for one operand pair.
#[derive(Debug, Clone)]
pub struct PairFinding<P> {
    pub a: P,
    pub b: P,
    /// Sum under the first auxiliary examined.
    pub sum: P,
    pub report: CheckReport<P>,
}

/// Independence per operand pair: every pair with all off-line auxiliaries
/// on finite models; `budget` sampled pairs with `aux_per_pair` sampled
/// auxiliaries each otherwise.
pub fn independence_by_pair<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    opts: &SweepOptions,
    rng: &mut SeedRng,
) -> Result<Vec<PairFinding<M::Point>>> {
    let finding = |a: M::Point, b: M::Point, cands: &[M::Point]| -> Result<PairFinding<M::Point>> {
        let report = check_aux_independence(frame, &a, &b, cands)?;
        let sum = add_with_aux(frame, &a, &b, &cands[0])?.result;
        Ok(PairFinding { a, b, sum, report })
    };
    if let (Some(line_pts), Some(aux)) = (frame.points(), frame.off_line_points()) {
        let mut out = Vec::with_capacity(line_pts.len().pow(2));
        for a in &line_pts {
            for b in &line_pts {
                out.push(finding(a.clone(), b.clone(), &aux)?);
            }
        }
        return Ok(out);
    }
    let per_pair = opts.aux_per_pair.max(2);
    let mut out = Vec::with_capacity(opts.budget as usize);
    for _ in 0..opts.budget {
        let (a, b) = (frame.sample_on_line(rng), frame.sample_on_line(rng));
        let mut cands = Vec::with_capacity(per_pair);
        while cands.len() < per_pair {
            let p = frame.plane.sample_point(rng);
            if !frame.contains(&p) {
                cands.push(p);
            }
        }
        let mut f = finding(a, b, &cands)?;
        f.report.exhaustive = false;
        out.push(f);
    }
    Ok(out)
}

/// All pairs of [`independence_by_pair`] merged into one report;
/// `examined` counts (pair, auxiliary) cases.
pub fn check_independence_sweep<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    opts: &SweepOptions,
    rng: &mut SeedRng,
) -> Result<CheckReport<M::Point>> {
    let pairs = independence_by_pair(frame, opts, rng)?;
    let exhaustive = frame.plane.is_finite();
    let mut report = CheckReport::new("auxiliary independence", frame.plane.model_id(), exhaustive);
    let n = pairs.len();
    let per = pairs.first().map_or(0, |p| p.report.examined);
    for p in pairs {
        report.merge(p.report);
    }
    report.note(format!("{n} pairs x {per} auxiliaries"));
    Ok(report)
}

/// Operands for a sweep: the whole line when finite, samples otherwise.
fn operands<M: AffinePlane>(frame: &LineFrame<'_, M>, count: u64, rng: &mut SeedRng) -> (Vec<M::Point>, bool) {
    match frame.points() {
        Some(p) => (p, true),
        None => ((0..count).map(|_| frame.sample_on_line(rng)).collect(), false),
    }
}

/// `O + X = X + O = X`.
pub fn check_identity<M: AffinePlane>(frame: &LineFrame<'_, M>, opts: &SweepOptions, rng: &mut SeedRng) -> Result<CheckReport<M::Point>> {
    let (xs, exhaustive) = operands(frame, opts.budget, rng);
    let mut report = CheckReport::new("identity", frame.plane.model_id(), exhaustive);
    let o = frame.origin.clone();
    for x in &xs {
        report.examined += 1;
        if add(frame, &o, x)? != *x || add(frame, x, &o)? != *x {
            report.record(Witness::new(&[("X", x)], "O is not neutral for X"));
        }
    }
    Ok(report)
}

/// `A + B = B + A`.
pub fn check_commutativity<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    opts: &SweepOptions,
    rng: &mut SeedRng,
) -> Result<CheckReport<M::Point>> {
    let mut report;
    let pairs: Vec<(M::Point, M::Point)> = match frame.points() {
        Some(pts) => {
            report = CheckReport::new("commutativity", frame.plane.model_id(), true);
            pts.iter().flat_map(|a| pts.iter().map(move |b| (a.clone(), b.clone()))).collect()
        }
        None => {
            report = CheckReport::new("commutativity", frame.plane.model_id(), false);
            (0..opts.budget).map(|_| (frame.sample_on_line(rng), frame.sample_on_line(rng))).collect()
        }
    };
    for (a, b) in &pairs {
        report.examined += 1;
        let (ab, ba) = (add(frame, a, b)?, add(frame, b, a)?);
        if ab != ba {
            report.record(Witness::new(&[("A", a), ("B", b), ("A+B", &ab), ("B+A", &ba)], "A+B != B+A"));
        }
    }
    Ok(report)
}

/// `(A + B) + D = A + (B + D)`.
pub fn check_associativity<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    opts: &SweepOptions,
    rng: &mut SeedRng,
) -> Result<CheckReport<M::Point>> {
    let mut report;
    let triples: Vec<[M::Point; 3]> = match frame.points() {
        Some(pts) => {
            report = CheckReport::new("associativity", frame.plane.model_id(), true);
            let mut out = Vec::with_capacity(pts.len().pow(3));
            for a in &pts {
                for b in &pts {
                    for d in &pts {
                        out.push([a.clone(), b.clone(), d.clone()]);
                    }
                }
            }
            out
        }
        None => {
            report = CheckReport::new("associativity", frame.plane.model_id(), false);
            (0..opts.budget)
                .map(|_| [frame.sample_on_line(rng), frame.sample_on_line(rng), frame.sample_on_line(rng)])
                .collect()
        }
    };
    for [a, b, d] in &triples {
        report.examined += 1;
        let left = add(frame, &add(frame, a, b)?, d)?;
        let right = add(frame, a, &add(frame, b, d)?)?;
        if left != right {
            report.record(Witness::new(
                &[("A", a), ("B", b), ("D", d), ("(A+B)+D", &left), ("A+(B+D)", &right)],
                "addition is not associative here",
            ));
        }
    }
    Ok(report)
}

/// `A + (−A) = O` and `(−A) + A = O`, with `−A` from the negation construction.
pub fn check_inverses<M: AffinePlane>(frame: &LineFrame<'_, M>, opts: &SweepOptions, rng: &mut SeedRng) -> Result<CheckReport<M::Point>> {
    let (xs, exhaustive) = operands(frame, opts.budget, rng);
    let mut report = CheckReport::new("inverses", frame.plane.model_id(), exhaustive);
    for a in &xs {
        report.examined += 1;
        let neg = negate(frame, a)?.result;
        let right = add(frame, a, &neg)?;
        let left = add(frame, &neg, a)?;
        if right != frame.origin || left != frame.origin {
            report.record(Witness::new(&[("A", a), ("-A", &neg), ("A+(-A)", &right), ("(-A)+A", &left)], "negation fails"));
        }
    }
    report.note("two-sidedness follows from the right inverse together with commutativity");
    Ok(report)
}

/// `O + O = O`, `O + B = B`, `A + O = A` for every auxiliary in `candidates`.
pub fn check_degenerate_cases<M: AffinePlane>(
    frame: &LineFrame<'_, M>,
    operand: &M::Point,
    candidates: &[M::Point],
) -> Result<CheckReport<M::Point>> {
    let mut report = CheckReport::new("degenerate cases", frame.plane.model_id(), true);
    let o = frame.origin.clone();
    for aux in candidates {
        let cases = [
            (&o, &o, &o, "O+O"),
            (&o, operand, operand, "O+B"),
            (operand, &o, operand, "A+O"),
        ];
        for (a, b, expected, label) in cases {
            report.examined += 1;
            let got = add_with_aux(frame, a, b, aux)?.result;
            if &got != expected {
                report.record(Witness::new(&[("A", a), ("B", b), ("B1", aux), ("C", &got)], format!("{label} is wrong")));
            }
        }
    }
    Ok(report)
}

/// Sums must not depend on which point of the line was chosen as unit.
pub fn check_unit_irrelevance<M: AffinePlane>(frame: &LineFrame<'_, M>, units: &[M::Point]) -> Result<CheckReport<M::Point>> {
    let pts = frame.points().ok_or(GeometryError::UnsupportedModel)?;
    let mut report = CheckReport::new("frame-unit irrelevance", frame.plane.model_id(), true);
    for unit in units {
        let alt = LineFrame::new(frame.plane, frame.origin.clone(), unit.clone())?;
        if alt.line != frame.line {
            return Err(GeometryError::InvalidFrame("alternative unit is not on the frame line"));
        }
        for a in &pts {
            for b in &pts {
                report.examined += 1;
                let (x, y) = (add(frame, a, b)?, add(&alt, a, b)?);
                if x != y {
                    report.record(Witness::new(&[("I'", unit), ("A", a), ("B", b), ("C", &x), ("C'", &y)], "sum depends on the unit"));
                }
            }
        }
    }
    Ok(report)
}

/// Serializable view of a trace, with lines rendered as text.
#[derive(Debug, Clone, Serialize)]
pub struct TraceView<P> {
    pub operation: &'static str,
    pub points: Vec<(String, P)>,
    pub lines: Vec<(String, String)>,
    pub result: P,
}

impl<P: Clone, L: std::fmt::Display> AdditionTrace<P, L> {
    pub fn view(&self) -> TraceView<P> {
        TraceView {
            operation: "add",
            points: vec![
                ("A".into(), self.a.clone()),
                ("B".into(), self.b.clone()),
                ("B1".into(), self.aux.clone()),
                ("P1".into(), self.helper.clone()),
                ("C".into(), self.result.clone()),
            ],
            lines: vec![
                ("OB1".into(), self.origin_aux.to_string()),
                ("BB1".into(), self.operand_aux.to_string()),
                ("parallel to OI through B1".into(), self.aux_parallel.to_string()),
                ("parallel to OB1 through A".into(), self.operand_parallel.to_string()),
                ("parallel to BB1 through P1".into(), self.result_parallel.to_string()),
            ],
            result: self.result.clone(),
        }
    }
}

impl<P: Clone, L: std::fmt::Display> NegationTrace<P, L> {
    pub fn view(&self) -> TraceView<P> {
        let mut points = vec![("A".into(), self.a.clone())];
        let mut lines = Vec::new();
        if let Some(s) = &self.steps {
            points.push(("A1".into(), s.aux.clone()));
            points.push(("P1".into(), s.helper.clone()));
            lines = vec![
                ("OA1".into(), s.origin_aux.to_string()),
                ("parallel to OI through A1".into(), s.aux_parallel.to_string()),
                ("parallel to OA1 through A".into(), s.operand_parallel.to_string()),
                ("OP1".into(), s.origin_helper.to_string()),
                ("parallel to OP1 through A1".into(), s.result_parallel.to_string()),
            ];
        }
        points.push(("-A".into(), self.result.clone()));
        TraceView { operation: "negate", points, lines, result: self.result.clone() }
    }
}
