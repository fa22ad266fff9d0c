mod common;

use desargues_core::axioms::{
    check_desargues, check_hessenberg, check_little_pappus, desargues_witness_reproduces, pappus_witness_reproduces,
    visit_desargues_configs, visit_pappus_configs, DesarguesConfig, PappusConfig, SearchOptions,
};
use desargues_core::models::{FinitePlane, FinitePoint, MoultonPlane, QPoint, RationalPlane};
use desargues_core::rational::Q;
use desargues_core::report::Verdict;
use desargues_core::{AffinePlane, SeedRng};
use num_traits::Signed;
use rand::SeedableRng;

fn xy(p: &FinitePoint) -> (u32, u32) {
    (p.x(), p.y())
}

fn visited_desargues(p: u64) -> Vec<[(u32, u32); 6]> {
    let plane = FinitePlane::new(p).unwrap();
    let mut out = Vec::new();
    for class in plane.parallel_classes().unwrap() {
        visit_desargues_configs(&plane, &class, |c: DesarguesConfig<FinitePoint>| {
            out.push([xy(&c.a), xy(&c.a1), xy(&c.b), xy(&c.b1), xy(&c.c), xy(&c.c1)]);
            Ok(())
        })
        .unwrap();
    }
    out.sort();
    out
}

fn visited_pappus(p: u64) -> Vec<[(u32, u32); 6]> {
    let plane = FinitePlane::new(p).unwrap();
    let mut out = Vec::new();
    for class in plane.parallel_classes().unwrap() {
        visit_pappus_configs(&plane, &class, |c: PappusConfig<FinitePoint>| {
            out.push([xy(&c.a), xy(&c.b), xy(&c.c), xy(&c.a1), xy(&c.b1), xy(&c.c1)]);
            Ok(())
        })
        .unwrap();
    }
    out.sort();
    out
}

#[test]
fn desargues_enumeration_matches_coordinate_oracle() {
    for p in [2, 3] {
        let oracle = common::desargues_configs(p);
        assert_eq!(visited_desargues(p as u64), oracle, "ag2:{p}");
        for [a, a1, _, _, c, c1] in &oracle {
            assert!(common::par(p, *a, *c, *a1, *c1));
        }
    }
    assert_eq!(common::desargues_configs(3).len(), 864);
}

#[test]
fn pappus_enumeration_matches_coordinate_oracle() {
    for p in [2, 3, 5] {
        let oracle = common::pappus_configs(p);
        assert_eq!(visited_pappus(p as u64), oracle, "ag2:{p}");
        for [a, _, c, a1, _, c1] in &oracle {
            assert!(common::par(p, *a, *a1, *c, *c1));
        }
    }
}

#[test]
fn finite_planes_pass_exhaustively() {
    let mut rng = SeedRng::seed_from_u64(0);
    let expected = [(2, 0, 0), (3, 864, 432), (5, 144_000, 36_000)];
    for (p, d_count, p_count) in expected {
        let plane = FinitePlane::new(p).unwrap();
        let d = check_desargues(&plane, &SearchOptions::default(), &mut rng);
        let pp = check_little_pappus(&plane, &SearchOptions::default(), &mut rng);
        assert!(d.exhaustive && pp.exhaustive);
        assert_eq!((d.examined, pp.examined), (d_count, p_count), "ag2:{p}");
        assert_eq!(d.verdict(), Verdict::Holds);
        assert_eq!(pp.verdict(), Verdict::Holds);
        assert_eq!(check_hessenberg(&plane).unwrap().verdict(), Verdict::Holds);
    }
}

#[test]
fn rational_plane_samples_without_violation() {
    let mut rng = SeedRng::seed_from_u64(3);
    let plane = RationalPlane::new();
    let opts = SearchOptions::with_budget(300);
    assert_eq!(check_desargues(&plane, &opts, &mut rng).verdict(), Verdict::SampledNoViolation);
    assert_eq!(check_little_pappus(&plane, &opts, &mut rng).verdict(), Verdict::SampledNoViolation);
}

/// Slope-class label of the Moulton line through two points, derived from
/// the piecewise definition: `None` for verticals, otherwise the left slope.
fn moulton_class(p: &QPoint, r: &QPoint) -> Option<Q> {
    if p.x == r.x {
        return None;
    }
    let (l, h) = if p.x < r.x { (p, r) } else { (r, p) };
    let s = (&h.y - &l.y) / (&h.x - &l.x);
    if !s.is_negative() {
        return Some(s);
    }
    let zero = Q::from_integer(0.into());
    let two = Q::from_integer(2.into());
    Some(if h.x <= zero {
        s
    } else if l.x > zero {
        s / two
    } else {
        (&h.y - &l.y) / (two * &h.x - &l.x)
    })
}

#[test]
fn moulton_violates_desargues_and_witnesses_recheck() {
    let plane = MoultonPlane::new();
    let mut rng = SeedRng::seed_from_u64(42);
    let report = check_desargues(&plane, &SearchOptions::with_budget(2000), &mut rng);
    assert_eq!(report.verdict(), Verdict::Fails);
    assert!(!report.violations.is_empty());
    for w in &report.violations {
        assert!(desargues_witness_reproduces(&plane, w).unwrap());
        let c = DesarguesConfig::from_witness(w).unwrap();
        let cls = |a: &QPoint, b: &QPoint| moulton_class(a, b);
        assert_eq!(cls(&c.a, &c.a1), cls(&c.b, &c.b1));
        assert_eq!(cls(&c.a, &c.a1), cls(&c.c, &c.c1));
        assert_eq!(cls(&c.a, &c.b), cls(&c.a1, &c.b1));
        assert_eq!(cls(&c.b, &c.c), cls(&c.b1, &c.c1));
        assert_ne!(cls(&c.a, &c.c), cls(&c.a1, &c.c1));
    }
}

#[test]
fn moulton_pappus_witnesses_recheck() {
    let plane = MoultonPlane::new();
    let mut rng = SeedRng::seed_from_u64(42);
    let report = check_little_pappus(&plane, &SearchOptions::with_budget(500), &mut rng);
    for w in &report.violations {
        assert!(pappus_witness_reproduces(&plane, w).unwrap());
    }
}

#[test]
fn hessenberg_needs_a_finite_model() {
    assert!(check_hessenberg(&MoultonPlane::new()).is_err());
}

#[test]
fn runs_are_reproducible() {
    let plane = MoultonPlane::new();
    let run = |seed| {
        let mut rng = SeedRng::seed_from_u64(seed);
        serde_json::to_string(&check_desargues(&plane, &SearchOptions::with_budget(200), &mut rng)).unwrap()
    };
    assert_eq!(run(9), run(9));
}
