//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use desargues_core::arithmetic::{
    add, check_degenerate_cases, check_independence_sweep, check_unit_irrelevance, negate, LineFrame,
    SweepOptions,
};
use desargues_core::axioms::{
    check_axioms, check_desargues, check_hessenberg, check_little_pappus, desargues_witness_reproduces,
    DesarguesConfig, SearchOptions,
};
use desargues_core::group::{build_cayley_table, verify_group};
use desargues_core::models::{FinitePlane, MoultonPlane, QPoint, RationalPlane};
use desargues_core::rational::Q;
use desargues_core::report::Verdict;
use desargues_core::{AffinePlane, SeedRng};
use num_traits::Signed;
use rand::SeedableRng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SMALL: [u64; 3] = [2, 3, 5];
const TABLES: [u64; 4] = [2, 3, 5, 7];
const RUNTIME_LIMIT: Duration = Duration::from_secs(60);
const RATIONAL_SAMPLES: usize = 100;
const MOULTON_BUDGET: u64 = 2_000;
const MOULTON_SEED: u64 = 42;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn plane(p: u64) -> FinitePlane {
    FinitePlane::new(p).expect("prime order")
}

fn x_axis(plane: &FinitePlane) -> LineFrame<'_, FinitePlane> {
    LineFrame::new(plane, plane.pt(0, 0), plane.pt(1, 0)).expect("frame")
}

fn rational_frame(plane: &RationalPlane) -> LineFrame<'_, RationalPlane> {
    LineFrame::new(plane, QPoint::from_ints(0, 0), QPoint::from_ints(1, 0)).expect("frame")
}

fn axiom_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = SeedRng::seed_from_u64(0);
    let mut total = 0;
    for p in SMALL {
        let plane = plane(p);
        let ax = check_axioms(&plane, 0, &mut rng);
        let d = check_desargues(&plane, &SearchOptions::default(), &mut rng);
        let pp = check_little_pappus(&plane, &SearchOptions::default(), &mut rng);
        for r in ax.reports().into_iter().chain([&d, &pp]) {
            ensure(r.exhaustive && r.verdict() == Verdict::Holds, r.to_text().trim_end().to_string())?;
            total += r.examined;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < RUNTIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("{total} exhaustive cases, 0 violations, {:.2}s", elapsed.as_secs_f64()))
}

fn hessenberg() -> Outcome {
    for p in SMALL {
        let r = check_hessenberg(&plane(p)).map_err(|e| e.to_string())?;
        ensure(r.passed(), r.to_text())?;
    }
    Ok(format!("no counterexample on ag2:{SMALL:?}"))
}

fn well_definedness() -> Outcome {
    let mut detail = Vec::new();
    for p in SMALL {
        let plane = plane(p);
        let r = check_independence_sweep(&x_axis(&plane), &SweepOptions::default(), &mut SeedRng::seed_from_u64(0))
            .map_err(|e| e.to_string())?;
        let n = p * p;
        ensure(r.examined == n * (n - p), format!("ag2:{p}: {} cases, expected {}", r.examined, n * (n - p)))?;
        ensure(r.passed(), r.to_text())?;
        detail.push(format!("ag2:{p} {}", r.examined));
    }
    Ok(format!("{} cases, 0 violations", detail.join(", ")))
}

fn degenerate_cases() -> Outcome {
    let mut cases = 0;
    for p in SMALL {
        let plane = plane(p);
        let f = x_axis(&plane);
        let aux = f.off_line_points().expect("finite");
        for a in f.points().expect("finite") {
            let r = check_degenerate_cases(&f, &a, &aux).map_err(|e| e.to_string())?;
            ensure(r.passed(), r.to_text())?;
            cases += r.examined;
        }
    }
    let plane = RationalPlane::new();
    let f = rational_frame(&plane);
    let mut rng = SeedRng::seed_from_u64(4);
    let mut samples = 0;
    while samples < RATIONAL_SAMPLES {
        let aux = plane.sample_point(&mut rng);
        if f.contains(&aux) {
            continue;
        }
        let a = plane.sample_point_on(f.line(), &mut rng);
        let r = check_degenerate_cases(&f, &a, &[aux]).map_err(|e| e.to_string())?;
        ensure(r.passed(), r.to_text())?;
        samples += 1;
    }
    Ok(format!("{cases} finite cases, {samples} rational samples"))
}

fn group_axioms() -> Outcome {
    for p in TABLES {
        let plane = plane(p);
        let t = build_cayley_table(&x_axis(&plane)).map_err(|e| e.to_string())?;
        let v = verify_group(&t.table);
        let parts = [
            ("closure", &v.closure),
            ("latin square", &v.latin_square),
            ("identity", &v.identity),
            ("inverses", &v.inverses),
            ("associativity", &v.associativity),
            ("commutativity", &v.commutativity),
        ];
        for (name, c) in parts {
            ensure(c.holds, format!("ag2:{p} {name}: {:?}", c.witness))?;
        }
    }
    Ok(format!("ag2:{TABLES:?} abelian, Latin"))
}

/// `(i + j) mod p`, computed without the geometry.
fn oracle_table(p: usize) -> Vec<Vec<usize>> {
    (0..p).map(|i| (0..p).map(|j| (i + j) % p).collect()).collect()
}

fn coordinate_oracle() -> Outcome {
    for p in TABLES {
        let plane = plane(p);
        let t = build_cayley_table(&x_axis(&plane)).map_err(|e| e.to_string())?;
        let order: Vec<_> = (0..p as u32).map(|x| plane.pt(x, 0)).collect();
        ensure(t.elements == order, format!("ag2:{p}: element order {:?}", t.elements))?;
        ensure(t.table == oracle_table(p as usize), format!("ag2:{p}: table differs from mod-p addition"))?;
    }
    Ok("exact equality for ag2:2,3,5,7".into())
}

fn inverses() -> Outcome {
    let mut count = 0;
    for p in TABLES {
        let plane = plane(p);
        let n = p as u32;
        for (o, i) in [((0, 0), (1, 0)), ((1, 1), (2, n.min(3) - 1)), ((0, 1), (0, 0))] {
            let f = LineFrame::new(&plane, plane.pt(o.0 % n, o.1 % n), plane.pt(i.0 % n, i.1 % n))
                .map_err(|e| e.to_string())?;
            for a in f.points().expect("finite") {
                let neg = negate(&f, &a).map_err(|e| e.to_string())?.result;
                let back = add(&f, &a, &neg).map_err(|e| e.to_string())?;
                ensure(&back == f.origin(), format!("ag2:{p}: {a} + {neg} = {back}"))?;
                count += 1;
            }
        }
    }
    let plane = RationalPlane::new();
    let f = rational_frame(&plane);
    let mut rng = SeedRng::seed_from_u64(7);
    for _ in 0..RATIONAL_SAMPLES {
        let a = plane.sample_point_on(f.line(), &mut rng);
        let neg = negate(&f, &a).map_err(|e| e.to_string())?.result;
        let back = add(&f, &a, &neg).map_err(|e| e.to_string())?;
        ensure(&back == f.origin(), format!("rational: {a} + {neg} = {back}"))?;
    }
    Ok(format!("{count} finite operands, {RATIONAL_SAMPLES} rational samples"))
}

/// Moulton slope class of the line through two points, from the piecewise
/// definition: `None` for verticals, else the slope left of the y-axis.
fn moulton_class(p: &QPoint, r: &QPoint) -> Option<Q> {
    if p.x == r.x {
        return None;
    }
    let (l, h) = if p.x < r.x { (p, r) } else { (r, p) };
    let s = (&h.y - &l.y) / (&h.x - &l.x);
    let zero = Q::from_integer(0.into());
    let two = Q::from_integer(2.into());
    Some(if !s.is_negative() || h.x <= zero {
        s
    } else if l.x > zero {
        s / two
    } else {
        (&h.y - &l.y) / (two * &h.x - &l.x)
    })
}

fn moulton_negative() -> Outcome {
    let plane = MoultonPlane::new();
    let mut rng = SeedRng::seed_from_u64(MOULTON_SEED);
    let r = check_desargues(&plane, &SearchOptions::with_budget(MOULTON_BUDGET), &mut rng);
    ensure(r.examined <= 1_000_000, "budget above 10^6")?;
    let w = r.violations.first().ok_or(format!("no violation in {} configurations", r.examined))?;
    ensure(desargues_witness_reproduces(&plane, w).map_err(|e| e.to_string())?, "witness does not reproduce")?;
    let c = DesarguesConfig::from_witness(w).ok_or("malformed witness")?;
    let k = moulton_class;
    ensure(
        k(&c.a, &c.a1) == k(&c.b, &c.b1)
            && k(&c.b, &c.b1) == k(&c.c, &c.c1)
            && k(&c.a, &c.b) == k(&c.a1, &c.b1)
            && k(&c.b, &c.c) == k(&c.b1, &c.c1)
            && k(&c.a, &c.c) != k(&c.a1, &c.c1),
        "witness fails the slope-class recheck",
    )?;
    let f = LineFrame::new(&plane, QPoint::from_ints(0, 0), QPoint::from_ints(1, 0)).expect("frame");
    let ind = check_independence_sweep(&f, &SweepOptions::default(), &mut SeedRng::seed_from_u64(MOULTON_SEED))
        .map_err(|e| e.to_string())?;
    Ok(format!(
        "{} of {} seeded configurations violate D1 (seed {MOULTON_SEED}); independence findings: {} of {} cases depend on the auxiliary",
        r.violation_count, r.examined, ind.violation_count, ind.examined
    ))
}

fn unit_irrelevance() -> Outcome {
    let plane = plane(5);
    let f = x_axis(&plane);
    let units: Vec<_> = (2..5).map(|x| plane.pt(x, 0)).collect();
    let r = check_unit_irrelevance(&f, &units).map_err(|e| e.to_string())?;
    ensure(r.passed() && r.examined == 75, r.to_text())?;
    Ok("25 sums unchanged for each of 3 alternative units".into())
}

fn cli(args: &[&str]) -> Vec<u8> {
    let o = Command::new(env!("CARGO_BIN_EXE_desargues")).args(args).output().expect("binary runs");
    let mut bytes = o.stdout;
    bytes.extend(o.stderr);
    bytes.extend(format!("exit {:?}", o.status.code()).bytes());
    bytes
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 10] = [
        &["axioms", "--model", "ag2:3"],
        &["axioms", "--model", "moulton", "--budget", "300", "--seed", "5"],
        &["desargues", "--model", "rational", "--budget", "300", "--seed", "5", "--json"],
        &["pappus", "--model", "moulton", "--budget", "300", "--seed", "5", "--format", "csv"],
        &["add", "--model", "rational", "--A", "3,0", "--B", "-1,0", "--json"],
        &["negate", "--model", "ag2:7", "--A", "1,0"],
        &["independence", "--model", "moulton", "--budget", "200", "--seed", "5"],
        &["independence", "--model", "ag2:3", "--json"],
        &["cayley", "--model", "ag2:5"],
        &["diagram", "--model", "moulton", "--A", "-1,0", "--B", "1,0"],
    ];
    for args in commands {
        ensure(cli(args) == cli(args), format!("output differs between runs: {args:?}"))?;
    }
    let cayley = Command::new(env!("CARGO_BIN_EXE_desargues"))
        .args(["cayley", "--model", "ag2:3", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(cayley.stdout == include_bytes!("golden/cayley_ag2_3.json"), "cayley golden mismatch")?;
    let svg = Command::new(env!("CARGO_BIN_EXE_desargues"))
        .args(["diagram", "--model", "rational", "--A", "3,0", "--B", "-1,0"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(svg.stdout == include_bytes!("golden/add_rational.svg"), "diagram golden mismatch")?;
    Ok(format!("{} commands byte-identical across runs, 2 golden files match", commands.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("axiom suite on ag2:2,3,5 (exhaustive, < 60 s)", axiom_suite),
        ("Hessenberg implication on finite models", hessenberg),
        ("sum independent of the auxiliary point", well_definedness),
        ("degenerate sums O+O, O+B, A+O", degenerate_cases),
        ("Cayley tables are abelian groups", group_axioms),
        ("Cayley tables equal addition mod p", coordinate_oracle),
        ("negation gives additive inverses", inverses),
        ("Moulton plane violates D1", moulton_negative),
        ("sums independent of the unit point", unit_irrelevance),
        ("deterministic CLI output and golden files", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
