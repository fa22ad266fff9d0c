//! Coordinate oracles written directly against `Z/p` and `Q`, without the
//! incidence API.
#![allow(dead_code)]

pub type Pt = (u32, u32);

pub fn sub(p: u32, a: Pt, b: Pt) -> Pt {
    ((a.0 + p - b.0) % p, (a.1 + p - b.1) % p)
}

/// Zero iff the two direction vectors are parallel.
pub fn cross(p: u32, u: Pt, v: Pt) -> u32 {
    let l = (u.0 as u64 * v.1 as u64) % p as u64;
    let r = (u.1 as u64 * v.0 as u64) % p as u64;
    ((l + p as u64 - r) % p as u64) as u32
}

pub fn par(p: u32, a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    cross(p, sub(p, b, a), sub(p, d, c)) == 0
}

pub fn collinear(p: u32, a: Pt, b: Pt, c: Pt) -> bool {
    par(p, a, b, a, c)
}

/// The `p + 1` directions, each with its lines as point lists.
pub fn classes(p: u32) -> Vec<Vec<Vec<Pt>>> {
    let mut dirs: Vec<Pt> = (0..p).map(|m| (1, m)).collect();
    dirs.push((0, 1));
    dirs.into_iter()
        .map(|d| {
            let mut lines: Vec<Vec<Pt>> = vec![Vec::new(); p as usize];
            for x in 0..p {
                for y in 0..p {
                    lines[cross(p, d, (x, y)) as usize].push((x, y));
                }
            }
            lines
        })
        .collect()
}

/// Every Desargues configuration `(A, A1, B, B1, C, C1)` of AG(2,p) meeting
/// the hypotheses, with non-collinear triangles.
pub fn desargues_configs(p: u32) -> Vec<[Pt; 6]> {
    let mut out = Vec::new();
    for class in classes(p) {
        let n = class.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    for &a in &class[i] {
                        for &a1 in &class[i] {
                            if a == a1 {
                                continue;
                            }
                            for &b in &class[j] {
                                for &b1 in &class[j] {
                                    if !par(p, a, b, a1, b1) {
                                        continue;
                                    }
                                    for &c in &class[k] {
                                        for &c1 in &class[k] {
                                            if par(p, b, c, b1, c1)
                                                && !collinear(p, a, b, c)
                                                && !collinear(p, a1, b1, c1)
                                            {
                                                out.push([a, a1, b, b1, c, c1]);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Every little-Pappus configuration `(A, B, C, A1, B1, C1)`: distinct
/// triples on two distinct parallel lines with `AB1 ∥ BC1`, `BA1 ∥ CB1`.
pub fn pappus_configs(p: u32) -> Vec<[Pt; 6]> {
    let mut out = Vec::new();
    for class in classes(p) {
        for (gi, g) in class.iter().enumerate() {
            for (hi, h) in class.iter().enumerate() {
                if gi == hi {
                    continue;
                }
                for &a in g {
                    for &b in g {
                        for &c in g {
                            if a == b || b == c || a == c {
                                continue;
                            }
                            for &a1 in h {
                                for &b1 in h {
                                    for &c1 in h {
                                        if a1 == b1 || b1 == c1 || a1 == c1 {
                                            continue;
                                        }
                                        if par(p, a, b1, b, c1) && par(p, b, a1, c, b1) {
                                            out.push([a, b, c, a1, b1, c1]);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Point `O + t·(I − O)` of AG(2,p).
pub fn on_frame(p: u32, o: Pt, i: Pt, t: u32) -> Pt {
    let d = sub(p, i, o);
    ((o.0 + t * d.0) % p, (o.1 + t * d.1) % p)
}
