//! Cayley tables of finite line frames and their group-axiom verification.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arithmetic::{add, LineFrame};
use crate::error::{GeometryError, ParseError, Result};
use crate::incidence::AffinePlane;

/// The addition table of a finite line. Entry `(i, j)` is the index of
/// `elements[i] + elements[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyTable<P> {
    pub model: String,
    pub elements: Vec<P>,
    pub table: Vec<Vec<usize>>,
}

impl<P> CayleyTable<P> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Builds the table with elements ordered `O, I, I+I, …`; any points not
/// reached that way (impossible in a group of prime order) follow in the
/// model's order.
pub fn build_cayley_table<M: AffinePlane>(frame: &LineFrame<'_, M>) -> Result<CayleyTable<M::Point>> {
    let pts = frame.points().ok_or(GeometryError::UnsupportedModel)?;
    let mut elements = vec![frame.origin().clone()];
    let mut cur = frame.unit().clone();
    while cur != *frame.origin() && !elements.contains(&cur) && elements.len() < pts.len() {
        elements.push(cur.clone());
        cur = add(frame, &cur, frame.unit())?;
    }
    for p in pts {
        if !elements.contains(&p) {
            elements.push(p);
        }
    }
    let index = |p: &M::Point| elements.iter().position(|e| e == p);
    let mut table = Vec::with_capacity(elements.len());
    for a in &elements {
        let row = elements
            .iter()
            .map(|b| {
                let c = add(frame, a, b)?;
                index(&c).ok_or(GeometryError::ConstructionFailed("sum left the line"))
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    Ok(CayleyTable { model: frame.plane().model_id(), elements, table })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Component {
    fn ok() -> Self {
        Component { holds: true, witness: None }
    }
    fn fail(w: String) -> Self {
        Component { holds: false, witness: Some(w) }
    }
}

/// Group-axiom verdicts for a table whose element 0 is the identity
/// candidate `O` and element 1 the unit `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupVerdict {
    pub closure: Component,
    pub latin_square: Component,
    pub identity: Component,
    pub inverses: Component,
    pub associativity: Component,
    pub commutativity: Component,
    pub iso_to_zp: Component,
    /// Residue assigned to each element index by the isomorphism.
    pub bijection: Option<Vec<usize>>,
    /// Every component above holds, including the `Z_n` isomorphism.
    pub holds: bool,
}

/// Checks closure, the Latin-square property, identity at index 0,
/// inverses, associativity over all triples, commutativity and the
/// isomorphism to `Z_n`.
pub fn verify_group(table: &[Vec<usize>]) -> GroupVerdict {
    let n = table.len();
    let closure = match (0..n).find_map(|i| {
        if table[i].len() != n {
            return Some(format!("row {i} has {} entries", table[i].len()));
        }
        (0..n).find(|&j| table[i][j] >= n).map(|j| format!("entry ({i},{j}) = {} out of range", table[i][j]))
    }) {
        None if n > 0 => Component::ok(),
        None => Component::fail("empty table".into()),
        Some(w) => Component::fail(w),
    };
    if !closure.holds {
        let no = || Component::fail("table not closed".into());
        return GroupVerdict {
            closure,
            latin_square: no(),
            identity: no(),
            inverses: no(),
            associativity: no(),
            commutativity: no(),
            iso_to_zp: no(),
            bijection: None,
            holds: false,
        };
    }
    let t = |i: usize, j: usize| table[i][j];

    let latin_square = {
        let mut w = None;
        'l: for k in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for m in 0..n {
                if std::mem::replace(&mut row[t(k, m)], true) {
                    w = Some(format!("row {k} repeats {}", t(k, m)));
                    break 'l;
                }
                if std::mem::replace(&mut col[t(m, k)], true) {
                    w = Some(format!("column {k} repeats {}", t(m, k)));
                    break 'l;
                }
            }
        }
        w.map_or_else(Component::ok, Component::fail)
    };

    let identity = match (0..n).find(|&x| t(0, x) != x || t(x, 0) != x) {
        None => Component::ok(),
        Some(x) => Component::fail(format!("O + e{x} or e{x} + O is not e{x}")),
    };

    let inverses = match (0..n).find(|&x| !(0..n).any(|y| t(x, y) == 0)) {
        None => Component::ok(),
        Some(x) => Component::fail(format!("e{x} has no right inverse")),
    };

    let associativity = {
        let mut w = None;
        'a: for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    if t(t(a, b), d) != t(a, t(b, d)) {
                        w = Some(format!("(e{a}+e{b})+e{d} != e{a}+(e{b}+e{d})"));
                        break 'a;
                    }
                }
            }
        }
        w.map_or_else(Component::ok, Component::fail)
    };

    let commutativity = {
        let w = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| t(i, j) != t(j, i));
        match w {
            None => Component::ok(),
            Some((i, j)) => Component::fail(format!("e{i}+e{j} != e{j}+e{i}")),
        }
    };

    let (iso_to_zp, bijection) = check_iso_to_zn(table);
    let holds = [&closure, &latin_square, &identity, &inverses, &associativity, &commutativity, &iso_to_zp]
        .iter()
        .all(|c| c.holds);
    GroupVerdict {
        closure,
        latin_square,
        identity,
        inverses,
        associativity,
        commutativity,
        iso_to_zp,
        bijection,
        holds,
    }
}

/// Extends `O ↦ 0`, `I ↦ 1`, `k·I ↦ k` and checks that it is a bijection
/// carrying the table to addition mod `n`. Requires a closed table.
pub fn check_iso_to_zn(table: &[Vec<usize>]) -> (Component, Option<Vec<usize>>) {
    let n = table.len();
    if n == 1 {
        return if table[0][0] == 0 { (Component::ok(), Some(vec![0])) } else { (Component::fail("1x1 table is not trivial".into()), None) };
    }
    let mut residue = vec![usize::MAX; n];
    residue[0] = 0;
    let mut cur = 1;
    for k in 1..n {
        if residue[cur] != usize::MAX {
            return (Component::fail(format!("multiples of I repeat after {k} steps")), None);
        }
        residue[cur] = k;
        cur = table[cur][1];
    }
    if cur != 0 {
        return (Component::fail(format!("{n}·I is not O")), None);
    }
    for i in 0..n {
        for j in 0..n {
            if residue[table[i][j]] != (residue[i] + residue[j]) % n {
                return (Component::fail(format!("e{i}+e{j} does not map to a sum mod {n}")), None);
            }
        }
    }
    (Component::ok(), Some(residue))
}

/// JSON document for a Cayley table; keys appear in this order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CayleyDocument<P> {
    pub model: String,
    pub order: usize,
    pub elements: Vec<P>,
    pub table: Vec<Vec<usize>>,
    pub verdict: GroupVerdict,
}

impl<P: Clone> CayleyDocument<P> {
    pub fn new(table: &CayleyTable<P>) -> Self {
        CayleyDocument {
            model: table.model.clone(),
            order: table.order(),
            elements: table.elements.clone(),
            table: table.table.clone(),
            verdict: verify_group(&table.table),
        }
    }
}

/// Parses a Cayley JSON document and checks its shape (square table of
/// the stated order, one element per row).
pub fn parse_cayley_json(s: &str) -> std::result::Result<CayleyDocument<serde_json::Value>, ParseError> {
    let doc: CayleyDocument<serde_json::Value> = serde_json::from_str(s).map_err(|e| ParseError::Table(e.to_string()))?;
    if doc.elements.len() != doc.order || doc.table.len() != doc.order {
        return Err(ParseError::Table(format!(
            "order {} but {} elements and {} rows",
            doc.order,
            doc.elements.len(),
            doc.table.len()
        )));
    }
    if let Some(i) = doc.table.iter().position(|r| r.len() != doc.order) {
        return Err(ParseError::Table(format!("row {i} has {} entries", doc.table[i].len())));
    }
    Ok(doc)
}

/// The bare index matrix, one row per line.
pub fn table_to_csv(table: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for row in table {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

pub fn table_to_text<P: std::fmt::Display>(table: &CayleyTable<P>, verdict: &GroupVerdict) -> String {
    let labels: Vec<String> = table.elements.iter().map(|e| e.to_string()).collect();
    let w = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(1);
    let mut out = String::new();
    let _ = writeln!(out, "Cayley table of {} (order {})", table.model, table.order());
    let _ = write!(out, "{:>w$} |", "+");
    for l in &labels {
        let _ = write!(out, " {l:>w$}");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{}", "-".repeat((w + 1) * (labels.len() + 1) + 1));
    for (i, row) in table.table.iter().enumerate() {
        let _ = write!(out, "{:>w$} |", labels[i]);
        for &j in row {
            let _ = write!(out, " {:>w$}", labels[j]);
        }
        let _ = writeln!(out);
    }
    for (name, c) in [
        ("closure", &verdict.closure),
        ("latin square", &verdict.latin_square),
        ("identity", &verdict.identity),
        ("inverses", &verdict.inverses),
        ("associativity", &verdict.associativity),
        ("commutativity", &verdict.commutativity),
        ("isomorphic to Z_n", &verdict.iso_to_zp),
    ] {
        let _ = writeln!(
            out,
            "{name}: {}{}",
            if c.holds { "holds" } else { "fails" },
            c.witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default()
        );
    }
    let _ = writeln!(out, "abelian group: {}", if verdict.holds { "yes" } else { "no" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn cyclic_tables_pass() {
        for n in 1..8 {
            let v = verify_group(&zn(n));
            assert!(v.holds, "Z_{n}: {v:?}");
            assert_eq!(v.bijection, Some((0..n).collect()));
        }
    }

    #[test]
    fn corrupted_entry_is_caught() {
        let mut t = zn(5);
        t[2][3] = 4;
        let v = verify_group(&t);
        assert!(!v.holds);
        assert!(!v.latin_square.holds);
        assert!(v.latin_square.witness.is_some());
    }

    #[test]
    fn out_of_range_entry_breaks_closure() {
        let mut t = zn(3);
        t[1][1] = 7;
        let v = verify_group(&t);
        assert!(!v.closure.holds);
        assert!(!v.holds);
    }

    #[test]
    fn klein_four_is_a_group_but_not_cyclic() {
        let t: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let v = verify_group(&t);
        assert!(v.associativity.holds && v.commutativity.holds && v.inverses.holds && v.identity.holds);
        assert!(!v.iso_to_zp.holds);
        assert!(!v.holds);
    }

    #[test]
    fn rejects_ragged_documents() {
        let bad = r#"{"model":"x","order":2,"elements":[[0,0],[1,0]],"table":[[0,1],[1]],"verdict":null}"#;
        assert!(parse_cayley_json(bad).is_err());
        assert!(parse_cayley_json("not json").is_err());
    }
}
