//! Check reports shared by the axiom, arithmetic and group checkers.

use std::fmt::{self, Display, Write as _};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Witnesses kept per report; further violations are only counted.
pub const MAX_WITNESSES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Exhaustive check, no violation.
    Holds,
    /// At least one violation found.
    Fails,
    /// Sampled check, no violation among the samples.
    SampledNoViolation,
}

impl Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::SampledNoViolation => "sampled-no-violation",
        })
    }
}

/// Labelled points of a violating configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness<P> {
    pub points: Vec<(String, P)>,
    pub note: String,
}

impl<P: Clone> Witness<P> {
    pub fn new(points: &[(&str, &P)], note: impl Into<String>) -> Self {
        Witness {
            points: points.iter().map(|(l, p)| (l.to_string(), (*p).clone())).collect(),
            note: note.into(),
        }
    }

    pub fn get(&self, label: &str) -> Option<&P> {
        self.points.iter().find(|(l, _)| l == label).map(|(_, p)| p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport<P> {
    pub property: String,
    pub model: String,
    pub exhaustive: bool,
    pub examined: u64,
    pub violation_count: u64,
    pub violations: Vec<Witness<P>>,
    pub notes: Vec<String>,
}

impl<P> CheckReport<P> {
    pub fn new(property: impl Into<String>, model: impl Into<String>, exhaustive: bool) -> Self {
        CheckReport {
            property: property.into(),
            model: model.into(),
            exhaustive,
            examined: 0,
            violation_count: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.violation_count > 0 {
            Verdict::Fails
        } else if self.exhaustive {
            Verdict::Holds
        } else {
            Verdict::SampledNoViolation
        }
    }

    /// True unless a violation was found.
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn record(&mut self, witness: Witness<P>) {
        self.violation_count += 1;
        if self.violations.len() < MAX_WITNESSES {
            self.violations.push(witness);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Sums counts and concatenates witnesses.
    pub fn merge(&mut self, other: CheckReport<P>) {
        self.examined += other.examined;
        self.violation_count += other.violation_count;
        let room = MAX_WITNESSES.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
        self.notes.extend(other.notes);
    }
}

impl<P: Display> CheckReport<P> {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "[{}] {} on {}: {} examined, {} violations ({})",
            self.verdict(),
            self.property,
            self.model,
            self.examined,
            self.violation_count,
            if self.exhaustive { "exhaustive" } else { "sampled" }
        );
        for w in &self.violations {
            let pts: Vec<String> = w.points.iter().map(|(l, p)| format!("{l}={p}")).collect();
            let _ = writeln!(out, "  witness: {} ({})", pts.join(" "), w.note);
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

impl<P: Serialize> Serialize for CheckReport<P> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckReport", 8)?;
        st.serialize_field("property", &self.property)?;
        st.serialize_field("model", &self.model)?;
        st.serialize_field("mode", if self.exhaustive { "exhaustive" } else { "sampled" })?;
        st.serialize_field("examined", &self.examined)?;
        st.serialize_field("violation_count", &self.violation_count)?;
        st.serialize_field("verdict", &self.verdict())?;
        st.serialize_field("violations", &self.violations)?;
        st.serialize_field("notes", &self.notes)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_tracks_violations() {
        let mut r: CheckReport<u32> = CheckReport::new("x", "m", true);
        assert_eq!(r.verdict(), Verdict::Holds);
        r.examined = 3;
        let mut s = CheckReport::new("x", "m", true);
        s.record(Witness::new(&[("A", &1)], "bad"));
        r.merge(s);
        assert_eq!(r.verdict(), Verdict::Fails);
        assert_eq!(r.violations.len(), 1);
        let sampled: CheckReport<u32> = CheckReport::new("x", "m", false);
        assert_eq!(sampled.verdict(), Verdict::SampledNoViolation);
    }

    #[test]
    fn witness_list_is_capped() {
        let mut r: CheckReport<u32> = CheckReport::new("x", "m", true);
        for i in 0..100 {
            r.record(Witness::new(&[("A", &i)], ""));
        }
        assert_eq!(r.violation_count, 100);
        assert_eq!(r.violations.len(), MAX_WITNESSES);
    }
}
