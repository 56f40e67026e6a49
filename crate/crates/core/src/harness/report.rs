use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use crate::subgroup::SubgroupSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Confirmed,
    Vacuous,
    Violation,
    Skipped,
}

impl Status {
    pub fn from_implication(hypothesis: bool, conclusion: bool) -> Self {
        match (hypothesis, conclusion) {
            (true, true) => Status::Confirmed,
            (true, false) => Status::Violation,
            (false, _) => Status::Vacuous,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::Vacuous => "vacuous",
            Status::Violation => "violation",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipKind {
    OverCap,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub group: String,
    pub case: String,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip: Option<SkipKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub certificates: Value,
}

impl Entry {
    pub fn implication(
        group: &str,
        case: impl Into<String>,
        hypothesis: bool,
        conclusion: bool,
        certificates: Value,
    ) -> Self {
        Self {
            group: group.to_string(),
            case: case.into(),
            hypothesis,
            conclusion,
            status: Status::from_implication(hypothesis, conclusion),
            skip: None,
            reason: None,
            certificates,
        }
    }

    pub fn skipped(group: &str, kind: SkipKind, reason: impl Into<String>) -> Self {
        Self {
            group: group.to_string(),
            case: String::new(),
            hypothesis: false,
            conclusion: false,
            status: Status::Skipped,
            skip: Some(kind),
            reason: Some(reason.into()),
            certificates: Value::Null,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub confirmed: usize,
    pub vacuous: usize,
    pub violation: usize,
    pub skipped: usize,
    pub skipped_errors: usize,
}

impl Summary {
    pub fn of(entries: &[Entry]) -> Self {
        let mut s = Summary {
            total: entries.len(),
            ..Default::default()
        };
        for e in entries {
            match e.status {
                Status::Confirmed => s.confirmed += 1,
                Status::Vacuous => s.vacuous += 1,
                Status::Violation => s.violation += 1,
                Status::Skipped => {
                    s.skipped += 1;
                    if e.skip == Some(SkipKind::Error) {
                        s.skipped_errors += 1;
                    }
                }
            }
        }
        s
    }

    fn add(&mut self, other: &Summary) {
        self.total += other.total;
        self.confirmed += other.confirmed;
        self.vacuous += other.vacuous;
        self.violation += other.violation;
        self.skipped += other.skipped;
        self.skipped_errors += other.skipped_errors;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub entries: Vec<Entry>,
    pub summary: Summary,
    /// Kept out of the JSON so reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn new(suite: &str, entries: Vec<Entry>, wall_time: Duration) -> Self {
        Self {
            suite: suite.to_string(),
            summary: Summary::of(&entries),
            entries,
            wall_time,
        }
    }

    pub fn entries_for<'a>(&'a self, group: &'a str) -> impl Iterator<Item = &'a Entry> {
        self.entries.iter().filter(move |e| e.group == group)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn new(suites: Vec<SuiteReport>) -> Self {
        let mut summary = Summary::default();
        for s in &suites {
            summary.add(&s.summary);
        }
        Self { suites, summary }
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// One line per entry plus per-suite summaries, mirroring the JSON.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for suite in &self.suites {
            for e in &suite.entries {
                let _ = write!(out, "{:<11} {:<10} {:<14} {}", suite.suite, e.status.as_str(), e.group, e.case);
                if let Some(reason) = &e.reason {
                    let _ = write!(out, " ({reason})");
                }
                out.push('\n');
            }
            let s = &suite.summary;
            let _ = writeln!(
                out,
                "{:<11} summary: {} confirmed, {} vacuous, {} violation, {} skipped [{:.2?}]",
                suite.suite, s.confirmed, s.vacuous, s.violation, s.skipped, suite.wall_time
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total: {} entries, {} confirmed, {} vacuous, {} violation, {} skipped",
            s.total, s.confirmed, s.vacuous, s.violation, s.skipped
        );
        out
    }
}

pub fn subgroup_json(s: &SubgroupSet) -> Value {
    let gens: Vec<String> = s.generator_permutations().iter().map(|p| p.to_string()).collect();
    json!({ "order": s.order(), "generators": gens })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_implication() {
        assert_eq!(Status::from_implication(true, true), Status::Confirmed);
        assert_eq!(Status::from_implication(true, false), Status::Violation);
        assert_eq!(Status::from_implication(false, false), Status::Vacuous);
        assert_eq!(Status::from_implication(false, true), Status::Vacuous);
    }

    #[test]
    fn summary_counts() {
        let entries = vec![
            Entry::implication("g", "", true, true, Value::Null),
            Entry::implication("g", "", false, true, Value::Null),
            Entry::skipped("h", SkipKind::OverCap, "too big"),
            Entry::skipped("h", SkipKind::Error, "boom"),
        ];
        let s = Summary::of(&entries);
        assert_eq!((s.total, s.confirmed, s.vacuous, s.skipped, s.skipped_errors), (4, 1, 1, 2, 1));
        let json = serde_json::to_value(&entries[2]).unwrap();
        assert_eq!(json["status"], "skipped");
        assert_eq!(json["skip"], "over-cap");
    }
}
