//! Check rows and reports, rendered as a text table or JSON.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        })
    }
}

/// One verified claim. `paper_ref` names the claim being audited.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub observed: String,
    pub paper_ref: String,
}

impl Check {
    pub fn new(name: &str, ok: bool, expected: impl ToString, observed: impl ToString, claim: &str) -> Check {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            observed: observed.to_string(),
            paper_ref: claim.into(),
        }
    }

    /// Compares two displayable values for equality of their renderings.
    pub fn eq(name: &str, expected: impl ToString, observed: impl ToString, claim: &str) -> Check {
        let (e, o) = (expected.to_string(), observed.to_string());
        Check::new(name, e == o, e.clone(), o, claim)
    }

    pub fn with_status(mut self, s: Status) -> Check {
        self.status = s;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub target: String,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(target: &str, seed: u64) -> Report {
        Report { target: target.into(), checks: Vec::new(), seed, tolerances: BTreeMap::new() }
    }

    pub fn all_pass(&self, allow_unknown: bool) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass || (allow_unknown && c.status == Status::Unknown))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let header = ["check", "status", "expected", "observed", "claim"];
        let rows: Vec<[String; 5]> = self
            .checks
            .iter()
            .map(|c| {
                [c.name.clone(), c.status.to_string(), c.expected.clone(), c.observed.clone(), c.paper_ref.clone()]
            })
            .collect();
        let mut w = header.map(|h| h.chars().count());
        for r in &rows {
            for (i, cell) in r.iter().enumerate() {
                w[i] = w[i].max(cell.chars().count());
            }
        }
        let line = |cells: [&str; 5]| -> String {
            let mut s = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i == 4 {
                    s.push_str(cell);
                } else {
                    s.push_str(cell);
                    s.push_str(&" ".repeat(w[i] - cell.chars().count() + 2));
                }
            }
            s.trim_end().to_string()
        };
        let mut out = format!("target: {}  seed: {}\n", self.target, self.seed);
        for (k, v) in &self.tolerances {
            out.push_str(&format!("tolerance {k}: {v:e}\n"));
        }
        out.push_str(&line(header));
        out.push('\n');
        for r in &rows {
            out.push_str(&line([&r[0], &r[1], &r[2], &r[3], &r[4]]));
            out.push('\n');
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }
}
