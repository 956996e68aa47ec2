//! Serialized suite reports (JSON and plain text).

use std::fmt::Write as _;

use qgroup_core::report::CheckReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One check: its residual is the list of nonzero `(monomial, "p/q")` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub residual: Vec<(String, String)>,
    /// Wall time of the job that produced the check.
    pub ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn from_report(label: &str, r: &CheckReport, ms: u64) -> Self {
        let residual = r
            .failing_terms()
            .map(|(item, t)| (format!("{item}: {}", t.basis), t.coeff.to_pq()))
            .collect();
        CheckRecord {
            name: format!("{label}/{}", r.name),
            anchor: r.anchor.clone(),
            status: if r.passed() { Status::Pass } else { Status::Fail },
            residual,
            ms,
            note: r.note.clone(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub model: String,
    pub order: u32,
    /// `None` for suites that involve no coordinate algebra.
    pub degree: Option<u32>,
    pub mu: String,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable summary; at most `limit` residual terms per check.
    pub fn to_text(&self, limit: usize) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "suite {} | model {} | order {} | degree {} | mu {}",
            self.suite,
            self.model,
            self.order,
            self.degree.map_or("-".into(), |d| d.to_string()),
            self.mu
        );
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{tag} {} ({}) {} ms", c.name, c.anchor, c.ms);
            if let Some(n) = &c.note {
                let _ = writeln!(s, "     {n}");
            }
            for (m, q) in c.residual.iter().take(limit) {
                let _ = writeln!(s, "     {q}  {m}");
            }
            if c.residual.len() > limit {
                let _ = writeln!(s, "     … {} more terms", c.residual.len() - limit);
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        let _ = writeln!(s, "{} checks, {failed} failed", self.checks.len());
        s
    }
}
