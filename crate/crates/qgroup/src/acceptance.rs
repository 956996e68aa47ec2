//! The acceptance criteria of the workspace, each a pass/fail verdict over
//! one or more suite runs.

use qgroup_core::coeffring::MuMode;
use qgroup_core::controls::Mutation;

use crate::config::{Config, Suite};
use crate::output::CheckRecord;
use crate::suite::run_suite;

const MODES: [MuMode; 4] = [MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus];

/// The verdict on one criterion.
#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Set when the criterion is known not to be attainable as stated;
    /// carries the reason.
    pub deviation: Option<&'static str>,
}

impl Criterion {
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("[{tag}] {:>2}. {}: {}", self.id, self.title, self.detail);
        if let Some(d) = self.deviation {
            s.push_str(&format!(" (documented deviation: {d})"));
        }
        s
    }
}

fn records(suite: Suite, mu: MuMode, order: Option<u32>, degree: Option<u32>) -> Vec<CheckRecord> {
    let cfg = Config {
        suite,
        order,
        degree,
        mu,
        parallel: true,
    };
    run_suite(&cfg).checks
}

fn summarize(id: u32, title: &'static str, recs: &[CheckRecord]) -> Criterion {
    let failed: Vec<&str> = recs.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
    let detail = if failed.is_empty() {
        format!("{} checks", recs.len())
    } else {
        format!("{} of {} checks failed: {}", failed.len(), recs.len(), failed.join(", "))
    };
    Criterion {
        id,
        title,
        passed: failed.is_empty() && !recs.is_empty(),
        detail,
        deviation: None,
    }
}

fn over_modes(suite: Suite, order: Option<u32>, degree: Option<u32>) -> Vec<CheckRecord> {
    MODES.iter().flat_map(|&m| records(suite, m, order, degree)).collect()
}

pub fn hopf_suite() -> Criterion {
    summarize(1, "Hopf axioms of the catalog models", &over_modes(Suite::HopfAxioms, None, None))
}

pub fn poincare_r() -> Criterion {
    summarize(2, "Poincaré R-matrix", &records(Suite::RPoincare, MuMode::Symbolic, Some(4), None))
}

pub fn recurrence() -> Criterion {
    summarize(3, "Ansatz recurrence", &records(Suite::Recurrence, MuMode::Symbolic, Some(4), None))
}

pub fn contraction() -> Criterion {
    let mut recs = records(Suite::Contraction, MuMode::Symbolic, Some(4), None);
    recs.extend(records(Suite::Weyl, MuMode::Symbolic, Some(4), None));
    summarize(4, "contraction to g_μ and the Weyl restriction", &recs)
}

pub fn contracted_r() -> Criterion {
    let recs: Vec<_> = over_modes(Suite::RContracted, Some(3), None)
        .into_iter()
        .filter(|r| !is_classical(r))
        .collect();
    summarize(5, "contracted R equals the closed form", &recs)
}

fn is_classical(r: &CheckRecord) -> bool {
    r.name.ends_with("/classical-limit") || r.name.ends_with("/schouten")
}

pub fn classical_limits() -> Criterion {
    let mut recs = records(Suite::RPoincare, MuMode::Symbolic, Some(2), None);
    for m in MODES {
        recs.extend(records(Suite::RContracted, m, Some(2), None));
    }
    let recs: Vec<_> = recs.into_iter().filter(is_classical).collect();
    summarize(6, "classical limits solve the CYBE", &recs)
}

pub fn matrix_rep() -> Criterion {
    summarize(7, "matrix realization and rep(R)", &records(Suite::Matrep, MuMode::Symbolic, Some(4), None))
}

/// The relations must follow from exactly one sign; the criterion further
/// asks for the sign to be flipped, which the computation does not support
/// under the tensor-factor convention used for `T₁`, `T₂`.
pub fn frt_sign() -> Criterion {
    let recs: Vec<_> = [MuMode::Symbolic, MuMode::Plus]
        .into_iter()
        .flat_map(|m| records(Suite::Frt, m, Some(2), Some(3)))
        .collect();
    let exactly_one = recs.iter().all(CheckRecord::passed);
    let verdicts: Vec<&str> = recs
        .iter()
        .filter(|r| r.name.ends_with("/rtt-sign"))
        .filter_map(|r| r.note.as_deref())
        .collect();
    let flipped = !verdicts.is_empty() && verdicts.iter().all(|v| v.contains("verdict: w → −w"));
    let verdict = verdicts.first().copied().unwrap_or("no verdict");
    Criterion {
        id: 8,
        title: "FRT sign",
        passed: exactly_one && flipped,
        detail: format!(
            "exactly one sign: {}; {verdict}",
            if exactly_one { "yes" } else { "no" }
        ),
        deviation: (!flipped).then_some(
            "the relations follow from R(+w) with T1 = T⊗I; the flip belongs to the transposed convention",
        ),
    }
}

pub fn poisson() -> Criterion {
    summarize(9, "Poisson–Lie structure", &over_modes(Suite::Poisson, None, None))
}

pub fn negative_controls() -> Criterion {
    let mut bad = Vec::new();
    for m in Mutation::ALL {
        let r = m.run(4);
        let got = r.first_failing_order();
        if r.passed() || got != Some(m.expected_first_failing_order()) {
            bad.push(format!("{} (first failing order {got:?})", m.label()));
        }
    }
    Criterion {
        id: 10,
        title: "negative controls",
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} mutations caught at their orders", Mutation::ALL.len())
        } else {
            bad.join(", ")
        },
        deviation: None,
    }
}

pub fn all() -> Vec<Criterion> {
    vec![
        hopf_suite(),
        poincare_r(),
        recurrence(),
        contraction(),
        contracted_r(),
        classical_limits(),
        matrix_rep(),
        frt_sign(),
        poisson(),
        negative_controls(),
    ]
}
