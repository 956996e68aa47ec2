//! Suites: named lists of independent jobs, each building its own models
//! and returning check reports. A failing or erroring job never stops the
//! others.

use std::time::Instant;

use qgroup_core::coeffring::{MuMode, MuPoly};
use qgroup_core::controls::Mutation;
use qgroup_core::hopf::{check_all, HopfPresentation};
use qgroup_core::matrep::{build_rep, check_group_element, check_rep_brackets, check_rep_r, frt_rtt_check};
use qgroup_core::models::{
    build_poincare_qalgebra, build_poincare_qgroup, build_qgroup_gmu, build_qgroup_gmu_reconstructed,
    build_weyl, compare_presentations, contracted_gmu, gmu_table, iso11_table, schouten_check,
    wedge, weyl_table, LieTable,
};
use qgroup_core::ncalg::Truncation;
use qgroup_core::poisson::{
    quantum_classical_link, verify_fields_commute, verify_jacobi, verify_poisson_hopf,
    verify_poisson_table,
};
use qgroup_core::report::{CheckReport, Residual};
use qgroup_core::rmatrix::{
    build_r_contracted, build_r_poincare, classical_limit, compare_contracted, to_bivector,
    verify_ansatz_recurrence, verify_quasitriangular,
};
use rayon::prelude::*;

use crate::config::{Config, Suite};
use crate::output::{CheckRecord, SuiteReport};

type JobFn = Box<dyn Fn(&Config) -> Result<Vec<CheckReport>, String> + Send + Sync>;

/// One independent unit of work.
pub struct Job {
    pub label: String,
    run: JobFn,
}

impl Job {
    fn new(
        label: impl Into<String>,
        run: impl Fn(&Config) -> Result<Vec<CheckReport>, String> + Send + Sync + 'static,
    ) -> Self {
        Job {
            label: label.into(),
            run: Box::new(run),
        }
    }

    fn execute(&self, cfg: &Config) -> Vec<CheckRecord> {
        let start = Instant::now();
        let reports = (self.run)(cfg).unwrap_or_else(|e| {
            let mut r = CheckReport::new("error", "the check could not be set up");
            r.fail("error", e);
            vec![r]
        });
        let ms = start.elapsed().as_millis() as u64;
        reports
            .iter()
            .map(|r| CheckRecord::from_report(&self.label, r, ms))
            .collect()
    }
}

/// The numeric values of μ to sweep when μ is symbolic, else just μ.
fn modes(mu: MuMode) -> Vec<MuMode> {
    match mu {
        MuMode::Symbolic => vec![MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus],
        m => vec![m],
    }
}

fn hopf(h: &HopfPresentation) -> Vec<CheckReport> {
    check_all(h).into_iter().collect()
}

fn table_check(name: &str, got: Option<LieTable>, expected: &LieTable) -> CheckReport {
    let mut r = CheckReport::new(name, "zeroth-order brackets");
    match got {
        None => r.fail("table", "brackets are not linear at order zero"),
        Some(t) if t != *expected => r.fail("table", format!("{t:?}")),
        Some(_) => {}
    }
    r
}

pub fn jobs(suite: Suite) -> Vec<Job> {
    match suite {
        Suite::HopfAxioms => vec![
            Job::new("uz-iso11", |c| Ok(hopf(&build_poincare_qalgebra(c.order_or(4))))),
            Job::new("funz-iso11", |c| {
                let t = Truncation::capped(c.order_or(3), c.degree_or(4));
                Ok(hopf(&build_poincare_qgroup(t)))
            }),
            Job::new("uw-s", |c| Ok(hopf(&build_weyl(c.mu, c.order_or(4))))),
            Job::new("uw-g", |c| {
                let h = contracted_gmu(c.mu, c.order_or(3)).map_err(|e| e.to_string())?;
                Ok(hopf(&h))
            }),
            Job::new("funw-g", |c| {
                let t = Truncation::capped(c.order_or(2), c.degree_or(3));
                Ok(hopf(&build_qgroup_gmu(c.mu, t)))
            }),
        ],
        Suite::RPoincare => vec![
            Job::new("uz-iso11", |c| {
                let h = build_poincare_qalgebra(c.order_or(4));
                Ok(verify_quasitriangular(&build_r_poincare(&h), &h).into_iter().collect())
            }),
            Job::new("uz-iso11", |c| {
                let h = build_poincare_qalgebra(c.order_or(4).min(2));
                let r = build_r_poincare(&h);
                let kp = wedge(&h.g("K"), &h.g("P+"));
                let mut first = CheckReport::new("first-order-term", "order-1 part of R is K∧P₊");
                first.push(Residual::of("R₁ − K∧P₊", &h.alg, &(&r.tensor.order_part(1) - &kp)));
                let table = iso11_table();
                let expected = table.wedge_sum(&[("K", "P+", MuPoly::from_int(1))]);
                let mut out = vec![first];
                out.extend(classical_checks(&table, &h, &r, expected)?);
                Ok(out)
            }),
        ],
        Suite::RContracted => vec![
            Job::new("uw-s", |c| {
                let rep = compare_contracted(c.mu, c.order_or(3)).map_err(|e| e.to_string())?;
                Ok(vec![rep])
            }),
            Job::new("uw-s", |c| {
                let (h, r) = build_r_contracted(c.mu, c.order_or(3)).map_err(|e| e.to_string())?;
                Ok(verify_quasitriangular(&r, &h).into_iter().collect())
            }),
            Job::new("uw-s", |c| {
                let (h, r) = build_r_contracted(c.mu, 2).map_err(|e| e.to_string())?;
                let table = weyl_table(c.mu);
                let one = MuPoly::from_int(1);
                let expected = table.wedge_sum(&[("J", "P1", one.clone()), ("D", "P2", one)]);
                classical_checks(&table, &h, &r, expected)
            }),
        ],
        Suite::Weyl => vec![Job::new("uw-s", |c| {
            let mut out = Vec::new();
            for mode in modes(c.mu) {
                let n = c.order_or(4);
                let weyl = build_weyl(mode, n);
                let full = contracted_gmu(mode, n).map_err(|e| e.to_string())?;
                let mut cmp = compare_presentations(&weyl, &full);
                cmp.name = format!("restriction (mu={})", mode.label());
                out.push(cmp);
                let name = format!("weyl-table (mu={})", mode.label());
                out.push(table_check(&name, LieTable::from_algebra(&weyl.alg), &weyl_table(mode)));
            }
            Ok(out)
        })],
        Suite::Contraction => vec![
            Job::new("uw-g", |c| {
                let mut out = Vec::new();
                for mode in modes(c.mu) {
                    let label = mode.label();
                    match contracted_gmu(mode, c.order_or(4)) {
                        Ok(h) => {
                            let mut s_free = CheckReport::new(format!("s-free (mu={label})"), "contraction is s-even");
                            s_free.note = Some(format!("{} generators", h.alg.system().names().len()));
                            out.push(s_free);
                            let t = LieTable::from_algebra(&h.alg);
                            let name = format!("gmu-table (mu={label})");
                            out.push(table_check(&name, t.clone(), &gmu_table(mode)));
                            if let Some(t) = t {
                                let mut j = t.jacobi();
                                j.name = format!("jacobi (mu={label})");
                                out.push(j);
                            }
                        }
                        Err(e) => {
                            let mut r = CheckReport::new(format!("s-free (mu={label})"), "contraction is s-even");
                            r.fail("contraction", e.to_string());
                            out.push(r);
                        }
                    }
                }
                Ok(out)
            }),
            Job::new("funw-g", |c| {
                let t = Truncation::capped(c.order_or(2), c.degree_or(3));
                let printed = build_qgroup_gmu(c.mu, t);
                let rebuilt = build_qgroup_gmu_reconstructed(c.mu, t).map_err(|e| e.to_string())?;
                let mut r = compare_presentations(&printed, &rebuilt);
                r.name = "coordinate-contraction".into();
                Ok(vec![r])
            }),
        ],
        Suite::Matrep => vec![Job::new("rep", |c| {
            let rep = build_rep().map_err(|e| e.to_string())?;
            let mut out: Vec<CheckReport> = modes(c.mu)
                .into_iter()
                .map(|m| {
                    let mut r = check_rep_brackets(&rep, m);
                    r.name = format!("rep-brackets (mu={})", m.label());
                    r
                })
                .collect();
            out.push(check_group_element(&rep).map_err(|e| e.to_string())?);
            out.push(check_rep_r(c.order_or(4)).map_err(|e| e.to_string())?);
            Ok(out)
        })],
        Suite::Frt => vec![Job::new("funw-g", |c| {
            let out = frt_rtt_check(c.mu, c.order_or(2), c.degree_or(3)).map_err(|e| e.to_string())?;
            Ok(vec![sign_selection(out.plus, out.minus), out.hopf])
        })],
        Suite::Poisson => vec![
            Job::new("funw-g", |c| Ok(vec![verify_poisson_table(c.mu)])),
            Job::new("funw-g", |_| Ok(vec![verify_jacobi()])),
            Job::new("funw-g", |_| Ok(vec![verify_fields_commute(), verify_poisson_hopf()])),
            Job::new("funw-g", |c| {
                let h = build_qgroup_gmu(c.mu, Truncation::capped(c.order_or(2), c.degree_or(3)));
                Ok(vec![quantum_classical_link(&h, c.mu).map_err(|e| e.to_string())?])
            }),
        ],
        Suite::Recurrence => vec![Job::new("uz-iso11", |c| {
            let n = c.order_or(4);
            Ok(vec![verify_ansatz_recurrence(&build_poincare_qalgebra(n), n - 1)])
        })],
        Suite::Controls => Mutation::ALL
            .into_iter()
            .map(|m| Job::new("uz-iso11", move |c| Ok(vec![m.run(c.order_or(4))])))
            .collect(),
        Suite::All => Suite::All.members().into_iter().flat_map(jobs).collect(),
    }
}

/// The classical limit is the expected bivector and solves the CYBE.
fn classical_checks(
    table: &LieTable,
    h: &HopfPresentation,
    r: &qgroup_core::rmatrix::RMatrix,
    expected: qgroup_core::models::Bivector,
) -> Result<Vec<CheckReport>, String> {
    let limit = classical_limit(r).map_err(|e| e.to_string())?;
    let mut matches = CheckReport::new("classical-limit", "first-order term as a bivector");
    match to_bivector(table, &h.alg, &limit) {
        None => matches.fail("r", "first-order term is not a bivector"),
        Some(b) if b != expected => matches.fail("r", format!("{b:?}")),
        Some(_) => {}
    }
    Ok(vec![matches, schouten_check(table, &expected)])
}

/// Exactly one sign of the deformation parameter must reproduce the
/// relations; the verdict travels in the note.
fn sign_selection(plus: CheckReport, minus: CheckReport) -> CheckReport {
    let note = plus.note.clone();
    let mut out = match (plus.passed(), minus.passed()) {
        (true, false) => plus,
        (false, true) => minus,
        (true, true) => {
            let mut r = plus;
            r.fail("sign", "both signs reproduce the relations");
            r
        }
        (false, false) => {
            let mut r = plus;
            r.residuals.extend(minus.residuals);
            r
        }
    };
    out.name = "rtt-sign".into();
    out.note = note;
    out
}

/// Run a suite. Jobs run on the rayon pool when `parallel` is set; the
/// report order is the job order either way.
pub fn run_suite(cfg: &Config) -> SuiteReport {
    let jobs = jobs(cfg.suite);
    let records: Vec<Vec<CheckRecord>> = if cfg.parallel {
        jobs.par_iter().map(|j| j.execute(cfg)).collect()
    } else {
        jobs.iter().map(|j| j.execute(cfg)).collect()
    };
    SuiteReport {
        suite: cfg.suite.name().into(),
        model: cfg.suite.model(cfg.mu),
        order: cfg.reported_order(),
        degree: cfg.reported_degree(),
        mu: cfg.mu.label().into(),
        checks: records.into_iter().flatten().collect(),
    }
}
