use qgroup::config::{Config, Suite};
use qgroup::{run_suite, SuiteReport};
use qgroup_core::coeffring::MuMode;

fn without_timing(mut r: SuiteReport) -> SuiteReport {
    for c in &mut r.checks {
        c.ms = 0;
    }
    r
}

fn config(suite: Suite, parallel: bool) -> Config {
    Config {
        parallel,
        mu: MuMode::Plus,
        ..Config::new(suite)
    }
}

#[test]
fn reports_are_deterministic_and_independent_of_parallelism() {
    for suite in [Suite::HopfAxioms, Suite::Poisson, Suite::Controls] {
        let a = without_timing(run_suite(&config(suite, false)));
        let b = without_timing(run_suite(&config(suite, false)));
        let c = without_timing(run_suite(&config(suite, true)));
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a, c);
    }
}

#[test]
fn json_round_trips() {
    let r = run_suite(&config(Suite::Controls, false));
    let back: SuiteReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert!(!r.passed());
}

#[test]
fn all_runs_every_suite_but_the_controls() {
    let all = run_suite(&config(Suite::All, true));
    let mut expected = 0;
    for s in Suite::All.members() {
        assert_ne!(s, Suite::Controls);
        expected += run_suite(&config(s, true)).checks.len();
    }
    assert_eq!(all.checks.len(), expected);
    assert!(all.passed());
}

#[test]
fn explicit_truncation_overrides_the_designated_one() {
    let cfg = Config {
        order: Some(2),
        degree: Some(2),
        ..config(Suite::Poisson, false)
    };
    let r = run_suite(&cfg);
    assert_eq!((r.order, r.degree), (2, Some(2)));
    assert!(r.passed());
}
