use std::process::{Command, Output};

fn qgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgroup"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn passing_suite_exits_zero_with_the_report_schema() {
    let out = qgroup(&["--suite", "recurrence", "--order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "recurrence");
    assert_eq!(v["model"], "uz-iso11");
    assert_eq!(v["order"], 3);
    assert!(v["degree"].is_null());
    assert_eq!(v["mu"], "sym");
    let check = &v["checks"][0];
    for key in ["name", "anchor", "status", "residual", "ms"] {
        assert!(check.get(key).is_some(), "missing {key}");
    }
    assert_eq!(check["status"], "pass");
    assert_eq!(check["residual"], serde_json::json!([]));
}

#[test]
fn frt_reports_its_verdict_at_the_default_truncation() {
    let out = qgroup(&["--suite", "frt", "--mu", "+1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["order"].as_u64(), v["degree"].as_u64()), (Some(2), Some(3)));
    let note = v["checks"][0]["note"].as_str().unwrap();
    assert!(note.starts_with("verdict: "), "{note}");
}

#[test]
fn failing_checks_exit_one_and_carry_exact_residuals() {
    let out = qgroup(&["--suite", "controls"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3, "a failure does not stop the suite");
    for c in checks {
        assert_eq!(c["status"], "fail");
        let residual = c["residual"].as_array().unwrap();
        assert!(!residual.is_empty());
        let coeff = residual[0][1].as_str().unwrap();
        assert!(coeff.contains('/'), "{coeff}");
    }
}

#[test]
fn configuration_errors_exit_two() {
    for args in [
        &["--suite", "nope"][..],
        &["--suite", "weyl", "--mu", "2"],
        &["--suite", "weyl", "--order", "0"],
        &["--suite", "weyl", "--format", "yaml"],
        &["--order", "2"],
    ] {
        let out = qgroup(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn text_format_summarizes() {
    let out = qgroup(&["--suite", "weyl", "--mu", "-1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite weyl | model uw-s-1 |"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("PASS uw-s/restriction (mu=-1)")));
    assert!(text.trim_end().ends_with("0 failed"));
}
