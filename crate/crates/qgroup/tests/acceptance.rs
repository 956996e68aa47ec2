//! One line per acceptance criterion. Every criterion must pass except the
//! documented deviations, which must still deviate in the documented way.

use qgroup::acceptance::{all, Criterion};

/// Criteria that are known not to be attainable as stated, with the part
/// of them that must still hold.
fn deviation_holds(c: &Criterion) -> bool {
    match c.id {
        // exactly one sign reproduces the relations; it is not the flipped one
        8 => c.detail.starts_with("exactly one sign: yes; verdict: w → w"),
        _ => false,
    }
}

#[test]
fn acceptance() {
    let results = all();
    for c in &results {
        println!("{}", c.line());
    }
    assert_eq!(results.len(), 10);
    for c in &results {
        if c.deviation.is_some() {
            assert!(!c.passed && deviation_holds(c), "{}", c.line());
        } else {
            assert!(c.passed, "{}", c.line());
        }
    }
}
