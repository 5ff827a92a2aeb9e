//! Runs every acceptance criterion at its stated tolerance and prints one
//! pass/fail line per criterion.

use twohilb::suite::{run_suite, DEFAULT_SEED};

#[test]
fn acceptance_criteria() {
    let report = run_suite(DEFAULT_SEED);
    for c in &report.criteria {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        println!("[{verdict}] {:>2} {:<24} {}", c.id, c.name, c.summary);
        for f in &c.failures {
            println!("       - {f}");
        }
    }
    assert_eq!(report.criteria.len(), 10);
    let failed: Vec<String> = report
        .failures()
        .iter()
        .map(|c| format!("{} {}", c.id, c.name))
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn suite_is_deterministic() {
    let a = twohilb::suite::run_criterion(3, 7);
    let b = twohilb::suite::run_criterion(3, 7);
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}
