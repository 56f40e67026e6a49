use std::sync::OnceLock;

use grouplab::corpus::default_manifest;
use grouplab::harness::{resolve_suites, verify, Status, VerifyOptions, VerifyReport, SUITES};

fn full_report() -> &'static VerifyReport {
    static REPORT: OnceLock<VerifyReport> = OnceLock::new();
    REPORT.get_or_init(|| verify(default_manifest(), SUITES, VerifyOptions::default()).unwrap())
}

#[test]
fn no_violations_on_default_corpus() {
    let report = full_report();
    let bad: Vec<String> = report
        .suites
        .iter()
        .flat_map(|s| s.entries.iter().map(move |e| (s, e)))
        .filter(|(_, e)| e.status == Status::Violation || e.skip.is_some() && e.status == Status::Skipped && e.reason.as_deref().is_some_and(|r| !r.contains("exceeds")))
        .map(|(s, e)| format!("{} {} {} {}", s.suite, e.group, e.case, e.certificates))
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert_eq!(report.summary.violation, 0);
    assert_eq!(report.summary.skipped_errors, 0);
}

#[test]
fn over_cap_entries_are_skipped_not_dropped() {
    let report = full_report();
    for suite in &report.suites {
        if suite.suite.starts_with("example") {
            continue;
        }
        let skipped: Vec<_> = suite.entries_for("s5xc2").collect();
        assert_eq!(skipped.len(), 1, "{}", suite.suite);
        assert_eq!(skipped[0].status, Status::Skipped);
    }
}

#[test]
fn theorem2_has_non_vacuous_confirmations() {
    let t2 = full_report().suite("theorem2").unwrap();
    let confirmed: Vec<&str> = t2
        .entries
        .iter()
        .filter(|e| e.status == Status::Confirmed && e.case == "all maximal subgroups")
        .map(|e| e.group.as_str())
        .collect();
    assert!(confirmed.contains(&"paper72"));
    assert!(confirmed.len() >= 2);
    let psl: Vec<_> = t2.entries_for("psl27").collect();
    assert_eq!(psl.len(), 2);
    assert_eq!(psl[0].status, Status::Vacuous);
    assert!(!psl[0].hypothesis);
    assert_eq!((psl[1].case.as_str(), psl[1].status), ("proof facts", Status::Confirmed));
}

#[test]
fn theorem1_records_psl27_three_as_vacuous() {
    let t1 = full_report().suite("theorem1").unwrap();
    let e = t1.entries_for("psl27").find(|e| e.case == "p=3").unwrap();
    assert_eq!(e.status, Status::Vacuous);
    assert_eq!(e.certificates["three_soluble"], false);
    assert!(!e.certificates["ns_supplement"].is_null());
    assert!(!e.conclusion);
    let e7 = t1.entries_for("psl27").find(|e| e.case == "p=7").unwrap();
    assert!(e7.certificates["ns_supplement"].is_null());
}

#[test]
fn corollary_and_examples() {
    let r = full_report();
    let c = r.suite("corollary").unwrap();
    let p72 = c.entries_for("paper72").next().unwrap();
    assert_eq!(p72.status, Status::Vacuous);
    let s3 = c.entries_for("s3").next().unwrap();
    assert_eq!(s3.status, Status::Confirmed);
    for name in ["example1", "example2"] {
        let s = r.suite(name).unwrap();
        assert_eq!(s.entries.len(), 1);
        assert_eq!(s.entries[0].status, Status::Confirmed, "{}", s.entries[0].certificates);
    }
    let gur = r.suite("gur").unwrap().entries_for("psl27").next().unwrap().clone();
    assert_eq!(gur.status, Status::Confirmed);
    assert_eq!(gur.certificates["branch"], "G/S(G) simple of order 168");
    let tk = r.suite("tk").unwrap();
    let psl7 = tk.entries_for("psl27").find(|e| e.case == "p=7").unwrap();
    assert_eq!(psl7.status, Status::Vacuous);
}

#[test]
fn json_is_deterministic_across_thread_counts() {
    let names = resolve_suites("theorem1").unwrap();
    let corpus: Vec<_> = default_manifest().into_iter().filter(|e| e.order <= 48).collect();
    let one = verify(corpus.clone(), &names, VerifyOptions { jobs: Some(1), ..Default::default() }).unwrap();
    let four = verify(corpus, &names, VerifyOptions { jobs: Some(4), ..Default::default() }).unwrap();
    assert_eq!(one.to_json(), four.to_json());
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(resolve_suites("theorem9").is_err());
    assert_eq!(resolve_suites("all").unwrap().len(), SUITES.len());
}
