use majorana::dynamics::FrequencyConvention;
use majorana::suite::{diff_reports, run_suite, run_suite_with, RunContext, Status, SuiteName, VerificationReport};
use majorana::Error;
use serde_json::json;

#[test]
fn json_round_trip() {
    let report = run_suite(SuiteName::SpinHalf, 3, 5).unwrap();
    let back = VerificationReport::from_json(&report.to_json().unwrap()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn reports_are_deterministic() {
    let a = run_suite(SuiteName::Dynamics, 17, 10).unwrap().to_json().unwrap();
    let b = run_suite(SuiteName::Dynamics, 17, 10).unwrap().to_json().unwrap();
    assert_eq!(a, b);
}

#[test]
fn report_shape() {
    let r = run_suite(SuiteName::Symmetry, 1, 3).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
    for key in ["suite", "seed", "samples", "convention", "checks", "summary"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let check = &v["checks"][0];
    for key in ["id", "anchor", "status", "residual", "constants"] {
        assert!(check.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["suite"], json!("symmetry"));
    assert_eq!(r.summary.total, r.checks.len());
}

#[test]
fn constants_do_not_depend_on_seed_or_samples() {
    let a = run_suite(SuiteName::SpinHalf, 1, 4).unwrap();
    let b = run_suite(SuiteName::SpinHalf, 99, 12).unwrap();
    assert_eq!(diff_reports(&a, &b).unwrap(), Vec::<String>::new());
}

#[test]
fn discovered_convention_is_stable_in_sample_count() {
    let one = run_suite(SuiteName::Dynamics, 1, 1).unwrap();
    let many = run_suite(SuiteName::Dynamics, 1, 100).unwrap();
    assert_eq!(one.convention, Some(FrequencyConvention::Plus));
    assert_eq!(one.convention, many.convention);
}

#[test]
fn forced_wrong_convention_fails() {
    let ctx = RunContext {
        forced_convention: Some(FrequencyConvention::Minus),
        ..RunContext::new(1, 10)
    };
    let r = run_suite_with(SuiteName::Dynamics, &ctx).unwrap();
    assert_eq!(r.check("dynamics.convention").unwrap().status, Status::Fail);
    assert!(!r.all_passed());
}

#[test]
fn diff_flags_changed_constants() {
    let a = run_suite(SuiteName::Dynamics, 1, 5).unwrap();
    let mut b = a.clone();
    let check = b.checks.iter_mut().find(|c| c.id == "dynamics.convention").unwrap();
    check.constants.insert("convention".into(), json!("minus"));
    assert_eq!(diff_reports(&a, &b).unwrap(), vec!["dynamics.convention".to_string()]);
}

#[test]
fn diff_rejects_mismatched_suites() {
    let a = run_suite(SuiteName::Dynamics, 1, 2).unwrap();
    let b = run_suite(SuiteName::SpinHalf, 1, 2).unwrap();
    assert!(matches!(diff_reports(&a, &b), Err(Error::Usage(_))));
}

#[test]
fn suite_composition() {
    let all = run_suite(SuiteName::All, 1, 2).unwrap();
    assert!(all.checks.len() >= 30);
    for id in ["sc-no-solution", "c-squared-minus-one", "dynamics.convention"] {
        assert!(all.check(id).is_some(), "{id}");
    }
    let spin_one = run_suite(SuiteName::SpinOne, 1, 2).unwrap();
    assert_eq!(spin_one.check("c-squared-minus-one").unwrap().status, Status::Pass);
    assert!(spin_one.checks.iter().all(|c| all.check(&c.id).is_some()));
}
