use std::process::{Command, Output};

use majorana::suite::VerificationReport;

fn majorana(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_majorana"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_factors_out_the_prefactor() {
    let o = majorana(&["table", "--mass", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "sqrt(m/2) = 1"));
    assert!(text.lines().any(|l| l.starts_with("lambda S up") && l.ends_with("(0, i, 1, 0)")));
    assert!(text.lines().any(|l| l.starts_with("rho A up") && l.ends_with("(1, 0, 0, i)")));
}

#[test]
fn table_rejects_nonpositive_mass() {
    assert_eq!(majorana(&["table", "--mass", "0"]).status.code(), Some(2));
}

#[test]
fn eval_lambda_at_rest() {
    let o = majorana(&["eval", "--momentum", "0,0,0", "--mass", "2", "--family", "lambda", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let comps: Vec<[f64; 2]> = serde_json::from_value(v["components"].clone()).unwrap();
    let expected = [[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [0.0, 0.0]];
    for (got, want) in comps.iter().zip(expected) {
        assert!((got[0] - want[0]).abs() < 1e-15 && (got[1] - want[1]).abs() < 1e-15);
    }
}

#[test]
fn eval_helicity_operator_along_z() {
    let o = majorana(&["eval", "--momentum", "0,0,1", "--mass", "1", "--family", "helicity-operator", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let m: Vec<Vec<[f64; 2]>> = serde_json::from_value(v["matrix"].clone()).unwrap();
    for (i, row) in m.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            let want = if i == j { if i % 2 == 0 { 0.5 } else { -0.5 } } else { 0.0 };
            assert_eq!(z, &[want, 0.0]);
        }
    }
}

#[test]
fn eval_xi_reports_intertwiner_residual() {
    let o = majorana(&["eval", "--momentum", "1,2,3", "--mass", "2", "--family", "xi"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("intertwiner residual:")).unwrap();
    let r: f64 = line.split(':').nth(1).unwrap().trim().parse().unwrap();
    assert!(r <= 1e-12);
    assert!(text.contains("p_r = 1+2i"));
}

#[test]
fn eval_errors_exit_two() {
    assert_eq!(majorana(&["eval", "--momentum", "0,0,1", "--mass", "-1", "--family", "lambda"]).status.code(), Some(2));
    assert_eq!(majorana(&["eval", "--momentum", "0,0,1", "--mass", "1", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(majorana(&["eval", "--momentum", "0,1", "--mass", "1", "--family", "lambda"]).status.code(), Some(2));
    // xi is ambiguous along z
    assert_eq!(majorana(&["eval", "--momentum", "0,0,1", "--mass", "1", "--family", "xi"]).status.code(), Some(2));
}

#[test]
fn verify_spin_one_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = majorana(&["verify", "--suite", "spin-one", "--samples", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().any(|l| l.starts_with("PASS c-squared-minus-one")));
    let report = VerificationReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.all_passed());
}

#[test]
fn verify_with_wrong_convention_exits_one() {
    let o = majorana(&["verify", "--suite", "dynamics", "--samples", "5", "--force-convention", "minus"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_usage_errors_exit_two() {
    assert_eq!(majorana(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(majorana(&["verify", "--suite", "dynamics", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(majorana(&["verify", "--suite", "dynamics", "--force-convention", "sideways"]).status.code(), Some(2));
    assert_eq!(majorana(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_json_output_parses() {
    let o = majorana(&["verify", "--suite", "spin-half", "--samples", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = VerificationReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.samples, 2);
}

#[test]
fn diff_of_identical_and_drifted_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, seed) in [(&a, "1"), (&b, "2")] {
        majorana(&["verify", "--suite", "dynamics", "--samples", "3", "--seed", seed, "--out", path.to_str().unwrap()]);
    }
    let o = majorana(&["diff", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "no differences");

    let text = std::fs::read_to_string(&b).unwrap().replace("\"convention\": \"plus\"", "\"convention\": \"minus\"");
    std::fs::write(&b, text).unwrap();
    let o = majorana(&["diff", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "dynamics.convention");
}

#[test]
fn diff_of_missing_file_exits_two() {
    assert_eq!(majorana(&["diff", "/nonexistent/a.json", "/nonexistent/b.json"]).status.code(), Some(2));
}
