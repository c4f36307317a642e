use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylzeta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn poincare_value_at_minus_one() {
    let o = run(&["poincare", "A3", "--I", "1,3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("W^I(u) = 1 + u + 2*u^2 + u^3 + u^4"), "{s}");
    assert!(s.contains("W^I(-1) = 2"), "{s}");
}

#[test]
fn poincare_by_degrees_for_e6() {
    let o = run(&["poincare", "E6", "--I", "D5", "--eval", "-1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("W^I(-1) = 3"));
}

#[test]
fn poincare_mixed_g2() {
    let o = run(&["poincare", "G2", "--mixed", "long"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("W^I = 2"));
}

#[test]
fn nonvanishing_table_passes() {
    let o = run(&["poincare", "--table", "nonvanishing"]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn weyl_cosets() {
    let o = run(&["--json", "weyl", "B3", "--I", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["order"], 48);
}

#[test]
fn bernoulli_a1_is_b4() {
    let o = run(&["bernoulli", "A1", "--k", "4", "--y", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("-1/30"));
}

#[test]
fn bernoulli_closed_form_cross_checks() {
    for args in [&["bernoulli", "A2", "--I", "2", "--cross-check", "--kmax", "4"][..], &["bernoulli", "C3", "--I", "2,3", "--cross-check"]] {
        let o = run(args);
        assert!(o.status.success(), "{args:?}");
        assert!(stdout(&o).contains("PASS"));
    }
}

#[test]
fn bernoulli_json_has_laurent_terms() {
    let o = run(&["--json", "bernoulli", "C3", "--I", "2,3", "--k", "2,1,1,1,1", "--m", "1,1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["result"]["value"]["terms"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn zeta_classic_order_gives_same_value_for_symmetric_input() {
    let a = run(&["--json", "zeta", "--system", "B2", "--s", "2,2,2,2", "--N", "200"]);
    let b = run(&["--json", "--classic-order", "zeta", "--system", "B2", "--s", "2,2,2,2", "--N", "200"]);
    let va: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let vb: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(va["result"]["value"], vb["result"]["value"]);
}

#[test]
fn verify_a2_template_exit_code() {
    assert!(run(&["verify", "--template", "A2", "--k", "2,2", "--s", "2", "--N", "1000", "--tol", "1e-7"]).status.success());
    assert_eq!(run(&["verify", "--template", "A2", "--N", "20", "--tol", "1e-12"]).status.code(), Some(1));
}

#[test]
fn verify_generic_relation() {
    let o = run(&["verify", "--system", "A2", "--I", "2", "--generic", "--k", "2,2", "--s", "2", "--N", "500"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn residue_and_lerch_checks() {
    assert!(run(&["residue-check", "A2", "--I", "2", "--lambda", "0,1"]).status.success());
    assert!(run(&["lerch-check", "A2", "--i", "1", "--k", "2,2", "--N", "500"]).status.success());
}

#[test]
fn json_reports_are_reproducible() {
    let dir = std::env::temp_dir().join(format!("weylzeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let p = path.to_str().unwrap();
    let mut reports = Vec::new();
    for _ in 0..2 {
        assert!(run(&["-o", p, "verify", "--template", "A2", "--N", "200", "--tol", "1"]).status.success());
        reports.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let v: serde_json::Value = serde_json::from_slice(&reports[0]).unwrap();
    assert_eq!(v["tool"], "weylzeta");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(run(&["zeta", "--system", "A2", "--s", "2,2"]).status.code(), Some(2));
    assert_eq!(run(&["weyl", "E8"]).status.code(), Some(2));
}
