use std::process::Command;

use brauer_type::cli::run;
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["brauer-type"];
    argv.extend_from_slice(args);
    let out = run(argv);
    (out.code, serde_json::from_str(&out.output).unwrap_or(Value::Null))
}

#[test]
fn group_report() {
    let (code, v) = json(&["group", "--group", "dihedral:6"]);
    assert_eq!(code, 0);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 2);
    assert_eq!(v["expected_algebra_dim"], 30);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(json(&["group", "--group", "e8"]).0, 2);
    assert_eq!(run(["brauer-type", "frobnicate"]).code, 2);
    assert_eq!(
        run(["brauer-type", "semisimple", "--group", "h3", "--tau", "x"]).code,
        2
    );
    assert_eq!(json(&["cellular", "--group", "a:3"]).0, 2);
    assert_eq!(json(&["cyclo-compare", "--group", "h3"]).0, 2);
    assert_eq!(
        json(&["flatness", "--group", "dihedral:5", "--model", "group", "--kind", "bgu"]).0,
        2
    );
}

#[test]
fn printed_relations_fail_with_exit_one() {
    let (code, v) = json(&["relations", "--group", "dihedral:6", "--variant", "printed"]);
    assert_eq!(code, 1);
    assert_eq!(v["check"]["passed"], false);
    let (code, v) = json(&["relations", "--group", "dihedral:6"]);
    assert_eq!(code, 0, "{}", v);
    let (code, _) = json(&["relations", "--group", "g:3,1,2"]);
    assert_eq!(code, 0);
}

#[test]
fn semisimple_reports() {
    let (code, v) = json(&["semisimple", "--group", "dihedral:5", "--tau", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["radical"], 0);
    assert_eq!(v["wedderburn"]["parts"], serde_json::json!([10, 25]));
    let (_, v) = json(&["semisimple", "--group", "dihedral:5", "--tau", "-4"]);
    assert!(v["radical"].as_u64().unwrap() > 0);
}

#[test]
fn verify_all_small_groups() {
    for g in ["dihedral:5", "dihedral:6", "a:3", "g:2,1,2", "g:3,1,2"] {
        let (code, v) = json(&["verify-all", "--group", g]);
        assert_eq!(code, 0, "{} {}", g, v);
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn output_is_deterministic_and_independent_of_jobs() {
    let a = run(["brauer-type", "cellular", "--group", "dihedral:6", "--jobs", "1"]).output;
    let b = run(["brauer-type", "cellular", "--group", "dihedral:6", "--jobs", "4"]).output;
    assert_eq!(a, b);
    let c = run(["brauer-type", "cellular", "--group", "dihedral:6", "--seed", "3"]).output;
    let v: Value = serde_json::from_str(&c).unwrap();
    assert_eq!(v["cellular"], true);
}

#[test]
fn binary_writes_out_file() {
    let path = std::env::temp_dir().join(format!("brauer-type-cli-{}.json", std::process::id()));
    let status = Command::new(env!("CARGO_BIN_EXE_brauer-type"))
        .args(["lk-rep", "--group", "dihedral:5", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], 5);
    assert_eq!(v["det_m"], "tau^5 - 10*tau^3 + 20*tau^2 - 15*tau + 4");
    std::fs::remove_file(&path).unwrap();
    let bad = Command::new(env!("CARGO_BIN_EXE_brauer-type"))
        .args(["group", "--group", "x"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
