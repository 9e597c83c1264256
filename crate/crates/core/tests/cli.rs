use std::process::Command;

use serde_json::Value;

fn halfspin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_halfspin"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/output.schema.json");
    let value: Value = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

fn json_of(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = halfspin(&full);
    assert!(code == 0 || code == 1, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(halfspin(&["act", "--n", "4", "F_2 F_4", "(plus,-)"]).1, "(plus,2)\n");
    assert_eq!(halfspin(&["act", "--n", "4", "F_3 F_4", "(plus,-)"]).1, "0\n");
    assert_eq!(halfspin(&["act", "--n", "4", "E_1", "(plus,-)"]).1, "0\n");
    let v = "2 * (plus,3,1) - 1/2 * (minus,2)";
    assert_eq!(halfspin(&["act", "--n", "4", "kappa kappa", v]).1, format!("{v}\n"));
    assert_eq!(halfspin(&["clifford", "--n", "2", "a1*b1 + b1*a1"]).1, "1\n");
    assert_eq!(halfspin(&["clifford", "--n", "4", "a1*a1"]).1, "0\n");
    assert_eq!(halfspin(&["clifford", "--n", "4", "--apply", "{1,3}", "b2*a1"]).1, "{2,3}\n");
}

#[test]
fn enumerate_counts() {
    assert_eq!(halfspin(&["enumerate", "--n", "4"]).1.lines().count(), 1 + 16);
    assert_eq!(halfspin(&["enumerate", "--n", "2"]).1.lines().count(), 1 + 4);
    let v = json_of(&["enumerate", "--dinfty", "--max-boxes", "3"]);
    let diagrams: Vec<Value> = v["states"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["sign"] == "plus")
        .map(|s| s["diagram"].clone())
        .collect();
    assert_eq!(
        diagrams,
        serde_json::from_str::<Vec<Value>>("[[],[1],[2],[2,1],[3]]").unwrap()
    );
    let csv = halfspin(&["enumerate", "--n", "3", "--format", "csv"]).1;
    assert_eq!(csv.lines().count(), 1 + 8);
    assert!(csv.starts_with("sign,diagram,dim_vector,u,weight,fock_index"));
}

#[test]
fn exit_statuses() {
    assert_eq!(halfspin(&["verify", "--n", "1"]).0, 2);
    assert_eq!(halfspin(&["verify", "--n", "3", "--suite", "nope"]).0, 2);
    assert_eq!(halfspin(&["act", "--n", "4", "F_1", "(plus,9)"]).0, 2);
    assert_eq!(halfspin(&["act", "--n", "4", "G_1", "(plus,-)"]).0, 2);
    assert_eq!(halfspin(&["clifford", "--n", "2", "a3"]).0, 2);
    assert_eq!(halfspin(&["enumerate"]).0, 2);
    assert_eq!(halfspin(&["enumerate", "--dinfty"]).0, 2);
    assert_eq!(halfspin(&["verify", "--n", "2..4", "--all"]).0, 0);
    assert_eq!(halfspin(&["verify", "--dinfty", "--max-boxes", "3"]).0, 0);
}

#[test]
fn weights_suite_lists_expected_failure() {
    let (code, out, _) = halfspin(&["verify", "--n", "4", "--suite", "weights"]);
    assert_eq!(code, 0);
    assert!(out.contains("expected-failure"), "{out}");
}

#[test]
fn json_outputs_match_schema() {
    let schema = schema();
    let cases: &[&[&str]] = &[
        &["enumerate", "--n", "3"],
        &["enumerate", "--dinfty", "--max-boxes", "2"],
        &["act", "--n", "4", "F_2 F_4", "(plus,-)"],
        &["weight", "--n", "4", "(plus,3,1)"],
        &["weight", "--n", "4", "--fock", "{1,3}"],
        &["clifford", "--n", "3", "b1*a2 - 1/2 * a3*b3"],
        &["clifford", "--n", "4", "--apply", "{1,3}", "b2*a1"],
        &["verify", "--n", "2..5", "--all"],
        &["verify", "--dinfty", "--max-boxes", "3", "--suite", "chevalley,weights,module"],
        &["export-matrix", "--n", "3", "F_3"],
        &["export-matrix", "--n", "2", "--fock", "b1 a2"],
    ];
    for args in cases {
        let v = json_of(args);
        let msgs: Vec<String> = match schema.validate(&v) {
            Ok(()) => Vec::new(),
            Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
        };
        assert!(msgs.is_empty(), "{args:?}: {msgs:#?}");
    }
    let bogus = serde_json::json!({"command": "verify", "passed": "yes"});
    assert!(!schema.is_valid(&bogus));
}

#[test]
fn weight_command() {
    let (_, out, _) = halfspin(&["weight", "--n", "4", "(plus,3,1)"]);
    assert!(out.contains("(-1/2,1/2,-1/2,1/2)"), "{out}");
    assert!(out.contains("{1,3}"));
    let v = json_of(&["weight", "--n", "4", "(plus,2)"]);
    assert_eq!(v["u"], serde_json::json!([1, -1, 1, 0]));
}

#[test]
fn matrix_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f4.txt");
    let p = path.to_str().unwrap();
    assert_eq!(halfspin(&["export-matrix", "--n", "4", "F_4", "--export-matrix", p]).0, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("# basis: (plus,-) (plus,1)"));
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|l| l.ends_with(" 1")));

    let word = dir.path().join("word.txt");
    let w = word.to_str().unwrap();
    let (code, out, _) = halfspin(&["act", "--n", "3", "b_2 a_2", "(plus,1)", "--export-matrix", w]);
    assert_eq!(code, 0);
    assert_eq!(out, "(plus,1)\n");
    assert!(std::fs::read_to_string(&word).unwrap().contains("# shape: 8 8"));
}
