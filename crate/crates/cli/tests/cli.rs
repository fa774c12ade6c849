//! Black-box tests running the compiled binary.

use std::process::Output;

use serde_json::Value;

fn sollat(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_sollat"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(stdout_of(out).trim()).expect("stdout is one JSON document")
}

#[test]
fn zm_info_json_is_stable() {
    let out = sollat(&["zm-info", "3", "2", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert_eq!(
        text.trim(),
        r#"{"center":1,"d":2,"order":6,"solitary":3,"subgroups":6,"valid":true}"#
    );
    // Keys are emitted sorted, so parse + re-serialize is the identity.
    let value: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), text.trim());
}

#[test]
fn zm_info_rejects_invalid_presentation() {
    let out = sollat(&["zm-info", "13", "6", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = json_of(&out);
    assert_eq!(doc["valid"], Value::Bool(false));
    assert_eq!(doc["error"]["kind"], "order-violation");
    assert!(doc["error"]["message"].as_str().unwrap().contains("expected 1"));

    let out = sollat(&["zm-info", "13", "6", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("invalid presentation (13, 6, 2)"));
}

#[test]
fn lattice_dot_draws_the_hasse_diagram() {
    let out = sollat(&["lattice", "zm:3,2,2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout_of(&out);
    assert!(dot.starts_with("digraph subgroups {"));
    assert_eq!(dot.matches("[label = \"#").count(), 6, "six nodes");
    assert_eq!(dot.matches(" -> ").count(), 8, "eight cover edges");
    assert_eq!(dot.matches("peripheries = 2").count(), 3, "three solitary marks");
    assert_eq!(dot.matches("rank = same").count(), 4, "orders 1, 2, 3, 6");
}

#[test]
fn lattice_json_reports_solitary_and_normal_flags() {
    let out = sollat(&["lattice", "quaternion:3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["group"]["order"], 8);
    let nodes = doc["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 6);
    let solitary_orders: Vec<u64> = nodes
        .iter()
        .filter(|n| n["solitary"] == Value::Bool(true))
        .map(|n| n["order"].as_u64().unwrap())
        .collect();
    assert_eq!(solitary_orders, [1, 2, 8]);
    // Every subgroup of the quaternion group is normal.
    assert!(nodes.iter().all(|n| n["normal"] == Value::Bool(true)));
    assert_eq!(doc["edges"].as_array().unwrap().len(), 7);
    // Member lists are ascending.
    for node in nodes {
        let members: Vec<u64> = node["members"]
            .as_array()
            .unwrap()
            .iter()
            .map(|m| m.as_u64().unwrap())
            .collect();
        assert!(members.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn lattice_text_handles_the_trivial_group() {
    let out = sollat(&["lattice", "cyclic:1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("1 subgroups"));
    assert!(text.contains("#0: order 1"));
    assert!(text.contains("cover relations (0):"));
}

#[test]
fn density_failure_sets_exit_code_one() {
    let out = sollat(&["density", "quaternion:3"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("are NOT dense"));
    assert!(text.contains("failing pair"));

    let out = sollat(&["density", "quaternion:3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json_of(&out);
    assert_eq!(doc["dense"], Value::Bool(false));
    assert_eq!(doc["counterexample"]["lower"]["order"], 2);
    assert_eq!(doc["counterexample"]["upper"]["order"], 8);
    assert_eq!(doc["checked_pairs"], 5);
}

#[test]
fn density_success_sets_exit_code_zero() {
    let out = sollat(&["density", "zm:3,4,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("are dense"));

    let out = sollat(&["density", "cyclic:12", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["dense"], Value::Bool(true));
    assert_eq!(doc["counterexample"], Value::Null);
}

#[test]
fn verify_sweep_agrees_at_order_100() {
    let out = sollat(&["verify", "--max-order", "100", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["zm_triples"], 102);
    assert_eq!(doc["corpus_cases"], 72);
    assert_eq!(doc["agreements"], 174);
    assert_eq!(doc["disagreements"].as_array().unwrap().len(), 0);
    assert_eq!(doc["beta0_witness"], serde_json::json!([3, 2, 2]));
    assert_eq!(doc["beta1_witness"], serde_json::json!([3, 10, 2]));
}

#[test]
fn bad_inputs_exit_with_code_two() {
    let cases: &[&[&str]] = &[
        &["lattice", "nonsense:5"],
        &["lattice", "zm:3,2"],
        &["lattice", "zm:3,2,x"],
        &["lattice", "zm:13,6,2"],
        &["lattice", "cyclic:600"],
        &["density", "quaternion:3", "--format", "dot"],
        &["verify", "--max-order", "600"],
        &["lattice", "cyclic"],
    ];
    for args in cases {
        let out = sollat(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        assert!(
            stderr_of(&out).starts_with("error:"),
            "stderr should explain: {args:?}"
        );
    }
}

#[test]
fn cap_flag_admits_larger_groups() {
    let out = sollat(&["lattice", "cyclic:600", "--cap", "600"]);
    assert_eq!(out.status.code(), Some(0));
    // 600 = 2^3 * 3 * 5^2 has (3+1)(1+1)(2+1) = 24 divisors.
    assert!(stdout_of(&out).contains("24 subgroups"));
}
