use std::path::PathBuf;
use std::process::Command as Process;

use clap::Parser;
use serde_json::Value;
use singeq_cli::{run, Cli, InputError, Workspace};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
}

fn run_args(args: &[&str]) -> singeq_cli::Report {
    let mut full = vec!["singeq"];
    full.extend_from_slice(args);
    run(&Cli::parse_from(full)).unwrap()
}

fn ws_args<'a>(file: &'a str, rest: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec!["-w", file];
    v.extend_from_slice(rest);
    v
}

#[test]
fn remark14_fixture_loads() {
    let ws = Workspace::load(&fixture("remark14.json"), None).unwrap();
    assert_eq!(ws.algebras["A"].dim(), 4);
    assert_eq!(ws.modules["P1"].dim(), 2);
    let ws = Workspace::load(&fixture("remark14.json"), Some(7)).unwrap();
    assert_eq!(ws.algebras["A"].field().p(), 7);
}

#[test]
fn non_composable_relation_is_named() {
    let text = r#"{"algebras": {"A": {"field": 5, "kind": "quiver", "quiver": {
        "vertices": ["1", "2"],
        "arrows": [{"name": "α", "src": "1", "tgt": "1"}, {"name": "β", "src": "2", "tgt": "1"}],
        "relations": [["α", "β"]]}}}}"#;
    let err = Workspace::parse(text, None).unwrap_err();
    let msg = err.to_string();
    assert!(matches!(err, InputError::Invalid { .. }));
    assert!(msg.contains("relations[0]") && msg.contains("α·β"), "{msg}");
}

#[test]
fn bad_unit_action_is_rejected() {
    let text = r#"{"algebras": {"K": {"field": 3, "kind": "quiver", "quiver": {"vertices": ["1"]}}},
        "modules": {"V": {"algebra": "K", "dim": 1, "action": {"e1": [[2]]}}}}"#;
    let msg = Workspace::parse(text, None).unwrap_err().to_string();
    assert!(
        msg.contains("modules.V") && msg.contains("ρ(1) ≠ I"),
        "{msg}"
    );
}

#[test]
fn json_errors_carry_positions() {
    let err = Workspace::parse("{\n  \"algebras\": [1,\n}", None).unwrap_err();
    assert!(matches!(err, InputError::Json { line: 2, .. }), "{err}");
    let err = Workspace::parse(r#"{"algebra": {}}"#, None).unwrap_err();
    assert!(err.to_string().contains("algebra"));
}

#[test]
fn missing_actions_are_reported() {
    let text = r#"{"algebras": {"A": {"field": 5, "kind": "quiver", "quiver": {
        "vertices": ["1", "2"], "arrows": [{"name": "a", "src": "1", "tgt": "2"}]}}},
        "modules": {"V": {"algebra": "A", "dim": 1, "action": {"e1": [[1]]}}}}"#;
    let msg = Workspace::parse(text, None).unwrap_err().to_string();
    assert!(msg.contains("e2") && msg.contains("a"), "{msg}");
}

#[test]
fn local_pd_is_infinite() {
    let f = fixture("local.json");
    let r = run_args(&ws_args(
        f.to_str().unwrap(),
        &["pd", "--module", "S", "--max", "10"],
    ));
    assert_eq!(r.exit, 0);
    assert_eq!(r.body["pd"]["verdict"], "infinite_by_cycle");
}

#[test]
fn local_dsghom_does_not_stabilize() {
    let f = fixture("local.json");
    let r = run_args(&ws_args(
        f.to_str().unwrap(),
        &["dsghom", "S", "S", "--max", "3"],
    ));
    assert_eq!(r.exit, 2);
    let dims: Vec<u64> = r.body["report"]["stage_dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(dims[..4], [1, 4, 16, 64]);
    assert_eq!(r.body["report"]["verdict"]["verdict"], "not_stabilized");
}

#[test]
fn remark14_commands() {
    let f = fixture("remark14.json");
    let f = f.to_str().unwrap();
    let r = run_args(&ws_args(f, &["dsghom", "S2", "S2", "--max", "6"]));
    assert_eq!(r.exit, 0);
    assert_eq!(r.body["report"]["verdict"]["dim"], 1);
    let r = run_args(&ws_args(f, &["stablehom", "S1", "S2"]));
    assert_eq!(r.body["hom"], 0);
    let r = run_args(&ws_args(f, &["resolve", "--module", "S2", "--max", "3"]));
    assert_eq!(r.exit, 0);
    assert_eq!(r.body["terms"][1]["tops"], serde_json::json!([1, 0]));
    let r = run_args(&ws_args(f, &["decompose", "P1"]));
    assert_eq!(r.body["summands"], 1);
}

#[test]
fn hh_of_dual_numbers() {
    let f = fixture("twist.json");
    let f = f.to_str().unwrap();
    for method in ["bar", "minimal"] {
        let r = run_args(&ws_args(
            f,
            &["hh", "KX2", "--max", "4", "--method", method],
        ));
        assert_eq!(r.body["table"]["dims"], serde_json::json!([2, 1, 1, 1, 1]));
    }
    let r = run_args(&ws_args(f, &["--field", "2", "hh", "KX2", "--max", "4"]));
    assert_eq!(r.body["table"]["dims"], serde_json::json!([2, 2, 2, 2, 2]));
}

#[test]
fn transfer_of_twist_is_invertible() {
    let f = fixture("twist.json");
    let r = run_args(&ws_args(
        f.to_str().unwrap(),
        &["transfer", "--bimodule", "M", "--degree", "1"],
    ));
    assert_eq!(r.body["rank"], 1);
}

#[test]
fn semcheck_fixtures() {
    let r = run_args(&["semcheck", fixture("twist.json").to_str().unwrap()]);
    assert_eq!(r.exit, 0, "{}", r.table);
    let checks = r.body["twist"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["verdict"] == "pass"));
    let r = run_args(&["semcheck", fixture("not_projective.json").to_str().unwrap()]);
    assert_eq!(r.exit, 1);
    let c2 = &r.body["simple_n"]["checks"][1];
    assert_eq!(c2["name"], "condition2");
    assert_eq!(c2["verdict"], "fail");
    assert_eq!(c2["witness"]["kind"], "sides");
}

#[test]
fn unknown_names_are_errors() {
    let f = fixture("local.json");
    let cli = Cli::parse_from(["singeq", "-w", f.to_str().unwrap(), "pd", "--module", "T"]);
    let err = run(&cli).unwrap_err();
    assert!(err.to_string().contains("\"T\""));
}

#[test]
fn tables_match_json() {
    let f = fixture("remark14.json");
    let r = run_args(&ws_args(
        f.to_str().unwrap(),
        &["dsghom", "S2", "S2", "--max", "4"],
    ));
    for (i, d) in r.body["report"]["stage_dims"]
        .as_array()
        .unwrap()
        .iter()
        .enumerate()
    {
        assert!(r.table.contains(&format!("{i}      {d}")), "{}", r.table);
    }
}

fn binary(args: &[&str], out: &std::path::Path) -> (i32, String) {
    let status = Process::new(env!("CARGO_BIN_EXE_singeq"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .unwrap();
    (
        status.status.code().unwrap(),
        String::from_utf8(status.stdout).unwrap(),
    )
}

#[test]
fn binary_exit_codes_and_reproducible_reports() {
    let twist = fixture("twist.json");
    let twist = twist.to_str().unwrap();
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let (code, stdout) = binary(&["semcheck", twist, "--seed", "3"], a.path());
    assert_eq!(code, 0);
    assert!(stdout.contains("hh_invariance"));
    binary(&["semcheck", twist, "--seed", "3"], b.path());
    let read = |d: &tempfile::TempDir| std::fs::read(d.path().join("semcheck.json")).unwrap();
    assert_eq!(read(&a), read(&b));
    let v: Value = serde_json::from_slice(&read(&a)).unwrap();
    assert_eq!(v["twist"]["x"]["dim"], 0);

    let (code, _) = binary(
        &["semcheck", fixture("not_projective.json").to_str().unwrap()],
        a.path(),
    );
    assert_eq!(code, 1);
    let local = fixture("local.json");
    let (code, _) = binary(
        &[
            "-w",
            local.to_str().unwrap(),
            "dsghom",
            "S",
            "S",
            "--max",
            "3",
        ],
        a.path(),
    );
    assert_eq!(code, 2);
    let (code, _) = binary(
        &[
            "-w",
            local.to_str().unwrap(),
            "pd",
            "--module",
            "S",
            "--max",
            "10",
        ],
        a.path(),
    );
    assert_eq!(code, 0);
}
