use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthcol"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn fvn1_gadget_is_not_two_colourable_with_defect_one() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(dir.path(), &["gen", "fvn1", "--d", "1", "-o", "g.el"]);
    assert!(gen.status.success());
    let meta: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("g.el.meta.json")).unwrap())
            .unwrap();
    assert_eq!(meta["named_vertices"]["alpha"], serde_json::json!([12]));
    let o = run(
        dir.path(),
        &["oracle", "colourable", "g.el", "--k", "2", "--defect", "1"],
    );
    assert_eq!(stdout(&o), "false");
    assert_eq!(o.status.code(), Some(1));
    let o = run(
        dir.path(),
        &["oracle", "colourable", "g.el", "--k", "2", "--defect", "2"],
    );
    assert_eq!(stdout(&o), "true");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn apex_grid_has_girth_five() {
    let dir = tempfile::tempdir().unwrap();
    assert!(
        run(dir.path(), &["gen", "apex-grid5", "--m", "6", "-o", "g.el"])
            .status
            .success()
    );
    assert_eq!(stdout(&run(dir.path(), &["param", "girth", "g.el"])), "5");
    // --param spelling is equivalent
    assert!(run(
        dir.path(),
        &["gen", "apex-grid5", "--param", "m=6", "-o", "h.el"]
    )
    .status
    .success());
    assert_eq!(
        std::fs::read(dir.path().join("g.el")).unwrap(),
        std::fs::read(dir.path().join("h.el")).unwrap()
    );
}

#[test]
fn parity_colourer_on_c14() {
    let dir = tempfile::tempdir().unwrap();
    assert!(
        run(dir.path(), &["gen", "cycle", "--n", "14", "-o", "c.el"])
            .status
            .success()
    );
    let o = run(
        dir.path(),
        &["colour", "fvn-girth7", "c.el", "--apex-set", "0"],
    );
    assert!(o.status.success());
    let report = json(&o);
    assert!(report["clustering"].as_u64().unwrap() <= 2);
    assert_eq!(report["meets_guarantee"], Value::Bool(true));
    // feed the colouring back through `check`
    std::fs::write(dir.path().join("col.json"), o.stdout).unwrap();
    let checked = json(&run(dir.path(), &["check", "c.el", "col.json"]));
    assert_eq!(checked["clustering"], report["clustering"]);
}

#[test]
fn exit_statuses() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(dir.path(), &["param", "girth", "missing.el"])
            .status
            .code(),
        Some(2)
    );
    run(dir.path(), &["gen", "petersen", "-o", "p.el"]);
    // girth 5 < 7: precondition
    assert_eq!(
        run(dir.path(), &["colour", "fvn-girth7", "p.el"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(
            dir.path(),
            &[
                "oracle",
                "colourable",
                "p.el",
                "--k",
                "3",
                "--clustering",
                "2",
                "--budget",
                "5"
            ]
        )
        .status
        .code(),
        Some(4)
    );
    assert_eq!(
        run(dir.path(), &["oracle", "chromatic", "p.el"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        stdout(&run(dir.path(), &["oracle", "chromatic", "p.el"])),
        "3"
    );
}

#[test]
fn minor_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["gen", "heawood", "--subdivide", "-o", "h.el"]);
    assert!(run(
        dir.path(),
        &["minor", "extract", "h.el", "-k", "1", "-o", "m.json"]
    )
    .status
    .success());
    let o = run(
        dir.path(),
        &["minor", "contract", "h.el", "m.json", "-o", "q.el"],
    );
    assert!(o.status.success());
    let summary = json(&o);
    assert!(summary["min_degree"].as_u64().unwrap() >= 2);
    assert_eq!(summary["covers_host"], Value::Bool(true));
}

#[test]
fn equivalence_and_report() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["gen", "complete", "--n", "3", "-o", "k3.el"]);
    let o = run(
        dir.path(),
        &[
            "--report",
            "r.json",
            "verify-thm31",
            "k3.el",
            "--d",
            "2",
            "--k",
            "3",
        ],
    );
    assert!(o.status.success());
    assert_eq!(json(&o)["agree"], Value::Bool(true));
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    let digest = report["inputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);
    assert_eq!(report["output"]["proper"], Value::Bool(true));
    // deterministic: same input, same digest and output
    run(
        dir.path(),
        &[
            "--report",
            "s.json",
            "verify-thm31",
            "k3.el",
            "--d",
            "2",
            "--k",
            "3",
        ],
    );
    let again: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("s.json")).unwrap()).unwrap();
    assert_eq!(again["inputs"], report["inputs"]);
    assert_eq!(again["output"], report["output"]);
}

#[test]
fn suite_subset() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["suite", "--only", "2,9"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("[PASS]  2") && text.contains("[PASS]  9"));
    assert!(text.ends_with("2/2 criteria passed"));
}
