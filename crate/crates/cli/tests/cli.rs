use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const EXAMPLE_P: &str = "alternatives: x y z w
voter: x > y > z > w
voter: x > y > z > w
voter: x > y > z > w
voter: y > z > w > x
voter: y > z > w > x
";

const EXAMPLE_P_PRIME: &str = "alternatives: x y z w
voter: x > y > w > z
voter: x > y > z > w
voter: y > w > z > x
voter: z > y > w > x
voter: w > y > z > x
";

const CYCLE: &str = "alternatives: a b c
voter: a > b > c
voter: b > c > a
voter: c > a > b
";

fn ssvote(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssvote"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn eval(path: &str, rule: &str) -> Output {
    ssvote(&["eval", path, rule])
}

#[test]
fn eval_prints_the_chosen_label() {
    let dir = TempDir::new().unwrap();
    let t1 = write(&dir, "t1.txt", EXAMPLE_P);
    let t3 = write(&dir, "t3.txt", EXAMPLE_P_PRIME);
    for (file, rule, want) in [
        (&t1, "borda:4", "y"),
        (&t3, "plurality:1", "x"),
        (&t1, "condorcet", "x"),
        (&t1, "plurality:1", "x"),
    ] {
        let out = eval(file, rule);
        assert_eq!(out.status.code(), Some(0), "{rule}");
        assert_eq!(stdout(&out).trim(), want, "{rule}");
    }
}

#[test]
fn eval_error_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "alternatives: x y\nvoter: x > x\n");
    assert_eq!(eval(&bad, "dict:1").status.code(), Some(2));
    assert_eq!(
        eval("/nonexistent/profile.txt", "dict:1").status.code(),
        Some(2)
    );
    let t1 = write(&dir, "t1.txt", EXAMPLE_P);
    assert_eq!(eval(&t1, "majority").status.code(), Some(2));

    let cycle = write(&dir, "cycle.txt", CYCLE);
    let out = eval(&cycle, "condorcet");
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("a > b > c"), "{err}");
}

#[test]
fn axioms_exit_codes_and_witnesses() {
    let out = ssvote(&[
        "axioms",
        "condorcet",
        "--domain",
        "condorcet",
        "--axiom",
        "unanimity",
        "--axiom",
        "neutrality",
        "--axiom",
        "anonymity",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches(": holds").count(), 3);

    let out = ssvote(&[
        "axioms",
        "dict:1",
        "--axiom",
        "anonymity",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["holds"], false);
    assert!(v[0]["witness"].is_object());

    let out = ssvote(&[
        "axioms",
        "borda:4",
        "-n",
        "5",
        "--tau-max",
        "4",
        "--axiom",
        "iia",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("iia: FAILS"));

    assert_eq!(
        ssvote(&["axioms", "dict:1", "--axiom", "fairness"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ssvote(&["axioms", "dict:1", "-n", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn selfselect_verdicts() {
    assert_eq!(ssvote(&["selfselect", "dict:2"]).status.code(), Some(0));
    let out = ssvote(&[
        "selfselect",
        "condorcet",
        "--domain",
        "condorcet",
        "--universal",
        "-k",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("universal-ss: holds"));
    assert_eq!(
        ssvote(&["selfselect", "dict:1", "--universal", "-k", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn failing_witness_replays_through_eval() {
    let out = ssvote(&[
        "selfselect",
        "borda:4",
        "-n",
        "5",
        "--tau-max",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["axiom"], "binary-ss");
    let witness = &v["witness"];
    let profile = witness["profile"].as_str().unwrap();
    let slots = witness["slots"].as_str().unwrap();
    let sigma = slots
        .strip_prefix("slots: sigma->")
        .unwrap()
        .split(',')
        .next()
        .unwrap();

    let dir = TempDir::new().unwrap();
    let path = write(&dir, "w.txt", profile);
    let replay = eval(&path, "borda:4");
    assert_eq!(replay.status.code(), Some(0));
    assert_eq!(stdout(&replay).trim(), sigma);

    let compatible = witness["compatible"].as_array().unwrap();
    assert!(!compatible.is_empty());
    assert!(compatible.iter().all(|c| c["chosen"] == "r1"));
}

#[test]
fn exported_tables_load_back() {
    let dir = TempDir::new().unwrap();
    let out = ssvote(&["export-table", "dict:2"]);
    assert_eq!(out.status.code(), Some(0));
    let path = write(&dir, "dict2.table", &stdout(&out));
    let spec = format!("table:{path}");
    assert_eq!(ssvote(&["selfselect", &spec]).status.code(), Some(0));

    let t = write(
        &dir,
        "p.txt",
        "alternatives: a b c\nvoter: c > a > b\nvoter: a > b > c\nvoter: b > c > a\n",
    );
    assert_eq!(stdout(&eval(&t, &spec)).trim(), "a");
}

#[test]
fn verify_campaigns() {
    let out = ssvote(&["verify", "example1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));

    assert_eq!(
        ssvote(&["verify", "theorem2", "--seeds", "20"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        ssvote(&["verify", "claims", "--seeds", "10"]).status.code(),
        Some(0)
    );

    let out = ssvote(&["verify", "corollary1", "-n", "3", "--tau-max", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tau_max >= 3"));

    assert_eq!(ssvote(&["verify", "lemma9"]).status.code(), Some(2));
    assert_eq!(
        ssvote(&["verify", "theorem2", "-n", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn json_reports_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("report.json");
    let run = |jobs: &str| {
        let out = ssvote(&[
            "verify",
            "theorem1",
            "--seeds",
            "12",
            "--jobs",
            jobs,
            "--format",
            "json",
            "--output",
            file.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        let written: Value =
            serde_json::from_str(&std::fs::read_to_string(Path::new(&file)).unwrap()).unwrap();
        assert_eq!(v, written);
        v["elapsed_ms"] = Value::Null;
        v
    };
    assert_eq!(run("1"), run("4"));
}
