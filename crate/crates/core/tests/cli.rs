use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_guarded-ilp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn learn_prints_rule() {
    let ex = data("fans.txt");
    let out = run(&["learn", ex.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("# rule: FanOf(Y,Z) :- TalkAbout(X,Y,Z), FanOf(X,Z), Influences(X,Y)"));

    let raw = stdout(&run(&["learn", ex.to_str().unwrap(), "--raw-names"]));
    assert!(raw.contains("FanOf(V2,V3) :- TalkAbout(V1,V2,V3), FanOf(V1,V3), Influences(V1,V2)"));
}

#[test]
fn output_is_deterministic() {
    let ex = data("fans.txt");
    let a = run(&["enumerate", ex.to_str().unwrap(), "--format", "json"]);
    let b = run(&["enumerate", ex.to_str().unwrap(), "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["hypotheses"].as_array().unwrap().len(), 2);
}

#[test]
fn inconsistent_exits_with_one() {
    let out = run(&[
        "learn",
        data("inconsistent.txt").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outcome"], "inconsistent");
}

#[test]
fn errors_exit_with_two() {
    let out = run(&["learn", data("missing.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["learn", data("hitting.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn k_guarded_and_datalog_modes() {
    let tc = data("transitive.txt");
    assert_eq!(run(&["learn", tc.to_str().unwrap()]).status.code(), Some(1));
    let out = run(&["learn", tc.to_str().unwrap(), "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("# rule: T(X,Z) :- T(X,Y), R(Y,Z)"));

    let out = run(&[
        "learn",
        data("ancestor.txt").to_str().unwrap(),
        "--mode",
        "datalogpm",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("# rule: Ancestor(E_1,X) :- Person(X)"));
}

#[test]
fn check_command() {
    let out = run(&[
        "check",
        "--hypothesis",
        data("rule.txt").to_str().unwrap(),
        data("fans.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("# solution\n"));
}

#[test]
fn hitting_pipeline() {
    let out = run(&["gen", "hitting", data("hitting.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with('+')).count(), 3);
    assert_eq!(text.lines().filter(|l| l.starts_with('-')).count(), 5);

    let file = std::env::temp_dir().join(format!("guarded-ilp-hitting-{}.txt", std::process::id()));
    std::fs::write(&file, text).unwrap();
    let out = run(&["oracle", file.to_str().unwrap()]);
    std::fs::remove_file(&file).unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("G(X,Y)"));
}

#[test]
fn random_is_seeded() {
    let a = run(&["random", "--seed", "7"]);
    let b = run(&["random", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().next().unwrap().starts_with("+ "));
}
