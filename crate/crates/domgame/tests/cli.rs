//! End-to-end checks of the command-line surface.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_domgame"))
}

fn write(dir: &std::path::Path, name: &str, body: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn gamma_and_solve() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = write(dir.path(), "p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");

    let out = bin().arg("gamma").arg(&p5).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");

    let out = bin().arg("solve").arg(&p5).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");

    let out = bin()
        .args(["solve", "--staller-start"])
        .arg(&p5)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");
}

#[test]
fn play_writes_trace_json() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.g6", "C~\n");
    let trace = dir.path().join("trace.json");
    let out = bin()
        .arg("play")
        .arg(&k4)
        .args(["--staller", "min-gain", "--json"])
        .arg(&trace)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let body: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(body["graph"], "C~");
    assert_eq!(body["length"], 1);
    assert_eq!(body["turns"][0]["player"], "Dominator");
    assert!(body["violations"].as_array().unwrap().is_empty());
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k4.g6", "C~\n");
    let csv = dir.path().join("report.csv");
    let out = bin()
        .args(["verify", "--corpus"])
        .arg(dir.path())
        .arg("--csv")
        .arg(&csv)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = std::fs::read_to_string(&csv).unwrap();
    assert!(report.starts_with("graph_id,n,delta,gamma"));

    // A malformed corpus entry fails the run with exit code 1.
    let bad_dir = tempfile::tempdir().unwrap();
    write(bad_dir.path(), "bad.g6", "\x01\x02\n");
    let out = bin()
        .args(["verify", "--corpus"])
        .arg(bad_dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    // A missing input is an input error: exit code 2.
    let out = bin().args(["gamma", "no-such-file"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_is_seeded() {
    let run = || {
        let out = bin()
            .args([
                "gen", "--n", "10", "--delta", "3", "--model", "regular-pairing", "--seed",
                "5", "--count", "2",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        String::from_utf8_lossy(&out.stdout).into_owned()
    };
    let a = run();
    assert_eq!(a.lines().count(), 2);
    assert_eq!(a, run());
}

#[test]
fn bounds_table_mentions_crossover() {
    let out = bin().args(["bounds", "--d-range", "21..22"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].trim_end().ends_with("polynomial"));
    assert!(lines[2].trim_end().ends_with("log"));
}
