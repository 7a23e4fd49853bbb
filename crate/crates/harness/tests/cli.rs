use std::process::{Command, Output};

fn cliffpar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffpar")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("cliffpar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn verify_and_rerender() {
    let cfg = write("ok.cfg", "seed = 3\nchecks = ds\n[ds]\nsamples = 10\n");
    let o = cliffpar(&["verify", cfg.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let machine = stdout(&o);
    assert!(machine.contains("\"check\": \"ds/random-triangles\""));
    let saved = write("report.json", &machine);
    let o = cliffpar(&["report", saved.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("overall: PASS"));
    let o = cliffpar(&["report", saved.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(stdout(&o), machine);
}

#[test]
fn failing_report_exits_one() {
    let report = r#"{"seed": 1, "algebra": "x", "overall": "fail", "checks": [
        {"check": "ds/random-triangles", "verdict": "fail", "samples": 3, "counterexample": "1 | i | j"}]}"#;
    let o = cliffpar(&["report", write("fail.json", report).to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample: 1 | i | j"));
}

#[test]
fn config_errors_exit_two() {
    let cfg = write("bad.cfg", "kind = caseA\na = 1\nb = 1\n");
    let o = cliffpar(&["verify", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2: (1, 1) is not a division algebra"));
}

#[test]
fn inline_subcommands() {
    let o = cliffpar(&["orbit-key", "1; 3*i + 4*j"]);
    assert_eq!(stdout(&o).trim(), "-1");
    let o = cliffpar(&["orbit-key", "-a", "-2", "-b", "-5", "1; i"]);
    assert_eq!(stdout(&o).trim(), "-2");
    let o = cliffpar(&["conjugate", "i", "j"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("conjugate: h = "));
    let o = cliffpar(&["conjugate", "i", "2*j"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cliffpar(&["ds", "1", "i", "j"]);
    assert_eq!(stdout(&o).trim(), "common point: k");
    let o = cliffpar(&["ds", "--kind", "caseB", "1", "u", "v"]);
    assert_eq!(stdout(&o).trim(), "common point: w");
    let o = cliffpar(&["division-check", "-a", "-1", "-b", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ramified at"));
    let o = cliffpar(&["division-check", "-a", "1", "-b", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cliffpar(&["invariant-classes", "j + k"]);
    assert!(stdout(&o).contains("exceptional line: 1; j + k"));
    assert!(!stdout(&o).contains("pencil plane: none"));
    let o = cliffpar(&["orbit-key", "--kind", "caseB", "1; u"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cliffpar(&["ds", "1", "i", "2*i"]);
    assert_eq!(o.status.code(), Some(2));
}
