//! Exit-code and output contract of the `kreg` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use kreg::{parse_edgelist, OutputDocument};

fn kreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kreg"))
        .args(args)
        .output()
        .expect("spawn kreg")
}

fn kreg_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kreg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn kreg");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn build_nearly_regular() {
    let o = kreg(&["build", "--n", "5", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5 7\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n");
}

#[test]
fn build_infeasible_cites_rule() {
    let o = kreg(&["build", "--n", "3", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n >= k + 1"));
    assert!(o.stdout.is_empty());

    let o = kreg(&["build", "--n", "9", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("k >= 2"));
}

#[test]
fn build_then_verify() {
    let built = kreg(&["build", "--n", "6", "--k", "3"]);
    assert_eq!(built.status.code(), Some(0));
    let o = kreg_stdin(&["verify", "--k", "3", "-"], &built.stdout);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("overall: pass\n"));

    let o = kreg_stdin(&["verify", "--k", "3", "--nearly", "-"], &built.stdout);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("degree-profile: FAIL"));

    let nearly = kreg(&["build", "--n", "9", "--k", "5"]);
    let o = kreg_stdin(&["verify", "--k", "5", "--nearly", "-"], &nearly.stdout);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_reports_failed_checks() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.txt");
    std::fs::write(&path, "6 6\n1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n").unwrap();
    let o = kreg(&["verify", "--k", "2", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("connectivity: FAIL"));
    assert!(text.contains("degree-profile: pass"));

    std::fs::write(&path, "2 1\n1 1\n").unwrap();
    let o = kreg(&["verify", "--k", "1", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn build_outputs_are_byte_identical() {
    let a = kreg(&["build", "--n", "40", "--k", "7", "--format", "dot"]);
    let b = kreg(&["build", "--n", "40", "--k", "7", "--format", "dot"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).matches(" -- ").count(), 140);
}

#[test]
fn build_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let trace = dir.path().join("trace.json");
    let o = kreg(&[
        "build",
        "--n",
        "12",
        "--k",
        "4",
        "--no-step-checks",
        "--out",
        out.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let g = parse_edgelist(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let doc = OutputDocument::parse(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(doc.graph().unwrap(), g);
    assert_eq!(doc.trace.unwrap().replay().unwrap(), g);
}

#[test]
fn sweep_summary() {
    let serial = kreg(&["sweep", "--k-max", "5", "--n-max", "14", "--jobs", "1"]);
    let parallel = kreg(&["sweep", "--k-max", "5", "--n-max", "14", "--jobs", "3"]);
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
    assert!(stdout(&serial).ends_with("42 cases, 42 passed, 0 failed\n"));
}

#[test]
fn check_seq_verdicts() {
    let o = kreg(&["check-seq", "3", "3", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "erdos-gallai: non-graphic\nhavel-hakimi: non-graphic\n"
    );

    let o = kreg(&["check-seq", "2", "2", "2"]);
    assert_eq!(
        stdout(&o),
        "erdos-gallai: graphic\nhavel-hakimi: graphic (connected realization)\n3 3\n1 2\n1 3\n2 3\n"
    );

    let o = kreg(&["check-seq", "1", "2"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn exists_verdicts() {
    let o = kreg(&["exists", "--n", "6", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with(": true\n"));
    let o = kreg(&["exists", "--n", "3", "--k", "3"]);
    assert!(stdout(&o).ends_with(": false\n"));
    let o = kreg(&["exists", "--n", "9", "--k", "2"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["build", "--n", "5"][..],
        &["build", "--n", "5", "--k", "x"],
        &["build", "--n", "5", "--k", "3", "--bogus"],
        &["build", "--n", "5", "--k", "3", "--format", "graphml"],
        &["sweep", "--k-max", "3", "--n-max", "5", "--jobs", "0"],
        &["frobnicate"],
        &[],
    ] {
        let o = kreg(args);
        assert_eq!(o.status.code(), Some(64), "{args:?}");
        assert!(stderr(&o).contains("Usage"), "{args:?}");
    }
    assert_eq!(kreg(&["--help"]).status.code(), Some(0));
}
