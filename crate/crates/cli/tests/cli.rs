use std::path::Path;
use std::process::{Command, Output};

fn entrob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entrob"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn out_arg(dir: &Path) -> String {
    dir.to_str().unwrap().to_owned()
}

#[test]
fn help_exits_zero() {
    let out = entrob(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("fig1"));
}

#[test]
fn unknown_subcommand_is_a_config_error() {
    assert_eq!(entrob(&["fig9"]).status.code(), Some(1));
}

#[test]
fn bad_tolerance_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = entrob(&["fig1", "--tol", "-1", "--out", &out_arg(dir.path())]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn nqubit_rejects_three_qubits() {
    assert_eq!(entrob(&["nqubit", "--n", "3"]).status.code(), Some(1));
}

#[test]
fn fig1_writes_csv_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = entrob(&["fig1", "--grid", "5", "--plot", "--out", &out_arg(dir.path())]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.path().join("fig1.csv")).unwrap();
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("family,p,negativity,three_tangle,d_crit,limiting_cut"));
    assert!(header.contains("check_law"));
    assert_eq!(lines.count(), 5);
    assert!(!csv.contains(",fail"));
    assert!(dir.path().join("fig1.py").exists());
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "").unwrap();
    let out = entrob(&["fig1", "--grid", "3", "--out", &out_arg(&blocker.join("sub"))]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn same_seed_gives_identical_csv() {
    let run = |seed: &str| {
        let dir = tempfile::tempdir().unwrap();
        let args = ["fig2", "--grid", "5", "--samples", "20", "--seed", seed, "--out", &out_arg(dir.path())];
        let out = entrob(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        std::fs::read(dir.path().join("fig2.csv")).unwrap()
    };
    let first = run("7");
    assert_eq!(first, run("7"));
    assert_ne!(first, run("8"));
}

#[test]
fn nqubit_single_size() {
    let dir = tempfile::tempdir().unwrap();
    let out = entrob(&["nqubit", "--n", "4", "--grid", "3", "--out", &out_arg(dir.path())]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.path().join("nqubit4.csv").exists());
    assert!(!dir.path().join("nqubit5.csv").exists());
}
