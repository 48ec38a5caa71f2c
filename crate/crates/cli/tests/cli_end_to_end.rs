//! End-to-end checks of the installed binary: exit codes, CSV schema
//! stability, and determinism of the generate-solve pipeline.

use std::path::Path;
use std::process::Command;

fn tecs_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tecs"))
}

fn generate(dir: &Path, args: &[&str]) -> Vec<String> {
    let out = tecs_bin()
        .arg("generate")
        .args(args)
        .arg("--out-dir")
        .arg(dir)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

#[test]
fn generate_solve_report_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let files = generate(dir.path(), &["kncycles", "--ell", "3", "--count", "2", "--seed", "5"]);
    assert_eq!(files.len(), 2);
    assert!(dir.path().join("manifest.csv").exists());

    let csv_path = dir.path().join("runs.csv");
    let out = tecs_bin()
        .arg("solve")
        .args(&files)
        .args(["--model", "basic", "--separation", "fractional"])
        .arg("--csv")
        .arg(&csv_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with(
        "instance,n,m,dim,model,separation,objective,bound,status,seconds,nodes,\
         cuts_asym,cuts_conn,cuts_cpc,cuts_star"
    ));
    let records = tecs_cli::records::read_records(&csv_path).unwrap();
    assert_eq!(records.len(), 2);
    assert!(records.iter().all(|r| r.finished()));

    // Determinism: regenerating and resolving gives the same objectives.
    let dir2 = tempfile::tempdir().unwrap();
    let files2 = generate(dir2.path(), &["kncycles", "--ell", "3", "--count", "2", "--seed", "5"]);
    let out2 = tecs_bin()
        .arg("solve")
        .args(&files2)
        .args(["--model", "basic", "--separation", "fractional"])
        .output()
        .unwrap();
    let stdout2 = String::from_utf8(out2.stdout).unwrap();
    let objectives = |text: &str| -> Vec<String> {
        text.lines()
            .skip(1)
            .map(|l| l.split(',').nth(6).unwrap().to_string())
            .collect()
    };
    assert_eq!(objectives(&stdout), objectives(&stdout2));

    // Instance files themselves are byte-identical across runs.
    for (a, b) in files.iter().zip(&files2) {
        assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    }

    // Report over the CSV.
    let svg = dir.path().join("plot.svg");
    let agg = dir.path().join("agg.csv");
    let out = tecs_bin()
        .arg("report")
        .arg(&csv_path)
        .arg("--out-svg")
        .arg(&svg)
        .arg("--out-csv")
        .arg(&agg)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(svg.exists() && agg.exists());
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.contains("<svg"));
}

#[test]
fn time_limit_exit_code_is_distinct() {
    let dir = tempfile::tempdir().unwrap();
    let files = generate(dir.path(), &["kncycles", "--ell", "10", "--count", "1", "--seed", "1"]);
    let out = tecs_bin()
        .arg("solve")
        .args(&files)
        .args(["--time-limit", "0.000001"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_cutpoints_suite_passes() {
    let out = tecs_bin().args(["verify", "--only", "cutpoints"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("cut-point"));
    assert!(stdout.contains("0 failures"));
}

#[test]
fn verify_reports_oversized_instances_as_skipped() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), &["complete", "--n", "12", "--count", "1", "--seed", "3"]);
    let instance = dir.path().join("complete_n12_i000.tecs");
    let out = tecs_bin()
        .args(["verify", "--only", "lattice"])
        .arg(&instance)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("skipped"), "{stdout}");
}

#[test]
fn reject_trivial_draws_or_fails_cleanly() {
    // Normal weights: non-trivial instances exist and are found.
    let dir = tempfile::tempdir().unwrap();
    let files = generate(
        dir.path(),
        &["kncycles", "--ell", "3", "--count", "2", "--seed", "21", "--reject-trivial"],
    );
    assert_eq!(files.len(), 2);

    // All-zero weights: the optimum is always zero, so every draw is
    // trivial and the command reports a clean error.
    let out = tecs_bin()
        .args([
            "generate", "complete", "--n", "6", "--weight-lo", "0", "--weight-hi", "0",
            "--count", "1", "--seed", "1", "--reject-trivial", "--out-dir",
        ])
        .arg(dir.path().join("zeros"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("trivial"));
}

#[test]
fn solve_rejects_unreadable_instance() {
    let out = tecs_bin().args(["solve", "/nonexistent/foo.tecs"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_instance_is_a_clean_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tecs");
    std::fs::write(&path, "p tecs 3 1\ne 1 1 5\n").unwrap();
    let out = tecs_bin().arg("solve").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));
}
