//! End-to-end checks of the command-line surface and its exit codes.

use std::process::Command;

fn rauzy(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rauzy"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn invariants_reports_the_figure_caption_values() {
    let (code, stdout, _) = rauzy(&["invariants", "8 3 2 4 7 6 5 1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("signature:     (1;2,1)"));
    assert!(stdout.contains("genus:         3"));
}

#[test]
fn invariants_handles_generalized_input() {
    let (code, stdout, _) = rauzy(&["invariants", "a b b / c a c d d"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("signature:               (2;-1,-1)"));
    assert!(stdout.contains("genus:                   1"));
}

#[test]
fn class_exports_dot_with_typed_self_loops() {
    let (code, stdout, _) = rauzy(&["class", "2 1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"2 1\" -> \"2 1\" [label=\"0\"]"));
    assert!(stdout.contains("\"2 1\" -> \"2 1\" [label=\"1\"]"));
}

#[test]
fn construct_builds_table_entries() {
    let (code, stdout, _) = rauzy(&["construct", "--signature", "(4)", "--type", "odd"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("6 3 2 5 4 1"));
}

#[test]
fn construct_gen_builds_and_reports_absence() {
    let (code, stdout, _) = rauzy(&["construct-gen", "--signature", "(6;1,1,-1^4)"]);
    assert_eq!(code, 0, "{stdout}");
    let (code, stdout, _) = rauzy(&["construct-gen", "--signature", "(9;-1)"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("no class"));
}

#[test]
fn induct_prints_the_orbit_and_stops_cleanly() {
    let (code, stdout, _) = rauzy(&[
        "induct",
        "3 2 1",
        "--lengths",
        "1/2,1/4,1/8",
        "--steps",
        "5",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("induction undefined"));
}

#[test]
fn polygon_writes_svg() {
    let dir = std::env::temp_dir().join("rauzy-cli-test-polygon.svg");
    let path = dir.to_str().unwrap();
    let (code, _, _) = rauzy(&["polygon", "3 2 1", "--tau", "1,0,-1", "--out", path]);
    assert_eq!(code, 0);
    let svg = std::fs::read_to_string(path).unwrap();
    assert!(svg.starts_with("<svg"));
    std::fs::remove_file(path).ok();
}

#[test]
fn atlas_is_byte_stable_across_runs_and_jobs() {
    let dir = std::env::temp_dir();
    let a = dir.join("rauzy-atlas-a.jsonl");
    let b = dir.join("rauzy-atlas-b.jsonl");
    let (code, _, _) = rauzy(&["atlas", "--d", "4", "--out", a.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _, _) = rauzy(&[
        "atlas",
        "--d",
        "4",
        "--out",
        b.to_str().unwrap(),
        "--jobs",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
    std::fs::remove_file(a).ok();
    std::fs::remove_file(b).ok();
}

#[test]
fn verify_passes_and_unknown_suite_is_usage_error() {
    let (code, stdout, _) = rauzy(&["verify", "inverse-conjugation", "--d", "5"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().all(|l| l.starts_with("PASS")));
    let (code, _, stderr) = rauzy(&["verify", "no-such-suite"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown verification suite"));
}

#[test]
fn parse_errors_exit_with_usage_code() {
    let (code, _, _) = rauzy(&["invariants", "2 2"]);
    assert_eq!(code, 2);
    let (code, _, _) = rauzy(&["invariants", "not numbers"]);
    assert_eq!(code, 2);
}
