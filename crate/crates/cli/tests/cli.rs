use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oppdc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

#[test]
fn biclique_construction_matches_golden_file() {
    let o = run(&["construct", "--family", "biclique", "--n", "3", "--m", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), golden("biclique-3-3.cover"));
}

#[test]
fn k3_is_unsat() {
    let o = run(&["solve", "--input", &data("k3.g6")]);
    assert_eq!(code(&o), 1);
    assert!(o.stdout.is_empty());
    let o = run(&["solve", "--input", &data("k3.g6"), "--exhaustive"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn k5_with_tiny_budget_is_not_unsat() {
    let o = run(&["solve", "--input", &data("k5.el"), "--budget-nodes", "100"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn solve_prints_a_cover_that_verifies() {
    let o = run(&["solve", "--input", &data("c4.el")]);
    assert_eq!(code(&o), 0);
    let path = std::env::temp_dir().join(format!("oppdc-c4-{}.cover", std::process::id()));
    std::fs::write(&path, stdout(&o)).unwrap();
    let v = run(&[
        "verify",
        "--graph",
        &data("c4.el"),
        "--cover",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&v), 0);
    let _ = std::fs::remove_file(path);
}

#[test]
fn verify_exit_codes() {
    let g = data("two-triangles.el");
    let o = run(&[
        "verify",
        "--graph",
        &g,
        "--cover",
        &data("two-triangles.cover"),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "valid\n");
    let o = run(&[
        "verify",
        "--graph",
        &g,
        "--cover",
        &data("two-triangles-bad.cover"),
    ]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("arc 0->2 not covered"));
    let o = run(&["verify", "--graph", &g, "--cover", &data("missing.cover")]);
    assert_eq!(code(&o), 3);
}

#[test]
fn fixture_command_reproduces_files() {
    let o = run(&["fixture", "K3K3-cut-vertex"]);
    assert_eq!(stdout(&o), golden("two-triangles.cover"));
    let o = run(&["fixture", "k3k3-cut-vertex", "--graph"]);
    assert_eq!(stdout(&o), golden("two-triangles.el"));
    assert_eq!(code(&run(&["fixture", "K7"])), 3);
    assert_eq!(stdout(&run(&["fixture"])).lines().count(), 5);
}

#[test]
fn input_errors_exit_3() {
    assert_eq!(code(&run(&["bogus"])), 3);
    assert_eq!(
        code(&run(&[
            "solve",
            "--input",
            &data("k3.g6"),
            "--no-such-flag"
        ])),
        3
    );
    assert_eq!(code(&run(&["construct", "--family", "cycle"])), 3);
    assert_eq!(code(&run(&["solve", "--input", &data("stream.g6")])), 3);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn constructions_without_a_cover_exit_1() {
    assert_eq!(
        code(&run(&["construct", "--family", "cycle", "--n", "3"])),
        1
    );
    assert_eq!(
        code(&run(&["construct", "--family", "complete", "--n", "5"])),
        1
    );
}

#[test]
fn filter_reports() {
    let o = run(&["filter", "--stream", &data("stream.g6"), "--jobs", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[2].contains("\"verdict\":\"parse-error\""));
    assert!(lines[4].contains("\"survivors\":[]"));
    let o = run(&["filter", "--stream", &data("stream.g6"), "--report", "text"]);
    assert!(stdout(&o).contains("parse-error: 1"));
}

#[test]
fn product_and_socdc_conversion() {
    let o = run(&[
        "product",
        "--left",
        &data("k2.el"),
        "--right",
        &data("c4.el"),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("paths 8\n"));
    let o = run(&[
        "convert",
        "--to",
        "socdc",
        "--graph",
        &data("two-triangles.el"),
        "--cover",
        &data("two-triangles.cover"),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("cycles 5\n"));
    let o = run(&["convert", "--to", "graph6", "--graph", &data("k3.g6")]);
    assert_eq!(stdout(&o), "Bw\n");
}
