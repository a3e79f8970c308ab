use std::io::Write;
use std::process::{Command, Output, Stdio};

use monocover::io::covering_from_json;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monocover"))
        .args(args)
        .output()
        .unwrap()
}

fn run_with_input(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monocover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn formulas_print_plain_numbers() {
    assert_eq!(stdout(&run(&["p", "4", "4"])), "3\n");
    assert_eq!(stdout(&run(&["width", "5", "5"])), "inf\n");
    assert_eq!(stdout(&run(&["width", "4", "3"])), "5\n");
    assert_eq!(stdout(&run(&["width-id", "4", "2", "1"])), "5\n");
    let out = run(&["width-id", "3", "2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn ascii_pipeline_verifies() {
    let cover = run(&["cover", "4", "4", "--format", "ascii"]);
    assert!(cover.status.success());
    let verify = run_with_input(&["verify"], &cover.stdout);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn json_pipeline_verifies_minimum_for_all_small_boards() {
    for m in 1..=40u32 {
        for n in 1..=40u32 {
            let cover = run(&["cover", &m.to_string(), &n.to_string()]);
            assert!(cover.status.success());
            let verify = run_with_input(&["verify", "-", "--expect-min"], &cover.stdout);
            assert_eq!(verify.status.code(), Some(0), "{m}x{n}");
        }
    }
}

#[test]
fn verify_reports_failures() {
    let gap = br#"{"m":2,"n":2,"tiles":[{"dir":"inc","start":0,"values":[1,1,1]}]}"#;
    let out = run_with_input(&["verify"], gap);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("uncovered"));

    let strips = br#"{"m":4,"n":4,"tiles":[
        {"dir":"inc","start":0,"values":[1,1,1,1,1]},{"dir":"inc","start":0,"values":[2,2,2,2,2]},
        {"dir":"inc","start":0,"values":[3,3,3,3,3]},{"dir":"inc","start":0,"values":[4,4,4,4,4]}]}"#;
    assert_eq!(run_with_input(&["verify"], strips).status.code(), Some(0));
    assert_eq!(
        run_with_input(&["verify", "--expect-min"], strips)
            .status
            .code(),
        Some(1)
    );

    let broken = br#"{"m":2,"n":2,"tiles":[{"dir":"inc","start":0,"values":[2,1,1]}]}"#;
    let out = run_with_input(&["verify"], broken);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tile 0"));
}

#[test]
fn split_cover_and_infeasible_request() {
    let out = run(&["cover", "5", "4", "--split", "2", "1"]);
    assert!(out.status.success());
    let c = covering_from_json(&stdout(&out)).unwrap();
    assert_eq!(c.class_counts(), (2, 1));
    assert!(c.is_covering());
    assert_eq!(
        run(&["cover", "6", "4", "--split", "2", "1"]).status.code(),
        Some(3)
    );
}

#[test]
fn cover_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.svg");
    let out = run(&[
        "cover",
        "6",
        "5",
        "--format",
        "svg",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(roxmltree::Document::parse(&svg).is_ok());

    let json = dir.path().join("c.json");
    run(&["cover", "9", "7", "-o", json.to_str().unwrap()]);
    assert!(run(&["verify", json.to_str().unwrap(), "--expect-min"])
        .status
        .success());
}

#[test]
fn oracle_subcommands() {
    assert_eq!(stdout(&run(&["oracle", "min", "4", "4"])), "3\n");
    assert_eq!(
        stdout(&run(&["oracle", "min", "4", "3", "--dir", "inc"])),
        "3\n"
    );
    assert_eq!(stdout(&run(&["oracle", "width", "4", "2", "1"])), "5\n");
    let out = stdout(&run(&["oracle", "min", "3", "3", "--witness"]));
    let witness = covering_from_json(out.lines().nth(1).unwrap()).unwrap();
    assert!(witness.is_covering() && witness.len() == 2);
}

#[test]
fn line_prints_a_tile() {
    assert_eq!(
        stdout(&run(&["line", "1/3", "1/2", "0", "3", "3", "3"])),
        "{\"dir\":\"inc\",\"start\":0,\"values\":[1,1,2,2]}\n"
    );
    assert_eq!(
        stdout(&run(&["line", "-1/3", "5/2", "1", "3", "3", "3"])),
        "{\"dir\":\"dec\",\"start\":1,\"values\":[3,2,2]}\n"
    );
    assert_eq!(
        run(&["line", "1", "0", "0", "2", "3", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["line", "x", "0", "0", "2", "3", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn table_formats() {
    let csv = stdout(&run(&["table", "4", "--csv"]));
    assert_eq!(csv.lines().next(), Some("n\\m,1,2,3,4"));
    assert_eq!(csv.lines().nth(4), Some("4,1,2,3,3"));
    let plain = stdout(&run(&["table", "3"]));
    assert_eq!(plain.lines().count(), 4);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["p", "4"]).status.code(), Some(2));
    assert_eq!(
        run(&["cover", "4", "4", "--format", "png"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
}
