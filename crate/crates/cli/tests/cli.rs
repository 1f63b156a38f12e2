//! End-to-end tests of the `deglist` binary: exit codes, output formats,
//! and the round-trip guarantee for `realize --emit matrix`.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use degree_lists::{parse_list, BinaryMatrix};

fn deglist(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_deglist"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn deglist");
    if let Some(text) = stdin {
        // Ignore EPIPE: commands that reject their arguments exit without
        // ever reading stdin.
        let _ = child
            .stdin
            .as_mut()
            .expect("piped stdin")
            .write_all(text.as_bytes());
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().expect("wait for deglist");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("deglist-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("create temp dir");
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("write temp file");
    path
}

#[test]
fn check_graph_infeasible_exits_1() {
    let (code, stdout, _) = deglist(&["check", "--kind", "graph"], Some("3\n3\n1\n1\n"));
    assert_eq!(code, 1);
    assert!(stdout.contains("not graphic"), "stdout: {stdout}");
}

#[test]
fn check_graph_feasible_exits_0() {
    let (code, stdout, _) = deglist(&["check", "--kind", "graph"], Some("2\n1\n1\n"));
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().next(), Some("graphic"));
}

#[test]
fn check_unreadable_file_exits_2() {
    let (code, _, stderr) = deglist(&["check", "--kind", "graph", "/no/such/file"], None);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"), "stderr: {stderr}");
}

#[test]
fn check_malformed_input_exits_2() {
    let (code, _, stderr) = deglist(&["check", "--kind", "graph"], Some("1 2 3\n"));
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"), "stderr: {stderr}");
}

#[test]
fn check_emit_json_is_parseable() {
    let path = write_temp("gr-json.txt", "3 3\n1 3\n2 0\n");
    let (code, stdout, _) = deglist(
        &["check", "--kind", "loopdigraph", "--emit", "json", path.to_str().unwrap()],
        None,
    );
    assert_eq!(code, 1);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("json output");
    assert_eq!(doc["kind"], "loop-digraph");
    assert_eq!(doc["check"]["feasible"], false);
}

#[test]
fn count_loopdigraph_example_prints_20() {
    let path = write_temp("count20.txt", "3 1\n3 1\n0 1\n0 1\n0 1\n0 1\n");
    let (code, stdout, _) = deglist(&["count", "--kind", "loopdigraph", path.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "20");
}

#[test]
fn count_json_reports_method() {
    let path = write_temp("count-json.txt", "1 1\n1 1\n1 1\n");
    let (code, stdout, _) = deglist(
        &["count", "--kind", "digraph", "--emit", "json", path.to_str().unwrap()],
        None,
    );
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("json output");
    assert_eq!(doc["exact"], "2");
    assert_eq!(doc["method"], "exhaustive");
}

#[test]
fn path_example_prints_two_transfers() {
    let (code, stdout, _) = deglist(&["path", "2,2,2,0", "4,2,0,0"], None);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(1,3)\n(1,3)\n");
}

#[test]
fn path_not_majorized_exits_2() {
    let (code, _, stderr) = deglist(&["path", "4,2,0,0", "2,2,2,0"], None);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"), "stderr: {stderr}");
}

#[test]
fn realize_matrix_roundtrips_to_input_margins() {
    // A loop-digraph list that forces a nontrivial transfer walk.
    let text = "2 0\n2 1\n1 2\n1 3\n";
    let path = write_temp("realize-roundtrip.txt", text);
    let (code, stdout, _) = deglist(
        &["realize", "--kind", "loopdigraph", "--emit", "matrix", path.to_str().unwrap()],
        None,
    );
    assert_eq!(code, 0);
    let matrix = BinaryMatrix::parse_text(&stdout).expect("matrix output re-parses");
    let input = parse_list(text).expect("fixture parses");
    assert_eq!(matrix.margins(), input.as_pairs());
}

#[test]
fn realize_infeasible_exits_1() {
    let (code, _, stderr) = deglist(&["realize", "--kind", "graph"], Some("3\n3\n1\n1\n"));
    assert_eq!(code, 1);
    assert!(stderr.contains("not realizable"), "stderr: {stderr}");
}

#[test]
fn realize_trace_lists_transfers() {
    let (code, stdout, _) = deglist(
        &["realize", "--kind", "digraph", "--trace"],
        Some("1 1\n1 1\n1 1\n"),
    );
    assert_eq!(code, 0);
    // Matrix block, blank line, then one line per transfer.
    let mut parts = stdout.splitn(2, "\n\n");
    let matrix = parts.next().expect("matrix block");
    assert_eq!(matrix.lines().count(), 3);
    let trace = parts.next().expect("trace block");
    assert!(trace.contains("row"), "trace: {trace}");
}

#[test]
fn enumerate_respects_max() {
    let path = write_temp("enum.txt", "1 1\n1 1\n1 1\n");
    let (code, stdout, _) = deglist(
        &["enumerate", "--kind", "digraph", "--max", "1", path.to_str().unwrap()],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 3, "one 3x3 matrix: {stdout}");

    let (code, stdout, _) = deglist(&["enumerate", "--kind", "digraph", path.to_str().unwrap()], None);
    assert_eq!(code, 0);
    // Two matrices separated by a blank line.
    assert_eq!(stdout.trim().split("\n\n").count(), 2);
}

#[test]
fn bound_prints_decimal() {
    let path = write_temp("bound.txt", "2 1\n2 1\n1 2\n1 2\n");
    let (code, stdout, _) = deglist(&["bound", path.to_str().unwrap()], None);
    assert_eq!(code, 0);
    let bound: u128 = stdout.trim().parse().expect("decimal bound");
    assert!(bound >= 1);
}

#[test]
fn bound_infeasible_exits_1() {
    let (code, _, stderr) = deglist(&["bound"], Some("3 3\n1 3\n2 0\n"));
    assert_eq!(code, 1);
    assert!(stderr.contains("no bound"), "stderr: {stderr}");
}

#[test]
fn minconvex_digraph_defaults_to_opposed() {
    let (code, stdout, _) = deglist(
        &["minconvex", "--n", "4", "--m", "6", "--kind", "digraph"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(stdout, "2 1\n2 1\n1 2\n1 2\n");
}

#[test]
fn experiment_staircase_reports_header_and_holds() {
    let (code, stdout, _) = deglist(&["experiment", "--theorem", "staircase", "--n", "4"], None);
    assert_eq!(code, 0);
    let first = stdout.lines().next().expect("header row");
    assert!(first.contains("theorem: staircase"), "header: {first}");
    assert!(first.contains("holds: true"), "header: {first}");
}

#[test]
fn experiment_minconvex_max_is_deterministic() {
    let args = [
        "experiment",
        "--theorem",
        "minconvex-max",
        "--n",
        "3",
        "--m",
        "3",
        "--kind",
        "digraph",
    ];
    let (code, first_run, _) = deglist(&args, None);
    assert_eq!(code, 0);
    assert!(first_run.starts_with("# theorem: minconvex-max"), "{first_run}");
    assert!(first_run.contains("holds: true"), "{first_run}");
    let (_, second_run, _) = deglist(&args, None);
    assert_eq!(first_run, second_run, "byte-for-byte deterministic");
}

#[test]
fn seed_flag_warns_and_is_ignored() {
    let (code, stdout, stderr) = deglist(&["path", "--seed", "7", "1,1", "2,0"], None);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(1,2)\n");
    assert!(stderr.contains("--seed"), "stderr: {stderr}");
    assert!(stderr.contains("no effect"), "stderr: {stderr}");
}

#[test]
fn stdin_dash_is_default_input() {
    let (code, stdout, _) = deglist(&["count", "--kind", "graph", "-"], Some("1\n1\n"));
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1");
}

#[test]
fn invalid_kind_exits_2() {
    let (code, _, _) = deglist(&["check", "--kind", "multigraph"], Some("1\n1\n"));
    assert_eq!(code, 2);
}
