//! End-to-end tests of the `trop-jac` binary: golden outputs, exit codes,
//! and the promise that reports are byte-stable across runs.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const THETA_GRAPH: &str = r#"{
  "vertices": ["q", "w"],
  "edges": [
    {"id": "e1", "src": "q", "dst": "w", "length": "1"},
    {"id": "e2", "src": "q", "dst": "w", "length": "1"},
    {"id": "e3", "src": "q", "dst": "w", "length": "1"}
  ],
  "basepoint": "q"
}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trop-jac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("process exits normally")
}

fn write_theta(dir: &Path) -> PathBuf {
    let path = dir.join("theta.json");
    fs::write(&path, THETA_GRAPH).unwrap();
    path
}

#[test]
fn period_json_report_is_an_exact_golden() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_theta(dir.path());
    let graph = graph.to_str().unwrap();

    let expected = concat!(
        "{\n",
        "  \"schema_version\": 1,\n",
        "  \"command\": \"period\",\n",
        "  \"report\": {\n",
        "    \"genus\": 2,\n",
        "    \"matrix\": [\n",
        "      [\n",
        "        \"2\",\n",
        "        \"1\"\n",
        "      ],\n",
        "      [\n",
        "        \"1\",\n",
        "        \"2\"\n",
        "      ]\n",
        "    ]\n",
        "  }\n",
        "}\n",
    );
    let first = run(&["period", "--graph", graph]);
    assert_eq!(code_of(&first), 0);
    assert_eq!(stdout_of(&first), expected);

    // Byte stability: a second run must reproduce the output exactly.
    let second = run(&["period", "--graph", graph]);
    assert_eq!(first.stdout, second.stdout);

    let text = run(&["period", "--graph", graph, "--format", "text"]);
    assert_eq!(stdout_of(&text), "genus: 2\n2 1\n1 2\n");
}

#[test]
fn circuits_report_the_deterministic_tree() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_theta(dir.path());
    let graph = graph.to_str().unwrap();

    let out = run(&["circuits", "--graph", graph, "--format", "text"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "genus: 2\ntree: e1\ncotree: e2 e3\nedges: e1 e2 e3\n\
         circuit 0: -1 1 0\ncircuit 1: -1 0 1\n"
    );

    // A nonzero seed may pick a different spanning tree, but the genus and
    // the exit status are invariant.
    let seeded = run(&["circuits", "--graph", graph, "--seed", "7", "--format", "text"]);
    assert_eq!(code_of(&seeded), 0);
    assert!(stdout_of(&seeded).starts_with("genus: 2\n"));
}

#[test]
fn abel_jacobi_images_reduce_canonically() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_theta(dir.path());
    let graph = graph.to_str().unwrap();

    let out = run(&["aj", "--graph", graph, "e2:1/2", "e3:1/3", "--format", "text"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "genus: 2\nbasepoint: q\n\
         e2:1/2 -> (3/2, 2)\n\
         e3:1/3 -> (2, 4/3)\n\
         sum -> (1/2, 1/3)\n"
    );
}

#[test]
fn wd_cells_carry_unit_weights() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_theta(dir.path());
    let graph = graph.to_str().unwrap();

    let out = run(&["wd-cells", "--graph", graph, "--d", "1", "--format", "text"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "genus: 2\nd: 1\ncells: 3\n\
         \x20 [e1] base (0, 0) weight 1\n    gen (-1, -1)\n\
         \x20 [e2] base (0, 0) weight 1\n    gen (1, 0)\n\
         \x20 [e3] base (0, 0) weight 1\n    gen (0, 1)\n"
    );
}

#[test]
fn class_commands_print_the_exterior_model() {
    let out = run(&["class", "wd", "--genus", "2", "--d", "1", "--format", "text"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "genus: 2\nside: homology\nterms: 2\n  1 · (1 | 1)\n  1 · (2 | 2)\n"
    );

    let pow = run(&["class", "theta-pow", "--genus", "3", "--k", "2", "--format", "text"]);
    assert_eq!(code_of(&pow), 0);
    assert_eq!(
        stdout_of(&pow),
        "genus: 3\nside: homology\nterms: 3\n  2 · (1 | 1)\n  2 · (2 | 2)\n  2 · (3 | 3)\n"
    );

    let json = run(&["class", "wd", "--genus", "2", "--d", "1"]);
    let text = stdout_of(&json);
    assert!(text.contains("\"command\": \"class wd\""), "got: {text}");
    assert!(text.contains("\"side\": \"homology\""), "got: {text}");
}

#[test]
fn verification_commands_pass_on_honest_input() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_theta(dir.path());
    let graph = graph.to_str().unwrap();

    let poincare = run(&["verify", "poincare", "--graph", graph]);
    assert_eq!(code_of(&poincare), 0);
    assert!(stdout_of(&poincare).contains("\"all_passed\": true"));

    let riemann = run(&["verify", "riemann", "--genus", "3", "--format", "text"]);
    assert_eq!(code_of(&riemann), 0);
    assert_eq!(stdout_of(&riemann), "genus: 3\nriemann: ok\n");
}

#[test]
fn degree_commands_print_closed_forms() {
    let theta_g = run(&["degree", "theta-g", "--genus", "4", "--format", "text"]);
    assert_eq!(code_of(&theta_g), 0);
    assert_eq!(stdout_of(&theta_g), "24\n");

    let pair = run(&["degree", "wd-pair", "--genus", "5", "--d", "2", "--format", "text"]);
    assert_eq!(code_of(&pair), 0);
    assert_eq!(stdout_of(&pair), "10\n");

    let json = run(&["degree", "theta-g", "--genus", "5"]);
    assert!(stdout_of(&json).contains("\"value\": \"120\""));
}

#[test]
fn theta_commands_report_certified_minimizers() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_theta(dir.path());
    let graph = graph.to_str().unwrap();

    let eval = run(&["theta", "eval", "--graph", graph, "--x", "1,0", "--format", "text"]);
    assert_eq!(code_of(&eval), 0);
    assert_eq!(
        stdout_of(&eval),
        "value: 0\nminimizers: 3\n  -1 0\n  -1 1\n  0 0\n\
         certified radius: 4\non divisor: true\n"
    );

    let on = run(&["theta", "divisor-test", "--graph", graph, "--x", "1,0", "--format", "text"]);
    assert_eq!(code_of(&on), 0);
    assert_eq!(stdout_of(&on), "on divisor: true\nminimizers: 3\n");

    let off = run(&["theta", "divisor-test", "--graph", graph, "--x", "0,0", "--format", "text"]);
    assert_eq!(code_of(&off), 0);
    assert_eq!(stdout_of(&off), "on divisor: false\nminimizers: 1\n");

    // A non-principal translate by half a period moves the divisor.
    let shifted = run(&[
        "theta",
        "divisor-test",
        "--graph",
        graph,
        "--x",
        "0,0",
        "--l",
        "1,1/2",
        "--format",
        "text",
    ]);
    assert_eq!(code_of(&shifted), 0);
    assert!(stdout_of(&shifted).starts_with("on divisor: true\n"));
}

#[test]
fn relevant_vectors_form_the_hexagon() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_theta(dir.path());
    let graph = graph.to_str().unwrap();

    let out = run(&["theta", "relevant-vectors", "--graph", graph, "--format", "text"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "genus: 2\ncount: 6\n  -1 0\n  -1 1\n  0 -1\n  0 1\n  1 -1\n  1 0\n"
    );
}

#[test]
fn info_prunes_leaves_before_reporting() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lollipop.json");
    fs::write(
        &path,
        r#"{
          "vertices": ["a", "b", "hair"],
          "edges": [
            {"id": "loop", "src": "a", "dst": "a", "length": "2"},
            {"id": "stick", "src": "a", "dst": "b", "length": "1"},
            {"id": "split", "src": "b", "dst": "hair", "length": "1"}
          ],
          "basepoint": "a"
        }"#,
    )
    .unwrap();

    let out = run(&["info", "--graph", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("genus: 1\nbasepoint: a\nvertices: 1\nedges: 1\n"), "got: {text}");
    assert!(text.contains("loop"), "got: {text}");
    assert!(!text.contains("stick"), "got: {text}");
}

#[test]
fn corpus_processes_every_file_and_exits_by_severity() {
    let dir = tempfile::tempdir().unwrap();
    write_theta(dir.path());
    fs::write(dir.path().join("broken.json"), "{\"vertices\": [,]}").unwrap();
    fs::write(dir.path().join("notes.txt"), "not a graph").unwrap();
    let dir_arg = dir.path().to_str().unwrap();

    let mixed = run(&["corpus", dir_arg, "--format", "text"]);
    assert_eq!(code_of(&mixed), 2);
    let text = stdout_of(&mixed);
    assert!(text.contains("input-error  broken.json"), "got: {text}");
    assert!(text.contains("pass         theta.json"), "got: {text}");
    assert!(text.contains("2 graphs: 1 passed, 1 input errors, 0 verification failures"));

    fs::remove_file(dir.path().join("broken.json")).unwrap();
    let clean = run(&["corpus", dir_arg]);
    assert_eq!(code_of(&clean), 0);
    assert!(stdout_of(&clean).contains("\"status\": \"pass\""));

    let empty = tempfile::tempdir().unwrap();
    let none = run(&["corpus", empty.path().to_str().unwrap()]);
    assert_eq!(code_of(&none), 2);
    assert!(stderr_of(&none).contains("no graph documents"));
}

#[test]
fn input_errors_exit_two_with_a_message() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_theta(dir.path());
    let graph = graph.to_str().unwrap();

    // Missing file.
    let missing = run(&["period", "--graph", "/nonexistent/g.json"]);
    assert_eq!(code_of(&missing), 2);
    assert!(stderr_of(&missing).starts_with("error:"));

    // Malformed rational in --x.
    let bad_x = run(&["theta", "eval", "--graph", graph, "--x", "0.5,1"]);
    assert_eq!(code_of(&bad_x), 2);
    assert!(stderr_of(&bad_x).contains("not a rational"));

    // Wrong dimension in --x.
    let bad_dim = run(&["theta", "eval", "--graph", graph, "--x", "1,0,0"]);
    assert_eq!(code_of(&bad_dim), 2);

    // d beyond the genus.
    let bad_d = run(&["wd-cells", "--graph", graph, "--d", "9"]);
    assert_eq!(code_of(&bad_d), 2);

    // Curve point parsing and range errors.
    let no_colon = run(&["aj", "--graph", graph, "e2"]);
    assert_eq!(code_of(&no_colon), 2);
    let unknown_edge = run(&["aj", "--graph", graph, "zz:1/2"]);
    assert_eq!(code_of(&unknown_edge), 2);
    let out_of_range = run(&["aj", "--graph", graph, "e2:5"]);
    assert_eq!(code_of(&out_of_range), 2);

    // Usage errors from the argument parser share the same code.
    let usage = run(&["verify", "poincare"]);
    assert_eq!(code_of(&usage), 2);
}
