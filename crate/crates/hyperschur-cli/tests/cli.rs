//! End-to-end tests driving the `hyperschur` binary through its public
//! command-line surface: golden outputs, JSON shapes, exit codes, and the
//! group-size guard.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperschur"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stdout:\n{}\nstderr:\n{}",
        stdout(output),
        stderr(output)
    );
}

#[test]
fn objects_lists_mirrored_compositions_in_length_then_lex_order() {
    let output = run(&["objects", "--n", "2"]);
    assert_exit(&output, 0);
    assert_eq!(stdout(&output), "(4)\n(1,2,1)\n(2,0,2)\n(1,1,0,1,1)\n");
}

#[test]
fn objects_plain_mode_lists_ordinary_compositions() {
    let output = run(&["objects", "--n", "3", "--mode", "plain"]);
    assert_exit(&output, 0);
    assert_eq!(stdout(&output), "(3)\n(1,2)\n(2,1)\n(1,1,1)\n");
}

#[test]
fn objects_json_reports_mode_and_count() {
    let output = run(&["objects", "--n", "2", "--json"]);
    assert_exit(&output, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");
    assert_eq!(value["mode"], "hyper");
    assert_eq!(value["n"], 2);
    assert_eq!(value["count"], 4);
    assert_eq!(value["objects"][1], "(1,2,1)");
}

#[test]
fn basis_prints_matrices_in_row_major_lex_order() {
    let output = run(&["basis", "--target", "(1,2,1)", "--source", "(1,2,1)"]);
    assert_exit(&output, 0);
    assert_eq!(
        stdout(&output),
        "3 basis elements for Hom((1,2,1) -> (1,2,1))\n\
         [[0,0,1],[0,2,0],[1,0,0]]\n\
         [[0,1,0],[1,0,1],[0,1,0]]\n\
         [[1,0,0],[0,2,0],[0,0,1]]\n"
    );
}

#[test]
fn basis_rejects_objects_of_different_degree() {
    let output = run(&["basis", "--target", "(4)", "--source", "(2)"]);
    assert_exit(&output, 2);
    assert!(stderr(&output).contains("different degrees"));
}

#[test]
fn compose_infers_objects_and_confirms_oracle_agreement() {
    let output = run(&[
        "compose",
        "--f",
        "[[0,1,0],[1,0,1],[0,1,0]]",
        "--g",
        "[[0,1,0],[1,0,1],[0,1,0]]",
        "--oracle",
    ]);
    assert_exit(&output, 0);
    assert_eq!(
        stdout(&output),
        "2*[[0,0,1],[0,2,0],[1,0,0]] + 2*[[1,0,0],[0,2,0],[0,0,1]]\n\
         oracle agreement confirmed\n"
    );
}

#[test]
fn compose_rejects_malformed_matrix_json() {
    let output = run(&["compose", "--f", "nonsense", "--g", "[[1]]"]);
    assert_exit(&output, 2);
}

#[test]
fn compose_rejects_interface_mismatch() {
    // f's source is (1,2,1) but g's target is (4): the grids cannot chain.
    let output = run(&["compose", "--f", "[[0,1,0],[1,0,1],[0,1,0]]", "--g", "[[4]]"]);
    assert_exit(&output, 2);
}

#[test]
fn eval_collapses_axis_split_then_merge_to_a_scalar() {
    let output = run(&["eval", "[S(3,6)] ; [M(3,6)]"]);
    assert_exit(&output, 0);
    assert_eq!(stdout(&output), "160*[[12]]\n");
}

#[test]
fn eval_json_uses_decimal_strings_for_coefficients() {
    let output = run(&["eval", "2*[S(1,2)] ; [M(1,2)]", "--json"]);
    assert_exit(&output, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");
    assert_eq!(value["mode"], "hyper");
    assert_eq!(value["source"], "(4)");
    assert_eq!(value["target"], "(4)");
    assert_eq!(value["terms"][0]["coeff"], "8");
    assert_eq!(value["terms"][0]["matrix"][0][0], 4);
}

#[test]
fn eval_reports_parse_errors_with_byte_offsets() {
    let output = run(&["eval", "[s(1,"]);
    assert_exit(&output, 2);
    assert!(stderr(&output).contains("byte 5"));
}

#[test]
fn normalize_renders_the_axis_collapse_as_a_diagram() {
    let output = run(&["normalize", "[S(3,6)] ; [M(3,6)]"]);
    assert_exit(&output, 0);
    assert_eq!(stdout(&output), "160*[ID(12)]\n");
}

#[test]
fn normalize_plain_stacked_shuffle_reaches_the_three_term_form() {
    let word = "[s(1,1),s(1,1)] ; [id(1),x(1,1),id(1)] ; [m(1,1),m(1,1)]";
    let stacked = format!("{word} ; {word}");
    let output = run(&["normalize", "--mode", "plain", &stacked]);
    assert_exit(&output, 0);
    assert_eq!(
        stdout(&output),
        format!("4*[x(2,2)] + 2*{word} + 4*[id(2),id(2)]\n")
    );
}

#[test]
fn normalize_plain_split_then_merge_is_a_binomial_multiple_of_identity() {
    let output = run(&["normalize", "--mode", "plain", "[s(1,1)] ; [m(1,1)]"]);
    assert_exit(&output, 0);
    assert_eq!(stdout(&output), "2*[id(2)]\n");
}

#[test]
fn verify_counting_suite_passes_and_summarizes() {
    let output = run(&["verify", "--suite", "counting", "--n", "2"]);
    assert_exit(&output, 0);
    let text = stdout(&output);
    assert!(text.lines().all(|line| {
        line.starts_with("PASS") || line.starts_with("counting:")
    }));
    assert!(text.trim_end().ends_with("counting: 8 passed, 0 failed"));
}

#[test]
fn verify_json_is_reproducible_with_a_fixed_timestamp() {
    let args = [
        "verify",
        "--suite",
        "oracle",
        "--n",
        "2",
        "--samples",
        "5",
        "--json",
        "--timestamp",
        "fixed",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_exit(&first, 0);
    assert_eq!(stdout(&first), stdout(&second));
    let value: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid JSON");
    assert_eq!(value["suite"], "oracle");
    assert_eq!(value["timestamp"], "fixed");
    assert_eq!(value["summary"]["failed"], 0);
    assert_eq!(
        value["summary"]["total"],
        value["cases"].as_array().expect("cases array").len()
    );
}

#[test]
fn verify_rejects_unknown_suites_with_the_valid_names() {
    let output = run(&["verify", "--suite", "bogus"]);
    assert_exit(&output, 2);
    let message = stderr(&output);
    assert!(message.contains("unknown suite"));
    assert!(message.contains("defining"));
    assert!(message.contains("all"));
}

#[test]
fn group_cap_env_var_bounds_the_computation() {
    let output = bin()
        .args(["basis", "--target", "(6)", "--source", "(6)"])
        .env("HYPERSCHUR_GROUP_CAP", "10")
        .output()
        .expect("binary runs");
    assert_exit(&output, 2);
    assert!(stderr(&output).contains("exceeds the cap 10"));

    let output = bin()
        .args(["basis", "--target", "(6)", "--source", "(6)"])
        .env("HYPERSCHUR_GROUP_CAP", "100")
        .output()
        .expect("binary runs");
    assert_exit(&output, 0);
}
