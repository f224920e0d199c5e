//! End-to-end checks of the binary: output wording, wire formats, exit
//! codes, and determinism.

use std::process::Command;

fn fracton(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_fracton"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf8 stdout"),
        String::from_utf8(output.stderr).expect("utf8 stderr"),
        output.status.code().unwrap_or(-1),
    )
}

#[test]
fn classify_plain_and_json() {
    let (stdout, _, code) = fracton(&["classify", "1/3", "--format", "plain"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "h = 5/3\n");

    let (stdout, _, code) = fracton(&["classify", "1/3", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"nu\":\"1/3\",\"h\":\"5/3\"}\n");

    let (stdout, _, code) = fracton(&["classify", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "nu,h\n4/1,2/1\n");
}

#[test]
fn dual_round_trips() {
    let (stdout, _, code) = fracton(&["dual", "2/7"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "dual = 5/7\n");
    let (stdout, _, _) = fracton(&["dual", "5/7", "--format", "json"]);
    assert_eq!(stdout, "{\"nu\":\"5/7\",\"dual\":\"2/7\"}\n");
}

#[test]
fn farey_csv_lists_one_fraction_per_line() {
    let (stdout, _, code) = fracton(&["farey", "--order", "6", "--format", "csv"]);
    assert_eq!(code, 0);
    let expected = "0/1\n1/6\n1/5\n1/4\n1/3\n2/5\n1/2\n3/5\n2/3\n3/4\n4/5\n5/6\n1/1\n";
    assert_eq!(stdout, expected);

    let (stdout, _, _) = fracton(&["farey", "--order", "1", "--format", "json"]);
    assert_eq!(stdout, "[\"0/1\",\"1/1\"]\n");
}

#[test]
fn table_matches_golden_csv() {
    let (stdout, _, code) = fracton(&["table", "--order", "6", "--rows", "18", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/table_order6_rows18.csv"));
}

#[test]
fn table_runs_are_byte_identical() {
    let first = fracton(&["table", "--order", "7", "--rows", "9", "--format", "json"]);
    let second = fracton(&["table", "--order", "7", "--rows", "9", "--format", "json"]);
    assert_eq!(first, second);
}

#[test]
fn occupation_json_carries_twelve_significant_digits() {
    let (stdout, _, code) = fracton(&["occupation", "--h", "3/2", "--xi", "1", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"Y\":2.61803398875"), "stdout: {stdout}");
    assert!(stdout.contains("\"n\":0.894427191"), "stdout: {stdout}");
}

#[test]
fn occupation_grid_emits_csv_rows() {
    let (stdout, _, code) = fracton(&[
        "occupation", "--h", "1", "--grid", "1:4:4", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "h,xi,Y,n,residual");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("1,1,3,0.5,"));
    assert!(lines[4].starts_with("1,4,6,0.2,"));
}

#[test]
fn occupation_respects_precision_flag() {
    let (stdout, _, _) = fracton(&[
        "occupation", "--h", "3/2", "--xi", "1", "--precision", "4", "--format", "json",
    ]);
    assert!(stdout.contains("\"Y\":2.618,"), "stdout: {stdout}");
}

#[test]
fn entropy_solves_occupation_from_xi() {
    let (stdout, _, code) = fracton(&["entropy", "--h", "1", "--xi", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "h = 1\nn = 0.25\nS = 0.562335144619\n");

    let (stdout, _, code) = fracton(&["entropy", "--h", "1", "--n", "0.5", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "h,n,S\n1,0.5,0.69314718056\n");
}

#[test]
fn curve_points_export_as_xy_lines() {
    let (stdout, _, code) = fracton(&["curve", "--level", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let expected = "0,0\n0.333333333333,0\n0.5,0.288675134595\n0.666666666667,0\n1,0\n";
    assert_eq!(stdout, expected);
}

#[test]
fn curve_estimate_reports_dimension() {
    let (stdout, _, code) = fracton(&["curve", "--level", "6", "--estimate", "--format", "csv"]);
    assert_eq!(code, 0);
    let value: f64 = stdout
        .lines()
        .nth(1)
        .and_then(|line| line.split(',').next())
        .and_then(|field| field.parse().ok())
        .expect("h field");
    assert!((value - 1.2618595).abs() < 0.03, "estimate {value}");
}

#[test]
fn theorem_summary_line() {
    let (stdout, _, code) = fracton(&["theorem", "--order", "6"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("11/11 interior fractions of F_6 satisfy the second-member theorem\n"));
}

#[test]
fn usage_errors_exit_two() {
    let (_, _, code) = fracton(&["classify"]);
    assert_eq!(code, 2);
    let (_, _, code) = fracton(&["classify", "one/two"]);
    assert_eq!(code, 2);
    let (_, _, code) = fracton(&["--bogus"]);
    assert_eq!(code, 2);
    let (_, _, code) = fracton(&["occupation", "--h", "3/2"]);
    assert_eq!(code, 2, "missing required --xi/--grid");
    let (_, _, code) = fracton(&["farey", "--order", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn domain_errors_exit_one_with_diagnostic() {
    let (stdout, stderr, code) = fracton(&["occupation", "--h", "2", "--xi", "0.5"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    assert!(stderr.contains("condensation"), "stderr: {stderr}");

    let (_, stderr, code) = fracton(&["classify", "-1/3"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("nonnegative"), "stderr: {stderr}");

    let (_, stderr, code) = fracton(&["class", "5/2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("[1, 2]"), "stderr: {stderr}");
}
