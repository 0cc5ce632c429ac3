use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tropconn(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tropconn"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const TWO_POINTS: &str = r#"{"format_version": "1", "ambient_dim": 1,
  "cells": [{"vertices": [[0]]}, {"vertices": [["1"]]}]}"#;

const OVERLAPPING: &str = r#"{"format_version": "1", "ambient_dim": 1,
  "cells": [{"vertices": [[0], [2]]}, {"vertices": [[1], [3]]}]}"#;

#[test]
fn ex13_prints_valuations_and_disconnected() {
    let o = tropconn(&["example", "ex13"], "");
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("{0:1, 1:1}"));
    assert!(out.contains("disconnected"));
}

#[test]
fn ex14_prints_verdicts() {
    let o = tropconn(&["example", "ex14"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("connected: true, connected-through-codim-1: false, intersection point: (0,0,1,2)"));
}

#[test]
fn bergman_piped_into_connectivity() {
    let fan = stdout(&tropconn(&["bergman", "4", "2"], ""));
    let o = tropconn(&["connectivity"], &fan);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("connected-through-codim-1: true"));
}

#[test]
fn two_points_are_disconnected() {
    let o = tropconn(&["connectivity", "-"], TWO_POINTS);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("connected: false"));
    let w = tropconn(&["walk", "0", "1"], TWO_POINTS);
    assert_eq!(code(&w), 1);
    assert_eq!(stdout(&w).trim(), "unreachable");
}

#[test]
fn validate_verdicts() {
    assert_eq!(code(&tropconn(&["validate"], TWO_POINTS)), 0);
    let o = tropconn(&["validate"], OVERLAPPING);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("invalid"));
}

#[test]
fn input_errors_exit_with_two() {
    let bad = r#"{"format_version": "1", "ambient_dim": 1, "cells": [{"vertices": [["1/0"]]}]}"#;
    let o = tropconn(&["validate"], bad);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cells[0]"));
    assert_eq!(code(&tropconn(&["connectivity"], OVERLAPPING)), 2);
    assert_eq!(code(&tropconn(&["bergman", "2", "3"], "")), 2);
    assert_eq!(code(&tropconn(&["walk", "0", "7"], TWO_POINTS)), 2);
}

#[test]
fn newton_reads_a_univariate() {
    let doc = r#"{"terms": [{"exponent": 0, "valuation": 1}, {"exponent": 1, "valuation": 0},
                            {"exponent": 2, "valuation": 0}]}"#;
    let o = tropconn(&["newton"], doc);
    assert_eq!(stdout(&o).trim(), "{0:1, 1:1}");
}

#[test]
fn hypersurface_of_a_linear_form_is_a_translated_fan() {
    let doc = r#"{"ambient_dim": 2, "terms": [
        {"exponent": [0, 0], "valuation": 0},
        {"exponent": [1, 0], "valuation": "1/2"},
        {"exponent": [0, 1], "valuation": -1}]}"#;
    let trop = stdout(&tropconn(&["hypersurface"], doc));
    let fan = stdout(&tropconn(&["bergman", "2", "1"], ""));
    let moved = stdout(&tropconn(&["translate", "--vector", "-1/2,1"], &fan));
    assert_eq!(trop, moved);
}

#[test]
fn theorem_walk_is_deterministic() {
    let fan = stdout(&tropconn(&["bergman", "3", "2"], ""));
    let a = tropconn(&["--seed", "9", "theorem-walk", "0", "5"], &fan);
    let b = tropconn(&["theorem-walk", "0", "5", "--seed", "9"], &fan);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.starts_with("0 -> ") && out.trim_end().ends_with("-> 5"));
}

#[test]
fn slice_with_an_explicit_vector() {
    let fan = stdout(&tropconn(&["bergman", "2", "1"], ""));
    let o = tropconn(&["slice", "--vector", "-1/2,-1/3"], &fan);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("assignment"));
}
