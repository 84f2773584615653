use std::process::{Command, Output};

use spivey_core::rat;
use spivey_core::spivey::{spivey_degenerate_bell, spivey_degenerate_r_dowling};

fn spivey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spivey"))
        .args(args)
        .output()
        .expect("spawn spivey")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn stirling_table_csv() {
    let out = spivey(&["table", "--family", "stirling2-deg", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "n,k,coeff\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1;-1\n2,2,1\n"
    );
}

#[test]
fn stirling_table_with_lambda_substituted() {
    let out = spivey(&[
        "table",
        "--family",
        "stirling2-deg",
        "--n-max",
        "3",
        "--lambda",
        "0",
    ]);
    let rows: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert!(rows.contains(&"3,2,3".to_owned()));
}

#[test]
fn whitney_m2_row() {
    let out = spivey(&[
        "table", "--family", "whitney", "--m", "2", "--n-max", "2", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n=2 k=0: 1 - 1*L\n"));
}

#[test]
fn bell_polynomials() {
    let out = spivey(&[
        "table", "--family", "bell", "--n-max", "2", "--format", "text",
    ]);
    assert_eq!(stdout(&out), "n=0: 1\nn=1: x\nn=2: x^2 + (1 - 1*L) * x\n");
    let out = spivey(&["table", "--family", "bell", "--n-max", "0"]);
    assert_eq!(stdout(&out), "n,poly\n0,1\n");
}

#[test]
fn table_json_lines_parse() {
    let out = spivey(&[
        "table",
        "--family",
        "r-dowling",
        "--m",
        "2",
        "--r",
        "5/2",
        "--n-max",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["n"], 3);
}

#[test]
fn table_usage_errors() {
    assert_eq!(
        spivey(&["table", "--family", "whitney", "--n-max", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spivey(&[
            "table",
            "--family",
            "r-whitney",
            "--m",
            "1",
            "--r",
            "-1",
            "--n-max",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        spivey(&["table", "--family", "nope", "--n-max", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn normal_order_text() {
    let out = spivey(&["normal-order", "--expr", "a*ad"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ad^1 * a^1 + 1\n");
}

#[test]
fn normal_order_json() {
    let out = spivey(&["normal-order", "--expr", "dpow(ad*a,2)", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "[{\"coeff\":[\"1\"],\"i\":2,\"j\":2},{\"coeff\":[\"1\",\"-1\"],\"i\":1,\"j\":1}]\n"
    );
}

#[test]
fn normal_order_parse_error_has_offset() {
    let out = spivey(&["normal-order", "--expr", "a*"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("at offset 2"));
}

#[test]
fn apply_identity_to_vacuum() {
    let out = spivey(&["apply", "--expr", "I", "--degree", "3"]);
    assert_eq!(
        stdout(&out),
        "# degree bound 3, exact up to x^3\nx^0: 1\nx^1: 1\nx^2: 1/2\nx^3: 1/6\n"
    );
}

#[test]
fn apply_marks_truncated_coefficients() {
    let out = spivey(&[
        "apply", "--expr", "a^2", "--degree", "3", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["valid_up_to"], 1);
    assert_eq!(doc["degree_bound"], 3);
}

#[test]
fn verify_single_point_matches_library() {
    let out = spivey(&[
        "verify",
        "--identity",
        "spivey-deg-bell",
        "--n",
        "3",
        "--m",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let first = text.lines().next().unwrap();
    assert_eq!(first, spivey_degenerate_bell(3, 2).to_json().to_string());

    let out = spivey(&[
        "verify",
        "--identity",
        "spivey-deg-r-dowling",
        "--m",
        "2",
        "--r",
        "5/2",
        "--n",
        "2",
        "--l",
        "1",
    ]);
    let first = stdout(&out).lines().next().unwrap().to_owned();
    assert_eq!(
        first,
        spivey_degenerate_r_dowling(2, &rat(5, 2), 2, 1)
            .to_json()
            .to_string()
    );
}

#[test]
fn verify_summary_line() {
    let out = spivey(&["verify", "--identity", "eq10", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let last = stdout(&out).lines().last().unwrap().to_owned();
    assert_eq!(
        last,
        "{\"summary\":{\"failed\":0,\"identity\":\"eq10\",\"passed\":5,\"total\":5}}"
    );
}

#[test]
fn verify_usage_errors() {
    assert_eq!(
        spivey(&["verify", "--identity", "thm22", "--k", "5", "--degree", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spivey(&["verify", "--identity", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        spivey(&[
            "verify",
            "--identity",
            "spivey-deg-dowling",
            "--m",
            "0",
            "--n",
            "1",
            "--l",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn verify_output_file() {
    let path = std::env::temp_dir().join(format!("spivey-verify-{}.jsonl", std::process::id()));
    let out = spivey(&[
        "verify",
        "--identity",
        "thm24",
        "--n-max",
        "2",
        "--m-max",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written.lines().count(), 10);
}
