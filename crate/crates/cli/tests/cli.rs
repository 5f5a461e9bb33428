use std::process::{Command, Output};

use serde_json::Value;

fn axb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_axb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    axb(args).status.code().expect("exited normally")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(axb(args).stdout).expect("utf-8 output")
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "--mode", "N", "--bound", "20"]), 0);
    assert_eq!(code(&["verify", "--bound", "0"]), 2);
    assert_eq!(code(&["verify", "--bound", "-3"]), 2);
    assert_eq!(code(&["verify", "--window", "0"]), 2);
    assert_eq!(code(&["verify", "--mode", "Q"]), 2);
}

#[test]
fn verify_in_z_mode_reports_flip_relations() {
    let out = axb(&["verify", "--mode", "Z", "--bound", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for case in [
        "f* = f, f^2 = 1",
        "f u f = u*",
        "f s_n = s_n f",
        "s_-n = s_n f",
    ] {
        assert!(text.contains(case), "missing {case}");
    }
}

#[test]
fn trace_values() {
    assert_eq!(stdout(&["trace", "s7 S7"]), "1/7\n");
    assert_eq!(stdout(&["trace", "1"]), "1\n");
    assert_eq!(stdout(&["trace", "u^3 s2 S2 u^-3"]), "1/2\n");
    assert_eq!(stdout(&["trace", "u"]), "0\n");
}

#[test]
fn parse_and_mode_errors_exit_2() {
    assert_eq!(code(&["trace", "s0"]), 2);
    assert_eq!(code(&["trace", "x"]), 2);
    assert_eq!(code(&["trace", "f"]), 2);
    assert_eq!(code(&["--mode", "Z", "trace", "f"]), 0);
    assert_eq!(code(&["adele", "act", "--a", "0", "--b", "1", "0 + []"]), 2);
    assert_eq!(code(&["adele", "act", "--a", "x", "--b", "1", "0 + []"]), 2);
    assert_eq!(
        code(&["adele", "act", "--a", "1", "--b", "1", "0 + [4^2: 1]"]),
        2
    );
}

#[test]
fn adele_action() {
    let out = axb(&[
        "adele",
        "act",
        "--a",
        "3/2",
        "--b",
        "1",
        "0 + [2^4: 6, 3^2: 3]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // 2-precision drops from 4 to 3 digits
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "0 + [2^3: 2, 3^3: 19]\n"
    );
}

#[test]
fn adele_precision_exhausted_exits_3() {
    assert_eq!(
        code(&["adele", "act", "--a", "1/2", "--b", "0", "0 + [3^2: 3]"]),
        3
    );
}

#[test]
fn ktheory_scenarios() {
    let bn = stdout(&["ktheory", "bn", "--n", "5"]);
    assert!(bn.contains("B_5: K_0 = Z^16, K_1 = Z^16"), "{bn}");
    let bd = stdout(&["ktheory", "bd", "--stages", "1"]);
    assert!(bd.contains("K_0 stage 0: Z\n"), "{bd}");
    assert!(!bd.contains("stage 1"));
    let fp = axb(&["ktheory", "fprime", "--stages", "6"]);
    assert_eq!(fp.status.code(), Some(0));
    let fp = String::from_utf8(fp.stdout).unwrap();
    assert!(fp.contains("[3, 2, 2, 2, 2, 2]"), "{fp}");
    assert!(fp.contains("pass  expectation / stabilized_image_rank"));
    let bnp = stdout(&["ktheory", "bnprime", "--n", "2"]);
    assert!(bnp.contains("B'_2: K_0 = Z^2, K_1 = Z^2"), "{bnp}");
}

#[test]
fn ktheory_errors() {
    assert_eq!(code(&["ktheory", "nope"]), 2);
    assert_eq!(code(&["ktheory", "fprime", "--stages", "1"]), 2);
    assert_eq!(code(&["ktheory", "fprime", "--primes", "2,4"]), 2);
    assert_eq!(
        code(&["ktheory", "bd", "--stages", "3", "--bound", "10"]),
        2
    );
    assert_eq!(code(&["ktheory", "bd", "--stages", "0"]), 2);
    assert_eq!(code(&["ktheory", "bd", "--bound", "10"]), 0);
}

#[test]
fn oracle_comparison() {
    assert_eq!(code(&["oracle", "S2 u u s2", "u"]), 0);
    assert_eq!(code(&["oracle", "s2 S2", "1"]), 1);
    assert_eq!(code(&["oracle", "s2"]), 2);
    assert_eq!(code(&["--mode", "Z", "oracle", "--count", "100"]), 0);
}

#[test]
fn output_is_reproducible() {
    let args = [
        "--mode",
        "Z",
        "--seed",
        "5",
        "--format",
        "structured",
        "oracle",
        "--count",
        "200",
    ];
    assert_eq!(axb(&args).stdout, axb(&args).stdout);
    let verify = ["verify", "--bound", "8", "--seed", "3"];
    assert_eq!(axb(&verify).stdout, axb(&verify).stdout);
}

#[test]
fn structured_records_follow_the_schema() {
    let runs: [&[&str]; 4] = [
        &["--format", "structured", "verify", "--bound", "6"],
        &["--format", "structured", "ktheory", "fprime"],
        &["--format", "structured", "trace", "s3 S3"],
        &["--format", "structured", "oracle", "s2 S2", "1"],
    ];
    for args in runs {
        let text = stdout(args);
        assert!(!text.is_empty());
        for line in text.lines() {
            let v: Value = serde_json::from_str(line).expect("one JSON record per line");
            let obj = v.as_object().expect("record is an object");
            let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
            keys.sort_unstable();
            assert_eq!(keys, ["case", "status", "suite", "witness"], "{line}");
            assert!(obj["suite"].is_string() && obj["case"].is_string());
            assert!(
                matches!(obj["status"].as_str(), Some("pass" | "fail" | "value")),
                "{line}"
            );
        }
    }
}
