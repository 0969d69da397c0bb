//! End-to-end checks of the `fmzv` binary: command output, exit codes,
//! report formats and the determinism contract.

use std::path::Path;
use std::process::{Command, Output};

fn fmzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args(args)
        .env_remove("FMZV_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn expand_worked_examples() {
    let out = fmzv(&["expand", "z2 st z3"]);
    assert_eq!(stdout(&out), "z2 z3 + z3 z2 + z5\n");
    assert_eq!(code(&out), 0);

    assert_eq!(stdout(&fmzv(&["expand", "1"])), "1\n");
    assert_eq!(
        stdout(&fmzv(&["expand", "d(z1 z1 z1)"])),
        "z1 z1 z1 + z1 z2 + z2 z1 + z3\n"
    );
    assert_eq!(
        stdout(&fmzv(&["expand", "z2 sb z3"])),
        "z2 z3 + z3 z2 - z5\n"
    );
}

#[test]
fn eval_worked_examples() {
    assert_eq!(stdout(&fmzv(&["eval", "z2 z1", "--p", "5"])), "1\n");
    assert_eq!(
        stdout(&fmzv(&["eval", "z2 z1", "--p", "5", "--star"])),
        "1\n"
    );
    assert_eq!(stdout(&fmzv(&["eval", "1", "--p", "7"])), "1\n");
}

#[test]
fn sweep_clean_case_exits_zero() {
    let out = fmzv(&["sweep", "z3 z1", "2", "500", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["expression"], "z3 z1");
    assert_eq!(report["weight"], 4);
    assert_eq!(report["threshold"], 6);
    assert_eq!(report["violations"], serde_json::json!([]));
    assert_eq!(report["range"], serde_json::json!([2, 500]));
}

#[test]
fn sweep_violation_exits_one() {
    // z2 z1 is not zero in the quotient ring, so violations appear
    let out = fmzv(&["sweep", "z2 z1", "2", "100"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("violations: ["));
}

#[test]
fn sweep_degenerate_but_legal_expression() {
    let out = fmzv(&["sweep", "z1 z1 sh z2 st 1", "2", "100", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["residues"].as_array().unwrap().len() > 20);
}

#[test]
fn sweep_csv_is_a_residue_table() {
    let out = fmzv(&["sweep", "z2", "2", "20", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,r"));
    assert_eq!(lines.next(), Some("2,1"));
    assert!(text.lines().count() > 5);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&fmzv(&["expand", "z2 st + z3"])), 2);
    assert_eq!(code(&fmzv(&["eval", "z2", "--p", "9"])), 2);
    assert_eq!(code(&fmzv(&["eval", "1/5 z2", "--p", "5"])), 2);
    assert_eq!(code(&fmzv(&["verify", "not-a-suite"])), 2);
    assert_eq!(code(&fmzv(&["sweep", "z2", "--range", "9:2"])), 2);
    assert_eq!(code(&fmzv(&["expand", "z0"])), 2);
    // clap usage errors share the code
    assert_eq!(code(&fmzv(&["no-such-command"])), 2);
}

#[test]
fn verify_examples_pass() {
    let out = fmzv(&[
        "verify",
        "partition-lemma",
        "--m",
        "2",
        "--a",
        "3,3",
        "--b",
        "1,1",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("suite partition-lemma: PASS"));

    let out = fmzv(&[
        "verify",
        "semi-reversal",
        "--max-depth",
        "4",
        "--max-letter",
        "3",
    ]);
    assert_eq!(code(&out), 0);

    let out = fmzv(&[
        "verify",
        "bowman-bradley",
        "--a",
        "3",
        "--b",
        "1",
        "--c",
        "2",
        "--m",
        "1",
        "--n",
        "1",
        "--range",
        "2:500",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn suite_list_is_stable() {
    let out = fmzv(&["suite-list"]);
    let text = stdout(&out);
    let names: Vec<&str> = text.lines().collect();
    assert_eq!(
        names,
        vec![
            "stuffle-hom",
            "starbar-hom",
            "d-duality",
            "reversal",
            "sha-vanish",
            "semi-reversal",
            "partition-lemma",
            "matching-identity",
            "stuffle-partition",
            "bowman-bradley",
            "main-theorem",
        ]
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("fmzv-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("expand.txt");
    let out = fmzv(&["expand", "z2 st z3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "z2 z3 + z3 z2 + z5\n"
    );
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn mixed_chain_warns_on_stderr_only() {
    let out = fmzv(&["expand", "z1 sh z2 st z3"]);
    assert_eq!(code(&out), 0);
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("mixed"));
    assert!(!stdout(&out).contains("mixed"));
}

#[test]
fn jobs_and_env_do_not_change_output() {
    let a = fmzv(&[
        "sweep", "z3 z1", "--range", "2:300", "--format", "json", "--jobs", "1",
    ]);
    let b = fmzv(&[
        "sweep", "z3 z1", "--range", "2:300", "--format", "json", "--jobs", "2",
    ]);
    assert_eq!(a.stdout, b.stdout);

    let c = Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args(["sweep", "z3 z1", "--range", "2:300", "--format", "json"])
        .env("FMZV_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn bracket_words_accepted() {
    assert_eq!(
        stdout(&fmzv(&["expand", "[3,1] st [2]"])),
        stdout(&fmzv(&["expand", "z3 z1 st z2"])),
    );
}

#[test]
fn binary_path_exists() {
    assert!(Path::new(env!("CARGO_BIN_EXE_fmzv")).exists());
}
