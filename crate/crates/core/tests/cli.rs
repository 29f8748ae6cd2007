use std::path::PathBuf;
use std::process::Command;

use schur9::cli::{run_with, EXIT_DIFFERENT, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(
        std::iter::once("schur9").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn corpus() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/acceptance.jsonl")
        .display()
        .to_string()
}

fn temp_file(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("schur9-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn running_example_verifies() {
    let (code, out, _) = call(&[
        "--format",
        "json",
        "verify",
        "--lambda",
        "5,4,4,2",
        "--mu",
        "3,2",
        "--strip",
        "profile:-3:ENEEENE",
        "--n",
        "3",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "schur9/1");
    assert_eq!(v["equal"], true);
}

#[test]
fn shifted_example_verifies() {
    let (code, _, _) = call(&[
        "verify",
        "--qfun",
        "--lambda",
        "9,6,4,2",
        "--mu",
        "4,3",
        "--strip",
        "profile:0:EENNEEEE",
        "--n",
        "2",
    ]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn containment_failure_is_a_usage_error() {
    let (code, out, err) = call(&["verify", "--lambda", "1", "--mu", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.starts_with("ContainmentError:"), "{err}");
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(call(&["verify", "--lambda", "2,3"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["verify", "--lambda", "3", "--strip", "diagonal"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["verify", "--lambda", "3,3", "--qfun"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["corollary", "nonsense", "--lambda", "3"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn perturbation_flips_the_exit_code() {
    let (code, out, _) = call(&[
        "--perturb",
        "verify",
        "--lambda",
        "5,4,4,2",
        "--mu",
        "3,2",
        "--strip",
        "hook",
    ]);
    assert_eq!(code, EXIT_DIFFERENT);
    assert!(out.starts_with("DIFFERENT"), "{out}");
}

#[test]
fn corpus_file_passes_in_order() {
    let (code, out, err) = call(&["--format", "json", "verify", "--case-file", &corpus()]);
    assert_eq!(code, EXIT_OK, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 12);
    assert_eq!(v["equal"], 12);
    let strips: Vec<&str> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["strip"].as_str().unwrap())
        .collect();
    assert_eq!(strips[0], "profile:-3:ENEEENE");
    assert!(
        strips[1].starts_with("row =") && strips[2].starts_with("col ="),
        "{strips:?}"
    );
}

#[test]
fn perturbed_corpus_fails() {
    assert_eq!(
        call(&["--perturb", "verify", "--case-file", &corpus()]).0,
        EXIT_DIFFERENT
    );
}

#[test]
fn empty_case_file_is_fine() {
    let path = temp_file("empty.jsonl", "");
    let (code, out, _) = call(&["verify", "--case-file", &path]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("total=0"), "{out}");
}

#[test]
fn malformed_lines_are_reported() {
    let path = temp_file("bad.jsonl", "{\"lambda\": \"2\", \"n\": 1}\n\n{oops}\n");
    let (code, _, err) = call(&["verify", "--case-file", &path]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn output_is_reproducible() {
    let args = [
        "--format",
        "json",
        "corollary",
        "all",
        "--lambda",
        "5,4,4,2",
        "--mu",
        "3,2",
    ];
    assert_eq!(call(&args), call(&args));
    let text = call(&["verify", "--case-file", &corpus()]);
    assert_eq!(text, call(&["verify", "--case-file", &corpus()]));
}

#[test]
fn render_examples() {
    let (code, out, _) = call(&["render", "--lambda", "5,4,4,2", "--mu", "3,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.trim_end(),
        " *  *  *  3  4\n *  *  1  2\n-2 -1  0  1\n-3 -2"
    );
    assert_eq!(call(&["render", "--lambda", ""]).1.trim_end(), "(empty)");
    assert_eq!(
        call(&["render", "--lambda", "2", "--mu", "2"]).1.trim(),
        "* *"
    );
    let (_, decomposition, _) = call(&[
        "render", "--lambda", "5,4,4,2", "--mu", "3,2", "--strip", "row",
    ]);
    assert!(
        decomposition
            .trim_end()
            .ends_with("* * * 4 4\n* * 3 3\n2 2 2 2\n1 1"),
        "{decomposition}"
    );
}

#[test]
fn enumerate_counts() {
    let (code, out, _) = call(&["enumerate", "--lambda", "2,1", "--n", "3", "--count"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "count=8");
}

#[test]
fn lgv_check_reports_ok() {
    let (code, out, _) = call(&[
        "lgv-check",
        "--lambda",
        "3,2",
        "--mu",
        "1",
        "--strip",
        "hook",
        "--n",
        "2",
        "--all-fillings",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("OK lgv"), "{out}");
    let (_, dot, _) = call(&["lgv-check", "--lambda", "2,1", "--dot"]);
    assert!(dot.starts_with("digraph"), "{dot}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_schur9");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(
        status(&["verify", "--lambda", "3,1", "--mu", "1", "--n", "2"]),
        Some(EXIT_OK)
    );
    assert_eq!(
        status(&[
            "--perturb",
            "verify",
            "--lambda",
            "3,1",
            "--mu",
            "1",
            "--n",
            "2"
        ]),
        Some(EXIT_DIFFERENT)
    );
    assert_eq!(
        status(&["verify", "--lambda", "1", "--mu", "2"]),
        Some(EXIT_USAGE)
    );
    let threaded = Command::new(bin)
        .args(["verify", "--case-file", &corpus()])
        .env("SCHUR9_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(threaded.status.code(), Some(EXIT_OK));
    assert_eq!(
        String::from_utf8(threaded.stdout).unwrap(),
        call(&["verify", "--case-file", &corpus()]).1
    );
}
