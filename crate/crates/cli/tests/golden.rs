use std::path::PathBuf;
use std::process::Command as Process;

use coxdescent_cli::problem::ProblemFile;
use coxdescent_cli::{run_text, Command, Options};

fn problem_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems").join(name)
}

fn problem(name: &str) -> String {
    std::fs::read_to_string(problem_path(name)).unwrap()
}

fn run(command: Command, file: &str, ideal: Option<&str>) -> (String, i32) {
    let opts = Options { ideal: ideal.map(String::from), ..Options::default() };
    let out = run_text(command, &problem(file), &opts);
    (out.stdout, out.code)
}

#[test]
fn gb_outputs() {
    assert_eq!(run(Command::Gb, "p1p1.cox", Some("diagonal_pair")), ("x0*y0\nx1*y1\n".into(), 0));
    assert_eq!(run(Command::Gb, "standard.cox", Some("linear")), ("x0\ny0\n".into(), 0));
    assert_eq!(run(Command::Gb, "standard.cox", Some("unit")), ("1\n".into(), 0));
    assert_eq!(run(Command::Gb, "segre.cox", None), ("z00\nz11\n".into(), 0));
}

#[test]
fn strict_ci_verdicts() {
    assert_eq!(run(Command::StrictCi, "p1p1.cox", Some("diagonal_pair")), ("NOT_STRICT witness=x0*x1\n".into(), 1));
    assert_eq!(run(Command::StrictCi, "p1p1.cox", Some("point")), ("STRICT\n".into(), 0));
    assert_eq!(run(Command::StrictCi, "p1p1.cox", Some("point_bad")).1, 1);
    assert_eq!(run(Command::StrictCi, "p1p1.cox", Some("nonreduced")).1, 1);
    assert_eq!(run(Command::StrictCi, "p1p1.cox", Some("common_factor")), ("NOT_CI height=1 expected=2\n".into(), 4));
    assert_eq!(run(Command::StrictCi, "segre.cox", None), ("STRICT\n".into(), 0));
    assert_eq!(run(Command::StrictCi, "quadric.cox", Some("conic")), ("STRICT\n".into(), 0));
    assert_eq!(run(Command::Ci, "p1p1.cox", Some("diagonal_pair")), ("CI height=2 expected=2\n".into(), 0));
}

#[test]
fn saturation_outputs() {
    assert_eq!(run(Command::Saturate, "p1p1.cox", Some("point_bad")), ("x0\ny0\n".into(), 0));
    assert_eq!(run(Command::Saturate, "p1p1.cox", Some("diagonal_pair")), ("x0*x1\nx0*y0\nx1*y1\ny0*y1\n".into(), 0));
    let opts = Options { ideal: Some("point".into()), against: Some("point".into()), seed: None };
    assert_eq!(run_text(Command::Saturate, &problem("p1p1.cox"), &opts).stdout, "1\n");
}

#[test]
fn descend_outputs() {
    let expected = "ORBIT { x1 ; x2 }\nH1 (1,0) -> (1,0)\nH2 (0,1) -> (0,1)\nIDEAL_EQUAL=true\n";
    assert_eq!(run(Command::Descend, "swap.cox", Some("twisted")), (expected.into(), 0));
    assert_eq!(run(Command::Descend, "swap.cox", Some("orbit")), (expected.into(), 0));
    assert_eq!(run(Command::Descend, "swap.cox", Some("half")), ("NOT_INVARIANT\n".into(), 5));
    let (out, code) = run(Command::Descend, "swap.cox", Some("fixed_class"));
    assert_eq!(code, 0);
    assert!(out.starts_with("ORBIT { x1*x2+y1*y2 }\n"));
    let no_action = run_text(Command::Descend, &problem("p1p1.cox"), &Options::default());
    assert_eq!(no_action.code, 3);
}

#[test]
fn dimension_output() {
    assert_eq!(run(Command::Dim, "quadric.cox", Some("line")), ("dim=2 height=1\n".into(), 0));
    assert_eq!(run(Command::Dim, "p1p1.cox", Some("point")), ("dim=2 height=2\n".into(), 0));
}

#[test]
fn error_codes() {
    let opts = Options::default();
    let parse = run_text(Command::Gb, "field 101\nambient product 1 1\nideal I = x0*+\n", &opts);
    assert_eq!(parse.code, 2);
    assert!(parse.stderr.contains("line 3"), "{}", parse.stderr);
    assert_eq!(run_text(Command::Gb, "field 101\nambient sphere\n", &opts).code, 2);
    assert_eq!(run_text(Command::Gb, "field 101\n", &opts).code, 2);
    let semantic = run_text(Command::Gb, "field 101\nambient product 1 1\nideal I = x0+y0\n", &opts);
    assert_eq!(semantic.code, 3);
    assert_eq!(run_text(Command::Gb, "field 8\nambient product 1\nideal I = x0\n", &opts).code, 3);
    let missing = Options { ideal: Some("nope".into()), ..Options::default() };
    assert_eq!(run_text(Command::Gb, &problem("p1p1.cox"), &missing).code, 3);
}

#[test]
fn problem_files_round_trip() {
    for entry in std::fs::read_dir(problem_path("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let file = ProblemFile::parse(&text).unwrap();
        assert_eq!(file.to_string(), text, "{}", path.display());
        assert_eq!(ProblemFile::parse(&file.to_string()).unwrap(), file);
        file.build().unwrap();
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_coxdescent");
    let go = |args: &[&str]| {
        let out = Process::new(bin).args(args).output().unwrap();
        (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
    };
    let p1p1 = problem_path("p1p1.cox");
    let p1p1 = p1p1.to_str().unwrap();
    assert_eq!(go(&["strict-ci", p1p1]), ("NOT_STRICT witness=x0*x1\n".into(), 1));
    assert_eq!(go(&["strict-ci", p1p1, "--ideal", "point"]), ("STRICT\n".into(), 0));
    assert_eq!(go(&["ci", p1p1, "--ideal", "common_factor"]).1, 4);
    let swap = problem_path("swap.cox");
    assert_eq!(go(&["descend", swap.to_str().unwrap(), "--ideal", "half"]).1, 5);
    assert_eq!(go(&["bogus", p1p1]).1, 2);
    assert_eq!(go(&["gb", "/nonexistent/file.cox"]).1, 3);
}
