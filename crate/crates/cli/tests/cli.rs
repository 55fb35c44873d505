use std::process::{Command, Output};

use alpha_cli::table::from_csv;

fn alpha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alpha"))
        .args(args)
        .env_remove("ALPHA_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value_line(text: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix("value: "))
        .expect("value line")
        .parse()
        .unwrap()
}

#[test]
fn eval_methods() {
    let o = alpha(&["eval", "--x", "0", "--s", "3", "--method", "series"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value_line(&stdout(&o)), 1.0);
    assert!(stdout(&o).contains("terms_used: 1"));

    let o = alpha(&["eval", "--x", "1", "--s", "2", "--method", "bessel"]);
    assert_eq!(o.status.code(), Some(0));
    assert!((value_line(&stdout(&o)) - 2.279585302336).abs() < 1e-11);

    let o = alpha(&["eval", "--x", "1", "--s", "3", "--method", "hadamard"]);
    assert_eq!(o.status.code(), Some(0));
    assert!((value_line(&stdout(&o)) - 2.129702549).abs() < 1e-9);
    assert!(stdout(&o).contains("nodes: "));

    let o = alpha(&["eval", "--x", "-1.5", "--s", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    let o = alpha(&["eval", "--x", "1", "--s", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");

    assert_eq!(
        alpha(&["eval", "--x", "1", "--s", "3", "--method", "bessel"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        alpha(&["eval", "--x", "1", "--s", "1", "--method", "hadamard"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        alpha(&["eval", "--x", "1e9", "--s", "1"]).status.code(),
        Some(3)
    );
    assert_eq!(
        alpha(&["eval", "--x", "1", "--s", "2", "--tol", "-1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        alpha(&["table", "--x-min", "1", "--x-max", "0", "--steps", "3", "--s", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        alpha(&["table", "--x-min", "0", "--x-max", "1", "--steps", "0", "--s", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(alpha(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn compare_reports() {
    let o = alpha(&[
        "compare", "--x", "1", "--s", "3", "--tol", "1e-8", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["query", "methods", "max_pairwise_delta", "passed", "notes"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["passed"], true);
    assert_eq!(v["methods"].as_array().unwrap().len(), 4);
    assert!(v["notes"][0].as_str().unwrap().contains("1.1297"));

    // A tolerance below the quadrature noise fails with exit code 1.
    let o = alpha(&["compare", "--x", "2", "--s", "3", "--tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("passed:             false"));
}

#[test]
fn env_tolerance_is_a_default_only() {
    let run = |env: &str, extra: &[&str]| {
        let mut args = vec!["compare", "--x", "2", "--s", "3"];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_alpha"))
            .args(&args)
            .env("ALPHA_TOL", env)
            .output()
            .unwrap()
    };
    assert_eq!(run("1e-300", &[]).status.code(), Some(1));
    assert_eq!(run("1e-300", &["--tol", "1e-8"]).status.code(), Some(0));
    assert_eq!(run("garbage", &[]).status.code(), Some(2));
}

#[test]
fn verify_all_is_green_and_deterministic() {
    let a = alpha(&["verify", "--suite", "all", "--seed", "0"]);
    assert_eq!(a.status.code(), Some(0));
    let b = alpha(&["verify", "--suite", "all", "--seed", "0"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("theorem1: 200/200 passed"));
    assert!(!text.contains("FAIL"));

    let t = alpha(&["verify", "--suite", "theorem1", "--seed", "42"]);
    assert_eq!(t.status.code(), Some(0));
    assert!(stdout(&t).contains("theorem1: 200/200 passed"));
    let ode = alpha(&["verify", "--suite", "ode"]);
    assert_eq!(ode.status.code(), Some(0));
    assert!(stdout(&ode).contains("ode: 24/24 passed"));
}

#[test]
fn table_formats() {
    let o = alpha(&[
        "table", "--x-min", "0", "--x-max", "2", "--steps", "9", "--s", "2", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("x,alpha_series,alpha_hadamard,abs_delta\n"));
    let rows = from_csv(&text).unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.abs_delta < 1e-9));

    let o = alpha(&[
        "table", "--x-min", "-1", "--x-max", "1", "--steps", "5", "--s", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);

    let o = alpha(&[
        "table", "--x-min", "0", "--x-max", "0", "--steps", "1", "--s", "3", "--format", "text",
    ]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let path_str = path.to_str().unwrap();
    let args = [
        "table", "--x-min", "-1", "--x-max", "1", "--steps", "4", "--s", "4", "--output", path_str,
    ];
    let o = alpha(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    alpha(&args);
    assert_eq!(std::fs::read(&path).unwrap(), first);
    assert_eq!(
        from_csv(std::str::from_utf8(&first).unwrap())
            .unwrap()
            .len(),
        4
    );
}
