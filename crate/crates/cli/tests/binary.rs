use std::process::{Command, Output};

fn albert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_albert")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_reports_are_reproducible() {
    let args = ["verify", "lemma1"];
    let (a, b) = (albert(&args), albert(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.lines().all(|l| l.starts_with("CHECK ") || l.starts_with("RESULT ")));
    assert!(text.contains("CHECK lemma1.product-formula-discrepancy INFO b23"));
}

#[test]
fn verify_example1_prints_sum() {
    let o = albert(&["verify", "example1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("CHECK example1.sum PASS dim(A + B) = 27"));
}

#[test]
fn json_report() {
    let o = albert(&["verify", "theorem2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["target"], "theorem2");
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "FAIL"));
}

#[test]
fn seed_and_samples_flags() {
    let o = albert(&["verify", "identities", "--seed", "7", "--samples", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("30/30 exact"));
}

#[test]
fn corrupted_kernel_fails() {
    let o = albert(&["--corrupt-kernel", "verify", "identities", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(" FAIL "));
}

#[test]
fn eval_outputs_and_errors() {
    let o = albert(&["eval", "n(x0 + y0)"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "1"));
    let o = albert(&["eval", "Q(a)"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = albert(&["eval", "1 +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 3"));
    assert_eq!(albert(&["eval", "E11 * E22"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(albert(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(albert(&["dump-sc", "--algebra", "albert", "--basis", "vdbs"]).status.code(), Some(2));
}

#[test]
fn dump_sc_to_file() {
    let dir = std::env::temp_dir().join(format!("albert-sc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("oct.csv");
    let o = albert(&[
        "dump-sc",
        "--algebra",
        "oct",
        "--basis",
        "vdbs",
        "--sc-format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let table = albert_cli::sc::ScTable::import(&text).unwrap();
    assert_eq!((table.algebra.as_str(), table.dim()), ("oct/vdbs", 8));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn dims_lists_named_subalgebras() {
    let o = albert(&["dims"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "H_S3 21"));
}
