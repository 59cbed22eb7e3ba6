use std::path::PathBuf;
use std::process::{Command, Output};

fn prolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prolab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("prolab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn prolongation_of_co3() {
    let o = prolab(&["prolong", "--algebra", "co(3)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("dim g^(1): 3"), "{}", stdout(&o));
    let o = prolab(&["prolong", "--algebra", "co(3)", "--field", "modp", "--prime", "101"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("dim g^(1): 3"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(prolab(&["prolong", "--variety", "nope"]).status.code(), Some(2));
    assert_eq!(prolab(&["battery", "--select", "nope"]).status.code(), Some(2));
    assert_eq!(prolab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(prolab(&["prolong"]).status.code(), Some(2));
}

#[test]
fn custom_variety_from_json() {
    let path = scratch("conic.json");
    std::fs::write(
        &path,
        r#"{"name": "conic", "ambient_dim": 3, "quadrics": [[[0, 2, 1, 1], [1, 1, -1, 1]]], "base_point": ["1", "0", "0"]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = prolab(&["prolong", "--variety", p]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("dim g^(1): 3"));
    assert!(prolab(&["variety", "check", p]).status.success());
    std::fs::write(&path, r#"{"ambient_dim": 3, "quadrics": [[[0, 2, 1, 0]]], "base_point": ["1", "0", "0"]}"#).unwrap();
    let o = prolab(&["prolong", "--variety", p]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("quadrics"));
}

#[test]
fn projection_from_a_file() {
    let path = scratch("centre.json");
    std::fs::write(&path, r#"{"vectors": [[1, 0, 0, 0, 0, 0, 0, 0, 0]]}"#).unwrap();
    let o = prolab(&["project", "--variety", "segre(3,3)", "--l-file", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["engine"], 4);
    assert_eq!(v["formula"], 4);
    assert_eq!(v["pass"], true);
    let o = prolab(&["project", "--variety", "plucker_gr2(5)", "--l-random", "2", "--seed", "3"]);
    assert!(o.status.success());
}

#[test]
fn probes_print_dimensions() {
    let o = prolab(&["secant", "--variety", "segre(2,2)", "--trials", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains('3'));
    let o = prolab(&["vmrt", "--variety", "veronese(2)"]);
    assert!(o.status.success());
    assert!(prolab(&["variety", "list"]).status.success());
}

#[test]
fn battery_writes_csv() {
    let path = scratch("report.csv");
    let o = prolab(&["battery", "--select", "ihss-prolong,vmrt", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("case,instance,quantity"));
    assert!(csv.lines().skip(1).all(|l| l.starts_with("ihss-prolong,") || l.starts_with("vmrt,")));
    let o = prolab(&["battery", "--select", "empty"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["total"], 0);
}
