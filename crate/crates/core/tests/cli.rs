use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn lesgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lesgp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fixtures_validate() {
    for f in [
        "s1.lesgp",
        "c2meet.lesgp",
        "c2const.lesgp",
        "c2rz.lesgp",
        "c3null.lesgp",
    ] {
        let o = lesgp(&["validate", &fixture(f)]);
        assert_eq!(o.status.code(), Some(0), "{f}");
    }
}

#[test]
fn invalid_input_exits_two() {
    let o = lesgp(&["validate", &fixture("invalid-xor.lesgp")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("compatible"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.lesgp");
    fs::write(&bad, "lesgp 1\nn 2\nleq\n1 1 0\n0 1\nmul\n0 0\n0 1\n").unwrap();
    assert_eq!(
        lesgp(&["analyze", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        lesgp(&["check", &fixture("s1.lesgp"), "--theorem", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lesgp(&["hunt", "-n", "2", "--require", "nope"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn analyze_machine_is_json_with_frozen_fields() {
    let o = lesgp(&["analyze", &fixture("c2rz.lesgp"), "--machine"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for field in ["properties", "ideal_elements", "classes", "theorems"] {
        assert!(v.get(field).is_some(), "{field}");
    }
    assert_eq!(v["properties"]["lambda"], false);
    assert_eq!(v["properties"]["lambda_witness"], serde_json::json!([0, 1]));
    assert_eq!(v["theorems"].as_array().unwrap().len(), 13);
}

#[test]
fn check_single_theorem() {
    let o = lesgp(&[
        "check",
        &fixture("c2meet.lesgp"),
        "--theorem",
        "main",
        "--machine",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["id"], "main");
    assert_eq!(v[0]["status"], "verified");
}

#[test]
fn jclasses_and_decompose_run() {
    let o = lesgp(&["jclasses", &fixture("c2const.lesgp")]);
    assert!(stdout(&o).contains("J_1: {0, 1}  green=true subsemigroup=true subgroup=false"));
    let o = lesgp(&["decompose", &fixture("c3null.lesgp"), "--machine"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class_product_containment"], true);
}

#[test]
fn downset_prints_a_valid_structure() {
    let dir = tempfile::tempdir().unwrap();
    let o = lesgp(&["downset", &fixture("c3null.lesgp"), "--element", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = dir.path().join("down.lesgp");
    fs::write(&out, stdout(&o)).unwrap();
    let v = lesgp(&["validate", out.to_str().unwrap()]);
    assert_eq!(stdout(&v), "ok: n=2 top=1 bottom=0\n");

    let o = lesgp(&["downset", &fixture("c2const.lesgp"), "--element", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

fn read_dir_sorted(dir: &Path) -> Vec<(PathBuf, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            let bytes = fs::read(&p).unwrap();
            (PathBuf::from(p.file_name().unwrap()), bytes)
        })
        .collect();
    files.sort();
    files
}

#[test]
fn enumerate_writes_index_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c");
    let o = lesgp(&[
        "enumerate",
        "-n",
        "3",
        "--canonical",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let index = fs::read_to_string(out.join("index.txt")).unwrap();
    assert!(index.contains("order 2 count 6\n"));
    assert!(index.contains("order 3 count 44\n"));
    assert_eq!(read_dir_sorted(&out).len(), 1 + 6 + 44 + 1);
}

#[test]
fn hunt_expect_none_exit_codes() {
    let o = lesgp(&["hunt", "-n", "2", "--forbid", "lambda", "--expect-none"]);
    assert_eq!(o.status.code(), Some(1));
    let o = lesgp(&[
        "hunt",
        "-n",
        "3",
        "--require",
        "semisimple",
        "lambda",
        "--forbid",
        "intra-regular",
        "--expect-none",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = lesgp(&["hunt", "-n", "3", "--require", "!lambda", "--limit", "1"]);
    assert_eq!(stdout(&o).matches("lesgp 1").count(), 1);
}
