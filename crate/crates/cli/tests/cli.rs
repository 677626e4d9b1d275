use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn zknot(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zknot"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = zknot(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> Value {
    serde_json::from_str(&ok(args, stdin)).unwrap()
}

fn write(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    std::fs::write(&path, ok(args, None)).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn info_on_generated_bipyramid() {
    let bp5 = ok(&["gen", "bipyramid", "5"], None);
    let v = json(&["info", "-", "--json"], Some(&bp5));
    assert_eq!(v["euler_characteristic"], 2);
    assert_eq!(v["zigzags"], 1);
    assert_eq!(v["homogeneous_orientations"].as_array().unwrap().len(), 1);
    assert_eq!(v["type_two_edges"], 5);
    let text = ok(&["info", "-"], Some(&bp5));
    assert!(text.contains("zigzags: 1\n"));
}

#[test]
fn info_on_gamma() {
    let g = ok(&["gen", "gamma", "2", "3", "4", "5"], None);
    let v = json(&["info", "-", "--json"], Some(&g));
    assert_eq!(v["zigzags"], 2);
    assert_eq!(
        (v["vertices"].clone(), v["edges"].clone()),
        (16.into(), 42.into())
    );
}

#[test]
fn json_keys_are_sorted() {
    let g = ok(&["gen", "bipyramid", "6"], None);
    let text = ok(&["info", "-", "--json"], Some(&g));
    let keys: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn input_errors_exit_2() {
    let out = zknot(&["info", "-"], Some("{\"faces\": [[\"a\""));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    let out = zknot(&["info", "-"], Some("{\"faces\": [[\"a\", \"b\"]]}"));
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        zknot(&["info", "/no/such/file"], None).status.code(),
        Some(2)
    );
    assert_eq!(zknot(&["frobnicate"], None).status.code(), Some(2));
    let bp5 = ok(&["gen", "bipyramid", "5"], None);
    assert_eq!(
        zknot(&["info", "-", "--tau", "01"], Some(&bp5))
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn star_violation_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let b3 = write(dir.path(), "b3.json", &["gen", "bipyramid", "3"]);
    let out = zknot(&["sum", &b3, "v1,v2,v3", &b3, "v1,v2,v3"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(*)"));
}

#[test]
fn domain_errors_exit_1() {
    assert_eq!(
        zknot(&["gen", "bipyramid", "2"], None).status.code(),
        Some(1)
    );
    let bp5 = ok(&["gen", "bipyramid", "5"], None);
    let out = zknot(&["sum", "-", "v1,v3,v2", "-", "v1,v2,v3"], Some(&bp5));
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn sum_reports_merge_count() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "bp6.json", &["gen", "bipyramid", "6"]);
    let b = write(dir.path(), "bp5.json", &["gen", "bipyramid", "5"]);
    let out = dir.path().join("sum.json");
    for swap in [false, true] {
        let mut args = vec!["sum", &a, "v1,v2,v3", &b, "v1,v2,v3", "--json", "-o"];
        args.push(out.to_str().unwrap());
        if swap {
            args.push("--swap");
        }
        let v = json(&args, None);
        assert_eq!(v["predicted"], v["through_glued"]);
        let info = json(&["info", out.to_str().unwrap(), "--json"], None);
        assert_eq!(info["euler_characteristic"], 2);
        assert_eq!(info["homogeneous"], true);
        assert_eq!(info["zigzags"], v["summary"]["zigzags"]);
    }
}

#[test]
fn knot_g2434() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "g2434.json",
        &["gen", "gamma", "2", "4", "3", "4"],
    );
    let out = dir.path().join("knotted.json");
    let trace = dir.path().join("trace.json");
    ok(
        &[
            "knot",
            &g,
            "-o",
            out.to_str().unwrap(),
            "--trace",
            trace.to_str().unwrap(),
        ],
        None,
    );
    let info = json(&["info", out.to_str().unwrap(), "--json"], None);
    assert_eq!(info["zigzags"], 1);
    assert_eq!(info["homogeneous"], true);
    let t: Value = serde_json::from_str(&std::fs::read_to_string(trace).unwrap()).unwrap();
    assert_eq!(t["initial"]["zigzags"], 3);
    assert_eq!(t["final"]["zigzags"], 1);
    assert_eq!(t["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn s4table_check() {
    let text = ok(&["s4table", "--check"], None);
    assert_eq!(text.lines().count(), 1 + 24 + 1);
    assert!(text.ends_with("check: ok\n"));
    let v = json(&["s4table", "--json"], None);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 24);
    assert_eq!(rows[9]["row"]["p"], "(1234)");
    assert_eq!(rows[9]["row"]["s_p"], "(1432)");
    assert_eq!(rows[9]["class"], "K1");
}

#[test]
fn catalog_lists_gadgets() {
    let v = json(&["catalog", "--json"], None);
    let classes: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["class"].as_str().unwrap())
        .collect();
    assert_eq!(
        classes,
        ["K0", "K1", "K2", "K3", "K4", "K5", "K6", "K9", "K10", "K11", "K12"]
    );
}

#[test]
fn emitted_files_round_trip() {
    let g = ok(&["gen", "gamma", "2", "3", "4", "5"], None);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(&path, &g).unwrap();
    let again = ok(&["gen", "gamma", "2", "3", "4", "5"], None);
    assert_eq!(g, again);
    let z = ok(&["zigzags", path.to_str().unwrap()], None);
    assert_eq!(z.lines().filter(|l| l.starts_with('z')).count(), 2);
}

#[test]
fn dot_output() {
    let bp5 = ok(&["gen", "bipyramid", "5"], None);
    let dot = ok(&["info", "-", "--dot"], Some(&bp5));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("style=bold").count(), 5);
    let dot = ok(&["gen", "bipyramid", "5", "--dot"], None);
    assert!(dot.starts_with("digraph"));
}

#[test]
fn pairs_table() {
    let g = ok(&["gen", "gamma", "2", "4", "3", "4"], None);
    let v = json(&["pairs", "-", "--json"], Some(&g));
    let find = |p: &str| {
        v["pairs"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["pair"] == p)
            .unwrap()
            .clone()
    };
    assert_eq!(find("v0,b,v1")["class"], "K6");
    assert_eq!(find("b,v1,v2")["class"], "K9");
    assert_eq!(find("v1,v2,v3")["monodromy"], "(1243)");
    assert_eq!(find("v1,v2,v3")["through"], 3);
}
