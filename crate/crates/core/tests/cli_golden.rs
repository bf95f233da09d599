use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

const CLI_EXE: &str = env!("CARGO_BIN_EXE_liplab");

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(CLI_EXE).args(args).env_remove("LIPLAB_JOBS").output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn golden(name: &str, args: &[&str]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?}");
    if std::env::var_os("LIPLAB_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(out, expected, "{name}");
}

#[test]
fn golden_outputs() {
    golden("wedge3_vertices.json", &["vertices", "--gen", "wedge3"]);
    golden("wedge3_vertices.txt", &["--format", "text", "vertices", "--inline", "3;1 3;2 3"]);
    golden("wedge3_hstar.json", &["hstar", "--gen", "wedge3"]);
    golden("wedge3_hrep.txt", &["--format", "text", "hrep", "--gen", "wedge3"]);
    golden("wedge3_ehrhart.json", &["ehrhart", "--gen", "wedge3"]);
    golden("wedge3_dc.json", &["dc", "--stats", "--gen", "wedge3"]);
    golden("wedge3_slab2.json", &["hypersimplex", "--gen", "wedge3", "--k", "2", "--half-open"]);
    golden("ranked9_example.txt", &["--format", "text", "example", "--name", "ranked9"]);
    golden("ranked9_count.json", &["dc", "--count", "--gen", "ranked9"]);
    golden("short_hanging_vertices.txt", &["--format", "text", "vertices", "--gen", "short-hanging:4"]);
}

#[test]
fn every_json_output_is_versioned() {
    for args in [
        &["vertices", "--gen", "wedge3"][..],
        &["hrep", "--gen", "chain:3"],
        &["hstar", "--gen", "wedge3", "--method", "stat"],
        &["ehrhart", "--gen", "antichain:2"],
        &["volume", "--gen", "wedge3"],
        &["dc", "--count", "--gen", "wedge3"],
        &["hypersimplex", "--gen", "wedge3", "--k", "1"],
        &["example", "--name", "wedge3"],
        &["check", "--gen", "wedge3"],
        &["conjecture", "--gen", "wedge3"],
    ] {
        let (code, out) = run(args);
        assert_eq!(code, 0, "{args:?}");
        for line in out.lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["schema"], "liplab/1", "{args:?}");
        }
    }
}

#[test]
fn ranked9_dc_stats_contains_worked_permutation() {
    let (code, out) = run(&["dc", "--stats", "--gen", "ranked9"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let perms = v["permutations"].as_array().unwrap();
    assert_eq!(perms.len(), 93024);
    let entry = perms.iter().find(|e| e["tau"] == "423716598").unwrap();
    assert_eq!(entry["q"], serde_json::json!([0, 1, 1, 1, 2, 1, 2, 1, 2]));
    assert_eq!(entry["stat"], 4);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["vertices", "--inline", "2;1 1"]).0, 2);
    assert_eq!(run(&["vertices", "/nonexistent/poset.txt"]).0, 2);
    assert_eq!(run(&["dc", "--count", "--stats", "--gen", "wedge3"]).0, 2);
    assert_eq!(run(&["hypersimplex", "--gen", "antichain:3", "--k", "1"]).0, 2);
    assert_eq!(run(&["check", "--exhaustive", "9"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn jobs_env_var_is_a_default() {
    let with_env = Command::new(CLI_EXE)
        .args(["hstar", "--gen", "short-hanging:5"])
        .env("LIPLAB_JOBS", "4")
        .output()
        .unwrap();
    assert!(with_env.status.success());
    assert_eq!(String::from_utf8(with_env.stdout).unwrap(), run(&["hstar", "--gen", "short-hanging:5"]).1);
}
