use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e8spin7"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn sample(name: &str) -> String {
    format!("{}/samples/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn instanton_samples() {
    assert_eq!(json(&["instanton-check", &sample("instanton.json")])["isInstanton"], true);
    assert_eq!(json(&["instanton-check", &sample("lie-instanton.json")])["isInstanton"], true);
    let v = json(&["instanton-check", &sample("eigen3.json")]);
    assert_eq!(v["isInstanton"], false);
    assert_eq!(v["residualNorm2"], "4");
}

#[test]
fn decompose_splits_dx12() {
    let v = json(&["decompose", &sample("dx12.json")]);
    assert_eq!(v["isInstanton"], false);
    assert_eq!(v["residualNorm2"], "1/4");
    assert!(v["pi7"].is_object() && v["pi21"].is_object());
}

#[test]
fn spin7_verify_passes() {
    let v = json(&["verify", "spin7", "--samples", "10", "--seed", "3"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 10);
    for r in reports {
        assert_eq!(r["violations"], 0);
        assert_eq!(r["seed"], 3);
        assert!(r.get("elapsedMs").is_none());
    }
    let t = json(&["verify", "spin7", "--samples", "2", "--timings"]);
    assert!(t[0]["elapsedMs"].is_u64());
}

#[test]
fn cohomology_reports() {
    assert_eq!(json(&["cohomology", "hp2", "--report", "orientability"])["criterionHolds"], true);
    let v = json(&["cohomology", "torsion-2", "--report", "orientability"]);
    assert_eq!(v["criterionHolds"], false);
    assert_eq!(v["reason"], "even-torsion");
    assert_eq!(json(&["cohomology", "free-h3", "--report", "orientability"])["reason"], "free-part");
    let pi1 = json(&["cohomology", "torsion-3", "--report", "pi1"]);
    assert_eq!(pi1["pi1"]["torsion"], serde_json::json!(["3"]));
    let g = json(&["cohomology", "gr2c4"]);
    assert_eq!(g["eulerCharacteristic"], 6);
    assert_eq!(g["groups"][4]["betti"], 2);
    assert_eq!(json(&["cohomology", "hp2", "--report", "mapping:3"])["q"], 3);
}

#[test]
fn complex_from_file() {
    let dir = std::env::temp_dir().join(format!("e8spin7-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3xs1.json");
    std::fs::write(&path, r#"{"ranks":[1,1,0,1,1],"deltas":[[],[],[],[]]}"#).unwrap();
    let v = json(&["cohomology", path.to_str().unwrap(), "--report", "pi1"]);
    assert!(v["warning"].is_string());
    assert_eq!(v["pi1"]["betti"], 1);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"ranks":[1,1,1],"deltas":[[["1"]],[["1"]]]}"#).unwrap();
    assert_eq!(run(&["cohomology", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn errors_exit_two() {
    assert_eq!(run(&["cohomology", "hp2", "--report", "mapping:4"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "no-such-fixture"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "spin7", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn fixtures_listed() {
    let v = json(&["fixtures", "list"]);
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|f| f["name"].as_str().unwrap()).collect();
    for n in ["hp2", "gr2c4", "free-h3", "torsion-2", "torsion-3"] {
        assert!(names.contains(&n));
    }
}
