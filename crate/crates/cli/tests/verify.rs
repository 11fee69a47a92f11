use std::process::Command;

use serde_json::Value;

fn sklyanin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sklyanin"))
}

fn reports(stdout: &[u8]) -> Vec<Value> {
    serde_json::from_slice::<Value>(stdout)
        .expect("stdout is JSON")
        .as_array()
        .expect("report is an array")
        .clone()
}

#[test]
fn relations_suite_passes_at_defaults() {
    let out = sklyanin()
        .args(["verify", "relations", "--beta", "2", "--gamma", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out.stdout);
    assert_eq!(r.len(), 2);
    assert!(r.iter().all(|c| c["status"] == "pass"));
    assert_eq!(r[0]["details"]["params"]["alpha"], "-5/7");
}

#[test]
fn hilbert_of_the_twist() {
    let out = sklyanin()
        .args(["verify", "hilbert", "--degree", "6", "--algebra", "twist"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out.stdout);
    let dims: Vec<u64> = r[0]["details"]["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(r[0]["name"], "hilbert/A^twist");
    assert_eq!(dims, [1, 4, 10, 20, 35, 56, 84]);
    assert!(r
        .iter()
        .all(|c| !c["name"].as_str().unwrap().starts_with("hilbert/A/")));
}

#[test]
fn all_writes_a_sorted_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = sklyanin()
        .args(["verify", "all", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = reports(&std::fs::read(&path).unwrap());
    let suites: Vec<&str> = r
        .iter()
        .map(|c| c["name"].as_str().unwrap().split('/').next().unwrap())
        .collect();
    let mut sorted = suites.clone();
    sorted.sort();
    assert_eq!(suites, sorted);
    for s in [
        "center",
        "hilbert",
        "isomorphisms",
        "modules",
        "nilpotent",
        "points",
        "relations",
    ] {
        assert!(suites.contains(&s), "{s}");
    }
    let assumptions: Vec<&str> = r
        .iter()
        .filter(|c| c["status"] == "assumption")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        assumptions,
        [
            "center/degree-4-dimension",
            "points/exclusion-to-classification"
        ]
    );
    assert!(r.iter().all(|c| c["status"] != "fail"));
    assert!(r
        .iter()
        .all(|c| c["details"]["field"].is_array() && c["ms"].is_u64()));
}

#[test]
fn explicit_alpha_must_satisfy_the_constraint() {
    let out = sklyanin()
        .args(["verify", "relations", "--alpha", "-1/2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid"));
}

#[test]
fn degenerate_parameters_are_rejected() {
    for args in [["--beta", "1"], ["--beta", "-1"], ["--gamma", "x"]] {
        let out = sklyanin()
            .args(["verify", "points"])
            .args(args)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn other_parameters_pass_the_point_suite() {
    let out = sklyanin()
        .args([
            "verify", "points", "modules", "--beta", "1/2", "--gamma", "5",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out.stdout);
    assert!(r.iter().all(|c| c["status"] != "fail"));
}
