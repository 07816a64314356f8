use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use turan3::report::validate_report_json;

fn turan3(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan3"))
        .current_dir(dir)
        .env_remove("TURAN3_BUDGET")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is json")
}

#[test]
fn construct_pg_writes_graph_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = turan3(dir.path(), &["construct", "pg", "--q", "3", "--s", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["n"], 18);
    validate_report_json(&report).unwrap();
    let g = std::fs::read_to_string(dir.path().join("pg_3_3.g")).unwrap();
    assert!(g.starts_with("g 18 "));
    let on_disk: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("pg_3_3.json")).unwrap()).unwrap();
    assert_eq!(on_disk, report);
}

#[test]
fn verify_k33_in_pg_5_3_is_none() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        turan3(dir.path(), &["construct", "pg", "--q", "5", "--s", "3"])
            .status
            .code(),
        Some(0)
    );
    let out = turan3(
        dir.path(),
        &["verify", "--pattern", "K33", "--host", "pg_5_3.g", "--mode", "graph"],
    );
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "none");
    assert!(v["embedding"].is_null());
}

#[test]
fn verify_found_and_budget_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let found = turan3(
        dir.path(),
        &["verify", "--pattern", "C4", "--host", "octahedron", "--mode", "graph"],
    );
    assert_eq!(found.status.code(), Some(0));
    assert_eq!(stdout_json(&found)["embedding"].as_array().unwrap().len(), 4);

    let args = [
        "verify",
        "--pattern",
        "K4",
        "--host",
        "K6,6",
        "--mode",
        "graph",
        "--budget",
        "3",
    ];
    let out = turan3(dir.path(), &args);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["verdict"], "budget");

    // The same budget through the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_turan3"))
        .current_dir(dir.path())
        .env("TURAN3_BUDGET", "3")
        .args(["verify", "--pattern", "K4", "--host", "K6,6", "--mode", "graph"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_triple_and_expansion_modes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        turan3(dir.path(), &["construct", "sigma", "--n", "12", "--sigma", "2"])
            .status
            .code(),
        Some(0)
    );
    let out = turan3(
        dir.path(),
        &[
            "verify",
            "--pattern",
            "K3plus",
            "--host",
            "sigma_12_2.h3",
            "--mode",
            "triple",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    let out = turan3(
        dir.path(),
        &[
            "verify",
            "--pattern",
            "K3",
            "--host",
            "sigma_12_2.h3",
            "--mode",
            "expansion",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    // Every triple contains vertex 0, so one triple fits and two disjoint ones do not.
    let out = turan3(
        dir.path(),
        &[
            "verify",
            "--pattern",
            "M1",
            "--host",
            "sigma_12_2.h3",
            "--mode",
            "triple",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let out = turan3(
        dir.path(),
        &[
            "verify",
            "--pattern",
            "M2",
            "--host",
            "sigma_12_2.h3",
            "--mode",
            "triple",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    // Triple pattern in expansion mode is a usage error.
    let out = turan3(
        dir.path(),
        &[
            "verify",
            "--pattern",
            "M2",
            "--host",
            "sigma_12_2.h3",
            "--mode",
            "expansion",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "bad_parameter");
}

#[test]
fn oracle_k3plus_on_five_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("golden.json");
    let args = [
        "oracle",
        "--r",
        "3",
        "--n",
        "5",
        "--pattern",
        "K3plus",
        "--golden",
        golden.to_str().unwrap(),
    ];
    let first = turan3(dir.path(), &args);
    assert_eq!(first.status.code(), Some(0));
    let v = stdout_json(&first);
    assert_eq!(v["value"], 10);
    assert_eq!(v["golden"], "populated");
    let second = turan3(dir.path(), &args);
    assert_eq!(stdout_json(&second)["golden"], "matched");
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&golden).unwrap()).unwrap();
    assert_eq!(stored["entries"]["ex3/n5/K3plus"]["value"], 10);
}

#[test]
fn oracle_golden_mismatch_is_negative() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("golden.json");
    std::fs::write(&golden, r#"{"version":1,"entries":{"ex2/n5/K3":{"value":7}}}"#).unwrap();
    let out = turan3(
        dir.path(),
        &[
            "oracle",
            "--r",
            "2",
            "--n",
            "5",
            "--pattern",
            "K3",
            "--golden",
            golden.to_str().unwrap(),
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "golden_mismatch");
}

#[test]
fn usage_and_parse_errors_exit_2_with_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = turan3(dir.path(), &["construct", "pg", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "usage");

    let out = turan3(
        dir.path(),
        &["construct", "pg", "--q", "3", "--s", "3", "--colour", "red"],
    );
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(dir.path().join("bad.g"), "g 3 1\n0 7\n").unwrap();
    let out = turan3(
        dir.path(),
        &["verify", "--pattern", "K3", "--host", "bad.g", "--mode", "graph"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "parse");

    let out = turan3(dir.path(), &["construct", "hrq", "--q", "5", "--r", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = turan3(dir.path(), &["report", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "unknown_name");
}

#[test]
fn field_tower_fibers() {
    let dir = tempfile::tempdir().unwrap();
    let out = turan3(dir.path(), &["field", "--p", "3", "--m", "1", "--tower-s", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["order"], 3);
    let fibers = v["tower"]["fibers"].as_array().unwrap();
    assert_eq!(fibers.len(), 2);
    assert!(fibers.iter().all(|f| f["preimages"] == 4));
    let out = turan3(dir.path(), &["field", "--p", "4", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

fn dir_bytes(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                std::fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

#[test]
fn artifacts_are_byte_identical_across_runs() {
    let jobs: [&[&str]; 6] = [
        &["construct", "pg", "--q", "4", "--s", "3", "--triangles"],
        &["construct", "hrq", "--q", "5", "--r", "2"],
        &["construct", "sigma", "--n", "10", "--sigma", "3"],
        &["construct", "girth-layers", "--n", "20", "--k", "4", "--seed", "1"],
        &["construct", "random-del", "--n", "40", "--pattern", "C5", "--seed", "3"],
        &["oracle", "--r", "2", "--n", "6", "--pattern", "C4"],
    ];
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for job in jobs {
        let x = turan3(a.path(), job);
        let y = turan3(b.path(), job);
        assert_eq!(
            x.status.code(),
            Some(0),
            "{job:?}: {}",
            String::from_utf8_lossy(&x.stderr)
        );
        assert_eq!(x.stdout, y.stdout, "{job:?}");
    }
    let (fa, fb) = (dir_bytes(a.path()), dir_bytes(b.path()));
    assert_eq!(fa.len(), 11);
    assert_eq!(fa, fb);
    for (name, bytes) in &fa {
        if name.ends_with(".json") {
            validate_report_json(&serde_json::from_slice(bytes).unwrap()).unwrap();
        }
    }
}

#[test]
fn seed_defaults_to_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = turan3(dir.path(), &["construct", "girth-layers", "--n", "12", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["params"]["seed"], 0);
    assert!(dir.path().join("girth_layers_12_4_0.h3").exists());
}

#[test]
fn report_suite_writes_consolidated_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("crosscut.json");
    let out = turan3(
        dir.path(),
        &["report", "--suite", "crosscut", "--out", path.to_str().unwrap()],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
    for r in v["reports"].as_array().unwrap() {
        validate_report_json(r).unwrap();
    }
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
}

#[test]
fn text_format() {
    let dir = tempfile::tempdir().unwrap();
    let out = turan3(
        dir.path(),
        &["--format", "text", "oracle", "--r", "2", "--n", "5", "--pattern", "K3"],
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "ex2(5, K3) = 6");
    let out = turan3(
        dir.path(),
        &["construct", "hrq", "--q", "5", "--r", "2", "--format", "text"],
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("hrq_5_2: n=50 m=588"));
    assert!(text.contains("[DEVIATES] every vertex has degree exactly q^2-1"));
}
