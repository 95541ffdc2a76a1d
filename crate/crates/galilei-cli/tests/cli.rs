//! End-to-end tests of the scenario runner binary: exit codes, validation
//! messages, artifact layout, and bit-identical reruns.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_galilei-cli"))
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

fn run_args(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn list_names_all_scenarios() {
    let out = run_args(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    for name in [
        "group-axioms",
        "bargmann-loop",
        "boost-covariance",
        "mass-interference",
        "unstable-boost",
        "accelerated-frame",
        "kg-vs-schrodinger",
        "remnant-phase",
        "lorentz-loop",
        "canonical-maps",
        "sch5-residual",
    ] {
        assert!(text.contains(name), "missing {name} in list output");
    }
}

#[test]
fn validate_accepts_good_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "ok.json", r#"{"scenario": "lorentz-loop"}"#);
    let out = run_args(&["validate", "--config", &cfg]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn validate_rejects_unknown_key_naming_it() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "bad.json",
        r#"{"scenario": "group-axioms", "rnu": {"seed": 1}}"#,
    );
    let out = run_args(&["validate", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rnu"));
}

#[test]
fn validate_rejects_superluminal_remnant_naming_constraint() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "fast.json",
        r#"{"scenario": "remnant-phase", "physics": {"v": 2.0, "c": 1.0}}"#,
    );
    let out = run_args(&["validate", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("|v| < c"), "stderr: {err}");
}

#[test]
fn run_rejects_invalid_override_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "ok.json", r#"{"scenario": "remnant-phase"}"#);
    let out = run_args(&["run", "--config", &cfg, "--set", "physics.v=3.0"]);
    assert_eq!(out.status.code(), Some(2));
}

fn loop_config(dir: &Path, out_dir: &str) -> String {
    write_config(
        dir,
        "loop.json",
        &format!(
            r#"{{
  "scenario": "bargmann-loop",
  "grid": {{ "n": 256, "x_min": -20.0, "x_max": 20.0 }},
  "physics": {{ "masses": [{{ "re": 1.0 }}, {{ "re": 2.0 }}], "a": 5.0, "v": 0.6283185307179586 }},
  "run": {{ "seed": 42 }},
  "output": {{ "dir": "{out_dir}", "emit_svg": true }}
}}"#
        ),
    )
}

#[test]
fn run_emits_metrics_manifest_and_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("run1");
    let cfg = loop_config(dir.path(), out_dir.to_str().unwrap());
    let out = run_args(&["run", "--config", &cfg]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let metrics: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("metrics.json")).unwrap())
            .unwrap();
    assert_eq!(metrics["scenario"], "bargmann-loop");
    assert_eq!(metrics["pass"], true);
    assert!(metrics["anchor"].as_str().unwrap().contains("loop"));
    assert!(
        metrics["metrics"]["channel_phase_max_error"]
            .as_f64()
            .unwrap()
            <= 1e-10
    );
    assert!(metrics["tolerances"]["channel_phase_max_error"]
        .as_str()
        .is_some());

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["pass"], true);
    for file in manifest["outputs"].as_array().unwrap() {
        let name = file.as_str().unwrap();
        assert!(out_dir.join(name).exists(), "listed output {name} missing");
    }

    // CSV names channels by mass
    let csv = std::fs::read_to_string(out_dir.join("state_before.csv")).unwrap();
    let header = csv.lines().next().unwrap();
    assert_eq!(header, "x,re_psi[m=1],im_psi[m=1],re_psi[m=2],im_psi[m=2]");
    assert_eq!(csv.lines().count(), 257);

    // SVG present when enabled
    assert!(out_dir.join("coherent_density.svg").exists());
}

#[test]
fn reruns_are_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a");
    let out2 = dir.path().join("b");
    let cfg = loop_config(dir.path(), "unused");
    for out_dir in [&out1, &out2] {
        let out = run_args(&[
            "run",
            "--config",
            &cfg,
            "--set",
            &format!("output.dir=\"{}\"", out_dir.to_str().unwrap()),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let a = std::fs::read(out1.join("metrics.json")).unwrap();
    let b = std::fs::read(out2.join("metrics.json")).unwrap();
    assert_eq!(
        a, b,
        "metrics.json must be bit-identical for identical config and seed"
    );
}

#[test]
fn metric_failure_exits_one_and_records_it() {
    // a coarse step makes the splitting error overshoot the pinned 1e-6
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("coarse");
    let cfg = write_config(
        dir.path(),
        "coarse.json",
        &format!(
            r#"{{
  "scenario": "boost-covariance",
  "grid": {{ "n": 256, "x_min": -20.0, "x_max": 20.0 }},
  "physics": {{ "v": 1.0, "masses": [{{ "re": 1.0 }}] }},
  "run": {{ "dt": 0.05, "steps": 20 }},
  "output": {{ "dir": "{}" }}
}}"#,
            out_dir.to_str().unwrap()
        ),
    );
    let out = run_args(&["run", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    let metrics: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("metrics.json")).unwrap())
            .unwrap();
    assert_eq!(metrics["pass"], false);
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["pass"], false);
    assert!(manifest["metrics"]
        .as_array()
        .unwrap()
        .iter()
        .any(|m| m["pass"] == false));
}

#[test]
fn scenario_runtime_failure_exits_one_with_partial_manifest() {
    // unstable-boost without any complex mass cannot run
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("partial");
    let cfg = write_config(
        dir.path(),
        "nodecay.json",
        &format!(
            r#"{{
  "scenario": "unstable-boost",
  "grid": {{ "n": 256, "x_min": -16.0, "x_max": 16.0 }},
  "physics": {{ "c": 100.0, "masses": [{{ "re": 1.0 }}] }},
  "output": {{ "dir": "{}" }}
}}"#,
            out_dir.to_str().unwrap()
        ),
    );
    let out = run_args(&["run", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("complex mass"));
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["pass"], false);
}

#[test]
fn overrides_reach_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("seeded");
    let cfg = write_config(dir.path(), "ga.json", r#"{"scenario": "group-axioms"}"#);
    let out = run_args(&[
        "run",
        "--config",
        &cfg,
        "--set",
        "run.seed=7",
        "--set",
        &format!("output.dir=\"{}\"", out_dir.to_str().unwrap()),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let metrics: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("metrics.json")).unwrap())
            .unwrap();
    assert_eq!(metrics["params"]["run"]["seed"], 7);
}
