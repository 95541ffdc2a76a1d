//! Scenario runner: declarative JSON configs in, metrics/manifest/CSV/SVG
//! artifacts out.
//!
//! Exit codes: 0 all metrics pass, 1 metric failure or runtime error,
//! 2 invalid config.

mod artifacts;
mod config;
mod metrics;
mod scenarios;

use artifacts::Artifacts;
use clap::{Parser, Subcommand};
use config::{parse_with_overrides, validate, ScenarioConfig};
use metrics::{ManifestMetric, MetricsReport, RunManifest};
use sha2::{Digest, Sha256};
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Parser)]
#[command(
    name = "galilei-cli",
    version,
    about = "Extended-Galilei numerical laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario from a config file.
    Run {
        /// Path to the JSON config.
        #[arg(long)]
        config: String,
        /// Dotted-path overrides, e.g. --set physics.c=40 --set run.seed=7
        #[arg(long = "set")]
        set: Vec<String>,
    },
    /// List the available scenarios.
    List,
    /// Validate a config without running it.
    Validate {
        #[arg(long)]
        config: String,
        #[arg(long = "set")]
        set: Vec<String>,
    },
}

fn main() {
    std::process::exit(real_main());
}

/// println! panics when stdout is a closed pipe (`list | head`); a CLI
/// should just stop emitting instead.
fn out_line(line: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn real_main() -> i32 {
    match Cli::parse().command {
        Command::List => {
            for (name, anchor) in scenarios::catalog() {
                out_line(&format!("{name:20} {anchor}"));
            }
            0
        }
        Command::Validate { config, set } => match load(&config, &set) {
            Ok((cfg, findings)) => {
                for f in &findings {
                    out_line(&format!("warning: {}", f.message));
                }
                out_line(&format!("config ok: scenario {}", cfg.scenario));
                0
            }
            Err(message) => {
                eprintln!("{message}");
                2
            }
        },
        Command::Run { config, set } => match load(&config, &set) {
            Ok((cfg, findings)) => run_scenario(&cfg, &findings),
            Err(message) => {
                eprintln!("{message}");
                2
            }
        },
    }
}

/// Load, override, parse and validate. Fatal findings become the error.
fn load(
    path: &str,
    overrides: &[String],
) -> Result<(ScenarioConfig, Vec<config::Finding>), String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read config {path}: {e}"))?;
    let cfg = parse_with_overrides(&text, overrides).map_err(|e| e.to_string())?;
    let findings = validate(&cfg);
    if let Some(fatal) = findings.iter().find(|f| f.fatal) {
        return Err(format!("invalid config: {}", fatal.message));
    }
    Ok((cfg, findings.into_iter().filter(|f| !f.fatal).collect()))
}

fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn run_scenario(cfg: &ScenarioConfig, warnings: &[config::Finding]) -> i32 {
    let started_unix = unix_now();
    for w in warnings {
        eprintln!("warning: {}", w.message);
    }
    let mut artifacts = match Artifacts::new(&cfg.output_dir(), cfg.output.emit_svg) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("cannot create output dir {}: {e}", cfg.output_dir());
            return 1;
        }
    };

    let outcome = match scenarios::run(cfg, &mut artifacts) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("{e}");
            // record the partial run in a manifest before failing
            let _ = write_manifest(cfg, &artifacts, &[], false, started_unix, warnings);
            return 1;
        }
    };

    let params = serde_json::json!({
        "grid": cfg.grid,
        "physics": cfg.physics,
        "run": cfg.run,
    });
    let report = MetricsReport::new(&cfg.scenario, &outcome.anchor, params, &outcome.metrics);
    let pass = report.pass;
    let metrics_json = match serde_json::to_string_pretty(&report) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("cannot serialize metrics: {e}");
            return 1;
        }
    };
    if let Err(e) = artifacts.write_text("metrics.json", &metrics_json) {
        eprintln!("cannot write metrics.json: {e}");
        return 1;
    }

    for m in &outcome.metrics {
        let verdict = if m.pass { "pass" } else { "FAIL" };
        println!(
            "{:50} {:>14.6e}  {:16} {verdict}",
            m.name, m.value, m.requirement
        );
    }
    println!(
        "{}: {} ({} metrics)",
        cfg.scenario,
        if pass { "PASS" } else { "FAIL" },
        outcome.metrics.len()
    );

    if let Err(e) = write_manifest(
        cfg,
        &artifacts,
        &outcome.metrics,
        pass,
        started_unix,
        warnings,
    ) {
        eprintln!("cannot write manifest: {e}");
        return 1;
    }

    if pass {
        0
    } else {
        1
    }
}

fn write_manifest(
    cfg: &ScenarioConfig,
    artifacts: &Artifacts,
    metrics: &[metrics::Metric],
    pass: bool,
    started_unix: u64,
    warnings: &[config::Finding],
) -> std::io::Result<()> {
    let config_text = serde_json::to_string(cfg).unwrap_or_default();
    let config_hash = format!("{:x}", Sha256::digest(config_text.as_bytes()));
    let mut outputs: Vec<String> = artifacts.written().to_vec();
    outputs.push("manifest.json".into());
    let manifest = RunManifest {
        scenario: cfg.scenario.clone(),
        config_hash,
        tool_version: env!("CARGO_PKG_VERSION").into(),
        seed: cfg.run.seed,
        started_unix,
        finished_unix: unix_now(),
        pass,
        metrics: metrics
            .iter()
            .map(|m| ManifestMetric {
                name: m.name.clone(),
                pass: m.pass,
            })
            .collect(),
        outputs,
        warnings: warnings.iter().map(|w| w.message.clone()).collect(),
    };
    let text = serde_json::to_string_pretty(&manifest)?;
    std::fs::write(
        std::path::Path::new(&cfg.output_dir()).join("manifest.json"),
        text,
    )
}
