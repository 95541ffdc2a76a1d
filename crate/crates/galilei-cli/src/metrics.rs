//! Metric records, the metrics.json report and the run manifest.

use serde::Serialize;
use std::collections::BTreeMap;

/// One named check: a value, a requirement string, and whether it holds.
#[derive(Debug, Clone, Serialize)]
pub struct Metric {
    pub name: String,
    pub value: f64,
    pub requirement: String,
    pub pass: bool,
}

impl Metric {
    /// `value ≤ bound`.
    pub fn max(name: &str, value: f64, bound: f64) -> Metric {
        Metric {
            name: name.into(),
            value,
            requirement: format!("<= {bound:e}"),
            pass: value <= bound,
        }
    }

    /// `lo ≤ value ≤ hi`.
    pub fn range(name: &str, value: f64, lo: f64, hi: f64) -> Metric {
        Metric {
            name: name.into(),
            value,
            requirement: format!("in [{lo}, {hi}]"),
            pass: (lo..=hi).contains(&value),
        }
    }

    /// Boolean check recorded as 1/0.
    pub fn flag(name: &str, ok: bool) -> Metric {
        Metric {
            name: name.into(),
            value: if ok { 1.0 } else { 0.0 },
            requirement: "= 1".into(),
            pass: ok,
        }
    }

    /// Reported value with no pass criterion.
    pub fn info(name: &str, value: f64) -> Metric {
        Metric {
            name: name.into(),
            value,
            requirement: "reported".into(),
            pass: true,
        }
    }
}

/// metrics.json: `{scenario, anchor, params, metrics{…}, tolerances{…}, pass}`.
#[derive(Debug, Serialize)]
pub struct MetricsReport {
    pub scenario: String,
    /// The identity this scenario checks, machine-readable.
    pub anchor: String,
    pub params: serde_json::Value,
    pub metrics: BTreeMap<String, f64>,
    pub tolerances: BTreeMap<String, String>,
    pub pass: bool,
}

impl MetricsReport {
    pub fn new(
        scenario: &str,
        anchor: &str,
        params: serde_json::Value,
        metrics: &[Metric],
    ) -> MetricsReport {
        MetricsReport {
            scenario: scenario.into(),
            anchor: anchor.into(),
            params,
            metrics: metrics.iter().map(|m| (m.name.clone(), m.value)).collect(),
            tolerances: metrics
                .iter()
                .map(|m| (m.name.clone(), m.requirement.clone()))
                .collect(),
            pass: metrics.iter().all(|m| m.pass),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ManifestMetric {
    pub name: String,
    pub pass: bool,
}

/// manifest.json: provenance of one run. Every emitted file is listed.
/// Re-running the same config and seed reproduces metrics.json
/// bit-identically; the timestamps live only here.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub scenario: String,
    pub config_hash: String,
    pub tool_version: String,
    pub seed: u64,
    pub started_unix: u64,
    pub finished_unix: u64,
    pub pass: bool,
    pub metrics: Vec<ManifestMetric>,
    pub outputs: Vec<String>,
    pub warnings: Vec<String>,
}
