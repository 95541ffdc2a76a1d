//! Declarative scenario configuration: one JSON file per run, with dotted
//! CLI overrides. Unknown keys are rejected so a typo cannot silently fall
//! back to a default.

use serde::{Deserialize, Serialize};
use std::fmt;

pub const SCENARIOS: [&str; 11] = [
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
];

/// Scenarios that build wavefunctions and therefore need masses and a grid.
pub const WAVE_SCENARIOS: [&str; 7] = [
    "bargmann-loop",
    "boost-covariance",
    "mass-interference",
    "unstable-boost",
    "accelerated-frame",
    "kg-vs-schrodinger",
    "sch5-residual",
];

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid config: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub n: usize,
    pub x_min: f64,
    pub x_max: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            n: 1024,
            x_min: -20.0,
            x_max: 20.0,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassSpec {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhysicsConfig {
    #[serde(default = "default_c")]
    pub c: f64,
    /// Fixed to 1 in internal units; present for clarity only.
    #[serde(default = "default_hbar")]
    pub hbar: f64,
    #[serde(default = "default_masses")]
    pub masses: Vec<MassSpec>,
    #[serde(default = "default_v")]
    pub v: f64,
    #[serde(default = "default_a")]
    pub a: f64,
    #[serde(default)]
    pub b: f64,
    #[serde(default)]
    pub bm: f64,
    #[serde(default = "default_g_acc")]
    pub g_acc: f64,
}

fn default_c() -> f64 {
    1.0
}
fn default_hbar() -> f64 {
    1.0
}
fn default_masses() -> Vec<MassSpec> {
    vec![MassSpec { re: 1.0, im: 0.0 }, MassSpec { re: 2.0, im: 0.0 }]
}
fn default_v() -> f64 {
    std::f64::consts::PI / 5.0
}
fn default_a() -> f64 {
    5.0
}
fn default_g_acc() -> f64 {
    0.5
}

impl Default for PhysicsConfig {
    fn default() -> Self {
        PhysicsConfig {
            c: default_c(),
            hbar: default_hbar(),
            masses: default_masses(),
            v: default_v(),
            a: default_a(),
            b: 0.0,
            bm: 0.0,
            g_acc: default_g_acc(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_dt")]
    pub dt: f64,
    #[serde(default = "default_steps")]
    pub steps: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_dt() -> f64 {
    1e-3
}
fn default_steps() -> usize {
    1000
}
fn default_seed() -> u64 {
    42
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            dt: default_dt(),
            steps: default_steps(),
            seed: default_seed(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// Defaults to `out/<scenario>`.
    #[serde(default)]
    pub dir: Option<String>,
    #[serde(default)]
    pub emit_svg: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub scenario: String,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub physics: PhysicsConfig,
    #[serde(default)]
    pub run: RunConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

impl ScenarioConfig {
    pub fn output_dir(&self) -> String {
        self.output
            .dir
            .clone()
            .unwrap_or_else(|| format!("out/{}", self.scenario))
    }

    pub fn horizon(&self) -> f64 {
        self.run.dt * self.run.steps as f64
    }
}

/// Parse a config from JSON text with dotted-path overrides applied first.
pub fn parse_with_overrides(
    text: &str,
    overrides: &[String],
) -> Result<ScenarioConfig, ConfigError> {
    let mut value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ConfigError(format!("not valid JSON: {e}")))?;
    for entry in overrides {
        let (path, raw) = entry
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("override `{entry}` is not key=value")))?;
        let new: serde_json::Value =
            serde_json::from_str(raw).unwrap_or(serde_json::Value::String(raw.to_string()));
        let parts: Vec<&str> = path.split('.').collect();
        set_path(&mut value, path, &parts, new)?;
    }
    serde_json::from_value(value).map_err(|e| ConfigError(e.to_string()))
}

fn set_path(
    node: &mut serde_json::Value,
    full: &str,
    parts: &[&str],
    new: serde_json::Value,
) -> Result<(), ConfigError> {
    let obj = node
        .as_object_mut()
        .ok_or_else(|| ConfigError(format!("override path `{full}` runs through a non-object")))?;
    match parts {
        [] => Err(ConfigError(format!("override path `{full}` is empty"))),
        [leaf] => {
            obj.insert(leaf.to_string(), new);
            Ok(())
        }
        [head, rest @ ..] => {
            let child = obj
                .entry(head.to_string())
                .or_insert_with(|| serde_json::Value::Object(Default::default()));
            set_path(child, full, rest, new)
        }
    }
}

/// One validation finding: fatal failures stop the run; warnings are
/// recorded in the manifest and printed.
#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub fatal: bool,
    pub message: String,
}

/// Schema plus physics sanity checks.
pub fn validate(cfg: &ScenarioConfig) -> Vec<Finding> {
    let mut findings = Vec::new();
    let mut fail = |msg: String| {
        findings.push(Finding {
            fatal: true,
            message: msg,
        })
    };

    if !SCENARIOS.contains(&cfg.scenario.as_str()) {
        fail(format!(
            "field `scenario`: unknown scenario `{}` (see `list`)",
            cfg.scenario
        ));
        return findings;
    }
    if cfg.physics.hbar != 1.0 {
        fail(format!(
            "field `physics.hbar`: must be 1 (internal units), got {}",
            cfg.physics.hbar
        ));
    }
    for (name, value) in [
        ("grid.x_min", cfg.grid.x_min),
        ("grid.x_max", cfg.grid.x_max),
        ("physics.c", cfg.physics.c),
        ("physics.v", cfg.physics.v),
        ("physics.a", cfg.physics.a),
        ("physics.b", cfg.physics.b),
        ("physics.bm", cfg.physics.bm),
        ("physics.g_acc", cfg.physics.g_acc),
        ("run.dt", cfg.run.dt),
    ] {
        if !value.is_finite() {
            fail(format!("field `{name}`: must be finite, got {value}"));
        }
    }
    if cfg.grid.n < 16 || !cfg.grid.n.is_power_of_two() {
        fail(format!(
            "field `grid.n`: must be a power of two ≥ 16, got {}",
            cfg.grid.n
        ));
    }
    if cfg.grid.x_max <= cfg.grid.x_min {
        fail(format!(
            "field `grid.x_max`: must exceed x_min, got [{}, {}]",
            cfg.grid.x_min, cfg.grid.x_max
        ));
    }
    if cfg.physics.c <= 0.0 {
        fail(format!(
            "field `physics.c`: must be positive, got {}",
            cfg.physics.c
        ));
    }
    if cfg.run.dt <= 0.0 {
        fail(format!(
            "field `run.dt`: must be positive, got {}",
            cfg.run.dt
        ));
    }
    if cfg.run.steps == 0 {
        fail(format!(
            "field `run.steps`: must be at least 1, got {}",
            cfg.run.steps
        ));
    }
    if WAVE_SCENARIOS.contains(&cfg.scenario.as_str()) {
        if cfg.physics.masses.is_empty() {
            fail("field `physics.masses`: must be nonempty for wave scenarios".into());
        }
        for (i, m) in cfg.physics.masses.iter().enumerate() {
            let norm = (m.re * m.re + m.im * m.im).sqrt();
            if norm < 1e-6 || m.im > 0.0 {
                fail(format!(
                    "field `physics.masses[{i}]`: need |m| ≥ 1e-6 and im ≤ 0, got {}{:+}i",
                    m.re, m.im
                ));
            }
        }
    }
    if matches!(
        cfg.scenario.as_str(),
        "remnant-phase" | "lorentz-loop" | "kg-vs-schrodinger"
    ) && cfg.physics.v.abs() >= cfg.physics.c
    {
        fail(format!(
            "field `physics.v`: relativistic scenario needs |v| < c, got |{}| ≥ {}",
            cfg.physics.v, cfg.physics.c
        ));
    }

    // packet-boundary margin: wave scenarios keep a unit-width packet at
    // least 5σ from the edges over the run horizon
    if WAVE_SCENARIOS.contains(&cfg.scenario.as_str()) {
        let drift = cfg.physics.v.abs() * cfg.horizon()
            + 0.5 * cfg.physics.g_acc.abs() * cfg.horizon() * cfg.horizon()
            + cfg.physics.a.abs();
        let half = 0.5 * (cfg.grid.x_max - cfg.grid.x_min);
        if half - drift < 5.0 {
            findings.push(Finding {
                fatal: false,
                message: format!(
                    "packet margin: domain half-width {half} minus worst-case drift {drift:.2} \
                     is below 5 widths; boundary wrap may contaminate results"
                ),
            });
        }
    }
    findings
}
