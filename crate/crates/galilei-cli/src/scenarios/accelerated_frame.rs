//! Equivalence principle: transforming a free packet into a uniformly
//! accelerating frame reproduces direct propagation in the linear
//! potential, and the measurement of the fifth-coordinate cubic
//! coefficient κ.

use super::{grid, Result};
use crate::artifacts::Artifacts;
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::wave::{free_gaussian, kappa_scan, GaussianPacket, CUBIC_FRAME_COEFFICIENT};

pub fn run(cfg: &ScenarioConfig, artifacts: &mut Artifacts) -> Result<Vec<Metric>> {
    let grid = grid(cfg)?;
    let c = cfg.physics.c;
    let g_acc = cfg.physics.g_acc;
    let state = free_gaussian(grid, GaussianPacket::new(1.0, -2.0, 1.0), 1.0, c)?;

    let horizon = cfg.horizon();
    let horizons = [0.5 * horizon, 0.75 * horizon, horizon];
    let samples = kappa_scan(&state, g_acc, &horizons, cfg.run.dt, c)?;
    let last = samples.last().unwrap();
    let kappa_spread = samples
        .iter()
        .map(|s| (s.kappa_measured - CUBIC_FRAME_COEFFICIENT).abs())
        .fold(0.0, f64::max);

    let metrics = vec![
        Metric::max("l2_error_at_horizon", last.l2_error_at_recorded_kappa, 1e-5),
        Metric::info("kappa_measured", last.kappa_measured),
        Metric::info("kappa_recorded", CUBIC_FRAME_COEFFICIENT),
        Metric::max("kappa_deviation_from_recorded", kappa_spread, 1e-4),
    ];

    let rows: Vec<Vec<f64>> = samples
        .iter()
        .map(|s| vec![s.t, s.kappa_measured, s.l2_error_at_recorded_kappa])
        .collect();
    artifacts.write_table_csv(
        "kappa_curve.csv",
        &["t", "kappa_measured", "l2_error"],
        &rows,
    )?;
    let curve: Vec<(f64, f64)> = samples
        .iter()
        .map(|s| (s.t, s.kappa_measured - CUBIC_FRAME_COEFFICIENT))
        .collect();
    artifacts.write_chart(
        "kappa_residual.svg",
        "measured κ minus recorded 1/3 vs horizon",
        &[("κ deviation", &curve)],
    )?;

    Ok(metrics)
}
