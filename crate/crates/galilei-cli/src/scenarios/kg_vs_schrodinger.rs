//! Klein-Gordon dispersion against Schrödinger evolution after stripping
//! the common rest phase: O(1/c²) convergence and the effectively-infinite
//! c limit.

use super::{grid, Result};
use crate::artifacts::Artifacts;
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::wave::{free_gaussian, kg_nr_compare, GaussianPacket, KgState, SuperposedState};
use num_complex::Complex64;

pub fn run(cfg: &ScenarioConfig, artifacts: &mut Artifacts) -> Result<Vec<Metric>> {
    let grid = grid(cfg)?;
    let mass = 1.0;
    let packet = GaussianPacket::new(1.0, 0.0, 0.0);
    let horizon = 1.0;

    let error_at = |c: f64| -> Result<f64> {
        let sch = free_gaussian(grid, packet, mass, c)?;
        let kg = KgState::from_field(grid, &sch.channels[0].amplitudes, mass, c)?;
        Ok(kg_nr_compare(&kg, &sch, horizon)?.l2_error)
    };

    let base_c = cfg.physics.c;
    let e1 = error_at(base_c)?;
    let e2 = error_at(2.0 * base_c)?;
    let e_inf = error_at(1e6)?;

    // zero-momentum plane wave: stripped fields agree exactly
    let mut coeffs = vec![Complex64::default(); grid.len()];
    coeffs[0] = Complex64::new(1.0, 0.0);
    let kg0 = KgState {
        grid,
        mass,
        c: base_c,
        coeffs,
        time: 0.0,
    };
    let field0 = kg0.synthesize();
    let sch0 = SuperposedState::single(grid, galilei::wave::MassChannel::real(mass, field0)?, 0.0)?;
    let plane_error = kg_nr_compare(&kg0, &sch0, 2.0)?.l2_error;

    let metrics = vec![
        Metric::range("error_ratio_under_c_doubling", e1 / e2, 3.4, 4.6),
        Metric::max("error_at_effectively_infinite_c", e_inf, 1e-9),
        Metric::max("zero_momentum_plane_wave_error", plane_error, 1e-13),
        Metric::info("error_at_base_c", e1),
    ];

    // error-vs-c curve in log10 for the chart
    let mut rows = Vec::new();
    let mut curve = Vec::new();
    for mult in [0.5, 1.0, 2.0, 4.0, 8.0] {
        let c = base_c * mult;
        let err = error_at(c)?;
        rows.push(vec![c, err]);
        curve.push((c.log10(), err.log10()));
    }
    artifacts.write_table_csv("error_vs_c.csv", &["c", "l2_error"], &rows)?;
    artifacts.write_chart(
        "error_vs_c.svg",
        "log10 stripped-field L² error vs log10 c (slope −2)",
        &[("error", &curve)],
    )?;

    Ok(metrics)
}
