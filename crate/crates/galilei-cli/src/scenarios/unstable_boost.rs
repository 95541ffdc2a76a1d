//! Complex-mass channels: the boosted density ratio `e^{−2 Im Δ_m̃/ħ}` and
//! the propagation norm decaying at the analytic per-mode rate.

use super::{grid, masses, Result, ScenarioError};
use crate::artifacts::Artifacts;
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::wave::{
    boost_complex_mass, propagate, GaussianPacket, MassChannel, Potential, SuperposedState,
};
use galilei::HBAR;
use num_complex::Complex64;

pub fn run(cfg: &ScenarioConfig, artifacts: &mut Artifacts) -> Result<Vec<Metric>> {
    let grid = grid(cfg)?;
    let c = cfg.physics.c;
    let mass = masses(cfg)
        .into_iter()
        .find(|m| m.im != 0.0)
        .ok_or_else(|| ScenarioError("unstable-boost needs a complex mass".into()))?;

    let field = GaussianPacket::new(1.0, 0.0, 0.0).sample(&grid, 0.0, mass.re, c);
    let state = SuperposedState::single(grid, MassChannel::new(mass, field.clone())?, 0.0)?;

    let report = boost_complex_mass(&state, cfg.physics.v)?;
    let mut metrics = vec![
        Metric::max(
            "density_ratio_max_deviation",
            report.max_relative_deviation,
            1e-8,
        ),
        Metric::max(
            "log_slope_relative_error",
            (report.measured_log_slope - report.predicted_log_slope).abs()
                / report.predicted_log_slope.abs(),
            1e-6,
        ),
        Metric::info("predicted_log_slope", report.predicted_log_slope),
    ];

    // norm decay under propagation matches the analytic per-mode factor;
    // monotone decay needs c² above ħ²k_max²/(2|m̃|²)
    let k_max = std::f64::consts::PI / grid.dx();
    if c * c <= HBAR * HBAR * k_max * k_max / (2.0 * mass.norm_sqr()) {
        return Err(ScenarioError(format!(
            "c = {c} too small for monotone decay at k_max = {k_max:.1}; raise physics.c"
        )));
    }
    let dt = cfg.run.dt;
    let steps = cfg.run.steps;
    let evolved = propagate(&state, &Potential::Zero, dt, steps, c)?;

    let spectral_norm_prediction = {
        // the per-step kinetic factor is exp(−i(m̃c² + ħ²k²/2m̃)dt/ħ)
        let kg = galilei::wave::KgState::from_field(grid, &field, mass.re, c)?;
        let mut predicted = 0.0;
        for (j, coeff) in kg.coeffs.iter().enumerate() {
            let k = grid.wavenumber(j);
            let energy = mass * c * c + Complex64::new(HBAR * HBAR * k * k, 0.0) / (2.0 * mass);
            predicted += coeff.norm_sqr() * (2.0 * energy.im * dt * steps as f64 / HBAR).exp();
        }
        (predicted * grid.extent()).sqrt()
    };
    let got = evolved.total_norm();
    metrics.push(Metric::max(
        "norm_decay_relative_error",
        (got - spectral_norm_prediction).abs() / spectral_norm_prediction,
        1e-8,
    ));
    metrics.push(Metric::info("norm_after_run", got));

    artifacts.write_state_csv("state_initial.csv", &state)?;
    artifacts.write_state_csv("state_boosted.csv", &report.state)?;
    let ln_ratio: Vec<(f64, f64)> = report
        .ratios
        .iter()
        .enumerate()
        .map(|(i, r)| (i as f64, r.ln()))
        .collect();
    artifacts.write_chart(
        "log_density_ratio.svg",
        "ln of boosted/unboosted density ratio across the packet",
        &[("ln ratio", &ln_ratio)],
    )?;

    Ok(metrics)
}
