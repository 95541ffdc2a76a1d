//! Residual and convergence study of the mass-operator Schrödinger form,
//! plus the free-Gaussian validation of the propagator it leans on.

use super::{grid, masses, Result, ScenarioError};
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::wave::{
    free_gaussian, propagate, reduce_sch5, GaussianPacket, MassChannel, Potential, SuperposedState,
};
use num_complex::Complex64;

pub fn run(cfg: &ScenarioConfig) -> Result<Vec<Metric>> {
    let grid = grid(cfg)?;
    let c = cfg.physics.c;
    let mass_list = masses(cfg);
    if mass_list.len() < 2 {
        return Err(ScenarioError(
            "sch5-residual needs at least two masses".into(),
        ));
    }

    // two-channel state with distinct packets
    let f1 = GaussianPacket::new(1.0, -1.0, 0.5).sample(&grid, 0.0, mass_list[0].re, c);
    let f2 = GaussianPacket::new(1.2, 1.0, -0.4).sample(&grid, 0.0, mass_list[1].re, c);
    let state = SuperposedState::new(
        grid,
        vec![
            MassChannel::new(mass_list[0], f1)?,
            MassChannel::new(mass_list[1], f2)?,
        ],
        0.0,
    )?;

    let dt = cfg.run.dt;
    let r1 = reduce_sch5(&state, &Potential::Zero, 2.0 * dt, c)?.total;
    let r2 = reduce_sch5(&state, &Potential::Zero, dt, c)?.total;
    let r3 = reduce_sch5(&state, &Potential::Zero, 0.5 * dt, c)?.total;
    let order12 = (r1 / r2).log2();
    let order23 = (r2 / r3).log2();

    // single channel reduces to the ordinary Schrödinger residual
    let single = free_gaussian(grid, GaussianPacket::new(1.0, 0.0, 1.0), mass_list[0].re, c)?;
    let single_residual = reduce_sch5(&single, &Potential::Zero, dt, c)?.total;

    // zero state
    let zero = SuperposedState::single(
        grid,
        MassChannel::real(1.0, vec![Complex64::default(); grid.len()])?,
        0.0,
    )?;
    let zero_residual = reduce_sch5(&zero, &Potential::Zero, dt, c)?.total;

    // propagator validation against the closed-form free Gaussian
    let packet = GaussianPacket::new(1.0, -2.0, 2.0);
    let oracle_state = free_gaussian(grid, packet, 1.0, c)?;
    let horizon = 1.0;
    let steps = (horizon / dt).round().max(1.0) as usize;
    let evolved = propagate(
        &oracle_state,
        &Potential::Zero,
        horizon / steps as f64,
        steps,
        c,
    )?;
    let reference = packet.sample(&grid, horizon, 1.0, c);
    let oracle_l2 = (evolved.channels[0]
        .amplitudes
        .iter()
        .zip(&reference)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        * grid.dx())
    .sqrt();

    Ok(vec![
        Metric::max("two_channel_residual", r2, 1e-5),
        Metric::range("convergence_order_coarse", order12, 1.7, 2.3),
        Metric::range("convergence_order_fine", order23, 1.7, 2.3),
        Metric::max("single_channel_residual", single_residual, 1e-5),
        Metric::max("zero_state_residual", zero_residual, 0.0),
        Metric::max("free_gaussian_oracle_l2", oracle_l2, 1e-6),
    ])
}
