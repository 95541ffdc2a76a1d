//! Evolve-then-boost equals boost-then-evolve with the co-moving
//! potential, for free motion and a harmonic trap.

use super::{grid, Result};
use crate::artifacts::Artifacts;
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::group::ExtendedGalileiElement;
use galilei::wave::{apply_unitary, free_gaussian, propagate, GaussianPacket, Potential};
use galilei::Vec3;

pub fn run(cfg: &ScenarioConfig, artifacts: &mut Artifacts) -> Result<Vec<Metric>> {
    let grid = grid(cfg)?;
    let c = cfg.physics.c;
    let state = free_gaussian(grid, GaussianPacket::new(1.0, -2.0, 1.0), 1.0, c)?;
    let v = cfg.physics.v;
    let boost = ExtendedGalileiElement::boost(Vec3::along_x(v));
    let dt = cfg.run.dt;
    let steps = cfg.run.steps;

    let mut metrics = Vec::new();
    for (label, potential, comoving) in [
        ("free_l2_mismatch", Potential::Zero, Potential::Zero),
        (
            "harmonic_l2_mismatch",
            Potential::Harmonic {
                stiffness: 1.0,
                center: 0.0,
                center_velocity: 0.0,
            },
            Potential::Harmonic {
                stiffness: 1.0,
                center: 0.0,
                center_velocity: v,
            },
        ),
    ] {
        let evolve_then_boost = apply_unitary(
            &boost,
            &propagate(&state, &potential, dt, steps, c)?,
            &potential,
        )?;
        let boost_then_evolve = propagate(
            &apply_unitary(&boost, &state, &potential)?,
            &comoving,
            dt,
            steps,
            c,
        )?;
        metrics.push(Metric::max(
            label,
            evolve_then_boost.l2_distance(&boost_then_evolve)?,
            1e-6,
        ));
        if label.starts_with("harmonic") {
            artifacts.write_state_csv("evolve_then_boost.csv", &evolve_then_boost)?;
            artifacts.write_state_csv("boost_then_evolve.csv", &boost_then_evolve)?;
        }
    }
    Ok(metrics)
}
