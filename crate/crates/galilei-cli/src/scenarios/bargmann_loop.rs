//! The composite translate/boost loop: exact central element on the group
//! side, per-channel phases `e^{i m a·v/ħ}` on the quantum side, and the
//! true-representation property of the extended action.

use super::{grid, masses, Result, ScenarioError};
use crate::artifacts::{density_points, Artifacts};
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::group::{bargmann_loop, checks, cocycle, ExtendedGalileiElement, GalileiElement};
use galilei::wave::{
    apply_unitary, bargmann_loop_apply, coherent_density, GaussianPacket, MassChannel, Potential,
    SuperposedState,
};
use galilei::{Vec3, HBAR};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run(cfg: &ScenarioConfig, artifacts: &mut Artifacts) -> Result<Vec<Metric>> {
    let mut metrics = Vec::new();

    // algebraic side
    let loop_fuzz = checks::bargmann_loop_exactness(cfg.run.seed, 1_000);
    metrics.push(Metric::max(
        "algebraic_loop_max_residual",
        loop_fuzz.max_residual,
        1e-12,
    ));
    let sample = bargmann_loop(Vec3::along_x(cfg.physics.a), Vec3::along_x(cfg.physics.v));
    metrics.push(Metric::flag(
        "algebraic_loop_erases_to_identity",
        sample.erase() == GalileiElement::IDENTITY,
    ));

    // quantum side: equal Gaussians, one per configured mass
    let grid = grid(cfg)?;
    let field = GaussianPacket::new(1.0, 0.0, 0.0).sample(&grid, 0.0, 1.0, cfg.physics.c);
    let channels: std::result::Result<Vec<_>, _> = masses(cfg)
        .into_iter()
        .map(|m| MassChannel::new(m, field.clone()))
        .collect();
    let state = SuperposedState::new(grid, channels?, 0.0)?;

    let a = cfg.physics.a;
    let v = cfg.physics.v;
    let (after, phases) = bargmann_loop_apply(&state, a, v)?;

    let mut worst_phase: f64 = 0.0;
    for (ch, got) in state.channels.iter().zip(&phases) {
        let want = (Complex64::i() * ch.mass * a * v / HBAR).exp();
        worst_phase = worst_phase.max((got - want).norm());
        metrics.push(Metric::info(&format!("channel_phase_re[m={}]", ch.mass.re), got.re));
        metrics.push(Metric::info(&format!("channel_phase_im[m={}]", ch.mass.re), got.im));
    }
    metrics.push(Metric::max("channel_phase_max_error", worst_phase, 1e-10));

    // interference null at a·v = π for the two-mass integer case
    let before = coherent_density(&state, 0.0);
    let after_density = coherent_density(&after, 0.0);
    if (a * v - std::f64::consts::PI).abs() <= 1e-9 && state.channels.len() == 2 {
        let center = grid.len() / 2;
        let amp_sq = state.channels[0].amplitudes[center].norm_sqr();
        metrics.push(Metric::max(
            "coherent_density_before_minus_4A2",
            (before[center] - 4.0 * amp_sq).abs(),
            1e-12,
        ));
        metrics.push(Metric::max(
            "interference_null_depth",
            after_density[center] / amp_sq,
            1e-12,
        ));
    }

    // single-channel density invariance
    let single = SuperposedState::single(
        grid,
        MassChannel {
            mass: state.channels[0].mass,
            amplitudes: field.clone(),
        },
        0.0,
    )?;
    let (single_after, single_phases) = bargmann_loop_apply(&single, a, v)?;
    let drift = single.channels[0]
        .amplitudes
        .iter()
        .zip(&single_after.channels[0].amplitudes)
        .map(|(x, y)| (x.norm_sqr() - y.norm_sqr()).abs())
        .fold(0.0, f64::max);
    metrics.push(Metric::max("single_channel_density_drift", drift, 1e-12));
    metrics.push(Metric::max(
        "single_channel_phase_unimodularity",
        (single_phases[0].norm() - 1.0).abs(),
        1e-12,
    ));

    // extended action is a true representation
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.run.seed.wrapping_add(10));
    let mut worst_rep: f64 = 0.0;
    for _ in 0..10 {
        let g = ExtendedGalileiElement::new(
            rng.gen_range(-3.0..3.0),
            0.0,
            Vec3::along_x(rng.gen_range(-3.0..3.0)),
            Vec3::along_x(rng.gen_range(-2.0..2.0)),
        );
        let g2 = ExtendedGalileiElement::new(
            rng.gen_range(-3.0..3.0),
            0.0,
            Vec3::along_x(rng.gen_range(-3.0..3.0)),
            Vec3::along_x(rng.gen_range(-2.0..2.0)),
        );
        let seq = apply_unitary(
            &g,
            &apply_unitary(&g2, &state, &Potential::Zero)?,
            &Potential::Zero,
        )?;
        let direct = apply_unitary(&g.compose(&g2), &state, &Potential::Zero)?;
        worst_rep = worst_rep.max(seq.l2_distance(&direct)? / state.total_norm());
    }
    metrics.push(Metric::max(
        "representation_homomorphism_residual",
        worst_rep,
        1e-10,
    ));

    // erased loop phases equal the cocycle loop product per channel
    let g1 = GalileiElement::translation(Vec3::along_x(a));
    let g2 = GalileiElement::boost(Vec3::along_x(v));
    let g3 = GalileiElement::translation(Vec3::along_x(-a));
    let g4 = GalileiElement::boost(Vec3::along_x(-v));
    let mut worst_cocycle: f64 = 0.0;
    for (ch, got) in state.channels.iter().zip(&phases) {
        if ch.mass.im != 0.0 {
            return Err(ScenarioError("bargmann-loop expects real masses".into()));
        }
        let m = ch.mass.re;
        let omega = cocycle(&g4, &g3, m)
            * cocycle(&g2, &g1, m)
            * cocycle(&g4.compose(&g3), &g2.compose(&g1), m);
        worst_cocycle = worst_cocycle.max((got - omega).norm());
    }
    metrics.push(Metric::max(
        "cocycle_prediction_max_error",
        worst_cocycle,
        1e-10,
    ));

    artifacts.write_state_csv("state_before.csv", &state)?;
    artifacts.write_state_csv("state_after.csv", &after)?;
    artifacts.write_chart(
        "coherent_density.svg",
        "coherent density before/after the loop (s = 0)",
        &[
            ("before", &density_points(&state, &before)),
            ("after", &density_points(&after, &after_density)),
        ],
    )?;

    Ok(metrics)
}
