//! Classical-side suite: canonical boost maps, the Lagrangian boundary
//! term, the 5-d metric and Lagrangian, and decay kinematics.

use super::Result;
use crate::artifacts::Artifacts;
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::group::{Event5, ExtendedGalileiElement};
use galilei::mechanics::{
    boundary_term_check, decay_mass_ratio, inner_product5, lagrangian5, lagrangian5_via_metric,
    Metric5, PhaseState, Trajectory,
};
use galilei::Vec3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run(cfg: &ScenarioConfig, artifacts: &mut Artifacts) -> Result<Vec<Metric>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.run.seed);
    let c = 10.0; // large enough that on-shell energies dominate kinetic terms
    fn v3(rng: &mut ChaCha8Rng, r: f64) -> Vec3 {
        Vec3::new(
            rng.gen_range(-r..r),
            rng.gen_range(-r..r),
            rng.gen_range(-r..r),
        )
    }

    let mut worst_shell: f64 = 0.0;
    let mut worst_compose: f64 = 0.0;
    for _ in 0..10_000 {
        let state = PhaseState::on_shell(
            v3(&mut rng, 10.0),
            v3(&mut rng, 10.0),
            rng.gen_range(0.2..5.0),
            rng.gen_range(-5.0..5.0),
            c,
        );
        let v = v3(&mut rng, 5.0);
        worst_shell = worst_shell.max(state.composed_boost_map(v).off_shell_error(c));
        let seq = state.f2_map(v).f3_map(v);
        let direct = state.composed_boost_map(v);
        worst_compose = worst_compose
            .max((seq.energy - direct.energy).abs() / direct.energy.abs().max(1.0))
            .max((seq.p - direct.p).max_abs())
            .max((seq.q - direct.q).max_abs());
    }

    // boundary term on a polynomial path
    let traj = Trajectory::from_path(
        |t| Vec3::new(0.3 * t * t * t - t, 2.0 * t * t, -0.7 * t),
        -1.0,
        2.0,
        4097,
        0.8,
    );
    let boundary = boundary_term_check(&traj, Vec3::new(0.5, -1.2, 0.3))?;

    // 5-d pairing and Lagrangian invariance under simultaneous boosts
    let mut worst_inner: f64 = 0.0;
    let mut worst_lag: f64 = 0.0;
    let mut worst_routes: f64 = 0.0;
    for _ in 0..5_000 {
        let x = Event5::new(
            v3(&mut rng, 10.0),
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
        );
        let y = Event5::new(
            v3(&mut rng, 10.0),
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
        );
        let boost = ExtendedGalileiElement::boost(v3(&mut rng, 5.0));
        let before = inner_product5(&x, &y);
        let after = inner_product5(&boost.act_event5(&x), &boost.act_event5(&y));
        worst_inner = worst_inner.max((before - after).abs() / before.abs().max(1.0));

        let xdot = v3(&mut rng, 3.0);
        let sdot = rng.gen_range(-3.0..3.0);
        let w = v3(&mut rng, 3.0);
        let m = rng.gen_range(0.2..5.0);
        let lag = lagrangian5(xdot, sdot, m, 4.0);
        let lag_boosted = lagrangian5(xdot - w, sdot - xdot.dot(w) + 0.5 * w.norm_sq(), m, 4.0);
        worst_lag = worst_lag.max((lag - lag_boosted).abs() / lag.abs().max(1.0));
        worst_routes = worst_routes
            .max((lag - lagrangian5_via_metric(xdot, sdot, m, 4.0)).abs() / lag.abs().max(1.0));
    }

    // metric identities at a binary-representable c
    let metric = Metric5::standard();
    let c_bin = 4.0;
    let g = metric.g(c_bin);
    let mut h_exact = true;
    for i in 0..5 {
        for j in 0..5 {
            h_exact &= c_bin * c_bin * (g[i][j] - metric.eta[i][j]) == metric.h[i][j];
        }
    }
    let mut worst_line: f64 = 0.0;
    for _ in 0..2_000 {
        let d = Event5::new(
            v3(&mut rng, 2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let want = -c_bin * c_bin * d.t * d.t + d.x.norm_sq() - 2.0 * d.t * d.s;
        worst_line = worst_line.max((metric.line_element(c_bin, &d) - want).abs());
    }

    // decay kinematics, exact
    let decay_exact = decay_mass_ratio(1.0, 0.1, 1.0)? == 1.1
        && decay_mass_ratio(2.0, 0.0, 1.0)? == 2.0
        && decay_mass_ratio(1.0, 1.0, 2.0)? == 1.5;
    let decay_rejects = decay_mass_ratio(1.0, 2.0, 1.0).is_err();

    artifacts.write_text("metric5.json", &metric.as_json(cfg.physics.c))?;
    let gap_rows: Vec<Vec<f64>> = boundary
        .gap_curve
        .iter()
        .enumerate()
        .map(|(i, g)| vec![traj.t0 + traj.dt * (i + 1) as f64, *g])
        .collect();
    artifacts.write_table_csv(
        "boundary_gap_curve.csv",
        &["t", "cumulative_gap"],
        &gap_rows,
    )?;

    Ok(vec![
        Metric::max("on_shell_preservation_max_error", worst_shell, 1e-12),
        Metric::max("f3_after_f2_vs_composed_max_error", worst_compose, 1e-12),
        Metric::max("boundary_term_mismatch", boundary.mismatch, 1e-6),
        Metric::max(
            "boundary_richardson_consistency",
            (boundary.gap_integral - boundary.coarse_gap_integral).abs(),
            1e-6,
        ),
        Metric::max("inner_product5_invariance_max_error", worst_inner, 1e-12),
        Metric::max("lagrangian5_invariance_max_error", worst_lag, 1e-12),
        Metric::max("lagrangian5_route_agreement_max_error", worst_routes, 1e-12),
        Metric::flag("metric_h_recovered_from_g_exactly", h_exact),
        Metric::max("line_element_decomposition_max_error", worst_line, 1e-12),
        Metric::flag("decay_mass_ratio_exact", decay_exact),
        Metric::flag("decay_mass_ratio_rejects_superluminal", decay_rejects),
    ])
}
