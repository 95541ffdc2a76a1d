//! Exact affine Lorentz loop against its O(1/c²) shift prediction.

use super::Result;
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::group::lorentz_loop;
use galilei::Vec3;

pub fn run(cfg: &ScenarioConfig) -> Result<Vec<Metric>> {
    let c = cfg.physics.c;
    let a = Vec3::along_x(1.0);

    let slow = lorentz_loop(a, Vec3::along_x(0.1 * c), c)?;
    let fast = lorentz_loop(a, Vec3::along_x(0.01 * c), c)?;
    let s1 = lorentz_loop(a, Vec3::along_x(0.02 * c), c)?.spatial_residual;
    let s2 = lorentz_loop(a, Vec3::along_x(0.01 * c), c)?.spatial_residual;

    // perpendicular geometry collapses the loop to the identity
    let perp = lorentz_loop(a, Vec3::new(0.0, 0.05 * c, 0.0), c)?;

    Ok(vec![
        Metric::max("relative_residual_at_v_0p1c", slow.relative_residual, 1e-2),
        Metric::max("relative_residual_at_v_0p01c", fast.relative_residual, 1e-6),
        Metric::range(
            "spatial_residual_halving_ratio",
            s1 / s2,
            16.0 * 0.8,
            16.0 * 1.2,
        ),
        Metric::max("loop_linear_part_deviation", slow.linear_deviation, 1e-12),
        Metric::max(
            "perpendicular_loop_shift",
            perp.exact_shift_x.norm().max(perp.exact_shift_t.abs()),
            1e-13,
        ),
        Metric::info("predicted_time_shift_at_v_0p1c", slow.predicted_shift_t),
        Metric::info("predicted_space_shift_at_v_0p1c", slow.predicted_shift_x.x),
        Metric::info("exact_time_shift_at_v_0p1c", slow.exact_shift_t),
        Metric::info("exact_space_shift_at_v_0p1c", slow.exact_shift_x.x),
    ])
}
