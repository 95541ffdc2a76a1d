//! The boost phase as a relativistic remnant: residual scaling against the
//! exact Lorentz time difference.

use super::Result;
use crate::artifacts::Artifacts;
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::group::Event;
use galilei::wave::remnant_phase_check;
use galilei::Vec3;

pub fn run(cfg: &ScenarioConfig, artifacts: &mut Artifacts) -> Result<Vec<Metric>> {
    let c = cfg.physics.c;
    let m = 1.0;

    // x ⟂ v: the residual is the pure time coefficient, O(v⁴)
    let perp = Event::new(Vec3::new(0.0, 1.0, 0.0), 1.0);
    let res = |v: f64| -> Result<f64> {
        Ok(remnant_phase_check(m, Vec3::along_x(v), c, &perp)?
            .residual
            .abs())
    };
    let speeds = [1e-2 * c, 5e-3 * c, 2.5e-3 * c];
    let r: Vec<f64> = speeds.iter().map(|&v| res(v)).collect::<Result<_>>()?;
    let ratio12 = r[0] / r[1];
    let ratio23 = r[1] / r[2];

    // collinear reference event: residual stays far below the phase itself
    let collinear = remnant_phase_check(
        m,
        Vec3::along_x(1e-3 * c),
        c,
        &Event::new(Vec3::along_x(1.0), 1.0),
    )?;

    let metrics = vec![
        Metric::range("residual_halving_ratio_1", ratio12, 16.0 * 0.8, 16.0 * 1.2),
        Metric::range("residual_halving_ratio_2", ratio23, 16.0 * 0.8, 16.0 * 1.2),
        Metric::max("collinear_residual_over_phase", collinear.ratio, 1e-6),
        Metric::info(
            "galilean_phase_at_collinear_event",
            collinear.galilean_phase,
        ),
    ];

    let mut rows = Vec::new();
    let mut curve = Vec::new();
    for i in 0..8 {
        let v = 1e-2 * c / (2f64.powi(i));
        let residual = res(v)?;
        rows.push(vec![v, residual]);
        curve.push(((v / c).log10(), residual.log10()));
    }
    artifacts.write_table_csv("residual_vs_v.csv", &["v", "residual"], &rows)?;
    artifacts.write_chart(
        "residual_vs_v.svg",
        "log10 remnant residual vs log10 v/c (slope 4)",
        &[("residual", &curve)],
    )?;

    Ok(metrics)
}
