//! The Galilean boost phase as a relativistic remnant: the exact Lorentz
//! time difference between frames, multiplied by mc²/ħ, reproduces
//! `Δ_m/ħ` up to terms two orders higher in v/c.

use super::state::WaveError;
use crate::group::element::Event;
use crate::group::phase::delta_phase;
use crate::vec3::Vec3;
use crate::HBAR;

/// Comparison of the exact Lorentz remnant phase with the Galilean boost
/// phase at one event.
#[derive(Debug, Clone, Copy)]
pub struct RemnantReport {
    /// `m c² (t′ − t)/ħ` with exact Lorentz `t′ = γ(t − v·x/c²)`.
    pub exact_phase: f64,
    /// `Δ_m/ħ = m(v²t/2 − v·x)/ħ`.
    pub galilean_phase: f64,
    /// `exact − galilean`, evaluated in a cancellation-free form.
    pub residual: f64,
    /// `|residual| / |galilean_phase|` (zero when both vanish).
    pub ratio: f64,
}

/// Compare the exact Lorentz remnant phase against the Galilean phase at
/// an event. The residual is
/// `m[(c²(γ−1) − v²/2) t − (γ−1) v·x]/ħ`, with
/// `c²(γ−1) − v²/2 = v²(2γ+1)(γ−1)/(2(γ+1))` — both factors computed
/// without subtractive cancellation so the O(v⁴) scaling is measurable
/// down to machine precision.
pub fn remnant_phase_check(m: f64, v: Vec3, c: f64, e: &Event) -> Result<RemnantReport, WaveError> {
    let speed = v.norm();
    if speed >= c {
        return Err(WaveError::SuperluminalRemnant { speed, c });
    }
    let beta_sq = v.norm_sq() / (c * c);
    let gamma = 1.0 / (1.0 - beta_sq).sqrt();
    // γ − 1 = γ²β²/(γ + 1), stable for small β
    let gamma_m1 = gamma * gamma * beta_sq / (gamma + 1.0);
    // c²(γ−1) − v²/2 = v²(2γ+1)(γ−1)/(2(γ+1))
    let time_coeff = v.norm_sq() * (2.0 * gamma + 1.0) * gamma_m1 / (2.0 * (gamma + 1.0));

    let galilean_phase = delta_phase(m, e, v) / HBAR;
    let residual = m * (time_coeff * e.t - gamma_m1 * v.dot(e.x)) / HBAR;
    let exact_phase = galilean_phase + residual;
    let ratio = if galilean_phase != 0.0 {
        (residual / galilean_phase).abs()
    } else {
        0.0
    };

    Ok(RemnantReport {
        exact_phase,
        galilean_phase,
        residual,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_superluminal() {
        let e = Event::new(Vec3::along_x(1.0), 1.0);
        assert!(remnant_phase_check(1.0, Vec3::along_x(2.0), 1.0, &e).is_err());
    }

    #[test]
    fn zero_velocity_gives_zero_phases() {
        let e = Event::new(Vec3::along_x(1.0), 1.0);
        let report = remnant_phase_check(1.0, Vec3::ZERO, 1.0, &e).unwrap();
        assert_eq!(report.exact_phase, 0.0);
        assert_eq!(report.galilean_phase, 0.0);
        assert_eq!(report.residual, 0.0);
    }

    #[test]
    fn stable_residual_matches_direct_lorentz() {
        // at moderate β compare against the directly computed t′ − t
        let m = 1.0;
        let c = 1.0;
        let v = Vec3::along_x(0.1);
        let e = Event::new(Vec3::new(1.0, 0.5, -0.3), 2.0);
        let report = remnant_phase_check(m, v, c, &e).unwrap();
        let gamma = 1.0 / (1.0 - 0.01f64).sqrt();
        let exact = m * c * c * ((gamma - 1.0) * e.t - gamma * v.dot(e.x) / (c * c)) / HBAR;
        assert!((report.exact_phase - exact).abs() <= 1e-12 * exact.abs().max(1.0));
    }

    #[test]
    fn collinear_event_ratio_bound() {
        // v/c = 1e-3, x = t = m = ħ = c = 1: residual/|Δ_m| ≤ 1e-6
        let report = remnant_phase_check(
            1.0,
            Vec3::along_x(1e-3),
            1.0,
            &Event::new(Vec3::along_x(1.0), 1.0),
        )
        .unwrap();
        assert!(report.ratio <= 1e-6, "ratio {}", report.ratio);
    }

    #[test]
    fn perpendicular_event_residual_scales_as_v4() {
        // with x ⟂ v the residual is purely the time coefficient: clean v⁴
        let e = Event::new(Vec3::new(0.0, 1.0, 0.0), 1.0);
        let r1 = remnant_phase_check(1.0, Vec3::along_x(1e-2), 1.0, &e)
            .unwrap()
            .residual;
        let r2 = remnant_phase_check(1.0, Vec3::along_x(5e-3), 1.0, &e)
            .unwrap()
            .residual;
        let r3 = remnant_phase_check(1.0, Vec3::along_x(2.5e-3), 1.0, &e)
            .unwrap()
            .residual;
        for ratio in [r1 / r2, r2 / r3] {
            assert!((ratio - 16.0).abs() <= 16.0 * 0.2, "ratio {ratio}");
        }
        // leading coefficient is 3mv⁴t/8ħ with an O(v²) relative correction
        assert!((r1 - 3.0 * 1e-8 / 8.0).abs() <= 2e-4 * r1.abs());
    }
}
