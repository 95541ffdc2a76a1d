//! Exact affine Lorentz maps and the boost–translation loop whose O(1/c²)
//! part survives as the Galilean phase.

use super::element::Event;
use crate::vec3::Vec3;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LorentzError {
    #[error("boost speed {speed} must be below c = {c}")]
    SuperluminalBoost { speed: f64, c: f64 },
}

/// Affine map on events: `e ↦ linear · e + shift`, with coordinates
/// ordered `(x₁, x₂, x₃, t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap4 {
    pub linear: [[f64; 4]; 4],
    pub shift: [f64; 4],
}

impl AffineMap4 {
    pub const IDENTITY: AffineMap4 = AffineMap4 {
        linear: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
        shift: [0.0; 4],
    };

    /// Pure spacetime translation by `(a, dt)`.
    pub fn translation(a: Vec3, dt: f64) -> AffineMap4 {
        AffineMap4 {
            shift: [a.x, a.y, a.z, dt],
            ..AffineMap4::IDENTITY
        }
    }

    /// Active Lorentz boost of velocity `v`: maps a worldline at rest onto
    /// one moving with velocity `v`.
    pub fn boost(v: Vec3, c: f64) -> Result<AffineMap4, LorentzError> {
        let speed = v.norm();
        if speed >= c {
            return Err(LorentzError::SuperluminalBoost { speed, c });
        }
        let beta_sq = v.norm_sq() / (c * c);
        let gamma = 1.0 / (1.0 - beta_sq).sqrt();
        let mut lin = [[0.0; 4]; 4];
        let n = [v.x, v.y, v.z];
        // x′ = x + (γ−1)(v̂·x)v̂ + γ v t;  t′ = γ (t + v·x/c²)
        let coef = if speed > 0.0 {
            (gamma - 1.0) / (speed * speed)
        } else {
            0.0
        };
        for i in 0..3 {
            for j in 0..3 {
                lin[i][j] = coef * n[i] * n[j];
            }
            lin[i][i] += 1.0;
            lin[i][3] = gamma * n[i];
            lin[3][i] = gamma * n[i] / (c * c);
        }
        lin[3][3] = gamma;
        Ok(AffineMap4 {
            linear: lin,
            shift: [0.0; 4],
        })
    }

    /// `self ∘ inner` — `inner` acts first.
    pub fn compose(&self, inner: &AffineMap4) -> AffineMap4 {
        let mut lin = [[0.0; 4]; 4];
        let mut shift = [0.0; 4];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    lin[i][j] += self.linear[i][k] * inner.linear[k][j];
                }
                shift[i] += self.linear[i][j] * inner.shift[j];
            }
            shift[i] += self.shift[i];
        }
        AffineMap4 { linear: lin, shift }
    }

    pub fn apply(&self, e: &Event) -> Event {
        let input = [e.x.x, e.x.y, e.x.z, e.t];
        let mut out = self.shift;
        for i in 0..4 {
            for j in 0..4 {
                out[i] += self.linear[i][j] * input[j];
            }
        }
        Event::new(Vec3::new(out[0], out[1], out[2]), out[3])
    }

    /// Largest deviation of the linear part from the identity.
    pub fn linear_identity_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((self.linear[i][j] - want).abs());
            }
        }
        worst
    }
}

/// Result of composing the exact boost–translation loop against its
/// O(1/c²) prediction.
#[derive(Debug, Clone)]
pub struct LorentzLoopReport {
    /// The composed loop. Its linear part is the identity up to roundoff,
    /// so the whole loop is a pure spacetime translation.
    pub map: AffineMap4,
    /// Exact spatial shift of the loop: `(γ−1)(v̂·a)v̂`.
    pub exact_shift_x: Vec3,
    /// Exact time shift of the loop: `γ v·a / c²`.
    pub exact_shift_t: f64,
    /// Predicted spatial shift `(v·a) v / 2c²`.
    pub predicted_shift_x: Vec3,
    /// Predicted time shift `v·a / c²`.
    pub predicted_shift_t: f64,
    /// `‖exact_x − predicted_x‖`; scales as O(v⁴/c⁴ · |a|).
    pub spatial_residual: f64,
    /// `|exact_t − predicted_t|`; scales as O(v³/c⁴ · |a|).
    pub time_residual: f64,
    /// `‖(Δx, c Δt)‖` of the residual.
    pub combined_residual: f64,
    /// `combined_residual / |a|` (zero when `a = 0`).
    pub relative_residual: f64,
    /// Roundoff-level deviation of the composed linear part from identity.
    pub linear_deviation: f64,
}

/// Composes the loop `B(v) · T(a) · B(−v) · T(−a)` — translate by −a,
/// boost by −v, translate by a, boost by v — from exact affine maps, and
/// compares its net spacetime shift with the O(1/c²) prediction
/// `(x + (v·a) v / 2c², t + v·a / c²)`.
///
/// The loop's linear part cancels exactly, leaving a pure translation
/// `((γ−1)(v̂·a)v̂, γ v·a / c²)`: a genuine time shift of order 1/c² that no
/// Galilean bookkeeping can remove. The spatial part of the residual is
/// O(v⁴); the time part carries a residual O(v³/c⁴) term from γ.
pub fn lorentz_loop(a: Vec3, v: Vec3, c: f64) -> Result<LorentzLoopReport, LorentzError> {
    let boost_fwd = AffineMap4::boost(v, c)?;
    let boost_bwd = AffineMap4::boost(-v, c)?;
    let map = boost_fwd
        .compose(&AffineMap4::translation(a, 0.0))
        .compose(&boost_bwd)
        .compose(&AffineMap4::translation(-a, 0.0));

    let exact_shift_x = Vec3::new(map.shift[0], map.shift[1], map.shift[2]);
    let exact_shift_t = map.shift[3];
    let va = v.dot(a);
    let predicted_shift_x = v * (va / (2.0 * c * c));
    let predicted_shift_t = va / (c * c);

    let dx = exact_shift_x - predicted_shift_x;
    let dt = exact_shift_t - predicted_shift_t;
    let spatial_residual = dx.norm();
    let time_residual = dt.abs();
    let combined_residual = (dx.norm_sq() + (c * dt) * (c * dt)).sqrt();
    let relative_residual = if a.norm() > 0.0 {
        combined_residual / a.norm()
    } else {
        0.0
    };

    Ok(LorentzLoopReport {
        linear_deviation: map.linear_identity_deviation(),
        map,
        exact_shift_x,
        exact_shift_t,
        predicted_shift_x,
        predicted_shift_t,
        spatial_residual,
        time_residual,
        combined_residual,
        relative_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_superluminal() {
        let err = lorentz_loop(Vec3::along_x(1.0), Vec3::along_x(2.0), 1.0).unwrap_err();
        assert_eq!(err, LorentzError::SuperluminalBoost { speed: 2.0, c: 1.0 });
    }

    #[test]
    fn boost_inverse_pair_cancels() {
        let v = Vec3::new(0.3, -0.1, 0.2);
        let fwd = AffineMap4::boost(v, 1.0).unwrap();
        let bwd = AffineMap4::boost(-v, 1.0).unwrap();
        let id = fwd.compose(&bwd);
        assert!(id.linear_identity_deviation() <= 1e-14);
        assert!(id.shift.iter().all(|s| s.abs() <= 1e-14));
    }

    #[test]
    fn prediction_values_at_reference_point() {
        // v = 0.1 x̂, a = x̂, c = 1: predicted t-shift 0.1, x-shift 0.005
        let report = lorentz_loop(Vec3::along_x(1.0), Vec3::along_x(0.1), 1.0).unwrap();
        assert!((report.predicted_shift_t - 0.1).abs() <= 1e-15);
        assert!((report.predicted_shift_x.x - 0.005).abs() <= 1e-15);
        // exact shift matches the closed-form conjugation result
        let gamma = 1.0 / (1.0 - 0.01f64).sqrt();
        assert!((report.exact_shift_x.x - (gamma - 1.0)).abs() <= 1e-14);
        assert!((report.exact_shift_t - gamma * 0.1).abs() <= 1e-14);
        assert!(report.linear_deviation <= 1e-13);
    }

    #[test]
    fn perpendicular_loop_is_identity() {
        let report = lorentz_loop(Vec3::along_x(1.0), Vec3::new(0.0, 0.3, 0.0), 1.0).unwrap();
        assert!(report.exact_shift_x.norm() <= 1e-14);
        assert!(report.exact_shift_t.abs() <= 1e-14);
    }

    #[test]
    fn spatial_residual_scales_as_v4() {
        // halving v must reduce the spatial residual ≈16×
        let a = Vec3::along_x(1.0);
        let r1 = lorentz_loop(a, Vec3::along_x(0.02), 1.0).unwrap();
        let r2 = lorentz_loop(a, Vec3::along_x(0.01), 1.0).unwrap();
        let ratio = r1.spatial_residual / r2.spatial_residual;
        assert!((ratio - 16.0).abs() <= 16.0 * 0.2, "ratio {ratio}");
    }

    #[test]
    fn loop_acts_as_pure_translation_on_events() {
        let a = Vec3::new(1.0, 0.5, -0.3);
        let v = Vec3::new(0.05, 0.02, 0.01);
        let report = lorentz_loop(a, v, 1.0).unwrap();
        let e = Event::new(Vec3::new(2.0, -1.0, 0.7), 1.3);
        let mapped = report.map.apply(&e);
        assert!((mapped.x - (e.x + report.exact_shift_x)).max_abs() <= 1e-12);
        assert!((mapped.t - (e.t + report.exact_shift_t)).abs() <= 1e-12);
    }
}
