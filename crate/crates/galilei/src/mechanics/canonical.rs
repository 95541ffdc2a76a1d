//! Canonical transformations realizing the Galilean boost on phase space.
//!
//! The coordinate change generated by the type-2 function `F₂ = P·(q − v t)`
//! alone does not preserve the dispersion relation `E = mc² + p²/2m`; the
//! further type-3 transformation `F₃ = −Q·(p − m v) + ½ m v² t` restores it.
//! Their composite is the full boost map
//! `(E, p) ↦ (E − v·p + ½ m v², p − m v)`, which preserves the on-shell
//! surface exactly.

use crate::vec3::Vec3;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MechanicsError {
    #[error("speed {v} must satisfy 0 ≤ v < c = {c}")]
    SpeedOutOfRange { v: f64, c: f64 },
    #[error("trajectory needs at least {min} samples, got {got}")]
    TooFewSamples { got: usize, min: usize },
}

/// Point of extended phase space carrying position, momentum and an
/// explicit energy. Keeping E as an independent field makes off-shell
/// states representable, so preservation of the on-shell constraint is a
/// checkable property rather than a tautology.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseState {
    pub q: Vec3,
    pub p: Vec3,
    pub energy: f64,
    pub mass: f64,
    pub time: f64,
}

impl PhaseState {
    pub fn new(q: Vec3, p: Vec3, energy: f64, mass: f64, time: f64) -> Self {
        PhaseState {
            q,
            p,
            energy,
            mass,
            time,
        }
    }

    /// State on the dispersion surface `E = mc² + p²/2m`.
    pub fn on_shell(q: Vec3, p: Vec3, mass: f64, time: f64, c: f64) -> Self {
        let energy = mass * c * c + p.norm_sq() / (2.0 * mass);
        PhaseState {
            q,
            p,
            energy,
            mass,
            time,
        }
    }

    /// Relative deviation from the dispersion surface.
    pub fn off_shell_error(&self, c: f64) -> f64 {
        let want = self.mass * c * c + self.p.norm_sq() / (2.0 * self.mass);
        (self.energy - want).abs() / want.abs().max(1.0)
    }

    /// Coordinate change generated by `F₂ = P·(q − v t)`:
    /// `q′ = q − v t`, `p′ = p`, `E′ = E − v·p`.
    pub fn f2_map(&self, v: Vec3) -> PhaseState {
        PhaseState {
            q: self.q - v * self.time,
            p: self.p,
            energy: self.energy - v.dot(self.p),
            ..*self
        }
    }

    /// Transformation generated by `F₃ = −Q·(p − m v) + ½ m v² t`:
    /// `q` unchanged, `P = p − m v`, `K = H + ½ m v²`.
    pub fn f3_map(&self, v: Vec3) -> PhaseState {
        PhaseState {
            q: self.q,
            p: self.p - v * self.mass,
            energy: self.energy + 0.5 * self.mass * v.norm_sq(),
            ..*self
        }
    }

    /// Full boost map `F₃ ∘ F₂`, written directly:
    /// `(E″, p″) = (E − v·p + ½ m v², p − m v)`, `q″ = q − v t`.
    ///
    /// Kept as an independent formula so the composite of [`Self::f2_map`]
    /// and [`Self::f3_map`] can be checked against it.
    pub fn composed_boost_map(&self, v: Vec3) -> PhaseState {
        PhaseState {
            q: self.q - v * self.time,
            p: self.p - v * self.mass,
            energy: self.energy - v.dot(self.p) + 0.5 * self.mass * v.norm_sq(),
            ..*self
        }
    }
}

/// Mass of a decaying particle inferred from non-relativistic momentum
/// conservation in two frames: `m = m₀ (1 + v/c)`.
pub fn decay_mass_ratio(m0: f64, v: f64, c: f64) -> Result<f64, MechanicsError> {
    if v < 0.0 || v >= c {
        return Err(MechanicsError::SpeedOutOfRange { v, c });
    }
    Ok(m0 * (1.0 + v / c))
}
