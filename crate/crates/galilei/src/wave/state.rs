//! Mass channels, superposed states, and scalar potentials.

use super::grid::Grid1D;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WaveError {
    #[error("grid size {n} must be a power of two and at least 16")]
    BadGridSize { n: usize },
    #[error("grid bounds [{x_min}, {x_max}) are invalid")]
    BadGridBounds { x_min: f64, x_max: f64 },
    #[error("state needs at least one mass channel")]
    NoChannels,
    #[error("channel field length {got} does not match grid size {want}")]
    FieldLengthMismatch { got: usize, want: usize },
    #[error("mass {mass} is invalid: need |m| ≥ {floor} and Im(m) ≤ 0")]
    BadMass { mass: Complex64, floor: f64 },
    #[error("time translation (b = {b}) under a potential must go through propagation")]
    TimeShiftWithPotential { b: f64 },
    #[error("element has transverse components; the 1-d engine acts along x only")]
    TransverseElement,
    #[error("spatial shift {shift} is not aligned with the grid spacing {dx}")]
    MisalignedShift { shift: f64, dx: f64 },
    #[error("potential sample at index {index} is not finite")]
    NonFinitePotential { index: usize },
    #[error("sampled potential length {got} does not match grid size {want}")]
    PotentialLengthMismatch { got: usize, want: usize },
    #[error("states live on different grids")]
    GridMismatch,
    #[error("operation needs a single channel, state has {got}")]
    NotSingleChannel { got: usize },
    #[error("operation needs a real mass, channel has {mass}")]
    ComplexMassNotAllowed { mass: Complex64 },
    #[error("operation needs a complex mass channel")]
    RealMassNotAllowed,
    #[error("source potential must vanish, got a nonzero one")]
    SourcePotentialNotZero,
    #[error("initial momentum profiles differ in L² by {l2}, above {tol}")]
    ProfileMismatch { l2: f64, tol: f64 },
    #[error("time step must be finite and nonzero, got {dt}")]
    BadTimeStep { dt: f64 },
    #[error("remnant check needs |v| = {speed} below c = {c}")]
    SuperluminalRemnant { speed: f64, c: f64 },
    #[error("mass mismatch: klein-gordon state has {kg}, schrödinger channel has {sch}")]
    MassMismatch { kg: f64, sch: f64 },
}

/// Smallest |m| accepted for a channel; the kinetic term divides by m.
pub const MASS_FLOOR: f64 = 1e-6;

/// A complex field tagged with a (possibly complex) mass. `Im m ≤ 0`
/// encodes an unstable particle; the sign convention follows the channel
/// phase `e^{−i m s/ħ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct MassChannel {
    pub mass: Complex64,
    pub amplitudes: Vec<Complex64>,
}

impl MassChannel {
    pub fn new(mass: Complex64, amplitudes: Vec<Complex64>) -> Result<Self, WaveError> {
        if mass.norm() < MASS_FLOOR || mass.im > 0.0 {
            return Err(WaveError::BadMass {
                mass,
                floor: MASS_FLOOR,
            });
        }
        Ok(MassChannel { mass, amplitudes })
    }

    pub fn real(mass: f64, amplitudes: Vec<Complex64>) -> Result<Self, WaveError> {
        Self::new(Complex64::new(mass, 0.0), amplitudes)
    }

    /// Discrete L² norm with measure dx.
    pub fn norm(&self, dx: f64) -> f64 {
        (self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>() * dx).sqrt()
    }
}

/// A nonempty list of mass channels sharing one grid at a common reference
/// time. Channels with exactly equal masses are merged by amplitude
/// addition on construction, so masses are pairwise distinct afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperposedState {
    pub grid: Grid1D,
    pub channels: Vec<MassChannel>,
    pub time: f64,
}

impl SuperposedState {
    pub fn new(grid: Grid1D, channels: Vec<MassChannel>, time: f64) -> Result<Self, WaveError> {
        if channels.is_empty() {
            return Err(WaveError::NoChannels);
        }
        let mut merged: Vec<MassChannel> = Vec::with_capacity(channels.len());
        for ch in channels {
            if ch.amplitudes.len() != grid.len() {
                return Err(WaveError::FieldLengthMismatch {
                    got: ch.amplitudes.len(),
                    want: grid.len(),
                });
            }
            match merged.iter_mut().find(|m| m.mass == ch.mass) {
                Some(existing) => {
                    for (dst, src) in existing.amplitudes.iter_mut().zip(&ch.amplitudes) {
                        *dst += src;
                    }
                }
                None => merged.push(ch),
            }
        }
        Ok(SuperposedState {
            grid,
            channels: merged,
            time,
        })
    }

    pub fn single(grid: Grid1D, channel: MassChannel, time: f64) -> Result<Self, WaveError> {
        Self::new(grid, vec![channel], time)
    }

    pub fn total_norm(&self) -> f64 {
        let dx = self.grid.dx();
        self.channels
            .iter()
            .map(|ch| {
                let n = ch.norm(dx);
                n * n
            })
            .sum::<f64>()
            .sqrt()
    }

    /// The only channel of a single-channel state.
    pub fn sole_channel(&self) -> Result<&MassChannel, WaveError> {
        if self.channels.len() != 1 {
            return Err(WaveError::NotSingleChannel {
                got: self.channels.len(),
            });
        }
        Ok(&self.channels[0])
    }

    /// L² distance to another state, matching channels by mass. Missing
    /// channels count with full weight.
    pub fn l2_distance(&self, other: &SuperposedState) -> Result<f64, WaveError> {
        if self.grid != other.grid {
            return Err(WaveError::GridMismatch);
        }
        let dx = self.grid.dx();
        let mut sum = 0.0;
        for ch in &self.channels {
            match other.channels.iter().find(|o| o.mass == ch.mass) {
                Some(o) => {
                    sum += ch
                        .amplitudes
                        .iter()
                        .zip(&o.amplitudes)
                        .map(|(a, b)| (a - b).norm_sqr())
                        .sum::<f64>();
                }
                None => sum += ch.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>(),
            }
        }
        for o in &other.channels {
            if !self.channels.iter().any(|ch| ch.mass == o.mass) {
                sum += o.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>();
            }
        }
        Ok((sum * dx).sqrt())
    }
}

/// Scalar potential V(x, t). The linear tag is mass-scaled, matching a
/// uniform gravitational field `V = −m g x`; the harmonic tag supports a
/// center drifting at constant velocity, which is what a boosted harmonic
/// trap looks like.
#[derive(Debug, Clone, PartialEq)]
pub enum Potential {
    Zero,
    /// `V(x) = −m g x` per channel of mass m (real part).
    Linear {
        g: f64,
    },
    /// `V(x, t) = ½ k (x − center − center_velocity t)²`.
    Harmonic {
        stiffness: f64,
        center: f64,
        center_velocity: f64,
    },
    /// Static field sampled on the grid.
    Sampled {
        values: Vec<f64>,
    },
}

impl Potential {
    pub fn is_zero(&self) -> bool {
        matches!(self, Potential::Zero)
    }

    /// Sample at grid index `j`, position `x`, time `t`, for a channel of
    /// real mass part `m_re`.
    pub fn sample(&self, j: usize, x: f64, t: f64, m_re: f64) -> f64 {
        match self {
            Potential::Zero => 0.0,
            Potential::Linear { g } => -m_re * g * x,
            Potential::Harmonic {
                stiffness,
                center,
                center_velocity,
            } => {
                let d = x - center - center_velocity * t;
                0.5 * stiffness * d * d
            }
            Potential::Sampled { values } => values[j],
        }
    }

    /// Validate sampled values against the grid.
    pub fn validate(&self, grid: &Grid1D) -> Result<(), WaveError> {
        if let Potential::Sampled { values } = self {
            if values.len() != grid.len() {
                return Err(WaveError::PotentialLengthMismatch {
                    got: values.len(),
                    want: grid.len(),
                });
            }
            if let Some(index) = values.iter().position(|v| !v.is_finite()) {
                return Err(WaveError::NonFinitePotential { index });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid1D {
        Grid1D::new(16, -4.0, 4.0).unwrap()
    }

    #[test]
    fn equal_masses_merge() {
        let a = MassChannel::real(1.0, vec![Complex64::new(1.0, 0.0); 16]).unwrap();
        let b = MassChannel::real(1.0, vec![Complex64::new(0.5, 0.0); 16]).unwrap();
        let c = MassChannel::real(2.0, vec![Complex64::new(0.25, 0.0); 16]).unwrap();
        let state = SuperposedState::new(grid(), vec![a, b, c], 0.0).unwrap();
        assert_eq!(state.channels.len(), 2);
        assert_eq!(state.channels[0].amplitudes[0], Complex64::new(1.5, 0.0));
    }

    #[test]
    fn rejects_empty_and_mismatched() {
        assert_eq!(
            SuperposedState::new(grid(), vec![], 0.0).unwrap_err(),
            WaveError::NoChannels
        );
        let short = MassChannel::real(1.0, vec![Complex64::default(); 8]).unwrap();
        assert!(matches!(
            SuperposedState::new(grid(), vec![short], 0.0).unwrap_err(),
            WaveError::FieldLengthMismatch { .. }
        ));
    }

    #[test]
    fn rejects_bad_masses() {
        assert!(MassChannel::real(0.0, vec![]).is_err());
        assert!(MassChannel::new(Complex64::new(1.0, 0.1), vec![]).is_err());
        assert!(MassChannel::new(Complex64::new(1.0, -0.1), vec![]).is_ok());
    }

    #[test]
    fn potential_samples() {
        let v = Potential::Linear { g: 0.5 };
        assert_eq!(v.sample(0, 2.0, 0.0, 1.0), -1.0);
        let h = Potential::Harmonic {
            stiffness: 2.0,
            center: 0.0,
            center_velocity: 1.0,
        };
        assert_eq!(h.sample(0, 3.0, 1.0, 1.0), 4.0);
        let s = Potential::Sampled {
            values: vec![f64::NAN; 16],
        };
        assert!(matches!(
            s.validate(&grid()),
            Err(WaveError::NonFinitePotential { index: 0 })
        ));
    }
}
