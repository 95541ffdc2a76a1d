//! Free Klein-Gordon states as positive-frequency plane-wave
//! decompositions with the exact dispersion `ω(k) = c √(k² + m²c²/ħ²)`,
//! and the comparison against Schrödinger evolution after stripping the
//! rest-energy phase.

use super::fourier::Spectral;
use super::grid::Grid1D;
use super::state::{SuperposedState, WaveError};
use crate::HBAR;
use num_complex::Complex64;

/// Free Klein-Gordon state: coefficients over the momentum lattice, field
/// synthesized as `φ(x_j) = Σ_k c_k e^{i k (x_j − x_min)}` (FFT bin order).
#[derive(Debug, Clone, PartialEq)]
pub struct KgState {
    pub grid: Grid1D,
    pub mass: f64,
    pub c: f64,
    pub coeffs: Vec<Complex64>,
    pub time: f64,
}

impl KgState {
    /// Build from a position-space field at t = 0.
    pub fn from_field(
        grid: Grid1D,
        field: &[Complex64],
        mass: f64,
        c: f64,
    ) -> Result<KgState, WaveError> {
        if field.len() != grid.len() {
            return Err(WaveError::FieldLengthMismatch {
                got: field.len(),
                want: grid.len(),
            });
        }
        let spectral = Spectral::new(grid.len());
        let mut coeffs = field.to_vec();
        spectral.forward(&mut coeffs);
        let scale = 1.0 / grid.len() as f64;
        for z in coeffs.iter_mut() {
            *z *= scale;
        }
        Ok(KgState {
            grid,
            mass,
            c,
            coeffs,
            time: 0.0,
        })
    }

    /// Exact dispersion `ω(k) = c √(k² + m²c²/ħ²)`.
    pub fn omega(&self, k: f64) -> f64 {
        self.c * (k * k + (self.mass * self.c / HBAR).powi(2)).sqrt()
    }

    /// Dispersion with the rest frequency removed, `ω(k) − mc²/ħ`,
    /// evaluated in a cancellation-free form:
    /// `ħk²/(m (1 + √(1 + (ħk/mc)²)))`. This is what survives the
    /// rest-phase stripping and stays accurate for arbitrarily large c.
    pub fn omega_nr(&self, k: f64) -> f64 {
        let eps = (HBAR * k / (self.mass * self.c)).powi(2);
        HBAR * k * k / (self.mass * (1.0 + (1.0 + eps).sqrt()))
    }

    /// Synthesize the position-space field at the state's time.
    pub fn synthesize(&self) -> Vec<Complex64> {
        let spectral = Spectral::new(self.grid.len());
        let mut buf = self.coeffs.clone();
        spectral.inverse(&mut buf);
        for z in buf.iter_mut() {
            *z *= self.grid.len() as f64;
        }
        buf
    }

    /// Direct plane-wave summation of the field — the slow oracle the FFT
    /// synthesis is checked against.
    pub fn synthesize_direct(&self) -> Vec<Complex64> {
        let n = self.grid.len();
        (0..n)
            .map(|j| {
                let mut sum = Complex64::new(0.0, 0.0);
                for (bin, coeff) in self.coeffs.iter().enumerate() {
                    let phase = 2.0 * std::f64::consts::PI * (bin * j) as f64 / n as f64;
                    sum += coeff * Complex64::from_polar(1.0, phase);
                }
                sum
            })
            .collect()
    }
}

/// Evolve each coefficient by `exp(−i ω(k) dt)` per step (exact free
/// evolution, positive-frequency branch).
pub fn kg_evolve(state: &KgState, dt: f64, steps: usize) -> KgState {
    let mut out = state.clone();
    for (j, z) in out.coeffs.iter_mut().enumerate() {
        let k = state.grid.wavenumber(j);
        let total = state.omega(k) * dt * steps as f64;
        *z *= Complex64::from_polar(1.0, -total);
    }
    out.time += dt * steps as f64;
    out
}

/// Outcome of the Klein-Gordon vs Schrödinger comparison.
#[derive(Debug, Clone)]
pub struct KgCompareReport {
    /// L² mismatch of the initial fields (precondition, ≤ 1e-12).
    pub initial_mismatch: f64,
    /// Relative L² error between the stripped fields at the horizon.
    pub l2_error: f64,
    /// Comparison horizon.
    pub horizon: f64,
}

/// Compare free Klein-Gordon evolution against Schrödinger evolution of
/// the same initial profile over horizon `T`, after stripping the common
/// rest phase `e^{−i m c² t/ħ}` from both fields.
///
/// The stripped Klein-Gordon modes rotate at [`KgState::omega_nr`]; the
/// stripped Schrödinger modes rotate at `ħk²/2m`. Removing the shared
/// rest phase in closed form keeps the comparison meaningful at
/// arbitrarily large c, where forming the unstripped phases would drown
/// the O(1/c²) dispersion gap in rounding.
pub fn kg_nr_compare(
    kg: &KgState,
    sch: &SuperposedState,
    horizon: f64,
) -> Result<KgCompareReport, WaveError> {
    if kg.grid != sch.grid {
        return Err(WaveError::GridMismatch);
    }
    let channel = sch.sole_channel()?;
    if channel.mass.im != 0.0 {
        return Err(WaveError::ComplexMassNotAllowed { mass: channel.mass });
    }
    let mass = channel.mass.re;
    if mass != kg.mass {
        return Err(WaveError::MassMismatch {
            kg: kg.mass,
            sch: mass,
        });
    }

    // identical initial momentum profiles, compared in position space
    let kg_field = kg.synthesize();
    let dx = kg.grid.dx();
    let initial_mismatch = (kg_field
        .iter()
        .zip(&channel.amplitudes)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        * dx)
        .sqrt();
    let tol = 1e-12;
    if initial_mismatch > tol {
        return Err(WaveError::ProfileMismatch {
            l2: initial_mismatch,
            tol,
        });
    }

    // stripped spectra at the horizon; Parseval turns the coefficient
    // distance into the field L² distance
    let mut err_sq = 0.0;
    let mut norm_sq = 0.0;
    for (j, coeff) in kg.coeffs.iter().enumerate() {
        let k = kg.grid.wavenumber(j);
        let kg_phase = kg.omega_nr(k) * horizon;
        let sch_phase = HBAR * k * k / (2.0 * mass) * horizon;
        let diff = Complex64::from_polar(1.0, -kg_phase) - Complex64::from_polar(1.0, -sch_phase);
        err_sq += coeff.norm_sqr() * diff.norm_sqr();
        norm_sq += coeff.norm_sqr();
    }
    let l2_error = (err_sq / norm_sq).sqrt();

    Ok(KgCompareReport {
        initial_mismatch,
        l2_error,
        horizon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wave::gaussian::{free_gaussian, GaussianPacket};

    fn packet_state(c: f64) -> (KgState, SuperposedState) {
        let grid = Grid1D::new(1024, -20.0, 20.0).unwrap();
        let packet = GaussianPacket::new(1.0, 0.0, 0.0);
        let sch = free_gaussian(grid, packet, 1.0, c).unwrap();
        let kg = KgState::from_field(grid, &sch.channels[0].amplitudes, 1.0, c).unwrap();
        (kg, sch)
    }

    #[test]
    fn rest_frequency_at_zero_momentum() {
        let (kg, _) = packet_state(3.0);
        assert!((kg.omega(0.0) - kg.mass * kg.c * kg.c / HBAR).abs() <= 1e-12);
        assert_eq!(kg.omega_nr(0.0), 0.0);
    }

    #[test]
    fn massless_limit_phase_velocity() {
        let grid = Grid1D::new(64, -8.0, 8.0).unwrap();
        let kg = KgState {
            grid,
            mass: 1e-30,
            c: 2.0,
            coeffs: vec![Complex64::default(); 64],
            time: 0.0,
        };
        for j in [1usize, 5, 20] {
            let k = grid.wavenumber(j);
            assert!((kg.omega(k) / k.abs() - kg.c).abs() <= 1e-9);
        }
    }

    #[test]
    fn synthesis_matches_direct_summation() {
        let (kg, _) = packet_state(5.0);
        let evolved = kg_evolve(&kg, 0.05, 7);
        let fast = evolved.synthesize();
        let slow = evolved.synthesize_direct();
        let dx = kg.grid.dx();
        let err = (fast
            .iter()
            .zip(&slow)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            * dx)
            .sqrt();
        assert!(err <= 1e-12, "synthesis mismatch {err}");
    }

    #[test]
    fn omega_nr_is_stable_at_huge_c() {
        let (kg, _) = packet_state(1e6);
        let k: f64 = 2.0;
        let want = HBAR * k * k / (2.0 * kg.mass); // limit value
        let got = kg.omega_nr(k);
        assert!((got - want).abs() / want <= 1e-10);
        assert!(got < want); // subluminal correction is negative
    }

    #[test]
    fn stripped_error_vanishes_at_effectively_infinite_c() {
        let (kg, sch) = packet_state(1e6);
        let report = kg_nr_compare(&kg, &sch, 1.0).unwrap();
        assert!(report.initial_mismatch <= 1e-12);
        assert!(report.l2_error <= 1e-9, "error {}", report.l2_error);
    }

    #[test]
    fn doubling_c_quarters_the_error() {
        let (kg1, sch1) = packet_state(20.0);
        let (kg2, sch2) = packet_state(40.0);
        let e1 = kg_nr_compare(&kg1, &sch1, 1.0).unwrap().l2_error;
        let e2 = kg_nr_compare(&kg2, &sch2, 1.0).unwrap().l2_error;
        let ratio = e1 / e2;
        assert!((3.4..=4.6).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn zero_momentum_plane_wave_is_exact() {
        let grid = Grid1D::new(64, -8.0, 8.0).unwrap();
        let mut coeffs = vec![Complex64::default(); 64];
        coeffs[0] = Complex64::new(1.0, 0.0);
        let kg = KgState {
            grid,
            mass: 1.0,
            c: 10.0,
            coeffs: coeffs.clone(),
            time: 0.0,
        };
        let field = kg.synthesize();
        let sch = SuperposedState::single(
            grid,
            super::super::state::MassChannel::real(1.0, field).unwrap(),
            0.0,
        )
        .unwrap();
        let report = kg_nr_compare(&kg, &sch, 2.0).unwrap();
        assert!(report.l2_error <= 1e-14);
    }

    #[test]
    fn mismatched_profiles_are_rejected() {
        let (kg, _) = packet_state(5.0);
        let grid = kg.grid;
        let other = free_gaussian(grid, GaussianPacket::new(1.0, 1.0, 0.0), 1.0, 5.0).unwrap();
        assert!(matches!(
            kg_nr_compare(&kg, &other, 1.0),
            Err(WaveError::ProfileMismatch { .. })
        ));
    }

    #[test]
    fn mismatched_masses_are_rejected() {
        let (kg, _) = packet_state(5.0);
        let grid = kg.grid;
        let other = free_gaussian(grid, GaussianPacket::new(1.0, 0.0, 0.0), 2.0, 5.0).unwrap();
        assert!(matches!(
            kg_nr_compare(&kg, &other, 1.0),
            Err(WaveError::MassMismatch { .. })
        ));
    }
}
