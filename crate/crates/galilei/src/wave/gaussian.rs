//! Closed-form free Gaussian wavepacket, used both as a state factory and
//! as the analytic reference that the spectral propagator is checked
//! against. The formula is evaluated pointwise and never touches the FFT
//! path.

use super::grid::Grid1D;
use super::state::{MassChannel, SuperposedState, WaveError};
use crate::HBAR;
use num_complex::Complex64;

/// Parameters of a free Gaussian packet: initial width σ₀ (the standard
/// deviation of |ψ|² at t = 0), center x₀ and carrier wavenumber k₀.
#[derive(Debug, Clone, Copy)]
pub struct GaussianPacket {
    pub sigma: f64,
    pub x0: f64,
    pub k0: f64,
}

impl GaussianPacket {
    pub fn new(sigma: f64, x0: f64, k0: f64) -> Self {
        assert!(sigma > 0.0);
        GaussianPacket { sigma, x0, k0 }
    }

    /// Exact solution of `iħ∂ₜψ = (mc² − ħ²∂ₓₓ/2m)ψ` with this packet as
    /// the t = 0 initial condition:
    ///
    /// `ψ(x,t) = (2πσ₀²)^{-1/4} (1 + iβ/σ₀²)^{-1/2}
    ///           exp(−(x − x₀ − v₀t)² / (4σ₀²(1 + iβ/σ₀²)))
    ///           exp(i(k₀(x − x₀) − ħk₀²t/2m − mc²t/ħ))`
    ///
    /// with `β = ħt/2m` and `v₀ = ħk₀/m`.
    pub fn value(&self, x: f64, t: f64, mass: f64, c: f64) -> Complex64 {
        let beta = HBAR * t / (2.0 * mass);
        let spread = Complex64::new(1.0, beta / (self.sigma * self.sigma));
        let norm =
            (2.0 * std::f64::consts::PI * self.sigma * self.sigma).powf(-0.25) / spread.sqrt();
        let dx = x - self.x0 - HBAR * self.k0 / mass * t;
        let envelope = (-(dx * dx) / (4.0 * self.sigma * self.sigma * spread)).exp();
        let phase = Complex64::from_polar(
            1.0,
            self.k0 * (x - self.x0)
                - HBAR * self.k0 * self.k0 * t / (2.0 * mass)
                - mass * c * c * t / HBAR,
        );
        norm * envelope * phase
    }

    /// Sample the packet on a grid at time `t`.
    pub fn sample(&self, grid: &Grid1D, t: f64, mass: f64, c: f64) -> Vec<Complex64> {
        (0..grid.len())
            .map(|j| self.value(grid.x(j), t, mass, c))
            .collect()
    }

    /// Distance from the packet (at time `t`, width grown accordingly) to
    /// the nearest grid boundary, in units of the instantaneous width.
    /// Scenario configs should keep this at 5 or more.
    pub fn boundary_margin_sigmas(&self, grid: &Grid1D, t: f64, mass: f64) -> f64 {
        let beta = HBAR * t / (2.0 * mass);
        let width = self.sigma * (1.0 + (beta / (self.sigma * self.sigma)).powi(2)).sqrt();
        let center = self.x0 + HBAR * self.k0 / mass * t;
        let dist = (center - grid.x_min()).min(grid.x_max() - center);
        dist / width
    }
}

/// Single-channel state holding a free Gaussian at t = 0.
pub fn free_gaussian(
    grid: Grid1D,
    packet: GaussianPacket,
    mass: f64,
    c: f64,
) -> Result<SuperposedState, WaveError> {
    let field = packet.sample(&grid, 0.0, mass, c);
    SuperposedState::single(grid, MassChannel::real(mass, field)?, 0.0)
}
