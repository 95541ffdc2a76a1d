//! Uniform periodic spatial grid and its discrete-Fourier momentum lattice.

use super::state::WaveError;
use serde::{Deserialize, Serialize};

/// Periodic grid of `n` points on `[x_min, x_max)`; `n` must be a power of
/// two (≥ 16) so the spectral transforms stay cheap and exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid1D {
    n: usize,
    x_min: f64,
    x_max: f64,
}

impl Grid1D {
    pub fn new(n: usize, x_min: f64, x_max: f64) -> Result<Grid1D, WaveError> {
        if n < 16 || !n.is_power_of_two() {
            return Err(WaveError::BadGridSize { n });
        }
        if x_max <= x_min || !x_min.is_finite() || !x_max.is_finite() {
            return Err(WaveError::BadGridBounds { x_min, x_max });
        }
        Ok(Grid1D { n, x_min, x_max })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn extent(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn dx(&self) -> f64 {
        self.extent() / self.n as f64
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_min + self.dx() * j as f64
    }

    pub fn positions(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.x(j)).collect()
    }

    /// Wavenumber of FFT bin `j` on the standard conjugate lattice:
    /// `2π j / L` for `j < n/2`, shifted to the negative branch above.
    pub fn wavenumber(&self, j: usize) -> f64 {
        let l = self.extent();
        let j = j as isize;
        let n = self.n as isize;
        let wrapped = if j < n / 2 { j } else { j - n };
        2.0 * std::f64::consts::PI * wrapped as f64 / l
    }

    pub fn wavenumbers(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.wavenumber(j)).collect()
    }
}
