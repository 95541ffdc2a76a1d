//! Spectral workspace shared by the wave operations. A new workspace is
//! created per public operation, so nothing is shared across threads.

use super::grid::Grid1D;
use super::state::WaveError;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

pub(crate) struct Spectral {
    n: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl Spectral {
    pub fn new(n: usize) -> Spectral {
        let mut planner = FftPlanner::new();
        Spectral {
            n,
            fwd: planner.plan_fft_forward(n),
            inv: planner.plan_fft_inverse(n),
        }
    }

    /// Unnormalized forward transform (position → momentum bins).
    pub fn forward(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.n);
        self.fwd.process(buf);
    }

    /// Inverse transform normalized by 1/n, so forward ∘ inverse = id.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.n);
        self.inv.process(buf);
        let scale = 1.0 / self.n as f64;
        for z in buf.iter_mut() {
            *z *= scale;
        }
    }

    /// Translate the field by `dist`: `ψ(x) ↦ ψ(x − dist)`. Lattice-aligned
    /// shifts rotate the samples exactly; general shifts go through the
    /// spectral phase `e^{−i k dist}`.
    pub fn translate(&self, grid: &Grid1D, field: &mut [Complex64], dist: f64) {
        if dist == 0.0 {
            return;
        }
        let steps = dist / grid.dx();
        let rounded = steps.round();
        if (steps - rounded).abs() <= 1e-9 {
            let n = self.n as isize;
            let mut shift = (rounded as isize) % n;
            if shift < 0 {
                shift += n;
            }
            field.rotate_right(shift as usize);
            return;
        }
        self.forward(field);
        for (j, z) in field.iter_mut().enumerate() {
            *z *= Complex64::from_polar(1.0, -grid.wavenumber(j) * dist);
        }
        self.inverse(field);
    }

    /// Require a shift to fall on the lattice and return it in steps.
    pub fn aligned_steps(grid: &Grid1D, shift: f64) -> Result<isize, WaveError> {
        let steps = shift / grid.dx();
        let rounded = steps.round();
        if (steps - rounded).abs() > 1e-9 {
            return Err(WaveError::MisalignedShift {
                shift,
                dx: grid.dx(),
            });
        }
        Ok(rounded as isize)
    }

    /// Spectral second derivative of `field`.
    pub fn second_derivative(&self, grid: &Grid1D, field: &[Complex64]) -> Vec<Complex64> {
        let mut buf = field.to_vec();
        self.forward(&mut buf);
        for (j, z) in buf.iter_mut().enumerate() {
            let k = grid.wavenumber(j);
            *z *= -k * k;
        }
        self.inverse(&mut buf);
        buf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_identity() {
        let grid = Grid1D::new(64, -8.0, 8.0).unwrap();
        let spectral = Spectral::new(grid.len());
        let orig: Vec<Complex64> = (0..64)
            .map(|j| Complex64::new((grid.x(j) * 0.7).sin(), (grid.x(j) * 0.3).cos()))
            .collect();
        let mut buf = orig.clone();
        spectral.forward(&mut buf);
        spectral.inverse(&mut buf);
        for (a, b) in orig.iter().zip(&buf) {
            assert!((a - b).norm() <= 1e-13);
        }
    }

    #[test]
    fn aligned_translation_rotates_exactly() {
        let grid = Grid1D::new(32, 0.0, 32.0).unwrap();
        let spectral = Spectral::new(32);
        let mut field: Vec<Complex64> = (0..32).map(|j| Complex64::new(j as f64, 0.0)).collect();
        spectral.translate(&grid, &mut field, 3.0);
        assert_eq!(field[3], Complex64::new(0.0, 0.0));
        assert_eq!(field[0], Complex64::new(29.0, 0.0));
    }

    #[test]
    fn spectral_translation_of_plane_wave() {
        let grid = Grid1D::new(64, -8.0, 8.0).unwrap();
        let spectral = Spectral::new(64);
        let k = grid.wavenumber(3);
        let mut field: Vec<Complex64> = (0..64)
            .map(|j| Complex64::from_polar(1.0, k * grid.x(j)))
            .collect();
        let dist = 0.313; // deliberately off-lattice
        spectral.translate(&grid, &mut field, dist);
        for j in 0..64 {
            let want = Complex64::from_polar(1.0, k * (grid.x(j) - dist));
            assert!((field[j] - want).norm() <= 1e-12);
        }
    }

    #[test]
    fn second_derivative_of_mode() {
        let grid = Grid1D::new(64, -8.0, 8.0).unwrap();
        let spectral = Spectral::new(64);
        let k = grid.wavenumber(5);
        let field: Vec<Complex64> = (0..64)
            .map(|j| Complex64::from_polar(1.0, k * grid.x(j)))
            .collect();
        let lap = spectral.second_derivative(&grid, &field);
        for j in 0..64 {
            assert!((lap[j] + k * k * field[j]).norm() <= 1e-10);
        }
    }
}
