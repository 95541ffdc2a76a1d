//! The boosted free Lagrangian differs from the unboosted one by a total
//! time derivative, `L′ − L = dΔ_m/dt`, so its integral along any path
//! depends only on the endpoints. This module integrates the gap
//! numerically and compares it with the endpoint difference of the boost
//! phase.

use super::canonical::MechanicsError;
use crate::group::element::Event;
use crate::group::phase::delta_phase;
use crate::vec3::Vec3;

/// Minimum sample count accepted by [`boundary_term_check`].
pub const MIN_SAMPLES: usize = 8;

/// Uniformly sampled classical path `x(t)`.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub samples: Vec<Vec3>,
    pub t0: f64,
    pub dt: f64,
    pub mass: f64,
}

impl Trajectory {
    pub fn new(samples: Vec<Vec3>, t0: f64, dt: f64, mass: f64) -> Self {
        assert!(
            samples.len() >= 2,
            "a trajectory needs at least two samples"
        );
        assert!(dt > 0.0, "sample spacing must be positive");
        Trajectory {
            samples,
            t0,
            dt,
            mass,
        }
    }

    /// Sample a callable path on a uniform time mesh.
    pub fn from_path(path: impl Fn(f64) -> Vec3, t0: f64, t1: f64, n: usize, mass: f64) -> Self {
        assert!(n >= 2 && t1 > t0);
        let dt = (t1 - t0) / (n - 1) as f64;
        let samples = (0..n).map(|i| path(t0 + dt * i as f64)).collect();
        Trajectory {
            samples,
            t0,
            dt,
            mass,
        }
    }

    pub fn end_time(&self) -> f64 {
        self.t0 + self.dt * (self.samples.len() - 1) as f64
    }
}

/// Numerical comparison of the Lagrangian gap integral against the
/// endpoint difference of the boost phase.
#[derive(Debug, Clone)]
pub struct BoundaryReport {
    /// Cumulative midpoint-rule integral of `L′ − L` after each interval.
    pub gap_curve: Vec<f64>,
    /// Total gap integral `∫ (L′ − L) dt`.
    pub gap_integral: f64,
    /// `Δ_m(end) − Δ_m(start)` evaluated from the boost phase.
    pub delta_endpoints: f64,
    /// Gap integral recomputed at half resolution (Richardson check).
    pub coarse_gap_integral: f64,
    /// `|gap_integral − delta_endpoints|`.
    pub mismatch: f64,
}

fn midpoint_gap_integral(samples: &[Vec3], dt: f64, mass: f64, v: Vec3) -> (Vec<f64>, f64) {
    let mut curve = Vec::with_capacity(samples.len() - 1);
    let mut total = 0.0;
    for pair in samples.windows(2) {
        let xdot = (pair[1] - pair[0]) * (1.0 / dt);
        let gap = 0.5 * mass * (xdot - v).norm_sq() - 0.5 * mass * xdot.norm_sq();
        total += gap * dt;
        curve.push(total);
    }
    (curve, total)
}

/// Integrates `L′ − L` along the path with the midpoint rule and returns it
/// together with `Δ_m(end) − Δ_m(start)`; the two agree within quadrature
/// tolerance for any path because the gap is a total derivative.
pub fn boundary_term_check(traj: &Trajectory, v: Vec3) -> Result<BoundaryReport, MechanicsError> {
    if traj.samples.len() < MIN_SAMPLES {
        return Err(MechanicsError::TooFewSamples {
            got: traj.samples.len(),
            min: MIN_SAMPLES,
        });
    }

    let (gap_curve, gap_integral) = midpoint_gap_integral(&traj.samples, traj.dt, traj.mass, v);

    // half resolution: every other sample, doubled spacing; an odd interval
    // count leaves one fine interval at the end, integrated at full step
    let coarse: Vec<Vec3> = traj.samples.iter().copied().step_by(2).collect();
    let (_, mut coarse_gap_integral) = midpoint_gap_integral(&coarse, 2.0 * traj.dt, traj.mass, v);
    if (traj.samples.len() - 1) % 2 == 1 {
        let tail = &traj.samples[traj.samples.len() - 2..];
        let (_, tail_integral) = midpoint_gap_integral(tail, traj.dt, traj.mass, v);
        coarse_gap_integral += tail_integral;
    }

    let start = Event::new(traj.samples[0], traj.t0);
    let end = Event::new(*traj.samples.last().unwrap(), traj.end_time());
    let delta_endpoints = delta_phase(traj.mass, &end, v) - delta_phase(traj.mass, &start, v);

    Ok(BoundaryReport {
        mismatch: (gap_integral - delta_endpoints).abs(),
        gap_curve,
        gap_integral,
        delta_endpoints,
        coarse_gap_integral,
    })
}
