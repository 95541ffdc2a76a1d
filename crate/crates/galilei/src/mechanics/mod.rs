//! Classical-side identities: canonical boost maps and dispersion
//! invariance, the Lagrangian boundary term, and the 5-dimensional
//! Galilean metric and Lagrangian.

pub mod boundary;
pub mod canonical;
pub mod metric;

pub use boundary::{boundary_term_check, BoundaryReport, Trajectory};
pub use canonical::{decay_mass_ratio, MechanicsError, PhaseState};
pub use metric::{inner_product5, lagrangian5, lagrangian5_via_metric, Metric5};
