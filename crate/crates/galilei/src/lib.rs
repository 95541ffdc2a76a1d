//! Numerical laboratory for the rotation-free Galilei group, its central
//! extension, and their action on non-relativistic quantum states.
//!
//! The crate is organised in three layers:
//!
//! - [`group`]: exact closed-form group operations — composition, inverses,
//!   event actions in 3+1 and 5 dimensions, boost phases, the group
//!   2-cocycle, structure-constant extraction, and the affine Lorentz loop
//!   whose O(1/c²) remnant survives the non-relativistic limit.
//! - [`mechanics`]: classical-side identities — canonical boost maps and
//!   dispersion invariance, the Lagrangian boundary term, the 5-dimensional
//!   Galilean metric and Lagrangian, decay kinematics.
//! - [`wave`]: discretized quantum states on a periodic 1-d grid —
//!   split-step propagation with the rest-energy term, unitary actions of
//!   the extended group on mass-channel superpositions, Bargmann-loop
//!   interference, complex-mass decay, Klein-Gordon dispersion comparison,
//!   and uniformly accelerated frames.
//!
//! Internal units fix ħ = 1. The speed of light is a run parameter so that
//! O(1/c²) effects stay observable and their scaling can be measured.

pub mod group;
pub mod mechanics;
pub mod vec3;
pub mod wave;

pub use vec3::Vec3;

/// Reduced Planck constant in internal units.
pub const HBAR: f64 = 1.0;
