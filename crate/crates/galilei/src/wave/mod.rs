//! Discretized quantum states on a periodic 1-d grid and every dynamical
//! check built on them: split-step propagation with the rest-energy term,
//! unitary actions of the extended group on mass-channel superpositions,
//! Bargmann-loop interference, complex-mass decay, the mass-operator form
//! of the Schrödinger equation, accelerated frames, and the Klein-Gordon
//! dispersion comparison.
//!
//! States are finite sums over mass eigenvalues ("channels"); the channel
//! carrying mass `m` represents the fifth-coordinate dependence
//! `e^{−i m s/ħ}`, so the mass operator `iħ∂_s` has eigenvalue `+m`. All
//! operations are pure: they take a state by reference and return a new
//! one, so concurrent use on distinct states is unrestricted.

pub mod accelerated;
pub mod fourier;
pub mod gaussian;
pub mod grid;
pub mod kg;
pub mod propagate;
pub mod remnant;
pub mod sch5;
pub mod state;
pub mod unitary;

pub use accelerated::{kappa_scan, scheqg_residual, to_accelerated_frame, CUBIC_FRAME_COEFFICIENT};
pub use gaussian::{free_gaussian, GaussianPacket};
pub use grid::Grid1D;
pub use kg::{kg_evolve, kg_nr_compare, KgCompareReport, KgState};
pub use propagate::propagate;
pub use remnant::{remnant_phase_check, RemnantReport};
pub use sch5::{reduce_sch5, Sch5Report};
pub use state::{MassChannel, Potential, SuperposedState, WaveError};
pub use unitary::{
    apply_unitary, bargmann_loop_apply, boost_complex_mass, coherent_density, s_averaged_density,
    ComplexBoostReport,
};
