//! Exact closed-form operations in the rotation-free Galilei subgroup G_I
//! and its central extension G̃_I.
//!
//! Conventions used throughout the crate:
//!
//! - Group elements act *actively* on events: `g ▷ (x, t) = (x + v t + a, t + b)`.
//!   The textbook frame change `x′ = x − v t` is the action of the inverse
//!   boost element.
//! - In a product `g · g′` the right factor acts first, so that
//!   `(g · g′) ▷ e = g ▷ (g′ ▷ e)`.
//! - ħ = 1 ([`crate::HBAR`]); phases carry it explicitly for readability.

pub mod algebra;
pub mod checks;
pub mod element;
pub(crate) mod fsum;
pub mod lorentz;
pub mod phase;

pub use element::{bargmann_loop, Event, Event5, ExtendedGalileiElement, GalileiElement};
pub use lorentz::{lorentz_loop, AffineMap4, LorentzError, LorentzLoopReport};
pub use phase::{
    action_phase, action_phase_complex, cocycle, cocycle_complex, cocycle_from_phases, delta_phase,
    delta_phase_complex, extension_term,
};
