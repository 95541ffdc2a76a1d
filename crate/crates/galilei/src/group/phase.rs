//! Boost phases and the group 2-cocycle.
//!
//! A boost of velocity `v` changes the wavefunction of a mass-`m` particle
//! by the phase `Δ_m(x, t) = m (v² t / 2 − v·x)`, written here for the frame
//! change `x′ = x − v t`. Composing two lifted elements produces the
//! cocycle `ω(g, g′) = exp(i m (v·a′ + ½ v² b′) / ħ)`, which is what makes
//! the plain-group representation projective.

use super::element::{Event, ExtendedGalileiElement, GalileiElement};
use super::fsum;
use crate::{Vec3, HBAR};
use num_complex::Complex64;

fn extension_term_parts(v: Vec3, a2: Vec3, b2: f64) -> f64 {
    let mut acc = fsum::Accumulator::new();
    fsum::dot3(v, a2, &mut acc);
    fsum::half_norm_sq_times(v, b2, &mut acc);
    acc.value()
}

/// Additive extension term `v · a′ + ½ v² b′` of the product `g · g′`.
///
/// This is the 2-cocycle of the central extension: it is exactly what the
/// central parameter picks up when two lifted plain-group elements are
/// multiplied.
pub fn extension_term(g: &ExtendedGalileiElement, g2: &ExtendedGalileiElement) -> f64 {
    extension_term_parts(g.v, g2.a, g2.b)
}

/// Plain-group version of [`extension_term`].
pub fn extension_term_plain(g: &GalileiElement, g2: &GalileiElement) -> f64 {
    extension_term_parts(g.v, g2.a, g2.b)
}

/// Boost phase `Δ_m(x, t) = m (v² t / 2 − v·x)` in units of action.
pub fn delta_phase(m: f64, e: &Event, v: crate::Vec3) -> f64 {
    m * (0.5 * v.norm_sq() * e.t - v.dot(e.x))
}

/// [`delta_phase`] continued to complex mass. The imaginary part encodes
/// the density mismatch seen by boosted observers of an unstable particle.
pub fn delta_phase_complex(m: Complex64, e: &Event, v: crate::Vec3) -> Complex64 {
    m * (0.5 * v.norm_sq() * e.t - v.dot(e.x))
}

/// Accumulate the geometric part `±(b_m + v·x + ½ v² t)` of a phase.
fn phase_geometry(sign: f64, e: &Event, g: &ExtendedGalileiElement, acc: &mut fsum::Accumulator) {
    acc.add(sign * g.bm);
    fsum::dot3(g.v * sign, e.x, acc);
    fsum::half_norm_sq_times(g.v, sign * e.t, acc);
}

/// Phase attached to a general extended element at the source event:
/// `Δ_m(x, t; g̃) = m (b_m + v·x + ½ v² t)`.
///
/// Derived by factoring `g̃ = time ∘ translation ∘ boost` with the boost
/// acting first; space and time translations carry no phase of their own,
/// so the whole phase is the boost phase at the source point plus the
/// central contribution. Under this convention the lift `g ↦ (0, b, a, v)`
/// produces the cocycle [`cocycle`] with no event dependence.
pub fn action_phase(m: f64, e: &Event, g: &ExtendedGalileiElement) -> f64 {
    let mut acc = fsum::Accumulator::new();
    phase_geometry(1.0, e, g, &mut acc);
    m * acc.value()
}

/// [`action_phase`] continued to complex mass.
pub fn action_phase_complex(m: Complex64, e: &Event, g: &ExtendedGalileiElement) -> Complex64 {
    m * (g.bm + g.v.dot(e.x) + 0.5 * g.v.norm_sq() * e.t)
}

/// 2-cocycle `ω(g, g′) = exp(i m (v·a′ + ½ v² b′) / ħ)` of the projective
/// representation, `U(g) U(g′) = ω(g, g′) U(g·g′)`.
///
/// Unimodular for real mass and independent of the evaluation event; see
/// [`cocycle_from_phases`] for the phase-composition route that exhibits
/// both properties.
pub fn cocycle(g: &GalileiElement, g2: &GalileiElement, m: f64) -> Complex64 {
    (Complex64::i() * m * extension_term_plain(g, g2) / HBAR).exp()
}

/// [`cocycle`] continued to complex mass. The result is no longer
/// unimodular: `|ω| = exp(−Im(m) ξ / ħ)` flags the unstable-particle case.
pub fn cocycle_complex(g: &GalileiElement, g2: &GalileiElement, m: Complex64) -> Complex64 {
    (Complex64::i() * m * extension_term_plain(g, g2) / HBAR).exp()
}

/// Cocycle evaluated through the composition of boost phases at an event:
///
/// `ω(g, g′) = exp(i [Δ_m(g′ ▷ x; g) + Δ_m(x; g′) − Δ_m(x; g·g′)] / ħ)`.
///
/// The composed-element term enters with a relative minus sign, and the
/// first term is evaluated at the image of the event under the *right*
/// factor; with that arrangement the result is independent of the event and
/// equals [`cocycle`].
pub fn cocycle_from_phases(
    g: &GalileiElement,
    g2: &GalileiElement,
    m: f64,
    e: &Event,
) -> Complex64 {
    let mut acc = fsum::Accumulator::new();
    phase_geometry(1.0, &g2.act_event(e), &g.lift(), &mut acc);
    phase_geometry(1.0, e, &g2.lift(), &mut acc);
    phase_geometry(-1.0, e, &g.compose(g2).lift(), &mut acc);
    (Complex64::i() * m * acc.value() / HBAR).exp()
}
