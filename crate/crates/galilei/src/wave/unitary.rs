//! Unitary action of the extended group on mass-channel states.
//!
//! The representation follows from demanding that the 5-d field
//! `ψ(x, t, s) = Σ_k ψ_k(x, t) e^{−i m_k s/ħ}` transform as a scalar under
//! the faithful 5-d action, `[U(g̃)ψ](g̃ ▷ X) = ψ(X)`. Factoring
//! `g̃ = central(b_m) · time(b) · translation(a) · boost(v)` (boost acts
//! first), a channel of mass m at reference time τ maps to
//!
//! `ψ′(x) = e^{i m b_m/ħ} · e^{i m (v·(x − a) − ½ v² τ)/ħ} · ψ(x − a − v τ)`
//!
//! at reference time τ + b. This is a *true* representation: composing two
//! applications reproduces the extended product with no leftover phase, and
//! the composite translate/boost loop multiplies each channel by
//! `e^{i m a·v/ħ}` — the central phase of the loop element.
//!
//! The engine is one-dimensional: elements must have their `a` and `v`
//! along x. The full 3-vector group structure lives in [`crate::group`].

use super::fourier::Spectral;
use super::state::{MassChannel, Potential, SuperposedState, WaveError};
use crate::group::element::ExtendedGalileiElement;
use crate::HBAR;
use num_complex::Complex64;

fn axial_components(g: &ExtendedGalileiElement) -> Result<(f64, f64), WaveError> {
    if g.a.y != 0.0 || g.a.z != 0.0 || g.v.y != 0.0 || g.v.z != 0.0 {
        return Err(WaveError::TransverseElement);
    }
    Ok((g.a.x, g.v.x))
}

/// Apply `U(g̃)` to a state. Time translation is a relabeling of the
/// reference time (the snapshot of the translated state at τ + b is the
/// original snapshot at τ), which is only legitimate for free states, so a
/// nonzero `b` is rejected under a nonzero potential.
pub fn apply_unitary(
    g: &ExtendedGalileiElement,
    state: &SuperposedState,
    potential: &Potential,
) -> Result<SuperposedState, WaveError> {
    let (a, v) = axial_components(g)?;
    if g.b != 0.0 && !potential.is_zero() {
        return Err(WaveError::TimeShiftWithPotential { b: g.b });
    }

    let grid = state.grid;
    let tau = state.time;
    let spectral = Spectral::new(grid.len());
    let mut channels = Vec::with_capacity(state.channels.len());

    for ch in &state.channels {
        let m = ch.mass;
        let mut field = ch.amplitudes.clone();

        // boost: ψ(x) ← e^{i m (v x − ½ v² τ)/ħ} ψ(x − v τ)
        if v != 0.0 {
            spectral.translate(&grid, &mut field, v * tau);
            for (j, z) in field.iter_mut().enumerate() {
                let theta = v * grid.x(j) - 0.5 * v * v * tau;
                *z *= (Complex64::i() * m * theta / HBAR).exp();
            }
        }

        // spatial translation; it carries the baked-in boost phase along,
        // which is exactly the e^{i m v·(x−a)/ħ} the composite needs
        spectral.translate(&grid, &mut field, a);

        // central phase
        if g.bm != 0.0 {
            let central = (Complex64::i() * m * g.bm / HBAR).exp();
            for z in field.iter_mut() {
                *z *= central;
            }
        }

        channels.push(MassChannel {
            mass: m,
            amplitudes: field,
        });
    }

    SuperposedState::new(grid, channels, tau + g.b)
}

/// Apply the four-step loop translate(a) → boost(v) → translate(−a) →
/// boost(−v) and extract the per-channel phase factors, which equal
/// `e^{i m_k a·v/ħ}` while the spatial profile returns to its original
/// support.
pub fn bargmann_loop_apply(
    state: &SuperposedState,
    a: f64,
    v: f64,
) -> Result<(SuperposedState, Vec<Complex64>), WaveError> {
    let steps = [
        ExtendedGalileiElement::translation(crate::Vec3::along_x(a)),
        ExtendedGalileiElement::boost(crate::Vec3::along_x(v)),
        ExtendedGalileiElement::translation(crate::Vec3::along_x(-a)),
        ExtendedGalileiElement::boost(crate::Vec3::along_x(-v)),
    ];
    let mut out = state.clone();
    for g in &steps {
        out = apply_unitary(g, &out, &Potential::Zero)?;
    }

    let phases = state
        .channels
        .iter()
        .zip(&out.channels)
        .map(|(before, after)| {
            let mut inner = Complex64::new(0.0, 0.0);
            let mut norm_sq = 0.0;
            for (b, a) in before.amplitudes.iter().zip(&after.amplitudes) {
                inner += b.conj() * a;
                norm_sq += b.norm_sqr();
            }
            if norm_sq > 0.0 {
                inner / norm_sq
            } else {
                // the phase of an empty channel is indeterminate
                Complex64::new(1.0, 0.0)
            }
        })
        .collect();

    Ok((out, phases))
}

/// Coherent density `|Σ_k e^{−i m_k s/ħ} ψ_k(x)|²` at fifth coordinate s.
pub fn coherent_density(state: &SuperposedState, s: f64) -> Vec<f64> {
    let n = state.grid.len();
    let mut out = vec![0.0; n];
    let weights: Vec<Complex64> = state
        .channels
        .iter()
        .map(|ch| (-Complex64::i() * ch.mass * s / HBAR).exp())
        .collect();
    for j in 0..n {
        let mut sum = Complex64::new(0.0, 0.0);
        for (ch, w) in state.channels.iter().zip(&weights) {
            sum += w * ch.amplitudes[j];
        }
        out[j] = sum.norm_sqr();
    }
    out
}

/// Incoherent density `Σ_k |ψ_k(x)|²`: cross terms between distinct masses
/// average to zero over s.
pub fn s_averaged_density(state: &SuperposedState) -> Vec<f64> {
    let n = state.grid.len();
    let mut out = vec![0.0; n];
    for ch in &state.channels {
        for (o, z) in out.iter_mut().zip(&ch.amplitudes) {
            *o += z.norm_sqr();
        }
    }
    out
}

/// Density comparison for a boosted complex-mass channel.
#[derive(Debug, Clone)]
pub struct ComplexBoostReport {
    /// The boosted state.
    pub state: SuperposedState,
    /// Pointwise ratio `|ψ̃′(x − v τ)|² / |ψ̃(x)|²` where |ψ̃| is resolvable.
    pub ratios: Vec<f64>,
    /// Predicted ratio `exp(−2 Im Δ_m̃(x, τ)/ħ)` at the same points.
    pub predicted: Vec<f64>,
    /// Worst relative deviation between measured and predicted ratios.
    pub max_relative_deviation: f64,
    /// Fitted slope of `ln ratio` vs x.
    pub measured_log_slope: f64,
    /// `2 Im(m̃) v / ħ`.
    pub predicted_log_slope: f64,
}

/// Boost a complex-mass channel by the frame-change velocity `v` (the
/// group element applied is the boost by `−v`, whose action is
/// `x′ = x − v τ`) and verify the density mismatch
/// `|ψ̃′|² = e^{−2 Im(Δ_m̃)/ħ} |ψ̃|²` pointwise across the grid.
pub fn boost_complex_mass(
    state: &SuperposedState,
    v: f64,
) -> Result<ComplexBoostReport, WaveError> {
    let channel = state.sole_channel()?;
    let m = channel.mass;
    let tau = state.time;
    let grid = state.grid;

    // mapped points must land on the lattice for a pointwise comparison
    let shift_steps = Spectral::aligned_steps(&grid, -v * tau)?;

    let element = ExtendedGalileiElement::boost(crate::Vec3::along_x(-v));
    let boosted = apply_unitary(&element, state, &Potential::Zero)?;

    let n = grid.len();
    let before = &channel.amplitudes;
    let after = &boosted.channels[0].amplitudes;
    let peak = before.iter().map(|z| z.norm_sqr()).fold(0.0, f64::max);
    let floor = peak * 1e-16;

    let mut ratios = Vec::new();
    let mut predicted = Vec::new();
    let mut xs = Vec::new();
    let mut max_relative_deviation: f64 = 0.0;
    for j in 0..n {
        let p0 = before[j].norm_sqr();
        if p0 <= floor {
            continue;
        }
        let mapped = (j as isize + shift_steps).rem_euclid(n as isize) as usize;
        let ratio = after[mapped].norm_sqr() / p0;
        let x = grid.x(j);
        let delta_im = m.im * (0.5 * v * v * tau - v * x);
        let want = (-2.0 * delta_im / HBAR).exp();
        max_relative_deviation = max_relative_deviation.max((ratio - want).abs() / want);
        ratios.push(ratio);
        predicted.push(want);
        xs.push(x);
    }

    // least-squares slope of ln(ratio) against x
    let measured_log_slope = {
        let n = xs.len() as f64;
        let mean_x = xs.iter().sum::<f64>() / n;
        let mean_y = ratios.iter().map(|r| r.ln()).sum::<f64>() / n;
        let mut num = 0.0;
        let mut den = 0.0;
        for (x, r) in xs.iter().zip(&ratios) {
            num += (x - mean_x) * (r.ln() - mean_y);
            den += (x - mean_x) * (x - mean_x);
        }
        if den > 0.0 {
            num / den
        } else {
            0.0
        }
    };

    Ok(ComplexBoostReport {
        state: boosted,
        ratios,
        predicted,
        max_relative_deviation,
        measured_log_slope,
        predicted_log_slope: 2.0 * m.im * v / HBAR,
    })
}
