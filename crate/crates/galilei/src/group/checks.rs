//! Seeded fuzz suites for the exact group identities. Shared between the
//! test suite and the scenario runner so both report the same residuals.

use super::element::{bargmann_loop, Event, Event5, ExtendedGalileiElement, GalileiElement};
use super::phase::{cocycle, cocycle_from_phases};
use crate::vec3::Vec3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Outcome of a fuzz pass: the number of samples and the worst absolute
/// residual seen.
#[derive(Debug, Clone, Copy)]
pub struct FuzzReport {
    pub samples: usize,
    pub max_residual: f64,
}

impl FuzzReport {
    fn collect(samples: usize, residuals: impl Iterator<Item = f64>) -> FuzzReport {
        FuzzReport {
            samples,
            max_residual: residuals.fold(0.0, f64::max),
        }
    }
}

fn rand_vec3(rng: &mut ChaCha8Rng) -> Vec3 {
    Vec3::new(
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
    )
}

fn rand_plain(rng: &mut ChaCha8Rng) -> GalileiElement {
    GalileiElement::new(rng.gen_range(-10.0..10.0), rand_vec3(rng), rand_vec3(rng))
}

fn rand_extended(rng: &mut ChaCha8Rng) -> ExtendedGalileiElement {
    ExtendedGalileiElement::new(
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rand_vec3(rng),
        rand_vec3(rng),
    )
}

fn rand_event(rng: &mut ChaCha8Rng) -> Event {
    Event::new(rand_vec3(rng), rng.gen_range(-10.0..10.0))
}

fn rand_event5(rng: &mut ChaCha8Rng) -> Event5 {
    Event5::new(
        rand_vec3(rng),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
    )
}

/// Associativity, identity and inverse laws of the plain subgroup.
pub fn galilei_axioms(seed: u64, samples: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FuzzReport::collect(
        samples,
        (0..samples).map(|_| {
            let g = rand_plain(&mut rng);
            let g2 = rand_plain(&mut rng);
            let g3 = rand_plain(&mut rng);
            let assoc = g
                .compose(&g2)
                .compose(&g3)
                .distance(&g.compose(&g2.compose(&g3)));
            let ident = g
                .compose(&GalileiElement::IDENTITY)
                .distance(&g)
                .max(GalileiElement::IDENTITY.compose(&g).distance(&g));
            let inv = g
                .compose(&g.inverse())
                .distance(&GalileiElement::IDENTITY)
                .max(g.inverse().compose(&g).distance(&GalileiElement::IDENTITY));
            assoc.max(ident).max(inv)
        }),
    )
}

/// Associativity, identity and inverse laws of the extended subgroup.
pub fn extended_axioms(seed: u64, samples: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FuzzReport::collect(
        samples,
        (0..samples).map(|_| {
            let g = rand_extended(&mut rng);
            let g2 = rand_extended(&mut rng);
            let g3 = rand_extended(&mut rng);
            let assoc = g
                .compose(&g2)
                .compose(&g3)
                .distance(&g.compose(&g2.compose(&g3)));
            let ident = g
                .compose(&ExtendedGalileiElement::IDENTITY)
                .distance(&g)
                .max(ExtendedGalileiElement::IDENTITY.compose(&g).distance(&g));
            let inv = g
                .compose(&g.inverse())
                .distance(&ExtendedGalileiElement::IDENTITY)
                .max(
                    g.inverse()
                        .compose(&g)
                        .distance(&ExtendedGalileiElement::IDENTITY),
                );
            let involution = g.inverse().inverse().distance(&g);
            assoc.max(ident).max(inv).max(involution)
        }),
    )
}

/// Left-action law for both event actions:
/// `g ▷ (g′ ▷ e) = (g·g′) ▷ e` in 3+1 and 5 dimensions.
pub fn action_axioms(seed: u64, samples: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FuzzReport::collect(
        samples,
        (0..samples).map(|_| {
            let g = rand_plain(&mut rng);
            let g2 = rand_plain(&mut rng);
            let e = rand_event(&mut rng);
            let chained = g.act_event(&g2.act_event(&e));
            let direct = g.compose(&g2).act_event(&e);
            let r4 = (chained.x - direct.x)
                .max_abs()
                .max((chained.t - direct.t).abs());

            let ge = rand_extended(&mut rng);
            let ge2 = rand_extended(&mut rng);
            let e5 = rand_event5(&mut rng);
            let chained5 = ge.act_event5(&ge2.act_event5(&e5));
            let direct5 = ge.compose(&ge2).act_event5(&e5);
            let r5 = (chained5.x - direct5.x)
                .max_abs()
                .max((chained5.t - direct5.t).abs())
                .max((chained5.s - direct5.s).abs());
            r4.max(r5)
        }),
    )
}

/// Erasing the central parameter commutes with composition.
pub fn erasure_homomorphism(seed: u64, samples: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FuzzReport::collect(
        samples,
        (0..samples).map(|_| {
            let g = rand_extended(&mut rng);
            let g2 = rand_extended(&mut rng);
            g.compose(&g2)
                .erase()
                .distance(&g.erase().compose(&g2.erase()))
        }),
    )
}

/// The composite translate/boost loop equals the central element
/// `(a·v, 0, 0, 0)` and erases to the plain identity.
pub fn bargmann_loop_exactness(seed: u64, samples: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FuzzReport::collect(
        samples,
        (0..samples).map(|_| {
            let a = rand_vec3(&mut rng);
            let v = rand_vec3(&mut rng);
            let got = bargmann_loop(a, v);
            got.distance(&ExtendedGalileiElement::central(v.dot(a)))
                .max(got.erase().distance(&GalileiElement::IDENTITY))
        }),
    )
}

/// Central-component bilinearity of the loop in `a` and `v`.
pub fn bargmann_loop_bilinearity(seed: u64, samples: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FuzzReport::collect(
        samples,
        (0..samples).map(|_| {
            let a = rand_vec3(&mut rng);
            let a2 = rand_vec3(&mut rng);
            let v = rand_vec3(&mut rng);
            let lam = rng.gen_range(-3.0..3.0);
            let additive =
                (bargmann_loop(a + a2, v).bm - bargmann_loop(a, v).bm - bargmann_loop(a2, v).bm)
                    .abs();
            let homogeneous = (bargmann_loop(a, v * lam).bm - lam * bargmann_loop(a, v).bm).abs();
            additive.max(homogeneous)
        }),
    )
}

/// Cocycle associativity, property
/// `ω(g,g′) ω(g·g′,g″) = ω(g′,g″) ω(g,g′·g″)`.
pub fn cocycle_associativity(seed: u64, samples: usize, mass: f64) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FuzzReport::collect(
        samples,
        (0..samples).map(|_| {
            let g = rand_plain(&mut rng);
            let g2 = rand_plain(&mut rng);
            let g3 = rand_plain(&mut rng);
            let lhs = cocycle(&g, &g2, mass) * cocycle(&g.compose(&g2), &g3, mass);
            let rhs = cocycle(&g2, &g3, mass) * cocycle(&g, &g2.compose(&g3), mass);
            (lhs - rhs).norm()
        }),
    )
}

/// Event independence of the phase-composed cocycle: spread over 10 random
/// evaluation events per element pair.
pub fn cocycle_event_independence(seed: u64, samples: usize, mass: f64) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FuzzReport::collect(
        samples,
        (0..samples).map(|_| {
            let g = rand_plain(&mut rng);
            let g2 = rand_plain(&mut rng);
            let closed = cocycle(&g, &g2, mass);
            (0..10)
                .map(|_| {
                    let e = rand_event(&mut rng);
                    (cocycle_from_phases(&g, &g2, mass, &e) - closed).norm()
                })
                .fold(0.0, f64::max)
        }),
    )
}
