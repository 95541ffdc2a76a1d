//! Group elements, events, and the exact composition laws.

use super::fsum;
use crate::vec3::Vec3;
use serde::{Deserialize, Serialize};

/// Spacetime event (x, t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event {
    pub x: Vec3,
    pub t: f64,
}

impl Event {
    pub fn new(x: Vec3, t: f64) -> Self {
        Event { x, t }
    }
}

/// 5-dimensional event (x, t, s). The fifth coordinate s is the O(1/c²)
/// correction to relativistic time, conjugate to the mass generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event5 {
    pub x: Vec3,
    pub t: f64,
    pub s: f64,
}

impl Event5 {
    pub fn new(x: Vec3, t: f64, s: f64) -> Self {
        Event5 { x, t, s }
    }

    /// Forget the fifth coordinate.
    pub fn project(self) -> Event {
        Event {
            x: self.x,
            t: self.t,
        }
    }
}

/// Element (b, a, v) of the rotation-free Galilei subgroup: time shift `b`,
/// spatial shift `a`, boost velocity `v`.
///
/// Serializes as `{"b": …, "a": […], "v": […]}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GalileiElement {
    pub b: f64,
    pub a: Vec3,
    pub v: Vec3,
}

impl GalileiElement {
    pub const IDENTITY: GalileiElement = GalileiElement {
        b: 0.0,
        a: Vec3::ZERO,
        v: Vec3::ZERO,
    };

    pub fn new(b: f64, a: Vec3, v: Vec3) -> Self {
        GalileiElement { b, a, v }
    }

    pub fn translation(a: Vec3) -> Self {
        GalileiElement {
            b: 0.0,
            a,
            v: Vec3::ZERO,
        }
    }

    pub fn boost(v: Vec3) -> Self {
        GalileiElement {
            b: 0.0,
            a: Vec3::ZERO,
            v,
        }
    }

    pub fn time_shift(b: f64) -> Self {
        GalileiElement {
            b,
            a: Vec3::ZERO,
            v: Vec3::ZERO,
        }
    }

    /// Group product `self · rhs` (rhs acts first):
    /// `(b + b′, a + a′ + b′ v, v + v′)`.
    pub fn compose(&self, rhs: &GalileiElement) -> GalileiElement {
        GalileiElement {
            b: self.b + rhs.b,
            a: self.a + rhs.a + self.v * rhs.b,
            v: self.v + rhs.v,
        }
    }

    /// `(−b, −(a − b v), −v)`.
    pub fn inverse(&self) -> GalileiElement {
        GalileiElement {
            b: -self.b,
            a: -(self.a - self.v * self.b),
            v: -self.v,
        }
    }

    /// Active action on an event: `(x + v t + a, t + b)`.
    pub fn act_event(&self, e: &Event) -> Event {
        Event {
            x: e.x + self.v * e.t + self.a,
            t: e.t + self.b,
        }
    }

    /// Lift into the extended group with vanishing central parameter.
    pub fn lift(&self) -> ExtendedGalileiElement {
        ExtendedGalileiElement {
            bm: 0.0,
            b: self.b,
            a: self.a,
            v: self.v,
        }
    }

    /// Largest absolute component, used for fuzz residuals.
    pub fn max_abs(&self) -> f64 {
        self.b.abs().max(self.a.max_abs()).max(self.v.max_abs())
    }

    /// Component-wise distance to another element.
    pub fn distance(&self, other: &GalileiElement) -> f64 {
        (self.b - other.b)
            .abs()
            .max((self.a - other.a).max_abs())
            .max((self.v - other.v).max_abs())
    }
}

/// Element (b_m, b, a, v) of the centrally extended subgroup. The extra
/// parameter b_m pairs with the mass generator M and has units of
/// action/mass (velocity · length).
///
/// Serializes as `{"bm": …, "b": …, "a": […], "v": […]}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ExtendedGalileiElement {
    pub bm: f64,
    pub b: f64,
    pub a: Vec3,
    pub v: Vec3,
}

impl ExtendedGalileiElement {
    pub const IDENTITY: ExtendedGalileiElement = ExtendedGalileiElement {
        bm: 0.0,
        b: 0.0,
        a: Vec3::ZERO,
        v: Vec3::ZERO,
    };

    pub fn new(bm: f64, b: f64, a: Vec3, v: Vec3) -> Self {
        ExtendedGalileiElement { bm, b, a, v }
    }

    pub fn central(bm: f64) -> Self {
        ExtendedGalileiElement {
            bm,
            ..Self::IDENTITY
        }
    }

    pub fn translation(a: Vec3) -> Self {
        ExtendedGalileiElement {
            a,
            ..Self::IDENTITY
        }
    }

    pub fn boost(v: Vec3) -> Self {
        ExtendedGalileiElement {
            v,
            ..Self::IDENTITY
        }
    }

    pub fn time_shift(b: f64) -> Self {
        ExtendedGalileiElement {
            b,
            ..Self::IDENTITY
        }
    }

    /// Extended product `self · rhs` (rhs acts first). The central
    /// component picks up the extension term `v · a′ + ½ v² b′`,
    /// accumulated in compensated arithmetic so that different
    /// association orders agree to the last ulp.
    pub fn compose(&self, rhs: &ExtendedGalileiElement) -> ExtendedGalileiElement {
        let mut bm = fsum::Accumulator::new();
        bm.add(self.bm).add(rhs.bm);
        fsum::dot3(self.v, rhs.a, &mut bm);
        fsum::half_norm_sq_times(self.v, rhs.b, &mut bm);
        ExtendedGalileiElement {
            bm: bm.value(),
            b: self.b + rhs.b,
            a: self.a + rhs.a + self.v * rhs.b,
            v: self.v + rhs.v,
        }
    }

    /// `(−b_m + v·a − ½ v² b, −b, −(a − b v), −v)`.
    pub fn inverse(&self) -> ExtendedGalileiElement {
        let mut bm = fsum::Accumulator::new();
        bm.add(-self.bm);
        fsum::dot3(self.v, self.a, &mut bm);
        fsum::half_norm_sq_times(self.v, -self.b, &mut bm);
        ExtendedGalileiElement {
            bm: bm.value(),
            b: -self.b,
            a: -(self.a - self.v * self.b),
            v: -self.v,
        }
    }

    /// Faithful action on a 5-d event:
    /// `(x + v t + a, t + b, s + b_m + v·x + ½ v² t)`.
    pub fn act_event5(&self, e: &Event5) -> Event5 {
        let mut s = fsum::Accumulator::new();
        s.add(e.s).add(self.bm);
        fsum::dot3(self.v, e.x, &mut s);
        fsum::half_norm_sq_times(self.v, e.t, &mut s);
        Event5 {
            x: e.x + self.v * e.t + self.a,
            t: e.t + self.b,
            s: s.value(),
        }
    }

    /// Drop the central parameter. This is a group homomorphism onto the
    /// plain subgroup.
    pub fn erase(&self) -> GalileiElement {
        GalileiElement {
            b: self.b,
            a: self.a,
            v: self.v,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.bm.abs().max(self.erase().max_abs())
    }

    pub fn distance(&self, other: &ExtendedGalileiElement) -> f64 {
        (self.bm - other.bm)
            .abs()
            .max(self.erase().distance(&other.erase()))
    }
}

/// Composite transformation translate(a) → boost(v) → translate(−a) →
/// boost(−v), evaluated in the extended group.
///
/// The result is the central element `(a·v, 0, 0, 0)`: the loop acts as the
/// identity on spacetime events but carries the commutator of translations
/// and boosts in its central component.
pub fn bargmann_loop(a: Vec3, v: Vec3) -> ExtendedGalileiElement {
    let g1 = ExtendedGalileiElement::translation(a);
    let g2 = ExtendedGalileiElement::boost(v);
    let g3 = ExtendedGalileiElement::translation(-a);
    let g4 = ExtendedGalileiElement::boost(-v);
    g4.compose(&g3).compose(&g2).compose(&g1)
}
