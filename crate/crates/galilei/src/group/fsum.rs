//! Error-free transformations for the central-parameter arithmetic.
//!
//! The extension term `v·a′ + ½v²b′` reaches magnitudes of a few thousand
//! at desk-scale fuzz ranges, where a single ulp is ~1e-12. Accumulating
//! it in compensated double-f64 keeps every composition route correctly
//! rounded, so exact group identities survive at the 1e-12 level.

/// Knuth two-sum: `a + b = s + err` exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// FMA two-product: `a * b = p + err` exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

/// Compensated accumulator (value + running error).
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accumulator {
    hi: f64,
    lo: f64,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) -> &mut Self {
        let (s, e) = two_sum(self.hi, x);
        self.hi = s;
        self.lo += e;
        self
    }

    /// Add the product `a * b` without intermediate rounding.
    #[inline]
    pub fn add_prod(&mut self, a: f64, b: f64) -> &mut Self {
        let (p, e) = two_prod(a, b);
        self.add(p);
        self.lo += e;
        self
    }

    /// Add the triple product `a * b * c` (one rounding in the middle,
    /// compensated by FMA residuals).
    #[inline]
    pub fn add_prod3(&mut self, a: f64, b: f64, c: f64) -> &mut Self {
        let (ab, e_ab) = two_prod(a, b);
        self.add_prod(ab, c);
        self.lo += e_ab * c;
        self
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.hi + self.lo
    }
}

/// Compensated dot product of 3-vectors.
#[inline]
pub(crate) fn dot3(a: crate::Vec3, b: crate::Vec3, acc: &mut Accumulator) {
    acc.add_prod(a.x, b.x).add_prod(a.y, b.y).add_prod(a.z, b.z);
}

/// Compensated `½ |v|² scale` (halving is exact in binary).
#[inline]
pub(crate) fn half_norm_sq_times(v: crate::Vec3, scale: f64, acc: &mut Accumulator) {
    acc.add_prod3(0.5 * v.x, v.x, scale);
    acc.add_prod3(0.5 * v.y, v.y, scale);
    acc.add_prod3(0.5 * v.z, v.z, scale);
}
