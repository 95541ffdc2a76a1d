//! The 5-dimensional Galilean metric and the scalar free-particle
//! Lagrangian built on it.
//!
//! Coordinates are ordered `X^A = (x₁, x₂, x₃, t, s)` with `x⁴ = t` and
//! `x⁵ = s`. The Galilean pairing `(X|Y) = X·Y − X₄Y₅ − X₅Y₄` is invariant
//! under simultaneous boosts of both arguments, and
//! `g_AB = η_AB + h_AB/c²` reproduces the Minkowski line element truncated
//! at order 1/c²: `c² g_AB dx^A dx^B = −c² dt² + dx² − 2 dt ds`.

use crate::group::element::Event5;
use crate::vec3::Vec3;
use serde::Serialize;

/// The three constant 5×5 metrics of the embedding.
#[derive(Debug, Clone, Serialize)]
pub struct Metric5 {
    /// `η_AB = diag(0, 0, 0, −1, 0)`.
    pub eta: [[f64; 5]; 5],
    /// Galilean metric: identity on the spatial block, `h₄₅ = h₅₄ = −1`.
    pub h: [[f64; 5]; 5],
}

impl Metric5 {
    pub fn standard() -> Metric5 {
        let mut eta = [[0.0; 5]; 5];
        eta[3][3] = -1.0;
        let mut h = [[0.0; 5]; 5];
        for i in 0..3 {
            h[i][i] = 1.0;
        }
        h[3][4] = -1.0;
        h[4][3] = -1.0;
        Metric5 { eta, h }
    }

    /// `g_AB = η_AB + h_AB / c²`.
    pub fn g(&self, c: f64) -> [[f64; 5]; 5] {
        let mut g = self.eta;
        for (i, row) in self.h.iter().enumerate() {
            for (j, hij) in row.iter().enumerate() {
                g[i][j] += hij / (c * c);
            }
        }
        g
    }

    /// Contraction `M_AB X^A Y^B`.
    pub fn contract(matrix: &[[f64; 5]; 5], x: &Event5, y: &Event5) -> f64 {
        let xv = [x.x.x, x.x.y, x.x.z, x.t, x.s];
        let yv = [y.x.x, y.x.y, y.x.z, y.t, y.s];
        let mut sum = 0.0;
        for i in 0..5 {
            for j in 0..5 {
                sum += matrix[i][j] * xv[i] * yv[j];
            }
        }
        sum
    }

    /// Line element `c² g_AB dx^A dx^B` of a coordinate differential,
    /// which should equal `−c² dt² + dx² − 2 dt ds`.
    pub fn line_element(&self, c: f64, d: &Event5) -> f64 {
        c * c * Self::contract(&self.g(c), d, d)
    }

    /// JSON table of the metric constants for the docs.
    pub fn as_json(&self, c: f64) -> String {
        #[derive(Serialize)]
        struct Table {
            coordinates: [&'static str; 5],
            eta: [[f64; 5]; 5],
            h: [[f64; 5]; 5],
            g: [[f64; 5]; 5],
            c: f64,
        }
        serde_json::to_string_pretty(&Table {
            coordinates: ["x1", "x2", "x3", "t", "s"],
            eta: self.eta,
            h: self.h,
            g: self.g(c),
            c,
        })
        .expect("metric table serializes")
    }
}

/// Galilean inner product `(X|Y) = X·Y − X₄Y₅ − X₅Y₄`.
pub fn inner_product5(x: &Event5, y: &Event5) -> f64 {
    x.x.dot(y.x) - x.t * y.s - x.s * y.t
}

/// Scalar 5-d free Lagrangian `−mc² (1 − (½ ẋ² − ṡ)/c²)`.
pub fn lagrangian5(xdot: Vec3, sdot: f64, m: f64, c: f64) -> f64 {
    -m * c * c + m * (0.5 * xdot.norm_sq() - sdot)
}

/// The same Lagrangian through the metric contraction
/// `m c² (η_AB + h_AB/2c²) Ẋ^A Ẋ^B` with `Ẋ = (ẋ, 1, ṡ)`. Second route for
/// cross-checking [`lagrangian5`].
pub fn lagrangian5_via_metric(xdot: Vec3, sdot: f64, m: f64, c: f64) -> f64 {
    let metric = Metric5::standard();
    let mut coeff = metric.eta;
    for (i, row) in metric.h.iter().enumerate() {
        for (j, hij) in row.iter().enumerate() {
            coeff[i][j] += hij / (2.0 * c * c);
        }
    }
    let xdot5 = Event5::new(xdot, 1.0, sdot);
    m * c * c * Metric5::contract(&coeff, &xdot5, &xdot5)
}
