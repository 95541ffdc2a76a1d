//! Lie-algebra structure constants, extracted from the group law itself.
//!
//! Generator basis (rotations excluded): `P₁ P₂ P₃ C₁ C₂ C₃ H M`, with
//! nonzero brackets `[Cᵢ, Pⱼ] = M δᵢⱼ` and `[Cᵢ, H] = Pᵢ`. The numeric
//! route evaluates the commutator curve `g(ε) h(ε) g(ε)⁻¹ h(ε)⁻¹` of
//! one-parameter subgroups and reads the bracket off at second order in ε.

use super::element::ExtendedGalileiElement;
use crate::vec3::Vec3;

/// Number of generators in the basis.
pub const DIM: usize = 8;

/// Basis labels in index order.
pub const BASIS: [&str; DIM] = ["P1", "P2", "P3", "C1", "C2", "C3", "H", "M"];

/// A generator of the extended algebra, identified with its one-parameter
/// subgroup in the extended group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Spatial translation along axis 0..3.
    P(usize),
    /// Boost along axis 0..3.
    C(usize),
    /// Time translation.
    H,
    /// Central mass generator.
    M,
}

impl Generator {
    pub fn from_index(i: usize) -> Generator {
        match i {
            0..=2 => Generator::P(i),
            3..=5 => Generator::C(i - 3),
            6 => Generator::H,
            7 => Generator::M,
            _ => panic!("generator index {i} out of range"),
        }
    }

    pub fn index(&self) -> usize {
        match *self {
            Generator::P(i) => i,
            Generator::C(i) => 3 + i,
            Generator::H => 6,
            Generator::M => 7,
        }
    }

    pub fn label(&self) -> &'static str {
        BASIS[self.index()]
    }

    fn axis(i: usize, eps: f64) -> Vec3 {
        let mut v = Vec3::ZERO;
        match i {
            0 => v.x = eps,
            1 => v.y = eps,
            2 => v.z = eps,
            _ => panic!("axis index {i} out of range"),
        }
        v
    }

    /// One-parameter subgroup curve `exp(ε X)`.
    pub fn one_parameter(&self, eps: f64) -> ExtendedGalileiElement {
        match *self {
            Generator::P(i) => ExtendedGalileiElement::translation(Self::axis(i, eps)),
            Generator::C(i) => ExtendedGalileiElement::boost(Self::axis(i, eps)),
            Generator::H => ExtendedGalileiElement::time_shift(eps),
            Generator::M => ExtendedGalileiElement::central(eps),
        }
    }
}

/// Linear coordinates of a near-identity element in generator order.
fn coordinates(g: &ExtendedGalileiElement) -> [f64; DIM] {
    [g.a.x, g.a.y, g.a.z, g.v.x, g.v.y, g.v.z, g.b, g.bm]
}

/// Commutator curve `g(ε) h(ε) g(ε)⁻¹ h(ε)⁻¹`.
pub fn commutator_curve(x: Generator, y: Generator, eps: f64) -> ExtendedGalileiElement {
    let gx = x.one_parameter(eps);
    let gy = y.one_parameter(eps);
    gx.compose(&gy)
        .compose(&gx.inverse())
        .compose(&gy.inverse())
}

/// Structure constants of `[X, Y]` extracted numerically from the group
/// law: the commutator curve divided by ε², with one Richardson step to
/// cancel the O(ε) contamination from cubic curve terms.
pub fn numeric_bracket(x: Generator, y: Generator) -> [f64; DIM] {
    let eps = 1e-4;
    let coarse = coordinates(&commutator_curve(x, y, eps));
    let fine = coordinates(&commutator_curve(x, y, eps / 2.0));
    let mut out = [0.0; DIM];
    for k in 0..DIM {
        let c1 = coarse[k] / (eps * eps);
        let c2 = fine[k] / (eps * eps / 4.0);
        out[k] = 2.0 * c2 - c1;
    }
    out
}

/// Structure constants `c^k_{ij}` over the 8-generator basis.
#[derive(Debug, Clone)]
pub struct AlgebraTable {
    /// `c[i][j][k]` = coefficient of generator k in `[X_i, X_j]`.
    pub c: [[[f64; DIM]; DIM]; DIM],
}

impl AlgebraTable {
    /// The extended algebra: `[Cᵢ, Pⱼ] = M δᵢⱼ`, `[Cᵢ, H] = Pᵢ`, all other
    /// brackets zero.
    pub fn standard() -> AlgebraTable {
        let mut c = [[[0.0; DIM]; DIM]; DIM];
        let m = Generator::M.index();
        let h = Generator::H.index();
        for i in 0..3 {
            let ci = Generator::C(i).index();
            let pi = Generator::P(i).index();
            c[ci][pi][m] = 1.0;
            c[pi][ci][m] = -1.0;
            c[ci][h][pi] = 1.0;
            c[h][ci][pi] = -1.0;
        }
        AlgebraTable { c }
    }

    pub fn bracket(&self, i: usize, j: usize) -> [f64; DIM] {
        self.c[i][j]
    }

    /// Largest violation of `c^k_{ij} = −c^k_{ji}`.
    pub fn antisymmetry_violation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    worst = worst.max((self.c[i][j][k] + self.c[j][i][k]).abs());
                }
            }
        }
        worst
    }

    /// Largest violation of the Jacobi identity over all generator triples.
    pub fn jacobi_violation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    for l in 0..DIM {
                        let mut sum = 0.0;
                        for m in 0..DIM {
                            sum += self.c[j][k][m] * self.c[i][m][l]
                                + self.c[k][i][m] * self.c[j][m][l]
                                + self.c[i][j][m] * self.c[k][m][l];
                        }
                        worst = worst.max(sum.abs());
                    }
                }
            }
        }
        worst
    }

    /// Largest deviation between [`numeric_bracket`] and this table over
    /// all generator pairs.
    pub fn numeric_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..DIM {
            for j in 0..DIM {
                let got = numeric_bracket(Generator::from_index(i), Generator::from_index(j));
                for k in 0..DIM {
                    worst = worst.max((got[k] - self.c[i][j][k]).abs());
                }
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_bracket(x: Generator, y: Generator, expect: &[(Generator, f64)]) {
        let got = numeric_bracket(x, y);
        let mut want = [0.0; DIM];
        for (g, coeff) in expect {
            want[g.index()] = *coeff;
        }
        for k in 0..DIM {
            assert!(
                (got[k] - want[k]).abs() <= 1e-6,
                "[{}, {}] component {} = {}, want {}",
                x.label(),
                y.label(),
                BASIS[k],
                got[k],
                want[k]
            );
        }
    }

    #[test]
    fn boost_translation_bracket_is_central() {
        assert_bracket(Generator::C(0), Generator::P(0), &[(Generator::M, 1.0)]);
        assert_bracket(Generator::C(1), Generator::P(1), &[(Generator::M, 1.0)]);
        assert_bracket(Generator::C(0), Generator::P(1), &[]);
    }

    #[test]
    fn translations_commute() {
        assert_bracket(Generator::P(0), Generator::P(1), &[]);
        assert_bracket(Generator::P(2), Generator::P(2), &[]);
    }

    #[test]
    fn boost_time_bracket_is_translation() {
        assert_bracket(Generator::C(0), Generator::H, &[(Generator::P(0), 1.0)]);
        assert_bracket(Generator::H, Generator::C(2), &[(Generator::P(2), -1.0)]);
    }

    #[test]
    fn central_generator_commutes() {
        for i in 0..DIM {
            assert_bracket(Generator::M, Generator::from_index(i), &[]);
        }
    }

    #[test]
    fn table_is_antisymmetric_and_jacobi() {
        let table = AlgebraTable::standard();
        assert_eq!(table.antisymmetry_violation(), 0.0);
        assert_eq!(table.jacobi_violation(), 0.0);
    }

    #[test]
    fn numeric_matches_table_everywhere() {
        let table = AlgebraTable::standard();
        assert!(table.numeric_deviation() <= 1e-6);
    }
}
