//! Generators of the z-tame group and words over them.

use num::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ZEndomorphism;
use crate::ncpoly::{Letter, NCPolynomial};
use crate::scalar::Scalar;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("triangular generator requires nonzero diagonal coefficients")]
    ZeroCoefficient,
    #[error("p1 of a triangular generator must not contain x")]
    P1ContainsX,
    #[error("p2 of a triangular generator must depend on z only")]
    P2NotZOnly,
    #[error("affine generator requires an invertible 2x2 matrix")]
    SingularMatrix,
}

/// A z-triangular automorphism (a1*x + p1(y,z), a2*y + p2(z)) with
/// a1, a2 nonzero, p1 free of x and p2 in Q[z].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangular {
    a1: Scalar,
    p1: NCPolynomial,
    a2: Scalar,
    p2: NCPolynomial,
}

impl Triangular {
    pub fn new(
        a1: Scalar,
        p1: NCPolynomial,
        a2: Scalar,
        p2: NCPolynomial,
    ) -> Result<Self, GeneratorError> {
        if a1.is_zero() || a2.is_zero() {
            return Err(GeneratorError::ZeroCoefficient);
        }
        if p1.degree_in(Letter::X).unwrap_or(0) > 0 {
            return Err(GeneratorError::P1ContainsX);
        }
        if !p2.depends_only_on_z() {
            return Err(GeneratorError::P2NotZOnly);
        }
        Ok(Triangular { a1, p1, a2, p2 })
    }

    pub fn identity() -> Self {
        Triangular {
            a1: Scalar::one(),
            p1: NCPolynomial::zero(),
            a2: Scalar::one(),
            p2: NCPolynomial::zero(),
        }
    }

    /// (x + p1(y,z), y); p1 must be free of x.
    pub fn unitriangular(p1: NCPolynomial) -> Result<Self, GeneratorError> {
        Triangular::new(Scalar::one(), p1, Scalar::one(), NCPolynomial::zero())
    }

    pub fn a1(&self) -> &Scalar {
        &self.a1
    }

    pub fn p1(&self) -> &NCPolynomial {
        &self.p1
    }

    pub fn a2(&self) -> &Scalar {
        &self.a2
    }

    pub fn p2(&self) -> &NCPolynomial {
        &self.p2
    }

    pub fn to_endo(&self) -> ZEndomorphism {
        ZEndomorphism {
            f: &NCPolynomial::x().scale(&self.a1) + &self.p1,
            g: &NCPolynomial::y().scale(&self.a2) + &self.p2,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a1.is_one() && self.a2.is_one() && self.p1.is_zero() && self.p2.is_zero()
    }

    /// True iff both images are affine in x, y, z (every monomial of p1 is
    /// y, z or constant; p2 has z-degree at most one).
    pub fn is_affine_map(&self) -> bool {
        self.p1
            .terms()
            .all(|(w, _)| w.len() <= 1)
            && self.p2.terms().all(|(w, _)| w.len() <= 1)
    }

    /// The pure-z part p1(0,z) of p1.
    pub fn p1_z_part(&self) -> NCPolynomial {
        self.p1.without_letter(Letter::Y)
    }

    /// Split into (clean, zdiag) with self = clean * zdiag, where
    /// clean = (x + (p1 - p1(0,z))/a1, y) and zdiag = (a1*x + p1(0,z), a2*y + p2).
    pub fn split_clean(&self) -> (Triangular, Triangular) {
        let pz = self.p1_z_part();
        let clean_p1 = (&self.p1 - &pz).scale(&(Scalar::one() / self.a1.clone()));
        let clean = Triangular {
            a1: Scalar::one(),
            p1: clean_p1,
            a2: Scalar::one(),
            p2: NCPolynomial::zero(),
        };
        let zdiag = Triangular {
            a1: self.a1.clone(),
            p1: pz,
            a2: self.a2.clone(),
            p2: self.p2.clone(),
        };
        (clean, zdiag)
    }

    /// True iff the x-image depends only on z beyond the x term, i.e. p1 has
    /// no y. Such a generator commutes with tau after swapping its two halves.
    pub fn is_z_diagonal(&self) -> bool {
        !self.p1.terms().any(|(w, _)| w.contains(Letter::Y))
    }

    /// For a z-diagonal generator (a1*x + p(z), a2*y + r(z)), the generator
    /// d' with self * tau = tau * d', namely (a2*x + r(z), a1*y + p(z)).
    pub fn commute_past_tau(&self) -> Triangular {
        debug_assert!(self.is_z_diagonal());
        Triangular {
            a1: self.a2.clone(),
            p1: self.p2.clone(),
            a2: self.a1.clone(),
            p2: self.p1.clone(),
        }
    }

    /// The product self * rhs (rhs acts first); closed in the triangular group.
    pub fn compose_tri(&self, rhs: &Triangular) -> Triangular {
        // x-coordinate of rhs evaluated at self's images
        let y_img = &NCPolynomial::y().scale(&self.a2) + &self.p2;
        let p1 = &self.p1.scale(&rhs.a1)
            + &rhs.p1.substitute(&NCPolynomial::x(), &y_img);
        let a1 = self.a1.clone() * rhs.a1.clone();
        let a2 = self.a2.clone() * rhs.a2.clone();
        let p2 = &self.p2.scale(&rhs.a2) + &rhs.p2;
        Triangular { a1, p1, a2, p2 }
    }

    pub fn inverse(&self) -> Triangular {
        let a1_inv = Scalar::one() / self.a1.clone();
        let a2_inv = Scalar::one() / self.a2.clone();
        // y -> (y - p2(z)) / a2 inside p1, then negate and scale by 1/a1
        let y_sub = (&NCPolynomial::y() - &self.p2).scale(&a2_inv);
        let p1_inv = self
            .p1
            .substitute(&NCPolynomial::x(), &y_sub)
            .scale(&-a1_inv.clone());
        let p2_inv = self.p2.scale(&-a2_inv.clone());
        Triangular {
            a1: a1_inv,
            p1: p1_inv,
            a2: a2_inv,
            p2: p2_inv,
        }
    }
}

/// A z-affine automorphism. The matrix columns are the x,y coefficients of
/// the two images: x-image = m[0][0]*x + m[1][0]*y + zc[0]*z + tr[0],
/// y-image = m[0][1]*x + m[1][1]*y + zc[1]*z + tr[1]; det(m) nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Affine {
    m: [[Scalar; 2]; 2],
    zc: [Scalar; 2],
    tr: [Scalar; 2],
}

impl Affine {
    pub fn new(m: [[Scalar; 2]; 2], zc: [Scalar; 2], tr: [Scalar; 2]) -> Result<Self, GeneratorError> {
        let a = Affine { m, zc, tr };
        if a.det().is_zero() {
            return Err(GeneratorError::SingularMatrix);
        }
        Ok(a)
    }

    pub fn linear(m: [[Scalar; 2]; 2]) -> Result<Self, GeneratorError> {
        Affine::new(m, [Scalar::zero(), Scalar::zero()], [Scalar::zero(), Scalar::zero()])
    }

    pub fn matrix(&self) -> &[[Scalar; 2]; 2] {
        &self.m
    }

    pub fn z_coeffs(&self) -> &[Scalar; 2] {
        &self.zc
    }

    pub fn translations(&self) -> &[Scalar; 2] {
        &self.tr
    }

    pub fn det(&self) -> Scalar {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[1][0].clone() * self.m[0][1].clone()
    }

    pub fn to_endo(&self) -> ZEndomorphism {
        let img = |col: usize| -> NCPolynomial {
            &(&NCPolynomial::x().scale(&self.m[0][col]) + &NCPolynomial::y().scale(&self.m[1][col]))
                + &(&NCPolynomial::z().scale(&self.zc[col])
                    + &NCPolynomial::constant(self.tr[col].clone()))
        };
        ZEndomorphism {
            f: img(0),
            g: img(1),
        }
    }

    pub fn inverse(&self) -> Affine {
        let det = self.det();
        let inv = |v: Scalar| v / det.clone();
        // m^{-1} for column-convention matrix m
        let mi = [
            [inv(self.m[1][1].clone()), inv(-self.m[0][1].clone())],
            [inv(-self.m[1][0].clone()), inv(self.m[0][0].clone())],
        ];
        // translation row transforms by -t * m^{-1}
        let t_col = |col: usize, t: &[Scalar; 2]| -> Scalar {
            -(t[0].clone() * mi[0][col].clone() + t[1].clone() * mi[1][col].clone())
        };
        Affine {
            m: mi.clone(),
            zc: [t_col(0, &self.zc), t_col(1, &self.zc)],
            tr: [t_col(0, &self.tr), t_col(1, &self.tr)],
        }
    }

    /// True iff the y-image has no x, so the map is triangular.
    pub fn is_triangular(&self) -> bool {
        self.m[0][1].is_zero()
    }

    pub fn to_triangular(&self) -> Option<Triangular> {
        if !self.is_triangular() {
            return None;
        }
        let p1 = &(&NCPolynomial::y().scale(&self.m[1][0]) + &NCPolynomial::z().scale(&self.zc[0]))
            + &NCPolynomial::constant(self.tr[0].clone());
        let p2 = &NCPolynomial::z().scale(&self.zc[1]) + &NCPolynomial::constant(self.tr[1].clone());
        Some(Triangular {
            a1: self.m[0][0].clone(),
            p1,
            a2: self.m[1][1].clone(),
            p2,
        })
    }

    /// Bruhat factorization for a non-triangular affine map:
    /// self = left * tau * right with left, right triangular.
    pub fn bruhat(&self) -> (Triangular, Triangular) {
        let m12 = self.m[0][1].clone();
        debug_assert!(!m12.is_zero());
        let det = self.det();
        // M = L1 * P * L2 with L1 = [[1,0],[m22/m12, -det/m12]],
        // L2 = [[1,0],[m11, m12]] (column convention).
        let l1 = Triangular {
            a1: Scalar::one(),
            p1: NCPolynomial::y().scale(&(self.m[1][1].clone() / m12.clone())),
            a2: -det / m12.clone(),
            p2: NCPolynomial::zero(),
        };
        let l2_lin = Triangular {
            a1: Scalar::one(),
            p1: NCPolynomial::y().scale(&self.m[0][0]),
            a2: m12,
            p2: NCPolynomial::zero(),
        };
        // fold the z and constant translations into the right factor
        let translation = Triangular {
            a1: Scalar::one(),
            p1: &NCPolynomial::z().scale(&self.zc[0]) + &NCPolynomial::constant(self.tr[0].clone()),
            a2: Scalar::one(),
            p2: &NCPolynomial::z().scale(&self.zc[1]) + &NCPolynomial::constant(self.tr[1].clone()),
        };
        (l1, l2_lin.compose_tri(&translation))
    }
}

/// One generator of the z-tame group.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "GeneratorDto", into = "GeneratorDto")]
pub enum TameGenerator {
    Affine(Affine),
    Triangular(Triangular),
    Tau,
}

impl TameGenerator {
    pub fn to_endo(&self) -> ZEndomorphism {
        match self {
            TameGenerator::Affine(a) => a.to_endo(),
            TameGenerator::Triangular(t) => t.to_endo(),
            TameGenerator::Tau => ZEndomorphism {
                f: NCPolynomial::y(),
                g: NCPolynomial::x(),
            },
        }
    }

    /// A word inverting this generator.
    pub fn invert(&self) -> TameWord {
        match self {
            TameGenerator::Affine(a) => TameWord(vec![TameGenerator::Affine(a.inverse())]),
            TameGenerator::Triangular(t) => {
                TameWord(vec![TameGenerator::Triangular(t.inverse())])
            }
            TameGenerator::Tau => TameWord(vec![TameGenerator::Tau]),
        }
    }

    pub fn triangular(
        a1: Scalar,
        p1: NCPolynomial,
        a2: Scalar,
        p2: NCPolynomial,
    ) -> Result<Self, GeneratorError> {
        Ok(TameGenerator::Triangular(Triangular::new(a1, p1, a2, p2)?))
    }
}

/// A word of tame generators, read as a product left-to-right: the leftmost
/// generator is the outermost factor and the rightmost acts first on the
/// algebra, exactly like a product of automorphisms on paper.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TameWord(pub Vec<TameGenerator>);

impl TameWord {
    pub fn new(gens: Vec<TameGenerator>) -> Self {
        TameWord(gens)
    }

    pub fn empty() -> Self {
        TameWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn generators(&self) -> &[TameGenerator] {
        &self.0
    }

    pub fn push(&mut self, g: TameGenerator) {
        self.0.push(g);
    }

    pub fn concat(&self, other: &TameWord) -> TameWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        TameWord(v)
    }

    /// The endomorphism induced by the word.
    pub fn apply(&self) -> ZEndomorphism {
        let mut acc = ZEndomorphism::identity();
        for g in &self.0 {
            acc = acc.compose(&g.to_endo());
        }
        acc
    }

    /// The inverse word: generators reversed and inverted.
    pub fn invert(&self) -> TameWord {
        let mut out = TameWord::empty();
        for g in self.0.iter().rev() {
            out = out.concat(&g.invert());
        }
        out
    }

    /// True iff the induced endomorphism is the identity. By the amalgamated
    /// free-product structure a word reduced to a nontrivial normal form never
    /// is; this test decides it operationally.
    pub fn is_identity(&self) -> bool {
        self.apply().is_identity()
    }
}

// --- serde DTOs with text-embedded polynomials ---

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum GeneratorDto {
    Affine {
        m: [[String; 2]; 2],
        zc: [String; 2],
        tr: [String; 2],
    },
    Triangular {
        a1: String,
        p1: String,
        a2: String,
        p2: String,
    },
    Tau,
}

fn scalar_to_string(s: &Scalar) -> String {
    s.to_string()
}

fn scalar_from_str(s: &str) -> Result<Scalar, String> {
    s.trim()
        .parse::<Scalar>()
        .map_err(|e| format!("bad rational '{}': {}", s, e))
}

impl From<TameGenerator> for GeneratorDto {
    fn from(g: TameGenerator) -> Self {
        match g {
            TameGenerator::Affine(a) => GeneratorDto::Affine {
                m: [
                    [scalar_to_string(&a.m[0][0]), scalar_to_string(&a.m[0][1])],
                    [scalar_to_string(&a.m[1][0]), scalar_to_string(&a.m[1][1])],
                ],
                zc: [scalar_to_string(&a.zc[0]), scalar_to_string(&a.zc[1])],
                tr: [scalar_to_string(&a.tr[0]), scalar_to_string(&a.tr[1])],
            },
            TameGenerator::Triangular(t) => GeneratorDto::Triangular {
                a1: scalar_to_string(&t.a1),
                p1: crate::text::print_nc(&t.p1),
                a2: scalar_to_string(&t.a2),
                p2: crate::text::print_nc(&t.p2),
            },
            TameGenerator::Tau => GeneratorDto::Tau,
        }
    }
}

impl TryFrom<GeneratorDto> for TameGenerator {
    type Error = String;

    fn try_from(dto: GeneratorDto) -> Result<Self, Self::Error> {
        match dto {
            GeneratorDto::Affine { m, zc, tr } => {
                let ms = [
                    [scalar_from_str(&m[0][0])?, scalar_from_str(&m[0][1])?],
                    [scalar_from_str(&m[1][0])?, scalar_from_str(&m[1][1])?],
                ];
                let zcs = [scalar_from_str(&zc[0])?, scalar_from_str(&zc[1])?];
                let trs = [scalar_from_str(&tr[0])?, scalar_from_str(&tr[1])?];
                Affine::new(ms, zcs, trs)
                    .map(TameGenerator::Affine)
                    .map_err(|e| e.to_string())
            }
            GeneratorDto::Triangular { a1, p1, a2, p2 } => {
                let a1 = scalar_from_str(&a1)?;
                let a2 = scalar_from_str(&a2)?;
                let p1 = crate::text::parse_nc(&p1).map_err(|e| e.to_string())?;
                let p2 = crate::text::parse_nc(&p2).map_err(|e| e.to_string())?;
                Triangular::new(a1, p1, a2, p2)
                    .map(TameGenerator::Triangular)
                    .map_err(|e| e.to_string())
            }
            GeneratorDto::Tau => Ok(TameGenerator::Tau),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(s: &str) -> NCPolynomial {
        s.parse().unwrap()
    }

    fn tri(p1: &str) -> TameGenerator {
        TameGenerator::Triangular(Triangular::unitriangular(p(p1)).unwrap())
    }

    #[test]
    fn apply_word_examples() {
        assert_eq!(
            TameWord::new(vec![TameGenerator::Tau]).apply(),
            ZEndomorphism::new(p("y"), p("x"))
        );
        assert_eq!(
            TameWord::new(vec![tri("y^2")]).apply(),
            ZEndomorphism::new(p("x + y^2"), p("y"))
        );
        // the triangular map's images substituted into (y, x)
        assert_eq!(
            TameWord::new(vec![tri("y^2"), TameGenerator::Tau]).apply(),
            ZEndomorphism::new(p("y"), p("x + y^2"))
        );
    }

    #[test]
    fn invert_generator_examples() {
        let tau = TameGenerator::Tau;
        let w = TameWord::new(vec![tau.clone()]).concat(&tau.invert());
        assert!(w.is_identity());

        let t = tri("y^2");
        assert_eq!(t.invert(), TameWord::new(vec![tri("-y^2")]));

        let a = Affine::new(
            [[int(2), int(1)], [int(1), int(1)]],
            [int(3), int(0)],
            [int(-1), int(5)],
        )
        .unwrap();
        let g = TameGenerator::Affine(a);
        let w = TameWord::new(vec![g.clone()]).concat(&g.invert());
        assert!(w.is_identity());
        let w = g.invert().concat(&TameWord::new(vec![g]));
        assert!(w.is_identity());
    }

    #[test]
    fn triangular_compose_and_inverse() {
        let t1 = Triangular::new(int(2), p("y*z + z^3"), int(-1), p("z^2")).unwrap();
        let t2 = Triangular::new(int(1), p("y^2 - z"), int(3), p("z")).unwrap();
        let prod = t1.compose_tri(&t2);
        assert_eq!(
            prod.to_endo(),
            t1.to_endo().compose(&t2.to_endo())
        );
        let inv = t1.inverse();
        assert!(t1.to_endo().compose(&inv.to_endo()).is_identity());
        assert!(inv.to_endo().compose(&t1.to_endo()).is_identity());
    }

    #[test]
    fn bruhat_reconstructs_affine() {
        let a = Affine::new(
            [[int(2), int(3)], [int(1), int(1)]],
            [int(1), int(-2)],
            [int(0), int(7)],
        )
        .unwrap();
        let (l1, l2) = a.bruhat();
        let w = TameWord::new(vec![
            TameGenerator::Triangular(l1),
            TameGenerator::Tau,
            TameGenerator::Triangular(l2),
        ]);
        assert_eq!(w.apply(), a.to_endo());
    }

    #[test]
    fn split_clean_reconstructs() {
        let t = Triangular::new(int(2), p("y*z*y - 3*z^2 + 1"), int(5), p("z + 2")).unwrap();
        let (clean, zdiag) = t.split_clean();
        assert_eq!(clean.compose_tri(&zdiag).to_endo(), t.to_endo());
        assert!(clean.p1_z_part().is_zero());
        // z-diagonal commutes past tau
        let d = zdiag.commute_past_tau();
        let tau = TameGenerator::Tau.to_endo();
        assert_eq!(
            zdiag.to_endo().compose(&tau),
            tau.compose(&d.to_endo())
        );
    }

    #[test]
    fn word_inverse_round_trip() {
        let w = TameWord::new(vec![
            tri("y^2 + z*y"),
            TameGenerator::Tau,
            TameGenerator::Affine(
                Affine::new(
                    [[int(1), int(2)], [int(1), int(3)]],
                    [int(0), int(1)],
                    [int(2), int(0)],
                )
                .unwrap(),
            ),
        ]);
        assert!(w.concat(&w.invert()).is_identity());
        assert!(w.invert().concat(&w).is_identity());
    }

    #[test]
    fn generator_json_round_trip() {
        let gens = vec![
            tri("y^2 - 1/2*z"),
            TameGenerator::Tau,
            TameGenerator::Affine(
                Affine::new(
                    [[int(1), int(2)], [int(0), int(1)]],
                    [int(1), int(0)],
                    [int(0), int(-3)],
                )
                .unwrap(),
            ),
        ];
        let w = TameWord::new(gens);
        let s = serde_json::to_string(&w).unwrap();
        let back: TameWord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
