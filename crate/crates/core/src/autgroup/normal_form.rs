//! Normal forms rho_n tau ... tau rho_0 in the z-tame group and the
//! leading-term formulas they satisfy.
//!
//! A word is first arranged as an alternating product B tau B tau ... B of
//! triangular blocks. Two rewriting identities then push z-diagonal junk to
//! the right end and strike interior blocks whose cleaned part is affine,
//! strictly decreasing the number of taus, until the interior blocks are
//! genuinely nonaffine. The right end rho_0 absorbs everything; all other
//! blocks end up in the shape (x + p(y,z), y) with p(0,z) = 0.

use num::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use super::generator::{TameGenerator, TameWord, Triangular};
use super::ZEndomorphism;
use crate::ncpoly::{Letter, NCPolynomial, Word};
use crate::scalar::Scalar;

/// The normalized shape rho_n tau rho_{n-1} tau ... tau rho_0 (product order,
/// rho_0 acting first on the algebra). `rhos[i]` is rho_i. For i >= 1 the
/// block is (x + p_i(y,z), y) with p_i(0,z) = 0, and the interior blocks
/// 1..n-1 are not affine maps; rho_0 is a general triangular map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    rhos: Vec<Triangular>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PredictError {
    #[error("the normal form is trivial")]
    TrivialWord,
    #[error("the normal form is outside the proved case split")]
    OutsideCaseSplit,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm {
            rhos: vec![Triangular::identity()],
        }
    }

    /// Construct from blocks rho_0, ..., rho_n. Intended for generated test
    /// data; `normalize` is the way to obtain one from an arbitrary word.
    pub fn from_rhos(rhos: Vec<Triangular>) -> Self {
        assert!(!rhos.is_empty());
        NormalForm { rhos }
    }

    pub fn n(&self) -> usize {
        self.rhos.len() - 1
    }

    pub fn rho(&self, i: usize) -> &Triangular {
        &self.rhos[i]
    }

    pub fn rhos(&self) -> &[Triangular] {
        &self.rhos
    }

    pub fn rho0_is_affine(&self) -> bool {
        self.rhos[0].is_affine_map()
    }

    pub fn rho_n_is_affine(&self) -> bool {
        self.rhos[self.rhos.len() - 1].is_affine_map()
    }

    /// The word [rho_n, tau, rho_{n-1}, ..., tau, rho_0].
    pub fn to_word(&self) -> TameWord {
        let mut gens = Vec::new();
        for (k, rho) in self.rhos.iter().rev().enumerate() {
            if k > 0 {
                gens.push(TameGenerator::Tau);
            }
            gens.push(TameGenerator::Triangular(rho.clone()));
        }
        TameWord::new(gens)
    }

    pub fn apply(&self) -> ZEndomorphism {
        self.to_word().apply()
    }

    pub fn is_identity_form(&self) -> bool {
        self.n() == 0 && self.rhos[0].is_identity()
    }

    /// Check the structural invariants (used by tests and by `normalize`'s
    /// own debug assertions).
    pub fn invariants_hold(&self) -> bool {
        let n = self.n();
        for (i, rho) in self.rhos.iter().enumerate().skip(1) {
            if !rho.a1().is_one() || !rho.a2().is_one() || !rho.p2().is_zero() {
                return false;
            }
            if !rho.p1_z_part().is_zero() {
                return false;
            }
            if i >= 1 && i <= n.saturating_sub(1) && cleaned_affine_coefficient(rho).is_some() {
                return false;
            }
        }
        true
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("NormalForm", 2)?;
        s.serialize_field("n", &self.n())?;
        let rhos: Vec<TameGenerator> = self
            .rhos
            .iter()
            .map(|r| TameGenerator::Triangular(r.clone()))
            .collect();
        s.serialize_field("rhos", &rhos)?;
        s.end()
    }
}

/// If the cleaned part of the block is the affine map (x + c*y, y), return
/// Some(c) (c = 0 encodes the identity).
fn cleaned_affine_coefficient(b: &Triangular) -> Option<Scalar> {
    let (clean, _) = b.split_clean();
    let p1 = clean.p1();
    if p1.is_zero() {
        return Some(Scalar::zero());
    }
    let y_word = Word::single(Letter::Y);
    if p1.terms().all(|(w, _)| *w == y_word) {
        Some(p1.coeff(&y_word))
    } else {
        None
    }
}

/// Bring an arbitrary tame word to normal form. The induced endomorphism is
/// preserved exactly; the empty word yields the identity form.
pub fn normalize(word: &TameWord) -> NormalForm {
    // Arrange as alternating blocks: segs[0] tau segs[1] tau ... tau segs[m].
    let mut segs: Vec<Triangular> = vec![Triangular::identity()];
    for gen in word.generators() {
        match gen {
            TameGenerator::Tau => segs.push(Triangular::identity()),
            TameGenerator::Triangular(t) => {
                let last = segs.last_mut().unwrap();
                *last = last.compose_tri(t);
            }
            TameGenerator::Affine(a) => {
                if let Some(t) = a.to_triangular() {
                    let last = segs.last_mut().unwrap();
                    *last = last.compose_tri(&t);
                } else {
                    let (l1, l2) = a.bruhat();
                    let last = segs.last_mut().unwrap();
                    *last = last.compose_tri(&l1);
                    segs.push(l2);
                }
            }
        }
    }

    // Strike interior blocks whose cleaned part is affine; every rewrite
    // removes at least one tau.
    'reduce: loop {
        let m = segs.len() - 1;
        if m < 2 {
            break;
        }
        for j in 1..m {
            let coeff = cleaned_affine_coefficient(&segs[j]);
            let Some(gamma) = coeff else { continue };
            let (clean, d) = segs[j].split_clean();
            let d_moved = d.commute_past_tau();
            if gamma.is_zero() {
                // tau (d) tau = d', taus cancel; merge three blocks into one
                debug_assert!(clean.is_identity());
                let merged = segs[j - 1]
                    .compose_tri(&d_moved)
                    .compose_tri(&segs[j + 1]);
                segs[j - 1] = merged;
                segs.drain(j..=j + 1);
            } else {
                // tau (x + gamma*y, y) tau = (x, gamma*x + y) = A tau B
                let u = super::generator::Affine::new(
                    [[Scalar::one(), gamma], [Scalar::zero(), Scalar::one()]],
                    [Scalar::zero(), Scalar::zero()],
                    [Scalar::zero(), Scalar::zero()],
                )
                .expect("unipotent matrix is invertible");
                let (a, b) = u.bruhat();
                segs[j - 1] = segs[j - 1].compose_tri(&a);
                let right = b.compose_tri(&d_moved).compose_tri(&segs[j + 1]);
                segs[j + 1] = right;
                segs.remove(j);
            }
            continue 'reduce;
        }
        break;
    }

    // Sweep z-diagonal parts rightwards through the taus; rho_0 absorbs them.
    for j in 0..segs.len() - 1 {
        let (clean, d) = segs[j].split_clean();
        segs[j] = clean;
        let d_moved = d.commute_past_tau();
        segs[j + 1] = d_moved.compose_tri(&segs[j + 1]);
    }

    // segs[0] is rho_n, segs[m] is rho_0
    segs.reverse();
    let nf = NormalForm { rhos: segs };
    debug_assert!(nf.invariants_hold());
    nf
}

/// The predicted leading bihomogeneous components (f-bar, g-bar) of the
/// endomorphism induced by a normal form, by nesting the leading components
/// q_i of the p_i. Only the three proved shapes are handled:
/// (A) rho_n nonlinear and rho_0 not affine,
/// (B) rho_0 affine with nonzero y-coefficient and rho_n nonlinear,
/// (C) rho_0 not affine and rho_n = (x + c*y, y).
pub fn predict_leading(nf: &NormalForm) -> Result<(NCPolynomial, NCPolynomial), PredictError> {
    let n = nf.n();
    let rho0 = nf.rho(0);
    let beta0 = rho0.a2().clone();

    if n == 0 {
        let e = rho0.to_endo();
        if e.is_identity() {
            return Err(PredictError::TrivialWord);
        }
        let fbar = e.f.leading_bicomponent(1, 1).map_err(|_| PredictError::OutsideCaseSplit)?;
        let gbar = e.g.leading_bicomponent(1, 1).map_err(|_| PredictError::OutsideCaseSplit)?;
        return Ok((fbar, gbar));
    }

    let leading = |p: &NCPolynomial| p.leading_bicomponent(1, 1).expect("nonzero block");

    // classify rho_0: affine means p_0 = gamma*y + (z-part) with gamma != 0
    let p0 = rho0.p1();
    let y_word = Word::single(Letter::Y);
    let gamma0 = p0.coeff(&y_word);
    let mixed0 = p0
        .terms()
        .any(|(w, _)| w.contains(Letter::Y) && *w != y_word);
    let rho0_affine = !mixed0 && !gamma0.is_zero();
    let rho0_nonaffine = mixed0;

    // classify rho_n: linear means p_n = c*y with c != 0
    let pn = nf.rho(n).p1();
    if pn.is_zero() {
        return Err(PredictError::OutsideCaseSplit);
    }
    let gamma_n = pn.coeff(&y_word);
    let rho_n_linear = pn.terms().all(|(w, _)| *w == y_word);

    // inner chain q_i(y -> acc) folded from the inside out
    let fold_chain = |start: NCPolynomial, upper: usize, lower: usize| -> NCPolynomial {
        let mut acc = start;
        let mut i = upper;
        loop {
            if i < lower {
                break;
            }
            let qi = leading(nf.rho(i).p1());
            acc = qi.substitute(&NCPolynomial::x(), &acc);
            if i == 0 {
                break;
            }
            i -= 1;
        }
        acc
    };

    if !rho_n_linear && rho0_nonaffine {
        // case A
        let qn = leading(pn);
        let chain1 = fold_chain(qn, n - 1, 1); // q_1(...q_n)
        let fbar = leading(p0).substitute(&NCPolynomial::x(), &chain1);
        let gbar = chain1.scale(&beta0);
        Ok((fbar, gbar))
    } else if !rho_n_linear && rho0_affine {
        // case B
        let qn = leading(pn);
        let chain1 = fold_chain(qn, n - 1, 1);
        let fbar = chain1.scale(&gamma0);
        let gbar = chain1.scale(&beta0);
        Ok((fbar, gbar))
    } else if rho_n_linear && rho0_nonaffine {
        // case C: the argument fed to the chain is x + gamma_n * y itself
        let start = &NCPolynomial::x() + &NCPolynomial::y().scale(&gamma_n);
        let chain1 = fold_chain(start, n - 1, 1);
        let fbar = leading(p0).substitute(&NCPolynomial::x(), &chain1);
        let gbar = chain1.scale(&beta0);
        Ok((fbar, gbar))
    } else {
        Err(PredictError::OutsideCaseSplit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(s: &str) -> NCPolynomial {
        s.parse().unwrap()
    }

    fn uni(p1: &str) -> Triangular {
        Triangular::unitriangular(p(p1)).unwrap()
    }

    fn tri_gen(p1: &str) -> TameGenerator {
        TameGenerator::Triangular(uni(p1))
    }

    #[test]
    fn inverse_pair_merges_to_identity_form() {
        let w = TameWord::new(vec![tri_gen("y^2"), tri_gen("-y^2")]);
        let nf = normalize(&w);
        assert!(nf.is_identity_form());
    }

    #[test]
    fn already_normal_word_stays_n1() {
        let w = TameWord::new(vec![tri_gen("y^2"), TameGenerator::Tau, tri_gen("y^2")]);
        let nf = normalize(&w);
        assert_eq!(nf.n(), 1);
        assert_eq!(nf.apply(), w.apply());
        assert!(nf.invariants_hold());
    }

    #[test]
    fn interior_affine_block_is_pushed_out() {
        // affine swap-like interior: tau (x + 2y, y) tau collapses to one tau
        let w = TameWord::new(vec![
            tri_gen("y^3"),
            TameGenerator::Tau,
            tri_gen("2*y"),
            TameGenerator::Tau,
            tri_gen("y^2 + z^2"),
        ]);
        let nf = normalize(&w);
        assert_eq!(nf.apply(), w.apply());
        assert!(nf.invariants_hold());
        assert_eq!(nf.n(), 1);
    }

    #[test]
    fn z_diagonal_interior_cancels_taus() {
        let zd = TameGenerator::Triangular(
            Triangular::new(int(2), p("z^2"), int(3), p("z")).unwrap(),
        );
        let w = TameWord::new(vec![
            tri_gen("y^2"),
            TameGenerator::Tau,
            zd,
            TameGenerator::Tau,
            tri_gen("y*z*y"),
        ]);
        let nf = normalize(&w);
        assert_eq!(nf.apply(), w.apply());
        assert!(nf.invariants_hold());
        assert_eq!(nf.n(), 0);
    }

    #[test]
    fn affine_generator_with_swap_normalizes() {
        let a = super::super::generator::Affine::new(
            [[int(0), int(1)], [int(1), int(0)]],
            [int(0), int(0)],
            [int(0), int(0)],
        )
        .unwrap();
        // a pure swap followed by a triangular with p = z^2
        let w = TameWord::new(vec![
            TameGenerator::Affine(a),
            TameGenerator::Triangular(Triangular::new(int(1), p("z^2"), int(1), p("0")).unwrap()),
        ]);
        let nf = normalize(&w);
        assert_eq!(nf.apply(), w.apply());
        assert!(nf.invariants_hold());
    }

    #[test]
    fn empty_word_is_identity_form() {
        let nf = normalize(&TameWord::empty());
        assert!(nf.is_identity_form());
        assert!(nf.apply().is_identity());
    }

    #[test]
    fn tau_word_normalizes_and_reapplies() {
        let w = TameWord::new(vec![TameGenerator::Tau]);
        let nf = normalize(&w);
        assert_eq!(nf.apply(), w.apply());
    }

    #[test]
    fn predict_n0() {
        let nf = NormalForm::from_rhos(vec![uni("y^2")]);
        let (fbar, gbar) = predict_leading(&nf).unwrap();
        assert_eq!(fbar, p("y^2"));
        assert_eq!(gbar, p("y"));
    }

    #[test]
    fn predict_n1_main_case() {
        let nf = NormalForm::from_rhos(vec![uni("y^2"), uni("y^2")]);
        let (fbar, gbar) = predict_leading(&nf).unwrap();
        // f = y + (x+y^2)^2, leading = y^4
        assert_eq!(fbar, p("y^4"));
        assert_eq!(gbar, p("y^2"));
        let e = nf.apply();
        assert_eq!(e.f, p("y + (x + y^2)^2"));
        assert_eq!(e.f.leading_bicomponent(1, 1).unwrap(), fbar);
        assert_eq!(e.g.leading_bicomponent(1, 1).unwrap(), gbar);
    }

    #[test]
    fn predict_asymmetric_nesting_order() {
        // rho_0 = (x + y*z*y, y), rho_1 = (x + y^2, y):
        // f-bar must be q_0(q_1) = (y^2) z (y^2), not (y z y)^2
        let nf = NormalForm::from_rhos(vec![uni("y*z*y"), uni("y^2")]);
        let (fbar, gbar) = predict_leading(&nf).unwrap();
        assert_eq!(fbar, p("y^2*z*y^2"));
        assert_eq!(gbar, p("y^2"));
        let e = nf.apply();
        assert_eq!(e.f.leading_bicomponent(1, 1).unwrap(), fbar);
        assert_eq!(e.g.leading_bicomponent(1, 1).unwrap(), gbar);
    }

    #[test]
    fn predict_affine_rho0_case() {
        // rho_0 = (x + 3y + z^2, 2y + z), rho_1 = (x + y^2, y)
        let rho0 = Triangular::new(int(1), p("3*y + z^2"), int(2), p("z")).unwrap();
        let nf = NormalForm::from_rhos(vec![rho0, uni("y^2")]);
        let (fbar, gbar) = predict_leading(&nf).unwrap();
        assert_eq!(fbar, p("3*y^2"));
        assert_eq!(gbar, p("2*y^2"));
        let e = nf.apply();
        assert_eq!(e.f.leading_bicomponent(1, 1).unwrap(), fbar);
        assert_eq!(e.g.leading_bicomponent(1, 1).unwrap(), gbar);
    }

    #[test]
    fn predict_linear_rho_n_case() {
        // rho_0 = (x + y^2, y), rho_1 = (x + 2y, y)
        let nf = NormalForm::from_rhos(vec![uni("y^2"), uni("2*y")]);
        let (fbar, gbar) = predict_leading(&nf).unwrap();
        assert_eq!(fbar, p("(x + 2*y)^2"));
        assert_eq!(gbar, p("x + 2*y"));
        let e = nf.apply();
        assert_eq!(e.f.leading_bicomponent(1, 1).unwrap(), fbar);
        assert_eq!(e.g.leading_bicomponent(1, 1).unwrap(), gbar);
    }

    #[test]
    fn predict_rejects_trivial() {
        assert_eq!(
            predict_leading(&NormalForm::identity()),
            Err(PredictError::TrivialWord)
        );
    }

    #[test]
    fn nontrivial_forms_are_not_identity() {
        let nf = NormalForm::from_rhos(vec![uni("y*z*y"), uni("y^2")]);
        assert!(!nf.to_word().is_identity());
    }
}
