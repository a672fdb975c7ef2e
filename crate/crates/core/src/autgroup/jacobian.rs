//! z-derivatives and the z-Jacobian of endomorphisms linear in x and y.
//!
//! A polynomial linear in x, y with no pure-z part is a sum of monomials
//! z^i x z^j and z^i y z^j; its two z-derivatives are the commutative
//! polynomials in z1, z2 read off exponent-wise.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use super::ZEndomorphism;
use crate::cpoly::{CMonomial, CPolynomial, Family};
use crate::ncpoly::{Letter, NCPolynomial};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum JacobianError {
    #[error("polynomial is not a sum of monomials z^i x z^j and z^i y z^j")]
    NotLinearForm,
    #[error("endomorphism is not linear in x and y")]
    NotLinearInXY,
}

/// The pair (p_x, p_y) in Q[z1,z2] for p a sum of z^i x z^j and z^i y z^j.
pub fn z_derivatives(p: &NCPolynomial) -> Result<(CPolynomial, CPolynomial), JacobianError> {
    let mut px = CPolynomial::zero(Family::Zbar);
    let mut py = CPolynomial::zero(Family::Zbar);
    for (w, c) in p.terms() {
        let letters = w.letters();
        let pos = letters
            .iter()
            .position(|&l| l != Letter::Z)
            .ok_or(JacobianError::NotLinearForm)?;
        if letters[pos + 1..].iter().any(|&l| l != Letter::Z) {
            return Err(JacobianError::NotLinearForm);
        }
        let i = pos as u32;
        let j = (letters.len() - pos - 1) as u32;
        let m = CMonomial::from_exponents([0, i, j]);
        match letters[pos] {
            Letter::X => px.add_term(m, c.clone()),
            Letter::Y => py.add_term(m, c.clone()),
            Letter::Z => unreachable!(),
        }
    }
    Ok((px, py))
}

/// The z-Jacobian matrix ((f_x, g_x), (f_y, g_y)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jacobian2x2 {
    pub f_x: CPolynomial,
    pub g_x: CPolynomial,
    pub f_y: CPolynomial,
    pub g_y: CPolynomial,
}

impl Jacobian2x2 {
    pub fn det(&self) -> CPolynomial {
        &(&self.f_x * &self.g_y) - &(&self.g_x * &self.f_y)
    }

    pub fn identity() -> Self {
        Jacobian2x2 {
            f_x: CPolynomial::one(Family::Zbar),
            g_x: CPolynomial::zero(Family::Zbar),
            f_y: CPolynomial::zero(Family::Zbar),
            g_y: CPolynomial::one(Family::Zbar),
        }
    }

    /// Matrix product; composition of linear endomorphisms maps to this
    /// product in the same order.
    pub fn mul(&self, rhs: &Jacobian2x2) -> Jacobian2x2 {
        Jacobian2x2 {
            f_x: &(&self.f_x * &rhs.f_x) + &(&self.g_x * &rhs.f_y),
            g_x: &(&self.f_x * &rhs.g_x) + &(&self.g_x * &rhs.g_y),
            f_y: &(&self.f_y * &rhs.f_x) + &(&self.g_y * &rhs.f_y),
            g_y: &(&self.f_y * &rhs.g_x) + &(&self.g_y * &rhs.g_y),
        }
    }
}

impl Serialize for Jacobian2x2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Jacobian2x2", 2)?;
        let rows = [
            [
                crate::text::print_c(&self.f_x),
                crate::text::print_c(&self.g_x),
            ],
            [
                crate::text::print_c(&self.f_y),
                crate::text::print_c(&self.g_y),
            ],
        ];
        s.serialize_field("matrix", &rows)?;
        s.serialize_field("det", &crate::text::print_c(&self.det()))?;
        s.end()
    }
}

/// The z-Jacobian of an endomorphism whose coordinates are linear in x, y.
/// Pure-z summands (translations in z) are stripped before differentiating;
/// they do not affect membership in the elementary subgroup.
pub fn jacobian(e: &ZEndomorphism) -> Result<Jacobian2x2, JacobianError> {
    let strip = |p: &NCPolynomial| -> Result<NCPolynomial, JacobianError> {
        let kept = NCPolynomial::from_terms(
            p.terms()
                .filter(|(w, _)| w.xy_len() > 0)
                .map(|(w, c)| (w.clone(), c.clone())),
        );
        if !kept.is_linear_in_xy() {
            return Err(JacobianError::NotLinearInXY);
        }
        Ok(kept)
    };
    let f = strip(&e.f)?;
    let g = strip(&e.g)?;
    let (f_x, f_y) = z_derivatives(&f).map_err(|_| JacobianError::NotLinearInXY)?;
    let (g_x, g_y) = z_derivatives(&g).map_err(|_| JacobianError::NotLinearInXY)?;
    Ok(Jacobian2x2 { f_x, g_x, f_y, g_y })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NCPolynomial {
        s.parse().unwrap()
    }

    fn c(s: &str) -> CPolynomial {
        crate::text::parse_c_zbar(s).unwrap()
    }

    #[test]
    fn z_derivative_examples() {
        let (px, py) = z_derivatives(&p("x + z*x*z")).unwrap();
        assert_eq!(px, c("1 + zb1*zb2"));
        assert!(py.is_zero());

        let (px, py) = z_derivatives(&p("-z^2*y")).unwrap();
        assert!(px.is_zero());
        assert_eq!(py, c("-zb1^2"));

        let (px, py) = z_derivatives(&p("x + y")).unwrap();
        assert_eq!(px, c("1"));
        assert_eq!(py, c("1"));

        assert_eq!(
            z_derivatives(&p("x*y")),
            Err(JacobianError::NotLinearForm)
        );
        assert_eq!(z_derivatives(&p("z")), Err(JacobianError::NotLinearForm));
    }

    #[test]
    fn anick_jacobian() {
        let e = ZEndomorphism::new(p("x + z*(x*z - z*y)"), p("y + (x*z - z*y)*z"));
        let j = jacobian(&e).unwrap();
        assert_eq!(j.f_x, c("1 + zb1*zb2"));
        assert_eq!(j.g_x, c("zb2^2"));
        assert_eq!(j.f_y, c("-zb1^2"));
        assert_eq!(j.g_y, c("1 - zb1*zb2"));
        assert_eq!(j.det(), c("1"));
    }

    #[test]
    fn identity_and_swap() {
        let j = jacobian(&ZEndomorphism::identity()).unwrap();
        assert_eq!(j, Jacobian2x2::identity());

        let tau = ZEndomorphism::new(p("y"), p("x"));
        let j = jacobian(&tau).unwrap();
        assert!(j.f_x.is_zero());
        assert_eq!(j.g_x, c("1"));
        assert_eq!(j.f_y, c("1"));
        assert!(j.g_y.is_zero());
    }

    #[test]
    fn jacobian_is_multiplicative() {
        let e1 = ZEndomorphism::new(p("y"), p("x"));
        let e2 = ZEndomorphism::new(p("x + z*y*z"), p("y"));
        let j = jacobian(&e1.compose(&e2)).unwrap();
        assert_eq!(j, jacobian(&e1).unwrap().mul(&jacobian(&e2).unwrap()));
    }

    #[test]
    fn translations_are_stripped() {
        let e = ZEndomorphism::new(p("x + z^3 - 2"), p("y + z"));
        let j = jacobian(&e).unwrap();
        assert_eq!(j, Jacobian2x2::identity());
    }
}
