//! The group of z-tame automorphisms of Q<x,y,z>: generator words,
//! composition, inversion, normal forms, leading-term prediction,
//! z-Jacobians and elementary-factor certificates.

mod ge2;
mod generator;
mod jacobian;
mod normal_form;

pub use ge2::{ge2_certificate, ElementaryCertificate, Ge2Factor, Ge2Outcome, Mat2};
pub use generator::{Affine, GeneratorError, TameGenerator, TameWord, Triangular};
pub use jacobian::{jacobian, z_derivatives, Jacobian2x2, JacobianError};
pub use normal_form::{normalize, predict_leading, NormalForm, PredictError};

use crate::ncpoly::NCPolynomial;

/// An endomorphism of Q<x,y,z> fixing z, written as the pair of images
/// (f, g) of x and y.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZEndomorphism {
    pub f: NCPolynomial,
    pub g: NCPolynomial,
}

impl ZEndomorphism {
    pub fn new(f: NCPolynomial, g: NCPolynomial) -> Self {
        ZEndomorphism { f, g }
    }

    pub fn identity() -> Self {
        ZEndomorphism {
            f: NCPolynomial::x(),
            g: NCPolynomial::y(),
        }
    }

    /// Apply the endomorphism to a polynomial: substitute f for x and g for y.
    pub fn apply_to(&self, p: &NCPolynomial) -> NCPolynomial {
        p.substitute(&self.f, &self.g)
    }

    /// The product `self * rhs`: rhs acts first on the algebra, then self.
    /// Concretely, self's images are substituted into rhs's coordinates.
    /// A word of generators composes left-to-right with this product, so a
    /// word reads exactly like a product of automorphisms on paper.
    pub fn compose(&self, rhs: &ZEndomorphism) -> ZEndomorphism {
        ZEndomorphism {
            f: self.apply_to(&rhs.f),
            g: self.apply_to(&rhs.g),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.f == NCPolynomial::x() && self.g == NCPolynomial::y()
    }

    pub fn is_linear_in_xy(&self) -> bool {
        self.f.is_linear_in_xy() && self.g.is_linear_in_xy()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NCPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn compose_substitutes_left_images_into_right_coordinates() {
        let tri = ZEndomorphism::new(p("x + y^2"), p("y"));
        let tau = ZEndomorphism::new(p("y"), p("x"));
        // tri * tau: tau's coordinates (y, x) with tri's images plugged in
        let c = tri.compose(&tau);
        assert_eq!(c, ZEndomorphism::new(p("y"), p("x + y^2")));
        // the other order differs
        let c2 = tau.compose(&tri);
        assert_eq!(c2, ZEndomorphism::new(p("y + x^2"), p("x")));
    }

    #[test]
    fn identity_is_neutral() {
        let e = ZEndomorphism::new(p("x + z*y*z"), p("2*y - z"));
        let id = ZEndomorphism::identity();
        assert_eq!(e.compose(&id), e);
        assert_eq!(id.compose(&e), e);
    }
}
