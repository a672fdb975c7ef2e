//! Exact arithmetic in the free associative algebra Q<x,y,z> and the
//! constructive theory of z-tame automorphisms: normal forms in the
//! amalgamated free product of the z-affine and z-triangular subgroups,
//! the module action translating between z-exponent gaps and commutative
//! coefficients, z-Jacobians with elementary-factor certificates, and
//! decision procedures that certify z-tame automorphisms and coordinates.

pub mod autgroup;
pub mod cpoly;
pub mod formanek;
pub mod ncpoly;
pub mod recognize;
pub mod scalar;
pub mod text;

pub use autgroup::{
    ge2_certificate, jacobian, normalize, predict_leading, z_derivatives, Affine,
    ElementaryCertificate, Ge2Factor, Ge2Outcome, Jacobian2x2, Mat2, NormalForm, TameGenerator,
    TameWord, Triangular, ZEndomorphism,
};
pub use cpoly::{exact_divide, gcd, rational_root, CPolynomial, Family};
pub use formanek::{outer_compose, solve_outer, star_expand, to_form, FormanekForm};
pub use ncpoly::{BiDegree, Letter, NCPolynomial, Word};
pub use recognize::{
    mixed_monomial_filter, recognize_automorphism, recognize_coordinate, sigma_h, AutoDecision,
    CoordDecision, FilterDecision,
};
pub use scalar::Scalar;
