//! Sparse exact arithmetic in the free associative algebra Q<x,y,z>.
//!
//! A polynomial is a finite map from words over {x,y,z} to nonzero rational
//! coefficients. Words are ordered length-first, then lexicographically, which
//! fixes a canonical iteration and printing order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;
use thiserror::Error;

use crate::scalar::Scalar;

/// One of the three free generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Letter {
    X,
    Y,
    Z,
}

/// A monomial: a finite word over {x,y,z}. The empty word is 1.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn from_letters(ls: impl IntoIterator<Item = Letter>) -> Self {
        Word(ls.into_iter().collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&c| c == l).count()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.0.contains(&l)
    }

    /// Count of x-letters plus y-letters.
    pub fn xy_len(&self) -> usize {
        self.0.iter().filter(|&&c| c != Letter::Z).count()
    }

    /// Exchange x and y throughout; z is fixed.
    pub fn swap_xy(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|&l| match l {
                    Letter::X => Letter::Y,
                    Letter::Y => Letter::X,
                    Letter::Z => Letter::Z,
                })
                .collect(),
        )
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Bidegree of a monomial: (deg_x + deg_y, deg_z), ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct BiDegree {
    pub xy: usize,
    pub z: usize,
}

impl BiDegree {
    pub fn new(xy: usize, z: usize) -> Self {
        BiDegree { xy, z }
    }
}

/// (a,b)-bidegree: (a*deg_x + b*deg_y, deg_z), ordered lexicographically.
/// Weights may be negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct WeightedBiDegree {
    pub weighted_xy: i64,
    pub z: usize,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NcError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
}

/// Sparse noncommutative polynomial over Q.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        NCPolynomial::default()
    }

    pub fn one() -> Self {
        NCPolynomial::constant(crate::scalar::int(1))
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = NCPolynomial::default();
        p.add_term(Word::empty(), c);
        p
    }

    pub fn var(l: Letter) -> Self {
        let mut p = NCPolynomial::default();
        p.add_term(Word::single(l), crate::scalar::int(1));
        p
    }

    pub fn x() -> Self {
        Self::var(Letter::X)
    }

    pub fn y() -> Self {
        Self::var(Letter::Y)
    }

    pub fn z() -> Self {
        Self::var(Letter::Z)
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NCPolynomial::default();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NCPolynomial::default();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Add `c` to the coefficient of `w`, pruning zeros.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (length-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> NCPolynomial {
        if c.is_zero() {
            return NCPolynomial::zero();
        }
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// Maximal count of `l` over monomials; None for the zero polynomial.
    pub fn degree_in(&self, l: Letter) -> Option<usize> {
        self.terms.keys().map(|w| w.count(l)).max()
    }

    /// Maximal deg_x + deg_y; None for the zero polynomial.
    pub fn xy_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.xy_len()).max()
    }

    /// Leading bidegree (lexicographic max of (deg_x+deg_y, deg_z)); None for 0.
    pub fn bidegree(&self) -> Option<BiDegree> {
        self.terms
            .keys()
            .map(|w| BiDegree::new(w.xy_len(), w.count(Letter::Z)))
            .max()
    }

    fn weighted(w: &Word, a: i64, b: i64) -> WeightedBiDegree {
        WeightedBiDegree {
            weighted_xy: a * w.count(Letter::X) as i64 + b * w.count(Letter::Y) as i64,
            z: w.count(Letter::Z),
        }
    }

    /// Leading (a,b)-bidegree; None for the zero polynomial.
    pub fn weighted_bidegree(&self, a: i64, b: i64) -> Option<WeightedBiDegree> {
        self.terms.keys().map(|w| Self::weighted(w, a, b)).max()
    }

    /// Sum of the monomials attaining the maximal (a,b)-bidegree.
    pub fn leading_bicomponent(&self, a: i64, b: i64) -> Result<NCPolynomial, NcError> {
        let top = self.weighted_bidegree(a, b).ok_or(NcError::ZeroPolynomial)?;
        Ok(NCPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| Self::weighted(w, a, b) == top)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        })
    }

    /// Apply the endomorphism x -> image_x, y -> image_y, z -> z.
    pub fn substitute(&self, image_x: &NCPolynomial, image_y: &NCPolynomial) -> NCPolynomial {
        let mut acc = NCPolynomial::zero();
        for (w, c) in &self.terms {
            let mut prod = NCPolynomial::constant(c.clone());
            for l in w.letters() {
                prod = match l {
                    Letter::X => &prod * image_x,
                    Letter::Y => &prod * image_y,
                    Letter::Z => &prod * &NCPolynomial::z(),
                };
                if prod.is_zero() {
                    break;
                }
            }
            acc = &acc + &prod;
        }
        acc
    }

    /// Exchange the letters x and y (the substitution of tau).
    pub fn swap_xy(&self) -> NCPolynomial {
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.swap_xy(), c.clone()))
                .collect(),
        }
    }

    /// The monomials of `self` not containing `l`. Equals substituting 0 for `l`.
    pub fn without_letter(&self, l: Letter) -> NCPolynomial {
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| !w.contains(l))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// True iff every monomial has deg_x = deg_y = 0 (includes constants and 0).
    pub fn depends_only_on_z(&self) -> bool {
        self.terms.keys().all(|w| w.xy_len() == 0)
    }

    /// True iff every monomial has deg_x + deg_y <= 1.
    pub fn is_linear_in_xy(&self) -> bool {
        self.terms.keys().all(|w| w.xy_len() <= 1)
    }

    pub fn pow(&self, n: usize) -> NCPolynomial {
        let mut acc = NCPolynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(s: &str) -> NCPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn word_order_is_length_then_lex() {
        use Letter::*;
        let mut ws = vec![
            Word::from_letters([Z, Z]),
            Word::from_letters([X]),
            Word::from_letters([Z, X, Z]),
            Word::empty(),
            Word::from_letters([Y]),
        ];
        ws.sort();
        assert_eq!(
            ws,
            vec![
                Word::empty(),
                Word::from_letters([X]),
                Word::from_letters([Y]),
                Word::from_letters([Z, Z]),
                Word::from_letters([Z, X, Z]),
            ]
        );
    }

    #[test]
    fn multiplication_is_noncommutative() {
        let xy = &NCPolynomial::x() * &NCPolynomial::y();
        let yx = &NCPolynomial::y() * &NCPolynomial::x();
        assert_eq!(xy, p("x*y"));
        assert_eq!(yx, p("y*x"));
        assert_ne!(xy, yx);
    }

    #[test]
    fn additive_inverse() {
        let q = p("x + 2*y*z - 3/2*z^2");
        assert!((&q + &q.scale(&int(-1))).is_zero());
    }

    #[test]
    fn multiplication_is_associative_on_example() {
        let z = NCPolynomial::z();
        let x = NCPolynomial::x();
        let left = &z * &(&x * &z);
        let right = &(&z * &x) * &z;
        assert_eq!(left, right);
        assert_eq!(left, p("z*x*z"));
    }

    #[test]
    fn degree_in_examples() {
        assert_eq!(p("z*x*z + y").degree_in(Letter::X), Some(1));
        assert_eq!(NCPolynomial::zero().degree_in(Letter::Y), None);
        // x + z(xz - zy) expands to x + zxz - zzy
        assert_eq!(p("x + z*(x*z - z*y)").degree_in(Letter::Z), Some(2));
    }

    #[test]
    fn leading_bicomponent_examples() {
        assert_eq!(p("x + z*x*z").leading_bicomponent(1, 1).unwrap(), p("z*x*z"));
        // weights (2,1): x has value (2,0) and y^2 has value (2,0); both stay
        assert_eq!(p("x + y^2").leading_bicomponent(2, 1).unwrap(), p("x + y^2"));
        assert_eq!(p("x + y^2").leading_bicomponent(1, 1).unwrap(), p("y^2"));
    }

    #[test]
    fn substitute_examples() {
        // tau
        assert_eq!(
            p("x*y").substitute(&NCPolynomial::y(), &NCPolynomial::x()),
            p("y*x")
        );
        let q = p("x + z*x*z").substitute(&p("x + y^2"), &NCPolynomial::y());
        assert_eq!(q, p("x + y^2 + z*(x + y^2)*z"));
        let r = p("3*x*y*x - z + 1/2");
        assert_eq!(r.substitute(&NCPolynomial::x(), &NCPolynomial::y()), r);
    }

    #[test]
    fn z_only_and_linearity_predicates() {
        assert!(p("z^3 + 2").depends_only_on_z());
        assert!(p("z*x*z + z^2*y + z").is_linear_in_xy());
        assert!(!p("x*z - z*y + x*y").is_linear_in_xy());
    }

    #[test]
    fn without_letter_is_substituting_zero() {
        let f = p("x + x*y - z*y + z^3");
        assert_eq!(f.without_letter(Letter::Y), p("x + z^3"));
        assert_eq!(
            f.without_letter(Letter::Y),
            f.substitute(&NCPolynomial::x(), &NCPolynomial::zero())
        );
    }
}
