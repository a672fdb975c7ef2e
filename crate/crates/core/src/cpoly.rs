//! Sparse commutative multivariate polynomials over Q, for the coefficient
//! rings Q[t0,...,tN] and Q[z1,z2].
//!
//! Monomials are ordered in graded lexicographic order with t0 < t1 < ...
//! (and z1 < z2), so leading terms are deterministic. GCD is computed by
//! recursive content/primitive-part reduction with subresultant
//! pseudo-remainder sequences in the highest-index variable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

/// Which indexed variable family a polynomial lives in: t0,t1,... or z1,z2.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    T,
    Zbar,
}

/// Exponent vector, position i = exponent of variable index i.
/// Trailing zeros are trimmed. For the Zbar family only indices 1 and 2 are
/// used (position 0 is always zero).
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct CMonomial(Vec<u32>);

impl CMonomial {
    pub fn one() -> Self {
        CMonomial(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        let mut v = vec![0; index + 1];
        v[index] = 1;
        CMonomial(v)
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = exps.into_iter().collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        CMonomial(v)
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Highest variable index with a nonzero exponent, if any.
    pub fn max_index(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn min_index(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    pub fn mul(&self, other: &CMonomial) -> CMonomial {
        let n = self.0.len().max(other.0.len());
        CMonomial::from_exponents((0..n).map(|i| self.exponent(i) + other.exponent(i)))
    }

    /// Componentwise quotient if `other` divides `self`.
    pub fn checked_div(&self, other: &CMonomial) -> Option<CMonomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            let (a, b) = (self.exponent(i), other.exponent(i));
            if b > a {
                return None;
            }
            out.push(a - b);
        }
        Some(CMonomial::from_exponents(out))
    }
}

impl Ord for CMonomial {
    // graded lex with t0 < t1 < ...: total degree first, then the exponent of
    // the highest differing variable decides.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let n = self.0.len().max(other.0.len());
                for i in (0..n).rev() {
                    match self.exponent(i).cmp(&other.exponent(i)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for CMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CpolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("index shift would produce a negative variable index")]
    NegativeIndex,
}

/// Sparse commutative polynomial over Q in an indexed variable family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPolynomial {
    family: Family,
    terms: BTreeMap<CMonomial, Scalar>,
}

impl CPolynomial {
    pub fn zero(family: Family) -> Self {
        CPolynomial {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(family: Family, c: Scalar) -> Self {
        let mut p = CPolynomial::zero(family);
        p.add_term(CMonomial::one(), c);
        p
    }

    pub fn one(family: Family) -> Self {
        CPolynomial::constant(family, crate::scalar::int(1))
    }

    /// The variable t_index (family T) or z_index (family Zbar, index 1 or 2).
    pub fn var(family: Family, index: usize) -> Self {
        if family == Family::Zbar {
            assert!(index == 1 || index == 2, "Zbar family uses indices 1 and 2");
        }
        let mut p = CPolynomial::zero(family);
        p.add_term(CMonomial::var(index), crate::scalar::int(1));
        p
    }

    pub fn t(index: usize) -> Self {
        CPolynomial::var(Family::T, index)
    }

    pub fn zb(index: usize) -> Self {
        CPolynomial::var(Family::Zbar, index)
    }

    pub fn from_terms(
        family: Family,
        terms: impl IntoIterator<Item = (CMonomial, Scalar)>,
    ) -> Self {
        let mut p = CPolynomial::zero(family);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn add_term(&mut self, m: CMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            return self.terms.get(&CMonomial::one()).cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &CMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Highest variable index occurring, if the polynomial is nonconstant.
    pub fn max_var_index(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.max_index()).max()
    }

    pub fn min_var_index(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.min_index()).min()
    }

    /// Leading term in graded lex order.
    pub fn leading_term(&self) -> Option<(&CMonomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Scalar) -> CPolynomial {
        if c.is_zero() {
            return CPolynomial::zero(self.family);
        }
        CPolynomial {
            family: self.family,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    /// Divide by the leading coefficient so the graded-lex leading coefficient
    /// is 1. Zero stays zero.
    pub fn monic(&self) -> CPolynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = Scalar::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> CPolynomial {
        CPolynomial {
            family: self.family,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(index))
            .max()
            .unwrap_or(0)
    }

    fn check_family(&self, other: &CPolynomial) -> Family {
        if self.family == other.family || other.is_constant() {
            self.family
        } else if self.is_constant() {
            other.family
        } else {
            panic!("mixed variable families");
        }
    }

    /// Replace every variable index i by i + offset.
    pub fn shift_indices(&self, offset: i64) -> Result<CPolynomial, CpolyError> {
        if offset < 0 {
            if let Some(min) = self.min_var_index() {
                if (min as i64) + offset < 0 {
                    return Err(CpolyError::NegativeIndex);
                }
            }
        }
        let mut out = CPolynomial::zero(self.family);
        for (m, c) in &self.terms {
            let mut exps: Vec<u32> = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let j = (i as i64 + offset) as usize;
                    if exps.len() <= j {
                        exps.resize(j + 1, 0);
                    }
                    exps[j] = e;
                }
            }
            out.add_term(CMonomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    /// Replace every variable index i by i * factor.
    pub fn dilate_indices(&self, factor: usize) -> CPolynomial {
        assert!(factor >= 1);
        let mut out = CPolynomial::zero(self.family);
        for (m, c) in &self.terms {
            let mut exps: Vec<u32> = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let j = i * factor;
                    if exps.len() <= j {
                        exps.resize(j + 1, 0);
                    }
                    exps[j] = e;
                }
            }
            out.add_term(CMonomial::from_exponents(exps), c.clone());
        }
        out
    }

    /// Inverse of `dilate_indices`: succeeds iff every occurring index is a
    /// multiple of `factor`.
    pub fn contract_indices(&self, factor: usize) -> Option<CPolynomial> {
        assert!(factor >= 1);
        let mut out = CPolynomial::zero(self.family);
        for (m, c) in &self.terms {
            let mut exps: Vec<u32> = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    if i % factor != 0 {
                        return None;
                    }
                    let j = i / factor;
                    if exps.len() <= j {
                        exps.resize(j + 1, 0);
                    }
                    exps[j] = e;
                }
            }
            out.add_term(CMonomial::from_exponents(exps), c.clone());
        }
        Some(out)
    }
}

impl Add for &CPolynomial {
    type Output = CPolynomial;
    fn add(self, rhs: &CPolynomial) -> CPolynomial {
        let family = self.check_family(rhs);
        let mut out = self.clone();
        out.family = family;
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CPolynomial {
    type Output = CPolynomial;
    fn sub(self, rhs: &CPolynomial) -> CPolynomial {
        let family = self.check_family(rhs);
        let mut out = self.clone();
        out.family = family;
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &CPolynomial {
    type Output = CPolynomial;
    fn neg(self) -> CPolynomial {
        CPolynomial {
            family: self.family,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &CPolynomial {
    type Output = CPolynomial;
    fn mul(self, rhs: &CPolynomial) -> CPolynomial {
        let family = self.check_family(rhs);
        let mut out = CPolynomial::zero(family);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// Exact polynomial division. Returns the quotient q with num = q*den, or
/// NotDivisible when no such polynomial exists. Decided by multivariate
/// division against the graded-lex leading term: since the ring is an
/// integral domain, a nonzero remainder step proves indivisibility.
pub fn exact_divide(num: &CPolynomial, den: &CPolynomial) -> Result<CPolynomial, CpolyError> {
    if den.is_zero() {
        return Err(CpolyError::DivisionByZero);
    }
    let family = if num.is_constant() {
        den.family()
    } else {
        num.family()
    };
    let mut quotient = CPolynomial::zero(family);
    let mut rem = num.clone();
    let (den_lm, den_lc) = {
        let (m, c) = den.leading_term().unwrap();
        (m.clone(), c.clone())
    };
    while let Some((rm, rc)) = rem.leading_term() {
        let qm = match rm.checked_div(&den_lm) {
            Some(qm) => qm,
            None => return Err(CpolyError::NotDivisible),
        };
        let qc = rc.clone() / den_lc.clone();
        let t = CPolynomial::from_terms(family, [(qm, qc)]);
        rem = &rem - &(&t * den);
        quotient = &quotient + &t;
    }
    Ok(quotient)
}

// --- multivariate gcd via content/primitive-part + subresultant PRS ---

/// A polynomial viewed as univariate in one main variable, with multivariate
/// coefficients (free of that variable).
struct UPoly {
    coeffs: Vec<CPolynomial>, // coeffs[i] multiplies main^i
}

impl UPoly {
    fn from(p: &CPolynomial, main: usize) -> UPoly {
        let family = p.family();
        let deg = p.degree_in(main) as usize;
        let mut coeffs = vec![CPolynomial::zero(family); deg + 1];
        for (m, c) in p.terms() {
            let e = m.exponent(main) as usize;
            let rest = CMonomial::from_exponents(
                m.exponents()
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if i == main { 0 } else { x }),
            );
            coeffs[e].add_term(rest, c.clone());
        }
        let mut up = UPoly { coeffs };
        up.trim();
        up
    }

    fn to_poly(&self, main: usize, family: Family) -> CPolynomial {
        let mut out = CPolynomial::zero(family);
        for (e, c) in self.coeffs.iter().enumerate() {
            let me = CMonomial::from_exponents((0..=main).map(|i| if i == main { e as u32 } else { 0 }));
            for (m, a) in c.terms() {
                out.add_term(m.mul(&me), a.clone());
            }
        }
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn lc(&self) -> &CPolynomial {
        self.coeffs.last().unwrap()
    }

    fn scale_poly(&self, c: &CPolynomial) -> UPoly {
        let mut out = UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        out.trim();
        out
    }

    fn divide_coeffs_exact(&self, c: &CPolynomial) -> UPoly {
        let mut out = UPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    if a.is_zero() {
                        a.clone()
                    } else {
                        exact_divide(a, c).expect("exact coefficient division in PRS")
                    }
                })
                .collect(),
        };
        out.trim();
        out
    }

    fn sub(&self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let family = self
            .coeffs
            .first()
            .or_else(|| rhs.coeffs.first())
            .map(|c| c.family())
            .unwrap_or(Family::T);
        let zero = CPolynomial::zero(family);
        let mut out = UPoly {
            coeffs: (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = rhs.coeffs.get(i).unwrap_or(&zero);
                    a - b
                })
                .collect(),
        };
        out.trim();
        out
    }

    /// self shifted up by k (multiplied by main^k) and scaled by c.
    fn shift_scale(&self, k: usize, c: &CPolynomial) -> UPoly {
        let family = c.family();
        let mut coeffs = vec![CPolynomial::zero(family); k];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        let mut out = UPoly { coeffs };
        out.trim();
        out
    }
}

/// Pseudo-remainder: prem(f, g) with lc(g)^(deg f - deg g + 1) * f = q*g + r.
fn pseudo_rem(f: &UPoly, g: &UPoly) -> UPoly {
    let dg = g.degree();
    let lc_g = g.lc().clone();
    let mut r = UPoly {
        coeffs: f.coeffs.clone(),
    };
    let mut steps = 0u32;
    let bound = f.degree() - dg + 1;
    while !r.is_zero() && r.degree() >= dg {
        let k = r.degree() - dg;
        let lr = r.lc().clone();
        r = r.scale_poly(&lc_g).sub(&g.shift_scale(k, &lr));
        steps += 1;
    }
    // normalize to exactly lc(g)^(deg f - deg g + 1) * f = q*g + r
    for _ in steps..bound as u32 {
        r = r.scale_poly(&lc_g);
    }
    r
}

/// GCD of the coefficients (a polynomial in the remaining variables), monic.
fn content(u: &UPoly, family: Family) -> CPolynomial {
    let mut acc = CPolynomial::zero(family);
    for c in &u.coeffs {
        if c.is_zero() {
            continue;
        }
        acc = if acc.is_zero() {
            c.monic()
        } else {
            gcd(&acc, c).expect("content gcd")
        };
        if acc.is_constant() {
            return CPolynomial::one(family);
        }
    }
    if acc.is_zero() {
        acc
    } else {
        acc.monic()
    }
}

/// Subresultant PRS for primitive inputs, univariate in the main variable.
/// Returns the primitive part of the last nonzero remainder.
fn subresultant_prs(f0: UPoly, g0: UPoly, family: Family) -> UPoly {
    let (mut f, mut g) = if f0.degree() >= g0.degree() {
        (f0, g0)
    } else {
        (g0, f0)
    };
    let minus_one = CPolynomial::constant(family, crate::scalar::int(-1));
    let mut psi = minus_one.clone();
    let mut first = true;
    loop {
        if g.is_zero() {
            let c = content(&f, family);
            return f.divide_coeffs_exact(&c);
        }
        if g.degree() == 0 {
            // nonzero constant (in the main variable): coprime
            return UPoly {
                coeffs: vec![CPolynomial::one(family)],
            };
        }
        let delta = (f.degree() - g.degree()) as u32;
        let r = pseudo_rem(&f, &g);
        let neg_lc_f = -f.lc();
        let beta = if first {
            if delta % 2 == 0 {
                // (-1)^(delta+1) = -1
                minus_one.clone()
            } else {
                CPolynomial::one(family)
            }
        } else {
            let mut psi_delta = CPolynomial::one(family);
            for _ in 0..delta {
                psi_delta = &psi_delta * &psi;
            }
            &neg_lc_f * &psi_delta
        };
        // update psi
        if delta >= 1 {
            let mut num = CPolynomial::one(family);
            for _ in 0..delta {
                num = &num * &neg_lc_f;
            }
            if delta == 1 {
                psi = num;
            } else {
                let mut den = CPolynomial::one(family);
                for _ in 0..(delta - 1) {
                    den = &den * &psi;
                }
                psi = exact_divide(&num, &den).expect("psi update in subresultant PRS");
            }
        }
        first = false;
        f = g;
        g = if r.is_zero() {
            r
        } else {
            r.divide_coeffs_exact(&beta)
        };
    }
}

/// Greatest common divisor, normalized so the graded-lex leading coefficient
/// is 1. Errors only when both inputs are zero.
pub fn gcd(p: &CPolynomial, q: &CPolynomial) -> Result<CPolynomial, CpolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(CpolyError::BothZero);
    }
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    let family = p.check_family(q);
    if p.is_constant() || q.is_constant() {
        return Ok(CPolynomial::one(family));
    }
    let main = p
        .max_var_index()
        .unwrap()
        .max(q.max_var_index().unwrap());
    let up = UPoly::from(p, main);
    let uq = UPoly::from(q, main);
    // If one input does not involve the main variable at all it is a
    // "coefficient": gcd(p, q) = gcd(p, content(q)).
    if up.coeffs.len() == 1 {
        let c = content(&uq, family);
        return gcd(&up.coeffs[0], &c);
    }
    if uq.coeffs.len() == 1 {
        let c = content(&up, family);
        return gcd(&uq.coeffs[0], &c);
    }
    let cont_p = content(&up, family);
    let cont_q = content(&uq, family);
    let cont = gcd(&cont_p, &cont_q)?;
    let pp = up.divide_coeffs_exact(&cont_p);
    let qq = uq.divide_coeffs_exact(&cont_q);
    let g = subresultant_prs(pp, qq, family);
    let result = &g.to_poly(main, family) * &cont;
    Ok(result.monic())
}

/// All rational solutions of beta^k = c for nonzero rational c.
pub fn rational_root(c: &Scalar, k: u32) -> Vec<Scalar> {
    assert!(k >= 1);
    assert!(!c.is_zero());
    if k == 1 {
        return vec![c.clone()];
    }
    if c.is_negative() && k % 2 == 0 {
        return Vec::new();
    }
    use num::integer::Roots;
    let num_abs = c.numer().abs();
    let den = c.denom().clone();
    let rn = num_abs.nth_root(k);
    let rd = den.nth_root(k);
    if num::pow(rn.clone(), k as usize) != num_abs || num::pow(rd.clone(), k as usize) != den {
        return Vec::new();
    }
    let root = Scalar::new(rn, rd);
    if c.is_negative() {
        // k odd here
        vec![-root]
    } else if k % 2 == 0 {
        vec![root.clone(), -root]
    } else {
        vec![root]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn t(s: &str) -> CPolynomial {
        crate::text::parse_c(s).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&t("t0 + 1") * &t("t0 - 1"), t("t0^2 - 1"));
        let z1 = CPolynomial::zb(1);
        let z2 = CPolynomial::zb(2);
        assert_eq!(&z1 * &z2, &z2 * &z1);
        let p = t("3*t0*t2 - 1/2*t1");
        assert_eq!(&p + &CPolynomial::zero(Family::T), p);
    }

    #[test]
    fn graded_lex_leading_term() {
        // t1 > t0, and degree dominates
        let p = t("t0^3 + t1^2*t0 + t1");
        let (m, _) = p.leading_term().unwrap();
        assert_eq!(m, &CMonomial::from_exponents([1, 2]));
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(exact_divide(&t("t0^2 - 1"), &t("t0 - 1")).unwrap(), t("t0 + 1"));
        assert_eq!(
            exact_divide(&t("t0*t1 + 1"), &t("t0")),
            Err(CpolyError::NotDivisible)
        );
        let num = &t("t0*t2") * &t("t1 + t2");
        assert_eq!(exact_divide(&num, &t("t1 + t2")).unwrap(), t("t0*t2"));
        assert_eq!(
            exact_divide(&t("t0"), &CPolynomial::zero(Family::T)),
            Err(CpolyError::DivisionByZero)
        );
    }

    #[test]
    fn gcd_examples() {
        // gcd(t0(t1+1), (t1-1)(t1+1)) = t1+1, checked by dividing both inputs
        let a = &t("t0") * &t("t1 + 1");
        let b = &t("t1 - 1") * &t("t1 + 1");
        let g = gcd(&a, &b).unwrap();
        assert_eq!(g, t("t1 + 1"));
        assert!(exact_divide(&a, &g).is_ok());
        assert!(exact_divide(&b, &g).is_ok());

        let p = t("2*t0*t1 + 4*t0");
        assert_eq!(gcd(&p, &CPolynomial::zero(Family::T)).unwrap(), p.monic());
        assert_eq!(gcd(&t("t0"), &t("t1")).unwrap(), CPolynomial::one(Family::T));
    }

    #[test]
    fn gcd_multivariate_common_factor() {
        let c = t("t0*t1 + t2 + 2");
        let a = &c * &t("t0 - t2");
        let b = &c * &t("t1^2 + 3");
        let g = gcd(&a, &b).unwrap();
        assert_eq!(g, c.monic());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(t("t0*t1").shift_indices(2).unwrap(), t("t2*t3"));
        let p = t("t0 + 2*t1^2");
        assert_eq!(p.shift_indices(0).unwrap(), p);
        assert_eq!(t("t0 + t3").shift_indices(1).unwrap(), t("t1 + t4"));
        assert_eq!(
            t("t0 + t3").shift_indices(-1),
            Err(CpolyError::NegativeIndex)
        );
        assert_eq!(t("t1 + t3").shift_indices(-1).unwrap(), t("t0 + t2"));
    }

    #[test]
    fn dilate_contract() {
        let p = t("t0*t1 + t2");
        let d = p.dilate_indices(3);
        assert_eq!(d, t("t0*t3 + t6"));
        assert_eq!(d.contract_indices(3).unwrap(), p);
        assert_eq!(t("t1").contract_indices(2), None);
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_root(&int(8), 3), vec![int(2)]);
        assert_eq!(rational_root(&int(4), 2), vec![int(2), int(-2)]);
        assert_eq!(rational_root(&int(2), 2), Vec::<Scalar>::new());
        assert_eq!(rational_root(&int(-8), 3), vec![int(-2)]);
        assert_eq!(rational_root(&int(-4), 2), Vec::<Scalar>::new());
        assert_eq!(
            rational_root(&crate::scalar::frac(27, 8), 3),
            vec![crate::scalar::frac(3, 2)]
        );
    }
}
