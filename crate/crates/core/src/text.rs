//! Text form of polynomials.
//!
//! Noncommutative grammar:
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := rational factor* | factor+        ('*' separators optional)
//! factor := ('x' | 'y' | 'z' | '(' expr ')') ('^' uint)?
//! rational := uint ('/' uint)?
//! ```
//!
//! Commutative polynomials use the same shape with variables `t0`, `t1`, ...
//! or `zb1`, `zb2`. Printing emits explicit `*` separators and `^` powers;
//! noncommutative monomials are listed in length-lex order, commutative ones
//! in descending graded-lex order, so output is canonical.

use std::fmt;
use std::str::FromStr;

use num::BigInt;
use num::{One, Signed, Zero};

use crate::cpoly::{CMonomial, CPolynomial, Family};
use crate::ncpoly::{Letter, NCPolynomial, Word};
use crate::scalar::Scalar;

/// Syntax error with the byte position of the offending character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn parse_uint_digits(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn parse_uint(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let digits = self.parse_uint_digits()?;
        digits.parse::<u32>().map_err(|_| ParseError {
            pos: start,
            message: "integer too large".into(),
        })
    }

    fn parse_rational(&mut self) -> Result<Scalar, ParseError> {
        let n: BigInt = self.parse_uint_digits()?.parse().unwrap();
        if self.eat(b'/') {
            let dpos = self.pos;
            let d: BigInt = self.parse_uint_digits()?.parse().unwrap();
            if d.is_zero() {
                return Err(ParseError {
                    pos: dpos,
                    message: "zero denominator".into(),
                });
            }
            Ok(Scalar::new(n, d))
        } else {
            Ok(Scalar::from_integer(n))
        }
    }
}

// --- noncommutative ---

fn nc_expr(c: &mut Cursor) -> Result<NCPolynomial, ParseError> {
    let mut acc = if c.eat(b'-') {
        -&nc_term(c)?
    } else {
        nc_term(c)?
    };
    loop {
        match c.peek() {
            Some(b'+') => {
                c.bump();
                acc = &acc + &nc_term(c)?;
            }
            Some(b'-') => {
                c.bump();
                acc = &acc - &nc_term(c)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn nc_term(c: &mut Cursor) -> Result<NCPolynomial, ParseError> {
    let mut acc;
    let mut have_any = false;
    match c.peek() {
        Some(d) if d.is_ascii_digit() => {
            acc = NCPolynomial::constant(c.parse_rational()?);
            have_any = true;
        }
        _ => acc = NCPolynomial::one(),
    }
    loop {
        let star = c.eat(b'*');
        match c.peek() {
            Some(b'x') | Some(b'y') | Some(b'z') | Some(b'(') => {
                acc = &acc * &nc_factor(c)?;
                have_any = true;
            }
            _ => {
                if star {
                    return c.err("expected a factor after '*'");
                }
                break;
            }
        }
    }
    if !have_any {
        return c.err("expected a term");
    }
    Ok(acc)
}

fn nc_factor(c: &mut Cursor) -> Result<NCPolynomial, ParseError> {
    let base = match c.peek() {
        Some(b'x') => {
            c.bump();
            NCPolynomial::x()
        }
        Some(b'y') => {
            c.bump();
            NCPolynomial::y()
        }
        Some(b'z') => {
            c.bump();
            NCPolynomial::z()
        }
        Some(b'(') => {
            c.bump();
            let inner = nc_expr(c)?;
            if !c.eat(b')') {
                return c.err("expected ')'");
            }
            inner
        }
        _ => return c.err("expected a factor"),
    };
    if c.eat(b'^') {
        let e = c.parse_uint()?;
        Ok(base.pow(e as usize))
    } else {
        Ok(base)
    }
}

/// Parse a noncommutative polynomial in x, y, z.
pub fn parse_nc(input: &str) -> Result<NCPolynomial, ParseError> {
    let mut c = Cursor::new(input);
    let p = nc_expr(&mut c)?;
    if c.peek().is_some() {
        return c.err("unexpected trailing input");
    }
    Ok(p)
}

fn fmt_coeff_prefix(out: &mut String, mag: &Scalar, word_is_empty: bool) {
    if word_is_empty {
        out.push_str(&mag.to_string());
    } else if !mag.is_one() {
        out.push_str(&mag.to_string());
        out.push('*');
    }
}

fn fmt_word(out: &mut String, w: &Word) {
    let mut first = true;
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        if !first {
            out.push('*');
        }
        out.push(match l {
            Letter::X => 'x',
            Letter::Y => 'y',
            Letter::Z => 'z',
        });
        if run > 1 {
            out.push('^');
            out.push_str(&run.to_string());
        }
        first = false;
        i += run;
    }
}

/// Canonical text form: monomials in length-lex order, explicit `*`.
pub fn print_nc(p: &NCPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        fmt_coeff_prefix(&mut out, &c.abs(), w.is_empty());
        fmt_word(&mut out, w);
    }
    out
}

// --- commutative ---

fn c_expr(c: &mut Cursor, family: &mut Option<Family>) -> Result<CPolynomial, ParseError> {
    let mut acc = if c.eat(b'-') {
        -&c_term(c, family)?
    } else {
        c_term(c, family)?
    };
    loop {
        match c.peek() {
            Some(b'+') => {
                c.bump();
                acc = &acc + &c_term(c, family)?;
            }
            Some(b'-') => {
                c.bump();
                acc = &acc - &c_term(c, family)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn c_term(c: &mut Cursor, family: &mut Option<Family>) -> Result<CPolynomial, ParseError> {
    let mut coeff = Scalar::one();
    let mut exps: Vec<u32> = Vec::new();
    let mut have_any = false;
    if let Some(d) = c.peek() {
        if d.is_ascii_digit() {
            coeff = c.parse_rational()?;
            have_any = true;
        }
    }
    loop {
        let star = c.eat(b'*');
        match c.peek() {
            Some(b't') | Some(b'z') => {
                let (index, fam) = c_var(c)?;
                match family {
                    None => *family = Some(fam),
                    Some(f) if *f != fam => {
                        return c.err("mixed variable families (t and zb)");
                    }
                    _ => {}
                }
                let e = if c.eat(b'^') { c.parse_uint()? } else { 1 };
                if exps.len() <= index {
                    exps.resize(index + 1, 0);
                }
                exps[index] += e;
                have_any = true;
            }
            Some(b'(') => {
                c.bump();
                let inner = c_expr(c, family)?;
                if !c.eat(b')') {
                    return c.err("expected ')'");
                }
                let inner = if c.eat(b'^') {
                    let e = c.parse_uint()?;
                    let mut acc = CPolynomial::one(inner.family());
                    for _ in 0..e {
                        acc = &acc * &inner;
                    }
                    acc
                } else {
                    inner
                };
                // fold the parenthesized subexpression in by distributing the
                // accumulated monomial afterwards; simplest is to finish this
                // term as (coeff * exps) * inner * rest-of-term
                let head = CPolynomial::from_terms(
                    inner.family(),
                    [(CMonomial::from_exponents(exps.clone()), coeff.clone())],
                );
                let mut acc = &head * &inner;
                loop {
                    let star2 = c.eat(b'*');
                    match c.peek() {
                        Some(b't') | Some(b'z') | Some(b'(') => {
                            let rest = c_atom(c, family)?;
                            acc = &acc * &rest;
                        }
                        _ => {
                            if star2 {
                                return c.err("expected a factor after '*'");
                            }
                            break;
                        }
                    }
                }
                return Ok(acc);
            }
            _ => {
                if star {
                    return c.err("expected a factor after '*'");
                }
                break;
            }
        }
    }
    if !have_any {
        return c.err("expected a term");
    }
    let fam = family.unwrap_or(Family::T);
    Ok(CPolynomial::from_terms(
        fam,
        [(CMonomial::from_exponents(exps), coeff)],
    ))
}

fn c_atom(c: &mut Cursor, family: &mut Option<Family>) -> Result<CPolynomial, ParseError> {
    match c.peek() {
        Some(b't') | Some(b'z') => {
            let (index, fam) = c_var(c)?;
            match family {
                None => *family = Some(fam),
                Some(f) if *f != fam => return c.err("mixed variable families (t and zb)"),
                _ => {}
            }
            let e = if c.eat(b'^') { c.parse_uint()? } else { 1 };
            let mut exps = vec![0; index + 1];
            exps[index] = e;
            Ok(CPolynomial::from_terms(
                fam,
                [(CMonomial::from_exponents(exps), Scalar::one())],
            ))
        }
        Some(b'(') => {
            c.bump();
            let inner = c_expr(c, family)?;
            if !c.eat(b')') {
                return c.err("expected ')'");
            }
            if c.eat(b'^') {
                let e = c.parse_uint()?;
                let mut acc = CPolynomial::one(inner.family());
                for _ in 0..e {
                    acc = &acc * &inner;
                }
                Ok(acc)
            } else {
                Ok(inner)
            }
        }
        _ => c.err("expected a factor"),
    }
}

fn c_var(c: &mut Cursor) -> Result<(usize, Family), ParseError> {
    match c.peek() {
        Some(b't') => {
            c.bump();
            let idx = c.parse_uint()? as usize;
            Ok((idx, Family::T))
        }
        Some(b'z') => {
            c.bump();
            if !c.eat(b'b') {
                return c.err("expected 'b' after 'z' (commutative variables are zb1, zb2)");
            }
            let idx = c.parse_uint()? as usize;
            if idx != 1 && idx != 2 {
                return c.err("zb index must be 1 or 2");
            }
            Ok((idx, Family::Zbar))
        }
        _ => c.err("expected a variable"),
    }
}

/// Parse a commutative polynomial; the variable family is inferred from the
/// variables that occur (constants default to the t-family).
pub fn parse_c(input: &str) -> Result<CPolynomial, ParseError> {
    parse_c_impl(input, None)
}

/// Parse a commutative polynomial in z1, z2 (written `zb1`, `zb2`).
pub fn parse_c_zbar(input: &str) -> Result<CPolynomial, ParseError> {
    parse_c_impl(input, Some(Family::Zbar))
}

fn parse_c_impl(input: &str, forced: Option<Family>) -> Result<CPolynomial, ParseError> {
    let mut c = Cursor::new(input);
    let mut family = forced;
    let p = c_expr(&mut c, &mut family)?;
    if c.peek().is_some() {
        return c.err("unexpected trailing input");
    }
    // constants parsed without any variable carry the requested family
    if let Some(f) = forced {
        if p.family() != f {
            return Ok(CPolynomial::constant(f, p.as_constant().unwrap()));
        }
    }
    Ok(p)
}

fn fmt_cmonomial(out: &mut String, m: &CMonomial, family: Family) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        match family {
            Family::T => out.push_str(&format!("t{}", i)),
            Family::Zbar => out.push_str(&format!("zb{}", i)),
        }
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
        first = false;
    }
}

/// Canonical text form: terms in descending graded-lex order.
pub fn print_c(p: &CPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        fmt_coeff_prefix(&mut out, &c.abs(), m.is_one());
        fmt_cmonomial(&mut out, m, p.family());
    }
    out
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_nc(self))
    }
}

impl fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_c(self))
    }
}

impl FromStr for NCPolynomial {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_nc(s)
    }
}
