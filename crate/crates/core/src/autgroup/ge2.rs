//! Membership certificates for the subgroup of GL2(Q[z1,z2]) generated by
//! elementary and diagonal matrices.
//!
//! The reduction is a greedy leading-form elimination: while the matrix is
//! nonconstant, look for a row operation subtracting a polynomial multiple
//! of the other row that cancels the top homogeneous form of a row, which
//! strictly decreases its degree. A matrix with constant nonzero determinant
//! that gets stuck is reported as NotReducible together with the stuck state;
//! the caller decides what that means for the input.

use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::jacobian::Jacobian2x2;
use crate::cpoly::{exact_divide, CPolynomial, Family};
use crate::scalar::Scalar;

/// A 2x2 matrix over Q[z1,z2].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub entries: [[CPolynomial; 2]; 2],
}

impl Mat2 {
    pub fn identity() -> Self {
        let one = CPolynomial::one(Family::Zbar);
        let zero = CPolynomial::zero(Family::Zbar);
        Mat2 {
            entries: [[one.clone(), zero.clone()], [zero, one]],
        }
    }

    pub fn from_rows(rows: [[CPolynomial; 2]; 2]) -> Self {
        Mat2 { entries: rows }
    }

    pub fn det(&self) -> CPolynomial {
        &(&self.entries[0][0] * &self.entries[1][1])
            - &(&self.entries[0][1] * &self.entries[1][0])
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut out = Mat2::identity();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = &(&self.entries[i][0] * &rhs.entries[0][j])
                    + &(&self.entries[i][1] * &rhs.entries[1][j]);
            }
        }
        out
    }

    pub fn is_constant(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| e.is_constant())
    }
}

impl From<&Jacobian2x2> for Mat2 {
    fn from(j: &Jacobian2x2) -> Self {
        Mat2 {
            entries: [
                [j.f_x.clone(), j.g_x.clone()],
                [j.f_y.clone(), j.g_y.clone()],
            ],
        }
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(crate::text::print_c).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// One factor of a certificate: an elementary matrix I + q*E_{row,col}
/// (row != col, q in Q[z1,z2]) or an invertible constant diagonal matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Ge2Factor {
    Elementary { row: usize, col: usize, q: CPolynomial },
    Diagonal { d0: Scalar, d1: Scalar },
}

impl Ge2Factor {
    pub fn matrix(&self) -> Mat2 {
        match self {
            Ge2Factor::Elementary { row, col, q } => {
                let mut m = Mat2::identity();
                m.entries[*row][*col] = q.clone();
                m
            }
            Ge2Factor::Diagonal { d0, d1 } => {
                let mut m = Mat2::identity();
                m.entries[0][0] = CPolynomial::constant(Family::Zbar, d0.clone());
                m.entries[1][1] = CPolynomial::constant(Family::Zbar, d1.clone());
                m
            }
        }
    }
}

impl Serialize for Ge2Factor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Ge2Factor", 2)?;
        match self {
            Ge2Factor::Elementary { .. } => s.serialize_field("kind", "elementary")?,
            Ge2Factor::Diagonal { .. } => s.serialize_field("kind", "diagonal")?,
        }
        s.serialize_field("matrix", &self.matrix())?;
        s.end()
    }
}

/// An ordered list of factors whose product is the certified matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryCertificate {
    pub factors: Vec<Ge2Factor>,
}

impl ElementaryCertificate {
    pub fn product(&self) -> Mat2 {
        self.factors
            .iter()
            .fold(Mat2::identity(), |acc, f| acc.mul(&f.matrix()))
    }
}

impl Serialize for ElementaryCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ElementaryCertificate", 2)?;
        s.serialize_field("factors", &self.factors)?;
        s.serialize_field("product_check", &true)?;
        s.end()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Ge2Outcome {
    Certificate(ElementaryCertificate),
    /// Determinant is a nonzero constant but no degree-decreasing elementary
    /// row operation exists; the stuck matrix is reported.
    NotReducible { stuck: Mat2 },
    NotInvertible,
}

fn row_degree(m: &Mat2, i: usize) -> Option<u32> {
    m.entries[i]
        .iter()
        .filter_map(|e| e.total_degree())
        .max()
}

/// Leading homogeneous forms of row i at its top degree (entry-wise; an entry
/// of lower degree contributes zero).
fn row_leading(m: &Mat2, i: usize, deg: u32) -> [CPolynomial; 2] {
    [
        m.entries[i][0].homogeneous_component(deg),
        m.entries[i][1].homogeneous_component(deg),
    ]
}

/// Try to find a homogeneous h with lead(row i) = h * lead(row o).
fn find_quotient(lead_i: &[CPolynomial; 2], lead_o: &[CPolynomial; 2]) -> Option<CPolynomial> {
    for j in 0..2 {
        if lead_o[j].is_zero() {
            continue;
        }
        if lead_i[j].is_zero() {
            continue;
        }
        if let Ok(h) = exact_divide(&lead_i[j], &lead_o[j]) {
            let other = 1 - j;
            if &(&h * &lead_o[other]) - &lead_i[other] == CPolynomial::zero(Family::Zbar) {
                return Some(h);
            }
        }
    }
    // rows whose leading vector is supported only where the other's is zero
    // cannot be cancelled
    None
}

/// Decompose an invertible constant matrix into elementary and diagonal
/// factors over Q.
fn constant_certificate(m: &Mat2) -> Vec<Ge2Factor> {
    let c = |i: usize, j: usize| -> Scalar {
        m.entries[i][j].as_constant().expect("constant matrix")
    };
    let mut a = [[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]];
    let mut ops: Vec<Ge2Factor> = Vec::new(); // applied left-to-right to reduce a
    let apply = |a: &mut [[Scalar; 2]; 2], row: usize, col: usize, q: &Scalar| {
        // row_i += q * row_col (left multiplication by I + q E_{row,col})
        for j in 0..2 {
            a[row][j] = a[row][j].clone() + q.clone() * a[col][j].clone();
        }
    };
    if a[0][0].is_zero() {
        let q = Scalar::from_integer(1.into());
        apply(&mut a, 0, 1, &q);
        ops.push(Ge2Factor::Elementary {
            row: 0,
            col: 1,
            q: CPolynomial::constant(Family::Zbar, q),
        });
    }
    if !a[1][0].is_zero() {
        let q = -(a[1][0].clone() / a[0][0].clone());
        apply(&mut a, 1, 0, &q);
        ops.push(Ge2Factor::Elementary {
            row: 1,
            col: 0,
            q: CPolynomial::constant(Family::Zbar, q),
        });
    }
    if !a[0][1].is_zero() {
        let q = -(a[0][1].clone() / a[1][1].clone());
        apply(&mut a, 0, 1, &q);
        ops.push(Ge2Factor::Elementary {
            row: 0,
            col: 1,
            q: CPolynomial::constant(Family::Zbar, q),
        });
    }
    // m = op_1^{-1} ... op_k^{-1} diag
    let mut factors: Vec<Ge2Factor> = ops.into_iter().map(invert_elementary).collect();
    factors.push(Ge2Factor::Diagonal {
        d0: a[0][0].clone(),
        d1: a[1][1].clone(),
    });
    factors
}

fn invert_elementary(f: Ge2Factor) -> Ge2Factor {
    match f {
        Ge2Factor::Elementary { row, col, q } => Ge2Factor::Elementary { row, col, q: -&q },
        d => d,
    }
}

/// Greedy reduction of a matrix over Q[z1,z2] to elementary/diagonal factors.
pub fn ge2_certificate(m: &Mat2) -> Ge2Outcome {
    let det = m.det();
    match det.as_constant() {
        Some(c) if !c.is_zero() => {}
        _ => return Ge2Outcome::NotInvertible,
    }

    let mut cur = m.clone();
    let mut ops: Vec<Ge2Factor> = Vec::new(); // left-multiplied reductions, in order
    loop {
        if cur.is_constant() {
            break;
        }
        let d0 = row_degree(&cur, 0).expect("row of invertible matrix is nonzero");
        let d1 = row_degree(&cur, 1).expect("row of invertible matrix is nonzero");
        let mut reduced = false;
        // reduce the row of larger degree by the other; on a tie try both
        let order: &[(usize, usize)] = if d0 > d1 {
            &[(0, 1)]
        } else if d1 > d0 {
            &[(1, 0)]
        } else {
            &[(0, 1), (1, 0)]
        };
        for &(i, o) in order {
            let di = row_degree(&cur, i).unwrap();
            let dover = row_degree(&cur, o).unwrap();
            if di < dover || di == 0 {
                continue;
            }
            let lead_i = row_leading(&cur, i, di);
            let lead_o = row_leading(&cur, o, dover);
            if let Some(h) = find_quotient(&lead_i, &lead_o) {
                // row_i -= h * row_o
                for j in 0..2 {
                    cur.entries[i][j] = &cur.entries[i][j] - &(&h * &cur.entries[o][j]);
                }
                debug_assert!(row_degree(&cur, i).map_or(true, |nd| nd < di));
                ops.push(Ge2Factor::Elementary { row: i, col: o, q: h });
                reduced = true;
                break;
            }
        }
        if !reduced {
            return Ge2Outcome::NotReducible { stuck: cur };
        }
    }

    // m = op_1^{-1} op_2^{-1} ... op_k^{-1} * cur
    let mut factors: Vec<Ge2Factor> = ops
        .into_iter()
        .rev()
        .map(|f| match f {
            Ge2Factor::Elementary { row, col, q } => Ge2Factor::Elementary {
                row,
                col,
                q: -&q,
            },
            d => d,
        })
        .collect();
    factors.extend(constant_certificate(&cur));
    let cert = ElementaryCertificate { factors };
    debug_assert_eq!(cert.product(), *m);
    Ge2Outcome::Certificate(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn c(s: &str) -> CPolynomial {
        crate::text::parse_c_zbar(s).unwrap()
    }

    fn mat(rows: [[&str; 2]; 2]) -> Mat2 {
        Mat2::from_rows([
            [c(rows[0][0]), c(rows[0][1])],
            [c(rows[1][0]), c(rows[1][1])],
        ])
    }

    #[test]
    fn identity_has_certificate() {
        match ge2_certificate(&Mat2::identity()) {
            Ge2Outcome::Certificate(cert) => {
                assert_eq!(cert.product(), Mat2::identity());
            }
            other => panic!("expected certificate, got {:?}", other),
        }
    }

    #[test]
    fn single_elementary_matrix() {
        let m = mat([["1", "zb1^3"], ["0", "1"]]);
        match ge2_certificate(&m) {
            Ge2Outcome::Certificate(cert) => {
                assert_eq!(cert.product(), m);
                assert!(cert
                    .factors
                    .iter()
                    .any(|f| matches!(f, Ge2Factor::Elementary { q, .. } if *q == c("zb1^3"))));
            }
            other => panic!("expected certificate, got {:?}", other),
        }
    }

    #[test]
    fn anick_jacobian_is_not_reducible() {
        let m = mat([["1 + zb1*zb2", "zb2^2"], ["-zb1^2", "1 - zb1*zb2"]]);
        assert_eq!(m.det(), c("1"));
        match ge2_certificate(&m) {
            Ge2Outcome::NotReducible { stuck } => {
                assert_eq!(stuck, m);
            }
            other => panic!("expected NotReducible, got {:?}", other),
        }
    }

    #[test]
    fn non_unit_determinant_is_not_invertible() {
        let m = mat([["zb1", "0"], ["0", "1"]]);
        assert_eq!(ge2_certificate(&m), Ge2Outcome::NotInvertible);
        let m = mat([["1", "1"], ["1", "1"]]);
        assert_eq!(ge2_certificate(&m), Ge2Outcome::NotInvertible);
    }

    #[test]
    fn products_of_elementaries_round_trip() {
        let e1 = Ge2Factor::Elementary {
            row: 0,
            col: 1,
            q: c("zb1^2 - zb2"),
        };
        let e2 = Ge2Factor::Elementary {
            row: 1,
            col: 0,
            q: c("zb2^3 + 1"),
        };
        let d = Ge2Factor::Diagonal {
            d0: int(2),
            d1: crate::scalar::frac(-1, 3),
        };
        let m = e1.matrix().mul(&e2.matrix()).mul(&d.matrix());
        match ge2_certificate(&m) {
            Ge2Outcome::Certificate(cert) => assert_eq!(cert.product(), m),
            other => panic!("expected certificate, got {:?}", other),
        }
    }

    #[test]
    fn constant_matrix_with_zero_corner() {
        let m = mat([["0", "-2"], ["1/2", "3"]]);
        match ge2_certificate(&m) {
            Ge2Outcome::Certificate(cert) => assert_eq!(cert.product(), m),
            other => panic!("expected certificate, got {:?}", other),
        }
    }
}
