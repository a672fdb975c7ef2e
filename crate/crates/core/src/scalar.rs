//! The ground field: exact rational numbers.

use num::BigRational;

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator, which is exactly the canonical form we need.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// Rational scalar `n/d`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, Signed, Zero};

    #[test]
    fn lowest_terms_positive_denominator() {
        let a = frac(2, -4);
        assert_eq!(a, frac(-1, 2));
        assert!(a.denom().is_positive());
        assert!((frac(1, 3) + frac(2, 3)).is_one());
        assert!((int(5) - int(5)).is_zero());
    }
}
