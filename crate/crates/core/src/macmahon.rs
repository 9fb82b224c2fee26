//! Descent polynomials by coefficient extraction from MacMahon's identity
//!
//! ```text
//! A(x) / (1 - x)^(m+1) = sum_{k >= 0} prod_i C(k + m_i, m_i) x^(k+1)
//! ```
//!
//! Works for any multiplicities and scales far beyond enumeration.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::multiset::MultisetSpec;
use crate::poly::{rat, Rational, UniPoly};

/// Exact `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The series `sum_{k=0}^{terms-1} prod_i C(k + m_i, m_i) x^(k+1)`.
fn series(spec: &MultisetSpec, terms: u32) -> UniPoly {
    UniPoly::from_sparse((0..terms).map(|k| {
        let c: BigUint = spec
            .multiplicities()
            .iter()
            .map(|&mi| binomial(k + mi, mi))
            .product();
        (k + 1, Rational::from_integer(BigInt::from(c)))
    }))
}

/// `(1 - x)^e` expanded.
fn one_minus_x_pow(e: u32) -> UniPoly {
    UniPoly::from_sparse((0..=e).map(|i| {
        let c = BigInt::from(binomial(e, i));
        let c = if i % 2 == 1 { -c } else { c };
        (i, Rational::from_integer(c))
    }))
}

/// `A_m(x)` from the truncated series. The empty multiset gives `x`.
pub fn macmahon_polynomial(spec: &MultisetSpec) -> UniPoly {
    let m = spec.total();
    // deg A <= m, except for the empty multiset where A = x.
    let top = m.max(1);
    // Coefficient j of the product only sees series terms of degree <= j.
    let s = series(spec, top + 1);
    (&s * &one_minus_x_pow(m + 1)).truncate(top)
}

/// Extends the series by `extra` terms and confirms that the product with
/// `(1 - x)^(m+1)` vanishes in degrees `m+1 ..= m+extra`.
pub fn polynomiality_check(spec: &MultisetSpec, extra: u32) -> bool {
    let m = spec.total();
    let top = m.max(1);
    let s = series(spec, top + extra + 1);
    let prod = &s * &one_minus_x_pow(m + 1);
    (top + 1..=top + extra).all(|j| prod.coeff(j) == rat(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{descent_polynomial_brute, DEFAULT_BUDGET};

    fn spec(m: &[u32]) -> MultisetSpec {
        MultisetSpec::new(m.iter().copied())
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), 10u32.into());
        assert_eq!(binomial(9, 0), 1u32.into());
        assert_eq!(binomial(0, 0), 1u32.into());
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row = vec![BigUint::one()];
        for n in 1..40u32 {
            let mut next = vec![BigUint::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize]);
            }
        }
    }

    #[test]
    fn macmahon_examples() {
        assert_eq!(
            macmahon_polynomial(&spec(&[1, 1])),
            UniPoly::from_ints(&[0, 1, 1])
        );
        assert_eq!(
            macmahon_polynomial(&spec(&[2, 1, 2])),
            UniPoly::from_ints(&[0, 1, 12, 15, 2])
        );
        assert_eq!(macmahon_polynomial(&spec(&[3])), UniPoly::x());
        assert_eq!(macmahon_polynomial(&spec(&[])), UniPoly::x());
    }

    #[test]
    fn polynomiality_examples() {
        assert!(polynomiality_check(&spec(&[2, 2]), 4));
        assert!(polynomiality_check(&spec(&[1]), 4));
        assert!(polynomiality_check(&spec(&[3, 2, 1]), 4));
        assert!(polynomiality_check(&spec(&[]), 8));
    }

    #[test]
    fn matches_enumeration_on_small_specs() {
        for m in MultisetSpec::sweep(7, &[1, 2, 3, 4]) {
            assert_eq!(
                macmahon_polynomial(&m),
                descent_polynomial_brute(&m, DEFAULT_BUDGET).unwrap(),
                "{m}"
            );
        }
    }

    #[test]
    fn degree_and_constant_term() {
        for m in MultisetSpec::sweep(12, &[1, 2, 3, 5]) {
            let f = macmahon_polynomial(&m);
            assert!(f.degree().unwrap() <= m.total());
            assert_eq!(f.coeff(0), rat(0));
        }
    }

    #[test]
    fn invariant_under_reordering() {
        let base = spec(&[4, 1, 3, 2]);
        let f = macmahon_polynomial(&base);
        for order in [[3, 2, 1, 0], [1, 3, 0, 2], [2, 0, 3, 1]] {
            assert_eq!(macmahon_polynomial(&base.permuted(&order)), f);
        }
    }
}
