//! The Eulerian operators
//!
//! ```text
//! T = xy (∂x + ∂y)
//! G = G1 + G2 + G3,   G1 = xy² (∂x + ∂y)
//!                     G2 = (x²y²/2) (∂xx + ∂yy)
//!                     G3 = x²y² ∂x∂y
//! ```
//!
//! Inserting one copy of a new largest letter acts on `A_m(x,y)` as `T`,
//! inserting two copies acts as `G`. The operators are implemented directly
//! on [`BiPoly`]; the expansions of their action on the gamma bases are
//! implemented separately so that the two can be compared.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multiset::MultisetSpec;
use crate::poly::{rat, BiPoly, Rational, Var};

fn monomial_times(p: &BiPoly, c: i64, i: u32, j: u32) -> BiPoly {
    p.mul_monomial(&rat(c), i, j)
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `∂x p + ∂y p`.
fn grad_sum(p: &BiPoly) -> BiPoly {
    &p.partial_derivative(Var::X) + &p.partial_derivative(Var::Y)
}

pub fn apply_t(p: &BiPoly) -> BiPoly {
    monomial_times(&grad_sum(p), 1, 1, 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GPart {
    G1,
    G2,
    G3,
}

pub fn apply_g_part(p: &BiPoly, part: GPart) -> BiPoly {
    match part {
        GPart::G1 => monomial_times(&grad_sum(p), 1, 1, 2),
        GPart::G2 => {
            let pure = &p.derivative(2, 0) + &p.derivative(0, 2);
            pure.mul_monomial(&half(), 2, 2)
        }
        GPart::G3 => monomial_times(&p.derivative(1, 1), 1, 2, 2),
    }
}

pub fn apply_g(p: &BiPoly) -> BiPoly {
    let out =
        &(&apply_g_part(p, GPart::G1) + &apply_g_part(p, GPart::G2)) + &apply_g_part(p, GPart::G3);
    if p.is_integral() {
        assert!(out.is_integral(), "G produced a non-integer coefficient");
    }
    out
}

/// The composed third-order operator `TG = GT`, written out term by term:
///
/// ```text
/// (xy³ + 2x²y²)(∂x + ∂y) + (2x²y³ + x³y²)(∂xx + ∂yy) + (4x²y³ + 2x³y²)∂x∂y
///   + (x³y³/2)(∂xxx + ∂yyy) + (3x³y³/2)(∂xxy + ∂xyy)
/// ```
pub fn apply_tg_closed(p: &BiPoly) -> BiPoly {
    let first = grad_sum(p);
    let pure2 = &p.derivative(2, 0) + &p.derivative(0, 2);
    let mixed2 = p.derivative(1, 1);
    let pure3 = &p.derivative(3, 0) + &p.derivative(0, 3);
    let mixed3 = &p.derivative(2, 1) + &p.derivative(1, 2);

    let three_halves = Rational::new(3.into(), 2.into());
    [
        monomial_times(&first, 1, 1, 3),
        monomial_times(&first, 2, 2, 2),
        monomial_times(&pure2, 2, 2, 3),
        monomial_times(&pure2, 1, 3, 2),
        monomial_times(&mixed2, 4, 2, 3),
        monomial_times(&mixed2, 2, 3, 2),
        pure3.mul_monomial(&half(), 3, 3),
        mixed3.mul_monomial(&three_halves, 3, 3),
    ]
    .into_iter()
    .sum()
}

pub fn commutator_is_zero(p: &BiPoly) -> bool {
    apply_t(&apply_g(p)) == apply_g(&apply_t(p))
}

/// `A_m(x,y)` as `x` followed by one `T` per multiplicity-1 letter and one
/// `G` per multiplicity-2 letter, applied in the order of the sequence.
pub fn polynomial_via_operators(spec: &MultisetSpec) -> Result<BiPoly> {
    if let Some(&bad) = spec.multiplicities().iter().find(|&&m| m > 2) {
        return Err(Error::UnsupportedMultiplicity { multiplicity: bad });
    }
    Ok(spec
        .multiplicities()
        .iter()
        .fold(BiPoly::x(), |acc, &m| match m {
            1 => apply_t(&acc),
            _ => apply_g(&acc),
        }))
}

// ---------------------------------------------------------------------------
// Gamma-basis actions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    /// `(xy)^k (x+y)^(n-2k)`
    Type1,
    /// `y (xy)^k (x+y)^(n-2k)`
    Type2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaBasisTerm {
    pub kind: BasisKind,
    pub k: u32,
    pub n: u32,
    pub coefficient: Rational,
}

impl GammaBasisTerm {
    pub fn basis(kind: BasisKind, k: u32, n: u32) -> BiPoly {
        assert!(2 * k <= n, "basis element needs 2k <= n (k = {k}, n = {n})");
        let x_plus_y = &BiPoly::x() + &BiPoly::y();
        let p = x_plus_y.pow(n - 2 * k).mul_monomial(&Rational::one(), k, k);
        match kind {
            BasisKind::Type1 => p,
            BasisKind::Type2 => p.mul_monomial(&Rational::one(), 0, 1),
        }
    }

    pub fn to_poly(&self) -> BiPoly {
        GammaBasisTerm::basis(self.kind, self.k, self.n).scale(&self.coefficient)
    }
}

/// Expands a list of basis terms into an ordinary polynomial.
pub fn expand_terms(terms: &[GammaBasisTerm]) -> BiPoly {
    terms.iter().map(GammaBasisTerm::to_poly).sum()
}

struct TermList(Vec<GammaBasisTerm>);

impl TermList {
    fn push(&mut self, kind: BasisKind, coefficient: i64, k: u32, n: u32) {
        if coefficient != 0 {
            self.0.push(GammaBasisTerm {
                kind,
                k,
                n,
                coefficient: rat(coefficient),
            });
        }
    }
}

fn choose2(v: u32) -> i64 {
    let v = v as i64;
    v * (v - 1) / 2
}

/// `T((xy)^k (x+y)^(n-2k)) = k (xy)^k (x+y)^(n+1-2k) + 2(n-2k) (xy)^(k+1) (x+y)^(n-1-2k)`.
pub fn t_on_type1_basis(k: u32, n: u32) -> Vec<GammaBasisTerm> {
    assert!(2 * k <= n, "basis element needs 2k <= n");
    let mut out = TermList(Vec::new());
    let free = (n - 2 * k) as i64;
    out.push(BasisKind::Type1, k as i64, k, n + 1);
    out.push(BasisKind::Type1, 2 * free, k + 1, n + 1);
    out.0
}

/// `G((xy)^k (x+y)^(n-2k))`: the `G1` part lands in the `y`-prefixed basis of
/// center `n+1`, the `G2 + G3` part in the plain basis of center `n+2`.
pub fn g_on_type1_basis(k: u32, n: u32) -> Vec<GammaBasisTerm> {
    assert!(2 * k <= n, "basis element needs 2k <= n");
    let mut out = TermList(Vec::new());
    let free = (n - 2 * k) as i64;
    let ki = k as i64;
    // G1 = y T
    out.push(BasisKind::Type2, ki, k, n + 1);
    out.push(BasisKind::Type2, 2 * free, k + 1, n + 1);
    // G2 + G3
    out.push(BasisKind::Type1, choose2(k), k, n + 2);
    out.push(BasisKind::Type1, ki + 2 * ki * free, k + 1, n + 2);
    out.push(BasisKind::Type1, 2 * free * (free - 1).max(0), k + 2, n + 2);
    out.0
}

/// `G(y (xy)^p (x+y)^q) = y (xy)^p (x+y)^(q-2) [C(p+1,2)(x+y)^4 + (1+p)(1+2q) xy (x+y)^2 + 4C(q,2)(xy)^2]`,
/// with the bracket distributed first so that no negative power of `x+y`
/// is ever formed.
pub fn g_on_type2_basis(p: u32, q: u32) -> Vec<GammaBasisTerm> {
    let mut out = TermList(Vec::new());
    let n = 2 * p + q + 2;
    out.push(BasisKind::Type2, choose2(p + 1), p, n);
    out.push(
        BasisKind::Type2,
        (1 + p as i64) * (1 + 2 * q as i64),
        p + 1,
        n,
    );
    if q >= 2 {
        out.push(BasisKind::Type2, 4 * choose2(q), p + 2, n);
    }
    out.0
}

/// Variant with leading coefficient `C(p,2)` in place of `C(p+1,2)`. It
/// disagrees with `G` whenever `p >= 1`.
pub fn g_on_type2_basis_unshifted(p: u32, q: u32) -> Vec<GammaBasisTerm> {
    let mut terms = g_on_type2_basis(p, q);
    for t in &mut terms {
        if t.k == p {
            t.coefficient = rat(choose2(p));
        }
    }
    terms.retain(|t| !t.coefficient.is_zero());
    terms
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(t: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    fn spec(m: &[u32]) -> MultisetSpec {
        MultisetSpec::new(m.iter().copied())
    }

    fn a212() -> BiPoly {
        bi(&[(1, 5, 1), (2, 4, 12), (3, 3, 15), (4, 2, 2)])
    }

    #[test]
    fn t_examples() {
        let xy = bi(&[(1, 1, 1)]);
        assert_eq!(apply_t(&BiPoly::x()), xy);
        let a11 = bi(&[(2, 1, 1), (1, 2, 1)]);
        assert_eq!(apply_t(&xy), a11);
        assert_eq!(apply_t(&a11), bi(&[(3, 1, 1), (2, 2, 4), (1, 3, 1)]));
    }

    #[test]
    fn g_examples() {
        let xy = bi(&[(1, 1, 1)]);
        let xy2 = bi(&[(1, 2, 1)]);
        assert_eq!(apply_g(&BiPoly::x()), xy2);
        assert_eq!(apply_g(&xy), bi(&[(1, 3, 1), (2, 2, 2)]));
        assert_eq!(apply_g(&xy2), bi(&[(1, 4, 1), (2, 3, 4), (3, 2, 1)]));
    }

    #[test]
    fn g_part_examples() {
        let xy = bi(&[(1, 1, 1)]);
        assert_eq!(apply_g_part(&xy, GPart::G1), bi(&[(1, 3, 1), (2, 2, 1)]));
        assert!(apply_g_part(&xy, GPart::G2).is_zero());
        assert_eq!(apply_g_part(&xy, GPart::G3), bi(&[(2, 2, 1)]));
    }

    #[test]
    fn closed_form_examples() {
        let xy2 = bi(&[(1, 2, 1)]);
        assert_eq!(apply_tg_closed(&xy2), a212());
        let x = BiPoly::x();
        assert_eq!(apply_tg_closed(&x), apply_t(&apply_g(&x)));
    }

    #[test]
    fn commutator_examples() {
        assert!(commutator_is_zero(&bi(&[(1, 2, 1)])));
        assert!(commutator_is_zero(&BiPoly::zero()));
    }

    #[test]
    fn operator_route_examples() {
        assert_eq!(
            polynomial_via_operators(&spec(&[1, 2])).unwrap(),
            bi(&[(1, 3, 1), (2, 2, 2)])
        );
        assert_eq!(polynomial_via_operators(&spec(&[2, 1, 2])).unwrap(), a212());
        assert_eq!(polynomial_via_operators(&spec(&[])).unwrap(), BiPoly::x());
        assert_eq!(
            polynomial_via_operators(&spec(&[3, 2])),
            Err(Error::UnsupportedMultiplicity { multiplicity: 3 })
        );
    }

    #[test]
    fn t_basis_examples() {
        let xy = bi(&[(1, 1, 1)]);
        let x_plus_y = &BiPoly::x() + &BiPoly::y();
        assert_eq!(expand_terms(&t_on_type1_basis(1, 2)), &xy * &x_plus_y);
        let t13 = t_on_type1_basis(1, 3);
        assert_eq!(
            t13,
            vec![
                GammaBasisTerm {
                    kind: BasisKind::Type1,
                    k: 1,
                    n: 4,
                    coefficient: rat(1)
                },
                GammaBasisTerm {
                    kind: BasisKind::Type1,
                    k: 2,
                    n: 4,
                    coefficient: rat(2)
                },
            ]
        );
        assert_eq!(
            expand_terms(&t13),
            apply_t(&GammaBasisTerm::basis(BasisKind::Type1, 1, 3))
        );
        // T((xy)^2) = 2 (xy)^2 (x+y)
        assert_eq!(
            t_on_type1_basis(2, 4),
            vec![GammaBasisTerm {
                kind: BasisKind::Type1,
                k: 2,
                n: 5,
                coefficient: rat(2)
            }]
        );
    }

    #[test]
    fn g_basis_examples() {
        // G(xy) = y xy (x+y) + (xy)^2
        let g12 = g_on_type1_basis(1, 2);
        assert_eq!(
            g12,
            vec![
                GammaBasisTerm {
                    kind: BasisKind::Type2,
                    k: 1,
                    n: 3,
                    coefficient: rat(1)
                },
                GammaBasisTerm {
                    kind: BasisKind::Type1,
                    k: 2,
                    n: 4,
                    coefficient: rat(1)
                },
            ]
        );
        assert_eq!(expand_terms(&g12), bi(&[(1, 3, 1), (2, 2, 2)]));
        for (k, n) in [(1, 4), (2, 4)] {
            assert_eq!(
                expand_terms(&g_on_type1_basis(k, n)),
                apply_g(&GammaBasisTerm::basis(BasisKind::Type1, k, n))
            );
        }
    }

    #[test]
    fn g_type2_examples() {
        // G(xy^2) = y [xy (x+y)^2 + 2 (xy)^2]
        assert_eq!(
            g_on_type2_basis(1, 0),
            vec![
                GammaBasisTerm {
                    kind: BasisKind::Type2,
                    k: 1,
                    n: 4,
                    coefficient: rat(1)
                },
                GammaBasisTerm {
                    kind: BasisKind::Type2,
                    k: 2,
                    n: 4,
                    coefficient: rat(2)
                },
            ]
        );
        for (p, q) in [(1, 0), (1, 2), (2, 0), (0, 0), (0, 1), (0, 3)] {
            assert_eq!(
                expand_terms(&g_on_type2_basis(p, q)),
                apply_g(&GammaBasisTerm::basis(BasisKind::Type2, p, 2 * p + q)),
                "p = {p}, q = {q}"
            );
        }
    }

    #[test]
    fn unshifted_type2_coefficient_is_off_by_one_in_p() {
        let raw = apply_g(&GammaBasisTerm::basis(BasisKind::Type2, 1, 2));
        assert_ne!(expand_terms(&g_on_type2_basis_unshifted(1, 0)), raw);
        // Only the p = 0 rows coincide, where C(0,2) = C(1,2) = 0.
        assert_eq!(g_on_type2_basis_unshifted(0, 3), g_on_type2_basis(0, 3));
    }

    #[test]
    fn degree_raising_on_homogeneous_input() {
        let p = bi(&[(3, 1, 2), (1, 3, -5), (0, 4, 7)]);
        assert_eq!(apply_t(&p).homogeneous_degree(), Some(5));
        assert_eq!(apply_g(&p).homogeneous_degree(), Some(6));
    }

    #[test]
    fn operator_order_is_irrelevant() {
        let base = spec(&[2, 1, 1, 2, 1]);
        let expected = polynomial_via_operators(&base).unwrap();
        for order in [[4, 3, 2, 1, 0], [0, 3, 1, 2, 4], [1, 2, 4, 0, 3]] {
            assert_eq!(
                polynomial_via_operators(&base.permuted(&order)).unwrap(),
                expected
            );
        }
    }

    fn arb_int_poly(max_deg: u32) -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0..=max_deg, 0..=max_deg, -9i64..=9), 0..12).prop_map(move |t| {
            BiPoly::from_terms(
                t.into_iter()
                    .filter(|(i, j, _)| i + j <= max_deg)
                    .map(|(i, j, c)| (i, j, rat(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn operators_are_linear(p in arb_int_poly(6), q in arb_int_poly(6), c in -5i64..5) {
            let c = rat(c);
            let combo = &p.scale(&c) + &q;
            prop_assert_eq!(apply_t(&combo), &apply_t(&p).scale(&c) + &apply_t(&q));
            prop_assert_eq!(apply_g(&combo), &apply_g(&p).scale(&c) + &apply_g(&q));
        }

        #[test]
        fn closed_form_equals_both_compositions(p in arb_int_poly(8)) {
            let tg = apply_t(&apply_g(&p));
            prop_assert_eq!(&apply_tg_closed(&p), &tg);
            prop_assert_eq!(apply_g(&apply_t(&p)), tg);
        }

        #[test]
        fn g_preserves_integrality(p in arb_int_poly(8)) {
            prop_assert!(apply_g(&p).is_integral());
        }
    }
}
