//! Cross-route properties on randomly drawn multisets.

use multiset_eulerian::enumeration::{bivariate_brute, DEFAULT_BUDGET};
use multiset_eulerian::gamma::{bivariate_type_split, PositivityReport};
use multiset_eulerian::macmahon::macmahon_polynomial;
use multiset_eulerian::operators::polynomial_via_operators;
use multiset_eulerian::{MultisetSpec, UniPoly};
use proptest::prelude::*;

fn small_spec(max_mult: u32, max_letters: usize) -> impl Strategy<Value = MultisetSpec> {
    prop::collection::vec(1..=max_mult, 1..=max_letters).prop_map(MultisetSpec::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_routes_agree(spec in small_spec(2, 5)) {
        let brute = bivariate_brute(&spec, DEFAULT_BUDGET).unwrap();
        let ops = polynomial_via_operators(&spec).unwrap();
        let mac = macmahon_polynomial(&spec).homogenize(spec.total() + 1).unwrap();
        prop_assert_eq!(&brute, &ops);
        prop_assert_eq!(&brute, &mac);
    }

    #[test]
    fn letter_order_does_not_matter(spec in small_spec(2, 6), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..spec.letters()).collect();
        let len = order.len();
        for i in (1..len).rev() {
            order.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let shuffled = spec.permuted(&order);
        prop_assert_eq!(
            polynomial_via_operators(&spec).unwrap(),
            polynomial_via_operators(&shuffled).unwrap()
        );
    }

    #[test]
    fn mixed_multisets_split_into_positive_parts(spec in small_spec(2, 7)) {
        let a = polynomial_via_operators(&spec).unwrap();
        let split = bivariate_type_split(&a).unwrap();
        prop_assert!(split.plain.is_nonnegative());
        prop_assert!(split.y_prefixed.is_nonnegative());
    }

    #[test]
    fn report_implications_on_random_coefficients(
        c in prop::collection::vec(0i64..20, 1..8),
        extra in 0u32..3,
    ) {
        let f = UniPoly::from_ints(&c);
        let n = f.degree().unwrap_or(0) + extra;
        let r = PositivityReport::build(&f, n).unwrap();
        if r.bi_gamma_positive {
            prop_assert!(r.alternatingly_increasing);
        }
        if r.alternatingly_increasing {
            prop_assert!(r.unimodal);
        }
        let d = &r.witnesses.decomposition;
        prop_assert_eq!(&d.a + &(&UniPoly::x() * &d.b), f);
    }
}
