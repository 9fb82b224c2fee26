//! T and G commute. Checks it on a few descent polynomials and on random
//! integer polynomials, and prints the closed form of TG on xy^2.

use multiset_eulerian::operators::{
    apply_g, apply_g_part, apply_t, apply_tg_closed, commutator_is_zero, polynomial_via_operators,
    GPart,
};
use multiset_eulerian::{BiPoly, MultisetSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let xy2 = BiPoly::from_int_terms(&[(1, 2, 1)]);
    for part in [GPart::G1, GPart::G2, GPart::G3] {
        println!("{part:?}(xy^2) = {}", apply_g_part(&xy2, part));
    }
    println!("G(xy^2)  = {}", apply_g(&xy2));
    println!("T(xy^2)  = {}", apply_t(&xy2));
    println!("TG(xy^2) = {}", apply_tg_closed(&xy2));

    for s in ["1,1,1", "2,2,1", "2,2,2,1,1"] {
        let spec: MultisetSpec = s.parse().unwrap();
        let a = polynomial_via_operators(&spec).unwrap();
        println!("[T,G] A_{spec} = 0: {}", commutator_is_zero(&a));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ok = (0..200)
        .filter(|_| {
            let p = BiPoly::from_int_terms(
                &(0..6)
                    .map(|_| {
                        let i = rng.gen_range(0..6);
                        (i, rng.gen_range(0..6 - i), rng.gen_range(-9..10))
                    })
                    .collect::<Vec<_>>(),
            );
            commutator_is_zero(&p)
        })
        .count();
    println!("random polynomials with [T,G] = 0: {ok}/200");
}
