//! How T and G act on the two families of gamma basis elements. Each
//! formula is compared with the direct operator application.

use multiset_eulerian::operators::{
    apply_g, apply_t, expand_terms, g_on_type1_basis, g_on_type2_basis, t_on_type1_basis,
    BasisKind, GammaBasisTerm,
};

fn show(terms: &[GammaBasisTerm]) -> String {
    terms
        .iter()
        .map(|t| format!("{}*{:?}(k={}, n={})", t.coefficient, t.kind, t.k, t.n))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() {
    let (k, n) = (2, 6);
    let b1 = GammaBasisTerm::basis(BasisKind::Type1, k, n);
    println!("type 1 basis k={k}, n={n}: {b1}");
    let t = t_on_type1_basis(k, n);
    println!(
        "  T -> {}  (exact: {})",
        show(&t),
        expand_terms(&t) == apply_t(&b1)
    );
    let g = g_on_type1_basis(k, n);
    println!(
        "  G -> {}  (exact: {})",
        show(&g),
        expand_terms(&g) == apply_g(&b1)
    );

    let (p, q) = (1, 3);
    let b2 = GammaBasisTerm::basis(BasisKind::Type2, p, 2 * p + q);
    println!("type 2 basis p={p}, q={q}: {b2}");
    let g = g_on_type2_basis(p, q);
    println!(
        "  G -> {}  (exact: {})",
        show(&g),
        expand_terms(&g) == apply_g(&b2)
    );
}
