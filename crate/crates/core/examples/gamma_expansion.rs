//! Gamma vectors, the symmetric decomposition and the positivity report of
//! a polynomial given by its coefficients.
//!
//!     cargo run --example gamma_expansion -- 0,1,12,15,2 4

use multiset_eulerian::gamma::{gamma_expansion, is_bi_gamma_positive, GammaVector};
use multiset_eulerian::poly::parse_rational;
use multiset_eulerian::UniPoly;

fn show(g: &GammaVector) -> String {
    let parts: Vec<String> = g.gammas.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let coeffs = args.next().unwrap_or_else(|| "0,1,12,15,2".into());
    let n: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let f = UniPoly::from_coeffs(
        coeffs
            .split(',')
            .map(|c| parse_rational(c.trim()))
            .collect::<Result<Vec<_>, _>>()?,
    );
    println!("f = {f}, n = {n}");

    match gamma_expansion(&f, n) {
        Ok(g) => println!("f is symmetric, gamma = {}", show(&g)),
        Err(e) => println!("no gamma expansion of f itself: {e}"),
    }

    let r = is_bi_gamma_positive(&f, n)?;
    let d = &r.witnesses.decomposition;
    println!("a = {}", d.a);
    println!("b = {}", d.b);
    if let Some(g) = &r.witnesses.gamma_a {
        println!("gamma(a) = {}", show(g));
    }
    if let Some(g) = &r.witnesses.gamma_b {
        println!("gamma(b) = {}", show(g));
    }
    println!("bi-gamma-positive:       {}", r.bi_gamma_positive);
    println!("alternatingly increasing: {}", r.alternatingly_increasing);
    println!("unimodal: {} (modes {:?})", r.unimodal, r.modes);
    Ok(())
}
