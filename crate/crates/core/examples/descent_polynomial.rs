//! Descent polynomial of one multiset by enumeration, MacMahon's series and
//! the operator recursion.
//!
//!     cargo run --example descent_polynomial -- 2,1,2

use multiset_eulerian::enumeration::{bivariate_brute, default_budget};
use multiset_eulerian::macmahon::macmahon_polynomial;
use multiset_eulerian::operators::polynomial_via_operators;
use multiset_eulerian::render::latex_bivariate;
use multiset_eulerian::MultisetSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1,2".into());
    let spec: MultisetSpec = arg.parse()?;
    let m = spec.total();
    println!("multiset {spec}: m = {m}, {} words", spec.word_count());

    let mac = macmahon_polynomial(&spec);
    println!("macmahon   A(x)   = {mac}");
    let mac_bi = mac.homogenize(m + 1)?;

    match bivariate_brute(&spec, default_budget()) {
        Ok(p) => println!("enumerated A(x,y) = {p}  (agrees: {})", p == mac_bi),
        Err(e) => println!("enumeration skipped: {e}"),
    }
    match polynomial_via_operators(&spec) {
        Ok(p) => println!("operators  A(x,y) = {p}  (agrees: {})", p == mac_bi),
        Err(e) => println!("operators skipped: {e}"),
    }
    println!("latex: {}", latex_bivariate(&mac_bi));
    Ok(())
}
