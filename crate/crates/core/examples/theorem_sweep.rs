//! Sweeps every multiset with multiplicities 1 and 2 up to a size and checks
//! route agreement, commutativity and bi-gamma-positivity.
//!
//!     cargo run --release --example theorem_sweep -- 12

use multiset_eulerian::sweep::{run_verify, VerifyConfig};

fn main() {
    let max_m = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let summary = run_verify(&VerifyConfig {
        max_m,
        ..VerifyConfig::default()
    });
    for o in &summary.outcomes {
        println!(
            "{:<28} m={:<3} enum {:<5} type {:<9} bi-gamma {:<5} modes {:?}",
            o.spec.to_string(),
            o.m,
            o.enumerated,
            o.expansion_type.map(|t| t.to_string()).unwrap_or_default(),
            o.bi_gamma_positive.unwrap_or(false),
            o.modes
        );
    }
    println!(
        "{} multisets, {} enumerated ({} words), {} violations",
        summary.specs, summary.enumerated, summary.enumerated_words, summary.violations
    );
    if !summary.passed() {
        std::process::exit(1);
    }
}
