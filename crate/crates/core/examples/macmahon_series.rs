//! MacMahon's route reaches multiplicities the operators do not cover.
//! Prints A(x) for a few multisets and confirms polynomiality of the series.

use multiset_eulerian::macmahon::{macmahon_polynomial, polynomiality_check};
use multiset_eulerian::MultisetSpec;

fn main() {
    for s in ["3", "3,3", "4,2,1", "1^20", "2^10", "5,5,5"] {
        let spec: MultisetSpec = s.parse().unwrap();
        let f = macmahon_polynomial(&spec);
        println!(
            "{:<24} words {:<14} polynomial {:<5} A(x) = {f}",
            spec.to_string(),
            spec.word_count().to_string(),
            polynomiality_check(&spec, 8)
        );
    }
}
