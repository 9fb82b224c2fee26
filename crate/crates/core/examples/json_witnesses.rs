//! Serializes a positivity report, with its decomposition and gamma vectors,
//! as JSON and reads the polynomial back.

use multiset_eulerian::gamma::PositivityReport;
use multiset_eulerian::macmahon::macmahon_polynomial;
use multiset_eulerian::{MultisetSpec, UniPoly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec: MultisetSpec = "2,2,1,1".parse()?;
    let f = macmahon_polynomial(&spec);
    let report = PositivityReport::build(&f, spec.total())?;
    let json = serde_json::to_string_pretty(&report)?;
    println!("{json}");

    let v: serde_json::Value = serde_json::from_str(&json)?;
    let back: UniPoly = serde_json::from_value(v["polynomial"].clone())?;
    assert_eq!(back, f);
    Ok(())
}
