//! Descent polynomials of multiset permutations in exact arithmetic.
//!
//! `A_m(x) = sum over words of x^des` for the multiset `{1^m_1, ..., n^m_n}` is
//! computed three independent ways:
//!
//! * [`enumeration`]: walk every word (ground truth, bounded by a budget);
//! * [`macmahon`]: coefficient extraction from MacMahon's series identity;
//! * [`operators`]: the Eulerian operators `T` and `G` applied to `x`, one per
//!   letter of multiplicity 1 or 2.
//!
//! [`gamma`] extracts gamma expansions and the symmetric decomposition
//! `f = a + x b` and certifies bi-gamma-positivity, alternating increase and
//! unimodality. [`sweep`] runs all of it over every multiset up to a size.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod gamma;
pub mod macmahon;
pub mod multiset;
pub mod operators;
pub mod poly;
pub mod render;
pub mod sweep;

pub use error::{Error, Result};
pub use gamma::{GammaVector, PositivityReport, SymmetricDecomposition};
pub use multiset::MultisetSpec;
pub use poly::{BiPoly, Rational, UniPoly, Var};
