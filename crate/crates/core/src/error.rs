use num_bigint::BigUint;
use thiserror::Error;

use crate::poly::UniPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial of degree {degree} exceeds the center parameter n = {n}")]
    DegreeExceedsN { degree: u32, n: u32 },

    #[error("cannot parse multiset spec {input:?}: {reason}")]
    SpecParse { input: String, reason: String },

    #[error("the multiset is empty; use the convention A(x,y) = x")]
    EmptySpec,

    #[error("enumeration needs {count} words, budget is {budget}")]
    BudgetExceeded { count: BigUint, budget: u64 },

    #[error("operator route supports multiplicities 1 and 2 only, found {multiplicity}")]
    UnsupportedMultiplicity { multiplicity: u32 },

    #[error("polynomial is not symmetric with respect to n = {n} (residual {residual})")]
    NotSymmetric { n: u32, residual: UniPoly },

    #[error("bivariate polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("bivariate polynomial is not invariant under swapping x and y")]
    NotXYSymmetric,

    #[error("polynomial has a negative coefficient at x^{index}")]
    NegativeCoefficient { index: u32 },

    #[error("internal error: exact division by (1 - x) left a remainder")]
    InternalDivisionFailure,

    #[error("expansion type {found} contradicts the multiplicity pattern (expected {expected})")]
    Mismatch { expected: String, found: String },

    #[error("cannot parse coefficient {0:?}")]
    CoefficientParse(String),
}
