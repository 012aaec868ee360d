//! Error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong in exact simplex embedding.
///
/// `GcdAbort` and `BudgetExhausted` are expected outcomes on some inputs
/// (even-norm quaternion pairs, oversized searches); the rest indicate
/// invalid input data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative radicand")]
    NegativeRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd(0,0) undefined")]
    GcdOfZeros,
    #[error("no GCD exists: even-norm obstruction")]
    GcdAbort,
    #[error("projective vector must have scalar slot 1")]
    ScalarNotUnit,
    #[error("edge lengths must be positive")]
    InvalidEdge,
    #[error("not a triangle: edge lengths violate the triangle inequality")]
    NotATriangle,
    #[error("not Heronian: {0}")]
    NotHeronian(&'static str),
    #[error("improper simplex: axial pose formulas invalid")]
    Improper,
    #[error("zero rotor")]
    ZeroRotor,
    #[error("even LCD: GCD uniqueness not guaranteed")]
    EvenLcd,
    #[error("target not primitive / prime split failure")]
    PrimeSplitFailure,
    #[error("rotation step left a vertex outside the lattice")]
    NotLattice,
    #[error("degenerate faces: rotor underdetermined")]
    DegenerateFaces,
    #[error("budget exhausted: search needs {needed} nodes, budget is {budget}")]
    BudgetExhausted { needed: u64, budget: u64 },
    #[error(
        "bound {bound} is smaller than the maximum edge length; the search would be incomplete"
    )]
    BoundTooSmall { bound: i64 },
    #[error("input too large for exhaustive machinery: {0}")]
    TooLarge(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
