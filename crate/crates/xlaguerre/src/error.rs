//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Exact polynomial division left a nonzero remainder. When a checker
    /// divides by a factor an identity asserts to exist, this signals an
    /// identity violation.
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,

    /// Attempted to build or divide by a zero polynomial denominator.
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    /// Requested degree is in the family's excluded set, or the family/degree
    /// combination is malformed.
    #[error("degree {n} is not admissible for {family} with m = {m}")]
    DegreeNotAdmissible {
        family: &'static str,
        m: u32,
        n: u32,
    },

    /// Numeric parameter outside the admissible range of the operation.
    #[error("parameter out of range: {0}")]
    Domain(String),

    /// An iterative numeric routine failed to converge.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Quadrature finished without reaching the requested tolerance.
    #[error("tolerance not met: requested {requested}, achieved {achieved}")]
    ToleranceNotMet { requested: f64, achieved: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
