use thiserror::Error;

/// Failures raised by the geometry, envelope, radius, oracle and special-function routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum JanowskiError {
    #[error("degenerate map: {0}")]
    DegenerateMap(String),

    #[error("pole on the sampled boundary: 1 + Bz = 0 at z = {re}{im:+}i")]
    PoleOnBoundary { re: f64, im: f64 },

    #[error("branch of the power is undefined: {0}")]
    BranchUndefined(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("no sign change found while bracketing {0}")]
    NoBracket(String),

    #[error("no root: {0}")]
    NoRoot(String),

    #[error("admissibility condition failed, excess {excess:.6e}")]
    ConditionFailed { excess: f64 },

    #[error("series did not converge after {terms} terms")]
    NoConvergence { terms: usize },

    #[error("quadrature failed to reach tolerance: {0}")]
    QuadratureFailure(String),

    #[error("lambda is not Caratheodory: sampled Re lambda = {min_re:.6e} at {re}{im:+}i")]
    NonCaratheodoryLambda { min_re: f64, re: f64, im: f64 },

    #[error("infimum of Re lambda is negative ({0:.6e}); no admissible eta >= 0")]
    NegativeRealPart(f64),

    #[error("unknown theorem id `{0}`")]
    InvalidTheoremId(String),
}

impl JanowskiError {
    /// Process exit code: 2 for precondition violations, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            JanowskiError::DegenerateMap(_)
            | JanowskiError::PoleOnBoundary { .. }
            | JanowskiError::BranchUndefined(_)
            | JanowskiError::InvalidParameter(_)
            | JanowskiError::OutOfRange(_)
            | JanowskiError::ConditionFailed { .. }
            | JanowskiError::NonCaratheodoryLambda { .. }
            | JanowskiError::NegativeRealPart(_)
            | JanowskiError::InvalidTheoremId(_) => 2,
            JanowskiError::NoBracket(_)
            | JanowskiError::NoRoot(_)
            | JanowskiError::NoConvergence { .. }
            | JanowskiError::QuadratureFailure(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, JanowskiError>;
