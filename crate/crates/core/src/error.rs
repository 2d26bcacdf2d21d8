use thiserror::Error;

use crate::pairs::PairCondition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: bad vertex ids, overlapping sets, empty inputs.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A constructive method's precondition does not hold for this input.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// Fewer disjoint paths exist than requested; `cut` separates the terminals.
    #[error("infeasible: {reason} (blocking cut {cut:?})")]
    Infeasible { reason: String, cut: Vec<usize> },

    /// A numeric hypothesis of a construction failed on this input.
    #[error("hypothesis violated: {0}")]
    BoundViolation(String),

    #[error("exceptional input: {0}")]
    Exceptional(String),

    #[error("cannot be decomposed into edge-pairs: {0:?}")]
    Undecomposable(Vec<PairCondition>),

    #[error("graph is complete, it has no vertex cut")]
    NoCut,

    #[error("input too large for exhaustive search: {0}")]
    SizeLimit(String),

    #[error("certificate does not match graph (expected hash {expected}, found {found})")]
    StaleCertificate { expected: String, found: String },

    #[error("hamiltonian extraction failed: {0}")]
    ExtractionFailure(String),

    /// An oracle re-check disagreed with the computed result.
    #[error("check failed: {0}")]
    CheckFailed(String),

    /// A step the construction proves feasible failed; indicates a bug.
    #[error("internal consistency violation: {0}")]
    Internal(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
