use thiserror::Error;

/// Errors raised by constructors and numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported matrix dimension {0} (expected 2, 4 or 8)")]
    InvalidDimension(usize),
    #[error("expected {expected} matrix entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("kronecker product dimension {0} exceeds 8")]
    DimensionOverflow(usize),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("trace is {0} instead of 1")]
    NotUnitTrace(f64),
    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),
    #[error("observable does not square to identity (max deviation {0:e})")]
    NotDichotomic(f64),
    #[error("axis is not a unit vector (norm {0})")]
    NonUnitAxis(f64),
    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("target distance {target} is unreachable (direction lies at distance {max})")]
    UnreachableDistance { target: f64, max: f64 },
    #[error("probability {0} escaped [0, 1] beyond tolerance")]
    ProbabilityOutOfRange(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
