use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("matrix is singular (pivot {pivot:e} below threshold {threshold:e})")]
    SingularMatrix { pivot: f64, threshold: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension {n} exceeds the limit {limit} for {what}")]
    DimensionTooLarge {
        n: usize,
        limit: usize,
        what: &'static str,
    },

    #[error("power iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("interval matrix [A-I, A+I] is not regular (witness {witness:?})")]
    NotRegular { witness: Vec<i8> },

    #[error("{method} is not applicable: {reason}")]
    NotApplicable {
        method: &'static str,
        reason: String,
    },

    #[error("matrix is not symmetric (asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("absolute value equation has no solution ({singular_branches} singular sign branches skipped)")]
    NoSolution { singular_branches: usize },

    #[error("absolute value equation has {count} solutions")]
    MultipleSolutions { count: usize },

    #[error("right-hand side is zero")]
    ZeroRightHandSide,

    #[error("1 is an eigenvalue of M (|det(M - I)| = {det:e})")]
    OneIsEigenvalue { det: f64 },

    #[error("matrix is not a P-matrix")]
    NotPMatrix,

    #[error("two evaluation routes disagree: {route_a} vs {route_b}")]
    IdentityMismatch { route_a: f64, route_b: f64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn not_applicable(method: &'static str, reason: impl Into<String>) -> Self {
        Error::NotApplicable {
            method,
            reason: reason.into(),
        }
    }

    /// True for outcomes that are mathematical verdicts rather than failures.
    pub fn is_inapplicability(&self) -> bool {
        matches!(
            self,
            Error::NotApplicable { .. }
                | Error::NotRegular { .. }
                | Error::NotPMatrix
                | Error::OneIsEigenvalue { .. }
                | Error::NoSolution { .. }
                | Error::MultipleSolutions { .. }
                | Error::ZeroRightHandSide
                | Error::NotSymmetric { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
