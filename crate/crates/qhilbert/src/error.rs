//! Error type shared by the whole crate.

use std::fmt;

/// Errors produced by exact-arithmetic operations and matrix construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two field elements from different contexts (different radicands) were combined.
    ContextMismatch { left: u64, right: u64 },
    /// Division by zero, inversion of zero, or a negative power of zero.
    DivisionByZero,
    /// The radicand is below 2 or a perfect square, so {1, sqrt(d)} is not a basis.
    InvalidContext { d: u64 },
    /// A parameter is outside its domain (zero root, alpha < 1, unparsable input, ...).
    InvalidParameter(String),
    /// q^k = 1 for some 2 <= k <= order: the quantum integers of that order vanish
    /// and the matrices of interest degenerate.
    RootOfUnity { order: u32 },
    /// A denominator factor vanished while evaluating a q-binomial or a measure integral.
    DegenerateDenominator { order: u32 },
    /// The matrix has no inverse.
    SingularMatrix,
    /// CSV export was requested for a matrix with an irrational or complex entry.
    NonRationalEntry { row: usize, col: usize },
    /// A quantum-integer/Fibonacci bridge identity failed; indicates a bug.
    BridgeViolation(String),
    /// An internal algebraic identity failed; indicates a bug.
    IdentityViolation(String),
    /// A self-check (e.g. inverse certificate) failed; indicates a bug.
    CertificationFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ContextMismatch { left, right } => {
                write!(f, "context mismatch: sqrt({left}) vs sqrt({right})")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidContext { d } => {
                write!(f, "invalid context: {d} must be a non-square integer >= 2")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::RootOfUnity { order } => {
                write!(f, "q is a root of unity of order {order}")
            }
            Error::DegenerateDenominator { order } => {
                write!(f, "degenerate denominator at order {order}")
            }
            Error::SingularMatrix => write!(f, "singular matrix"),
            Error::NonRationalEntry { row, col } => {
                write!(f, "entry ({row},{col}) is not rational")
            }
            Error::BridgeViolation(msg) => write!(f, "bridge identity violated: {msg}"),
            Error::IdentityViolation(msg) => write!(f, "identity violated: {msg}"),
            Error::CertificationFailed(msg) => write!(f, "certification failed: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
