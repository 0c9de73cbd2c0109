use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// Variants are grouped by the broad failure class a caller usually cares
/// about; see [`Error::class`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
    #[error("graph6 order {0} exceeds 62; extended forms are not supported")]
    Graph6OrderTooLarge(usize),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{kind} requires order >= {min}, got {order}")]
    OrderTooSmall {
        kind: &'static str,
        order: usize,
        min: usize,
    },
    #[error("enumeration order {0} out of range 2..=7")]
    EnumerationOrder(usize),
    #[error("vertex pair must be distinct, got ({0}, {0})")]
    SameVertex(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex {0} is isolated; normalized matrices need every degree positive")]
    IsolatedVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("eigenvalue {0:e} is negative beyond the allowed slack")]
    NegativeEigenvalue(f64),

    #[error("precondition unmet: {0}")]
    Precondition(String),
}

/// Coarse failure classes, stable across releases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input could not be read or is out of the supported range.
    Input,
    /// The graph violates a structural convention (isolated vertex, disconnected).
    Convention,
    /// The numerical kernel failed.
    Numerical,
    /// A check was asked of a graph it does not apply to.
    Precondition,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::IsolatedVertex(_) | Error::Disconnected => ErrorClass::Convention,
            Error::NoConvergence { .. } | Error::NegativeEigenvalue(_) => ErrorClass::Numerical,
            Error::Precondition(_) => ErrorClass::Precondition,
            _ => ErrorClass::Input,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
