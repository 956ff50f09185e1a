//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, QrError>;

/// Errors raised by state validation, solver routines and the CLI.
#[derive(Debug, Error)]
pub enum QrError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subsystem dimensions {dims:?} do not multiply to matrix dimension {dim}")]
    BadSubsystemDims { dims: Vec<usize>, dim: usize },

    #[error("site index {site} out of range for {n} qubits")]
    SiteOutOfRange { site: usize, n: usize },

    #[error("invalid subsystem selection {selection:?} for {count} subsystems")]
    InvalidSubsystem { selection: Vec<usize>, count: usize },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("trace deviates from one by {deviation:.3e}")]
    TraceDeviation { deviation: f64 },

    #[error("matrix is not Hermitian (max asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },

    #[error("negative eigenvalue {value:.3e} below tolerance")]
    NegativeEigenvalue { value: f64 },

    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("matrix is numerically singular")]
    SingularMatrix,

    #[error("stationary subspace is degenerate ({count} near-null directions)")]
    DegenerateSteadyState { count: usize },

    #[error("rotated jump operator does not match a single-qubit lowering pattern")]
    WiringMismatch,

    #[error("steady-state residual {residual:.3e} exceeds tolerance")]
    SteadyStateResidual { residual: f64 },

    #[error("Kraus completeness violated by {deviation:.3e}")]
    KrausIncomplete { deviation: f64 },

    #[error("map is not completely positive (Choi eigenvalue {min_eigenvalue:.3e})")]
    NotCompletelyPositive { min_eigenvalue: f64 },

    #[error("empty Kraus operator list")]
    EmptyKrausList,

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
