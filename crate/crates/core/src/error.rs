//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when assembling or running the dynamics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Amplitude buffer length does not match the declared bipartite shape.
    #[error("amplitude vector of length {len} does not fit shape {dim_a}x{dim_b}")]
    LengthMismatch {
        dim_a: usize,
        dim_b: usize,
        len: usize,
    },

    /// Two operands live on different bipartite shapes.
    #[error("shape mismatch: {lhs_a}x{lhs_b} vs {rhs_a}x{rhs_b}")]
    ShapeMismatch {
        lhs_a: usize,
        lhs_b: usize,
        rhs_a: usize,
        rhs_b: usize,
    },

    /// Operand dimension is not what the operation supports.
    #[error("unsupported dimension {found}, expected {expected}")]
    UnsupportedDimension { expected: usize, found: usize },

    /// State norm too far from one to accept (or to renormalize).
    #[error("state norm² = {norm_sq} is outside tolerance of 1")]
    NotNormalized { norm_sq: f64 },

    /// Matrix fails the Hermiticity check.
    #[error("matrix is not Hermitian: entry ({row},{col}) != conj(({col},{row}))")]
    NotHermitian { row: usize, col: usize },

    /// Matrix fails the projector test P² = P, P† = P.
    #[error("matrix is not a projector: {reason}")]
    NotProjector { reason: String },

    /// Scalar argument outside its admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A nonlinearity returned a non-finite value on basis element |jk⟩.
    #[error("nonlinearity produced a non-finite value at basis index ({j},{k})")]
    NonFiniteNonlinearity { j: usize, k: usize },

    /// Integration produced a non-finite amplitude.
    #[error("integration diverged at step {step} (t = {time})")]
    Divergence { step: usize, time: f64 },

    /// An operation's stated precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two time series do not share a grid.
    #[error("time grids are not aligned: {0}")]
    GridMismatch(String),

    /// Regression window contains too few samples.
    #[error("insufficient data: {have} points in window, need at least {need}")]
    InsufficientData { have: usize, need: usize },
}
