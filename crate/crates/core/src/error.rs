//! Crate-wide error type.

/// Errors produced by the linear-algebra kernels, the loading rules and the
/// experiment driver.
#[derive(thiserror::Error, Debug)]
pub enum Error {
    /// A Cholesky pivot came out non-positive: the matrix handed to the solver
    /// is not positive-definite, usually because no (or not enough) diagonal
    /// loading was applied first.
    #[error("matrix is not positive definite (pivot {pivot:.3e} at row {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },

    /// The cyclic Jacobi sweep limit was reached before the off-diagonal mass
    /// dropped below the convergence threshold.
    #[error("eigendecomposition did not converge after {sweeps} sweeps (off-diagonal residual {residual:.3e})")]
    EvdNotConverged { sweeps: usize, residual: f64 },

    /// Vector/matrix dimensions do not agree.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// A matrix tagged positive semi-definite has a significantly negative
    /// diagonal entry.
    #[error("matrix is not positive semi-definite (diagonal entry {value:.3e} at row {index})")]
    NotPsd { index: usize, value: f64 },

    /// The requested white-noise-gain floor lies outside [1, M].
    #[error("WNG floor {wng_min:.6} (linear) outside feasible range [1, {array_size}]")]
    WngFloorOutOfRange { wng_min: f64, array_size: usize },

    /// A condition-number cap of 1 cannot be met with any finite loading when
    /// the spectrum is not already flat; the caller must relax the WNG floor.
    #[error("condition cap {kappa_max} cannot be met with finite loading (bounds {lower:.3e}..{upper:.3e})")]
    LoadingInfeasible {
        kappa_max: f64,
        lower: f64,
        upper: f64,
    },

    /// The blocking matrix failed its one-time orthonormality check.
    #[error("blocking matrix is not orthonormal (max deviation {max_deviation:.3e})")]
    BlockingMatrixNotOrthonormal { max_deviation: f64 },

    /// Configuration failed validation; the message names the offending field.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("failed to parse config: {0}")]
    ConfigParse(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
