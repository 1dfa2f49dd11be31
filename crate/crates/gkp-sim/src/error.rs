use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("occupation cutoff {cutoff} too small: {detail}")]
    CutoffTooSmall { cutoff: usize, detail: String },

    #[error("population {population:.3e} above level {level} exceeds the leakage tolerance")]
    CutoffLeakage { level: usize, population: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("sigma_eff must be positive, got {0}")]
    NonPositiveSigma(f64),

    #[error("matrix is singular at pivot {0}")]
    SingularMatrix(usize),

    #[error("not a density operator: {0}")]
    NotDensity(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
