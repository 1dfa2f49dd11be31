use thiserror::Error;

/// Errors raised while validating domain inputs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("normalization violated: {0}")]
    NormalizationError(String),

    #[error("detector weight {index} is negative ({value})")]
    NegativeWeight { index: usize, value: f64 },

    #[error("input must be non-negative, got {0}")]
    NegativeInput(f64),

    #[error("value {value} outside allowed range [{lo}, {hi}]")]
    RangeError { value: f64, lo: f64, hi: f64 },

    #[error("mode list lengths differ: {alphas} quadrature coefficients vs {omegas} weights")]
    LengthMismatch { alphas: usize, omegas: usize },

    #[error("mode lists must be non-empty")]
    Empty,

    #[error("measurement resolution must be positive, got {0}")]
    NonPositiveResolution(f64),

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),
}
