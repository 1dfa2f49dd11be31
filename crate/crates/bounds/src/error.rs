use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error(transparent)]
    Core(#[from] hcert_core::CoreError),

    #[error("required moment `{0}` is missing")]
    MissingMoment(String),

    #[error("moment degree k must be even, got {0}")]
    OddDegree(u32),

    #[error("moment degree k must be at least 4, got {0}")]
    DegreeTooSmall(u32),

    #[error("quadrature moment bound must be at least 1/2, got {0}")]
    SmallMomentBound(f64),

    #[error("input `{name}` must be non-negative, got {value}")]
    NegativeInput { name: &'static str, value: f64 },
}

pub(crate) fn require_nonneg(name: &'static str, value: f64) -> Result<f64, BoundsError> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(BoundsError::NegativeInput { name, value })
    }
}
