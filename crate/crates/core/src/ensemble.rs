use num_complex::Complex64;

use crate::{CoreError, INPUT_NORM_TOL};

/// Signal-mode description for a BBP homodyne measurement.
///
/// `alphas` are the complex quadrature coefficients of the target quadrature
/// (normalized so that the squared magnitudes sum to 1) and `omegas` are the
/// non-negative detector weights, normalized so their maximum is 1. Standard
/// pulsed homodyne is the special case where every weight equals 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeEnsemble {
    alphas: Vec<Complex64>,
    omegas: Vec<f64>,
}

/// Validate raw coefficient lists into a [`ModeEnsemble`].
///
/// Nothing is rescaled silently: lists that violate the normalization
/// conventions beyond `1e-9` are rejected.
pub fn validate_ensemble(
    alphas: Vec<Complex64>,
    omegas: Vec<f64>,
) -> Result<ModeEnsemble, CoreError> {
    ModeEnsemble::new(alphas, omegas)
}

impl ModeEnsemble {
    pub fn new(alphas: Vec<Complex64>, omegas: Vec<f64>) -> Result<Self, CoreError> {
        if alphas.is_empty() || omegas.is_empty() {
            return Err(CoreError::Empty);
        }
        if alphas.len() != omegas.len() {
            return Err(CoreError::LengthMismatch {
                alphas: alphas.len(),
                omegas: omegas.len(),
            });
        }
        for (k, &w) in omegas.iter().enumerate() {
            if !w.is_finite() {
                return Err(CoreError::NonFinite(format!("omega[{k}]")));
            }
            if w < 0.0 {
                return Err(CoreError::NegativeWeight { index: k, value: w });
            }
        }
        for (k, a) in alphas.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(CoreError::NonFinite(format!("alpha[{k}]")));
            }
        }
        let norm_sq: f64 = alphas.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > INPUT_NORM_TOL {
            return Err(CoreError::NormalizationError(format!(
                "sum of |alpha_k|^2 must be 1, got {norm_sq}"
            )));
        }
        let max_w = omegas.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if (max_w - 1.0).abs() > INPUT_NORM_TOL {
            return Err(CoreError::NormalizationError(format!(
                "max omega_k must be 1, got {max_w}"
            )));
        }
        Ok(Self { alphas, omegas })
    }

    /// Single mode with unit weight: the standard pulsed homodyne case.
    pub fn single_mode() -> Self {
        Self {
            alphas: vec![Complex64::new(1.0, 0.0)],
            omegas: vec![1.0],
        }
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn alphas(&self) -> &[Complex64] {
        &self.alphas
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    /// Weighted coefficient average `sum_k |alpha_k|^2 omega_k^2`, in (0, 1].
    pub fn omega_bar_sq(&self) -> f64 {
        self.alphas
            .iter()
            .zip(&self.omegas)
            .map(|(a, w)| a.norm_sqr() * w * w)
            .sum()
    }

    /// Fourth-power analogue `sum_k |alpha_k|^2 omega_k^4`.
    pub fn omega_bar_4(&self) -> f64 {
        self.alphas
            .iter()
            .zip(&self.omegas)
            .map(|(a, w)| a.norm_sqr() * w.powi(4))
            .sum()
    }

    /// True when every quadrature coefficient is real and non-negative.
    pub fn is_real_nonnegative(&self) -> bool {
        self.alphas.iter().all(|a| a.im == 0.0 && a.re >= 0.0)
    }
}

/// Weighted coefficient average `sum_k |alpha_k|^2 omega_k^2` of an ensemble.
pub fn omega_bar_sq(ensemble: &ModeEnsemble) -> f64 {
    ensemble.omega_bar_sq()
}
