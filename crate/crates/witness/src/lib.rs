//! Exact distance between finite-LO and ideal quadrature evolution on
//! coherent inputs.
//!
//! For a coherent state with real amplitude `i gamma_k` on each signal mode
//! and vacuum on the LO modes, the overlap between the two evolutions has a
//! closed form: each mode contributes an amplitude-difference vector
//! `Delta_k` built from the wrapped beamsplitter angle `phi_k`, and the
//! distance squared minimized over a global phase is
//! `2 (1 - exp(-sum_k |Delta_k|^2 / 2))`.
//!
//! This is the tightness oracle for the evolution-distance bounds: it is
//! exact, so every upper bound must dominate it pointwise.

use hcert_core::ModeEnsemble;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WitnessError {
    #[error("delta must be positive (the finite-LO formula divides by omega_k * delta * s); got {0}")]
    ZeroDelta(f64),

    #[error("witness requires real non-negative quadrature coefficients")]
    ComplexAlpha,

    #[error("gamma list has {gammas} entries for {modes} modes")]
    GammaLengthMismatch { gammas: usize, modes: usize },

    #[error("angle argument {0} outside [-pi, pi]")]
    DomainError(f64),

    #[error("non-finite input: {0}")]
    NonFinite(String),
}

/// Exact-distance evaluation point: LO scale `delta`, evolution parameter
/// `s`, the mode ensemble, and the per-mode real coherent amplitudes
/// `gamma_k` (the state carries amplitude `i gamma_k` on signal mode `k`).
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentWitnessInput {
    pub delta: f64,
    pub s: f64,
    pub ensemble: ModeEnsemble,
    pub gammas: Vec<f64>,
}

impl CoherentWitnessInput {
    pub fn new(
        delta: f64,
        s: f64,
        ensemble: ModeEnsemble,
        gammas: Vec<f64>,
    ) -> Result<Self, WitnessError> {
        if !delta.is_finite() || !s.is_finite() {
            return Err(WitnessError::NonFinite("delta or s".into()));
        }
        if gammas.len() != ensemble.len() {
            return Err(WitnessError::GammaLengthMismatch {
                gammas: gammas.len(),
                modes: ensemble.len(),
            });
        }
        if !ensemble.is_real_nonnegative() {
            return Err(WitnessError::ComplexAlpha);
        }
        Ok(Self {
            delta,
            s,
            ensemble,
            gammas,
        })
    }

    /// Weighted photon expectation `<Omega> = sum_k omega_k^2 gamma_k^2` of
    /// the witness state.
    pub fn omega_exp(&self) -> f64 {
        self.ensemble
            .omegas()
            .iter()
            .zip(&self.gammas)
            .map(|(w, g)| w * w * g * g)
            .sum()
    }

    /// Total photon expectation `sum_k gamma_k^2` of the witness state.
    pub fn n_tot(&self) -> f64 {
        self.gammas.iter().map(|g| g * g).sum()
    }
}

/// Wrap an angle into `(-pi, pi]`.
pub fn wrap_angle_pi(x: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let w = (x + std::f64::consts::PI).rem_euclid(two_pi) - std::f64::consts::PI;
    if w == -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        w
    }
}

/// `g(phi) = (phi/2) cot(phi/2)` on `[-pi, pi]`, with the removable
/// singularity at 0 evaluated by series below `|phi| < 1e-4`.
///
/// Satisfies the bracketing `1 - phi^2/9 <= g(phi) <= 1 - phi^2/12`.
pub fn g_phi(phi: f64) -> Result<f64, WitnessError> {
    if !phi.is_finite() || phi.abs() > std::f64::consts::PI {
        return Err(WitnessError::DomainError(phi));
    }
    let h = phi / 2.0;
    if phi.abs() < 1e-4 {
        // x cot x = 1 - x^2/3 - x^4/45 - ... with x = phi/2.
        Ok(1.0 - phi * phi / 12.0 - phi.powi(4) / 720.0)
    } else {
        Ok(h * h.cos() / h.sin())
    }
}

// sin(x)/x with the removable singularity handled by series.
fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 - x * x / 6.0 + x.powi(4) / 120.0
    } else {
        x.sin() / x
    }
}

// (1 - cos(x))/x with the removable singularity handled by series.
fn haversinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        x / 2.0 - x.powi(3) / 24.0
    } else {
        (1.0 - x.cos()) / x
    }
}

/// Per-mode amplitude-difference vector `(Delta_1, Delta_2)` for mode `k`.
///
/// With `x = omega_k delta s` and `phi = [x]_pi`:
/// `Delta_1 = (cos phi - 1) gamma + (sin(phi)/x - cos phi) alpha s`,
/// `Delta_2 = -sin(phi) (gamma - alpha s) - alpha s (1 - cos phi)/x`.
/// The trigonometric factors are 2 pi periodic, so they are evaluated at `x`
/// directly, with series forms below `|x| < 1e-4`.
fn mode_delta(x: f64, alpha: f64, gamma: f64, s: f64) -> (f64, f64) {
    let cos = x.cos();
    let sin = x.sin();
    let d1 = (cos - 1.0) * gamma + (sinc(x) - cos) * alpha * s;
    let d2 = -sin * (gamma - alpha * s) - alpha * s * haversinc(x);
    (d1, d2)
}

/// Exact squared distance between finite-LO and ideal evolution for the
/// coherent witness state, minimized over the global phase:
/// `2 (1 - exp(-sum_k |Delta_k|^2 / 2))`. Always in `[0, 2]`.
pub fn coherent_exact_distance_sq(input: &CoherentWitnessInput) -> Result<f64, WitnessError> {
    if !(input.delta > 0.0) {
        return Err(WitnessError::ZeroDelta(input.delta));
    }
    let mut sum = 0.0;
    for ((alpha, omega), gamma) in input
        .ensemble
        .alphas()
        .iter()
        .zip(input.ensemble.omegas())
        .zip(&input.gammas)
    {
        let x = omega * input.delta * input.s;
        let (d1, d2) = mode_delta(x, alpha.re, *gamma, input.s);
        sum += d1 * d1 + d2 * d2;
    }
    Ok(2.0 * (1.0 - (-sum / 2.0).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn wrap_examples() {
        assert_eq!(wrap_angle_pi(0.0), 0.0);
        assert!((wrap_angle_pi(3.0 * PI / 2.0) - (-PI / 2.0)).abs() < 1e-15);
        assert_eq!(wrap_angle_pi(-PI), PI);
        assert_eq!(wrap_angle_pi(PI), PI);
        assert!(wrap_angle_pi(2.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn wrap_is_congruent_and_in_range() {
        for i in -1000..1000 {
            let x = 0.0137 * i as f64;
            let w = wrap_angle_pi(x);
            assert!(w > -PI && w <= PI, "wrap({x}) = {w}");
            let k = (x - w) / (2.0 * PI);
            assert!((k - k.round()).abs() < 1e-9, "wrap({x}) = {w} not congruent");
        }
    }

    #[test]
    fn g_phi_examples() {
        assert_eq!(g_phi(0.0).unwrap(), 1.0);
        assert!((g_phi(PI / 2.0).unwrap() - PI / 4.0).abs() < 1e-15);
        assert!(g_phi(PI + 0.1).is_err());
        // Series and direct forms agree across the switchover.
        for &phi in &[9e-5f64, 1.1e-4, -9e-5, -1.1e-4] {
            let series = 1.0 - phi * phi / 12.0 - phi.powi(4) / 720.0;
            assert!((g_phi(phi).unwrap() - series).abs() < 1e-16);
        }
    }

    #[test]
    fn g_phi_band_on_random_samples() {
        // 1000 deterministic pseudo-random angles in [-pi, pi].
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..1000 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let u = (state >> 11) as f64 / (1u64 << 53) as f64;
            let phi = (2.0 * u - 1.0) * PI;
            let g = g_phi(phi).unwrap();
            assert!(g <= 1.0 - phi * phi / 12.0 + 1e-12, "upper band fails at {phi}");
            assert!(g >= 1.0 - phi * phi / 9.0 - 1e-12, "lower band fails at {phi}");
        }
    }

    #[test]
    fn zero_s_is_exact() {
        let input = CoherentWitnessInput::new(
            0.1,
            0.0,
            ModeEnsemble::single_mode(),
            vec![1.5],
        )
        .unwrap();
        assert_eq!(coherent_exact_distance_sq(&input).unwrap(), 0.0);
    }

    #[test]
    fn worked_single_mode_example() {
        // omega = 1, alpha = 1, gamma = 0, delta = 0.1, s = 1.
        let input =
            CoherentWitnessInput::new(0.1, 1.0, ModeEnsemble::single_mode(), vec![0.0]).unwrap();
        let d2 = coherent_exact_distance_sq(&input).unwrap();

        // Hand evaluation of the same closed form.
        let x = 0.1f64;
        let delta1 = (x.sin() / x - x.cos()) * 1.0;
        let delta2 = x.sin() - (1.0 - x.cos()) / x;
        let expected = 2.0 * (1.0 - (-(delta1 * delta1 + delta2 * delta2) / 2.0).exp());
        assert!((d2 - expected).abs() < 1e-15);
        assert!((d2 - 2.50e-3).abs() < 5e-6);

        // The general evolution bound at the same point dominates: with
        // gamma = 0 the witness has <Omega> = 0, and the bound is
        // 4 (0.1)^2 (0 + 1) = 0.04.
        assert!(d2 <= 0.04);
    }

    #[test]
    fn zero_delta_rejected() {
        let input =
            CoherentWitnessInput::new(0.1, 1.0, ModeEnsemble::single_mode(), vec![0.0]).unwrap();
        let bad = CoherentWitnessInput { delta: 0.0, ..input };
        assert!(matches!(
            coherent_exact_distance_sq(&bad),
            Err(WitnessError::ZeroDelta(_))
        ));
    }

    #[test]
    fn distance_in_unit_vector_range() {
        for i in 1..100 {
            let delta = 0.003 * i as f64;
            for j in -10..=10 {
                let s = 0.5 * j as f64;
                let input = CoherentWitnessInput::new(
                    delta,
                    s,
                    ModeEnsemble::single_mode(),
                    vec![2.0],
                )
                .unwrap();
                let d2 = coherent_exact_distance_sq(&input).unwrap();
                assert!((0.0..=2.0).contains(&d2));
            }
        }
    }

    #[test]
    fn gamma_length_checked() {
        let err =
            CoherentWitnessInput::new(0.1, 1.0, ModeEnsemble::single_mode(), vec![0.0, 1.0])
                .unwrap_err();
        assert!(matches!(err, WitnessError::GammaLengthMismatch { .. }));
    }
}
