//! Local-oscillator and resolution budgeting for GKP error correction.
//!
//! Given a GKP code's mean photon number, the tolerable total displacement
//! noise, the physical noise floor and infidelity allowances, the planner
//! inverts the noise budget for the required measurement resolution, bounds
//! the photon expectations of the two measured modes, and solves the
//! quadratic (in the squared inverse LO amplitude) infidelity identity for
//! the minimum LO photon number and the equivalent photodiode added noise.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlannerError {
    #[error("no resolution budget: 3 sigma_0^2 = {three_sigma0_sq} must be below sigma_noise^2 = {sigma_noise_sq}")]
    NoBudget {
        three_sigma0_sq: f64,
        sigma_noise_sq: f64,
    },

    #[error("input `{name}` must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("allowance `{name}` must lie in (0, 1), got {value}")]
    AllowanceOutOfRange { name: &'static str, value: f64 },
}

/// Budget inputs for one GKP error-correction configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GkpBudgetInput {
    /// Mean photon number of the code.
    pub n_bar: f64,
    /// Total tolerable canonical displacement noise (standard deviation).
    pub sigma_noise: f64,
    /// Physical canonical displacement noise per quadrature.
    pub sigma_0: f64,
    /// Entanglement-infidelity allowance for ideal-quadrature correction.
    pub eps_ec: f64,
    /// Summed measurement-infidelity allowance for the two measurements.
    pub eps_m: f64,
}

impl GkpBudgetInput {
    pub fn validate(&self) -> Result<(), PlannerError> {
        for (name, v) in [
            ("n_bar", self.n_bar),
            ("sigma_noise", self.sigma_noise),
            ("sigma_0", self.sigma_0),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(PlannerError::NonPositive { name, value: v });
            }
        }
        for (name, v) in [("eps_ec", self.eps_ec), ("eps_m", self.eps_m)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(PlannerError::AllowanceOutOfRange { name, value: v });
            }
        }
        let three_sigma0_sq = 3.0 * self.sigma_0 * self.sigma_0;
        let sigma_noise_sq = self.sigma_noise * self.sigma_noise;
        if three_sigma0_sq >= sigma_noise_sq {
            return Err(PlannerError::NoBudget {
                three_sigma0_sq,
                sigma_noise_sq,
            });
        }
        Ok(())
    }
}

/// Planned budget: resolution, measured-mode photon bounds, the solved
/// squared inverse LO amplitude and its derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GkpBudgetPlan {
    /// Required measurement resolution (quadrature units).
    pub r: f64,
    /// Photon-expectation bounds for the two measured modes.
    pub n_prime_a: f64,
    pub n_prime_b: f64,
    /// Solved squared inverse LO amplitude.
    pub delta_m_sq: f64,
    /// Required LO photon number, `1 / delta_m_sq`.
    pub n_lo: f64,
    /// Equivalent photodiode added noise in electrons, `r / delta_m`.
    pub sigma_e: f64,
    /// Back-substitution residual of the infidelity identity.
    pub residual: f64,
}

impl GkpBudgetPlan {
    /// LO photon number needed when the actual photodiode noise is
    /// `sigma_target` electrons: scaling the LO photon number by `k`
    /// raises the tolerable added noise by `sqrt(k)`, so noisier diodes
    /// need `n_lo (sigma_target / sigma_e)^2`; quieter ones keep `n_lo`.
    pub fn n_lo_at(&self, sigma_target: f64) -> f64 {
        if sigma_target > self.sigma_e {
            self.n_lo * (sigma_target / self.sigma_e).powi(2)
        } else {
            self.n_lo
        }
    }
}

/// Invert the noise budget `sigma_noise^2 = 3 sigma_0^2 + r^2 / 2` for the
/// measurement resolution: `r = sqrt(2 sigma_noise^2 - 6 sigma_0^2)`.
pub fn required_resolution(sigma_noise: f64, sigma_0: f64) -> Result<f64, PlannerError> {
    let arg = 2.0 * sigma_noise * sigma_noise - 6.0 * sigma_0 * sigma_0;
    if arg <= 0.0 {
        return Err(PlannerError::NoBudget {
            three_sigma0_sq: 3.0 * sigma_0 * sigma_0,
            sigma_noise_sq: sigma_noise * sigma_noise,
        });
    }
    Ok(arg.sqrt())
}

/// Photon-expectation bounds for the two measured modes.
///
/// With `v = 2 n_bar + 1` for the squared quadratures of the code states:
/// `n'_a = (3v - 2 + 3 sigma_0^2 + 4 pi) / 4` and
/// `n'_b = (4v - 2 + 4 sigma_0^2 + 2 pi) / 4`.
///
/// The `4 pi` / `2 pi` terms allow for a logical Pauli displacement on the
/// incoming qubit; [`measured_mode_photons_with_options`] can drop them for
/// codes that are never displaced logically.
pub fn measured_mode_photons(n_bar: f64, sigma_0: f64) -> (f64, f64) {
    measured_mode_photons_with_options(n_bar, sigma_0, true)
}

/// Same as [`measured_mode_photons`], with the logical-Pauli displacement
/// allowance made explicit.
pub fn measured_mode_photons_with_options(
    n_bar: f64,
    sigma_0: f64,
    pauli_allowance: bool,
) -> (f64, f64) {
    use std::f64::consts::PI;
    let v = 2.0 * n_bar + 1.0;
    let s0_sq = sigma_0 * sigma_0;
    let (pa, pb) = if pauli_allowance {
        (4.0 * PI, 2.0 * PI)
    } else {
        (0.0, 0.0)
    };
    let n_prime_a = (3.0 * v - 2.0 + 3.0 * s0_sq + pa) / 4.0;
    let n_prime_b = (4.0 * v - 2.0 + 4.0 * s0_sq + pb) / 4.0;
    (n_prime_a, n_prime_b)
}

/// Coefficients of the measurement-infidelity identity
/// `eps_m = c2 delta^2 + c4 delta^4`, summed over both measurements.
pub fn infidelity_coefficients(r: f64, n_prime_a: f64, n_prime_b: f64) -> (f64, f64) {
    let tr2 = (2.0 * r).powi(2);
    let n_sum = n_prime_a + n_prime_b;
    let c2 = 4.0 * n_sum / tr2 + 3.0 / (tr2 * tr2);
    let c4 = (40.0 / 3.0) * (n_sum + 0.5) / (tr2 * tr2 * tr2);
    (c2, c4)
}

/// Solve `eps_m = c2 x + c4 x^2` for `x = delta_m^2` in closed form.
///
/// Uses the cancellation-free root `x = 2 eps / (c2 + sqrt(c2^2 + 4 c4 eps))`
/// and reports the back-substitution residual `|eps - (c2 x + c4 x^2)|`.
pub fn solve_delta_m(eps_m: f64, r: f64, n_prime_a: f64, n_prime_b: f64) -> (f64, f64) {
    let (c2, c4) = infidelity_coefficients(r, n_prime_a, n_prime_b);
    let x = 2.0 * eps_m / (c2 + (c2 * c2 + 4.0 * c4 * eps_m).sqrt());
    let residual = (eps_m - (c2 * x + c4 * x * x)).abs();
    (x, residual)
}

/// Full budget pipeline: resolution, measured-mode photons, the quadratic
/// solve, and the derived LO photon number and equivalent detector noise.
pub fn plan(input: &GkpBudgetInput) -> Result<GkpBudgetPlan, PlannerError> {
    input.validate()?;
    let r = required_resolution(input.sigma_noise, input.sigma_0)?;
    let (n_prime_a, n_prime_b) = measured_mode_photons(input.n_bar, input.sigma_0);
    let (delta_m_sq, residual) = solve_delta_m(input.eps_m, r, n_prime_a, n_prime_b);
    Ok(GkpBudgetPlan {
        r,
        n_prime_a,
        n_prime_b,
        delta_m_sq,
        n_lo: 1.0 / delta_m_sq,
        sigma_e: r / delta_m_sq.sqrt(),
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn row1() -> GkpBudgetInput {
        GkpBudgetInput {
            n_bar: 4.8,
            sigma_noise: 0.1,
            sigma_0: 0.05,
            eps_ec: 0.06,
            eps_m: 0.02,
        }
    }

    #[test]
    fn resolution_examples() {
        assert!((required_resolution(0.1, 0.0).unwrap() - 0.1 * 2f64.sqrt()).abs() < 1e-15);
        let r = required_resolution(0.1, 0.05).unwrap();
        assert!((r - 0.005f64.sqrt()).abs() < 1e-15);
        assert!((r - 0.0707).abs() < 2e-4);
        assert!(matches!(
            required_resolution(0.05, 0.05),
            Err(PlannerError::NoBudget { .. })
        ));
    }

    #[test]
    fn sigma_noise_round_trip() {
        for &(sn, s0) in &[(0.1, 0.05), (0.18, 0.09), (0.15, 0.075), (0.14, 0.05)] {
            let r = required_resolution(sn, s0).unwrap();
            let back = (3.0 * s0 * s0 + r * r / 2.0).sqrt();
            assert!((back - sn).abs() < 1e-14);
        }
    }

    #[test]
    fn measured_mode_photon_examples() {
        let (na, nb) = measured_mode_photons(4.8, 0.05);
        assert!((na - (31.8 - 2.0 + 0.0075 + 4.0 * PI) / 4.0).abs() < 1e-14);
        assert!((nb - (42.4 - 2.0 + 0.01 + 2.0 * PI) / 4.0).abs() < 1e-14);
        assert!((na - 10.59).abs() < 5e-3);
        assert!((nb - 11.67).abs() < 5e-3);

        let (na, _) = measured_mode_photons(0.5, 0.0);
        assert!((na - (1.0 + PI)).abs() < 1e-14);
    }

    #[test]
    fn measured_mode_photons_monotone_in_n_bar() {
        let mut prev = measured_mode_photons(0.1, 0.05);
        for i in 1..50 {
            let n_bar = 0.1 + 0.5 * i as f64;
            let cur = measured_mode_photons(n_bar, 0.05);
            assert!(cur.0 > prev.0 && cur.1 > prev.1);
            prev = cur;
        }
    }

    #[test]
    fn pauli_allowance_flag() {
        let (with_a, with_b) = measured_mode_photons_with_options(4.8, 0.05, true);
        let (wo_a, wo_b) = measured_mode_photons_with_options(4.8, 0.05, false);
        assert!((with_a - wo_a - PI).abs() < 1e-14);
        assert!((with_b - wo_b - PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn quadratic_solve_small_c4_limit() {
        // With a huge resolution the quartic coefficient is negligible and
        // the root approaches eps/c2.
        let (c2, c4) = infidelity_coefficients(10.0, 1.0, 1.0);
        assert!(c4 < c2);
        let (x, _) = solve_delta_m(0.02, 10.0, 1.0, 1.0);
        assert!((x - 0.02 / c2).abs() < 0.02 / c2 * 1e-3);
    }

    #[test]
    fn quadratic_solve_matches_bisection() {
        // Deterministic pseudo-random sweep of 500 inputs.
        let mut state = 0x243f6a8885a308d3u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..500 {
            let eps = 1e-5 + 0.2 * next();
            let r = 0.01 + 0.5 * next();
            let na = 0.1 + 30.0 * next();
            let nb = 0.1 + 30.0 * next();
            let (x, residual) = solve_delta_m(eps, r, na, nb);
            assert!(residual <= 1e-12 * eps, "residual {residual} for eps {eps}");

            let (c2, c4) = infidelity_coefficients(r, na, nb);
            let f = |t: f64| c2 * t + c4 * t * t - eps;
            let (mut lo, mut hi) = (0.0f64, 1.0f64);
            assert!(f(hi) > 0.0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if f(mid) > 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let bisect = 0.5 * (lo + hi);
            assert!(
                (x - bisect).abs() <= 1e-12 * bisect.max(1e-300),
                "closed form {x} vs bisection {bisect}"
            );
        }
    }

    #[test]
    fn plan_reference_row() {
        let p = plan(&row1()).unwrap();
        assert!((p.r - 0.005f64.sqrt()).abs() < 1e-15);
        assert!((p.n_prime_a - 10.5935).abs() < 1e-3);
        assert!((p.n_prime_b - 11.6733).abs() < 1e-3);
        // Straight-line re-evaluation.
        let (c2, c4) = infidelity_coefficients(p.r, p.n_prime_a, p.n_prime_b);
        let x = (-c2 + (c2 * c2 + 4.0 * c4 * 0.02).sqrt()) / (2.0 * c4);
        assert!((p.delta_m_sq - x).abs() < 1e-9 * x);
        assert!((p.n_lo - 1.0 / x).abs() < 1e-6 * p.n_lo);
        // Two-figure landmarks.
        assert!((p.n_lo / 6.0e5 - 1.0).abs() < 0.05, "n_lo = {}", p.n_lo);
        assert!((p.sigma_e - 54.8).abs() < 0.15, "sigma_e = {}", p.sigma_e);
        assert!(p.residual <= 1e-12 * 0.02);
    }

    #[test]
    fn lo_scaling_rule() {
        let p = plan(&row1()).unwrap();
        let at730 = p.n_lo_at(730.0);
        assert!((at730 - p.n_lo * (730.0 / p.sigma_e).powi(2)).abs() < 1e-6 * at730);
        // Quieter target than achieved noise keeps the plan.
        assert_eq!(p.n_lo_at(p.sigma_e * 0.5), p.n_lo);
    }

    #[test]
    fn halving_allowance_roughly_doubles_n_lo() {
        let p = plan(&row1()).unwrap();
        let mut tighter = row1();
        tighter.eps_m /= 2.0;
        let p2 = plan(&tighter).unwrap();
        let ratio = p2.n_lo / p.n_lo;
        assert!((ratio - 2.0).abs() < 0.02, "ratio {ratio}");
    }

    #[test]
    fn monotonicity_of_n_lo() {
        let base = plan(&row1()).unwrap();

        // Larger measurement allowance, smaller LO.
        let mut looser = row1();
        looser.eps_m *= 1.5;
        assert!(plan(&looser).unwrap().n_lo < base.n_lo);

        // Bigger code, larger LO.
        let mut bigger = row1();
        bigger.n_bar *= 2.0;
        assert!(plan(&bigger).unwrap().n_lo > base.n_lo);

        // Tighter resolution (smaller sigma_noise at fixed sigma_0), larger LO.
        let mut tighter = row1();
        tighter.sigma_noise = 0.09;
        assert!(plan(&tighter).unwrap().n_lo > base.n_lo);
    }

    #[test]
    fn invalid_inputs_rejected() {
        let mut bad = row1();
        bad.eps_m = 0.0;
        assert!(matches!(
            plan(&bad),
            Err(PlannerError::AllowanceOutOfRange { .. })
        ));
        let mut bad = row1();
        bad.sigma_0 = 0.06;
        assert!(matches!(plan(&bad), Err(PlannerError::NoBudget { .. })));
    }
}
