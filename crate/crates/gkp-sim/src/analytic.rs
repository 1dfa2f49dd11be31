use crate::SimError;

/// Probability that isotropic Gaussian displacement noise of standard
/// deviation `sigma_eff` keeps one canonical quadrature within the
/// correctable half-cell of the square GKP lattice:
///
/// `p_succ = (1/sqrt(2 pi sigma^2)) sum_n integral over
///  [(2n - 1/2) sqrt(pi), (2n + 1/2) sqrt(pi)] of exp(-z^2 / (2 sigma^2))`.
///
/// Evaluated with the Gaussian CDF; the lattice sum is truncated once the
/// remaining tail mass is below 1e-16.
pub fn p_succ(sigma_eff: f64) -> Result<f64, SimError> {
    if !(sigma_eff > 0.0) {
        return Err(SimError::NonPositiveSigma(sigma_eff));
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let root2 = 2f64.sqrt();
    let phi = |z: f64| 0.5 * (1.0 + libm::erf(z / (sigma_eff * root2)));
    let cell = |n: i64| {
        let lo = (2.0 * n as f64 - 0.5) * sqrt_pi;
        let hi = (2.0 * n as f64 + 0.5) * sqrt_pi;
        phi(hi) - phi(lo)
    };
    let mut total = cell(0);
    let mut n = 1i64;
    loop {
        let add = 2.0 * cell(n); // cells at +n and -n carry equal mass
        total += add;
        // Remaining tail beyond the outer edge of cell n.
        let tail = 2.0 * (1.0 - phi((2.0 * n as f64 + 1.5) * sqrt_pi));
        if tail < 1e-16 {
            break;
        }
        n += 1;
        if n > 1_000_000 {
            break;
        }
    }
    Ok(total.clamp(0.0, 1.0))
}

/// Analytic entanglement fidelity of teleported GKP error correction:
/// `F_e = p_succ(sigma_eff)^2` with
/// `sigma_eff^2 = 3 sigma_gkp^2 + sigma_noise^2`.
pub fn analytic_entanglement_fidelity(
    sigma_gkp_sq: f64,
    sigma_noise_sq: f64,
) -> Result<f64, SimError> {
    if sigma_gkp_sq < 0.0 || sigma_noise_sq < 0.0 {
        return Err(SimError::InvalidParameter(
            "noise variances must be non-negative".into(),
        ));
    }
    let eff_sq = 3.0 * sigma_gkp_sq + sigma_noise_sq;
    if eff_sq == 0.0 {
        return Ok(1.0);
    }
    let p = p_succ(eff_sq.sqrt())?;
    Ok(p * p)
}
