use crate::error::require_nonneg;
use crate::BoundsError;

fn check_degree(k: u32) -> Result<(), BoundsError> {
    if k % 2 != 0 {
        return Err(BoundsError::OddDegree(k));
    }
    if k < 4 {
        return Err(BoundsError::DegreeTooSmall(k));
    }
    Ok(())
}

/// Bound on the squared error of estimating the `k`-th quadrature moment
/// through homodyne averages, with the regularization scale optimized.
///
/// Returns `(error_sq_bound, lambda_used)` where
/// `lambda^(2(k-1)) = 4 sqrt(6) delta sqrt(<n_tot>+1) / (sin(pi/k)^3 sqrt(q_4k))`
/// and
/// `error_sq_bound = 16 sqrt(6) delta sqrt(<n_tot>+1) sqrt(q_4k) / sin(pi/k)^3`.
///
/// `q_4k` is a known upper bound on the `4k`-th quadrature moment and must be
/// at least 1/2 for the optimization to apply. At `delta = 0` the bound is 0
/// with `lambda = 0`.
pub fn moment_error_bound(
    delta: f64,
    k: u32,
    n_tot: f64,
    q_4k: f64,
) -> Result<(f64, f64), BoundsError> {
    check_degree(k)?;
    require_nonneg("delta", delta)?;
    require_nonneg("n_tot", n_tot)?;
    if q_4k < 0.5 {
        return Err(BoundsError::SmallMomentBound(q_4k));
    }
    if delta == 0.0 {
        return Ok((0.0, 0.0));
    }
    let sin3 = (std::f64::consts::PI / k as f64).sin().powi(3);
    let sqrt6 = 6f64.sqrt();
    let lambda_pow = 4.0 * sqrt6 * delta * (n_tot + 1.0).sqrt() / (sin3 * q_4k.sqrt());
    let lambda = lambda_pow.powf(1.0 / (2.0 * (k as f64 - 1.0)));
    let error_sq = 16.0 * sqrt6 * delta * (n_tot + 1.0).sqrt() * q_4k.sqrt() / sin3;
    Ok((error_sq, lambda))
}

/// Un-optimized two-term form of the moment error bound for a caller-chosen
/// regularization scale `lambda`.
///
/// `error_sq <= 32 delta^2 / (sin(pi/k)^3 lambda^(2(k-1)))
///              * (1 + 2/sin(pi/k) + 4 lambda^2 / sin(pi/k)^3) (<n_tot> + 1)
///            + 2 lambda^(2k) q_4k`.
///
/// Useful when tighter knowledge of the state allows a better `lambda` than
/// the `q_4k >= 1/2` optimization assumes.
pub fn moment_error_bound_with_lambda(
    delta: f64,
    k: u32,
    n_tot: f64,
    q_4k: f64,
    lambda: f64,
) -> Result<f64, BoundsError> {
    check_degree(k)?;
    require_nonneg("delta", delta)?;
    require_nonneg("n_tot", n_tot)?;
    require_nonneg("q_4k", q_4k)?;
    if !(lambda > 0.0) {
        return Err(BoundsError::NegativeInput {
            name: "lambda",
            value: lambda,
        });
    }
    let s = (std::f64::consts::PI / k as f64).sin();
    let sin3 = s.powi(3);
    let kf = k as f64;
    let first = 32.0 * delta * delta / (sin3 * lambda.powf(2.0 * (kf - 1.0)))
        * (1.0 + 2.0 / s + 4.0 * lambda * lambda / sin3)
        * (n_tot + 1.0);
    let second = 2.0 * lambda.powf(2.0 * kf) * q_4k;
    Ok(first + second)
}
