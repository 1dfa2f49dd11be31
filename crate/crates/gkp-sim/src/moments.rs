use hcert_core::{ModeEnsemble, StateMoments};
use num_complex::Complex64;

use crate::fock::{number_op, quadrature, FockOperator};
use crate::linalg::CMat;
use crate::SimError;

fn expectation(op: &CMat, rho: &CMat) -> f64 {
    // tr(op rho), real part (both operands Hermitian in our uses).
    let mut tr = Complex64::new(0.0, 0.0);
    for i in 0..op.nrows() {
        for k in 0..op.ncols() {
            tr += op[[i, k]] * rho[[k, i]];
        }
    }
    tr.re
}

/// Expectation of the `degree`-th power of the angle-0 normalized quadrature.
pub fn quadrature_moment(rho: &FockOperator, degree: u32) -> Result<f64, SimError> {
    rho.check_density()?;
    let dim = rho.dim();
    let q = quadrature(dim, 0.0);
    let mut power = crate::linalg::identity(dim);
    for _ in 0..degree {
        power = power.dot(&q);
    }
    Ok(expectation(&power, rho.mat()))
}

/// Scalar moments of a single-mode Fock-basis density operator, for feeding
/// the convergence bounds: `<n>`, `<q^2>` and `<(n + 1/2)^2>` by direct
/// trace.
///
/// With an ensemble (restricted to a single mode here), the weighted photon
/// expectation is `omega_1^2 <n>`; otherwise the weight is 1. Errors with
/// `CutoffLeakage` when more than 1e-8 of the population sits above
/// `cutoff - 5`.
pub fn state_moments_from_fock(
    rho: &FockOperator,
    ensemble: Option<&ModeEnsemble>,
) -> Result<StateMoments, SimError> {
    rho.check_density()?;
    let dim = rho.dim();
    if dim < 6 {
        return Err(SimError::CutoffTooSmall {
            cutoff: dim - 1,
            detail: "moment extraction needs at least 6 levels".into(),
        });
    }
    let leak_level = dim - 5;
    let population: f64 = (leak_level..dim).map(|i| rho.mat()[[i, i]].re).sum();
    if population > 1e-8 {
        return Err(SimError::CutoffLeakage {
            level: leak_level,
            population,
        });
    }

    let weight_sq = match ensemble {
        Some(e) => {
            if e.len() != 1 {
                return Err(SimError::DimensionMismatch(format!(
                    "single-mode moment extraction got a {}-mode ensemble",
                    e.len()
                )));
            }
            e.omegas()[0] * e.omegas()[0]
        }
        None => 1.0,
    };

    let n_op = number_op(dim);
    let n = expectation(&n_op, rho.mat());
    let q = quadrature(dim, 0.0);
    let q_sq = expectation(&q.dot(&q), rho.mat());
    let n_half = &n_op + &crate::linalg::identity(dim).mapv(|z| z * Complex64::new(0.5, 0.0));
    let n_half_sq = expectation(&n_half.dot(&n_half), rho.mat());

    let mut moments = StateMoments::new(weight_sq * n, n)
        .map_err(|e| SimError::InvalidParameter(e.to_string()))?
        .with_q_sq(q_sq.max(0.0))
        .map_err(|e| SimError::InvalidParameter(e.to_string()))?;
    moments
        .composite
        .insert("n_half_sq".to_string(), n_half_sq);
    Ok(moments)
}
