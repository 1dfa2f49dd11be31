use hcert_core::{echo, ApparatusModel, BoundReport, CoreError, ModeEnsemble, StateMoments};

use crate::BoundsError;

/// Even moments `(b2, b4, b6)` of a Gaussian apparatus density at resolution `r`.
///
/// `|g(s)|^2` is a Gaussian of variance `1/(2r)^2`, so
/// `b2 = 1/(2r)^2`, `b4 = 3/(2r)^4`, `b6 = 15/(2r)^6` exactly.
pub fn gaussian_apparatus_moments(r: f64) -> Result<(f64, f64, f64), BoundsError> {
    if !(r > 0.0) {
        return Err(CoreError::NonPositiveResolution(r).into());
    }
    Ok(ApparatusModel::GaussianResolution { r }.moments())
}

pub(crate) fn measurement_distance_sq_general(
    delta: f64,
    b2: f64,
    b4: f64,
    omega_exp: f64,
    omega_bar_sq: f64,
) -> f64 {
    4.0 * delta * delta * (b2 * omega_exp + b4 * (omega_exp + omega_bar_sq))
}

/// Fidelity bound for the post-measurement classical-quantum state of a
/// BBP homodyne measurement with the given apparatus.
///
/// `distance_sq = 4 delta^2 (b2 <Omega> + b4 (<Omega> + omega_bar_sq))`.
pub fn measurement_fidelity_bound(
    delta: f64,
    apparatus: &ApparatusModel,
    moments: &StateMoments,
    ensemble: &ModeEnsemble,
) -> BoundReport {
    let (b2, b4, _) = apparatus.moments();
    let obs = ensemble.omega_bar_sq();
    let raw = measurement_distance_sq_general(delta, b2, b4, moments.omega_exp, obs);
    BoundReport::from_distance_sq(
        "measurement-general",
        raw,
        true,
        echo(&[
            ("delta", delta),
            ("b2", b2),
            ("b4", b4),
            ("omega_exp", moments.omega_exp),
            ("omega_bar_sq", obs),
        ]),
    )
}

/// Standard-pulsed-homodyne measurement fidelity bound.
///
/// `distance_sq = delta^2 (2 b2 <n_tot> + (1/9) delta^2 b6 <q^2> + (1/2) b4)`,
/// with `<q^2>` defaulting to `4 <n_tot> + 2` when absent.
pub fn measurement_fidelity_bound_sph(
    delta: f64,
    apparatus: &ApparatusModel,
    n_tot: f64,
    q_sq: Option<f64>,
) -> BoundReport {
    let (b2, b4, b6) = apparatus.moments();
    let (q2, fell_back) = match q_sq {
        Some(q) => (q, false),
        None => (4.0 * n_tot + 2.0, true),
    };
    let d2 = delta * delta;
    let raw = d2 * (2.0 * b2 * n_tot + (1.0 / 9.0) * d2 * b6 * q2 + 0.5 * b4);
    let report = BoundReport::from_distance_sq(
        "measurement-sph",
        raw,
        true,
        echo(&[
            ("delta", delta),
            ("b2", b2),
            ("b4", b4),
            ("b6", b6),
            ("n_tot", n_tot),
            ("q_sq", q2),
        ]),
    );
    if fell_back {
        report.with_note("q_sq defaulted to 4*n_tot+2")
    } else {
        report
    }
}
