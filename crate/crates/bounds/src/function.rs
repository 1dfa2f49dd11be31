use hcert_core::{echo, BoundReport, ModeEnsemble, StateMoments};

use crate::error::require_nonneg;
use crate::types::FunctionMeasureMoments;
use crate::BoundsError;

/// Distance bound for applying `f(q)` when `f` is the Fourier transform
/// of a bounded complex measure with absolute moments `fm`.
///
/// `distance_sq = 4 delta^2 (f0 + f2) f2 (<Omega> + omega_bar_sq)`.
pub fn function_distance_bound(
    delta: f64,
    fm: &FunctionMeasureMoments,
    moments: &StateMoments,
    ensemble: &ModeEnsemble,
) -> BoundReport {
    let obs = ensemble.omega_bar_sq();
    let raw =
        4.0 * delta * delta * (fm.f0 + fm.f2) * fm.f2 * (moments.omega_exp + obs);
    BoundReport::from_distance_sq(
        "function-general",
        raw,
        false,
        echo(&[
            ("delta", delta),
            ("f0", fm.f0),
            ("f2", fm.f2),
            ("omega_exp", moments.omega_exp),
            ("omega_bar_sq", obs),
        ]),
    )
}

/// Standard-pulsed-homodyne form of [`function_distance_bound`].
///
/// `distance_sq = delta^2 (f0 + f2) (2 min(f0, f2) <n_tot>
///                + (1/9) delta^2 f4 <q^2> + (1/2) f2)`.
///
/// The `min(f0, f2)` weight on the photon term comes from bounding the
/// kernel `k^2/(1+k^2)` by `min(1, k^2)` under the measure; it makes the
/// bound vanish for constant functions and keeps it valid for measures of
/// mass above 1. Requires the fourth absolute moment `f4`.
pub fn function_distance_bound_sph(
    delta: f64,
    fm: &FunctionMeasureMoments,
    n_tot: f64,
    q_sq: Option<f64>,
) -> Result<BoundReport, BoundsError> {
    let f4 = fm
        .f4
        .ok_or_else(|| BoundsError::MissingMoment("f4".to_string()))?;
    let (q2, fell_back) = match q_sq {
        Some(q) => (q, false),
        None => (4.0 * n_tot + 2.0, true),
    };
    let d2 = delta * delta;
    let raw = d2
        * (fm.f0 + fm.f2)
        * (2.0 * fm.f0.min(fm.f2) * n_tot + (1.0 / 9.0) * d2 * f4 * q2 + 0.5 * fm.f2);
    let report = BoundReport::from_distance_sq(
        "function-sph",
        raw,
        false,
        echo(&[
            ("delta", delta),
            ("f0", fm.f0),
            ("f2", fm.f2),
            ("f4", f4),
            ("n_tot", n_tot),
            ("q_sq", q2),
        ]),
    );
    Ok(if fell_back {
        report.with_note("q_sq defaulted to 4*n_tot+2")
    } else {
        report
    })
}

/// Both forms of the regularized function bound.
///
/// `tight` is the squared sum of the function-bound and regularization
/// contributions; `loose` expands the square with `(a+b)^2 <= 2(a^2+b^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularizedBound {
    pub tight: BoundReport,
    pub loose: BoundReport,
}

/// Distance bound for applying an unbounded function through a regularization
/// `f` with `|f0(x) - f(x)| <= h(x)` and `h_sq_exp = <h(q)^2>`.
pub fn regularized_function_bound(
    delta: f64,
    fm: &FunctionMeasureMoments,
    moments: &StateMoments,
    ensemble: &ModeEnsemble,
    h_sq_exp: f64,
) -> Result<RegularizedBound, BoundsError> {
    require_nonneg("h_sq_exp", h_sq_exp)?;
    let obs = ensemble.omega_bar_sq();
    let fun_sq =
        4.0 * delta * delta * (fm.f0 + fm.f2) * fm.f2 * (moments.omega_exp + obs);
    let tight_val = (fun_sq.sqrt() + h_sq_exp.sqrt()).powi(2);
    let loose_val = 2.0 * fun_sq + 2.0 * h_sq_exp;
    let inputs = echo(&[
        ("delta", delta),
        ("f0", fm.f0),
        ("f2", fm.f2),
        ("omega_exp", moments.omega_exp),
        ("omega_bar_sq", obs),
        ("h_sq_exp", h_sq_exp),
    ]);
    Ok(RegularizedBound {
        tight: BoundReport::from_distance_sq(
            "function-regularized-tight",
            tight_val,
            false,
            inputs.clone(),
        ),
        loose: BoundReport::from_distance_sq("function-regularized-loose", loose_val, false, inputs),
    })
}

/// Distance bound for a function of several parallel BBP homodyne
/// measurements that vanishes on the diagonal.
///
/// Per-measurement moments are combined in quadrature,
/// `f_tot_l = sqrt(sum_j f_{j,l}^2)`, and
/// `distance_sq = 4 delta^2 ((f_tot_1^2 + f_tot_2^2) <Omega_tot> + f_tot_2^2 w2_tot)`.
/// Requires the first absolute moment `f1` of every measurement; the caller
/// is responsible for the diagonal-vanishing assumption `f(x, x) = 0`.
pub fn multi_measurement_function_bound(
    delta: f64,
    per_measurement: &[FunctionMeasureMoments],
    omega_tot_exp: f64,
    omega_bar_sq_tot: f64,
) -> Result<BoundReport, BoundsError> {
    require_nonneg("omega_tot_exp", omega_tot_exp)?;
    require_nonneg("omega_bar_sq_tot", omega_bar_sq_tot)?;
    if per_measurement.is_empty() {
        return Err(BoundsError::MissingMoment(
            "per-measurement moments (empty list)".to_string(),
        ));
    }
    let mut f1_tot_sq = 0.0;
    let mut f2_tot_sq = 0.0;
    for (j, fm) in per_measurement.iter().enumerate() {
        let f1 = fm
            .f1
            .ok_or_else(|| BoundsError::MissingMoment(format!("f1 for measurement {j}")))?;
        f1_tot_sq += f1 * f1;
        f2_tot_sq += fm.f2 * fm.f2;
    }
    let raw = 4.0
        * delta
        * delta
        * ((f1_tot_sq + f2_tot_sq) * omega_tot_exp + f2_tot_sq * omega_bar_sq_tot);
    Ok(BoundReport::from_distance_sq(
        "multi-measurement",
        raw,
        false,
        echo(&[
            ("delta", delta),
            ("f1_tot_sq", f1_tot_sq),
            ("f2_tot_sq", f2_tot_sq),
            ("omega_tot_exp", omega_tot_exp),
            ("omega_bar_sq_tot", omega_bar_sq_tot),
        ]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hcert_core::ModeEnsemble;

    fn moments(omega_exp: f64) -> StateMoments {
        StateMoments::new(omega_exp, omega_exp).unwrap()
    }

    #[test]
    fn constant_function_commutes() {
        let fm = FunctionMeasureMoments::new(1.0, 0.0).unwrap();
        let r = function_distance_bound(1e-2, &fm, &moments(3.0), &ModeEnsemble::single_mode());
        assert_eq!(r.distance_sq, 0.0);
    }

    #[test]
    fn plane_wave_hand_value() {
        // f(x) = exp(i 2 x): f0 = 1, f2 = 4; delta = 1e-3, <Omega> = 3, w2 = 1:
        // 4e-6 * 5 * 4 * 4 = 3.2e-4.
        let fm = FunctionMeasureMoments::point_measure(2.0);
        let r = function_distance_bound(1e-3, &fm, &moments(3.0), &ModeEnsemble::single_mode());
        assert!((r.distance_sq - 3.2e-4).abs() < 1e-18);
    }

    #[test]
    fn point_measure_dominates_evolution_bound() {
        use crate::evolution::evolution_distance_bound;
        let ensemble = ModeEnsemble::single_mode();
        for i in 0..100 {
            let kappa0 = 0.05 + 0.05 * i as f64; // up to 5.0
            let delta = 0.2 / kappa0.max(1.0); // keeps delta*kappa0 <= 1
            let fm = FunctionMeasureMoments::point_measure(kappa0);
            let m = moments(2.0);
            let f = function_distance_bound(delta, &fm, &m, &ensemble);
            let e = evolution_distance_bound(delta, kappa0, &m, &ensemble);
            assert!(
                f.distance_sq + 1e-18 >= e.distance_sq,
                "function bound {} below evolution bound {} at kappa0={kappa0}",
                f.distance_sq,
                e.distance_sq
            );
        }
    }

    #[test]
    fn sph_requires_f4() {
        let fm = FunctionMeasureMoments::new(1.0, 4.0).unwrap();
        assert!(matches!(
            function_distance_bound_sph(1e-3, &fm, 5.0, None),
            Err(BoundsError::MissingMoment(_))
        ));
    }

    #[test]
    fn sph_point_measure_matches_evolution_sph() {
        use crate::evolution::evolution_distance_bound_sph;
        let kappa0: f64 = 20.0;
        let fm = FunctionMeasureMoments::point_measure(kappa0);
        let r = function_distance_bound_sph(1e-4, &fm, 5.0, Some(22.0)).unwrap();
        let e = evolution_distance_bound_sph(1e-4, kappa0, 5.0, Some(22.0));
        // For a point measure at kappa0 >= 1 the sph function bound equals
        // (1 + kappa0^2)/kappa0^2 times the evolution bound.
        let factor = (1.0 + kappa0 * kappa0) / (kappa0 * kappa0);
        assert!((r.distance_sq - factor * e.distance_sq).abs() <= 1e-12 * r.distance_sq);
        assert!(r.distance_sq >= e.distance_sq);
    }

    #[test]
    fn sph_zero_moments_vanish() {
        let fm = FunctionMeasureMoments::new(1.0, 0.0)
            .unwrap()
            .with_f4(0.0)
            .unwrap();
        let r = function_distance_bound_sph(1e-3, &fm, 5.0, None).unwrap();
        assert_eq!(r.distance_sq, 0.0);
        let general = function_distance_bound(
            1e-3,
            &fm,
            &moments(5.0),
            &ModeEnsemble::single_mode(),
        );
        assert_eq!(general.distance_sq, 0.0);
    }

    #[test]
    fn sph_below_general_at_reference_parameters() {
        // Point measure at |gamma| = 20 with delta = 1e-4, n = 5.
        let fm = FunctionMeasureMoments::point_measure(20.0);
        let sph = function_distance_bound_sph(1e-4, &fm, 5.0, None).unwrap();
        let general =
            function_distance_bound(1e-4, &fm, &moments(5.0), &ModeEnsemble::single_mode());
        assert!(sph.distance_sq < general.distance_sq);
    }

    #[test]
    fn regularized_reduces_and_orders() {
        let fm = FunctionMeasureMoments::new(1.0, 4.0).unwrap();
        let m = moments(3.0);
        let ensemble = ModeEnsemble::single_mode();

        // h = 0 reduces the tight form to the plain function bound.
        let rb = regularized_function_bound(1e-3, &fm, &m, &ensemble, 0.0).unwrap();
        let plain = function_distance_bound(1e-3, &fm, &m, &ensemble);
        assert!((rb.tight.distance_sq - plain.distance_sq).abs() < 1e-18);

        // delta = 0 leaves exactly the regularization gap.
        let rb = regularized_function_bound(0.0, &fm, &m, &ensemble, 0.37).unwrap();
        assert!((rb.tight.distance_sq - 0.37).abs() < 1e-15);

        // tight <= loose on a small random-ish grid.
        for i in 0..50 {
            let h = 0.01 * i as f64;
            let d = 1e-4 * (1 + i % 7) as f64;
            let rb = regularized_function_bound(d, &fm, &m, &ensemble, h).unwrap();
            assert!(rb.tight.distance_sq <= rb.loose.distance_sq + 1e-15);
        }
    }

    #[test]
    fn multi_measurement_cases() {
        // All moments zero: bound is zero.
        let z = FunctionMeasureMoments::new(0.0, 0.0)
            .unwrap()
            .with_f1(0.0)
            .unwrap();
        let r = multi_measurement_function_bound(1e-3, &[z], 4.0, 1.0).unwrap();
        assert_eq!(r.distance_sq, 0.0);

        // m = 1 never exceeds the single-measurement bound with same moments.
        let fm = FunctionMeasureMoments::new(1.3, 2.1)
            .unwrap()
            .with_f1(1.2)
            .unwrap();
        let multi = multi_measurement_function_bound(1e-3, std::slice::from_ref(&fm), 4.0, 1.0).unwrap();
        let single_val =
            4.0 * 1e-6 * (fm.f0 + fm.f2) * fm.f2 * (4.0 + 1.0);
        assert!(multi.distance_sq <= single_val + 1e-18);

        // Two identical measurements double the bound.
        let two =
            multi_measurement_function_bound(1e-3, &[fm.clone(), fm.clone()], 4.0, 1.0).unwrap();
        assert!((two.distance_sq - 2.0 * multi.distance_sq).abs() < 1e-15);

        // Missing f1 is an error.
        let no_f1 = FunctionMeasureMoments::new(1.0, 1.0).unwrap();
        assert!(matches!(
            multi_measurement_function_bound(1e-3, &[no_f1], 4.0, 1.0),
            Err(BoundsError::MissingMoment(_))
        ));
    }
}
