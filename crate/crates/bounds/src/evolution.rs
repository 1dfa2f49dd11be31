use hcert_core::{echo, BoundReport, ModeEnsemble, StateMoments};

/// Distance bound between evolution under the finite-LO homodyne observable
/// and under the ideal quadrature, for evolution parameter `s`.
///
/// `distance_sq = min(2, 4 (delta s)^2 ((1 + s^2) <Omega> + s^2 omega_bar_sq))`.
/// This is the simplified form; [`evolution_distance_bound_tight`] keeps the
/// sharper constants it was rounded from.
pub fn evolution_distance_bound(
    delta: f64,
    s: f64,
    moments: &StateMoments,
    ensemble: &ModeEnsemble,
) -> BoundReport {
    let obs = ensemble.omega_bar_sq();
    let ds = delta * s;
    let raw = 4.0 * ds * ds * ((1.0 + s * s) * moments.omega_exp + s * s * obs);
    BoundReport::from_distance_sq(
        "evolution-general",
        raw,
        true,
        echo(&[
            ("delta", delta),
            ("s", s),
            ("omega_exp", moments.omega_exp),
            ("omega_bar_sq", obs),
        ]),
    )
}

/// Sharper-constant variant of [`evolution_distance_bound`]:
///
/// `distance_sq = min(2, (delta s)^2 (2 (1 + 2 s^2) <Omega> + (5/2) s^2 omega_bar_sq))`.
///
/// Never exceeds the simplified form; the `s^4` coefficient of `<Omega>` is
/// shared between the two.
pub fn evolution_distance_bound_tight(
    delta: f64,
    s: f64,
    moments: &StateMoments,
    ensemble: &ModeEnsemble,
) -> BoundReport {
    let obs = ensemble.omega_bar_sq();
    let ds = delta * s;
    let raw = ds * ds * (2.0 * (1.0 + 2.0 * s * s) * moments.omega_exp + 2.5 * s * s * obs);
    BoundReport::from_distance_sq(
        "evolution-general-tight",
        raw,
        true,
        echo(&[
            ("delta", delta),
            ("s", s),
            ("omega_exp", moments.omega_exp),
            ("omega_bar_sq", obs),
        ]),
    )
}

/// Refined small-`delta s` variant of [`evolution_distance_bound`].
///
/// Keeps the fourth-order cross terms instead of absorbing them into the
/// leading coefficients, at the cost of a degree-6 contribution in `s`:
///
/// `distance_sq = (delta s)^2 [ 2 (1 + (2/9) s^2 (delta s)^2 w2) <Omega>
///                + s^2 ((1/2) w2 + (2/9) (delta s)^2 w4) ]`,
///
/// with `w2 = omega_bar_sq` and `w4 = sum_k |alpha_k|^2 omega_k^4`
/// (computed from the ensemble when not supplied).
pub fn evolution_distance_bound_refined(
    delta: f64,
    s: f64,
    moments: &StateMoments,
    ensemble: &ModeEnsemble,
    omega_bar4: Option<f64>,
) -> BoundReport {
    let w2 = ensemble.omega_bar_sq();
    let w4 = omega_bar4.unwrap_or_else(|| ensemble.omega_bar_4());
    let ds2 = (delta * s) * (delta * s);
    let s2 = s * s;
    let raw = ds2
        * (2.0 * (1.0 + (2.0 / 9.0) * s2 * ds2 * w2) * moments.omega_exp
            + s2 * (0.5 * w2 + (2.0 / 9.0) * ds2 * w4));
    BoundReport::from_distance_sq(
        "evolution-refined",
        raw,
        true,
        echo(&[
            ("delta", delta),
            ("s", s),
            ("omega_exp", moments.omega_exp),
            ("omega_bar_sq", w2),
            ("omega_bar_4", w4),
        ]),
    )
}

/// Standard-pulsed-homodyne specialization (all detector weights equal 1).
///
/// `distance_sq = min(2, (delta s)^2 (2 <n_tot> + s^2 ((1/9) (delta s)^2 <q^2> + 1/2)))`,
/// with `<q^2>` defaulting to the conservative `4 <n_tot> + 2` when absent.
pub fn evolution_distance_bound_sph(
    delta: f64,
    s: f64,
    n_tot: f64,
    q_sq: Option<f64>,
) -> BoundReport {
    let (q2, fell_back) = match q_sq {
        Some(q) => (q, false),
        None => (4.0 * n_tot + 2.0, true),
    };
    let ds2 = (delta * s) * (delta * s);
    let raw = ds2 * (2.0 * n_tot + s * s * ((1.0 / 9.0) * ds2 * q2 + 0.5));
    let report = BoundReport::from_distance_sq(
        "evolution-sph",
        raw,
        true,
        echo(&[("delta", delta), ("s", s), ("n_tot", n_tot), ("q_sq", q2)]),
    );
    if fell_back {
        report.with_note("q_sq defaulted to 4*n_tot+2")
    } else {
        report
    }
}
