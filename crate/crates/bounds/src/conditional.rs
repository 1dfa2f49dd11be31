use hcert_core::{echo, BoundReport};

use crate::error::require_nonneg;
use crate::measurement::measurement_distance_sq_general;
use crate::types::{ApparatusTransition, ConditionalDisplacementSpec, TeleportChainMoments};
use crate::BoundsError;

/// Distance bound for conditioning a displacement on the finite-LO homodyne
/// observable instead of the ideal quadrature.
///
/// The caller evaluates the composite operator expectation
/// `composite_exp = <(1 + Q_B) Q_B P_B^2 (Omega + omega_bar_sq)>` for the
/// coefficient polynomials of `spec`; the bound is `4 delta^2 composite_exp`.
pub fn conditional_displacement_bound(
    delta: f64,
    spec: &ConditionalDisplacementSpec,
    composite_exp: f64,
) -> BoundReport {
    let raw = 4.0 * delta * delta * composite_exp;
    BoundReport::from_distance_sq(
        "conditional-displacement",
        raw,
        true,
        echo(&[
            ("delta", delta),
            ("xi", spec.xi),
            ("composite_exp", composite_exp),
        ]),
    )
}

/// Distance bound between conditioning on two different outcome functions
/// `u` and `v` of the same quadrature.
///
/// The supplied expectation `<p_B^2 (u(x) - v(x))^2>` is itself the bound.
pub fn regularization_gap_bound(p_sq_uv_sq_exp: f64) -> Result<f64, BoundsError> {
    require_nonneg("p_sq_uv_sq_exp", p_sq_uv_sq_exp)
}

/// Distance bound for conditioning displacements on a noisy apparatus
/// readout rather than on the measured observable itself.
///
/// `distance_sq = 2 K1^2 K2 <(n_tot + 1/2)^2>^(1/2)`.
pub fn apparatus_conditioning_bound(transition: &ApparatusTransition) -> BoundReport {
    let raw = 2.0 * transition.k1 * transition.k1 * transition.k2 * transition.n_half_sq;
    BoundReport::from_distance_sq(
        "apparatus-conditioning",
        raw,
        true,
        echo(&[
            ("k1", transition.k1),
            ("k2", transition.k2),
            ("n_half_sq", transition.n_half_sq),
        ]),
    )
}

/// General conditioning bound from second moments of the comparison
/// operators on the two subsystems.
///
/// `distance_sq = 2 sqrt(F_sq_exp) sqrt(Q_sq_exp)`; symmetric in its
/// arguments.
pub fn conditional_unitary_bound(
    f_sq_exp: f64,
    q_sq_exp: f64,
) -> Result<BoundReport, BoundsError> {
    require_nonneg("f_sq_exp", f_sq_exp)?;
    require_nonneg("q_sq_exp", q_sq_exp)?;
    let raw = 2.0 * f_sq_exp.sqrt() * q_sq_exp.sqrt();
    Ok(BoundReport::from_distance_sq(
        "conditional-unitary",
        raw,
        true,
        echo(&[("f_sq_exp", f_sq_exp), ("q_sq_exp", q_sq_exp)]),
    ))
}

/// Composite bound for CV teleportation with two homodyne measurements and
/// two conditional displacements at gain `xi`, photodiode added noise
/// `sigma` (electrons) and inverse LO scale `delta`.
///
/// Step distances:
/// - displacements conditioned on the finite-LO observable:
///   `d_B^2 = 16 delta^2 xi^2 m1`;
/// - conditioning on the noisy apparatus readout, both measurements:
///   `d_C^2 = 2 xi^2 delta^2 sigma^2 (m2a + m2b)`;
/// - the two measurement couplings, each bounded separately and chained:
///   `d_A = sqrt(d_A1^2) + sqrt(d_A2^2)` with
///   `d_Ai^2 = 4 delta^2 (b2 n_i + b4 (n_i + 1))`.
///
/// Distances add along the chain: `d = d_A + d_B + d_C`, and the report
/// carries `distance_sq = min(2, d^2)`.
pub fn teleportation_bound(
    delta: f64,
    xi: f64,
    sigma: f64,
    chain: &TeleportChainMoments,
) -> Result<BoundReport, BoundsError> {
    chain.validate()?;
    let d_b_sq = 16.0 * delta * delta * xi * xi * chain.m1;
    let d_c_sq = 2.0 * xi * xi * delta * delta * sigma * sigma * (chain.m2a + chain.m2b);
    let d_a1_sq =
        measurement_distance_sq_general(delta, chain.b2, chain.b4, chain.n_meas_a, 1.0);
    let d_a2_sq =
        measurement_distance_sq_general(delta, chain.b2, chain.b4, chain.n_meas_b, 1.0);
    let d_a = d_a1_sq.sqrt() + d_a2_sq.sqrt();
    let total = d_a + d_b_sq.sqrt() + d_c_sq.sqrt();
    Ok(BoundReport::from_distance_sq(
        "teleportation-chain",
        total * total,
        true,
        echo(&[
            ("delta", delta),
            ("xi", xi),
            ("sigma", sigma),
            ("d_a_sq", d_a * d_a),
            ("d_b_sq", d_b_sq),
            ("d_c_sq", d_c_sq),
        ]),
    ))
}
