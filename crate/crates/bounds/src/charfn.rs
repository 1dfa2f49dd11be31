/// Which bound family to use for the characteristic-function error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharfnVariant {
    /// General BBP homodyne form.
    General,
    /// Standard pulsed homodyne form (unit detector weights).
    Sph,
}

/// Error bound for estimating the characteristic function of the Wigner
/// distribution at a point of magnitude `gamma_abs` from homodyne averages.
///
/// General: `4 delta^2 g^2 ((1 + g^2) <n_tot> + g^2)` with `g = |gamma|`.
/// Sph: `delta^2 g^2 ((2 + (4/9) delta^2 g^4) <n_tot> + (2/9) delta^2 g^4 + g^2/2)`,
/// which is the general `<q^2> <= 4 <n_tot> + 2` substitution; passing `q_sq`
/// keeps the quadrature moment explicit instead.
pub fn charfn_error_bound(
    delta: f64,
    gamma_abs: f64,
    n_tot: f64,
    variant: CharfnVariant,
    q_sq: Option<f64>,
) -> f64 {
    let g = gamma_abs.abs();
    let g2 = g * g;
    let d2 = delta * delta;
    match variant {
        CharfnVariant::General => 4.0 * d2 * g2 * ((1.0 + g2) * n_tot + g2),
        CharfnVariant::Sph => match q_sq {
            None => {
                d2 * g2
                    * ((2.0 + (4.0 / 9.0) * d2 * g2 * g2) * n_tot
                        + (2.0 / 9.0) * d2 * g2 * g2
                        + 0.5 * g2)
            }
            Some(q2) => d2 * g2 * (2.0 * n_tot + g2 * ((1.0 / 9.0) * d2 * g2 * q2 + 0.5)),
        },
    }
}
