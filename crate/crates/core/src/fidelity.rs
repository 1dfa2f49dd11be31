use crate::CoreError;

/// Fidelity lower bound implied by a squared-distance bound.
///
/// If `| |phi_1> - |phi_2> |^2 <= eps` then `F >= 1 - eps`; fidelity is
/// clamped at zero since the implication carries no information once
/// `eps > 1`.
pub fn fidelity_from_distance_sq(eps: f64) -> Result<f64, CoreError> {
    if !eps.is_finite() {
        return Err(CoreError::NonFinite("eps".into()));
    }
    if eps < 0.0 {
        return Err(CoreError::NegativeInput(eps));
    }
    Ok((1.0 - eps).max(0.0))
}

/// Fidelity lower bound from the real part of an overlap.
///
/// `F = |<phi_1|phi_2>|^2 >= Re(<phi_1|phi_2>)^2`, so the square of the given
/// real part is a valid lower bound. For `re_overlap = 1 - eps` this chains to
/// `(1 - eps)^2 >= 1 - 2 eps`.
pub fn fidelity_from_overlap(re_overlap: f64) -> Result<f64, CoreError> {
    if !re_overlap.is_finite() {
        return Err(CoreError::NonFinite("re_overlap".into()));
    }
    if !(-1.0..=1.0).contains(&re_overlap) {
        return Err(CoreError::RangeError {
            value: re_overlap,
            lo: -1.0,
            hi: 1.0,
        });
    }
    Ok(re_overlap * re_overlap)
}
