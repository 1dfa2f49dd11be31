use num_complex::Complex64;

use crate::channel::Channel;
use crate::code::GkpCode;
use crate::linalg::{dagger, pinv_sqrt_psd, CMat};
use crate::SimError;

/// Entanglement fidelity of the logical channel `recovery . channel . encode`.
///
/// `F_e = (1/4) sum_k |tr M_k|^2` over the logical channel's Kraus
/// operators, evaluated through the equivalent basis form
/// `F_e = (1/4) sum_{i,j} <i| L(|i><j|) |j>` so that both channel
/// representations are supported. Recovery Kraus operators map the
/// oscillator space to the 2-dimensional logical space (shape `2 x dim`).
pub fn entanglement_fidelity(
    code: &GkpCode,
    channel: &Channel,
    recovery: &[CMat],
) -> Result<f64, SimError> {
    let dim = code.dim();
    if channel.dim() != dim {
        return Err(SimError::DimensionMismatch(format!(
            "channel dimension {} does not match code dimension {dim}",
            channel.dim()
        )));
    }
    for (l, r) in recovery.iter().enumerate() {
        if r.nrows() != 2 || r.ncols() != dim {
            return Err(SimError::DimensionMismatch(format!(
                "recovery Kraus {l} is {}x{}, expected 2x{dim}",
                r.nrows(),
                r.ncols()
            )));
        }
    }

    let kets = [&code.ket0, &code.ket1];
    let mut fe = Complex64::new(0.0, 0.0);
    for i in 0..2 {
        for j in 0..2 {
            // Encode |i><j|, pass through the noise, decode, take <i|..|j>.
            let encoded = crate::fock::outer(kets[i], kets[j]);
            let noisy = channel.apply(&encoded)?;
            let mut logical = CMat::zeros((2, 2));
            for r in recovery {
                logical = logical + r.dot(&noisy).dot(&dagger(r));
            }
            fe += logical[[i, j]];
        }
    }
    Ok(fe.re / 4.0)
}

/// Bare codeword-projection decoder: the single Kraus operator `V^dagger`
/// mapping the oscillator space onto the logical basis.
pub fn projector_recovery(code: &GkpCode) -> Vec<CMat> {
    vec![dagger(&code.encoder())]
}

/// Transpose-channel recovery for a Kraus noise channel: the standard
/// near-optimal construction `R_k = V^dagger N_k^dagger N(Pi)^(-1/2)` with
/// `N(Pi) = sum_k N_k Pi N_k^dagger`.
///
/// Used only for qualitative fidelity curves; an optimized recovery would
/// do better.
pub fn transpose_channel_recovery(
    code: &GkpCode,
    channel: &Channel,
) -> Result<Vec<CMat>, SimError> {
    let ops = channel.kraus_ops().ok_or_else(|| {
        SimError::InvalidParameter(
            "transpose-channel recovery needs the Kraus form of the noise".into(),
        )
    })?;
    let dim = code.dim();
    if channel.dim() != dim {
        return Err(SimError::DimensionMismatch(format!(
            "channel dimension {} does not match code dimension {dim}",
            channel.dim()
        )));
    }
    let pi = code.projector();
    let mut n_pi = CMat::zeros((dim, dim));
    for m in ops {
        n_pi = n_pi + m.dot(&pi).dot(&dagger(m));
    }
    let s = pinv_sqrt_psd(&n_pi, 1e-12)?;
    let vdag = dagger(&code.encoder());
    Ok(ops
        .iter()
        .map(|m| vdag.dot(&dagger(m)).dot(&s))
        .collect())
}
