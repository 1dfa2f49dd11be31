use num_complex::Complex64;

use crate::fock::{coherent_vec, outer};
use crate::linalg::{CMat, CVec};
use crate::params;
use crate::SimError;

/// Finite-energy square-lattice GKP code in a truncated Fock basis.
#[derive(Debug, Clone)]
pub struct GkpCode {
    pub delta_env: f64,
    pub n_bar: f64,
    pub sigma_gkp_sq: f64,
    pub squeezing_db: f64,
    pub cutoff: usize,
    pub ket0: CVec,
    pub ket1: CVec,
}

impl GkpCode {
    pub fn dim(&self) -> usize {
        self.cutoff + 1
    }

    /// Codespace projector `|0_L><0_L| + |1_L><1_L|`.
    pub fn projector(&self) -> CMat {
        outer(&self.ket0, &self.ket0) + outer(&self.ket1, &self.ket1)
    }

    /// Encoding isometry as a `dim x 2` matrix with the codewords as columns.
    pub fn encoder(&self) -> CMat {
        let dim = self.dim();
        let mut v = CMat::zeros((dim, 2));
        for i in 0..dim {
            v[[i, 0]] = self.ket0[i];
            v[[i, 1]] = self.ket1[i];
        }
        v
    }

    /// Encode a 2x2 logical operator into the oscillator space.
    pub fn encode(&self, logical: &CMat) -> CMat {
        let dim = self.dim();
        let mut out = CMat::zeros((dim, dim));
        for (li, ket_i) in [&self.ket0, &self.ket1].into_iter().enumerate() {
            for (lj, ket_j) in [&self.ket0, &self.ket1].into_iter().enumerate() {
                let c = logical[[li, lj]];
                if c != Complex64::new(0.0, 0.0) {
                    for i in 0..dim {
                        for j in 0..dim {
                            out[[i, j]] += c * ket_i[i] * ket_j[j].conj();
                        }
                    }
                }
            }
        }
        out
    }
}

/// Relative envelope weight below which lattice peaks are dropped.
const PEAK_TRUNCATION: f64 = 1e-12;

/// Fraction of norm allowed in the top five Fock levels before the cutoff
/// is deemed too small.
const TOP_POPULATION_TOL: f64 = 1e-8;

// Unnormalized damped codeword for logical `s`. The ideal codeword is the
// stabilizer-group average of a position-displaced vacuum, which expands as
// coherent peaks on the full 2D lattice ((2j + s) sqrt(pi), 2 sqrt(pi) k)
// in the canonical (x, p) plane with sign (-1)^(s k); on this lattice all
// displacement cross-phases cancel. The envelope exp(-Delta^2 n) then maps
// each coherent peak |b> to
// exp(-|b|^2 (1 - exp(-2 Delta^2)) / 2) |b exp(-Delta^2)>.
fn raw_codeword(delta_env: f64, s: u8, dim: usize) -> CVec {
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let root2 = 2f64.sqrt();
    let damp = (-delta_env * delta_env).exp();
    let weight_rate = (1.0 - damp * damp) / 2.0;

    // beta_{jk} = (x + i p) / sqrt(2) with x = (2j + s) sqrt(pi),
    // p = 2 sqrt(pi) k.
    let beta_at = |j: i64, k: i64| {
        Complex64::new(
            ((2 * j + s as i64) as f64) * sqrt_pi / root2,
            (2 * k) as f64 * sqrt_pi / root2,
        )
    };
    let w_at = |j: i64, k: i64| (-beta_at(j, k).norm_sqr() * weight_rate).exp();
    let w_max = w_at(0, 0).max(w_at(-1, 0));

    let mut ket = CVec::zeros(dim);
    let mut add_peak = |j: i64, k: i64, w: f64| {
        let sign = if s == 1 && k.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
        let peak = coherent_vec(dim, beta_at(j, k) * damp);
        ket.zip_mut_with(&peak, |acc, p| *acc += sign * w * p);
    };

    let mut j = 0i64;
    loop {
        let mut any_j = false;
        for jj in [j, -1 - j] {
            if w_at(jj, 0) < PEAK_TRUNCATION * w_max {
                continue;
            }
            any_j = true;
            let mut k = 0i64;
            loop {
                let w = w_at(jj, k);
                if w < PEAK_TRUNCATION * w_max {
                    break;
                }
                add_peak(jj, k, w);
                if k > 0 {
                    add_peak(jj, -k, w_at(jj, -k));
                }
                k += 1;
            }
        }
        if !any_j {
            break;
        }
        j += 1;
    }
    ket
}

fn normalize(v: &mut CVec) {
    let n: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.mapv_inplace(|z| z / n);
}

/// Build the code at an explicit occupation cutoff.
///
/// The second codeword is orthogonalized against the first and
/// renormalized. Errors with `CutoffTooSmall` when more than `1e-8` of
/// either codeword's population sits in the top five Fock levels.
pub fn build_gkp_code(delta_env: f64, cutoff: usize) -> Result<GkpCode, SimError> {
    if !(delta_env > 0.0) {
        return Err(SimError::InvalidParameter(format!(
            "envelope damping must be positive, got {delta_env}"
        )));
    }
    if cutoff < 10 {
        return Err(SimError::CutoffTooSmall {
            cutoff,
            detail: "need at least 10 levels".into(),
        });
    }
    let dim = cutoff + 1;
    let mut ket0 = raw_codeword(delta_env, 0, dim);
    let mut ket1 = raw_codeword(delta_env, 1, dim);
    normalize(&mut ket0);
    normalize(&mut ket1);

    for (label, ket) in [("0", &ket0), ("1", &ket1)] {
        let top: f64 = ket.iter().skip(dim - 5).map(|z| z.norm_sqr()).sum();
        if top > TOP_POPULATION_TOL {
            return Err(SimError::CutoffTooSmall {
                cutoff,
                detail: format!("codeword {label} has population {top:.3e} in the top 5 levels"),
            });
        }
    }

    // Remove the overlapping component and renormalize.
    let overlap: Complex64 = ket0.iter().zip(ket1.iter()).map(|(a, b)| a.conj() * b).sum();
    let corrected = &ket1 - &ket0.mapv(|z| z * overlap);
    ket1 = corrected;
    normalize(&mut ket1);

    Ok(GkpCode {
        delta_env,
        n_bar: params::n_bar_from_delta(delta_env),
        sigma_gkp_sq: params::sigma_gkp_sq_from_delta(delta_env),
        squeezing_db: params::squeezing_db_from_sigma_sq(params::sigma_gkp_sq_from_delta(
            delta_env,
        )),
        cutoff,
        ket0,
        ket1,
    })
}

// Codespace fidelity tr(P1 P2) / 2 between rank-2 projectors given by their
// orthonormal codeword pairs, with the smaller space zero-padded.
fn projector_fidelity(small: &GkpCode, big: &GkpCode) -> f64 {
    let mut f = 0.0;
    for u in [&small.ket0, &small.ket1] {
        for v in [&big.ket0, &big.ket1] {
            let ip: Complex64 = u
                .iter()
                .zip(v.iter())
                .map(|(a, b)| a.conj() * b)
                .sum();
            f += ip.norm_sqr();
        }
    }
    f / 2.0
}

/// Infidelity tolerance for the adaptive-cutoff rule.
pub const ADAPTIVE_PROJECTOR_TOL: f64 = 1e-6;

/// Default reference ceiling for the adaptive-cutoff rule.
pub const DEFAULT_MAX_CUTOFF: usize = 200;

/// Build the code at the smallest cutoff whose codespace projector is within
/// `1e-6` infidelity of the projector at the reference cutoff `max_cutoff`.
pub fn build_gkp_code_adaptive(
    delta_env: f64,
    max_cutoff: usize,
) -> Result<GkpCode, SimError> {
    let reference = build_gkp_code(delta_env, max_cutoff)?;
    let good = |c: &GkpCode| 1.0 - projector_fidelity(c, &reference) < ADAPTIVE_PROJECTOR_TOL;

    // Coarse upward scan, then refine downward.
    let mut coarse = None;
    let mut cutoff = 10;
    while cutoff < max_cutoff {
        if let Ok(code) = build_gkp_code(delta_env, cutoff) {
            if good(&code) {
                coarse = Some((cutoff, code));
                break;
            }
        }
        cutoff += 10;
    }
    let (coarse_cutoff, mut best) = match coarse {
        Some(x) => x,
        None => (max_cutoff, reference.clone()),
    };
    for c in (coarse_cutoff.saturating_sub(9)..coarse_cutoff).rev() {
        match build_gkp_code(delta_env, c) {
            Ok(code) if good(&code) => best = code,
            _ => break,
        }
    }
    Ok(best)
}
