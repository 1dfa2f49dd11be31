use std::collections::BTreeMap;

use crate::error::{require_nonneg, BoundsError};

/// Absolute moments of the positive measure whose Fourier transform is the
/// function being applied to the measured quadrature.
///
/// `f0` is the total mass, `f1` and `f2` the first and second absolute
/// moments, `f4` the fourth. `f1` is only needed by the multi-measurement
/// bound and `f4` only by the standard-pulsed-homodyne form.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionMeasureMoments {
    pub f0: f64,
    pub f1: Option<f64>,
    pub f2: f64,
    pub f4: Option<f64>,
}

impl FunctionMeasureMoments {
    pub fn new(f0: f64, f2: f64) -> Result<Self, BoundsError> {
        require_nonneg("f0", f0)?;
        require_nonneg("f2", f2)?;
        Ok(Self {
            f0,
            f1: None,
            f2,
            f4: None,
        })
    }

    pub fn with_f1(mut self, f1: f64) -> Result<Self, BoundsError> {
        require_nonneg("f1", f1)?;
        // Cauchy-Schwarz for absolute moments of a positive measure.
        if f1 * f1 > self.f0 * self.f2 * (1.0 + 1e-12) + 1e-300 {
            return Err(BoundsError::NegativeInput {
                name: "f1 (violates f1^2 <= f0*f2)",
                value: f1,
            });
        }
        self.f1 = Some(f1);
        Ok(self)
    }

    pub fn with_f4(mut self, f4: f64) -> Result<Self, BoundsError> {
        require_nonneg("f4", f4)?;
        self.f4 = Some(f4);
        Ok(self)
    }

    /// Moments of the point measure at `kappa0`: the plane-wave case
    /// `f(x) = exp(i kappa0 x)`.
    pub fn point_measure(kappa0: f64) -> Self {
        Self {
            f0: 1.0,
            f1: Some(kappa0.abs()),
            f2: kappa0 * kappa0,
            f4: Some(kappa0.powi(4)),
        }
    }
}

/// Description of a conditional displacement `exp(i v(x) p_B)` with
/// `v(x) = xi x + w(x)`.
///
/// `w0, w1, w2` are the L1 norms of `w` and its first two derivatives;
/// `wt0, wt1, wt2` the weighted L1 norms of its Fourier transform
/// (`integral of |kappa|^l |w~(kappa)| d kappa`). The pure-linear case
/// (teleportation) has all six norms zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalDisplacementSpec {
    pub xi: f64,
    pub w0: f64,
    pub w1: f64,
    pub w2: f64,
    pub wt0: f64,
    pub wt1: f64,
    pub wt2: f64,
}

impl ConditionalDisplacementSpec {
    pub fn new(
        xi: f64,
        w_norms: [f64; 3],
        wt_norms: [f64; 3],
    ) -> Result<Self, BoundsError> {
        for (name, v) in [
            ("w0", w_norms[0]),
            ("w1", w_norms[1]),
            ("w2", w_norms[2]),
            ("wt0", wt_norms[0]),
            ("wt1", wt_norms[1]),
            ("wt2", wt_norms[2]),
        ] {
            require_nonneg(name, v)?;
        }
        Ok(Self {
            xi,
            w0: w_norms[0],
            w1: w_norms[1],
            w2: w_norms[2],
            wt0: wt_norms[0],
            wt1: wt_norms[1],
            wt2: wt_norms[2],
        })
    }

    /// Pure linear gain, `w = 0`: the teleportation specialization.
    pub fn linear(xi: f64) -> Self {
        Self {
            xi,
            w0: 0.0,
            w1: 0.0,
            w2: 0.0,
            wt0: 0.0,
            wt1: 0.0,
            wt2: 0.0,
        }
    }

    /// Coefficient polynomial `P(|p|) = (1/sqrt(pi)) (sqrt(w0 wt0) + |p| sqrt(w1 wt1)) + 1`.
    pub fn p_coeff(&self, p_abs: f64) -> f64 {
        let pi_inv_sqrt = 1.0 / std::f64::consts::PI.sqrt();
        pi_inv_sqrt * ((self.w0 * self.wt0).sqrt() + p_abs * (self.w1 * self.wt1).sqrt()) + 1.0
    }

    /// Coefficient polynomial `Q(|p|) = |p| (wt2 + |p| (wt1^2 + 2 xi^2))`.
    pub fn q_coeff(&self, p_abs: f64) -> f64 {
        p_abs * (self.wt2 + p_abs * (self.wt1 * self.wt1 + 2.0 * self.xi * self.xi))
    }
}

/// Inputs for the bound on conditioning displacements on a noisy apparatus
/// readout instead of the measured quadrature itself.
///
/// `k1` is the Lipschitz constant of the outcome-to-displacement map, `k2`
/// a uniform bound on the second moment of the readout transition density,
/// and `n_half_sq` the square root of `<(n_tot + 1/2)^2>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApparatusTransition {
    pub k1: f64,
    pub k2: f64,
    pub n_half_sq: f64,
}

impl ApparatusTransition {
    pub fn new(k1: f64, k2: f64, n_half_sq: f64) -> Result<Self, BoundsError> {
        require_nonneg("k1", k1)?;
        require_nonneg("k2", k2)?;
        require_nonneg("n_half_sq", n_half_sq)?;
        Ok(Self { k1, k2, n_half_sq })
    }
}

/// Scalar expectations consumed by the teleportation chain bound.
///
/// `m1` is the combined conditional-displacement expectation for both
/// quadrature corrections, `m2a`/`m2b` are `<(n_tot + 1/2)^2>^(1/2)` for the
/// two measured modes, `b2`/`b4` the apparatus moments, and
/// `n_meas_a`/`n_meas_b` the measured-mode photon expectations after the
/// unitary teleport.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TeleportChainMoments {
    pub m1: f64,
    pub m2a: f64,
    pub m2b: f64,
    pub b2: f64,
    pub b4: f64,
    pub n_meas_a: f64,
    pub n_meas_b: f64,
}

impl TeleportChainMoments {
    /// Read the chain entries from a labeled map, reporting which entry is
    /// missing when incomplete.
    pub fn from_map(map: &BTreeMap<String, f64>) -> Result<Self, BoundsError> {
        let get = |key: &str| -> Result<f64, BoundsError> {
            map.get(key)
                .copied()
                .ok_or_else(|| BoundsError::MissingMoment(key.to_string()))
        };
        let m = Self {
            m1: get("m1")?,
            m2a: get("m2a")?,
            m2b: get("m2b")?,
            b2: get("b2")?,
            b4: get("b4")?,
            n_meas_a: get("n_meas_a")?,
            n_meas_b: get("n_meas_b")?,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), BoundsError> {
        for (name, v) in [
            ("m1", self.m1),
            ("m2a", self.m2a),
            ("m2b", self.m2b),
            ("b2", self.b2),
            ("b4", self.b4),
            ("n_meas_a", self.n_meas_a),
            ("n_meas_b", self.n_meas_b),
        ] {
            require_nonneg(name, v)?;
        }
        Ok(())
    }
}
