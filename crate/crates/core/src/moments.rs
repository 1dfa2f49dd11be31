use std::collections::BTreeMap;

use crate::CoreError;

/// User-supplied scalar expectations of the input state.
///
/// The bounds consume expectations, never states: `omega_exp` is the weighted
/// photon expectation `<Omega> = sum_k omega_k^2 <n_k>`, `n_tot` the total
/// photon expectation, `q_sq` the optional expectation of the squared target
/// quadrature, `q_pow` optional upper bounds on even quadrature moments keyed
/// by degree, and `composite` named scalars for the correlated expectations
/// consumed by the multi-step (teleportation-style) bounds.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StateMoments {
    pub omega_exp: f64,
    pub n_tot: f64,
    pub q_sq: Option<f64>,
    pub q_pow: BTreeMap<u32, f64>,
    pub composite: BTreeMap<String, f64>,
}

impl StateMoments {
    /// Moments with `<Omega>` and `<n_tot>` only.
    pub fn new(omega_exp: f64, n_tot: f64) -> Result<Self, CoreError> {
        let m = Self {
            omega_exp,
            n_tot,
            q_sq: None,
            q_pow: BTreeMap::new(),
            composite: BTreeMap::new(),
        };
        m.validate()?;
        Ok(m)
    }

    pub fn with_q_sq(mut self, q_sq: f64) -> Result<Self, CoreError> {
        if q_sq < 0.0 {
            return Err(CoreError::NegativeInput(q_sq));
        }
        self.q_sq = Some(q_sq);
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), CoreError> {
        for (name, v) in [("omega_exp", self.omega_exp), ("n_tot", self.n_tot)] {
            if !v.is_finite() {
                return Err(CoreError::NonFinite(name.into()));
            }
            if v < 0.0 {
                return Err(CoreError::NegativeInput(v));
            }
        }
        if let Some(q) = self.q_sq {
            if q < 0.0 {
                return Err(CoreError::NegativeInput(q));
            }
        }
        // omega_k <= 1 implies <Omega> <= <n_tot>; allow a whisker of rounding.
        let tol = crate::INTERNAL_NORM_TOL;
        if self.omega_exp > self.n_tot * (1.0 + tol) + tol {
            return Err(CoreError::NormalizationError(format!(
                "<Omega> = {} exceeds <n_tot> = {}",
                self.omega_exp, self.n_tot
            )));
        }
        Ok(())
    }

    /// `<q^2>`, falling back to the conservative bound `4 <n_tot> + 2`.
    ///
    /// Returns the value and whether the fallback was used.
    pub fn q_sq_or_conservative(&self) -> (f64, bool) {
        match self.q_sq {
            Some(q) => (q, false),
            None => (4.0 * self.n_tot + 2.0, true),
        }
    }
}

/// Measurement-noise description of the apparatus.
///
/// Either Gaussian added noise at resolution `r` (standard deviation of the
/// noise added to the quadrature outcome), or explicitly supplied even moments
/// `b_{2l}` of the apparatus wavefunction's probability density.
#[derive(Debug, Clone, PartialEq)]
pub enum ApparatusModel {
    GaussianResolution { r: f64 },
    ExplicitMoments { b2: f64, b4: f64, b6: f64 },
}

impl ApparatusModel {
    pub fn gaussian(r: f64) -> Result<Self, CoreError> {
        if !(r > 0.0) {
            return Err(CoreError::NonPositiveResolution(r));
        }
        Ok(Self::GaussianResolution { r })
    }

    pub fn explicit(b2: f64, b4: f64, b6: f64) -> Result<Self, CoreError> {
        for v in [b2, b4, b6] {
            if !(v > 0.0) {
                return Err(CoreError::NegativeInput(v));
            }
        }
        Ok(Self::ExplicitMoments { b2, b4, b6 })
    }

    /// Even moments `(b2, b4, b6)` of `|g(s)|^2`.
    ///
    /// For Gaussian added noise at resolution `r`, `|g(s)|^2` is a Gaussian of
    /// variance `1/(2r)^2`, whose moments are `1/(2r)^2`, `3/(2r)^4` and
    /// `15/(2r)^6` exactly.
    pub fn moments(&self) -> (f64, f64, f64) {
        match *self {
            ApparatusModel::GaussianResolution { r } => {
                let v = 1.0 / (2.0 * r).powi(2);
                (v, 3.0 * v * v, 15.0 * v * v * v)
            }
            ApparatusModel::ExplicitMoments { b2, b4, b6 } => (b2, b4, b6),
        }
    }
}
