//! JSON-compatible run configurations. Every command block mirrors the
//! inputs of the operation it drives; grids of values are written either as
//! explicit lists or as linspace/logspace specs.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::{validation, CliError};

/// A sweepable scalar: a single value, an explicit list, or a generated
/// linearly or logarithmically spaced grid (inclusive endpoints).
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum GridDef {
    Single(f64),
    Values { values: Vec<f64> },
    Linspace { linspace: (f64, f64, usize) },
    Logspace { logspace: (f64, f64, usize) },
}

impl GridDef {
    pub fn expand(&self) -> Result<Vec<f64>, CliError> {
        let out = match self {
            GridDef::Single(v) => vec![*v],
            GridDef::Values { values } => values.clone(),
            GridDef::Linspace { linspace: (lo, hi, n) } => {
                if *n == 0 {
                    return Err(CliError::Validation("empty grid (linspace n = 0)".into()));
                }
                if *n == 1 {
                    vec![*lo]
                } else {
                    (0..*n)
                        .map(|i| lo + (hi - lo) * i as f64 / (*n as f64 - 1.0))
                        .collect()
                }
            }
            GridDef::Logspace { logspace: (lo, hi, n) } => {
                if *n == 0 {
                    return Err(CliError::Validation("empty grid (logspace n = 0)".into()));
                }
                if *lo <= 0.0 || *hi <= 0.0 {
                    return Err(CliError::Validation(
                        "logspace endpoints must be positive".into(),
                    ));
                }
                let (llo, lhi) = (lo.log10(), hi.log10());
                if *n == 1 {
                    vec![*lo]
                } else {
                    (0..*n)
                        .map(|i| 10f64.powf(llo + (lhi - llo) * i as f64 / (*n as f64 - 1.0)))
                        .collect()
                }
            }
        };
        if out.is_empty() {
            return Err(CliError::Validation("empty grid".into()));
        }
        Ok(out)
    }
}

/// Explicit mode ensemble: complex quadrature coefficients as `[re, im]`
/// pairs and real detector weights.
#[derive(Debug, Clone, Deserialize)]
pub struct EnsembleDef {
    pub alphas: Vec<(f64, f64)>,
    pub omegas: Vec<f64>,
}

impl EnsembleDef {
    pub fn build(&self) -> Result<hcert_core::ModeEnsemble, CliError> {
        let alphas = self
            .alphas
            .iter()
            .map(|(re, im)| num_complex::Complex64::new(*re, *im))
            .collect();
        hcert_core::validate_ensemble(alphas, self.omegas.clone()).map_err(validation)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum BoundConfig {
    Measure {
        delta: GridDef,
        r: GridDef,
        n_tot: GridDef,
        #[serde(default)]
        omega_exp: Option<f64>,
        #[serde(default)]
        ensemble: Option<EnsembleDef>,
    },
    MeasureSph {
        delta: GridDef,
        r: GridDef,
        n_tot: GridDef,
        #[serde(default)]
        q_sq: Option<f64>,
    },
    Charfn {
        delta: GridDef,
        gamma_abs: GridDef,
        n_tot: GridDef,
        variant: String,
        #[serde(default)]
        q_sq: Option<f64>,
    },
    Moment {
        delta: GridDef,
        k: Vec<u32>,
        n_tot: GridDef,
        q_4k: GridDef,
    },
    Function {
        delta: GridDef,
        f0: f64,
        #[serde(default)]
        f1: Option<f64>,
        f2: f64,
        #[serde(default)]
        f4: Option<f64>,
        n_tot: GridDef,
        variant: String,
        #[serde(default)]
        h_sq_exp: Option<f64>,
        #[serde(default)]
        ensemble: Option<EnsembleDef>,
    },
    Conddisp {
        delta: GridDef,
        xi: f64,
        #[serde(default)]
        w_norms: Option<[f64; 3]>,
        #[serde(default)]
        wt_norms: Option<[f64; 3]>,
        composite_exp: GridDef,
    },
    Teleport {
        delta: GridDef,
        xi: f64,
        sigma: f64,
        chain: BTreeMap<String, f64>,
    },
    Multi {
        delta: GridDef,
        measurements: Vec<FunctionMomentsDef>,
        omega_tot_exp: f64,
        omega_bar_sq_tot: f64,
    },
}

#[derive(Debug, Clone, Deserialize)]
pub struct FunctionMomentsDef {
    pub f0: f64,
    #[serde(default)]
    pub f1: Option<f64>,
    pub f2: f64,
    #[serde(default)]
    pub f4: Option<f64>,
}

impl FunctionMomentsDef {
    pub fn build(&self) -> Result<hcert_bounds::FunctionMeasureMoments, CliError> {
        let mut fm = hcert_bounds::FunctionMeasureMoments::new(self.f0, self.f2)
            .map_err(validation)?;
        if let Some(f1) = self.f1 {
            fm = fm.with_f1(f1).map_err(validation)?;
        }
        if let Some(f4) = self.f4 {
            fm = fm.with_f4(f4).map_err(validation)?;
        }
        Ok(fm)
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct GkpPlanConfig {
    pub rows: Vec<GkpPlanRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GkpPlanRow {
    pub n_bar: f64,
    pub sigma_noise: f64,
    pub sigma_0: f64,
    pub eps_ec: f64,
    pub eps_m: f64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GkpFidelityConfig {
    pub codes: Vec<CodeDef>,
    pub sigma_noise_sq: GridDef,
    pub mode: String,
    #[serde(default)]
    pub max_cutoff: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CodeDef {
    #[serde(default)]
    pub n_bar: Option<f64>,
    #[serde(default)]
    pub delta_env: Option<f64>,
    /// Only square GKP codes are supported; requesting `"kind": "triv"`
    /// (the bare two-level oscillator code) is refused since its reference
    /// curves require an optimized recovery that is out of scope here.
    #[serde(default)]
    pub kind: Option<String>,
}

impl CodeDef {
    pub fn delta_env(&self) -> Result<f64, CliError> {
        if let Some(kind) = &self.kind {
            if kind != "gkp" {
                return Err(CliError::Validation(format!(
                    "code kind `{kind}` is out of scope: only square GKP codes are supported \
                     (the trivial-code reference curves use an optimized recovery)"
                )));
            }
        }
        match (self.n_bar, self.delta_env) {
            (Some(n), None) => {
                if n <= 0.0 {
                    return Err(CliError::Validation(format!("n_bar must be positive, got {n}")));
                }
                Ok(hcert_gkp_sim::params::delta_from_n_bar(n))
            }
            (None, Some(d)) => {
                if d <= 0.0 {
                    return Err(CliError::Validation(format!(
                        "delta_env must be positive, got {d}"
                    )));
                }
                Ok(d)
            }
            _ => Err(CliError::Validation(
                "specify exactly one of n_bar or delta_env per code".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Deserialize, Default)]
pub struct WitnessConfig {
    #[serde(default)]
    pub deltas: Option<GridDef>,
    #[serde(default)]
    pub ss: Option<GridDef>,
    #[serde(default)]
    pub gammas: Option<Vec<f64>>,
    #[serde(default)]
    pub ensembles: Option<Vec<EnsembleDef>>,
    /// Extra randomized scan points drawn with the run seed.
    #[serde(default)]
    pub random_points: Option<usize>,
}

pub fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| {
        CliError::Validation(format!(
            "config parse error at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}
