//! The `witness` subcommand: scan the exact coherent-state distance against
//! the evolution bounds over a grid and report any domination violation.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use hcert_bounds::{evolution_distance_bound, evolution_distance_bound_refined};
use hcert_core::{ModeEnsemble, StateMoments};
use hcert_witness::{coherent_exact_distance_sq, CoherentWitnessInput, WitnessError};

use crate::config::{GridDef, WitnessConfig};
use crate::output::{fmt_f64, Table};
use crate::{validation, CliError};

pub struct WitnessOutcome {
    pub table: Table,
    pub violations: usize,
}

struct Point {
    ensemble_id: usize,
    delta: f64,
    s: f64,
    gamma: f64,
}

fn default_deltas() -> GridDef {
    GridDef::Logspace {
        logspace: (1e-4, 0.3, 12),
    }
}

fn default_ss() -> GridDef {
    GridDef::Linspace {
        linspace: (-5.0, 5.0, 21),
    }
}

pub fn run(
    config: &WitnessConfig,
    config_bytes: &[u8],
    seed: u64,
) -> Result<WitnessOutcome, CliError> {
    let deltas = config
        .deltas
        .clone()
        .unwrap_or_else(default_deltas)
        .expand()?;
    let ss = config.ss.clone().unwrap_or_else(default_ss).expand()?;
    let gammas = config
        .gammas
        .clone()
        .unwrap_or_else(|| vec![-3.0, 0.0, 3.0]);
    if gammas.is_empty() {
        return Err(CliError::Validation("empty gamma list".into()));
    }
    let ensembles: Vec<ModeEnsemble> = match &config.ensembles {
        Some(defs) => defs
            .iter()
            .map(|d| d.build())
            .collect::<Result<_, _>>()?,
        None => vec![
            ModeEnsemble::single_mode(),
            hcert_core::validate_ensemble(
                vec![Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0)],
                vec![1.0, 0.5],
            )
            .map_err(validation)?,
        ],
    };

    let mut points = Vec::new();
    for (ensemble_id, _) in ensembles.iter().enumerate() {
        for &delta in &deltas {
            for &s in &ss {
                for &gamma in &gammas {
                    points.push(Point {
                        ensemble_id,
                        delta,
                        s,
                        gamma,
                    });
                }
            }
        }
    }
    if let Some(n) = config.random_points {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..n {
            points.push(Point {
                ensemble_id: rng.gen_range(0..ensembles.len()),
                delta: 10f64.powf(rng.gen_range(-4.0..-0.52)),
                s: rng.gen_range(-5.0..5.0),
                gamma: rng.gen_range(-3.0..3.0),
            });
        }
    }

    let mut table = Table::new(
        "witness",
        config_bytes,
        [
            "ensemble_id",
            "delta",
            "s",
            "gamma",
            "exact_distance_sq",
            "general_bound",
            "refined_bound",
            "dominated_general",
            "dominated_refined",
            "notes",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    );

    let results: Vec<Result<(Vec<String>, bool), CliError>> = points
        .par_iter()
        .map(|pt| {
            let ensemble = &ensembles[pt.ensemble_id];
            let gvec = vec![pt.gamma; ensemble.len()];
            let input =
                CoherentWitnessInput::new(pt.delta, pt.s, ensemble.clone(), gvec)
                    .map_err(validation)?;
            let exact = match coherent_exact_distance_sq(&input) {
                Ok(v) => v,
                Err(WitnessError::ZeroDelta(_)) => {
                    return Ok((
                        vec![
                            pt.ensemble_id.to_string(),
                            fmt_f64(pt.delta),
                            fmt_f64(pt.s),
                            fmt_f64(pt.gamma),
                            String::new(),
                            String::new(),
                            String::new(),
                            String::new(),
                            String::new(),
                            "skipped: zero delta".to_string(),
                        ],
                        false,
                    ));
                }
                Err(e) => return Err(validation(e)),
            };
            let moments =
                StateMoments::new(input.omega_exp(), input.n_tot()).map_err(validation)?;
            let general = evolution_distance_bound(pt.delta, pt.s, &moments, ensemble);
            let ok_general = exact <= general.distance_sq + 1e-12;
            let in_regime = ensemble
                .omegas()
                .iter()
                .all(|w| (w * pt.delta * pt.s).abs() <= std::f64::consts::PI / 4.0);
            let (refined_cell, refined_flag_cell, ok_refined) = if in_regime {
                let refined =
                    evolution_distance_bound_refined(pt.delta, pt.s, &moments, ensemble, None);
                let ok = exact <= refined.distance_sq + 1e-12;
                (fmt_f64(refined.distance_sq), (ok as u8).to_string(), ok)
            } else {
                (String::new(), String::new(), true)
            };
            let violated = !ok_general || !ok_refined;
            Ok((
                vec![
                    pt.ensemble_id.to_string(),
                    fmt_f64(pt.delta),
                    fmt_f64(pt.s),
                    fmt_f64(pt.gamma),
                    fmt_f64(exact),
                    fmt_f64(general.distance_sq),
                    refined_cell,
                    (ok_general as u8).to_string(),
                    refined_flag_cell,
                    if violated { "violation".to_string() } else { String::new() },
                ],
                violated,
            ))
        })
        .collect();

    let mut violations = 0usize;
    for r in results {
        let (row, violated) = r?;
        if violated {
            violations += 1;
        }
        table.push(row);
    }
    Ok(WitnessOutcome { table, violations })
}
