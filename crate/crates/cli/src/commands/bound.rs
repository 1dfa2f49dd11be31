//! The `bound` subcommand: evaluate one closed-form bound over parameter
//! grids, one CSV row per grid point with every input echoed.

use rayon::prelude::*;

use hcert_bounds::*;
use hcert_core::{ApparatusModel, BoundReport, ModeEnsemble, StateMoments};

use crate::config::{BoundConfig, GridDef};
use crate::output::{fmt_f64, Table};
use crate::{validation, CliError};

fn report_row(prefix: Vec<String>, report: &BoundReport) -> Vec<String> {
    let mut row = vec![report.equation_id.clone()];
    row.extend(prefix);
    row.push(fmt_f64(report.distance_sq));
    row.push(fmt_f64(report.fidelity_lb));
    row.push(report.notes.join("; "));
    row
}

fn cartesian(grids: &[GridDef]) -> Result<Vec<Vec<f64>>, CliError> {
    let expanded: Vec<Vec<f64>> = grids
        .iter()
        .map(|g| g.expand())
        .collect::<Result<_, _>>()?;
    let mut points: Vec<Vec<f64>> = vec![vec![]];
    for axis in &expanded {
        let mut next = Vec::with_capacity(points.len() * axis.len());
        for p in &points {
            for v in axis {
                let mut q = p.clone();
                q.push(*v);
                next.push(q);
            }
        }
        points = next;
    }
    Ok(points)
}

pub fn run(config: &BoundConfig, config_bytes: &[u8]) -> Result<Table, CliError> {
    match config {
        BoundConfig::Measure {
            delta,
            r,
            n_tot,
            omega_exp,
            ensemble,
        } => {
            let ensemble = match ensemble {
                Some(def) => def.build()?,
                None => ModeEnsemble::single_mode(),
            };
            let points = cartesian(&[delta.clone(), r.clone(), n_tot.clone()])?;
            let mut table = Table::new(
                "bound measure",
                config_bytes,
                ["equation_id", "delta", "r", "n_tot", "omega_exp", "omega_bar_sq", "distance_sq", "fidelity_lb", "notes"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            );
            let rows: Result<Vec<_>, CliError> = points
                .par_iter()
                .map(|p| {
                    let (d, rr, n) = (p[0], p[1], p[2]);
                    let apparatus = ApparatusModel::gaussian(rr).map_err(validation)?;
                    let oexp = omega_exp.unwrap_or(n);
                    let moments = StateMoments::new(oexp, n).map_err(validation)?;
                    let report = measurement_fidelity_bound(d, &apparatus, &moments, &ensemble);
                    Ok(report_row(
                        vec![
                            fmt_f64(d),
                            fmt_f64(rr),
                            fmt_f64(n),
                            fmt_f64(oexp),
                            fmt_f64(ensemble.omega_bar_sq()),
                        ],
                        &report,
                    ))
                })
                .collect();
            for row in rows? {
                table.push(row);
            }
            Ok(table)
        }
        BoundConfig::MeasureSph { delta, r, n_tot, q_sq } => {
            let points = cartesian(&[delta.clone(), r.clone(), n_tot.clone()])?;
            let mut table = Table::new(
                "bound measure-sph",
                config_bytes,
                ["equation_id", "delta", "r", "n_tot", "q_sq", "distance_sq", "fidelity_lb", "notes"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            );
            let rows: Result<Vec<_>, CliError> = points
                .par_iter()
                .map(|p| {
                    let (d, rr, n) = (p[0], p[1], p[2]);
                    let apparatus = ApparatusModel::gaussian(rr).map_err(validation)?;
                    let report = measurement_fidelity_bound_sph(d, &apparatus, n, *q_sq);
                    let q_used = q_sq.unwrap_or(4.0 * n + 2.0);
                    Ok(report_row(
                        vec![fmt_f64(d), fmt_f64(rr), fmt_f64(n), fmt_f64(q_used)],
                        &report,
                    ))
                })
                .collect();
            for row in rows? {
                table.push(row);
            }
            Ok(table)
        }
        BoundConfig::Charfn {
            delta,
            gamma_abs,
            n_tot,
            variant,
            q_sq,
        } => {
            let variant = match variant.as_str() {
                "general" => CharfnVariant::General,
                "sph" => CharfnVariant::Sph,
                other => {
                    return Err(CliError::Validation(format!(
                        "unknown charfn variant `{other}` (use general or sph)"
                    )))
                }
            };
            let points = cartesian(&[delta.clone(), gamma_abs.clone(), n_tot.clone()])?;
            let mut table = Table::new(
                "bound charfn",
                config_bytes,
                ["equation_id", "delta", "gamma_abs", "n_tot", "error_bound", "notes"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            );
            let id = match variant {
                CharfnVariant::General => "charfn-general",
                CharfnVariant::Sph => "charfn-sph",
            };
            for p in &points {
                let (d, g, n) = (p[0], p[1], p[2]);
                let v = charfn_error_bound(d, g, n, variant, *q_sq);
                table.push(vec![
                    id.to_string(),
                    fmt_f64(d),
                    fmt_f64(g),
                    fmt_f64(n),
                    fmt_f64(v),
                    String::new(),
                ]);
            }
            Ok(table)
        }
        BoundConfig::Moment { delta, k, n_tot, q_4k } => {
            let points = cartesian(&[delta.clone(), n_tot.clone(), q_4k.clone()])?;
            if k.is_empty() {
                return Err(CliError::Validation("empty degree list".into()));
            }
            let mut table = Table::new(
                "bound moment",
                config_bytes,
                ["equation_id", "delta", "k", "n_tot", "q_4k", "error_sq_bound", "lambda", "notes"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            );
            for p in &points {
                for &kk in k {
                    let (d, n, q) = (p[0], p[1], p[2]);
                    let (err, lambda) = moment_error_bound(d, kk, n, q).map_err(validation)?;
                    table.push(vec![
                        "moment-optimized".to_string(),
                        fmt_f64(d),
                        kk.to_string(),
                        fmt_f64(n),
                        fmt_f64(q),
                        fmt_f64(err),
                        fmt_f64(lambda),
                        if d == 0.0 { "lambda=0 (zero-delta limit)".into() } else { String::new() },
                    ]);
                }
            }
            Ok(table)
        }
        BoundConfig::Function {
            delta,
            f0,
            f1,
            f2,
            f4,
            n_tot,
            variant,
            h_sq_exp,
            ensemble,
        } => {
            let ensemble = match ensemble {
                Some(def) => def.build()?,
                None => ModeEnsemble::single_mode(),
            };
            let mut fm = FunctionMeasureMoments::new(*f0, *f2).map_err(validation)?;
            if let Some(f1) = f1 {
                fm = fm.with_f1(*f1).map_err(validation)?;
            }
            if let Some(f4) = f4 {
                fm = fm.with_f4(*f4).map_err(validation)?;
            }
            let points = cartesian(&[delta.clone(), n_tot.clone()])?;
            let mut table = Table::new(
                "bound function",
                config_bytes,
                ["equation_id", "delta", "f0", "f2", "n_tot", "distance_sq", "fidelity_lb", "notes"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            );
            for p in &points {
                let (d, n) = (p[0], p[1]);
                let moments = StateMoments::new(n, n).map_err(validation)?;
                let report = match (variant.as_str(), h_sq_exp) {
                    ("general", None) => function_distance_bound(d, &fm, &moments, &ensemble),
                    ("general", Some(h)) => {
                        regularized_function_bound(d, &fm, &moments, &ensemble, *h)
                            .map_err(validation)?
                            .tight
                    }
                    ("sph", None) => {
                        function_distance_bound_sph(d, &fm, n, None).map_err(validation)?
                    }
                    (other, _) => {
                        return Err(CliError::Validation(format!(
                            "unknown function variant `{other}`"
                        )))
                    }
                };
                table.push(report_row(
                    vec![fmt_f64(d), fmt_f64(*f0), fmt_f64(*f2), fmt_f64(n)],
                    &report,
                ));
            }
            Ok(table)
        }
        BoundConfig::Conddisp {
            delta,
            xi,
            w_norms,
            wt_norms,
            composite_exp,
        } => {
            let spec = match (w_norms, wt_norms) {
                (None, None) => ConditionalDisplacementSpec::linear(*xi),
                (Some(w), Some(wt)) => {
                    ConditionalDisplacementSpec::new(*xi, *w, *wt).map_err(validation)?
                }
                _ => {
                    return Err(CliError::Validation(
                        "supply both w_norms and wt_norms, or neither".into(),
                    ))
                }
            };
            let points = cartesian(&[delta.clone(), composite_exp.clone()])?;
            let mut table = Table::new(
                "bound conddisp",
                config_bytes,
                ["equation_id", "delta", "xi", "composite_exp", "distance_sq", "fidelity_lb", "notes"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            );
            for p in &points {
                let (d, c) = (p[0], p[1]);
                let report = conditional_displacement_bound(d, &spec, c);
                table.push(report_row(
                    vec![fmt_f64(d), fmt_f64(*xi), fmt_f64(c)],
                    &report,
                ));
            }
            Ok(table)
        }
        BoundConfig::Teleport { delta, xi, sigma, chain } => {
            let chain = TeleportChainMoments::from_map(chain).map_err(validation)?;
            let points = cartesian(std::slice::from_ref(delta))?;
            let mut table = Table::new(
                "bound teleport",
                config_bytes,
                ["equation_id", "delta", "xi", "sigma", "distance_sq", "fidelity_lb", "notes"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            );
            for p in &points {
                let d = p[0];
                let report = teleportation_bound(d, *xi, *sigma, &chain).map_err(validation)?;
                table.push(report_row(
                    vec![fmt_f64(d), fmt_f64(*xi), fmt_f64(*sigma)],
                    &report,
                ));
            }
            Ok(table)
        }
        BoundConfig::Multi {
            delta,
            measurements,
            omega_tot_exp,
            omega_bar_sq_tot,
        } => {
            let fms: Vec<_> = measurements
                .iter()
                .map(|m| m.build())
                .collect::<Result<_, _>>()?;
            let points = cartesian(std::slice::from_ref(delta))?;
            let mut table = Table::new(
                "bound multi",
                config_bytes,
                ["equation_id", "delta", "measurements", "omega_tot_exp", "omega_bar_sq_tot", "distance_sq", "fidelity_lb", "notes"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            );
            for p in &points {
                let d = p[0];
                let report =
                    multi_measurement_function_bound(d, &fms, *omega_tot_exp, *omega_bar_sq_tot)
                        .map_err(validation)?;
                table.push(report_row(
                    vec![
                        fmt_f64(d),
                        fms.len().to_string(),
                        fmt_f64(*omega_tot_exp),
                        fmt_f64(*omega_bar_sq_tot),
                    ],
                    &report,
                ));
            }
            Ok(table)
        }
    }
}
