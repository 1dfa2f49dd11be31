//! The `gkp plan` subcommand: the full budget table with the analytic
//! fidelity feasibility check per row.

use hcert_gkp_planner::{plan, GkpBudgetInput, PlannerError};
use hcert_gkp_sim::{analytic_entanglement_fidelity, params};

use crate::config::GkpPlanConfig;
use crate::output::{fmt_f64, Table};
use crate::{numeric, validation, CliError};

/// Photodiode added-noise reference points, in electrons.
pub const LOW_DETECTOR_NOISE: f64 = 730.0;
pub const HIGH_DETECTOR_NOISE: f64 = 8250.0;

pub fn run(config: &GkpPlanConfig, config_bytes: &[u8]) -> Result<Table, CliError> {
    if config.rows.is_empty() {
        return Err(CliError::Validation("no budget rows given".into()));
    }
    let mut table = Table::new(
        "gkp plan",
        config_bytes,
        [
            "n_bar",
            "squeezing_db",
            "sigma_noise",
            "sigma_0",
            "eps_ec",
            "eps_m",
            "r",
            "n_lo",
            "sigma_e",
            "n_lo_at_730",
            "n_lo_at_8250",
            "analytic_infidelity",
            "notes",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    );

    for row in &config.rows {
        let delta_env = params::delta_from_n_bar(row.n_bar);
        let sigma_gkp_sq = params::sigma_gkp_sq_from_delta(delta_env);
        let db = params::squeezing_db_from_sigma_sq(sigma_gkp_sq);
        let infid = 1.0
            - analytic_entanglement_fidelity(sigma_gkp_sq, row.sigma_noise * row.sigma_noise)
                .map_err(numeric)?;

        let input = GkpBudgetInput {
            n_bar: row.n_bar,
            sigma_noise: row.sigma_noise,
            sigma_0: row.sigma_0,
            eps_ec: row.eps_ec,
            eps_m: row.eps_m,
        };
        let base = vec![
            fmt_f64(row.n_bar),
            fmt_f64(db),
            fmt_f64(row.sigma_noise),
            fmt_f64(row.sigma_0),
            fmt_f64(row.eps_ec),
            fmt_f64(row.eps_m),
        ];
        match plan(&input) {
            Ok(p) => {
                let mut notes = Vec::new();
                if infid > row.eps_ec {
                    notes.push("ec-budget-infeasible".to_string());
                }
                let mut cells = base;
                cells.extend([
                    fmt_f64(p.r),
                    fmt_f64(p.n_lo),
                    fmt_f64(p.sigma_e),
                    fmt_f64(p.n_lo_at(LOW_DETECTOR_NOISE)),
                    fmt_f64(p.n_lo_at(HIGH_DETECTOR_NOISE)),
                    fmt_f64(infid),
                    notes.join("; "),
                ]);
                table.push(cells);
            }
            // A row without a resolution budget is reported, not fatal.
            Err(PlannerError::NoBudget { .. }) => {
                let mut cells = base;
                cells.extend([
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    fmt_f64(infid),
                    "no-budget".to_string(),
                ]);
                table.push(cells);
            }
            Err(e) => return Err(validation(e)),
        }
    }
    Ok(table)
}
