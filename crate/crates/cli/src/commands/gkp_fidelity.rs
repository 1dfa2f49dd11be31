//! The `gkp fidelity` subcommand: entanglement-infidelity curves per code
//! over a displacement-noise grid, analytic or numeric (transpose-channel
//! recovery).

use hcert_gkp_sim::{
    analytic_entanglement_fidelity, build_gkp_code_adaptive, displacement_channel_kraus,
    entanglement_fidelity, params, transpose_channel_recovery, GridSpec,
};

use crate::config::GkpFidelityConfig;
use crate::output::{fmt_f64, Table};
use crate::{numeric, CliError};

const NUMERIC_LABEL: &str = "transpose-recovery; not an optimized-recovery reference";

pub fn run(config: &GkpFidelityConfig, config_bytes: &[u8]) -> Result<Table, CliError> {
    if config.codes.is_empty() {
        return Err(CliError::Validation("no codes given".into()));
    }
    let sigma_grid = config
        .sigma_noise_sq
        .expand()?
        .into_iter()
        .collect::<Vec<_>>();
    if sigma_grid.iter().any(|s| *s < 0.0) {
        return Err(CliError::Validation(
            "sigma_noise_sq values must be non-negative".into(),
        ));
    }
    let mode = config.mode.as_str();
    if mode != "analytic" && mode != "numeric-transpose" {
        return Err(CliError::Validation(format!(
            "unknown mode `{mode}` (use analytic or numeric-transpose)"
        )));
    }
    let max_cutoff = config.max_cutoff.unwrap_or(200);

    let mut table = Table::new(
        "gkp fidelity",
        config_bytes,
        ["n_bar", "squeezing_db", "sigma_noise_sq", "infidelity", "mode", "notes"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );

    for code_def in &config.codes {
        let delta_env = code_def.delta_env()?;
        let n_bar = params::n_bar_from_delta(delta_env);
        let sigma_gkp_sq = params::sigma_gkp_sq_from_delta(delta_env);
        let db = params::squeezing_db_from_sigma_sq(sigma_gkp_sq);

        match mode {
            "analytic" => {
                for &s2 in &sigma_grid {
                    let infid = 1.0
                        - analytic_entanglement_fidelity(sigma_gkp_sq, s2).map_err(numeric)?;
                    table.push(vec![
                        fmt_f64(n_bar),
                        fmt_f64(db),
                        fmt_f64(s2),
                        fmt_f64(infid),
                        "analytic".to_string(),
                        String::new(),
                    ]);
                }
            }
            _ => {
                let code = build_gkp_code_adaptive(delta_env, max_cutoff).map_err(numeric)?;
                for &s2 in &sigma_grid {
                    let channel =
                        displacement_channel_kraus(s2, code.cutoff, &GridSpec::default())
                            .map_err(numeric)?;
                    let recovery = transpose_channel_recovery(&code, &channel).map_err(numeric)?;
                    let fe = entanglement_fidelity(&code, &channel, &recovery).map_err(numeric)?;
                    table.push(vec![
                        fmt_f64(n_bar),
                        fmt_f64(db),
                        fmt_f64(s2),
                        fmt_f64(1.0 - fe),
                        "numeric-transpose".to_string(),
                        NUMERIC_LABEL.to_string(),
                    ]);
                }
            }
        }
    }
    Ok(table)
}
