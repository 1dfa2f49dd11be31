//! Scalar parameter relations for finite-energy square GKP codes.
//!
//! `n_bar = 1 / (2 Delta^2)`, `sigma_gkp^2 = (1 - exp(-Delta^2)) / (1 + exp(-Delta^2))`
//! (equivalently `tanh(Delta^2 / 2)`), and squeezing in decibels is
//! `-10 log10(2 sigma^2)`.

pub fn delta_from_n_bar(n_bar: f64) -> f64 {
    1.0 / (2.0 * n_bar).sqrt()
}

pub fn n_bar_from_delta(delta_env: f64) -> f64 {
    1.0 / (2.0 * delta_env * delta_env)
}

pub fn sigma_gkp_sq_from_delta(delta_env: f64) -> f64 {
    (delta_env * delta_env / 2.0).tanh()
}

pub fn delta_from_sigma_gkp_sq(sigma_sq: f64) -> f64 {
    (2.0 * sigma_sq.atanh()).sqrt()
}

pub fn squeezing_db_from_sigma_sq(sigma_sq: f64) -> f64 {
    -10.0 * (2.0 * sigma_sq).log10()
}

pub fn sigma_sq_from_squeezing_db(db: f64) -> f64 {
    10f64.powf(-db / 10.0) / 2.0
}
