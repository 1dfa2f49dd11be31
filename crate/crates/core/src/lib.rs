//! Shared domain types for homodyne-measurement convergence certification.
//!
//! The quantities that every convergence bound consumes live here: the
//! signal-mode description (quadrature coefficients and detector weights),
//! user-supplied state moments, the measurement-apparatus noise model, and
//! the report type that pairs a squared Hilbert-space distance with the
//! fidelity lower bound it implies.
//!
//! Conventions: the target quadrature is normalized (sum of |alpha_k|^2 is 1)
//! and detector weights are normalized so their maximum is 1. Distances are
//! squared Hilbert-space norms between unit vectors, so they never exceed 2.

mod ensemble;
mod error;
mod fidelity;
mod moments;
mod report;

pub use ensemble::{omega_bar_sq, validate_ensemble, ModeEnsemble};
pub use error::CoreError;
pub use fidelity::{fidelity_from_distance_sq, fidelity_from_overlap};
pub use moments::{ApparatusModel, StateMoments};
pub use report::{echo, BoundReport};

/// Input-validation tolerance for normalization checks.
pub const INPUT_NORM_TOL: f64 = 1e-9;

/// Internal tolerance used when re-checking invariants on constructed values.
pub const INTERNAL_NORM_TOL: f64 = 1e-12;
