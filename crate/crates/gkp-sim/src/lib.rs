//! Finite-energy GKP codes under Gaussian displacement noise in a truncated
//! Fock basis.
//!
//! The pieces: dense complex linear algebra (matrix exponential, Hermitian
//! eigendecomposition), Fock-space operators, square-lattice GKP codewords
//! with an adaptive occupation cutoff, the isotropic Gaussian displacement
//! channel in both superoperator-exponential and Kraus-quadrature form,
//! entanglement fidelity of explicit recoveries, and the closed-form
//! analytic fidelity of teleported error correction.

mod analytic;
mod channel;
mod code;
mod error;
mod fock;
pub mod linalg;
mod moments;
pub mod params;
mod recovery;

pub use analytic::{analytic_entanglement_fidelity, p_succ};
pub use channel::{
    displacement_channel, displacement_channel_kraus, displacement_op,
    kraus_completeness_defect, mean_photon, vacuum, Channel, GridSpec,
};
pub use code::{
    build_gkp_code, build_gkp_code_adaptive, GkpCode, ADAPTIVE_PROJECTOR_TOL, DEFAULT_MAX_CUTOFF,
};
pub use error::SimError;
pub use fock::FockOperator;
pub use moments::{quadrature_moment, state_moments_from_fock};
pub use recovery::{entanglement_fidelity, projector_recovery, transpose_channel_recovery};
