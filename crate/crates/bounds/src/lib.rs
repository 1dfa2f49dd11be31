//! Closed-form convergence bounds for finite-local-oscillator homodyne
//! measurements.
//!
//! Every operation here is a pure scalar function of the inverse LO scale
//! `delta`, user-supplied state moments, and a measurement-apparatus model.
//! Each returns a [`hcert_core::BoundReport`] pairing the squared-distance
//! bound with the fidelity lower bound it implies, or a plain scalar where
//! the bounded quantity is not a state distance.
//!
//! Two families are provided throughout: the general broadband-pulsed (BBP)
//! form valid for arbitrary detector weights, and the tighter standard
//! pulsed homodyne (`_sph`) form for unit weights.

mod charfn;
mod conditional;
mod error;
mod evolution;
mod function;
mod measurement;
mod moment;
mod types;

pub use charfn::{charfn_error_bound, CharfnVariant};
pub use conditional::{
    apparatus_conditioning_bound, conditional_displacement_bound, conditional_unitary_bound,
    regularization_gap_bound, teleportation_bound,
};
pub use error::BoundsError;
pub use evolution::{
    evolution_distance_bound, evolution_distance_bound_refined, evolution_distance_bound_sph,
    evolution_distance_bound_tight,
};
pub use function::{
    function_distance_bound, function_distance_bound_sph, multi_measurement_function_bound,
    regularized_function_bound, RegularizedBound,
};
pub use measurement::{
    gaussian_apparatus_moments, measurement_fidelity_bound, measurement_fidelity_bound_sph,
};
pub use moment::{moment_error_bound, moment_error_bound_with_lambda};
pub use types::{
    ApparatusTransition, ConditionalDisplacementSpec, FunctionMeasureMoments, TeleportChainMoments,
};
