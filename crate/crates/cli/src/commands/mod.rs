pub mod bound;
pub mod gkp_fidelity;
pub mod gkp_plan;
pub mod witness;
