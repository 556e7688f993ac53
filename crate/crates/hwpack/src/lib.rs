pub mod arthur_params;
pub mod cli;
pub mod cohomological_data;
pub mod component_chars;
pub mod error;
pub mod langlands_data;
pub mod membership;
pub mod orbit_tableaux;
pub mod quadratic_invariants;
pub mod sign;
pub mod weights;
