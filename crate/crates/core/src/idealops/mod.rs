//! Ideal quotients, saturation, homogenization of ideals and submodules, and
//! the two elimination routes.

mod eliminate;
mod homogenize;
mod quotient;

pub use eliminate::{
    eliminate, eliminate_block, eliminate_saturation, EliminationOptions, EliminationOutcome, EliminationProblem,
    Method,
};
pub use homogenize::{degree_zero_part, degree_zero_part_module, homogenize_ideal, homogenize_module, HomogenizationResult};
pub use quotient::{module_quotient, module_saturate, quotient, saturate, Saturation};
