//! Derivations of `Q[x_1, ..., x_n]` that are homogeneous for the `Z^n`
//! grading, and the modules they generate.

mod graded;
mod module;
mod tangent;

pub use graded::{admissible_slots, GradedDerivation};
pub use module::{DerivationModule, GradedOptions, DEFAULT_MAX_DEGREE};
pub use tangent::{staircase_exponents, staircase_t_2var, tangent_module};

pub(crate) use module::assemble;
