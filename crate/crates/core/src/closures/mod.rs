//! Ratliff-Rush and integral closures of monomial ideals.

mod integral;
mod newton;
mod ratliff_rush;

pub use integral::{default_oracle_bound, integral_closure, integral_member_oracle};
pub use newton::{newton_polyhedron, newton_polyhedron_with_cap, Facet, NewtonPolyhedron, DEFAULT_MAX_VARS};
pub use ratliff_rush::{rr_closure, RRReport, DEFAULT_N_MAX, DEFAULT_WINDOW};
