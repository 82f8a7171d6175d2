//! Exact computations with monomial ideals, their closures, and the modules
//! of derivations that preserve them or lift along blow-ups and monomial charts.

pub mod chart;
pub mod closures;
pub mod derivation;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod parse;
pub mod ring;
pub mod semigroup;
pub mod valuation;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use ring::{ExponentVector, RingContext};
