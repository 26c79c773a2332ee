//! Minimum-deletion Boolean constraint satisfaction: language classification,
//! class-specific solvers, and executable reductions with solution pull-back.

pub mod classify;
pub mod error;
pub mod gf2;
pub mod instance;
pub mod lp;
pub mod reduce;
pub mod relation;
pub mod solve;
mod text;

pub use error::{InstanceError, ParseError, ReductionError, RelationError, SolveError};
