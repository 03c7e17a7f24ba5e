//! Ordinal sums of fuzzy connectives.
//!
//! This crate builds and evaluates fuzzy negations, t-norms, t-conorms and
//! implications, glues families of them together with ordinal-sum
//! constructions, extracts natural negations (in closed form and through
//! sup/inf bisection oracles), classifies negations into the usual classes
//! (strict, strong, crisp, frontier, ...) and numerically verifies the
//! construction theorems that relate all of the above on concrete summand
//! families.

pub mod analysis;
pub mod config;
pub mod connective;
mod error;
pub mod natural_negation;
pub mod ordinal_sum;
pub mod suite;
pub mod unit;
pub mod verification;

pub use connective::{
    make_connective, n_dual, BaseConnective, ConnectiveExpr, ConnectiveKind, ImplicationBase,
    NegationBase, NegationCerts, TConormBase, TNormBase,
};
pub use error::{Error, Result};
pub use unit::{unit_grid, UnitValue};
