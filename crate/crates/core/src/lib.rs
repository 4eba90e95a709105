//! Concurrence of inherited and claim-level naive semantics for
//! claim-augmented argumentation frameworks (CAFs).
//!
//! The crate is organised bottom-up:
//!
//! * [`model`] holds argumentation frameworks, claims and extensions.
//! * [`cnf`] is a small CNF toolkit (DIMACS, tautology screening, an
//!   exhaustive satisfiability oracle).
//! * [`semantics`] enumerates naive extensions and decides concurrence by
//!   brute force.
//! * [`encoding`] and [`solver`] decide the same question through a
//!   propositional witness search.
//! * [`reduction`] builds the well-formed CAF that is concurrent exactly when
//!   a CNF formula is unsatisfiable, together with a verifier.
//! * [`io`] is the line-oriented CAF text format.
//! * [`random`], [`oracle`] and [`fuzz`] make up the randomized cross-check
//!   harness.

pub mod bitset;
pub mod cnf;
pub mod encoding;
pub mod error;
pub mod fuzz;
pub mod io;
pub mod model;
pub mod oracle;
pub mod random;
pub mod reduction;
pub mod semantics;
pub mod solver;

pub use error::{Error, Result};
pub use model::{Af, ArgumentId, Caf, CafBuilder, ClaimId, ClaimSet, Extension};
pub use semantics::{ConcurrenceVerdict, Witness};

/// Size caps for the exponential procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest framework accepted by naive-extension enumeration.
    pub max_args: usize,
    /// Largest variable count accepted by the exhaustive SAT oracle.
    pub max_vars: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ARGS: usize = 64;
    pub const DEFAULT_MAX_VARS: usize = 24;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_args: Self::DEFAULT_MAX_ARGS,
            max_vars: Self::DEFAULT_MAX_VARS,
        }
    }
}
