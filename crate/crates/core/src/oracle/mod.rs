//! Exponential-time ground truth: chromatic number, automorphism groups,
//! and (proper) distinguishing colorings with respect to a permutation group.
//!
//! Every routine here is a plain exhaustive search with pruning. They exist to
//! check the polynomial-time structural code, so they deliberately share none
//! of its logic.

mod automorphisms;
mod coloring;
mod distinguishing;

pub use automorphisms::{automorphisms, restricted_automorphisms, AutomorphismSet, MAX_GROUP_ORDER};
pub use coloring::{
    chromatic_number, coloring_isolating, is_color_critical, max_clique_size, optimal_coloring,
    Coloring,
};
pub use distinguishing::{
    distinguishing_chromatic_number, distinguishing_colorings, distinguishing_number,
    is_distinguishing, optimal_distinguishing_coloring,
};

use crate::error::{Error, Result};

/// Largest graph the chromatic-number search accepts.
pub const MAX_CHROMATIC_N: usize = 16;
/// Largest graph the automorphism search accepts.
pub const MAX_AUTOMORPHISM_N: usize = 12;
/// Largest graph the distinguishing searches accept.
pub const MAX_DISTINGUISHING_N: usize = 12;

pub(crate) fn guard(operation: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::GuardExceeded { operation, n, max })
    } else {
        Ok(())
    }
}
