//! Recognition of Nordhaus-Gaddum extremal graphs and their
//! distinguishing-coloring analogue.
//!
//! The crate has two halves that never call into each other's logic:
//!
//! * structural, polynomial-time code: [`recognition`] decides whether
//!   `χ(G) + χ(Ḡ) = n + 1` from vertex degrees alone, and [`ngd`] decides
//!   whether such a graph also satisfies `χ_D(G) + χ_D(Ḡ) = n + D(G)` from
//!   closed-form parameters;
//! * the exhaustive [`oracle`] searches, used as ground truth on small graphs.
//!
//! [`graph`], [`graph6`] and [`enumerate`] provide the shared plumbing, and
//! [`generators`] builds the named families used as fixtures.

pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod ngd;
pub mod oracle;
pub mod recognition;

pub use error::{Error, Graph6Error, Result};
pub use graph::{Graph, InducedShape, VertexSet};
