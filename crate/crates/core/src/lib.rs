//! Knots in the canonical book representation of complete graphs.
//!
//! `K_n` is drawn in a book whose sheets stack in a fixed order, so every
//! cycle of the graph becomes a knot diagram with over/under data read off
//! vertex labels. The crate builds those diagrams, identifies the knots
//! they carry, produces the cycles that realize torus knots and composites,
//! and counts knot types over all Hamiltonian cycles.

pub mod braids;
pub mod census;
pub mod cli;
pub mod constructions;
pub mod cycle;
pub mod diagram;
pub mod embedding;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod simplify;
pub mod verify;

pub use cycle::Cycle;
pub use diagram::{diagram_of_cycle, Diagram};
pub use embedding::{BookEmbedding, Edge, SheetIndex};
pub use error::{Error, Result};
pub use invariants::{identify, Fingerprint, Identifier, KnotName};
pub use poly::LaurentPoly;
pub use simplify::simplify;
