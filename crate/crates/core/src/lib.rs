//! Berge-copy detection, Berge-saturation verification and the block
//! constructions that give linear-size saturated hypergraphs.
//!
//! Vertices are `0..n`; hyperedges are kept in colex order with ascending
//! vertices, so every output is reproducible byte for byte.

pub mod construct;
pub mod engine;
pub mod error;
pub mod guard;
pub mod model;
pub mod par;
pub mod saturation;

pub use engine::{
    brute_force_contains, contains_berge, creates_berge, is_berge_free, BergeEngine, BergeWitness, HostIndex,
};
pub use error::{BergeError, Result};
pub use guard::SizeGuard;
pub use model::{BlockLayout, GraphPattern, Hyperedge, UniformHypergraph};
