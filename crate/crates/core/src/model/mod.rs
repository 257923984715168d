//! Graphs, uniform hypergraphs, classification and block layouts.

pub mod classify;
pub mod colex;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod layout;

pub use classify::{classify, degree_profile, ClassificationReport, DegreeProfile};
pub use colex::{colex_enumerate, lex_enumerate};
pub use graph::GraphPattern;
pub use hypergraph::{Hyperedge, UniformHypergraph};
pub use layout::{make_layout, BlockLayout};
