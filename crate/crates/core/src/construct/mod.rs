//! The block constructions behind the linear saturation bounds, their
//! structural verifiers, and a router that picks the applicable one.

mod auto;
mod cut_edge;
mod fgood;
mod isolated;
mod linearity;
mod multipartite;
mod oversat;

pub use auto::{auto_construct, construct_then_saturate, construct_with};
pub use cut_edge::{construct_cut_edge, cross_block_failures};
pub use fgood::{build_type_one_context, construct_fgood, verify_fgood, FGoodCertificate, PairWitness, TypeOneContext};
pub use isolated::construct_isolated_edge;
pub use linearity::{exact_affine_fit, scan_period, AffineFit};
pub use multipartite::{construct_multipartite_case1, construct_multipartite_case2};
pub use oversat::construct_oversaturated;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::BergeError;
use crate::model::colex::colex_enumerate;
use crate::model::{BlockLayout, Hyperedge, UniformHypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "&'static str")]
pub enum Method {
    MultipartiteCase1,
    MultipartiteCase2,
    IsolatedEdge,
    Fgood,
    GreedyColex,
    CutEdge,
    Oversaturated,
    /// Greedy colex completion from the empty hypergraph, with no known
    /// linear bound.
    Fallback,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::MultipartiteCase1,
        Method::MultipartiteCase2,
        Method::IsolatedEdge,
        Method::Fgood,
        Method::GreedyColex,
        Method::CutEdge,
        Method::Oversaturated,
        Method::Fallback,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::MultipartiteCase1 => "multipartite-case1",
            Method::MultipartiteCase2 => "multipartite-case2",
            Method::IsolatedEdge => "isolated-edge",
            Method::Fgood => "fgood",
            Method::GreedyColex => "greedy-colex",
            Method::CutEdge => "cut-edge",
            Method::Oversaturated => "oversaturated",
            Method::Fallback => "no-linearity-guarantee",
        }
    }
}

impl From<Method> for &'static str {
    fn from(m: Method) -> Self {
        m.tag()
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = BergeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.tag() == s || (s == "fallback" && *m == Method::Fallback))
            .ok_or_else(|| BergeError::Precondition(format!("unknown method `{s}`")))
    }
}

/// A constructed hypergraph with the partition it was built on and the
/// constraint checks that admitted it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub method: Method,
    pub hypergraph: UniformHypergraph,
    pub layout: Option<BlockLayout>,
    pub checks: Vec<String>,
}

/// `k`-subsets of an ascending vertex list, in colex order.
pub(crate) fn subsets_of(vertices: &[usize], k: usize) -> Vec<Hyperedge> {
    if k == 0 || k > vertices.len() {
        return Vec::new();
    }
    colex_enumerate(vertices.len(), k)
        .expect("0 < k <= len")
        .map(|s| Hyperedge::new(s.into_iter().map(|i| vertices[i]).collect()))
        .collect()
}

pub(crate) fn require(cond: bool, checks: &mut Vec<String>, what: String) -> crate::Result<()> {
    if cond {
        checks.push(what);
        Ok(())
    } else {
        Err(BergeError::Precondition(format!("needs {what}")))
    }
}
