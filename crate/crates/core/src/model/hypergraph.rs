use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::colex::colex_cmp;
use crate::error::{BergeError, Result};

/// A finite vertex set kept sorted ascending. Ordered colexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    /// Sorts and deduplicates; the caller checks the final size.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Hyperedge(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_superset_of(&self, other: &[usize]) -> bool {
        other.iter().all(|&v| self.contains(v))
    }

    pub fn intersects(&self, other: &[usize]) -> bool {
        other.iter().any(|&v| self.contains(v))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Ord for Hyperedge {
    fn cmp(&self, other: &Self) -> Ordering {
        colex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Hyperedge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An `n`-vertex, `r`-uniform hypergraph whose hyperedges are stored in
/// strictly increasing colex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Hyperedge>,
}

impl UniformHypergraph {
    pub fn empty(n: usize, r: usize) -> Result<Self> {
        if n == 0 {
            return Err(BergeError::InvalidHypergraph("vertex count must be positive".into()));
        }
        if r < 2 {
            return Err(BergeError::InvalidHypergraph(format!(
                "uniformity must be at least 2 (got {r})"
            )));
        }
        Ok(UniformHypergraph {
            n,
            r,
            edges: Vec::new(),
        })
    }

    /// Builds from arbitrary vertex lists. Each list must name `r` distinct
    /// in-range vertices and no set may repeat.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Vec<usize>>,
    {
        let mut h = Self::empty(n, r)?;
        let mut list = Vec::new();
        for raw in edges {
            let raw: Vec<usize> = raw.into();
            let e = h.check_edge(raw)?;
            list.push(e);
        }
        list.sort();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(BergeError::InvalidHypergraph(format!(
                "duplicate hyperedge {}",
                w[0]
            )));
        }
        h.edges = list;
        Ok(h)
    }

    /// Trusted constructor for internally generated, already-canonical sets.
    pub(crate) fn from_sorted_unique(n: usize, r: usize, edges: Vec<Hyperedge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e.len() == r && e.vertices().iter().all(|&v| v < n)));
        UniformHypergraph { n, r, edges }
    }

    /// Trusted constructor that sorts and deduplicates.
    pub(crate) fn from_unsorted(n: usize, r: usize, mut edges: Vec<Hyperedge>) -> Self {
        edges.sort();
        edges.dedup();
        Self::from_sorted_unique(n, r, edges)
    }

    /// Validates a vertex list as an `r`-set of this host.
    pub fn check_edge(&self, raw: Vec<usize>) -> Result<Hyperedge> {
        let shown = format!("{raw:?}");
        let e = Hyperedge::new(raw);
        if e.len() != self.r || e.vertices().iter().any(|&v| v >= self.n) {
            return Err(BergeError::BadHyperedge {
                edge: shown,
                r: self.r,
            });
        }
        Ok(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Copy with one more hyperedge, kept in colex position.
    pub fn with_edge(&self, e: Hyperedge) -> Result<Self> {
        if e.len() != self.r || e.vertices().iter().any(|&v| v >= self.n) {
            return Err(BergeError::BadHyperedge {
                edge: e.to_string(),
                r: self.r,
            });
        }
        match self.edges.binary_search(&e) {
            Ok(_) => Err(BergeError::AlreadyPresent(e.to_string())),
            Err(pos) => {
                let mut edges = Vec::with_capacity(self.edges.len() + 1);
                edges.extend_from_slice(&self.edges[..pos]);
                edges.push(e);
                edges.extend_from_slice(&self.edges[pos..]);
                Ok(UniformHypergraph {
                    n: self.n,
                    r: self.r,
                    edges,
                })
            }
        }
    }

    /// Inserts in place; returns false if the set was already present.
    pub(crate) fn insert(&mut self, e: Hyperedge) -> bool {
        match self.edges.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                self.edges.insert(pos, e);
                true
            }
        }
    }

    pub fn remove(&mut self, e: &Hyperedge) -> bool {
        match self.edges.binary_search(e) {
            Ok(pos) => {
                self.edges.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e.vertices() {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Sub-hypergraph keeping the hyperedges accepted by `keep`.
    pub fn filter<F: Fn(&Hyperedge) -> bool>(&self, keep: F) -> Self {
        UniformHypergraph {
            n: self.n,
            r: self.r,
            edges: self.edges.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    pub fn is_subset_of(&self, other: &UniformHypergraph) -> bool {
        self.n == other.n && self.r == other.r && self.edges.iter().all(|e| other.contains(e))
    }
}
