use std::collections::HashMap;

use crate::model::{Hyperedge, UniformHypergraph};

/// Precomputed lookup structure over a host: per-vertex incidence lists,
/// vertex-pair occurrence lists and co-occurrence neighbourhoods. Hyperedge
/// ids follow insertion order; [`HostIndex::push`] appends in place so a
/// growing host (greedy completion) never rebuilds from scratch.
#[derive(Debug, Clone)]
pub struct HostIndex {
    n: usize,
    r: usize,
    edges: Vec<Hyperedge>,
    incidence: Vec<Vec<u32>>,
    pairs: HashMap<(u32, u32), Vec<u32>>,
    neighbors: Vec<Vec<u32>>,
}

impl HostIndex {
    pub fn new(host: &UniformHypergraph) -> Self {
        let mut idx = HostIndex {
            n: host.vertex_count(),
            r: host.uniformity(),
            edges: Vec::with_capacity(host.edge_count()),
            incidence: vec![Vec::new(); host.vertex_count()],
            pairs: HashMap::new(),
            neighbors: vec![Vec::new(); host.vertex_count()],
        };
        for e in host.edges() {
            idx.push(e.clone());
        }
        idx
    }

    /// Appends a hyperedge; the caller guarantees it is new and valid.
    pub fn push(&mut self, e: Hyperedge) {
        let id = self.edges.len() as u32;
        let vs = e.vertices();
        for (i, &a) in vs.iter().enumerate() {
            self.incidence[a].push(id);
            for &b in &vs[i + 1..] {
                self.pairs.entry((a as u32, b as u32)).or_default().push(id);
                insert_sorted(&mut self.neighbors[a], b as u32);
                insert_sorted(&mut self.neighbors[b], a as u32);
            }
        }
        self.edges.push(e);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: u32) -> &Hyperedge {
        &self.edges[id as usize]
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn incidence(&self, v: usize) -> &[u32] {
        &self.incidence[v]
    }

    /// Hyperedge ids containing both `a` and `b`, ascending.
    pub fn pair(&self, a: usize, b: usize) -> &[u32] {
        let key = (a.min(b) as u32, a.max(b) as u32);
        self.pairs.get(&key).map_or(&[], Vec::as_slice)
    }

    /// Vertices sharing at least one hyperedge with `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    /// Membership test by scanning the incidence list of the first vertex.
    pub fn contains(&self, e: &Hyperedge) -> bool {
        match e.vertices().first() {
            Some(&v) => self.incidence[v].iter().any(|&id| self.edges[id as usize] == *e),
            None => false,
        }
    }

    pub fn to_hypergraph(&self) -> UniformHypergraph {
        UniformHypergraph::from_unsorted(self.n, self.r, self.edges.clone())
    }
}

fn insert_sorted(list: &mut Vec<u32>, x: u32) {
    if let Err(pos) = list.binary_search(&x) {
        list.insert(pos, x);
    }
}
