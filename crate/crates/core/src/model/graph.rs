use std::collections::HashSet;

use crate::error::{BergeError, Result};

/// The core pattern `F`: a graph (`uniformity == 2`) or a `u`-uniform
/// hypergraph core. Edge order is preserved and defines the pattern-edge
/// index used in witnesses and reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphPattern {
    vertex_count: usize,
    uniformity: usize,
    edges: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl GraphPattern {
    /// A graph pattern (`u = 2`).
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_uniformity(vertex_count, 2, edges.iter().map(|&(a, b)| vec![a, b]).collect())
    }

    pub fn with_uniformity(vertex_count: usize, uniformity: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(BergeError::InvalidPattern("vertex count must be positive".into()));
        }
        if uniformity < 2 {
            return Err(BergeError::InvalidPattern(format!(
                "core uniformity must be at least 2 (got {uniformity})"
            )));
        }
        let mut seen = HashSet::new();
        let mut canon = Vec::with_capacity(edges.len());
        for raw in edges {
            let mut e = raw.clone();
            e.sort_unstable();
            e.dedup();
            if e.len() != raw.len() {
                return Err(BergeError::InvalidPattern(format!("edge {raw:?} repeats a vertex")));
            }
            if e.len() != uniformity {
                return Err(BergeError::InvalidPattern(format!(
                    "edge {raw:?} does not have exactly {uniformity} vertices"
                )));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(BergeError::InvalidPattern(format!(
                    "edge {raw:?} uses vertex {v} outside 0..{vertex_count}"
                )));
            }
            if !seen.insert(e.clone()) {
                return Err(BergeError::InvalidPattern(format!("duplicate edge {raw:?}")));
            }
            canon.push(e);
        }
        let mut degrees = vec![0; vertex_count];
        for e in &canon {
            for &v in e {
                degrees[v] += 1;
            }
        }
        Ok(GraphPattern {
            vertex_count,
            uniformity,
            edges: canon,
            degrees,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn is_graph(&self) -> bool {
        self.uniformity == 2
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        self.edges.iter().any(|e| e[0] == a && e[1] == b && e.len() == 2)
    }

    /// Adjacency matrix; two vertices are adjacent if some edge holds both.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.vertex_count]; self.vertex_count];
        for e in &self.edges {
            for &a in e {
                for &b in e {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
        }
        adj
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let adj = self.adjacency();
        (0..self.vertex_count).filter(|&w| adj[v][w]).collect()
    }

    /// Pattern on the listed vertices (renumbered in the given order) keeping
    /// the listed edge indices.
    pub fn induced_by_edges(&self, vertices: &[usize], edge_ids: &[usize]) -> Result<GraphPattern> {
        let mut relabel = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            relabel[v] = i;
        }
        let edges = edge_ids
            .iter()
            .map(|&id| self.edges[id].iter().map(|&v| relabel[v]).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        if edges.iter().flatten().any(|&v| v == usize::MAX) {
            return Err(BergeError::InvalidPattern("edge leaves the chosen vertex set".into()));
        }
        GraphPattern::with_uniformity(vertices.len(), self.uniformity, edges)
    }

    // Named families.

    pub fn complete(k: usize) -> GraphPattern {
        let mut edges = Vec::new();
        for b in 0..k {
            for a in 0..b {
                edges.push((a, b));
            }
        }
        GraphPattern::new(k.max(1), &edges).expect("complete graph is valid")
    }

    /// Cycle on `k >= 3` vertices.
    pub fn cycle(k: usize) -> GraphPattern {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        GraphPattern::new(k, &edges).expect("cycle is valid")
    }

    /// Path on `k` vertices (`k − 1` edges).
    pub fn path(k: usize) -> GraphPattern {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        GraphPattern::new(k.max(1), &edges).expect("path is valid")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> GraphPattern {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        GraphPattern::new(leaves + 1, &edges).expect("star is valid")
    }

    /// Complete multipartite graph; vertices are numbered class by class.
    pub fn complete_multipartite(classes: &[usize]) -> GraphPattern {
        let mut class_of = Vec::new();
        for (c, &k) in classes.iter().enumerate() {
            class_of.extend(std::iter::repeat_n(c, k));
        }
        let v = class_of.len();
        let mut edges = Vec::new();
        for b in 0..v {
            for a in 0..b {
                if class_of[a] != class_of[b] {
                    edges.push((a, b));
                }
            }
        }
        GraphPattern::new(v.max(1), &edges).expect("multipartite graph is valid")
    }

    pub fn disjoint_union(&self, other: &GraphPattern) -> GraphPattern {
        assert_eq!(self.uniformity, other.uniformity);
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| v + self.vertex_count).collect::<Vec<_>>()),
        );
        GraphPattern::with_uniformity(self.vertex_count + other.vertex_count, self.uniformity, edges)
            .expect("disjoint union is valid")
    }

    /// Hub 0 joined to a rim cycle on `rim` vertices.
    pub fn wheel(rim: usize) -> GraphPattern {
        assert!(rim >= 3);
        let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
        edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
        GraphPattern::new(rim + 1, &edges).expect("wheel is valid")
    }

    pub fn petersen() -> GraphPattern {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        GraphPattern::new(10, &edges).expect("petersen is valid")
    }

    /// Complete graph minus the edge (0, 1).
    pub fn complete_minus_edge(k: usize) -> GraphPattern {
        let edges: Vec<_> = GraphPattern::complete(k)
            .edges()
            .iter()
            .filter(|e| !(e[0] == 0 && e[1] == 1))
            .map(|e| (e[0], e[1]))
            .collect();
        GraphPattern::new(k, &edges).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(GraphPattern::new(3, &[(0, 0)]).is_err());
        assert!(GraphPattern::new(3, &[(0, 3)]).is_err());
        assert!(GraphPattern::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(GraphPattern::with_uniformity(4, 3, vec![vec![0, 1]]).is_err());
        assert!(GraphPattern::new(0, &[]).is_err());
    }

    #[test]
    fn named_families() {
        assert_eq!(GraphPattern::complete(4).edge_count(), 6);
        assert_eq!(GraphPattern::cycle(7).edge_count(), 7);
        assert_eq!(GraphPattern::path(4).edge_count(), 3);
        assert_eq!(GraphPattern::complete_multipartite(&[2, 2, 2]).edge_count(), 12);
        assert_eq!(GraphPattern::petersen().degrees(), &[3; 10]);
        assert_eq!(GraphPattern::wheel(6).degree(0), 6);
        let u = GraphPattern::complete(3).disjoint_union(&GraphPattern::complete(2));
        assert_eq!((u.vertex_count(), u.edge_count()), (5, 4));
    }
}
