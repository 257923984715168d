//! Exhaustive reference check for Berge containment. Deliberately naive:
//! every injective vertex map, then every injective choice of containing
//! hyperedges edge by edge. Shares nothing with the search beyond the data
//! types.

use crate::error::{BergeError, Result};
use crate::guard::SizeGuard;
use crate::model::{GraphPattern, Hyperedge, UniformHypergraph};

pub fn brute_force_contains(host: &UniformHypergraph, pattern: &GraphPattern, guard: &SizeGuard) -> Result<bool> {
    if host.vertex_count() > guard.oracle_vertices
        || host.edge_count() > guard.oracle_hyperedges
        || pattern.edge_count() > guard.oracle_pattern_edges
    {
        return Err(BergeError::SizeGuard(format!(
            "oracle limited to |V(H)| <= {}, |E(H)| <= {}, |E(F)| <= {} (got {}, {}, {})",
            guard.oracle_vertices,
            guard.oracle_hyperedges,
            guard.oracle_pattern_edges,
            host.vertex_count(),
            host.edge_count(),
            pattern.edge_count()
        )));
    }
    if pattern.uniformity() > host.uniformity() {
        return Err(BergeError::UniformityMismatch {
            pattern: pattern.uniformity(),
            host: host.uniformity(),
        });
    }
    let mut map = Vec::with_capacity(pattern.vertex_count());
    let mut used = vec![false; host.vertex_count()];
    Ok(every_vertex_map(host, pattern, &mut map, &mut used))
}

fn every_vertex_map(host: &UniformHypergraph, pattern: &GraphPattern, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if map.len() == pattern.vertex_count() {
        let mut taken = vec![false; host.edge_count()];
        return every_edge_choice(host.edges(), pattern, map, 0, &mut taken);
    }
    for x in 0..host.vertex_count() {
        if used[x] {
            continue;
        }
        used[x] = true;
        map.push(x);
        let found = every_vertex_map(host, pattern, map, used);
        map.pop();
        used[x] = false;
        if found {
            return true;
        }
    }
    false
}

fn every_edge_choice(edges: &[Hyperedge], pattern: &GraphPattern, map: &[usize], i: usize, taken: &mut [bool]) -> bool {
    let Some(e) = pattern.edges().get(i) else {
        return true;
    };
    let image: Vec<usize> = e.iter().map(|&v| map[v]).collect();
    for (j, h) in edges.iter().enumerate() {
        if taken[j] || !image.iter().all(|&v| h.vertices().contains(&v)) {
            continue;
        }
        taken[j] = true;
        let found = every_edge_choice(edges, pattern, map, i + 1, taken);
        taken[j] = false;
        if found {
            return true;
        }
    }
    false
}
