//! Oversaturated hypergraphs from a saturated `u`-uniform seed. `R` is the
//! first `r − u` vertices and `L` the rest. The hyperedges are the `r`-sets
//! whose trace on `L` is a seed hyperedge or has fewer than `u` vertices.

use super::{require, Construction, Method};
use crate::error::Result;
use crate::model::{GraphPattern, Hyperedge, UniformHypergraph};
use crate::saturation::{greedy_complete, GreedyOrder};

pub fn construct_oversaturated(n: usize, r: usize, pattern: &GraphPattern) -> Result<Construction> {
    let u = pattern.uniformity();
    let mut checks = Vec::new();
    require(r > u, &mut checks, format!("r > u ({r} > {u})"))?;
    require(n > r, &mut checks, format!("n > r ({n} > {r})"))?;
    let shift = r - u;
    let seed_host = UniformHypergraph::empty(n - shift, u)?;
    let seed = greedy_complete(&seed_host, pattern, GreedyOrder::Colex)?.hypergraph;
    checks.push(format!("seed: greedy colex, {} hyperedges of size {u}", seed.edge_count()));
    // |R| = r − u forces |h ∩ L| ≥ u, so only the traces in the seed remain.
    let edges = seed
        .edges()
        .iter()
        .map(|g| {
            let mut set: Vec<usize> = (0..shift).collect();
            set.extend(g.vertices().iter().map(|&x| x + shift));
            Hyperedge::new(set)
        })
        .collect();
    Ok(Construction {
        method: Method::Oversaturated,
        hypergraph: UniformHypergraph::from_unsorted(n, r, edges),
        layout: None,
        checks,
    })
}
