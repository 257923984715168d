//! Shape of the colex greedy output for graphs whose minimum degree equals
//! their vertex connectivity: `δ − 1` universal vertices, then cliques of
//! size `v − δ` and one trailing smaller clique.

use serde::Serialize;

use crate::error::{BergeError, Result};
use crate::model::{classify, GraphPattern, UniformHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColexShape {
    pub universal: usize,
    pub clique_size: usize,
    pub full_cliques: usize,
    /// Size of the trailing partial clique, 0 when there is none.
    pub extra: usize,
}

/// The decomposition predicted for `n` vertices; errors unless `δ(F) = κ(F)`.
pub fn expected_colex_shape(n: usize, pattern: &GraphPattern) -> Result<ColexShape> {
    let report = classify(pattern)?;
    let delta = report.degree_profile.min_degree;
    if delta != report.vertex_connectivity {
        return Err(BergeError::Precondition(format!(
            "minimum degree {delta} differs from vertex connectivity {}",
            report.vertex_connectivity
        )));
    }
    if delta == 0 {
        return Err(BergeError::Precondition("minimum degree is 0".into()));
    }
    let v = pattern.vertex_count();
    if n + 1 < delta {
        return Err(BergeError::Precondition(format!("n = {n} is below δ − 1 = {}", delta - 1)));
    }
    let rest = n + 1 - delta;
    let clique_size = v - delta;
    Ok(ColexShape {
        universal: delta - 1,
        clique_size,
        full_cliques: rest / clique_size,
        extra: rest % clique_size,
    })
}

/// True iff the graph `g` is `δ − 1` universal vertices (the lowest labels)
/// joined to a disjoint union of cliques with the predicted sizes.
pub fn verify_colex_shape(g: &UniformHypergraph, pattern: &GraphPattern) -> Result<bool> {
    if g.uniformity() != 2 {
        return Err(BergeError::Precondition(format!(
            "colex shape applies to graphs, got uniformity {}",
            g.uniformity()
        )));
    }
    let n = g.vertex_count();
    let shape = expected_colex_shape(n, pattern)?;
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let u = shape.universal;
    if (0..u).any(|x| (0..n).any(|y| x != y && !adj[x][y])) {
        return Ok(false);
    }
    // Components of the rest must be cliques.
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in u..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for y in u..n {
                if adj[x][y] && !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        let clique = comp.iter().all(|&a| comp.iter().all(|&b| a == b || adj[a][b]));
        if !clique {
            return Ok(false);
        }
        sizes.push(comp.len());
    }
    sizes.sort_unstable();
    let mut want = vec![shape.clique_size; shape.full_cliques];
    if shape.extra > 0 {
        want.push(shape.extra);
    }
    want.sort_unstable();
    Ok(sizes == want)
}
