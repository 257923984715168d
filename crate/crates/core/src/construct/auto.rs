//! Routing an arbitrary `(n, r, F)` to the construction that applies.

use super::{
    construct_cut_edge, construct_fgood, construct_isolated_edge, construct_multipartite_case1,
    construct_multipartite_case2, construct_oversaturated, require, Construction, Method,
};
use crate::error::{BergeError, Result};
use crate::model::{classify, GraphPattern, UniformHypergraph};
use crate::saturation::{greedy_complete, GreedyOrder, GreedyOutcome};

/// Greedy colex completion of a free base; `added` lists what was added.
pub fn construct_then_saturate(base: &UniformHypergraph, pattern: &GraphPattern) -> Result<GreedyOutcome> {
    greedy_complete(base, pattern, GreedyOrder::Colex)
}

fn greedy_from_empty(n: usize, r: usize, pattern: &GraphPattern, method: Method, checks: Vec<String>) -> Result<Construction> {
    let empty = UniformHypergraph::empty(n, r)?;
    Ok(Construction {
        method,
        hypergraph: greedy_complete(&empty, pattern, GreedyOrder::Colex)?.hypergraph,
        layout: None,
        checks,
    })
}

/// Runs one named construction.
pub fn construct_with(method: Method, n: usize, r: usize, pattern: &GraphPattern) -> Result<Construction> {
    let classes = || {
        if !pattern.is_graph() {
            return Err(BergeError::Precondition("needs a graph pattern".into()));
        }
        classify(pattern)?
            .multipartite_classes
            .ok_or_else(|| BergeError::Precondition("needs a complete multipartite pattern".into()))
    };
    match method {
        Method::MultipartiteCase1 => construct_multipartite_case1(n, r, &classes()?),
        Method::MultipartiteCase2 => construct_multipartite_case2(n, r, &classes()?),
        Method::IsolatedEdge => construct_isolated_edge(n, r, pattern),
        Method::Fgood => construct_fgood(n, r, pattern).map(|(c, _)| c),
        Method::CutEdge => construct_cut_edge(n, r, pattern),
        Method::Oversaturated => construct_oversaturated(n, r, pattern),
        Method::GreedyColex => {
            let report = classify(pattern)?;
            let mut checks = Vec::new();
            require(r == 2, &mut checks, format!("r = 2 (r = {r})"))?;
            let (delta, kappa) = (report.degree_profile.min_degree, report.vertex_connectivity);
            require(delta == kappa, &mut checks, format!("min degree = connectivity ({delta} = {kappa})"))?;
            greedy_from_empty(n, r, pattern, method, checks)
        }
        Method::Fallback => greedy_from_empty(n, r, pattern, method, Vec::new()),
    }
}

/// Tries the constructions in priority order and falls back to unguaranteed
/// greedy completion. Skipped candidates are recorded in `checks`.
pub fn auto_construct(n: usize, r: usize, pattern: &GraphPattern) -> Result<Construction> {
    let mut skipped = Vec::new();
    if pattern.is_graph() {
        let report = classify(pattern)?;
        let v = pattern.vertex_count();
        let mut route = Vec::new();
        if let Some(k) = &report.multipartite_classes {
            let total: usize = k.iter().sum();
            route.push(if r + 3 <= total {
                Method::MultipartiteCase1
            } else {
                Method::MultipartiteCase2
            });
        }
        if report.isolated_edge.is_some() && !report.has_isolated_vertex {
            route.push(Method::IsolatedEdge);
        }
        if report.is_type_one && v >= 7 && r >= 6 && report.degree_profile.delta2 >= 1 {
            route.push(Method::Fgood);
        }
        if r == 2 && report.degree_profile.min_degree == report.vertex_connectivity {
            route.push(Method::GreedyColex);
        }
        if report.is_connected && report.cut_edge.is_some() && !report.is_star && r >= pattern.edge_count() {
            route.push(Method::CutEdge);
        }
        for method in route {
            match construct_with(method, n, r, pattern) {
                Ok(mut c) => {
                    skipped.append(&mut c.checks);
                    c.checks = skipped;
                    return Ok(c);
                }
                Err(e) => skipped.push(format!("skipped {method}: {e}")),
            }
        }
    }
    greedy_from_empty(n, r, pattern, Method::Fallback, skipped)
}
