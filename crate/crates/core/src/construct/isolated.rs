//! Patterns with an isolated edge `(u₁, u₂)` and no isolated vertex. The
//! rest `F′` sits on a core `C` of `v − 2` vertices; any `r`-set with two
//! vertices outside `C` then plays `(u₁, u₂)`.

use super::{require, subsets_of, Construction, Method};
use crate::error::{BergeError, Result};
use crate::model::{classify, BlockLayout, GraphPattern, Hyperedge, UniformHypergraph};
use crate::saturation::greedy_over;

/// `r`-sets with at most one vertex outside `core`, in colex order.
fn core_plus_one(n: usize, core: &[usize], r: usize) -> Vec<Hyperedge> {
    let mut out = subsets_of(core, r);
    let inner = subsets_of(core, r - 1);
    for x in core.len()..n {
        out.extend(inner.iter().map(|s| {
            let mut v = s.vertices().to_vec();
            v.push(x);
            Hyperedge::new(v)
        }));
    }
    out
}

pub fn construct_isolated_edge(n: usize, r: usize, pattern: &GraphPattern) -> Result<Construction> {
    let report = classify(pattern)?;
    let mut checks = Vec::new();
    require(!report.has_isolated_vertex, &mut checks, "no isolated vertex".into())?;
    let (u1, u2) = report
        .isolated_edge
        .ok_or_else(|| BergeError::Precondition("needs an isolated edge".into()))?;
    checks.push(format!("isolated edge ({u1},{u2})"));
    require(r >= 3, &mut checks, format!("r >= 3 (r = {r})"))?;
    let v = pattern.vertex_count();
    require(n >= v, &mut checks, format!("n >= v ({n} >= {v})"))?;

    // F′ on C = 0..v−2, keeping the other vertices in their original order.
    let others: Vec<usize> = (0..v).filter(|&x| x != u1 && x != u2).collect();
    let kept: Vec<usize> = pattern
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| !(e.contains(&u1) && e.contains(&u2)))
        .map(|(i, _)| i)
        .collect();
    let f_prime = pattern.induced_by_edges(&others, &kept)?;
    let core: Vec<usize> = (0..v - 2).collect();
    let layout = BlockLayout {
        core: core.clone(),
        blocks: Vec::new(),
        rest: (v - 2..n).collect(),
    };

    let hypergraph = if r < v {
        checks.push("sub-case r <= v - 1".into());
        let pool = core_plus_one(n, &core, r);
        let mut used = vec![false; pool.len()];
        let mut base = Vec::new();
        for e in f_prime.edges() {
            let slot = (0..pool.len())
                .find(|&i| !used[i] && pool[i].is_superset_of(e))
                .ok_or_else(|| {
                    BergeError::Precondition(format!(
                        "no Berge copy of F minus the isolated edge fits (edge {e:?}, n = {n})"
                    ))
                })?;
            used[slot] = true;
            base.push(pool[slot].clone());
        }
        let base = UniformHypergraph::from_unsorted(n, r, base);
        greedy_over(&base, pattern, pool)?.hypergraph
    } else {
        checks.push("sub-case r >= v".into());
        require(n >= r + 2, &mut checks, format!("n >= r + 2 ({n} >= {})", r + 2))?;
        let need = pattern.edge_count() - 1;
        let outside: Vec<usize> = (v - 2..n).collect();
        let picks: Vec<Hyperedge> = subsets_of(&outside, r + 2 - v)
            .into_iter()
            .take(need)
            .map(|t| {
                let mut s = core.clone();
                s.extend(t.vertices());
                Hyperedge::new(s)
            })
            .collect();
        require(
            picks.len() == need,
            &mut checks,
            format!("{need} r-sets contain C (found {})", picks.len()),
        )?;
        UniformHypergraph::from_unsorted(n, r, picks)
    };
    Ok(Construction {
        method: Method::IsolatedEdge,
        hypergraph,
        layout: Some(layout),
        checks,
    })
}
