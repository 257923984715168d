//! Complete multipartite patterns `K_{k₁,…,k_{s+1}}`: a core `C` of
//! `N = k₁ + … + k_s − 1` vertices, then equal blocks.
//!
//! Small `r` (at most `Σk − 3`) takes every `r`-set inside some `C ∪ B_i`.
//! Large `r` (at least `Σk − 2`) uses blocks of size `r − 2`. Each block gets
//! the `N` hyperedges `{π(j), π(j+1)} ∪ B_i` around a cyclic ordering `π` of
//! `C`, and block `i` is assigned the `C`-edge `e_α`, `α ≡ i`. That edge's
//! endpoints come first in `π`.

use std::collections::BTreeSet;

use super::{require, subsets_of, Construction, Method};
use crate::error::{BergeError, Result};
use crate::model::colex::colex_enumerate;
use crate::model::{make_layout, Hyperedge, UniformHypergraph};

fn sorted_classes(classes: &[usize]) -> Result<Vec<usize>> {
    if classes.len() < 2 || classes.contains(&0) {
        return Err(BergeError::InvalidPattern(format!(
            "need at least two nonempty classes, got {classes:?}"
        )));
    }
    let mut k = classes.to_vec();
    k.sort_unstable();
    Ok(k)
}

/// `(N, k_{s+1}, Σk)`.
fn parameters(k: &[usize]) -> (usize, usize, usize) {
    let total: usize = k.iter().sum();
    let largest = *k.last().expect("two classes");
    ((total - largest).saturating_sub(1), largest, total)
}

pub fn construct_multipartite_case1(n: usize, r: usize, classes: &[usize]) -> Result<Construction> {
    let k = sorted_classes(classes)?;
    let (big_n, largest, total) = parameters(&k);
    let mut checks = Vec::new();
    require(r >= 2, &mut checks, format!("r >= 2 (r = {r})"))?;
    require(r + 3 <= total, &mut checks, format!("r <= sum k - 3 ({r} <= {})", total as i64 - 3))?;
    require(big_n >= 1, &mut checks, format!("N = sum of smaller classes - 1 >= 1 (N = {big_n})"))?;
    require(
        n >= big_n + largest,
        &mut checks,
        format!("n >= N + k_max ({n} >= {})", big_n + largest),
    )?;
    let layout = make_layout(n, largest, big_n)?;
    let mut edges = BTreeSet::new();
    for block in &layout.blocks {
        let mut part = layout.core.clone();
        part.extend(block);
        edges.extend(subsets_of(&part, r));
    }
    Ok(Construction {
        method: Method::MultipartiteCase1,
        hypergraph: UniformHypergraph::from_sorted_unique(n, r, edges.into_iter().collect()),
        layout: Some(layout),
        checks,
    })
}

pub fn construct_multipartite_case2(n: usize, r: usize, classes: &[usize]) -> Result<Construction> {
    let k = sorted_classes(classes)?;
    let (big_n, _, total) = parameters(&k);
    let mut checks = Vec::new();
    require(r + 2 >= total, &mut checks, format!("r >= sum k - 2 ({r} >= {})", total as i64 - 2))?;
    require(big_n >= 2, &mut checks, format!("N = sum of smaller classes - 1 >= 2 (N = {big_n})"))?;
    require(r >= 3, &mut checks, format!("block size r - 2 >= 1 (r = {r})"))?;
    let b = r - 2;
    require(n >= big_n + b, &mut checks, format!("n >= N + r - 2 ({n} >= {})", big_n + b))?;
    let layout = make_layout(n, b, big_n)?;
    let pairs: Vec<Vec<usize>> = colex_enumerate(big_n, 2)?.collect();
    let mut edges = BTreeSet::new();
    for (i, block) in layout.blocks.iter().enumerate() {
        let e = &pairs[i % pairs.len()];
        let pi = cyclic_order(&layout.core, e);
        for j in 0..big_n {
            let mut set = vec![pi[j], pi[(j + 1) % big_n]];
            set.extend(block);
            // N = 2 walks the same pair twice
            edges.insert(Hyperedge::new(set));
        }
    }
    Ok(Construction {
        method: Method::MultipartiteCase2,
        hypergraph: UniformHypergraph::from_sorted_unique(n, r, edges.into_iter().collect()),
        layout: Some(layout),
        checks,
    })
}

/// The endpoints of `e` (positions into `core`, smaller first), then the
/// remaining core vertices ascending.
pub(crate) fn cyclic_order(core: &[usize], e: &[usize]) -> Vec<usize> {
    let mut out = vec![core[e[0]], core[e[1]]];
    out.extend(
        core.iter()
            .enumerate()
            .filter(|(i, _)| !e.contains(i))
            .map(|(_, &x)| x),
    );
    out
}
