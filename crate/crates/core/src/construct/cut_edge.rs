//! Connected non-star patterns with a cut-edge, for `r ≥ e(F)`. Blocks of
//! `r + 1` vertices each carry `e(F) − 1` of their `r`-subsets, so every
//! component is too small for a copy. An `r`-set across two blocks plays the
//! cut-edge.

use super::{require, Construction, Method};
use crate::engine::{BergeEngine, HostIndex};
use crate::error::Result;
use crate::model::{classify, make_layout, BlockLayout, GraphPattern, Hyperedge, UniformHypergraph};
use crate::par;

pub fn construct_cut_edge(n: usize, r: usize, pattern: &GraphPattern) -> Result<Construction> {
    let report = classify(pattern)?;
    let e = pattern.edge_count();
    let mut checks = Vec::new();
    require(report.is_connected, &mut checks, "connected pattern".into())?;
    require(report.cut_edge.is_some(), &mut checks, "a cut-edge".into())?;
    require(!report.is_star, &mut checks, "a non-star pattern".into())?;
    require(r >= e, &mut checks, format!("r >= e(F) ({r} >= {e})"))?;
    require(n > r, &mut checks, format!("n >= r + 1 ({n} >= {})", r + 1))?;
    let layout = make_layout(n, r + 1, 0)?;
    let mut edges = Vec::new();
    for block in &layout.blocks {
        for &skip in &block[..e - 1] {
            edges.push(Hyperedge::new(block.iter().copied().filter(|&x| x != skip).collect()));
        }
    }
    Ok(Construction {
        method: Method::CutEdge,
        hypergraph: UniformHypergraph::from_unsorted(n, r, edges),
        layout: Some(layout),
        checks,
    })
}

/// Absent `r`-sets meeting two blocks whose addition creates no copy.
pub fn cross_block_failures(
    host: &UniformHypergraph,
    layout: &BlockLayout,
    pattern: &GraphPattern,
    candidates: &[Hyperedge],
) -> Result<Vec<Hyperedge>> {
    let engine = BergeEngine::new(pattern.clone())?;
    let index = HostIndex::new(host);
    let block_of = layout.block_of();
    let cross: Vec<&Hyperedge> = candidates
        .iter()
        .filter(|h| !host.contains(h) && meets_two_blocks(h, &block_of))
        .collect();
    let verdicts = par::map(&cross, |h| engine.creates_indexed(&index, h, false).is_none());
    Ok(cross
        .into_iter()
        .zip(verdicts)
        .filter(|(_, bad)| *bad)
        .map(|(h, _)| h.clone())
        .collect())
}

pub(crate) fn meets_two_blocks(h: &Hyperedge, block_of: &[Option<usize>]) -> bool {
    let mut seen = None;
    for &x in h.vertices() {
        if let Some(b) = block_of[x] {
            match seen {
                None => seen = Some(b),
                Some(s) if s != b => return true,
                _ => {}
            }
        }
    }
    false
}
