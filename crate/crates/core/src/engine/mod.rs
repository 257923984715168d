//! Berge-copy detection.

mod index;
mod oracle;
mod search;
mod symmetry;
mod witness;

pub use index::HostIndex;
pub use oracle::brute_force_contains;
pub use search::Constraints;
pub use symmetry::{oriented_edge_representatives, OrientedEdge};
pub use witness::BergeWitness;

use search::{HostView, Search};

use crate::error::{BergeError, Result};
use crate::model::{GraphPattern, Hyperedge, UniformHypergraph};
use crate::par;

/// A pattern prepared for repeated searches: validated once, with its
/// oriented-edge orbit representatives cached.
#[derive(Debug, Clone)]
pub struct BergeEngine {
    pattern: GraphPattern,
    seeds: Vec<OrientedEdge>,
}

impl BergeEngine {
    pub fn new(pattern: GraphPattern) -> Result<Self> {
        if pattern.edge_count() == 0 {
            return Err(BergeError::EmptyPattern);
        }
        let seeds = oriented_edge_representatives(&pattern);
        Ok(BergeEngine { pattern, seeds })
    }

    pub fn pattern(&self) -> &GraphPattern {
        &self.pattern
    }

    pub fn check_uniformity(&self, r: usize) -> Result<()> {
        if self.pattern.uniformity() > r {
            return Err(BergeError::UniformityMismatch {
                pattern: self.pattern.uniformity(),
                host: r,
            });
        }
        Ok(())
    }

    pub fn contains(&self, host: &UniformHypergraph) -> Result<Option<BergeWitness>> {
        self.check_uniformity(host.uniformity())?;
        Ok(self.contains_indexed(&HostIndex::new(host), true))
    }

    pub fn contains_indexed(&self, index: &HostIndex, parallel: bool) -> Option<BergeWitness> {
        self.find(index, &Constraints::none(), parallel)
    }

    /// Constrained search over an indexed host.
    pub fn find(&self, index: &HostIndex, constraints: &Constraints, parallel: bool) -> Option<BergeWitness> {
        let view = HostView { index, extra: None };
        Search::new(view, &self.pattern, constraints, None).run(parallel)
    }

    /// A Berge copy in `host ∪ {h}` that uses `h`.
    pub fn creates(&self, host: &UniformHypergraph, h: &Hyperedge) -> Result<Option<BergeWitness>> {
        self.check_uniformity(host.uniformity())?;
        let h = host.check_edge(h.vertices().to_vec())?;
        if host.contains(&h) {
            return Err(BergeError::AlreadyPresent(h.to_string()));
        }
        Ok(self.creates_indexed(&HostIndex::new(host), &h, true))
    }

    /// As [`BergeEngine::creates`] on a prebuilt index; `h` must be a new,
    /// valid hyperedge of the indexed host.
    ///
    /// Every such copy maps some pattern edge onto `h`. Up to pattern
    /// symmetry that edge is one of the cached orbit representatives, and
    /// its vertices land on an ordered tuple of `h`; each (representative,
    /// tuple) pair seeds one constrained search.
    pub fn creates_indexed(&self, index: &HostIndex, h: &Hyperedge, parallel: bool) -> Option<BergeWitness> {
        if index.edge_count() + 1 < self.pattern.edge_count() || index.vertex_count() < self.pattern.vertex_count() {
            return None;
        }
        let view = HostView { index, extra: Some(h) };
        let extra_id = index.edge_count() as u32;
        let u = self.pattern.uniformity();
        let mut jobs: Vec<(usize, Vec<usize>)> = Vec::new();
        for (s, seed) in self.seeds.iter().enumerate() {
            for tuple in injective_tuples(h.vertices(), u) {
                let fits = seed
                    .tuple
                    .iter()
                    .zip(&tuple)
                    .all(|(&p, &x)| index.degree(x) + 1 >= self.pattern.degree(p));
                if fits {
                    jobs.push((s, tuple));
                }
            }
        }
        let run = |job: &(usize, Vec<usize>)| {
            let seed = &self.seeds[job.0];
            let mut fixed = vec![None; self.pattern.vertex_count()];
            for (&p, &x) in seed.tuple.iter().zip(&job.1) {
                fixed[p] = Some(x);
            }
            let constraints = Constraints { fixed, allowed: None };
            Search::new(view, &self.pattern, &constraints, Some((seed.edge, extra_id))).run(false)
        };
        if parallel {
            par::find_map_first(&jobs, run)
        } else {
            jobs.iter().find_map(run)
        }
    }
}

/// Ordered `k`-tuples of distinct elements, lexicographic by position.
fn injective_tuples(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; items.len()];
    fn rec(items: &[usize], k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                cur.push(items[i]);
                rec(items, k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(items, k, &mut cur, &mut used, &mut out);
    out
}

pub fn contains_berge(host: &UniformHypergraph, pattern: &GraphPattern) -> Result<Option<BergeWitness>> {
    BergeEngine::new(pattern.clone())?.contains(host)
}

pub fn is_berge_free(host: &UniformHypergraph, pattern: &GraphPattern) -> Result<bool> {
    Ok(contains_berge(host, pattern)?.is_none())
}

pub fn creates_berge(host: &UniformHypergraph, pattern: &GraphPattern, h: &Hyperedge) -> Result<Option<BergeWitness>> {
    BergeEngine::new(pattern.clone())?.creates(host, h)
}
