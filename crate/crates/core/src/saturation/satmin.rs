//! Exact `sat_r(n, F)` by increasing-size exhaustive search over hyperedge
//! subsets. A subset containing a Berge copy is never extended, since every
//! saturated hypergraph is free and so are all its subsets.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use super::greedy::{greedy_complete, GreedyOrder};
use crate::engine::{BergeEngine, HostIndex};
use crate::error::{BergeError, Result};
use crate::guard::SizeGuard;
use crate::model::colex::{binomial_saturating, colex_enumerate};
use crate::model::{GraphPattern, Hyperedge, UniformHypergraph};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatMin {
    pub value: usize,
    /// Colex-least minimum witness (subsets compared by colex on their
    /// hyperedge ranks).
    pub witness: UniformHypergraph,
    pub explored: u64,
}

struct Ctx<'a> {
    all: &'a [Hyperedge],
    engine: &'a BergeEngine,
    n: usize,
    r: usize,
    budget: Option<u64>,
    explored: AtomicU64,
    aborted: AtomicBool,
}

impl Ctx<'_> {
    fn tick(&self) -> bool {
        let seen = self.explored.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.is_some_and(|b| seen > b) {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    fn index_of(&self, chosen: &[usize]) -> HostIndex {
        let h = UniformHypergraph::from_unsorted(self.n, self.r, chosen.iter().map(|&i| self.all[i].clone()).collect());
        HostIndex::new(&h)
    }

    fn is_saturated(&self, chosen: &[usize]) -> bool {
        let index = self.index_of(chosen);
        (0..self.all.len())
            .filter(|i| !chosen.contains(i))
            .all(|i| self.engine.creates_indexed(&index, &self.all[i], false).is_some())
    }

    /// `chosen` holds rank indices in decreasing order; the next index is
    /// strictly below the last one, scanned upward so that subsets come out
    /// in colex order.
    fn extend(&self, chosen: &mut Vec<usize>, left: usize) -> Option<Vec<usize>> {
        if !self.tick() {
            return None;
        }
        if left == 0 {
            return self.is_saturated(chosen).then(|| chosen.clone());
        }
        let below = *chosen.last().expect("top element chosen first");
        let index = self.index_of(chosen);
        for i in left - 1..below {
            if self.engine.creates_indexed(&index, &self.all[i], false).is_some() {
                continue;
            }
            chosen.push(i);
            let found = self.extend(chosen, left - 1);
            chosen.pop();
            if found.is_some() {
                return found;
            }
            if self.aborted.load(Ordering::Relaxed) {
                return None;
            }
        }
        None
    }
}

pub fn min_saturation(
    n: usize,
    r: usize,
    pattern: &GraphPattern,
    budget: Option<u64>,
    guard: &SizeGuard,
) -> Result<SatMin> {
    let space = binomial_saturating(n, r);
    if space > guard.satmin_space {
        return Err(BergeError::SizeGuard(format!(
            "C({n}, {r}) = {space} exceeds the exact-search limit {}",
            guard.satmin_space
        )));
    }
    let engine = BergeEngine::new(pattern.clone())?;
    engine.check_uniformity(r)?;
    let empty = UniformHypergraph::empty(n, r)?;
    let upper = greedy_complete(&empty, pattern, GreedyOrder::Colex)?.hypergraph.edge_count();
    let all: Vec<Hyperedge> = colex_enumerate(n, r)?.map(Hyperedge::new).collect();
    let ctx = Ctx {
        all: &all,
        engine: &engine,
        n,
        r,
        budget,
        explored: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
    };
    for k in 0..=upper.min(guard.satmin_value) {
        let found = if k == 0 {
            ctx.tick();
            ctx.is_saturated(&[]).then(Vec::new)
        } else {
            let tops: Vec<usize> = (k - 1..all.len()).collect();
            par::find_map_first(&tops, |&top| {
                let index = ctx.index_of(&[]);
                if ctx.engine.creates_indexed(&index, &all[top], false).is_some() {
                    return None;
                }
                ctx.extend(&mut vec![top], k - 1)
            })
        };
        let explored = ctx.explored.load(Ordering::Relaxed);
        if ctx.aborted.load(Ordering::Relaxed) {
            return Err(BergeError::BudgetExceeded {
                explored,
                lower: k,
                upper,
            });
        }
        if let Some(chosen) = found {
            let edges = chosen.iter().map(|&i| all[i].clone()).collect();
            return Ok(SatMin {
                value: k,
                witness: UniformHypergraph::from_unsorted(n, r, edges),
                explored,
            });
        }
    }
    Err(BergeError::BudgetExceeded {
        explored: ctx.explored.load(Ordering::Relaxed),
        lower: guard.satmin_value + 1,
        upper,
    })
}
