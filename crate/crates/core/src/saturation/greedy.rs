use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engine::{BergeEngine, HostIndex};
use crate::error::{BergeError, Result};
use crate::model::colex::{colex_enumerate, lex_enumerate};
use crate::model::{GraphPattern, Hyperedge, UniformHypergraph};

/// Order in which greedy completion considers the `r`-sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyOrder {
    Colex,
    Lex,
    /// The colex stream shuffled by ChaCha8 seeded with this value.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome {
    pub hypergraph: UniformHypergraph,
    /// Hyperedges added on top of the base, in acceptance order.
    pub added: Vec<Hyperedge>,
}

/// Adds each `r`-set in `order` whenever the result stays Berge-F-free.
/// The base must already be free.
pub fn greedy_complete(base: &UniformHypergraph, pattern: &GraphPattern, order: GreedyOrder) -> Result<GreedyOutcome> {
    let (n, r) = (base.vertex_count(), base.uniformity());
    let stream: Box<dyn Iterator<Item = Vec<usize>>> = match order {
        GreedyOrder::Colex => Box::new(colex_enumerate(n, r)?),
        GreedyOrder::Lex => Box::new(lex_enumerate(n, r)?),
        GreedyOrder::Seeded(seed) => {
            let mut all: Vec<Vec<usize>> = colex_enumerate(n, r)?.collect();
            all.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            Box::new(all.into_iter())
        }
    };
    greedy_over(base, pattern, stream.map(Hyperedge::new))
}

/// Greedy completion restricted to the given candidate stream.
pub fn greedy_over<I>(base: &UniformHypergraph, pattern: &GraphPattern, candidates: I) -> Result<GreedyOutcome>
where
    I: IntoIterator<Item = Hyperedge>,
{
    let engine = BergeEngine::new(pattern.clone());
    let engine = match engine {
        Ok(e) => e,
        // nothing can ever create an edgeless pattern's copy... but the empty
        // pattern is contained everywhere, so no base is free
        Err(BergeError::EmptyPattern) => {
            return Err(BergeError::Precondition("greedy completion needs a pattern with edges".into()))
        }
        Err(e) => return Err(e),
    };
    engine.check_uniformity(base.uniformity())?;
    let mut index = HostIndex::new(base);
    if let Some(w) = engine.contains_indexed(&index, true) {
        return Err(BergeError::Precondition(format!(
            "base hypergraph is not Berge-F-free (core {:?})",
            w.core_map
        )));
    }
    let mut out = base.clone();
    let mut added = Vec::new();
    for h in candidates {
        if out.contains(&h) {
            continue;
        }
        if engine.creates_indexed(&index, &h, true).is_none() {
            index.push(h.clone());
            out.insert(h.clone());
            added.push(h);
        }
    }
    Ok(GreedyOutcome { hypergraph: out, added })
}
