use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{BergeError, Result};
use crate::model::colex::{binomial, colex_unrank};
use crate::model::{Hyperedge, UniformHypergraph};

/// Generator behind every seeded choice in this crate: ChaCha8 seeded with
/// `seed_from_u64`, drawing uniform colex ranks.
pub const SAMPLER_NAME: &str = "chacha8-colex-rank";

/// Up to `k` distinct absent `r`-sets accepted by `accept`, drawn uniformly
/// by colex rank from `seed`, returned in colex order. Gives up after
/// `64·k + 1024` draws, so sparse filters may yield fewer than `k`.
pub fn sample_absent<F>(host: &UniformHypergraph, k: usize, seed: u64, accept: F) -> Result<Vec<Hyperedge>>
where
    F: Fn(&Hyperedge) -> bool,
{
    let total = binomial(host.vertex_count(), host.uniformity())
        .ok_or_else(|| BergeError::Overflow(format!("C({}, {})", host.vertex_count(), host.uniformity())))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<Hyperedge> = Vec::with_capacity(k);
    let max_draws = 64 * k as u64 + 1024;
    let mut draws = 0;
    while picked.len() < k && draws < max_draws && total > 0 {
        draws += 1;
        let set = Hyperedge::new(colex_unrank(rng.gen_range(0..total), host.uniformity()));
        if host.contains(&set) || picked.contains(&set) || !accept(&set) {
            continue;
        }
        picked.push(set);
    }
    picked.sort();
    Ok(picked)
}
