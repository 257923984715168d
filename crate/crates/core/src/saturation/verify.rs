use serde::Serialize;

use super::sample::sample_absent;
use crate::engine::{BergeEngine, BergeWitness, HostIndex};
use crate::error::{BergeError, Result};
use crate::model::colex::colex_enumerate;
use crate::model::{GraphPattern, Hyperedge, UniformHypergraph};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub is_free: bool,
    pub free_violation: Option<BergeWitness>,
    pub is_saturated: bool,
    /// An absent `r`-set whose addition creates no Berge copy.
    pub saturation_violation: Option<Hyperedge>,
    pub checked_count: usize,
    pub sampled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OversaturationReport {
    pub is_oversaturated: bool,
    /// An absent `r`-set that completes no Berge copy with the host.
    pub violation: Option<Hyperedge>,
    pub checked_count: usize,
    pub sampled: bool,
}

const CHUNK: usize = 2048;

/// First absent set (in the mode's canonical order) for which `creates`
/// fails, plus how many sets were examined up to and including it.
fn first_failure<F>(host: &UniformHypergraph, mode: VerifyMode, fails: F) -> Result<(Option<Hyperedge>, usize)>
where
    F: Fn(&Hyperedge) -> bool + Sync + Send,
{
    match mode {
        VerifyMode::Sampled { samples, seed } => {
            let sets = sample_absent(host, samples, seed, |_| true)?;
            let hit = par::find_map_first(&sets, |h| fails(h).then(|| h.clone()));
            let checked = match &hit {
                Some(h) => sets.iter().position(|s| s == h).map_or(sets.len(), |p| p + 1),
                None => sets.len(),
            };
            Ok((hit, checked))
        }
        VerifyMode::Exhaustive => {
            let mut stream = colex_enumerate(host.vertex_count(), host.uniformity())?
                .map(Hyperedge::new)
                .filter(|h| !host.contains(h));
            let mut checked = 0;
            loop {
                let chunk: Vec<Hyperedge> = stream.by_ref().take(CHUNK).collect();
                if chunk.is_empty() {
                    return Ok((None, checked));
                }
                let hit = par::find_map_first(&chunk, |h| fails(h).then(|| h.clone()));
                if let Some(h) = hit {
                    let pos = chunk.iter().position(|s| *s == h).expect("hit comes from chunk");
                    return Ok((Some(h), checked + pos + 1));
                }
                checked += chunk.len();
            }
        }
    }
}

/// Berge-F-free, and every absent `r`-set creates a Berge-F.
pub fn verify_saturated(host: &UniformHypergraph, pattern: &GraphPattern, mode: VerifyMode) -> Result<SaturationReport> {
    let engine = BergeEngine::new(pattern.clone())?;
    engine.check_uniformity(host.uniformity())?;
    let index = HostIndex::new(host);
    let sampled = matches!(mode, VerifyMode::Sampled { .. });
    if let Some(w) = engine.contains_indexed(&index, true) {
        return Ok(SaturationReport {
            is_free: false,
            free_violation: Some(w),
            is_saturated: false,
            saturation_violation: None,
            checked_count: 0,
            sampled,
        });
    }
    let (violation, checked_count) =
        first_failure(host, mode, |h| engine.creates_indexed(&index, h, false).is_none())?;
    Ok(SaturationReport {
        is_free: true,
        free_violation: None,
        is_saturated: violation.is_none(),
        saturation_violation: violation,
        checked_count,
        sampled,
    })
}

/// Every absent `r`-set `h` completes a Berge-F whose hyperedges are `h`
/// and `e(F) − 1` hyperedges of the host. Freeness is not required.
pub fn verify_oversaturated(
    host: &UniformHypergraph,
    pattern: &GraphPattern,
    mode: VerifyMode,
) -> Result<OversaturationReport> {
    if host.uniformity() <= pattern.uniformity() {
        return Err(BergeError::Precondition(format!(
            "oversaturation needs host uniformity {} above core uniformity {}",
            host.uniformity(),
            pattern.uniformity()
        )));
    }
    let engine = BergeEngine::new(pattern.clone())?;
    let index = HostIndex::new(host);
    let (violation, checked_count) =
        first_failure(host, mode, |h| engine.creates_indexed(&index, h, false).is_none())?;
    Ok(OversaturationReport {
        is_oversaturated: violation.is_none(),
        violation,
        checked_count,
        sampled: matches!(mode, VerifyMode::Sampled { .. }),
    })
}
