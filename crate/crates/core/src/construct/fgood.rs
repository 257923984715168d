//! F-good hypergraphs for type I patterns.
//!
//! The layout is `C` (`v − 2` vertices), equal blocks and a remainder. Every
//! hyperedge outside `C` is `A ∪ B_i` with `A ⊂ C`, and every block vertex
//! has degree `δ = d₂ − 1`. Any two blocks together with the hyperedges
//! through them host `F′`, and two blocks can always be avoided while `C`
//! still carries a Berge clique. Such a hypergraph is free, and any `r`-set
//! meeting two blocks completes a copy.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{require, subsets_of, Construction, Method};
use crate::engine::{BergeEngine, BergeWitness, Constraints, HostIndex};
use crate::error::{BergeError, Result};
use crate::model::colex::colex_enumerate;
use crate::model::{classify, make_layout, BlockLayout, GraphPattern, Hyperedge, UniformHypergraph};
use crate::par;
use crate::saturation::VerifyMode;

use super::multipartite::cyclic_order;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeOneContext {
    pub u1: usize,
    pub u2: usize,
    pub d1: usize,
    pub d2: usize,
    pub delta2: usize,
    /// `N(u₁) ∩ N(u₂)`.
    pub common: Vec<usize>,
    pub d: usize,
    /// Edges at `u₁` or `u₂` other than `u₁u₂`, as indices into the pattern.
    pub f_prime: Vec<usize>,
}

impl TypeOneContext {
    /// `F′` relabelled so that `u₁ ↦ 0`, `u₂ ↦ 1`, then the other touched
    /// vertices ascending.
    pub fn f_prime_pattern(&self, pattern: &GraphPattern) -> Result<GraphPattern> {
        let mut vertices = vec![self.u1, self.u2];
        let mut rest: Vec<usize> = self
            .f_prime
            .iter()
            .flat_map(|&i| pattern.edges()[i].iter().copied())
            .filter(|&x| x != self.u1 && x != self.u2)
            .collect();
        rest.sort_unstable();
        rest.dedup();
        vertices.extend(rest);
        pattern.induced_by_edges(&vertices, &self.f_prime)
    }
}

pub fn build_type_one_context(pattern: &GraphPattern) -> Result<TypeOneContext> {
    let report = classify(pattern)?;
    let (u1, u2) = report
        .type_one_witness
        .ok_or_else(|| BergeError::Precondition("needs a type I pattern".into()))?;
    let adj = pattern.adjacency();
    let common: Vec<usize> = (0..pattern.vertex_count()).filter(|&x| adj[u1][x] && adj[u2][x]).collect();
    let f_prime = pattern
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| (e.contains(&u1) || e.contains(&u2)) && !(e.contains(&u1) && e.contains(&u2)))
        .map(|(i, _)| i)
        .collect();
    let (d1, d2) = (pattern.degree(u1), pattern.degree(u2));
    Ok(TypeOneContext {
        u1,
        u2,
        d1,
        d2,
        delta2: d2 - 1,
        d: common.len(),
        common,
        f_prime,
    })
}

/// Pairs on `cycle` closing up cyclically. Cycles of length 1 or 2 would
/// repeat a pair, so they borrow `spare` instead.
fn cycle_pairs(cycle: &[usize], spare: usize) -> Vec<[usize; 2]> {
    match cycle {
        [] => Vec::new(),
        [a] => vec![[*a, spare]],
        [a, b] => vec![[*a, *b], [*b, spare]],
        _ => (0..cycle.len()).map(|i| [cycle[i], cycle[(i + 1) % cycle.len()]]).collect(),
    }
}

/// Spare vertex for a short cycle: the lowest core vertex outside every
/// role, else the lowest one outside the cycle itself.
fn spare_for(core_len: usize, used: usize, cycle: &[usize]) -> usize {
    if used < core_len {
        used
    } else {
        (0..core_len).find(|x| !cycle.contains(x)).expect("core has at least 5 vertices")
    }
}

/// Colex-least `k`-subset of `0..c` containing `required` and not yet taken.
fn least_superset(c: usize, k: usize, required: &[usize], taken: &[Vec<usize>]) -> Option<Vec<usize>> {
    colex_enumerate(c, k)
        .ok()?
        .find(|s| required.iter().all(|x| s.contains(x)) && !taken.contains(s))
}

/// The `δ` core parts `A ⊂ C` for block `h` (core positions, not vertices).
fn block_parts(ctx: &TypeOneContext, c: usize, k: usize, h: usize, pairs: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let delta = ctx.delta2;
    let e = &pairs[h % pairs.len()];
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(delta);
    let short = || BergeError::Precondition("needs enough distinct core parts per block".into());
    if ctx.d > 0 {
        // x₁ = 0, D = 0..d
        let mut req = e.clone();
        if !req.contains(&0) {
            req.push(0);
        }
        parts.push(least_superset(c, k, &req, &parts).ok_or_else(short)?);
        for l in 1..ctx.d {
            parts.push(least_superset(c, k, &[0, l], &parts).ok_or_else(short)?);
        }
        // (c−2)-subsets of C∖{x₁}, each missing one vertex; those missing a
        // member of D come first
        let omit = (1..ctx.d).chain(ctx.d..c);
        for skip in omit.take(delta - ctx.d) {
            parts.push((1..c).filter(|&x| x != skip).collect());
        }
    } else {
        let pi = cyclic_order(&(0..c).collect::<Vec<_>>(), e);
        for l in 0..delta {
            let mut a: Vec<usize> = (0..k).map(|t| pi[(l + t) % c]).collect();
            a.sort_unstable();
            parts.push(a);
        }
    }
    if parts.len() != delta {
        return Err(short());
    }
    Ok(parts)
}

/// Parts for Case I (`r ≤ v − 4`): two cycles and a matching on `C`.
fn small_r_parts(ctx: &TypeOneContext, c: usize) -> Result<Vec<Vec<usize>>> {
    let d = ctx.d;
    let private1 = ctx.d1 - 1 - d;
    let tail = ctx.delta2 + 1 - ctx.d1;
    let used = d + 2 * private1 + tail;
    if used > c {
        return Err(BergeError::Precondition(format!(
            "needs roles to fit in C ({used} <= {c})"
        )));
    }
    let xs: Vec<usize> = (0..d).collect();
    let zs: Vec<usize> = (d + 2 * private1..used).collect();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    parts.extend(cycle_pairs(&xs, spare_for(c, used, &xs)).iter().map(|p| p.to_vec()));
    parts.extend((0..private1).map(|l| vec![d + 2 * l, d + 2 * l + 1]));
    parts.extend(cycle_pairs(&zs, spare_for(c, used, &zs)).iter().map(|p| p.to_vec()));
    for p in &mut parts {
        p.sort_unstable();
    }
    Ok(parts)
}

pub fn construct_fgood(n: usize, r: usize, pattern: &GraphPattern) -> Result<(Construction, TypeOneContext)> {
    let ctx = build_type_one_context(pattern)?;
    let v = pattern.vertex_count();
    let mut checks = vec![format!("type I witness ({},{})", ctx.u1, ctx.u2)];
    require(v >= 7, &mut checks, format!("v >= 7 (v = {v})"))?;
    require(ctx.delta2 >= 1, &mut checks, format!("delta2 >= 1 (delta2 = {})", ctx.delta2))?;
    require(r >= 6, &mut checks, format!("r >= 6 (r = {r})"))?;
    let c = v - 2;
    let core: Vec<usize> = (0..c).collect();
    let pairs: Vec<Vec<usize>> = colex_enumerate(c, 2)?.collect();
    let small = r + 4 <= v;
    let (b, min_blocks) = if small { (r - 2, 2) } else { (r + 4 - v, 3 * pairs.len()) };
    checks.push(if small { "case r <= v - 4".into() } else { "case r > v - 4".into() });
    require(n >= c + b, &mut checks, format!("n >= v - 2 + b ({n} >= {})", c + b))?;
    let layout = make_layout(n, b, c)?;
    require(
        layout.block_count() >= min_blocks,
        &mut checks,
        format!("m >= {min_blocks} (m = {})", layout.block_count()),
    )?;

    let mut edges = Vec::new();
    let fixed_parts = if small {
        edges.extend(subsets_of(&core, r));
        Some(small_r_parts(&ctx, c)?)
    } else {
        None
    };
    for (h, block) in layout.blocks.iter().enumerate() {
        let parts = match &fixed_parts {
            Some(p) => p.clone(),
            None => block_parts(&ctx, c, v - 4, h, &pairs)?,
        };
        for a in parts {
            let mut set: Vec<usize> = a.iter().map(|&i| core[i]).collect();
            set.extend(block);
            edges.push(Hyperedge::new(set));
        }
    }
    let count = edges.len();
    let hypergraph = UniformHypergraph::from_unsorted(n, r, edges);
    require(
        hypergraph.edge_count() == count,
        &mut checks,
        "block hyperedges are distinct".into(),
    )?;
    let construction = Construction {
        method: Method::Fgood,
        hypergraph,
        layout: Some(layout),
        checks,
    };
    Ok((construction, ctx))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub blocks: (usize, usize),
    pub witness: BergeWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FGoodCertificate {
    pub layout: BlockLayout,
    pub item1_ok: bool,
    pub item2_ok: bool,
    pub item3_ok: bool,
    pub item4_ok: bool,
    /// Berge-F′ per checked block pair, with `y, y′` the first vertices of
    /// the two blocks (block vertices are twins once item 1 holds).
    pub item3_witnesses: Vec<PairWitness>,
    /// Berge clique on `C` avoiding both blocks, per checked pair.
    pub item4_witnesses: Vec<PairWitness>,
    pub pairs_checked: usize,
    pub sampled: bool,
}

impl FGoodCertificate {
    pub fn all_ok(&self) -> bool {
        self.item1_ok && self.item2_ok && self.item3_ok && self.item4_ok
    }
}

pub fn verify_fgood(
    host: &UniformHypergraph,
    layout: &BlockLayout,
    pattern: &GraphPattern,
    ctx: &TypeOneContext,
    mode: VerifyMode,
) -> Result<FGoodCertificate> {
    layout.validate(host.vertex_count())?;
    let block_of = layout.block_of();
    let core = layout.core_mask();
    let item1_ok = host.edges().iter().all(|e| {
        let outside: Vec<usize> = e.vertices().iter().copied().filter(|&x| !core[x]).collect();
        match outside.first() {
            None => true,
            Some(&x) => block_of[x].is_some_and(|i| layout.blocks[i] == outside),
        }
    });
    let item2_ok = layout.blocks.iter().flatten().all(|&x| host.degree(x) == ctx.delta2);

    let m = layout.block_count();
    let mut pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let sampled = match mode {
        VerifyMode::Exhaustive => false,
        VerifyMode::Sampled { samples, seed } => {
            pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            pairs.truncate(samples);
            pairs.sort_unstable();
            true
        }
    };

    let f_prime = BergeEngine::new(ctx.f_prime_pattern(pattern)?)?;
    let k_core = BergeEngine::new(GraphPattern::complete(layout.core.len()))?;
    let results = par::map(&pairs, |&(i, j)| {
        let (y, y2) = (layout.blocks[i][0], layout.blocks[j][0]);
        let near = host.filter(|e| e.contains(y) || e.contains(y2));
        let mut fixed = vec![None; f_prime.pattern().vertex_count()];
        fixed[0] = Some(y);
        fixed[1] = Some(y2);
        let constraints = Constraints {
            fixed,
            allowed: Some(core.clone()),
        };
        let w3 = f_prime.find(&HostIndex::new(&near), &constraints, false);

        let far = host.filter(|e| !e.intersects(&layout.blocks[i]) && !e.intersects(&layout.blocks[j]));
        let constraints = Constraints {
            fixed: layout.core.iter().map(|&x| Some(x)).collect(),
            allowed: None,
        };
        let w4 = k_core.find(&HostIndex::new(&far), &constraints, false);
        (w3, w4)
    });
    let mut cert = FGoodCertificate {
        layout: layout.clone(),
        item1_ok,
        item2_ok,
        item3_ok: true,
        item4_ok: true,
        item3_witnesses: Vec::new(),
        item4_witnesses: Vec::new(),
        pairs_checked: pairs.len(),
        sampled,
    };
    for (&blocks, (w3, w4)) in pairs.iter().zip(results) {
        match w3 {
            Some(witness) => cert.item3_witnesses.push(PairWitness { blocks, witness }),
            None => cert.item3_ok = false,
        }
        match w4 {
            Some(witness) => cert.item4_witnesses.push(PairWitness { blocks, witness }),
            None => cert.item4_ok = false,
        }
    }
    if m < 2 {
        // no pair exists to host F′ or to avoid
        cert.item3_ok = false;
        cert.item4_ok = false;
    }
    Ok(cert)
}
