//! Backtracking search for Berge copies.
//!
//! Pattern vertices are embedded one at a time. Whenever every vertex of a
//! pattern edge has been placed, the edge joins a bipartite matching against
//! the host hyperedges that contain its image; one augmenting path per new
//! edge keeps the matching maximum, and a failed augmentation prunes the
//! branch. A complete embedding therefore always carries a perfect matching,
//! which is the edge assignment of the witness.

use super::index::HostIndex;
use super::witness::BergeWitness;
use crate::model::{GraphPattern, Hyperedge};
use crate::par;

const NONE: usize = usize::MAX;
const NO_EDGE: u32 = u32::MAX;

/// Restrictions on where pattern vertices may land.
#[derive(Debug, Clone, Default)]
pub struct Constraints {
    /// Per pattern vertex, a host vertex it must map to. Empty means none.
    pub fixed: Vec<Option<usize>>,
    /// Host vertices available to pattern vertices that are not fixed.
    pub allowed: Option<Vec<bool>>,
}

impl Constraints {
    pub fn none() -> Self {
        Constraints::default()
    }

    fn fixed_of(&self, p: usize) -> Option<usize> {
        self.fixed.get(p).copied().flatten()
    }
}

/// The host seen by one search: an index plus at most one extra hyperedge
/// that is not (yet) part of it. The extra hyperedge has id `index.edge_count()`.
#[derive(Clone, Copy)]
pub(crate) struct HostView<'a> {
    pub index: &'a HostIndex,
    pub extra: Option<&'a Hyperedge>,
}

impl<'a> HostView<'a> {
    fn extra_id(&self) -> u32 {
        self.index.edge_count() as u32
    }

    fn edge(&self, id: u32) -> &'a Hyperedge {
        match self.extra {
            Some(h) if id == self.extra_id() => h,
            _ => self.index.edge(id),
        }
    }

    fn edge_total(&self) -> usize {
        self.index.edge_count() + usize::from(self.extra.is_some())
    }

    fn in_extra(&self, v: usize) -> bool {
        self.extra.is_some_and(|h| h.contains(v))
    }

    fn degree(&self, v: usize) -> usize {
        self.index.degree(v) + usize::from(self.in_extra(v))
    }

    fn cooccur(&self, a: usize, b: usize) -> bool {
        !self.index.pair(a, b).is_empty() || (self.in_extra(a) && self.in_extra(b))
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        let base = self.index.neighbors(v).iter().map(|&x| x as usize);
        match self.extra {
            Some(h) if h.contains(v) => {
                let mut all: Vec<usize> = base.chain(h.vertices().iter().copied().filter(|&x| x != v)).collect();
                all.sort_unstable();
                all.dedup();
                all
            }
            _ => base.collect(),
        }
    }

    fn edges_containing(&self, image: &[usize]) -> Vec<u32> {
        let mut out: Vec<u32> = if image.len() >= 2 {
            self.index
                .pair(image[0], image[1])
                .iter()
                .copied()
                .filter(|&id| image.len() == 2 || self.index.edge(id).is_superset_of(&image[2..]))
                .collect()
        } else {
            self.index
                .incidence(image[0])
                .to_vec()
        };
        if let Some(h) = self.extra {
            if h.is_superset_of(image) {
                out.push(self.extra_id());
            }
        }
        out
    }
}

/// Placement order plus, per position, the pattern edges completed there.
struct Plan {
    order: Vec<usize>,
    closing: Vec<Vec<usize>>,
    placed_neighbors: Vec<Vec<usize>>,
}

impl Plan {
    /// Fixed vertices first; then repeatedly the vertex with most placed
    /// neighbours, ties by larger degree, then smaller index.
    fn new(pattern: &GraphPattern, constraints: &Constraints) -> Plan {
        let v = pattern.vertex_count();
        let adj = pattern.adjacency();
        let mut placed = vec![false; v];
        let mut order: Vec<usize> = (0..v).filter(|&p| constraints.fixed_of(p).is_some()).collect();
        for &p in &order {
            placed[p] = true;
        }
        while order.len() < v {
            let next = (0..v)
                .filter(|&p| !placed[p])
                .max_by_key(|&p| {
                    let links = (0..v).filter(|&q| placed[q] && adj[p][q]).count();
                    (links, pattern.degree(p), std::cmp::Reverse(p))
                })
                .expect("unplaced vertex exists");
            placed[next] = true;
            order.push(next);
        }
        let mut position = vec![0; v];
        for (i, &p) in order.iter().enumerate() {
            position[p] = i;
        }
        let mut closing = vec![Vec::new(); v];
        for (i, e) in pattern.edges().iter().enumerate() {
            let last = e.iter().map(|&p| position[p]).max().expect("nonempty edge");
            closing[last].push(i);
        }
        let placed_neighbors = order
            .iter()
            .map(|&p| (0..v).filter(|&q| adj[p][q] && position[q] < position[p]).collect())
            .collect();
        Plan {
            order,
            closing,
            placed_neighbors,
        }
    }
}

#[derive(Clone)]
struct State {
    map: Vec<usize>,
    used: Vec<bool>,
    assign: Vec<u32>,
    cand: Vec<Vec<u32>>,
}

pub(crate) struct Search<'a> {
    view: HostView<'a>,
    pattern: &'a GraphPattern,
    constraints: &'a Constraints,
    forced: Option<(usize, u32)>,
    plan: Plan,
}

impl<'a> Search<'a> {
    pub fn new(
        view: HostView<'a>,
        pattern: &'a GraphPattern,
        constraints: &'a Constraints,
        forced: Option<(usize, u32)>,
    ) -> Self {
        Search {
            view,
            pattern,
            constraints,
            forced,
            plan: Plan::new(pattern, constraints),
        }
    }

    /// First witness in the canonical order: placement order above, host
    /// vertex candidates ascending, hyperedge candidates by id.
    pub fn run(&self, parallel: bool) -> Option<BergeWitness> {
        let n = self.view.index.vertex_count();
        if self.pattern.vertex_count() > n || self.pattern.edge_count() > self.view.edge_total() {
            return None;
        }
        let m = self.pattern.edge_count();
        let mut st = State {
            map: vec![NONE; self.pattern.vertex_count()],
            used: vec![false; n],
            assign: vec![NO_EDGE; m],
            cand: vec![Vec::new(); m],
        };
        if self.dfs(&mut st, 0, parallel) {
            Some(BergeWitness {
                core_map: st.map.clone(),
                edge_assignment: st.assign.iter().map(|&id| self.view.edge(id).clone()).collect(),
            })
        } else {
            None
        }
    }

    fn dfs(&self, st: &mut State, pos: usize, parallel: bool) -> bool {
        if pos == self.plan.order.len() {
            return true;
        }
        let p = self.plan.order[pos];
        let cands = self.vertex_candidates(st, pos, p);
        if parallel && cands.len() > 1 {
            let found = par::find_map_first(&cands, |&x| {
                let mut local = st.clone();
                self.descend(&mut local, pos, p, x, false).then_some(local)
            });
            return match found {
                Some(done) => {
                    *st = done;
                    true
                }
                None => false,
            };
        }
        let pass_down = parallel && cands.len() <= 1;
        cands.into_iter().any(|x| self.descend(st, pos, p, x, pass_down))
    }

    fn descend(&self, st: &mut State, pos: usize, p: usize, x: usize, parallel: bool) -> bool {
        st.map[p] = x;
        st.used[x] = true;
        let saved = st.assign.clone();
        let mut ok = true;
        for &e in &self.plan.closing[pos] {
            st.cand[e] = self.edge_candidates(st, e);
            let mut visited = vec![false; st.assign.len()];
            if !augment(st, e, &mut visited) {
                ok = false;
                break;
            }
        }
        if ok && self.dfs(st, pos + 1, parallel) {
            return true;
        }
        st.assign = saved;
        st.map[p] = NONE;
        st.used[x] = false;
        false
    }

    fn vertex_candidates(&self, st: &State, pos: usize, p: usize) -> Vec<usize> {
        let anchors: Vec<usize> = self.plan.placed_neighbors[pos].iter().map(|&q| st.map[q]).collect();
        let need = self.pattern.degree(p);
        let fixed = self.constraints.fixed_of(p);
        let pool: Vec<usize> = if let Some(x) = fixed {
            vec![x]
        } else if let Some(&anchor) = anchors
            .iter()
            .min_by_key(|&&a| self.view.index.neighbors(a).len())
        {
            self.view.neighbors(anchor)
        } else {
            (0..self.view.index.vertex_count()).collect()
        };
        pool.into_iter()
            .filter(|&x| {
                !st.used[x]
                    && (fixed.is_some() || self.constraints.allowed.as_ref().is_none_or(|a| a[x]))
                    && self.view.degree(x) >= need
                    && anchors.iter().all(|&a| self.view.cooccur(a, x))
            })
            .collect()
    }

    fn edge_candidates(&self, st: &State, e: usize) -> Vec<u32> {
        let image: Vec<usize> = self.pattern.edges()[e].iter().map(|&p| st.map[p]).collect();
        match self.forced {
            Some((fe, id)) if fe == e => {
                if self.view.edge(id).is_superset_of(&image) {
                    vec![id]
                } else {
                    Vec::new()
                }
            }
            Some((_, id)) => {
                let mut list = self.view.edges_containing(&image);
                list.retain(|&h| h != id);
                list
            }
            None => self.view.edges_containing(&image),
        }
    }
}

/// Kuhn's augmenting path from pattern edge `e`; `visited` marks pattern
/// edges already on the current path.
fn augment(st: &mut State, e: usize, visited: &mut [bool]) -> bool {
    if visited[e] {
        return false;
    }
    visited[e] = true;
    for i in 0..st.cand[e].len() {
        let h = st.cand[e][i];
        match st.assign.iter().position(|&a| a == h) {
            None => {
                st.assign[e] = h;
                return true;
            }
            Some(owner) => {
                if owner != e && augment(st, owner, visited) {
                    st.assign[e] = h;
                    return true;
                }
            }
        }
    }
    false
}
