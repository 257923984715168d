//! Degree profile and structural classification of graph patterns.

use std::collections::VecDeque;

use serde::Serialize;

use super::graph::GraphPattern;
use crate::error::{BergeError, Result};

/// Sorted degree sequence `d₁ ≤ … ≤ d_v` with the two derived quantities the
/// constructions use. `delta2` is `d₂ − 1` (the block-vertex target degree);
/// `min_degree` is `d₁`. For a single-vertex graph `d₂` is taken as 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub sorted_degrees: Vec<usize>,
    pub delta2: i64,
    pub min_degree: usize,
}

pub fn degree_profile(f: &GraphPattern) -> Result<DegreeProfile> {
    if !f.is_graph() {
        return Err(BergeError::InvalidPattern(format!(
            "degree profile needs a graph core, got uniformity {}",
            f.uniformity()
        )));
    }
    let mut sorted_degrees = f.degrees().to_vec();
    sorted_degrees.sort_unstable();
    let d2 = sorted_degrees.get(1).copied().unwrap_or(0) as i64;
    Ok(DegreeProfile {
        min_degree: sorted_degrees[0],
        delta2: d2 - 1,
        sorted_degrees,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub degree_profile: DegreeProfile,
    pub is_type_one: bool,
    pub type_one_witness: Option<(usize, usize)>,
    /// Class sizes, nondecreasing, when `F` is complete multipartite with at
    /// least two classes.
    pub multipartite_classes: Option<Vec<usize>>,
    pub isolated_edge: Option<(usize, usize)>,
    pub cut_edge: Option<(usize, usize)>,
    pub vertex_connectivity: usize,
    pub has_isolated_vertex: bool,
    pub is_connected: bool,
    pub is_star: bool,
}

pub fn classify(f: &GraphPattern) -> Result<ClassificationReport> {
    let degree_profile = degree_profile(f)?;
    let type_one_witness = type_one_edge(f, &degree_profile);
    let adj = f.adjacency();
    let is_connected = is_connected(&adj, &vec![false; f.vertex_count()]);
    Ok(ClassificationReport {
        is_type_one: type_one_witness.is_some(),
        type_one_witness,
        multipartite_classes: multipartite_classes(&adj),
        isolated_edge: isolated_edge(f),
        cut_edge: bridges(&adj).into_iter().next(),
        vertex_connectivity: vertex_connectivity(&adj),
        has_isolated_vertex: f.degrees().contains(&0),
        is_connected,
        is_star: is_star(f),
        degree_profile,
    })
}

/// Lexicographically least `(u₁, u₂)` over edges oriented by (degree, index)
/// whose endpoint degrees are exactly `(d₁, d₂)`.
pub fn type_one_edge(f: &GraphPattern, profile: &DegreeProfile) -> Option<(usize, usize)> {
    let (d1, d2) = match profile.sorted_degrees.as_slice() {
        [a, b, ..] => (*a, *b),
        _ => return None,
    };
    f.edges()
        .iter()
        .map(|e| {
            let (a, b) = (e[0], e[1]);
            if (f.degree(a), a) <= (f.degree(b), b) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .filter(|&(a, b)| f.degree(a) == d1 && f.degree(b) == d2)
        .min()
}

fn isolated_edge(f: &GraphPattern) -> Option<(usize, usize)> {
    f.edges()
        .iter()
        .filter(|e| f.degree(e[0]) == 1 && f.degree(e[1]) == 1)
        .map(|e| (e[0], e[1]))
        .min()
}

fn is_star(f: &GraphPattern) -> bool {
    let e = f.edge_count();
    if e == 0 {
        return false;
    }
    let touched = f.degrees().iter().filter(|&&d| d > 0).count();
    touched == e + 1 && f.degrees().contains(&e)
}

/// Complement is a disjoint union of cliques iff "equal or non-adjacent" is
/// an equivalence relation; its classes are the parts.
fn multipartite_classes(adj: &[Vec<bool>]) -> Option<Vec<usize>> {
    let v = adj.len();
    let mut class = vec![usize::MAX; v];
    let mut sizes = Vec::new();
    for a in 0..v {
        if class[a] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let members: Vec<usize> = (a..v).filter(|&b| b == a || !adj[a][b]).collect();
        for &b in &members {
            if class[b] != usize::MAX {
                return None;
            }
            class[b] = id;
        }
        sizes.push(members.len());
    }
    for a in 0..v {
        for b in 0..v {
            if a != b && adj[a][b] == (class[a] == class[b]) {
                return None;
            }
        }
    }
    if sizes.len() < 2 {
        return None;
    }
    sizes.sort_unstable();
    Some(sizes)
}

/// Connectivity of the graph after deleting `removed`; graphs with fewer than
/// two remaining vertices count as connected.
fn is_connected(adj: &[Vec<bool>], removed: &[bool]) -> bool {
    let v = adj.len();
    let Some(start) = (0..v).find(|&x| !removed[x]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in 0..v {
            if adj[x][y] && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

const BRUTE_FORCE_CONNECTIVITY_LIMIT: usize = 16;

/// κ(F). `K_v` has κ = v − 1; disconnected graphs have κ = 0.
pub fn vertex_connectivity(adj: &[Vec<bool>]) -> usize {
    if adj.len() <= BRUTE_FORCE_CONNECTIVITY_LIMIT {
        vertex_connectivity_brute(adj)
    } else {
        vertex_connectivity_flow(adj)
    }
}

/// Smallest vertex set whose removal disconnects the rest, by subset search.
pub fn vertex_connectivity_brute(adj: &[Vec<bool>]) -> usize {
    let v = adj.len();
    if v <= 1 {
        return 0;
    }
    for k in 0..v.saturating_sub(1) {
        let mut removed = vec![false; v];
        if cut_of_size(adj, &mut removed, 0, k) {
            return k;
        }
    }
    v - 1
}

fn cut_of_size(adj: &[Vec<bool>], removed: &mut [bool], from: usize, left: usize) -> bool {
    if left == 0 {
        return !is_connected(adj, removed);
    }
    for x in from..adj.len() {
        removed[x] = true;
        if cut_of_size(adj, removed, x + 1, left - 1) {
            removed[x] = false;
            return true;
        }
        removed[x] = false;
    }
    false
}

/// κ via vertex-split max flow over every non-adjacent pair.
pub fn vertex_connectivity_flow(adj: &[Vec<bool>]) -> usize {
    let v = adj.len();
    if v <= 1 {
        return 0;
    }
    let mut best = v - 1;
    for s in 0..v {
        for t in s + 1..v {
            if !adj[s][t] {
                best = best.min(local_vertex_connectivity(adj, s, t));
            }
        }
    }
    best
}

/// Internally vertex-disjoint s–t paths (Menger) via unit-capacity
/// Edmonds–Karp on the split graph: node `x` becomes `2x` (in) → `2x+1` (out).
fn local_vertex_connectivity(adj: &[Vec<bool>], s: usize, t: usize) -> usize {
    let v = adj.len();
    let nodes = 2 * v;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for x in 0..v {
        cap[2 * x][2 * x + 1] = if x == s || x == t { v as i32 } else { 1 };
        for y in 0..v {
            if adj[x][y] {
                cap[2 * x + 1][2 * y] = v as i32;
            }
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut parent = vec![usize::MAX; nodes];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for y in 0..nodes {
                if parent[y] == usize::MAX && cap[x][y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Bridges by low-link DFS, each as `(min, max)`, sorted ascending.
pub fn bridges(adj: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let v = adj.len();
    let mut disc = vec![usize::MAX; v];
    let mut low = vec![0; v];
    let mut time = 0;
    let mut out = Vec::new();
    for root in 0..v {
        if disc[root] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbour to scan)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (x, parent, ref mut next)) = stack.last_mut() {
            if *next < v {
                let y = *next;
                *next += 1;
                if !adj[x][y] || y == parent {
                    continue;
                }
                if disc[y] == usize::MAX {
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    stack.push((y, x, 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[x]);
                    if low[x] > disc[parent] {
                        out.push((parent.min(x), parent.max(x)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}
