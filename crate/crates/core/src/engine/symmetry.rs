//! Orbits of oriented pattern edges under the pattern's automorphism group.
//! Seeding a "which pattern edge lands on the new hyperedge" search with one
//! representative per orbit is enough to find every Berge copy.

use std::collections::HashSet;

use crate::model::GraphPattern;

/// Patterns above this size skip the reduction and seed every oriented edge.
const SYMMETRY_VERTEX_LIMIT: usize = 14;

/// An oriented edge: pattern edge index plus an ordering of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedEdge {
    pub edge: usize,
    pub tuple: Vec<usize>,
}

pub fn oriented_edge_representatives(f: &GraphPattern) -> Vec<OrientedEdge> {
    let all: Vec<OrientedEdge> = f
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, e)| permutations(e).into_iter().map(move |t| OrientedEdge { edge: i, tuple: t }))
        .collect();
    if f.vertex_count() > SYMMETRY_VERTEX_LIMIT {
        return all;
    }
    let edge_set: HashSet<Vec<usize>> = f.edges().iter().cloned().collect();
    let mut reps: Vec<OrientedEdge> = Vec::new();
    for cand in all {
        let covered = reps
            .iter()
            .any(|rep| automorphism_mapping(f, &edge_set, &rep.tuple, &cand.tuple).is_some());
        if !covered {
            reps.push(cand);
        }
    }
    reps
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// An automorphism sending `from[i]` to `to[i]` for every `i`, if one exists.
pub fn automorphism_mapping(
    f: &GraphPattern,
    edge_set: &HashSet<Vec<usize>>,
    from: &[usize],
    to: &[usize],
) -> Option<Vec<usize>> {
    let v = f.vertex_count();
    let mut image = vec![usize::MAX; v];
    let mut taken = vec![false; v];
    for (&a, &b) in from.iter().zip(to) {
        if f.degree(a) != f.degree(b) || (image[a] != usize::MAX && image[a] != b) || (taken[b] && image[a] != b) {
            return None;
        }
        image[a] = b;
        taken[b] = true;
    }
    let order: Vec<usize> = (0..v).filter(|&x| image[x] == usize::MAX).collect();
    let incident: Vec<Vec<usize>> = (0..v)
        .map(|x| (0..f.edge_count()).filter(|&i| f.edges()[i].contains(&x)).collect())
        .collect();
    if !edges_consistent(f, edge_set, &image, from) {
        return None;
    }
    extend(f, edge_set, &incident, &order, 0, &mut image, &mut taken).then_some(image)
}

fn edges_consistent(f: &GraphPattern, edge_set: &HashSet<Vec<usize>>, image: &[usize], touched: &[usize]) -> bool {
    for &x in touched {
        for e in f.edges().iter().filter(|e| e.contains(&x)) {
            if e.iter().all(|&y| image[y] != usize::MAX) {
                let mut mapped: Vec<usize> = e.iter().map(|&y| image[y]).collect();
                mapped.sort_unstable();
                if !edge_set.contains(&mapped) {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(
    f: &GraphPattern,
    edge_set: &HashSet<Vec<usize>>,
    incident: &[Vec<usize>],
    order: &[usize],
    pos: usize,
    image: &mut Vec<usize>,
    taken: &mut Vec<bool>,
) -> bool {
    let Some(&x) = order.get(pos) else {
        return true;
    };
    for y in 0..f.vertex_count() {
        if taken[y] || f.degree(y) != f.degree(x) {
            continue;
        }
        image[x] = y;
        taken[y] = true;
        let ok = incident[x].iter().all(|&i| {
            let e = &f.edges()[i];
            if e.iter().any(|&z| image[z] == usize::MAX) {
                return true;
            }
            let mut mapped: Vec<usize> = e.iter().map(|&z| image[z]).collect();
            mapped.sort_unstable();
            edge_set.contains(&mapped)
        });
        if ok && extend(f, edge_set, incident, order, pos + 1, image, taken) {
            return true;
        }
        image[x] = usize::MAX;
        taken[y] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_transitive_patterns_have_one_orbit() {
        for f in [
            GraphPattern::cycle(7),
            GraphPattern::complete(4),
            GraphPattern::complete_multipartite(&[2, 2, 2]),
            GraphPattern::petersen(),
        ] {
            assert_eq!(oriented_edge_representatives(&f).len(), 1);
        }
    }

    #[test]
    fn path_orbits() {
        // P4: end edges in both orientations (2 orbits) + middle edge (1 orbit)
        assert_eq!(oriented_edge_representatives(&GraphPattern::path(4)).len(), 3);
        // star K_{1,3}: centre→leaf and leaf→centre
        assert_eq!(oriented_edge_representatives(&GraphPattern::star(3)).len(), 2);
    }

    #[test]
    fn hyper_core_orbits() {
        let f = GraphPattern::with_uniformity(4, 3, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let reps = oriented_edge_representatives(&f);
        // 12 oriented triples; automorphisms: identity, swap (0 3), swap (1 2), both
        assert_eq!(reps.len(), 3);
    }
}
