use std::fmt::Write as _;

use serde::Serialize;

use crate::model::{GraphPattern, Hyperedge};

/// Certificate of a Berge copy: where each pattern vertex lands and which
/// host hyperedge carries each pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BergeWitness {
    pub core_map: Vec<usize>,
    pub edge_assignment: Vec<Hyperedge>,
}

impl BergeWitness {
    /// Checks every witness invariant from scratch. `is_host_edge` decides
    /// membership in the host the witness claims to live in.
    pub fn validate<F>(&self, pattern: &GraphPattern, is_host_edge: F) -> Result<(), String>
    where
        F: Fn(&Hyperedge) -> bool,
    {
        if self.core_map.len() != pattern.vertex_count() {
            return Err(format!(
                "core map covers {} of {} pattern vertices",
                self.core_map.len(),
                pattern.vertex_count()
            ));
        }
        let mut images = self.core_map.clone();
        images.sort_unstable();
        if images.windows(2).any(|w| w[0] == w[1]) {
            return Err("core map is not injective".into());
        }
        if self.edge_assignment.len() != pattern.edge_count() {
            return Err("edge assignment does not cover every pattern edge".into());
        }
        let mut used = self.edge_assignment.clone();
        used.sort();
        if used.windows(2).any(|w| w[0] == w[1]) {
            return Err("edge assignment is not injective".into());
        }
        for (e, h) in pattern.edges().iter().zip(&self.edge_assignment) {
            if !is_host_edge(h) {
                return Err(format!("{h} is not a host hyperedge"));
            }
            let image: Vec<usize> = e.iter().map(|&v| self.core_map[v]).collect();
            if !h.is_superset_of(&image) {
                return Err(format!("pattern edge {e:?} maps to {image:?}, not inside {h}"));
            }
        }
        Ok(())
    }

    /// `core:` lines then `edge:` lines, both in pattern-index order.
    pub fn report(&self, pattern: &GraphPattern) -> String {
        let mut out = String::new();
        for (p, h) in self.core_map.iter().enumerate() {
            let _ = writeln!(out, "core: {p} -> {h}");
        }
        for (e, h) in pattern.edges().iter().zip(&self.edge_assignment) {
            let ends: Vec<String> = e.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "edge: ({}) -> {h}", ends.join(","));
        }
        out
    }

    pub fn uses(&self, h: &Hyperedge) -> bool {
        self.edge_assignment.contains(h)
    }
}
