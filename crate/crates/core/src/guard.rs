//! Size guards for the exhaustive oracle and the exact minimum search.
//! `BERGE_SIZE_GUARD` overrides them as comma-separated `key=value` pairs,
//! e.g. `BERGE_SIZE_GUARD=oracle_hyperedges=12,satmin_space=36`.

use crate::error::{BergeError, Result};

pub const SIZE_GUARD_ENV: &str = "BERGE_SIZE_GUARD";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub oracle_vertices: usize,
    pub oracle_hyperedges: usize,
    pub oracle_pattern_edges: usize,
    /// Largest `C(n, r)` the exact minimum search accepts.
    pub satmin_space: u64,
    /// Largest saturation value the exact minimum search will try.
    pub satmin_value: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            oracle_vertices: 8,
            oracle_hyperedges: 10,
            oracle_pattern_edges: 8,
            satmin_space: 30,
            satmin_value: 12,
        }
    }
}

impl SizeGuard {
    pub fn from_env() -> Result<Self> {
        match std::env::var(SIZE_GUARD_ENV) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| BergeError::Precondition(format!("{SIZE_GUARD_ENV}: `{item}` is not key=value")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| BergeError::Precondition(format!("{SIZE_GUARD_ENV}: bad number in `{item}`")))?;
            match key.trim() {
                "oracle_vertices" => self.oracle_vertices = value as usize,
                "oracle_hyperedges" => self.oracle_hyperedges = value as usize,
                "oracle_pattern_edges" => self.oracle_pattern_edges = value as usize,
                "satmin_space" => self.satmin_space = value,
                "satmin_value" => self.satmin_value = value as usize,
                other => {
                    return Err(BergeError::Precondition(format!(
                        "{SIZE_GUARD_ENV}: unknown key `{other}`"
                    )))
                }
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let g = SizeGuard::default().with_overrides("satmin_space=40, oracle_hyperedges=12").unwrap();
        assert_eq!((g.satmin_space, g.oracle_hyperedges, g.oracle_vertices), (40, 12, 8));
        assert!(SizeGuard::default().with_overrides("bogus=1").is_err());
        assert!(SizeGuard::default().with_overrides("satmin_space").is_err());
    }
}
