use serde::{Deserialize, Serialize};

use crate::error::{BergeError, Result};

/// Vertex partition `(C, B₁, …, B_m, R)` shared by the block constructions.
/// `C` takes the lowest indices, blocks follow in index order, `R` trails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLayout {
    #[serde(rename = "C")]
    pub core: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    #[serde(rename = "R")]
    pub rest: Vec<usize>,
}

impl BlockLayout {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    pub fn vertex_count(&self) -> usize {
        self.core.len() + self.blocks.iter().map(Vec::len).sum::<usize>() + self.rest.len()
    }

    /// Block index of every vertex (`None` for `C` and `R`).
    pub fn block_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.vertex_count()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x] = Some(i);
            }
        }
        out
    }

    pub fn core_mask(&self) -> Vec<bool> {
        let mut out = vec![false; self.vertex_count()];
        for &x in &self.core {
            out[x] = true;
        }
        out
    }

    /// Partition and equal-size checks. A layout without blocks only needs
    /// to be a partition.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        let all = self
            .core
            .iter()
            .chain(self.blocks.iter().flatten())
            .chain(self.rest.iter());
        for &x in all {
            if x >= n || seen[x] {
                return Err(BergeError::Precondition(format!(
                    "layout is not a partition of 0..{n} (vertex {x})"
                )));
            }
            seen[x] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(BergeError::Precondition(format!("layout does not cover 0..{n}")));
        }
        if let Some(b) = self.blocks.first().map(Vec::len) {
            if b == 0 || self.blocks.iter().any(|blk| blk.len() != b) {
                return Err(BergeError::Precondition("blocks differ in size".into()));
            }
            if self.rest.len() >= b {
                return Err(BergeError::Precondition(format!(
                    "remainder of size {} is not smaller than the block size {b}",
                    self.rest.len()
                )));
            }
        }
        Ok(())
    }
}

/// `C = {0..c}`, then `⌊(n − c)/b⌋` consecutive blocks, then the remainder.
pub fn make_layout(n: usize, block_size: usize, core_size: usize) -> Result<BlockLayout> {
    if block_size == 0 {
        return Err(BergeError::Precondition("block size must be positive".into()));
    }
    if n < core_size + block_size {
        return Err(BergeError::Precondition(format!(
            "n = {n} is smaller than core size {core_size} plus block size {block_size}"
        )));
    }
    let m = (n - core_size) / block_size;
    let blocks = (0..m)
        .map(|i| {
            let start = core_size + i * block_size;
            (start..start + block_size).collect()
        })
        .collect();
    Ok(BlockLayout {
        core: (0..core_size).collect(),
        blocks,
        rest: (core_size + m * block_size..n).collect(),
    })
}
