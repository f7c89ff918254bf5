//! Partitions of the basis into blocks.
//!
//! A partition models a countable orthogonal family of diagonal projections
//! whose supremum is the identity: every basis index lies in exactly one
//! block, and all blocks of a partition have the same cardinality. The
//! enumeration order of the blocks is part of the value.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use super::index::{cantor_pair, cantor_unpair, BasisIndex, BlockId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Partition {
    /// Consecutive runs of `width` indices: block `b` is `[b*width, (b+1)*width)`.
    Uniform { width: usize },
    /// Coarse block `i` is the union of the base blocks `cantor_pair(i, j)`, `j >= 0`.
    CantorCoarsen { base: Box<Partition> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockSize {
    Finite(usize),
    Infinite,
}

impl BlockSize {
    pub fn covers(self, depth: usize) -> bool {
        matches!(self, BlockSize::Finite(n) if n <= depth)
    }
}

impl Partition {
    pub fn uniform(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::Precondition("uniform partition width must be positive".into()));
        }
        Ok(Partition::Uniform { width })
    }

    /// The identity blocking: one basis index per block.
    pub fn atomic() -> Self {
        Partition::Uniform { width: 1 }
    }

    pub fn cantor_coarsen(base: Partition) -> Self {
        Partition::CantorCoarsen {
            base: Box::new(base),
        }
    }

    pub fn base(&self) -> Option<&Partition> {
        match self {
            Partition::Uniform { .. } => None,
            Partition::CantorCoarsen { base } => Some(base),
        }
    }

    pub fn is_coarsening(&self) -> bool {
        matches!(self, Partition::CantorCoarsen { .. })
    }

    pub fn block_of(&self, index: BasisIndex) -> BlockId {
        match self {
            Partition::Uniform { width } => BlockId(index.0 / width),
            Partition::CantorCoarsen { base } => {
                let (coarse, _) = cantor_unpair(base.block_of(index).0);
                BlockId(coarse)
            }
        }
    }

    pub fn block_size(&self, _block: BlockId) -> BlockSize {
        match self {
            Partition::Uniform { width } => BlockSize::Finite(*width),
            Partition::CantorCoarsen { .. } => BlockSize::Infinite,
        }
    }

    /// Smallest basis index in `block`.
    pub fn first_index(&self, block: BlockId) -> BasisIndex {
        match self {
            Partition::Uniform { width } => BasisIndex(block.0 * width),
            // First indices grow with the block id at every level, so the
            // smallest member comes from the first base block.
            Partition::CantorCoarsen { base } => base.first_index(BlockId(cantor_pair(block.0, 0))),
        }
    }

    /// The `k`-th smallest index of `block`.
    pub fn index_in_block(&self, block: BlockId, k: usize) -> Result<BasisIndex> {
        match self {
            Partition::Uniform { width } => {
                if k >= *width {
                    return Err(Error::Range {
                        block: block.0,
                        k,
                        size: *width,
                    });
                }
                Ok(BasisIndex(block.0 * width + k))
            }
            Partition::CantorCoarsen { base } => match base.as_ref() {
                Partition::Uniform { width } => {
                    let fine = cantor_pair(block.0, k / width);
                    Ok(BasisIndex(fine * width + k % width))
                }
                Partition::CantorCoarsen { .. } => Ok(self
                    .block_indices(block)
                    .nth(k)
                    .expect("coarse blocks are infinite")),
            },
        }
    }

    /// Ordinal of `index` inside its own block; inverse of [`Self::index_in_block`].
    pub fn position_in_block(&self, index: BasisIndex) -> usize {
        match self {
            Partition::Uniform { width } => index.0 % width,
            Partition::CantorCoarsen { base } => match base.as_ref() {
                Partition::Uniform { width } => {
                    let (_, j) = cantor_unpair(index.0 / width);
                    j * width + index.0 % width
                }
                Partition::CantorCoarsen { .. } => {
                    let block = self.block_of(index);
                    self.block_indices(block)
                        .position(|x| x == index)
                        .expect("index lies in its own block")
                }
            },
        }
    }

    /// Increasing enumeration of every index in `block`.
    pub fn block_indices(&self, block: BlockId) -> BlockIndices {
        match self {
            Partition::Uniform { width } => BlockIndices::Range {
                next: block.0 * width,
                end: (block.0 + 1) * width,
            },
            Partition::CantorCoarsen { base } => match base.as_ref() {
                Partition::Uniform { width } => BlockIndices::Striped {
                    coarse: block.0,
                    width: *width,
                    k: 0,
                },
                nested => BlockIndices::Merge(Box::new(Merge::new(nested.clone(), block.0))),
            },
        }
    }

    /// The first `depth` indices of `block`, or all of them when the block is smaller.
    pub fn leading_indices(&self, block: BlockId, depth: usize) -> Vec<BasisIndex> {
        self.block_indices(block).take(depth).collect()
    }

    /// Sorted union of [`Self::leading_indices`] over `blocks`.
    pub fn truncated_support<I>(&self, blocks: I, depth: usize) -> Vec<BasisIndex>
    where
        I: IntoIterator<Item = BlockId>,
    {
        let mut out: Vec<BasisIndex> = blocks
            .into_iter()
            .flat_map(|b| self.leading_indices(b, depth))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether `index` survives truncation of its block to `depth` indices.
    pub fn within_depth(&self, index: BasisIndex, depth: usize) -> bool {
        match self.block_size(self.block_of(index)) {
            BlockSize::Finite(n) if n <= depth => true,
            _ => self.position_in_block(index) < depth,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Partition::Uniform { width } => write!(f, "uniform:{width}"),
            Partition::CantorCoarsen { base } => write!(f, "cantor:{base}"),
        }
    }
}

/// Iterator over the indices of one block, in increasing order.
#[derive(Debug, Clone)]
pub enum BlockIndices {
    Range { next: usize, end: usize },
    /// Coarse block over a uniform base: base blocks are contiguous runs
    /// visited in pairing order.
    Striped { coarse: usize, width: usize, k: usize },
    /// Coarse block over a base with infinite blocks.
    Merge(Box<Merge>),
}

impl Iterator for BlockIndices {
    type Item = BasisIndex;

    fn next(&mut self) -> Option<BasisIndex> {
        match self {
            BlockIndices::Range { next, end } => {
                if next < end {
                    *next += 1;
                    Some(BasisIndex(*next - 1))
                } else {
                    None
                }
            }
            BlockIndices::Striped { coarse, width, k } => {
                let fine = cantor_pair(*coarse, *k / *width);
                let idx = fine * *width + *k % *width;
                *k += 1;
                Some(BasisIndex(idx))
            }
            BlockIndices::Merge(m) => m.next(),
        }
    }
}

/// Lazy k-way merge of the infinitely many base blocks `cantor_pair(coarse, j)`.
///
/// Base block `j` is activated only once its first index could be the next
/// output; first indices increase with `j`, so at most finitely many
/// sub-iterators are live at any time.
#[derive(Debug, Clone)]
pub struct Merge {
    base: Partition,
    coarse: usize,
    heap: BinaryHeap<Reverse<(usize, usize)>>,
    streams: Vec<BlockIndices>,
    pending_first: usize,
}

impl Merge {
    fn new(base: Partition, coarse: usize) -> Self {
        let pending_first = base.first_index(BlockId(cantor_pair(coarse, 0))).0;
        Merge {
            base,
            coarse,
            heap: BinaryHeap::new(),
            streams: Vec::new(),
            pending_first,
        }
    }

    fn activate(&mut self) {
        let j = self.streams.len();
        let mut stream = self.base.block_indices(BlockId(cantor_pair(self.coarse, j)));
        if let Some(first) = stream.next() {
            self.heap.push(Reverse((first.0, j)));
        }
        self.streams.push(stream);
        self.pending_first = self
            .base
            .first_index(BlockId(cantor_pair(self.coarse, j + 1)))
            .0;
    }

    fn next(&mut self) -> Option<BasisIndex> {
        while self
            .heap
            .peek()
            .is_none_or(|Reverse((v, _))| self.pending_first < *v)
        {
            self.activate();
        }
        let Reverse((value, j)) = self.heap.pop()?;
        if let Some(n) = self.streams[j].next() {
            self.heap.push(Reverse((n.0, j)));
        }
        Some(BasisIndex(value))
    }
}
