use std::fmt;

use super::cell::{Cell, Space};
use super::omega::OmegaCell;
use crate::error::Result;
use crate::mask::SubsetMask;

/// A cell `(x1, y1, …, x4, y4)` of `CΩ_n`: `x_i` are the particles at vertex
/// `i` of the 4-cycle, `y_i` those on the edge from vertex `i` to `i + 1`
/// (indices mod 4). Vertices 3 and 4 are anchored.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CCell {
    n: u8,
    blocks: [SubsetMask; 8],
}

impl CCell {
    pub fn new(n: usize, blocks: [SubsetMask; 8]) -> Result<Self> {
        Self::from_blocks(n, &blocks)
    }

    /// Shorthand taking element lists in block order `x1, y1, …, x4, y4`.
    pub fn from_lists(n: usize, lists: [&[usize]; 8]) -> Result<Self> {
        let blocks = lists.map(|xs| SubsetMask::from_elements(xs.iter().copied()));
        Self::new(n, blocks)
    }

    /// Cell with `x1 = y1 = x2 = y2 = ∅` and the last four blocks given.
    pub fn from_tail(n: usize, x3: SubsetMask, y3: SubsetMask, x4: SubsetMask, y4: SubsetMask) -> Result<Self> {
        let e = SubsetMask::EMPTY;
        Self::new(n, [e, e, e, e, x3, y3, x4, y4])
    }

    /// Vertex block `x_i`, `i ∈ 1..=4`.
    pub fn x(&self, i: usize) -> SubsetMask {
        self.blocks[2 * (i - 1)]
    }

    /// Edge block `y_i`, `i ∈ 1..=4`.
    pub fn y(&self, i: usize) -> SubsetMask {
        self.blocks[2 * (i - 1) + 1]
    }

    pub fn block_array(&self) -> [SubsetMask; 8] {
        self.blocks
    }

    /// All vertex blocks together.
    pub fn x_union(&self) -> SubsetMask {
        (1..=4).fold(SubsetMask::EMPTY, |m, i| m | self.x(i))
    }

    /// True when the first four blocks are empty.
    pub fn has_empty_head(&self) -> bool {
        self.blocks[..4].iter().all(|b| b.is_empty())
    }

    /// Embeds an `Ω_n` cube as `(∅, ∅, ∅, ∅, A, B, C, D)`.
    pub fn from_omega(cell: &OmegaCell) -> Self {
        let e = SubsetMask::EMPTY;
        CCell { n: cell.n() as u8, blocks: [e, e, e, e, cell.a(), cell.b(), cell.c(), cell.d()] }
    }

    /// Inverse of [`CCell::from_omega`] on cells with an empty head.
    pub fn to_omega(&self) -> Option<OmegaCell> {
        self.has_empty_head().then(|| {
            OmegaCell::from_blocks_unchecked(self.n(), &self.blocks[4..])
        })
    }

    /// Copy with element `v` moved from block `from` to block `to`
    /// (0-based block indices). No validation.
    pub(crate) fn moved(&self, v: usize, from: usize, to: usize) -> CCell {
        let mut blocks = self.blocks;
        blocks[from] = blocks[from].without(v);
        blocks[to] = blocks[to].with(v);
        CCell { n: self.n, blocks }
    }
}

impl Cell for CCell {
    const SPACE: Space = Space::COmega;
    const LABELS: &'static [&'static str] = &["x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4"];
    const ANCHORS: [usize; 2] = [4, 6];

    fn n(&self) -> usize {
        self.n as usize
    }

    fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    fn from_blocks_unchecked(n: usize, blocks: &[SubsetMask]) -> Self {
        CCell { n: n as u8, blocks: blocks.try_into().expect("eight blocks") }
    }
}

impl fmt::Display for CCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_text(f)
    }
}

impl fmt::Debug for CCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CΩ[{self}]")
    }
}
