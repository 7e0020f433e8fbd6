use std::fmt;

use super::cell::{Cell, Space};
use crate::error::Result;
use crate::mask::SubsetMask;

/// A cube `(A, B, C, D)` of `Ω_n`; `A` and `C` hold the particles at the two
/// anchors, `B` and `D` those on the two arcs between them.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct OmegaCell {
    n: u8,
    blocks: [SubsetMask; 4],
}

impl OmegaCell {
    pub fn new(n: usize, a: SubsetMask, b: SubsetMask, c: SubsetMask, d: SubsetMask) -> Result<Self> {
        Self::from_blocks(n, &[a, b, c, d])
    }

    /// Shorthand taking element lists.
    pub fn from_lists(n: usize, a: &[usize], b: &[usize], c: &[usize], d: &[usize]) -> Result<Self> {
        let m = |xs: &[usize]| SubsetMask::from_elements(xs.iter().copied());
        Self::new(n, m(a), m(b), m(c), m(d))
    }

    pub fn a(&self) -> SubsetMask {
        self.blocks[0]
    }

    pub fn b(&self) -> SubsetMask {
        self.blocks[1]
    }

    pub fn c(&self) -> SubsetMask {
        self.blocks[2]
    }

    pub fn d(&self) -> SubsetMask {
        self.blocks[3]
    }
}

impl Cell for OmegaCell {
    const SPACE: Space = Space::Omega;
    const LABELS: &'static [&'static str] = &["A", "B", "C", "D"];
    const ANCHORS: [usize; 2] = [0, 2];

    fn n(&self) -> usize {
        self.n as usize
    }

    fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    fn from_blocks_unchecked(n: usize, blocks: &[SubsetMask]) -> Self {
        OmegaCell { n: n as u8, blocks: blocks.try_into().expect("four blocks") }
    }
}

impl fmt::Display for OmegaCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_text(f)
    }
}

impl fmt::Debug for OmegaCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ω[{self}]")
    }
}
