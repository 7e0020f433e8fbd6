use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::{SubsetMask, MAX_ELEMENTS};

/// Positional base-4 (Ω) or base-8 (CΩ) code of a cell.
pub type CellId = u64;

/// Largest `n` whose base-8 codes fit in a [`CellId`].
pub const MAX_N: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Space {
    #[serde(rename = "omega")]
    Omega,
    #[serde(rename = "comega")]
    COmega,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Omega => "omega",
            Space::COmega => "comega",
        })
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega" => Ok(Space::Omega),
            "comega" => Ok(Space::COmega),
            other => Err(Error::Parameter(format!("unknown space `{other}` (expected omega|comega)"))),
        }
    }
}

/// Number of particles; validated for the main pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroundParams {
    n: usize,
}

impl GroundParams {
    pub fn new(n: usize) -> Result<Self> {
        match n {
            0 => Err(Error::Parameter("n must be a positive integer".into())),
            1 => Err(Error::Parameter(
                "n = 1 < 2 anchored points: the anchored configuration space is empty".into(),
            )),
            2 => Err(Error::Parameter(
                "n = 2 equals the number of anchored points: the space is a discrete set of n! = 2 points"
                    .into(),
            )),
            n if n > MAX_N => Err(Error::Parameter(format!("n = {n} exceeds the supported maximum {MAX_N}"))),
            n => Ok(GroundParams { n }),
        }
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Top cell dimension, `n - 2`, in both spaces.
    pub fn max_dim(self) -> usize {
        self.n - 2
    }
}

/// A cell of one of the two cubical models.
///
/// Blocks alternate vertex blocks (even index) and edge blocks (odd index)
/// around a cycle. The dimension is the number of elements in edge blocks.
pub trait Cell: Copy + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const SPACE: Space;
    /// Block labels in positional-code order.
    const LABELS: &'static [&'static str];
    /// Vertex blocks that must be nonempty.
    const ANCHORS: [usize; 2];

    fn n(&self) -> usize;

    fn blocks(&self) -> &[SubsetMask];

    /// Builds a cell without validation.
    fn from_blocks_unchecked(n: usize, blocks: &[SubsetMask]) -> Self;

    fn base() -> u64 {
        Self::LABELS.len() as u64
    }

    /// Builds a cell, checking disjointness, coverage of `{1..n}` and anchoring.
    fn from_blocks(n: usize, blocks: &[SubsetMask]) -> Result<Self> {
        validate_blocks::<Self>(n, blocks)?;
        Ok(Self::from_blocks_unchecked(n, blocks))
    }

    fn dim(&self) -> usize {
        self.blocks().iter().skip(1).step_by(2).map(|b| b.len()).sum()
    }

    fn encode(&self) -> CellId {
        let mut id = 0;
        let mut place = 1;
        let mut digits = vec![0u64; self.n()];
        for (digit, block) in self.blocks().iter().enumerate() {
            for e in block.iter() {
                digits[e - 1] = digit as u64;
            }
        }
        for d in digits {
            id += d * place;
            place *= Self::base();
        }
        id
    }

    fn decode(n: usize, id: CellId) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Parameter(format!("cannot decode cells for n = {n}")));
        }
        let base = Self::base();
        let mut blocks = vec![SubsetMask::EMPTY; Self::LABELS.len()];
        let mut rest = id;
        for k in 1..=n {
            blocks[(rest % base) as usize] |= SubsetMask::singleton(k);
            rest /= base;
        }
        if rest != 0 {
            return Err(Error::MalformedCell(format!("code {id} has more than {n} digits")));
        }
        Self::from_blocks(n, &blocks)
    }

    /// Codimension-one faces: each element of an edge block moved to either
    /// endpoint of its edge. Listed by block, then element, lower end first.
    fn facets(&self) -> Vec<Self> {
        let blocks = self.blocks();
        let len = blocks.len();
        let mut out = Vec::with_capacity(2 * self.dim());
        for edge in (1..len).step_by(2) {
            for v in blocks[edge].iter() {
                for target in [edge - 1, (edge + 1) % len] {
                    let mut moved = blocks.to_vec();
                    moved[edge] = moved[edge].without(v);
                    moved[target] = moved[target].with(v);
                    debug_assert!(Self::ANCHORS.iter().all(|&a| !moved[a].is_empty()));
                    out.push(Self::from_blocks_unchecked(self.n(), &moved));
                }
            }
        }
        out
    }

    /// Parses the `label:elements|…` text form.
    fn parse(n: usize, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.trim().split('|').collect();
        if parts.len() != Self::LABELS.len() {
            return Err(Error::Parse {
                block: text.to_string(),
                reason: format!("expected {} blocks, found {}", Self::LABELS.len(), parts.len()),
            });
        }
        let mut blocks = Vec::with_capacity(parts.len());
        for (part, label) in parts.iter().zip(Self::LABELS) {
            let parse_err = |reason: String| Error::Parse { block: part.to_string(), reason };
            let (found, list) = part
                .split_once(':')
                .ok_or_else(|| parse_err("missing `label:` prefix".into()))?;
            if found.trim() != *label {
                return Err(parse_err(format!("expected label `{label}`")));
            }
            let mut mask = SubsetMask::EMPTY;
            for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let e: usize = item.parse().map_err(|_| parse_err(format!("`{item}` is not an element")))?;
                if e == 0 || e > n {
                    return Err(parse_err(format!("element {e} outside 1..={n}")));
                }
                if mask.contains(e) {
                    return Err(parse_err(format!("element {e} repeated")));
                }
                mask = mask.with(e);
            }
            blocks.push(mask);
        }
        Self::from_blocks(n, &blocks)
    }

    /// Writes the `label:elements|…` text form.
    fn write_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (label, block)) in Self::LABELS.iter().zip(self.blocks()).enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{label}:{block}")?;
        }
        Ok(())
    }
}

fn validate_blocks<C: Cell>(n: usize, blocks: &[SubsetMask]) -> Result<()> {
    if blocks.len() != C::LABELS.len() {
        return Err(Error::MalformedCell(format!(
            "expected {} blocks, got {}",
            C::LABELS.len(),
            blocks.len()
        )));
    }
    if n == 0 || n > MAX_N.min(MAX_ELEMENTS) {
        return Err(Error::Parameter(format!("n = {n} out of range")));
    }
    let mut union = SubsetMask::EMPTY;
    for (label, &b) in C::LABELS.iter().zip(blocks) {
        if !union.is_disjoint(b) {
            return Err(Error::MalformedCell(format!("block {label} overlaps an earlier block")));
        }
        union |= b;
    }
    if union != SubsetMask::full(n) {
        return Err(Error::MalformedCell(format!("blocks do not partition {{1..{n}}}")));
    }
    for a in C::ANCHORS {
        if blocks[a].is_empty() {
            return Err(Error::MalformedCell(format!("anchored block {} is empty", C::LABELS[a])));
        }
    }
    Ok(())
}
