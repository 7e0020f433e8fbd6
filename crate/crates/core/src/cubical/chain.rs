use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::cell::{Cell, CellId, Space};
use crate::error::{Error, Result};

/// A homogeneous mod-2 chain: a finite set of same-dimension cells of one space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub space: Space,
    pub dim: usize,
    support: BTreeSet<CellId>,
}

impl Chain {
    pub fn zero(space: Space, dim: usize) -> Self {
        Chain { space, dim, support: BTreeSet::new() }
    }

    pub fn from_cells<C: Cell>(dim: usize, cells: impl IntoIterator<Item = C>) -> Result<Self> {
        let mut chain = Chain::zero(C::SPACE, dim);
        for c in cells {
            chain.toggle(&c)?;
        }
        Ok(chain)
    }

    /// Adds one cell (mod 2).
    pub fn toggle<C: Cell>(&mut self, cell: &C) -> Result<()> {
        if C::SPACE != self.space || cell.dim() != self.dim {
            return Err(Error::Parameter(format!(
                "cell {cell} does not belong to a {}-chain of {}",
                self.dim, self.space
            )));
        }
        let id = cell.encode();
        if !self.support.remove(&id) {
            self.support.insert(id);
        }
        Ok(())
    }

    /// Mod-2 sum (symmetric difference of supports).
    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.space != other.space || self.dim != other.dim {
            return Err(Error::Parameter("cannot add chains of different spaces or dimensions".into()));
        }
        let support = self.support.symmetric_difference(&other.support).copied().collect();
        Ok(Chain { space: self.space, dim: self.dim, support })
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, id: CellId) -> bool {
        self.support.contains(&id)
    }

    /// Cell ids in ascending order.
    pub fn ids(&self) -> impl Iterator<Item = CellId> + '_ {
        self.support.iter().copied()
    }

    pub fn cells<C: Cell>(&self, n: usize) -> Result<Vec<C>> {
        if C::SPACE != self.space {
            return Err(Error::Parameter(format!("chain lives in {}", self.space)));
        }
        self.ids().map(|id| C::decode(n, id)).collect()
    }
}

/// Mod-2 cubical boundary; vertices have zero boundary.
pub fn boundary<C: Cell>(cell: &C) -> Chain {
    let mut chain = Chain::zero(C::SPACE, cell.dim().saturating_sub(1));
    if cell.dim() == 0 {
        return chain;
    }
    for face in cell.facets() {
        chain.toggle(&face).expect("facets share the space and dimension");
    }
    chain
}

/// Boundary of a chain, returned in dimension `dim - 1`.
pub fn chain_boundary<C: Cell>(n: usize, chain: &Chain) -> Result<Chain> {
    let mut out = Chain::zero(chain.space, chain.dim.saturating_sub(1));
    for cell in chain.cells::<C>(n)? {
        out = out.add(&boundary(&cell))?;
    }
    Ok(out)
}
