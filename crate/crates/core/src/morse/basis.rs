use std::collections::HashMap;


use super::field::classify_w;
use crate::cubical::{enumerate_cells, CCell, Cell, CellId, GroundParams};
use crate::error::{Error, Result};

/// Critical cells of `W`, grouped by dimension and sorted by code.
///
/// Their duals form a graded basis of `H*(CΩ_n; Z_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseBasis {
    pub n: usize,
    cells: Vec<Vec<CCell>>,
    position: HashMap<CellId, usize>,
}

/// Enumerates the critical cells of `W`, optionally restricted to one dimension.
pub fn critical_cells(params: GroundParams, dim: Option<usize>) -> MorseBasis {
    let mut cells = vec![Vec::new(); params.max_dim() + 1];
    for c in enumerate_cells::<CCell>(params, dim) {
        if classify_w(&c).is_critical() {
            cells[c.dim()].push(c);
        }
    }
    MorseBasis::from_cells(params.n(), cells)
}

impl MorseBasis {
    pub fn from_cells(n: usize, cells: Vec<Vec<CCell>>) -> Self {
        let mut position = HashMap::new();
        for row in &cells {
            for (i, c) in row.iter().enumerate() {
                position.insert(c.encode(), i);
            }
        }
        MorseBasis { n, cells, position }
    }

    pub fn max_dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn cells(&self, dim: usize) -> &[CCell] {
        self.cells.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells(dim).len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn ids(&self, dim: usize) -> Vec<CellId> {
        self.cells(dim).iter().map(Cell::encode).collect()
    }

    /// Position of a critical cell within its dimension.
    pub fn position(&self, cell: &CCell) -> Option<usize> {
        self.position.get(&cell.encode()).copied().filter(|&i| self.cells(cell.dim()).get(i) == Some(cell))
    }

    /// Critical cell with the given code.
    pub fn cells_of_id(&self, id: CellId) -> Option<CCell> {
        let cell = CCell::decode(self.n, id).ok()?;
        self.position(&cell).map(|_| cell)
    }

    pub fn require_position(&self, cell: &CCell) -> Result<usize> {
        self.position(cell).ok_or_else(|| Error::Precondition(format!("{cell} is not a critical cell of W")))
    }

    /// The unique critical vertex `({n}, ∅, {1..n-1}, ∅)`, the unit class.
    pub fn unit(&self) -> CCell {
        self.cells(0)[0]
    }

    /// Critical 1-cell with `y4 = {w}`.
    pub fn one_cell(&self, w: usize) -> Option<CCell> {
        self.cells(1).iter().copied().find(|c| c.y(4).min() == Some(w))
    }

    /// Critical 1-cells ordered by their `y4` label `1..=n`.
    pub fn one_cells_by_label(&self) -> Vec<CCell> {
        (1..=self.n).filter_map(|w| self.one_cell(w)).collect()
    }
}
