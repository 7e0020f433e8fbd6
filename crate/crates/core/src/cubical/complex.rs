use std::collections::HashMap;

use rayon::prelude::*;

use super::cell::{Cell, CellId, GroundParams};
use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;

/// Lazily enumerates all cells in ascending code order, optionally only one dimension.
pub fn enumerate_cells<C: Cell>(params: GroundParams, dim: Option<usize>) -> impl Iterator<Item = C> {
    let n = params.n();
    let end = C::base().pow(n as u32);
    (0..end)
        .filter_map(move |id| C::decode(n, id).ok())
        .filter(move |c| dim.map_or(true, |d| c.dim() == d))
}

/// All cells of one space for fixed `n`, grouped by dimension and indexed.
///
/// Within a dimension cells are sorted by code; that position is the
/// coordinate used by cochain vectors and coboundary matrices.
#[derive(Clone, Debug)]
pub struct CellComplex<C: Cell> {
    params: GroundParams,
    by_dim: Vec<Vec<C>>,
    index: HashMap<CellId, usize>,
}

impl<C: Cell> CellComplex<C> {
    pub fn new(params: GroundParams) -> Self {
        let mut by_dim = vec![Vec::new(); params.max_dim() + 1];
        let mut index = HashMap::new();
        for cell in enumerate_cells::<C>(params, None) {
            let bucket = &mut by_dim[cell.dim()];
            index.insert(cell.encode(), bucket.len());
            bucket.push(cell);
        }
        CellComplex { params, by_dim, index }
    }

    pub fn params(&self) -> GroundParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn max_dim(&self) -> usize {
        self.params.max_dim()
    }

    /// Cells of dimension `dim` (empty above the top dimension).
    pub fn cells(&self, dim: usize) -> &[C] {
        self.by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self, dim: usize) -> usize {
        self.cells(dim).len()
    }

    pub fn total(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// Position of a cell within its dimension.
    pub fn index_of(&self, cell: &C) -> Option<usize> {
        self.index.get(&cell.encode()).copied()
    }

    pub fn index_of_id(&self, id: CellId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(d, cells)| if d % 2 == 0 { cells.len() as i64 } else { -(cells.len() as i64) })
            .sum()
    }

    /// Matrix of `δ: C^p → C^{p+1}`: rows are `(p+1)`-cells, columns `p`-cells,
    /// entry 1 when the column cell is a facet of the row cell.
    pub fn coboundary_matrix(&self, p: usize) -> Result<GF2Matrix> {
        if p >= self.max_dim() {
            return Err(Error::Parameter(format!(
                "coboundary degree {p} out of range 0..{}",
                self.max_dim()
            )));
        }
        let cols = self.len(p);
        let rows = self.cells(p + 1)
            .par_iter()
            .map(|cell| {
                let idx = cell.facets().into_iter().map(|f| self.index_of(&f).expect("facet is a cell"));
                crate::gf2::GF2Vector::from_indices(cols, idx)
            })
            .collect();
        GF2Matrix::from_rows(cols, rows)
    }

    /// Same matrix as [`CellComplex::coboundary_matrix`] in sparse form:
    /// sorted, mod-2 reduced column positions per row.
    pub fn coboundary_support(&self, p: usize) -> Result<Vec<Vec<u32>>> {
        if p >= self.max_dim() {
            return Err(Error::Parameter(format!(
                "coboundary degree {p} out of range 0..{}",
                self.max_dim()
            )));
        }
        Ok(self
            .cells(p + 1)
            .par_iter()
            .map(|cell| {
                let mut idx: Vec<u32> =
                    cell.facets().iter().map(|f| self.index_of(f).expect("facet is a cell") as u32).collect();
                idx.sort_unstable();
                let mut out: Vec<u32> = Vec::with_capacity(idx.len());
                for i in idx {
                    if out.last() == Some(&i) {
                        out.pop();
                    } else {
                        out.push(i);
                    }
                }
                out
            })
            .collect())
    }
}

/// Cell counts by dimension for one space.
pub fn cell_counts<C: Cell>(params: GroundParams) -> Vec<usize> {
    let mut counts = vec![0; params.max_dim() + 1];
    for c in enumerate_cells::<C>(params, None) {
        counts[c.dim()] += 1;
    }
    counts
}
