use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::field::{StatusKind, VectorField};
use crate::cubical::{Cell, CellComplex, CellId, Chain, GroundParams};
use crate::error::{Error, Result};
use crate::gf2::{GF2Matrix, GF2Vector};

/// Classification with partners stored as positions in the adjacent dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Critical(usize),
    Redundant(usize),
    Collapsible(usize),
}

/// A cell complex together with a gradient field and the derived maps.
pub struct MorseComplex<F: VectorField> {
    field: F,
    complex: CellComplex<F::Cell>,
    status: Vec<Vec<Status>>,
    critical: Vec<Vec<usize>>,
    /// `psi[d][i]`: positions (within `critical[d]`) of the critical cells
    /// reached from cell `i` by an odd number of upper gradient paths.
    psi: Vec<Vec<Box<[u32]>>>,
}

/// Result of [`MorseComplex::phi_flow`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiFlow {
    /// The stabilized chain over all cells of the critical cell's dimension.
    pub chain: GF2Vector,
    /// Number of flow steps that changed the chain.
    pub steps: usize,
}

impl<F: VectorField> MorseComplex<F> {
    /// Builds the complex, classifies every cell, checks that the pairing is
    /// a matching between facets and cofacets, and computes `psi`.
    pub fn new(field: F, params: GroundParams) -> Result<Self> {
        Self::from_complex(field, CellComplex::new(params))
    }

    pub fn from_complex(field: F, complex: CellComplex<F::Cell>) -> Result<Self> {
        let top = complex.max_dim();
        let mut status = Vec::with_capacity(top + 1);
        let mut critical = Vec::with_capacity(top + 1);
        for d in 0..=top {
            let row: Vec<Status> = complex
                .cells(d)
                .par_iter()
                .map(|cell| classify_indexed(&field, &complex, cell))
                .collect::<Result<_>>()?;
            let mut crit = Vec::new();
            let row = row
                .into_iter()
                .enumerate()
                .map(|(i, s)| match s {
                    Status::Critical(_) => {
                        crit.push(i);
                        Status::Critical(crit.len() - 1)
                    }
                    other => other,
                })
                .collect();
            status.push(row);
            critical.push(crit);
        }
        let mut morse = MorseComplex { field, complex, status, critical, psi: Vec::new() };
        morse.check_mutual()?;
        let psi = (0..=top)
            .map(|d| {
                morse.fold_upper_paths(
                    d,
                    |pos| vec![pos as u32].into_boxed_slice(),
                    |_| Box::default(),
                    |parts| xor_merge(parts.iter().flat_map(|p| p.iter().copied())),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        morse.psi = psi;
        Ok(morse)
    }

    fn check_mutual(&self) -> Result<()> {
        for (d, row) in self.status.iter().enumerate() {
            for (i, s) in row.iter().enumerate() {
                let back = match *s {
                    Status::Redundant(p) => self.status[d + 1][p] == Status::Collapsible(i),
                    Status::Collapsible(p) => self.status[d - 1][p] == Status::Redundant(i),
                    Status::Critical(_) => true,
                };
                if !back {
                    let cell = self.complex.cells(d)[i];
                    return Err(Error::ReconstructionMismatch(format!(
                        "{} pairs {cell} with a cell that does not pair back",
                        self.field.name()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn complex(&self) -> &CellComplex<F::Cell> {
        &self.complex
    }

    pub fn n(&self) -> usize {
        self.complex.n()
    }

    pub fn max_dim(&self) -> usize {
        self.complex.max_dim()
    }

    pub fn kind(&self, dim: usize, index: usize) -> StatusKind {
        match self.status[dim][index] {
            Status::Critical(_) => StatusKind::Critical,
            Status::Redundant(_) => StatusKind::Redundant,
            Status::Collapsible(_) => StatusKind::Collapsible,
        }
    }

    /// Partner position in dimension `dim ± 1`.
    pub fn partner_index(&self, dim: usize, index: usize) -> Option<usize> {
        match self.status[dim][index] {
            Status::Critical(_) => None,
            Status::Redundant(p) | Status::Collapsible(p) => Some(p),
        }
    }

    /// Position of a critical cell within the critical cells of its dimension.
    pub fn critical_position(&self, dim: usize, index: usize) -> Option<usize> {
        match self.status[dim][index] {
            Status::Critical(k) => Some(k),
            _ => None,
        }
    }

    fn locate(&self, cell: &F::Cell) -> Result<(usize, usize)> {
        let idx = self
            .complex
            .index_of(cell)
            .ok_or_else(|| Error::Parameter(format!("{cell} is not a cell of this complex")))?;
        Ok((cell.dim(), idx))
    }

    pub fn kind_of(&self, cell: &F::Cell) -> Result<StatusKind> {
        let (d, i) = self.locate(cell)?;
        Ok(self.kind(d, i))
    }

    /// Critical cells of dimension `dim` in code order.
    pub fn critical_cells(&self, dim: usize) -> Vec<F::Cell> {
        let cells = self.complex.cells(dim);
        self.critical.get(dim).map_or_else(Vec::new, |c| c.iter().map(|&i| cells[i]).collect())
    }

    /// Positions (within the dimension) of its critical cells.
    pub fn critical_indices(&self, dim: usize) -> &[usize] {
        self.critical.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn critical_counts(&self) -> Vec<usize> {
        self.critical.iter().map(Vec::len).collect()
    }

    /// Same-dimension successors of a redundant cell along upper paths:
    /// the facets of `W(τ)` other than `τ`.
    pub fn gradient_successors(&self, dim: usize, index: usize) -> Vec<usize> {
        let Status::Redundant(up) = self.status[dim][index] else {
            return Vec::new();
        };
        let coface = self.complex.cells(dim + 1)[up];
        coface
            .facets()
            .into_iter()
            .map(|f| self.complex.index_of(&f).expect("facet is a cell"))
            .filter(|&j| j != index)
            .collect()
    }

    /// Post-order fold over the graph of upper gradient paths in dimension
    /// `dim`: critical cells map to `at_critical(position)`, collapsible cells
    /// to `at_collapsible(index)`, redundant cells combine their successors.
    /// A closed path is reported as [`Error::NotGradient`].
    pub fn fold_upper_paths<T: Clone>(
        &self,
        dim: usize,
        at_critical: impl Fn(usize) -> T,
        at_collapsible: impl Fn(usize) -> T,
        combine: impl Fn(&[&T]) -> T,
    ) -> Result<Vec<T>> {
        let len = self.complex.len(dim);
        let mut memo: Vec<Option<T>> = vec![None; len];
        let mut on_stack = vec![false; len];
        for start in 0..len {
            if memo[start].is_some() {
                continue;
            }
            let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
            stack.push((start, self.gradient_successors(dim, start), 0));
            on_stack[start] = true;
            while let Some((node, succ, next)) = stack.last_mut() {
                if *next < succ.len() {
                    let child = succ[*next];
                    *next += 1;
                    if memo[child].is_some() {
                        continue;
                    }
                    if on_stack[child] {
                        let cells = self.complex.cells(dim);
                        let from = stack.iter().position(|(v, _, _)| *v == child).unwrap_or(0);
                        let cycle = stack[from..].iter().map(|(v, _, _)| cells[*v].encode()).collect();
                        return Err(Error::NotGradient(cycle));
                    }
                    on_stack[child] = true;
                    let child_succ = self.gradient_successors(dim, child);
                    stack.push((child, child_succ, 0));
                    continue;
                }
                let node = *node;
                let value = match self.status[dim][node] {
                    Status::Critical(k) => at_critical(k),
                    Status::Collapsible(_) => at_collapsible(node),
                    Status::Redundant(_) => {
                        let parts: Vec<&T> = succ.iter().map(|&c| memo[c].as_ref().expect("visited")).collect();
                        combine(&parts)
                    }
                };
                memo[node] = Some(value);
                on_stack[node] = false;
                stack.pop();
            }
        }
        Ok(memo.into_iter().map(|v| v.expect("every cell visited")).collect())
    }

    /// Critical positions in `psi` of the cell at `(dim, index)`.
    pub fn psi_indices(&self, dim: usize, index: usize) -> &[u32] {
        &self.psi[dim][index]
    }

    /// Mod-2 count of upper gradient paths from `cell` to each critical cell.
    pub fn psi_projection(&self, cell: &F::Cell) -> Result<Chain> {
        let (d, i) = self.locate(cell)?;
        let cells = self.complex.cells(d);
        let crit = &self.critical[d];
        Chain::from_cells(d, self.psi[d][i].iter().map(|&k| cells[crit[k as usize]]))
    }

    fn redundant_partner(&self, dim: usize, index: usize) -> Option<usize> {
        match self.status[dim][index] {
            Status::Redundant(p) => Some(p),
            _ => None,
        }
    }

    /// Stabilized downward flow of a critical cell: iterate
    /// `c ← c + V(∂c)` until `V(∂c) = 0`, where `V` sends a redundant cell to
    /// its partner and everything else to zero.
    pub fn phi_flow(&self, cell: &F::Cell) -> Result<PhiFlow> {
        let (d, i) = self.locate(cell)?;
        if self.critical_position(d, i).is_none() {
            return Err(Error::Precondition(format!("phi_flow needs a critical cell, got {cell}")));
        }
        let len = self.complex.len(d);
        let mut chain = GF2Vector::unit(len, i);
        if d == 0 {
            return Ok(PhiFlow { chain, steps: 0 });
        }
        let limit = len + 1;
        let cells = self.complex.cells(d);
        let lower = &self.complex;
        for steps in 0..=limit {
            let mut bd: HashMap<usize, bool> = HashMap::new();
            for j in chain.ones() {
                for f in cells[j].facets() {
                    let k = lower.index_of(&f).expect("facet is a cell");
                    *bd.entry(k).or_insert(false) ^= true;
                }
            }
            let update: BTreeSet<usize> = bd
                .into_iter()
                .filter(|&(_, odd)| odd)
                .filter_map(|(k, _)| self.redundant_partner(d - 1, k))
                .collect();
            if update.is_empty() {
                return Ok(PhiFlow { chain, steps });
            }
            for j in update {
                chain.flip(j);
            }
        }
        Err(Error::NotGradient(vec![cell.encode()]))
    }

    /// Cocycle dual to `psi`: value 1 on `τ` exactly when `cell ∈ psi(τ)`.
    pub fn lift_cocycle(&self, cell: &F::Cell) -> Result<GF2Vector> {
        let (d, i) = self.locate(cell)?;
        let k = self
            .critical_position(d, i)
            .ok_or_else(|| Error::Precondition(format!("lift_cocycle needs a critical cell, got {cell}")))?;
        let ones = self.psi[d].iter().enumerate().filter(|(_, p)| p.contains(&(k as u32))).map(|(j, _)| j);
        Ok(GF2Vector::from_indices(self.complex.len(d), ones))
    }

    /// Lifts of every critical cell of dimension `dim`, in critical order.
    pub fn lifts(&self, dim: usize) -> Vec<GF2Vector> {
        let len = self.complex.len(dim);
        let mut out = vec![GF2Vector::zeros(len); self.critical_indices(dim).len()];
        for (j, reached) in self.psi.get(dim).into_iter().flatten().enumerate() {
            for &k in reached.iter() {
                out[k as usize].flip(j);
            }
        }
        out
    }

    /// Morse coboundary `M^p → M^{p+1}`: rows are critical `(p+1)`-cells,
    /// columns critical `p`-cells; entry `(B, A)` counts mod 2 the facets
    /// `b` of `B` with `A ∈ psi(b)`.
    pub fn morse_coboundary_matrix(&self, p: usize) -> Result<GF2Matrix> {
        if p >= self.max_dim() {
            return Err(Error::Parameter(format!("Morse coboundary degree {p} out of range 0..{}", self.max_dim())));
        }
        let cols = self.critical[p].len();
        let upper = self.complex.cells(p + 1);
        let rows = self.critical[p + 1]
            .iter()
            .map(|&b| {
                let mut row = GF2Vector::zeros(cols);
                for f in upper[b].facets() {
                    let j = self.complex.index_of(&f).expect("facet is a cell");
                    for &k in self.psi[p][j].iter() {
                        row.flip(k as usize);
                    }
                }
                row
            })
            .collect();
        GF2Matrix::from_rows(cols, rows)
    }

    pub fn cell_id(&self, dim: usize, index: usize) -> CellId {
        self.complex.cells(dim)[index].encode()
    }
}

fn classify_indexed<F: VectorField>(field: &F, complex: &CellComplex<F::Cell>, cell: &F::Cell) -> Result<Status> {
    let status = field.classify(cell);
    let mismatch = |what: &str| {
        Error::ReconstructionMismatch(format!("{} classifies {cell} with {what}", field.name()))
    };
    let partner_index = |p: &F::Cell| complex.index_of(p).ok_or_else(|| mismatch("a partner outside the complex"));
    match (status.kind, status.partner) {
        (StatusKind::Critical, None) => Ok(Status::Critical(0)),
        (StatusKind::Redundant, Some(p)) => {
            if p.dim() != cell.dim() + 1 || !p.facets().contains(cell) {
                return Err(mismatch("a partner that is not a cofacet"));
            }
            Ok(Status::Redundant(partner_index(&p)?))
        }
        (StatusKind::Collapsible, Some(p)) => {
            if p.dim() + 1 != cell.dim() || !cell.facets().contains(&p) {
                return Err(mismatch("a partner that is not a facet"));
            }
            Ok(Status::Collapsible(partner_index(&p)?))
        }
        _ => Err(mismatch("an inconsistent partner")),
    }
}

/// Sorted multiset with pairs cancelled.
fn xor_merge(items: impl Iterator<Item = u32>) -> Box<[u32]> {
    let mut v: Vec<u32> = items.collect();
    v.sort_unstable();
    let mut out = Vec::with_capacity(v.len());
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(v[i]);
        }
        i = j;
    }
    out.into_boxed_slice()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::CCell;
    use crate::morse::field::WField;

    #[test]
    fn xor_merge_cancels_pairs() {
        assert_eq!(&*xor_merge([3, 1, 3, 2, 1, 1].into_iter()), &[1, 2]);
        assert!(xor_merge(std::iter::empty()).is_empty());
    }

    #[test]
    fn psi_of_critical_and_collapsible() {
        let morse = MorseComplex::new(WField, GroundParams::new(4).unwrap()).unwrap();
        let crit = morse.critical_cells(1)[0];
        let chain = morse.psi_projection(&crit).unwrap();
        assert_eq!(chain.ids().collect::<Vec<_>>(), vec![crit.encode()]);

        let collapsible = CCell::from_lists(4, [&[], &[1], &[], &[], &[2], &[], &[3], &[4]]).unwrap();
        assert_eq!(morse.kind_of(&collapsible).unwrap(), StatusKind::Collapsible);
        assert!(morse.psi_projection(&collapsible).unwrap().is_zero());
    }

    #[test]
    fn phi_flow_rejects_non_critical() {
        let morse = MorseComplex::new(WField, GroundParams::new(3).unwrap()).unwrap();
        let redundant = CCell::from_lists(3, [&[1], &[], &[], &[], &[2], &[], &[3], &[]]).unwrap();
        assert!(matches!(morse.phi_flow(&redundant), Err(Error::Precondition(_))));
        assert!(matches!(morse.lift_cocycle(&redundant), Err(Error::Precondition(_))));
    }
}
