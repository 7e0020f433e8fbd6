use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use super::cells::splits;
use super::cochain::{cup_cochains, Cochain};
use crate::cubical::{CCell, Cell, CellComplex, CellId, GroundParams};
use crate::error::{Error, Result};
use crate::gf2::{EchelonBasis, GF2Vector};
use crate::morse::{MorseBasis, MorseComplex, WField};

/// A class in `H^degree(CΩ_n; Z_2)` written in the critical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    pub degree: usize,
    pub coeffs: GF2Vector,
}

impl CohomologyClass {
    /// Zero class; degrees past the top have an empty basis.
    pub fn zero(basis: &MorseBasis, degree: usize) -> Self {
        CohomologyClass { degree, coeffs: GF2Vector::zeros(basis.count(degree)) }
    }

    pub fn from_cells(basis: &MorseBasis, degree: usize, cells: &[CCell]) -> Result<Self> {
        let mut class = Self::zero(basis, degree);
        for cell in cells {
            if cell.dim() != degree {
                return Err(Error::Dimension { expected: degree, got: cell.dim() });
            }
            class.coeffs.flip(basis.require_position(cell)?);
        }
        Ok(class)
    }

    /// Dual class of one critical cell.
    pub fn of_cell(basis: &MorseBasis, cell: &CCell) -> Result<Self> {
        Self::from_cells(basis, cell.dim(), &[*cell])
    }

    pub fn unit(basis: &MorseBasis) -> Self {
        Self::of_cell(basis, &basis.unit()).expect("the unit is critical")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn add(&self, other: &CohomologyClass) -> Result<CohomologyClass> {
        if self.degree != other.degree {
            return Err(Error::Dimension { expected: self.degree, got: other.degree });
        }
        Ok(CohomologyClass { degree: self.degree, coeffs: self.coeffs.try_add(&other.coeffs)? })
    }

    /// Support as critical cells, in basis order.
    pub fn cells(&self, basis: &MorseBasis) -> Vec<CCell> {
        self.coeffs.ones().map(|i| basis.cells(self.degree)[i]).collect()
    }

    pub fn ids(&self, basis: &MorseBasis) -> Vec<CellId> {
        self.cells(basis).iter().map(Cell::encode).collect()
    }
}

/// Cohomology ring of `CΩ_n` through the Morse complex of `W`.
///
/// Classes are lifted to cocycles, multiplied at cochain level and read back
/// by pairing with the flow chains of the critical cells.
pub struct CupRing {
    morse: MorseComplex<WField>,
    basis: MorseBasis,
    lifts: Vec<Vec<GF2Vector>>,
    flows: Vec<Vec<GF2Vector>>,
    /// For each degree and each cell in some flow support, its splits by
    /// back-face degree, as cell positions.
    split_cache: Vec<HashMap<usize, SplitsByDegree>>,
}

type SplitsByDegree = Vec<Vec<(u32, u32)>>;

impl CupRing {
    pub fn new(params: GroundParams) -> Result<Self> {
        let morse = MorseComplex::new(WField, params)?;
        let top = params.max_dim();
        let basis = MorseBasis::from_cells(params.n(), (0..=top).map(|d| morse.critical_cells(d)).collect());
        let lifts = (0..=top).map(|d| morse.lifts(d)).collect();
        let flows = (0..=top)
            .map(|d| {
                basis
                    .cells(d)
                    .par_iter()
                    .map(|c| morse.phi_flow(c).map(|f| f.chain))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let complex = morse.complex();
        let split_cache = flows
            .iter()
            .enumerate()
            .map(|(d, fl)| {
                let support: BTreeSet<usize> = fl.iter().flat_map(|f| f.ones()).collect();
                support
                    .into_par_iter()
                    .map(|e| {
                        let cell = complex.cells(d)[e];
                        let by_q = (0..=d)
                            .map(|q| {
                                splits(&cell, q)
                                    .iter()
                                    .map(|(c, d)| {
                                        let c = complex.index_of(c).expect("split factor is a cell");
                                        let d = complex.index_of(d).expect("split factor is a cell");
                                        (c as u32, d as u32)
                                    })
                                    .collect()
                            })
                            .collect();
                        (e, by_q)
                    })
                    .collect()
            })
            .collect();
        Ok(CupRing { morse, basis, lifts, flows, split_cache })
    }

    pub fn n(&self) -> usize {
        self.basis.n
    }

    pub fn basis(&self) -> &MorseBasis {
        &self.basis
    }

    pub fn morse(&self) -> &MorseComplex<WField> {
        &self.morse
    }

    pub fn complex(&self) -> &CellComplex<CCell> {
        self.morse.complex()
    }

    /// Flow chain of the `i`-th critical cell of degree `dim`.
    pub fn flow(&self, dim: usize, i: usize) -> &GF2Vector {
        &self.flows[dim][i]
    }

    /// Cocycle representing `class`.
    pub fn lift(&self, class: &CohomologyClass) -> Result<Cochain> {
        let mut coeffs = GF2Vector::zeros(self.complex().len(class.degree));
        for i in class.coeffs.ones() {
            coeffs.xor_assign(&self.lifts[class.degree][i]);
        }
        Cochain::new(self.complex(), class.degree, coeffs)
    }

    /// Coefficient of critical `A` is the pairing of `u` with the flow of `A`.
    pub fn project(&self, u: &Cochain) -> CohomologyClass {
        let bits: Vec<bool> = self
            .flows
            .get(u.degree)
            .map_or(&[][..], Vec::as_slice)
            .iter()
            .map(|flow| flow.dot(&u.coeffs))
            .collect();
        CohomologyClass { degree: u.degree, coeffs: GF2Vector::from_bools(&bits) }
    }

    /// Class of a cocycle found by expressing it in the span of the lifted
    /// basis and the coboundaries. Fails when `u` is not a cocycle.
    pub fn project_by_span(&self, u: &Cochain) -> Result<CohomologyClass> {
        let d = u.degree;
        let lifts = &self.lifts[d];
        let complex = self.complex();
        let mut echelon = EchelonBasis::new(complex.len(d), lifts.len());
        for (i, lift) in lifts.iter().enumerate() {
            echelon.insert(lift.clone(), GF2Vector::unit(lifts.len(), i));
        }
        if d > 0 {
            for col in complex.coboundary_matrix(d - 1)?.transpose().into_rows() {
                echelon.insert(col, GF2Vector::zeros(lifts.len()));
            }
        }
        let tag = echelon
            .express(&u.coeffs)
            .ok_or_else(|| Error::Precondition(format!("degree-{d} cochain is not a cocycle")))?;
        Ok(CohomologyClass { degree: d, coeffs: tag })
    }

    /// `a ⌣ b`, evaluating the cochain product only on flow supports.
    pub fn morse_cup(&self, a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
        let degree = a.degree + b.degree;
        if degree > self.morse.max_dim() {
            return Ok(CohomologyClass::zero(&self.basis, degree));
        }
        let (la, lb) = (self.lift(a)?, self.lift(b)?);
        let cache = &self.split_cache[degree];
        let bits: Vec<bool> = self.flows[degree]
            .iter()
            .map(|flow| {
                flow.ones().fold(false, |acc, e| {
                    cache[&e][b.degree].iter().fold(acc, |acc, &(c, d)| {
                        acc ^ (la.coeffs.get(c as usize) && lb.coeffs.get(d as usize))
                    })
                })
            })
            .collect();
        Ok(CohomologyClass { degree, coeffs: GF2Vector::from_bools(&bits) })
    }

    /// `a ⌣ b` through the full cochain product, read back both by flow
    /// pairing and by span expression; the two must agree.
    pub fn morse_cup_checked(&self, a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
        let degree = a.degree + b.degree;
        if degree > self.morse.max_dim() {
            return Ok(CohomologyClass::zero(&self.basis, degree));
        }
        let product = cup_cochains(self.complex(), &self.lift(a)?, &self.lift(b)?)?;
        let by_flow = self.project(&product);
        let by_span = self.project_by_span(&product)?;
        if by_flow != by_span {
            return Err(Error::ReconstructionMismatch(format!(
                "flow and span projections disagree in degree {degree}"
            )));
        }
        Ok(by_flow)
    }

    /// Product of a list of classes, left to right.
    pub fn product(&self, factors: &[CohomologyClass]) -> Result<CohomologyClass> {
        factors.iter().try_fold(CohomologyClass::unit(&self.basis), |acc, f| self.morse_cup(&acc, f))
    }

    /// Product of the basis classes of the given critical cells.
    pub fn product_of_cells(&self, cells: &[CCell]) -> Result<CohomologyClass> {
        let classes = cells
            .iter()
            .map(|c| CohomologyClass::of_cell(&self.basis, c))
            .collect::<Result<Vec<_>>>()?;
        self.product(&classes)
    }

    /// Full multiplication table on the critical basis.
    pub fn ring_table(&self) -> Result<RingTable> {
        let top = self.morse.max_dim();
        let mut pairs = Vec::new();
        for p in 0..=top {
            for q in 0..=top - p {
                for a in self.basis.cells(p) {
                    for b in self.basis.cells(q) {
                        pairs.push((*a, *b));
                    }
                }
            }
        }
        let products = pairs
            .par_iter()
            .map(|(a, b)| {
                let ca = CohomologyClass::of_cell(&self.basis, a)?;
                let cb = CohomologyClass::of_cell(&self.basis, b)?;
                Ok(((a.encode(), b.encode()), self.morse_cup(&ca, &cb)?))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(RingTable { basis: self.basis.clone(), products })
    }
}

/// Products of all pairs of critical basis classes whose degrees fit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTable {
    basis: MorseBasis,
    products: BTreeMap<(CellId, CellId), CohomologyClass>,
}

impl RingTable {
    pub fn basis(&self) -> &MorseBasis {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.basis.n
    }

    pub fn len(&self) -> usize {
        self.products.len()
    }

    pub fn is_empty(&self) -> bool {
        self.products.is_empty()
    }

    /// Product of two basis cells, `None` when the degrees overflow.
    pub fn get(&self, a: &CCell, b: &CCell) -> Option<&CohomologyClass> {
        self.products.get(&(a.encode(), b.encode()))
    }

    /// Product of two basis cells given by id.
    pub fn get_by_id(&self, a: CellId, b: CellId) -> Option<&CohomologyClass> {
        self.products.get(&(a, b))
    }

    pub fn entries(&self) -> impl Iterator<Item = (CellId, CellId, &CohomologyClass)> + '_ {
        self.products.iter().map(|(&(a, b), c)| (a, b, c))
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, a: &CohomologyClass, b: &CohomologyClass) -> CohomologyClass {
        let mut out = CohomologyClass::zero(&self.basis, a.degree + b.degree);
        for i in a.coeffs.ones() {
            for j in b.coeffs.ones() {
                let key = (self.basis.cells(a.degree)[i].encode(), self.basis.cells(b.degree)[j].encode());
                if let Some(c) = self.products.get(&key) {
                    out.coeffs.xor_assign(&c.coeffs);
                }
            }
        }
        out
    }

    /// Nested map `left id → right id → support ids`.
    pub fn to_id_map(&self) -> BTreeMap<CellId, BTreeMap<CellId, Vec<CellId>>> {
        let mut out: BTreeMap<CellId, BTreeMap<CellId, Vec<CellId>>> = BTreeMap::new();
        for (&(a, b), class) in &self.products {
            out.entry(a).or_default().insert(b, class.ids(&self.basis));
        }
        out
    }
}
