use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::cubical::{Cell, CellId};
use crate::cup::{CohomologyClass, RingTable};
use crate::error::{Error, Result};

/// One basis tensor: a critical cell id per slot.
pub type TensorTerm = Vec<CellId>;

/// A class in the `s`-fold tensor power of `H*(CΩ_n; Z_2)`, as the set of
/// basis tensors with coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorClass {
    pub s: usize,
    terms: BTreeSet<TensorTerm>,
}

impl TensorClass {
    pub fn zero(s: usize) -> Self {
        TensorClass { s, terms: BTreeSet::new() }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(table: &RingTable, s: usize) -> Self {
        let mut t = Self::zero(s);
        t.terms.insert(vec![table.basis().unit().encode(); s]);
        t
    }

    pub fn from_terms(s: usize, terms: impl IntoIterator<Item = TensorTerm>) -> Result<Self> {
        let mut t = Self::zero(s);
        for term in terms {
            t.toggle(term)?;
        }
        Ok(t)
    }

    pub fn toggle(&mut self, term: TensorTerm) -> Result<()> {
        if term.len() != self.s {
            return Err(Error::Parameter(format!("tensor term of arity {} in a class of arity {}", term.len(), self.s)));
        }
        if !self.terms.remove(&term) {
            self.terms.insert(term);
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorClass) -> Result<TensorClass> {
        let mut out = self.clone();
        for t in &other.terms {
            out.toggle(t.clone())?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, term: &[CellId]) -> bool {
        self.terms.contains(term)
    }

    pub fn terms(&self) -> impl Iterator<Item = &TensorTerm> + '_ {
        self.terms.iter()
    }
}

/// Slotwise product, bilinear over `Z_2`.
pub fn tensor_multiply(a: &TensorClass, b: &TensorClass, table: &RingTable) -> Result<TensorClass> {
    if a.s != b.s {
        return Err(Error::Parameter(format!("cannot multiply tensors of arity {} and {}", a.s, b.s)));
    }
    let basis = table.basis();
    let pairs: Vec<(&TensorTerm, &TensorTerm)> = a.terms.iter().flat_map(|x| b.terms.iter().map(move |y| (x, y))).collect();
    let expanded: Vec<Vec<TensorTerm>> = pairs
        .par_iter()
        .map(|(x, y)| {
            let mut partial: Vec<TensorTerm> = vec![Vec::with_capacity(a.s)];
            for (&l, &r) in x.iter().zip(y.iter()) {
                let ids = match table.get_by_id(l, r) {
                    Some(class) => class.ids(basis),
                    None => return Vec::new(),
                };
                if ids.is_empty() {
                    return Vec::new();
                }
                partial = partial
                    .into_iter()
                    .flat_map(|t| {
                        ids.iter().map(move |&id| {
                            let mut t = t.clone();
                            t.push(id);
                            t
                        })
                    })
                    .collect();
            }
            partial
        })
        .collect();
    let mut out = TensorClass::zero(a.s);
    for term in expanded.into_iter().flatten() {
        out.toggle(term)?;
    }
    Ok(out)
}

/// `σ` in `slot` plus `σ` in the next slot (cyclically), units elsewhere.
pub fn zero_divisor(table: &RingTable, s: usize, slot: usize, cell: CellId) -> Result<TensorClass> {
    if s < 2 || slot >= s {
        return Err(Error::Parameter(format!("slot {slot} is not valid for arity {s}")));
    }
    let unit = table.basis().unit().encode();
    let mut first = vec![unit; s];
    first[slot] = cell;
    let mut second = vec![unit; s];
    second[(slot + 1) % s] = cell;
    TensorClass::from_terms(s, [first, second])
}

/// Image under `a_1 ⊗ … ⊗ a_s ↦ a_1 ⌣ … ⌣ a_s`.
pub fn diagonal_image(class: &TensorClass, table: &RingTable) -> Result<CohomologyClass> {
    let basis = table.basis();
    let mut total: Option<CohomologyClass> = None;
    for term in &class.terms {
        let mut acc = CohomologyClass::unit(basis);
        for &id in term {
            let cell = basis
                .cells_of_id(id)
                .ok_or_else(|| Error::Parameter(format!("cell id {id} is not in the critical basis")))?;
            acc = table.multiply(&acc, &CohomologyClass::of_cell(basis, &cell)?);
        }
        total = Some(match total {
            None => acc,
            Some(t) if t.degree == acc.degree => t.add(&acc)?,
            Some(t) => {
                return Err(Error::Parameter(format!(
                    "tensor class mixes total degrees {} and {}",
                    t.degree, acc.degree
                )))
            }
        });
    }
    Ok(total.unwrap_or_else(|| CohomologyClass::zero(basis, 0)))
}

/// An expanded product of zero divisors `σ_l ⊗ 1 + 1 ⊗ σ_l` placed in
/// consecutive slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDivisorProduct {
    pub s: usize,
    /// `(slot, label)` pairs, slots 0-based; the zero divisor of the 1-cell
    /// labelled `label` occupies `slot` and `slot + 1 mod s`.
    pub factors: Vec<(usize, usize)>,
    pub product: TensorClass,
}

/// Multiplies out the zero divisors described by `factors`, checking that
/// each one lies in the kernel of the diagonal product.
pub fn zero_divisor_product(table: &RingTable, s: usize, factors: &[(usize, usize)]) -> Result<ZeroDivisorProduct> {
    let basis = table.basis();
    let mut product = TensorClass::one(table, s);
    for &(slot, label) in factors {
        let cell = basis
            .one_cell(label)
            .ok_or_else(|| Error::Parameter(format!("no critical 1-cell with label {label}")))?;
        let z = zero_divisor(table, s, slot, cell.encode())?;
        if !diagonal_image(&z, table)?.is_zero() {
            return Err(Error::Precondition(format!("factor ({slot}, {label}) is not a zero divisor")));
        }
        product = tensor_multiply(&product, &z, table)?;
        if product.is_zero() {
            break;
        }
    }
    Ok(ZeroDivisorProduct { s, factors: factors.to_vec(), product })
}
