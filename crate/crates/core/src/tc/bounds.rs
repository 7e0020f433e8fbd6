use serde::Serialize;

use super::cover::build_cover_sets;
use super::tensor::{zero_divisor_product, ZeroDivisorProduct};
use super::verify::certificate_coefficient;
use crate::cubical::{CellId, GroundParams};
use crate::cup::{CupRing, RingTable};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// Largest tensor arity expanded.
pub const MAX_S: usize = 6;

/// Largest `n` for which the ring table is built.
const MAX_N: usize = 6;

/// Certified bounds `lower ≤ TC_s(CΩ_n) ≤ upper`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub s: usize,
    pub lower: usize,
    pub upper: usize,
    pub sharp: bool,
    /// Basis tensors (cell ids per slot) with coefficient 1 in the product.
    pub certificate: Vec<Vec<CellId>>,
    /// Block size of the cover sets used, absent for the all-generators product.
    pub j_used: Option<usize>,
    /// Zero divisors multiplied, as `[slot, label]` with 1-based slots.
    pub factors: Vec<[usize; 2]>,
}

/// How the product was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroDivisorRoute {
    /// One zero divisor per element of each cover set.
    Cover { j: usize },
    /// `σ_l ⊗ 1 + 1 ⊗ σ_l` for every label, `s = 2` only.
    AllGenerators,
}

/// Bounds for `TC = TC_2`.
pub fn tc_bounds(params: GroundParams) -> Result<BoundsReport> {
    tcs_bounds(params, 2)
}

/// Builds the ring table for `n` and computes the `TC_s` bounds.
pub fn tcs_bounds(params: GroundParams, s: usize) -> Result<BoundsReport> {
    check_scope(params.n(), s)?;
    let table = CupRing::new(params)?.ring_table()?;
    tcs_bounds_with(&table, s)
}

fn check_scope(n: usize, s: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::Parameter(format!("TC bounds are stated for n ≥ 4, got n = {n}")));
    }
    if s < 2 {
        return Err(Error::Parameter(format!("s must be at least 2, got {s}")));
    }
    if n > MAX_N || s > MAX_S {
        return Err(Error::Resource(format!("tensor expansion is limited to n ≤ {MAX_N}, s ≤ {MAX_S}")));
    }
    Ok(())
}

/// Lower bound from the longest nonzero product of zero divisors among the
/// candidate routes, upper bound `s · (n − 2)`.
pub fn tcs_bounds_with(table: &RingTable, s: usize) -> Result<BoundsReport> {
    let n = table.n();
    check_scope(n, s)?;
    let mut candidates: Vec<(ZeroDivisorRoute, Vec<(usize, usize)>)> = Vec::new();
    for j in 2..n {
        if let Ok(cover) = build_cover_sets(n, j, s) {
            candidates.push((ZeroDivisorRoute::Cover { j }, cover_factors(&cover.sets)));
        }
    }
    if s == 2 {
        candidates.push((ZeroDivisorRoute::AllGenerators, (1..=n).map(|l| (0, l)).collect()));
    }
    // stable: among equal lengths the cover route stays first
    candidates.sort_by(|a, b| b.1.len().cmp(&a.1.len()));
    for (route, factors) in candidates {
        if let Some(report) = certified(table, s, route, &factors)? {
            return Ok(report);
        }
    }
    Ok(BoundsReport {
        n,
        s,
        lower: 0,
        upper: s * (n - 2),
        sharp: false,
        certificate: Vec::new(),
        j_used: None,
        factors: Vec::new(),
    })
}

/// Bounds from the cover sets with block size `j` only.
pub fn tcs_bounds_for_j(table: &RingTable, s: usize, j: usize) -> Result<BoundsReport> {
    let n = table.n();
    check_scope(n, s)?;
    let cover = build_cover_sets(n, j, s)?;
    let factors = cover_factors(&cover.sets);
    certified(table, s, ZeroDivisorRoute::Cover { j }, &factors)?
        .ok_or_else(|| Error::Infeasible(format!("the product of the {} zero divisors for j = {j} vanishes", factors.len())))
}

fn cover_factors(sets: &[SubsetMask]) -> Vec<(usize, usize)> {
    sets.iter().enumerate().flat_map(|(i, v)| v.iter().map(move |l| (i, l))).collect()
}

fn certified(
    table: &RingTable,
    s: usize,
    route: ZeroDivisorRoute,
    factors: &[(usize, usize)],
) -> Result<Option<BoundsReport>> {
    let n = table.n();
    let zdp = zero_divisor_product(table, s, factors)?;
    if zdp.product.is_zero() {
        return Ok(None);
    }
    let certificate = certify(table, &zdp)?;
    let upper = s * (n - 2);
    Ok(Some(BoundsReport {
        n,
        s,
        lower: factors.len(),
        upper,
        sharp: factors.len() == upper,
        certificate,
        j_used: match route {
            ZeroDivisorRoute::Cover { j } => Some(j),
            ZeroDivisorRoute::AllGenerators => None,
        },
        factors: factors.iter().map(|&(slot, l)| [slot + 1, l]).collect(),
    }))
}

/// The first surviving term and, when present, its cyclic shift, each
/// re-checked by independent counting.
fn certify(table: &RingTable, zdp: &ZeroDivisorProduct) -> Result<Vec<Vec<CellId>>> {
    let first = zdp.product.terms().next().expect("nonzero product").clone();
    let mut shifted = first.clone();
    shifted.rotate_right(1);
    let mut certificate = vec![first];
    if shifted != certificate[0] && zdp.product.contains(&shifted) {
        certificate.push(shifted);
    }
    let basis = table.basis();
    for term in &certificate {
        let cells = term
            .iter()
            .map(|&id| basis.cells_of_id(id).ok_or_else(|| Error::Parameter(format!("unknown cell id {id}"))))
            .collect::<Result<Vec<_>>>()?;
        if !certificate_coefficient(table.n(), zdp.s, &zdp.factors, &cells)? {
            return Err(Error::ReconstructionMismatch(format!(
                "independent count gives coefficient 0 for certificate term {term:?}"
            )));
        }
    }
    Ok(certificate)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scope_errors() {
        assert!(matches!(tc_bounds(GroundParams::new(3).unwrap()), Err(Error::Parameter(_))));
        assert!(matches!(tcs_bounds(GroundParams::new(4).unwrap(), 1), Err(Error::Parameter(_))));
        assert!(matches!(tcs_bounds(GroundParams::new(4).unwrap(), 7), Err(Error::Resource(_))));
    }

    #[test]
    fn n4_is_sharp() {
        let r = tc_bounds(GroundParams::new(4).unwrap()).unwrap();
        assert_eq!((r.lower, r.upper, r.sharp, r.j_used), (4, 4, true, Some(2)));
        assert!(!r.certificate.is_empty());
    }
}
