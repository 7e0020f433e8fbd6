use crate::cubical::{CCell, CellComplex, GroundParams};
use crate::error::{Error, Result};
use crate::gf2::{kernel_basis, rank, sparse_rank, EchelonBasis, GF2Matrix, GF2Vector};

/// Largest `n` the brute-force oracle accepts.
pub const ORACLE_MAX_N: usize = 6;

/// Cohomology of `CΩ_n` computed directly from the coboundary matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub n: usize,
    pub betti: Vec<usize>,
    /// `rank δ_d : C^d → C^{d+1}`.
    pub ranks: Vec<usize>,
    pub euler_characteristic: i64,
    /// Cocycles whose classes form a basis, per degree (empty unless requested).
    pub representatives: Vec<Vec<GF2Vector>>,
}

/// `b_d = dim ker δ_d − rank δ_{d−1}` over `GF(2)`, optionally with
/// representative cocycles chosen greedily from the kernel basis.
pub fn betti_oracle(params: GroundParams, representatives: bool) -> Result<BettiReport> {
    if params.n() > ORACLE_MAX_N {
        return Err(Error::Resource(format!(
            "the coboundary-matrix oracle is limited to n ≤ {ORACLE_MAX_N}, got n = {}",
            params.n()
        )));
    }
    let complex = CellComplex::<CCell>::new(params);
    let top = params.max_dim();
    let mut ranks: Vec<usize> =
        (0..top).map(|d| complex.coboundary_support(d).map(|rows| sparse_rank(&rows))).collect::<Result<_>>()?;
    ranks.push(0);
    let betti: Vec<usize> = (0..=top)
        .map(|d| complex.len(d) - ranks[d] - if d == 0 { 0 } else { ranks[d - 1] })
        .collect();
    let euler_characteristic = betti.iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    let reps = if representatives {
        let matrices: Vec<GF2Matrix> = (0..top).map(|d| complex.coboundary_matrix(d)).collect::<Result<_>>()?;
        debug_assert!(matrices.iter().zip(&ranks).all(|(m, &r)| rank(m) == r));
        (0..=top).map(|d| cocycle_basis(&complex, &matrices, d, betti[d])).collect()
    } else {
        Vec::new()
    };
    Ok(BettiReport { n: params.n(), betti, ranks, euler_characteristic, representatives: reps })
}

fn cocycle_basis(complex: &CellComplex<CCell>, matrices: &[GF2Matrix], d: usize, want: usize) -> Vec<GF2Vector> {
    let len = complex.len(d);
    let mut echelon = EchelonBasis::new(len, 0);
    if d > 0 {
        for col in matrices[d - 1].transpose().into_rows() {
            echelon.insert(col, GF2Vector::zeros(0));
        }
    }
    let kernel = match matrices.get(d) {
        Some(m) => kernel_basis(m).into_rows(),
        None => (0..len).map(|i| GF2Vector::unit(len, i)).collect(),
    };
    let mut out = Vec::with_capacity(want);
    for v in kernel {
        if echelon.insert(v.clone(), GF2Vector::zeros(0)) {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_betti_numbers() {
        let r3 = betti_oracle(GroundParams::new(3).unwrap(), true).unwrap();
        assert_eq!(r3.betti, vec![1, 7]);
        assert_eq!(r3.euler_characteristic, -6);
        let r4 = betti_oracle(GroundParams::new(4).unwrap(), true).unwrap();
        assert_eq!(r4.betti, vec![1, 4, 17]);
        assert_eq!(r4.euler_characteristic, 14);
        assert_eq!(r4.representatives.iter().map(Vec::len).collect::<Vec<_>>(), r4.betti);
    }

    #[test]
    fn refuses_large_n() {
        assert!(matches!(betti_oracle(GroundParams::new(7).unwrap(), false), Err(Error::Resource(_))));
    }
}
