use rayon::prelude::*;

use super::cells::{cup_cells, splits};
use crate::cubical::{CCell, Cell, CellComplex};
use crate::error::{Error, Result};
use crate::gf2::GF2Vector;

/// A `Z_2` cochain on `CΩ_n`, indexed by the cells of one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub coeffs: GF2Vector,
}

impl Cochain {
    pub fn zero(complex: &CellComplex<CCell>, degree: usize) -> Self {
        Cochain { degree, coeffs: GF2Vector::zeros(complex.len(degree)) }
    }

    pub fn new(complex: &CellComplex<CCell>, degree: usize, coeffs: GF2Vector) -> Result<Self> {
        if coeffs.len() != complex.len(degree) {
            return Err(Error::Dimension { expected: complex.len(degree), got: coeffs.len() });
        }
        Ok(Cochain { degree, coeffs })
    }

    /// Dual of a single cell.
    pub fn dual(complex: &CellComplex<CCell>, cell: &CCell) -> Result<Self> {
        let i = complex
            .index_of(cell)
            .ok_or_else(|| Error::Parameter(format!("{cell} is not a cell of CΩ_{}", complex.n())))?;
        Ok(Cochain { degree: cell.dim(), coeffs: GF2Vector::unit(complex.len(cell.dim()), i) })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.degree != other.degree {
            return Err(Error::Dimension { expected: self.degree, got: other.degree });
        }
        Ok(Cochain { degree: self.degree, coeffs: self.coeffs.try_add(&other.coeffs)? })
    }
}

/// `δu`; zero (over no cells) past the top dimension.
pub fn coboundary(complex: &CellComplex<CCell>, u: &Cochain) -> Result<Cochain> {
    if u.degree >= complex.max_dim() {
        return Ok(Cochain::zero(complex, u.degree + 1));
    }
    let coeffs = complex.coboundary_matrix(u.degree)?.mul_vec(&u.coeffs)?;
    Ok(Cochain { degree: u.degree + 1, coeffs })
}

/// `u ⌣ v`. Sparse operands are multiplied pairwise through [`cup_cells`];
/// otherwise the product is evaluated on each cell of degree
/// `deg u + deg v` by summing over its splits into front and back faces.
pub fn cup_cochains(complex: &CellComplex<CCell>, u: &Cochain, v: &Cochain) -> Result<Cochain> {
    for w in [u, v] {
        if w.coeffs.len() != complex.len(w.degree) {
            return Err(Error::Dimension { expected: complex.len(w.degree), got: w.coeffs.len() });
        }
    }
    let degree = u.degree + v.degree;
    let pairwise = u.coeffs.count_ones().saturating_mul(v.coeffs.count_ones());
    if pairwise <= complex.len(degree) {
        cup_pairwise(complex, u, v)
    } else {
        Ok(cup_by_splits(complex, u, v))
    }
}

fn cup_pairwise(complex: &CellComplex<CCell>, u: &Cochain, v: &Cochain) -> Result<Cochain> {
    let degree = u.degree + v.degree;
    let mut coeffs = GF2Vector::zeros(complex.len(degree));
    let (left, right) = (complex.cells(u.degree), complex.cells(v.degree));
    for i in u.coeffs.ones() {
        for j in v.coeffs.ones() {
            if let Some(e) = cup_cells(&left[i], &right[j])? {
                coeffs.flip(complex.index_of(&e).expect("product is a cell"));
            }
        }
    }
    Ok(Cochain { degree, coeffs })
}

fn cup_by_splits(complex: &CellComplex<CCell>, u: &Cochain, v: &Cochain) -> Cochain {
    let degree = u.degree + v.degree;
    let bits: Vec<bool> = complex
        .cells(degree)
        .par_iter()
        .map(|e| {
            splits(e, v.degree).iter().fold(false, |acc, (c, d)| {
                let c = complex.index_of(c).expect("split factor is a cell");
                let d = complex.index_of(d).expect("split factor is a cell");
                acc ^ (u.coeffs.get(c) && v.coeffs.get(d))
            })
        })
        .collect();
    Cochain { degree, coeffs: GF2Vector::from_bools(&bits) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::GroundParams;

    #[test]
    fn cochain_cup_of_duals_is_cell_cup() {
        let complex = CellComplex::<CCell>::new(GroundParams::new(4).unwrap());
        for c in complex.cells(1) {
            for d in complex.cells(1) {
                let prod = cup_cochains(
                    &complex,
                    &Cochain::dual(&complex, c).unwrap(),
                    &Cochain::dual(&complex, d).unwrap(),
                )
                .unwrap();
                match cup_cells(c, d).unwrap() {
                    Some(e) => assert_eq!(prod, Cochain::dual(&complex, &e).unwrap()),
                    None => assert!(prod.is_zero()),
                }
            }
        }
    }

    #[test]
    fn evaluation_routes_agree() {
        let complex = CellComplex::<CCell>::new(GroundParams::new(5).unwrap());
        let mut seed = 0x9e37_79b9_u64;
        let mut random = |d: usize| {
            let bits: Vec<bool> = (0..complex.len(d))
                .map(|_| {
                    seed ^= seed << 13;
                    seed ^= seed >> 7;
                    seed ^= seed << 17;
                    seed & 3 == 0
                })
                .collect();
            Cochain { degree: d, coeffs: GF2Vector::from_bools(&bits) }
        };
        for (p, q) in [(0, 1), (1, 1), (1, 2), (0, 3)] {
            let (u, v) = (random(p), random(q));
            assert_eq!(cup_pairwise(&complex, &u, &v).unwrap(), cup_by_splits(&complex, &u, &v));
        }
    }

    #[test]
    fn zero_annihilates() {
        let complex = CellComplex::<CCell>::new(GroundParams::new(4).unwrap());
        let u = Cochain::dual(&complex, &complex.cells(1)[3]).unwrap();
        let z = Cochain::zero(&complex, 1);
        assert!(cup_cochains(&complex, &u, &z).unwrap().is_zero());
    }

    #[test]
    fn length_checked() {
        let complex = CellComplex::<CCell>::new(GroundParams::new(3).unwrap());
        let bad = Cochain { degree: 0, coeffs: GF2Vector::zeros(1) };
        assert!(cup_cochains(&complex, &bad, &bad).is_err());
    }
}
