use super::ring::CohomologyClass;
use crate::cubical::{CCell, Cell};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::morse::MorseBasis;

/// Product of distinct critical 1-cells, by closed form.
///
/// With `D` the set of their `y4` labels, `R = {1..n} ∖ D` and `a = max R`,
/// the product is the critical cell `(a, ∅, R ∖ {a}, D)` below the top
/// degree, and `(a, ∅, c, D) + (c, ∅, a, D)` at degree `n − 2` where
/// `R = {a, c}`. A repeated factor gives zero.
pub fn product_of_1cells(basis: &MorseBasis, cells: &[CCell]) -> Result<CohomologyClass> {
    let n = basis.n;
    let mut labels = SubsetMask::EMPTY;
    let mut repeated = false;
    for cell in cells {
        if cell.dim() != 1 || basis.position(cell).is_none() {
            return Err(Error::Precondition(format!("{cell} is not a critical 1-cell")));
        }
        let w = cell.y(4).min().expect("critical 1-cells carry their edge in y4");
        repeated |= labels.contains(w);
        labels = labels.with(w);
    }
    let j = cells.len();
    if repeated || j > n - 2 {
        return Ok(CohomologyClass::zero(basis, j));
    }
    if let [single] = cells {
        return CohomologyClass::of_cell(basis, single);
    }
    let rest = SubsetMask::full(n).difference(labels);
    let a = rest.max().expect("at least two labels remain");
    let e = SubsetMask::EMPTY;
    let lead = CCell::from_tail(n, SubsetMask::singleton(a), e, rest.without(a), labels)?;
    if j < n - 2 {
        return CohomologyClass::from_cells(basis, j, &[lead]);
    }
    let c = rest.min().expect("two labels remain");
    let swapped = CCell::from_tail(n, SubsetMask::singleton(c), e, SubsetMask::singleton(a), labels)?;
    CohomologyClass::from_cells(basis, j, &[lead, swapped])
}

/// Critical 1-cells whose product is the class of `cell` (or, at the top
/// degree, the two-term class containing it).
///
/// The factors are the 1-cells labelled by the elements of `y4`. For
/// `n = 3` the top degree is 1 and only the generators themselves factor.
pub fn factorize(basis: &MorseBasis, cell: &CCell) -> Result<Vec<CCell>> {
    if basis.position(cell).is_none() {
        return Err(Error::Precondition(format!("{cell} is not a critical cell")));
    }
    if cell.dim() == 1 {
        let w = cell.y(4).min();
        return match w.and_then(|w| basis.one_cell(w)) {
            Some(g) if g == *cell => Ok(vec![g]),
            _ => Err(Error::NoFactorization(format!("{cell} is not a generator"))),
        };
    }
    if !cell.y(3).is_empty() {
        return Err(Error::NoFactorization(format!(
            "{cell} has y3 ≠ ∅ and is not a product of 1-cells"
        )));
    }
    cell.y(4)
        .iter()
        .map(|w| basis.one_cell(w).ok_or_else(|| Error::Precondition(format!("no critical 1-cell with label {w}"))))
        .collect()
}
