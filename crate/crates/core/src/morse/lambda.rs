use super::engine::MorseComplex;
use super::field::{classify_w, StatusKind, WField};
use crate::cubical::{CCell, Cell};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// An upper gradient path ending at a critical cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPath {
    pub cells: Vec<CCell>,
    pub endpoint: CCell,
}

/// Closed-form endpoint of the Λ-path from a non-collapsible cell with
/// `y1 = y2 = y3 = ∅`.
///
/// A critical cell is its own endpoint. Otherwise the endpoint is
/// `(∅, ∅, ∅, ∅, {x}, ∅, X ∖ {x}, y4)` where `X` is the union of the vertex
/// blocks and `x = max X`.
pub fn lambda_endpoint(cell: &CCell) -> Result<CCell> {
    check_lambda_scope(cell)?;
    let status = classify_w(cell);
    match status.kind {
        StatusKind::Critical => Ok(*cell),
        StatusKind::Collapsible => {
            Err(Error::Precondition(format!("{cell} is collapsible; no upper path starts there")))
        }
        StatusKind::Redundant => {
            let all = cell.x_union();
            let top = all.max().expect("x3 is nonempty");
            CCell::from_tail(cell.n(), SubsetMask::singleton(top), SubsetMask::EMPTY, all.without(top), cell.y(4))
        }
    }
}

fn check_lambda_scope(cell: &CCell) -> Result<()> {
    if [1, 2, 3].iter().any(|&i| !cell.y(i).is_empty()) {
        return Err(Error::Precondition(format!("Λ-paths are traced from cells with y1 = y2 = y3 = ∅, got {cell}")));
    }
    Ok(())
}

/// Follows the unique upper gradient path from a non-collapsible cell with
/// `y1 = y2 = y3 = ∅` to its critical endpoint.
///
/// The path is traced by exact (not mod-2) path counting, so a branching
/// into two complete paths is reported as an error instead of cancelling.
pub fn lambda_path(morse: &MorseComplex<WField>, cell: &CCell) -> Result<LambdaPath> {
    check_lambda_scope(cell)?;
    let d = cell.dim();
    let start = morse
        .complex()
        .index_of(cell)
        .ok_or_else(|| Error::Parameter(format!("{cell} is not a cell of CΩ_{}", morse.n())))?;
    if morse.kind(d, start) == StatusKind::Collapsible {
        return Err(Error::Precondition(format!("{cell} is collapsible; no upper path starts there")));
    }
    let counts = morse.fold_upper_paths(
        d,
        |_| 1u64,
        |_| 0u64,
        |parts| parts.iter().fold(0u64, |acc, &&c| acc.saturating_add(c)),
    )?;
    let cells = morse.complex().cells(d);
    let mut path = vec![*cell];
    let mut cur = start;
    loop {
        if counts[cur] != 1 {
            return Err(Error::Precondition(format!(
                "{} upper paths from {} reach critical cells; expected exactly one",
                counts[cur], cells[cur]
            )));
        }
        if morse.kind(d, cur) == StatusKind::Critical {
            return Ok(LambdaPath { endpoint: cells[cur], cells: path });
        }
        cur = morse
            .gradient_successors(d, cur)
            .into_iter()
            .find(|&j| counts[j] > 0)
            .expect("a path continues through some successor");
        path.push(cells[cur]);
    }
}

/// The face of `cell` obtained by moving `α_i` from `y_i` to `x_{i+1}`, for a
/// cell collapsible through the `α_1` or `α_2` rule of `W`.
pub fn unique_noncollapsible_face(cell: &CCell) -> Result<CCell> {
    let status = classify_w(cell);
    let rule = (1..=2).find(|&i| !(cell.x(i) | cell.y(i)).is_empty());
    match (status.kind, rule) {
        (StatusKind::Collapsible, Some(i)) => {
            let alpha = (cell.x(i) | cell.y(i)).min().expect("nonempty");
            let yb = 2 * (i - 1) + 1;
            Ok(cell.moved(alpha, yb, yb + 1))
        }
        _ => Err(Error::Precondition(format!(
            "{cell} is not collapsible through α_1 or α_2"
        ))),
    }
}

/// Facets of `cell` that are not collapsible, excluding its own `W`-partner.
pub fn noncollapsible_facets(cell: &CCell) -> Vec<CCell> {
    let partner = classify_w(cell).partner;
    cell.facets()
        .into_iter()
        .filter(|f| Some(*f) != partner && classify_w(f).kind != StatusKind::Collapsible)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::GroundParams;

    #[test]
    fn unique_face_example() {
        let w = CCell::from_lists(3, [&[], &[1], &[], &[], &[2], &[], &[3], &[]]).unwrap();
        let face = unique_noncollapsible_face(&w).unwrap();
        assert_eq!(face, CCell::from_lists(3, [&[], &[], &[1], &[], &[2], &[], &[3], &[]]).unwrap());
        assert!(w.facets().contains(&face));
        assert_eq!(noncollapsible_facets(&w), vec![face]);
    }

    #[test]
    fn unique_face_precondition() {
        let redundant = CCell::from_lists(3, [&[1], &[], &[], &[], &[2], &[], &[3], &[]]).unwrap();
        assert!(unique_noncollapsible_face(&redundant).is_err());
    }

    #[test]
    fn lambda_example_n5() {
        let morse = MorseComplex::new(WField, GroundParams::new(5).unwrap()).unwrap();
        let cell = CCell::from_lists(5, [&[], &[], &[], &[], &[1, 5], &[], &[2, 3, 4], &[]]).unwrap();
        let expected = CCell::from_lists(5, [&[], &[], &[], &[], &[5], &[], &[1, 2, 3, 4], &[]]).unwrap();
        let path = lambda_path(&morse, &cell).unwrap();
        assert_eq!(path.endpoint, expected);
        assert_eq!(lambda_endpoint(&cell).unwrap(), expected);
        assert_eq!(path.cells.first(), Some(&cell));

        let critical = morse.critical_cells(1)[0];
        let trivial = lambda_path(&morse, &critical).unwrap();
        assert_eq!(trivial.cells, vec![critical]);
    }

    #[test]
    fn lambda_rejects_collapsible() {
        let morse = MorseComplex::new(WField, GroundParams::new(4).unwrap()).unwrap();
        let collapsible = CCell::from_lists(4, [&[], &[], &[], &[], &[2], &[1], &[3, 4], &[]]).unwrap();
        assert_eq!(morse.kind_of(&collapsible).unwrap(), StatusKind::Collapsible);
        assert!(matches!(lambda_path(&morse, &collapsible), Err(Error::Precondition(_))));
    }
}
