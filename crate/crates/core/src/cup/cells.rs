use crate::cubical::{CCell, Cell};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// Cup product of two cubes as cubical-set cochain duals.
///
/// Writing `c = (x_i, y_i)` and `d = (z_i, w_i)`, the product is nonzero
/// exactly when `w_i ⊆ x_i` and `z_i = (x_i ∖ w_i) ∪ y_{i−1}` for every `i`
/// (with `y_0 = y_4`). The decomposition `v_i = x_i ∖ w_i` is forced, so no
/// search is involved. The result is `(v_i, y_i ∪ w_i)` when `v_3` and `v_4`
/// are nonempty.
pub fn cup_cells(c: &CCell, d: &CCell) -> Result<Option<CCell>> {
    if c.n() != d.n() {
        return Err(Error::Parameter(format!("cannot multiply cells with n = {} and n = {}", c.n(), d.n())));
    }
    let mut blocks = [SubsetMask::EMPTY; 8];
    for i in 1..=4 {
        let (x, w) = (c.x(i), d.y(i));
        if !w.is_subset(x) {
            return Ok(None);
        }
        let v = x.difference(w);
        let prev = if i == 1 { 4 } else { i - 1 };
        if d.x(i) != v | c.y(prev) {
            return Ok(None);
        }
        blocks[2 * (i - 1)] = v;
        blocks[2 * (i - 1) + 1] = c.y(i) | w;
    }
    if blocks[4].is_empty() || blocks[6].is_empty() {
        return Ok(None);
    }
    CCell::new(c.n(), blocks).map(Some)
}

/// All pairs `(c, d)` with `dim d = q` whose product is `e`.
///
/// Each edge element of `e` goes either to `c` (staying an edge, and placed
/// at the end vertex in `d`) or to `d` (placed at the start vertex in `c`).
pub fn splits(e: &CCell, q: usize) -> Vec<(CCell, CCell)> {
    let edges: Vec<(usize, usize)> = (1..=4).flat_map(|i| e.y(i).iter().map(move |v| (i, v))).collect();
    if q > edges.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << edges.len()) {
        if mask.count_ones() as usize != q {
            continue;
        }
        let mut to_d = [SubsetMask::EMPTY; 5];
        for (k, &(i, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                to_d[i] = to_d[i].with(v);
            }
        }
        let mut cb = [SubsetMask::EMPTY; 8];
        let mut db = [SubsetMask::EMPTY; 8];
        for i in 1..=4 {
            let prev = if i == 1 { 4 } else { i - 1 };
            cb[2 * (i - 1)] = e.x(i) | to_d[i];
            cb[2 * (i - 1) + 1] = e.y(i).difference(to_d[i]);
            db[2 * (i - 1)] = e.x(i) | e.y(prev).difference(to_d[prev]);
            db[2 * (i - 1) + 1] = to_d[i];
        }
        out.push((CCell::from_blocks_unchecked(e.n(), &cb), CCell::from_blocks_unchecked(e.n(), &db)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::{CellComplex, GroundParams};

    #[test]
    fn vertex_squares_to_itself() {
        let v = CCell::from_lists(5, [&[], &[], &[], &[], &[5], &[], &[1, 2, 3, 4], &[]]).unwrap();
        assert_eq!(cup_cells(&v, &v).unwrap(), Some(v));
    }

    #[test]
    fn vertex_times_edge_with_y4() {
        let c = CCell::from_lists(5, [&[], &[], &[], &[], &[5], &[], &[1, 2, 3, 4], &[]]).unwrap();
        let d = CCell::from_lists(5, [&[], &[], &[], &[], &[5], &[], &[2, 3, 4], &[1]]).unwrap();
        assert_eq!(cup_cells(&c, &d).unwrap(), Some(d));
        assert_eq!(cup_cells(&d, &c).unwrap(), None);
        let end = CCell::from_lists(5, [&[1], &[], &[], &[], &[5], &[], &[2, 3, 4], &[]]).unwrap();
        assert_eq!(cup_cells(&d, &end).unwrap(), Some(d));
    }

    #[test]
    fn mismatched_n() {
        let a = CCell::from_lists(3, [&[], &[], &[], &[], &[1], &[], &[2, 3], &[]]).unwrap();
        let b = CCell::from_lists(4, [&[], &[], &[], &[], &[1], &[], &[2, 3, 4], &[]]).unwrap();
        assert!(cup_cells(&a, &b).is_err());
    }

    // Per element, the product of elementary intervals on the 4-cycle:
    // [a,b]·[a',b'] = [a,b'] when b = a' and one factor is degenerate.
    fn interval_rule(c: &CCell, d: &CCell) -> Option<CCell> {
        let locate = |cell: &CCell, v: usize| -> (usize, usize) {
            let b = cell.blocks().iter().position(|m| m.contains(v)).unwrap();
            if b % 2 == 0 { (b / 2, b / 2) } else { (b / 2, (b / 2 + 1) % 4) }
        };
        let mut blocks = [SubsetMask::EMPTY; 8];
        for v in 1..=c.n() {
            let ((a, b), (a2, b2)) = (locate(c, v), locate(d, v));
            if b != a2 || (a != b && a2 != b2) {
                return None;
            }
            let block = if a == b2 { 2 * a } else { 2 * a + 1 };
            blocks[block] = blocks[block].with(v);
        }
        CCell::new(c.n(), blocks).ok()
    }

    #[test]
    fn agrees_with_interval_rule_and_splits() {
        let complex = CellComplex::<CCell>::new(GroundParams::new(4).unwrap());
        let all: Vec<CCell> = (0..=2).flat_map(|d| complex.cells(d).to_vec()).collect();
        for c in &all {
            for d in &all {
                let got = cup_cells(c, d).unwrap();
                assert_eq!(got, interval_rule(c, d), "{c} ⌣ {d}");
                if let Some(e) = got {
                    assert_eq!(e.dim(), c.dim() + d.dim());
                    assert!(splits(&e, d.dim()).contains(&(*c, *d)));
                }
            }
        }
        for e in &all {
            for q in 0..=e.dim() {
                for (c, d) in splits(e, q) {
                    assert_eq!(cup_cells(&c, &d).unwrap(), Some(*e));
                }
            }
        }
    }
}
