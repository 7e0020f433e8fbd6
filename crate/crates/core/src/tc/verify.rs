use crate::cubical::CCell;
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// Coefficient of the basis tensor `term` in a product of zero divisors,
/// recomputed without the ring table.
///
/// Every factor `(slot, label)` puts its label in `slot` or the next slot.
/// A slot holding the label set `L` carries the class of the product of the
/// 1-cells in `L`, whose support is known in closed form; repeated labels
/// give zero. Labels are independent of one another, so the coefficient is
/// the product over labels of the number of admissible placements, mod 2.
pub fn certificate_coefficient(n: usize, s: usize, factors: &[(usize, usize)], term: &[CCell]) -> Result<bool> {
    if term.len() != s {
        return Err(Error::Parameter(format!("term of arity {} for s = {s}", term.len())));
    }
    if let Some(&(slot, label)) = factors.iter().find(|&&(slot, label)| slot >= s || label == 0 || label > n) {
        return Err(Error::Parameter(format!("factor ({slot}, {label}) out of range")));
    }
    let mut labels = Vec::with_capacity(s);
    for cell in term {
        match slot_labels(n, cell) {
            Some(l) => labels.push(l),
            None => return Ok(false),
        }
    }
    for label in 1..=n {
        let targets: Vec<usize> = (0..s).filter(|&k| labels[k].contains(label)).collect();
        let options: Vec<[usize; 2]> =
            factors.iter().filter(|f| f.1 == label).map(|&(slot, _)| [slot, (slot + 1) % s]).collect();
        if targets.len() != options.len() {
            return Ok(false);
        }
        let mut count = 0usize;
        for choice in 0u32..(1 << options.len()) {
            let mut hit = vec![false; s];
            let ok = options.iter().enumerate().all(|(k, opt)| {
                let slot = opt[(choice >> k & 1) as usize];
                !std::mem::replace(&mut hit[slot], true)
            });
            if ok && targets.iter().all(|&t| hit[t]) {
                count += 1;
            }
        }
        if count % 2 == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The label set `L` whose generator product contains `cell`, if any.
fn slot_labels(n: usize, cell: &CCell) -> Option<SubsetMask> {
    if !cell.has_empty_head() || !cell.y(3).is_empty() || cell.x(3).len() != 1 {
        return None;
    }
    let labels = cell.y(4);
    let rest = SubsetMask::full(n).difference(labels);
    let a = rest.max()?;
    match rest.len() {
        0 | 1 => None,
        2 => Some(labels),
        _ => (cell.x(3) == SubsetMask::singleton(a)).then_some(labels),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tail(n: usize, x3: &[usize], x4: &[usize], y4: &[usize]) -> CCell {
        CCell::from_lists(n, [&[], &[], &[], &[], x3, &[], x4, y4]).unwrap()
    }

    #[test]
    fn four_factors_n4() {
        let factors = [(0, 1), (0, 2), (0, 3), (0, 4)];
        let term = [tail(4, &[4], &[3], &[1, 2]), tail(4, &[2], &[1], &[3, 4])];
        assert!(certificate_coefficient(4, 2, &factors, &term).unwrap());
        let lopsided = [tail(4, &[4], &[1, 2, 3], &[]), tail(4, &[2], &[1], &[3, 4])];
        assert!(!certificate_coefficient(4, 2, &factors, &lopsided).unwrap());
    }

    #[test]
    fn unit_slot_is_recognised() {
        assert_eq!(slot_labels(4, &tail(4, &[4], &[1, 2, 3], &[])), Some(SubsetMask::EMPTY));
        assert_eq!(slot_labels(4, &tail(4, &[3], &[1, 2, 4], &[])), None);
    }
}
