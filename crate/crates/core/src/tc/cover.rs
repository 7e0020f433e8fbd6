use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// Sets `V_1..V_s` of critical 1-cell labels, each of size `n − j`, with
/// union everything and empty intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSets {
    pub n: usize,
    pub j: usize,
    pub sets: Vec<SubsetMask>,
}

impl CoverSets {
    pub fn s(&self) -> usize {
        self.sets.len()
    }

    /// Checks the size, union and intersection conditions.
    pub fn validate(&self) -> Result<()> {
        let full = SubsetMask::full(self.n);
        if let Some(v) = self.sets.iter().find(|v| v.len() != self.n - self.j) {
            return Err(Error::Infeasible(format!("cover set {{{v}}} does not have n − j = {} elements", self.n - self.j)));
        }
        let union = self.sets.iter().fold(SubsetMask::EMPTY, |acc, &v| acc | v);
        if union != full {
            return Err(Error::Infeasible(format!(
                "cover sets for n = {}, j = {}, s = {} miss {{{}}}",
                self.n,
                self.j,
                self.s(),
                full.difference(union)
            )));
        }
        let meet = self.sets.iter().fold(full, |acc, &v| acc & v);
        if !meet.is_empty() {
            return Err(Error::Infeasible(format!(
                "cover sets for n = {}, j = {}, s = {} all contain {{{meet}}}",
                self.n,
                self.j,
                self.s()
            )));
        }
        Ok(())
    }
}

/// Complements of the consecutive blocks `U_1 = {1..j}, U_2 = {j+1..2j}, …`,
/// the last block shifted to end at `n`; surplus sets repeat `V_1`.
pub fn build_cover_sets(n: usize, j: usize, s: usize) -> Result<CoverSets> {
    if j < 2 || j > n {
        return Err(Error::Parameter(format!("block size j = {j} must lie in 2..={n}")));
    }
    let blocks = n.div_ceil(j);
    if s < blocks {
        return Err(Error::Infeasible(format!("s = {s} is below ⌈n/j⌉ = {blocks}")));
    }
    let full = SubsetMask::full(n);
    let mut sets: Vec<SubsetMask> = (0..blocks)
        .map(|b| {
            let start = (b * j + 1).min(n - j + 1);
            full.difference(SubsetMask::from_elements(start..start + j))
        })
        .collect();
    sets.resize(s, sets[0]);
    let cover = CoverSets { n, j, sets };
    cover.validate()?;
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(xs: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(xs.iter().copied())
    }

    #[test]
    fn construction_examples() {
        assert_eq!(build_cover_sets(5, 2, 3).unwrap().sets, vec![m(&[3, 4, 5]), m(&[1, 2, 5]), m(&[1, 2, 3])]);
        assert_eq!(build_cover_sets(4, 2, 2).unwrap().sets, vec![m(&[3, 4]), m(&[1, 2])]);
        let padded = build_cover_sets(6, 2, 4).unwrap();
        assert_eq!(padded.sets[3], padded.sets[0]);
        assert_eq!(build_cover_sets(6, 3, 2).unwrap().sets, vec![m(&[4, 5, 6]), m(&[1, 2, 3])]);
    }

    #[test]
    fn infeasible_cases() {
        assert!(matches!(build_cover_sets(6, 2, 2), Err(Error::Infeasible(_))));
        // two overlapping blocks leave a common element outside every V_i
        assert!(matches!(build_cover_sets(5, 3, 2), Err(Error::Infeasible(_))));
        assert!(matches!(build_cover_sets(5, 1, 9), Err(Error::Parameter(_))));
    }
}
