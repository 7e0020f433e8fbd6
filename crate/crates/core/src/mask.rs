//! Subsets of the ground set `{1, …, n}` packed into a machine word.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest ground-set size a mask can hold.
pub const MAX_ELEMENTS: usize = 32;

/// A subset of `{1, …, n}`; element `k` is stored in bit `k - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The full ground set `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set of size {n} does not fit in a mask");
        if n == MAX_ELEMENTS {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    pub fn singleton(element: usize) -> Self {
        assert!((1..=MAX_ELEMENTS).contains(&element), "element {element} out of range");
        SubsetMask(1 << (element - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements.into_iter().fold(Self::EMPTY, |m, e| m.with(e))
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&element) && self.0 & (1 << (element - 1)) != 0
    }

    #[must_use]
    pub fn with(self, element: usize) -> Self {
        self | Self::singleton(element)
    }

    #[must_use]
    pub fn without(self, element: usize) -> Self {
        SubsetMask(self.0 & !Self::singleton(element).0)
    }

    pub fn min(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (!self.is_empty()).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the elements of a [`SubsetMask`].
#[derive(Clone, Debug)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for SubsetMask {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_elements(iter)
    }
}

impl std::ops::BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

impl std::ops::BitOrAssign for SubsetMask {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

/// Comma-separated ascending elements; the empty set prints as nothing.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_max_and_iteration() {
        let m = SubsetMask::from_elements([5, 2, 9]);
        assert_eq!(m.min(), Some(2));
        assert_eq!(m.max(), Some(9));
        assert_eq!(m.to_vec(), vec![2, 5, 9]);
        assert_eq!(m.len(), 3);
        assert_eq!(SubsetMask::EMPTY.min(), None);
        assert_eq!(SubsetMask::EMPTY.max(), None);
    }

    #[test]
    fn display() {
        assert_eq!(SubsetMask::from_elements([3, 1]).to_string(), "1,3");
        assert_eq!(SubsetMask::EMPTY.to_string(), "");
    }

    #[test]
    fn full_and_difference() {
        let full = SubsetMask::full(4);
        assert_eq!(full.to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(full.difference(SubsetMask::singleton(2)).to_vec(), vec![1, 3, 4]);
        assert_eq!(SubsetMask::full(32).len(), 32);
    }
}
