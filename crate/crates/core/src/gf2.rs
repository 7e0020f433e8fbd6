//! Bit-packed linear algebra over GF(2).
//!
//! Vectors pack 64 coordinates per word; matrices are row-major lists of
//! vectors. Addition is XOR and every routine is deterministic: pivots are
//! chosen in the leftmost column with a nonzero entry, taking the topmost row.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Rows at or above this count are eliminated in parallel.
const PARALLEL_ROWS: usize = 2048;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    len: usize,
    words: Vec<u64>,
}

impl GF2Vector {
    pub fn zeros(len: usize) -> Self {
        GF2Vector { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector of length `len` with ones exactly at `indices` (repeats cancel).
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    /// Panics if `index >= len`; see [`GF2Vector::checked_get`].
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "coordinate {index} out of range (len {})", self.len);
        self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    pub fn checked_get(&self, index: usize) -> Result<bool> {
        if index >= self.len {
            return Err(Error::Dimension { expected: self.len, got: index + 1 });
        }
        Ok(self.get(index))
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "coordinate {index} out of range (len {})", self.len);
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "coordinate {index} out of range (len {})", self.len);
        self.words[index / WORD] ^= 1u64 << (index % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }

    /// First set coordinate at or after `start`.
    pub fn first_one_from(&self, start: usize) -> Option<usize> {
        if start >= self.len {
            return None;
        }
        let mut w = start / WORD;
        let mut word = self.words[w] & (u64::MAX << (start % WORD));
        loop {
            if word != 0 {
                return Some(w * WORD + word.trailing_zeros() as usize);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    /// Set coordinates in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let tz = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Coordinatewise XOR.
    ///
    /// # Panics
    /// Panics on a length mismatch.
    pub fn xor_assign(&mut self, other: &GF2Vector) {
        assert_eq!(self.len, other.len, "length mismatch in GF(2) addition");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn try_add(&self, other: &GF2Vector) -> Result<GF2Vector> {
        if self.len != other.len {
            return Err(Error::Dimension { expected: self.len, got: other.len });
        }
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &GF2Vector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in GF(2) inner product");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }
}

impl std::ops::Add for &GF2Vector {
    type Output = GF2Vector;
    fn add(self, rhs: &GF2Vector) -> GF2Vector {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl fmt::Display for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Vector({self})")
    }
}

/// Parses a string of `0`/`1` characters, first character = coordinate 0.
impl FromStr for GF2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parameter(format!("invalid GF(2) digit `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GF2Vector::from_bools(&bits))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    cols: usize,
    data: Vec<GF2Vector>,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GF2Matrix { cols, data: vec![GF2Vector::zeros(cols); rows] }
    }

    pub fn identity(size: usize) -> Self {
        GF2Matrix { cols: size, data: (0..size).map(|i| GF2Vector::unit(size, i)).collect() }
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<GF2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension { expected: cols, got: bad.len() });
        }
        Ok(GF2Matrix { cols, data: rows })
    }

    /// Convenience constructor from `0`/`1` strings; the column count is
    /// taken from the first row (zero when there are no rows).
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows.iter().map(|r| r.parse()).collect::<Result<Vec<GF2Vector>>>()?;
        let cols = parsed.first().map_or(0, GF2Vector::len);
        Self::from_rows(cols, parsed)
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &GF2Vector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[GF2Vector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<GF2Vector> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r].flip(c);
    }

    pub fn push_row(&mut self, row: GF2Vector) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Dimension { expected: self.cols, got: row.len() });
        }
        self.data.push(row);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GF2Vector::is_zero)
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut t = GF2Matrix::zeros(self.cols, self.rows());
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.data[c].set(r, true);
            }
        }
        t
    }

    /// `self · v` where `v` has length `cols`.
    pub fn mul_vec(&self, v: &GF2Vector) -> Result<GF2Vector> {
        if v.len() != self.cols {
            return Err(Error::Dimension { expected: self.cols, got: v.len() });
        }
        let mut out = GF2Vector::zeros(self.rows());
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(v) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &GF2Matrix) -> Result<GF2Matrix> {
        if self.cols != other.rows() {
            return Err(Error::Dimension { expected: self.cols, got: other.rows() });
        }
        let data = self
            .data
            .par_iter()
            .map(|row| {
                let mut acc = GF2Vector::zeros(other.cols);
                for k in row.ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(GF2Matrix { cols: other.cols, data })
    }

    /// XOR of the rows selected by `coefficients`.
    pub fn combine_rows(&self, coefficients: &GF2Vector) -> Result<GF2Vector> {
        if coefficients.len() != self.rows() {
            return Err(Error::Dimension { expected: self.rows(), got: coefficients.len() });
        }
        let mut acc = GF2Vector::zeros(self.cols);
        for i in coefficients.ones() {
            acc.xor_assign(&self.data[i]);
        }
        Ok(acc)
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix {}x{} [", self.rows(), self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

/// Output of [`row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    /// Reduced row-echelon form; zero rows sit at the bottom.
    pub reduced: GF2Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivot_cols: Vec<usize>,
}

/// Gauss–Jordan elimination to reduced row-echelon form.
pub fn row_reduce(m: &GF2Matrix) -> RowReduction {
    let mut rows = m.data.clone();
    let cols = m.cols;
    let mut pivot_cols = Vec::new();
    let mut next = 0;
    let mut col = 0;
    while next < rows.len() && col < cols {
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            col += 1;
            continue;
        };
        rows.swap(next, found);
        let pivot = rows[next].clone();
        let eliminate = |(r, row): (usize, &mut GF2Vector)| {
            if r != next && row.get(col) {
                row.xor_assign(&pivot);
            }
        };
        if rows.len() >= PARALLEL_ROWS {
            rows.par_iter_mut().enumerate().for_each(eliminate);
        } else {
            rows.iter_mut().enumerate().for_each(eliminate);
        }
        pivot_cols.push(col);
        next += 1;
        col += 1;
    }
    RowReduction { reduced: GF2Matrix { cols, data: rows }, rank: pivot_cols.len(), pivot_cols }
}

pub fn rank(m: &GF2Matrix) -> usize {
    row_reduce(m).rank
}

/// Rank of a sparse matrix given by sorted column indices per row.
///
/// Rows are reduced by their largest index against previously kept rows,
/// which keeps fill-in low on boundary-like matrices.
pub fn sparse_rank(rows: &[Vec<u32>]) -> usize {
    let mut pivots: std::collections::HashMap<u32, Vec<u32>> = std::collections::HashMap::new();
    for row in rows {
        let mut cur = row.clone();
        while let Some(&low) = cur.last() {
            match pivots.get(&low) {
                Some(p) => cur = symmetric_difference(&cur, p),
                None => {
                    pivots.insert(low, cur);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn symmetric_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Finds `c` with `Σ c_i · basis_i = target`, if the target lies in the row span.
pub fn solve_in_span(basis: &GF2Matrix, target: &GF2Vector) -> Result<Option<GF2Vector>> {
    if basis.rows() > 0 && target.len() != basis.cols() {
        return Err(Error::Dimension { expected: basis.cols(), got: target.len() });
    }
    let k = basis.rows();
    let mut echelon = EchelonBasis::new(target.len(), k);
    for (i, row) in basis.data.iter().enumerate() {
        echelon.insert(row.clone(), GF2Vector::unit(k, i));
    }
    Ok(echelon.express(target))
}

/// Basis of the right null space `{v : m · v = 0}`, one vector per row.
pub fn kernel_basis(m: &GF2Matrix) -> GF2Matrix {
    let RowReduction { reduced, pivot_cols, .. } = row_reduce(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &pivot_cols {
        is_pivot[p] = true;
    }
    let mut out = Vec::with_capacity(cols - pivot_cols.len());
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = GF2Vector::unit(cols, free);
        for (r, &p) in pivot_cols.iter().enumerate() {
            if reduced.data[r].get(free) {
                v.set(p, true);
            }
        }
        out.push(v);
    }
    GF2Matrix { cols, data: out }
}

/// Incrementally maintained row-echelon basis that remembers, for every
/// stored row, which inserted vectors it combines.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    tags: usize,
    rows: Vec<(usize, GF2Vector, GF2Vector)>,
}

impl EchelonBasis {
    /// `len` is the vector length, `tags` the length of the combination record.
    pub fn new(len: usize, tags: usize) -> Self {
        EchelonBasis { len, tags, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored pivots, updating `combo` alongside.
    fn reduce(&self, v: &mut GF2Vector, combo: &mut GF2Vector) {
        for (pivot, row, tag) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                combo.xor_assign(tag);
            }
        }
    }

    /// Adds `v` (recorded as the combination `tag`); returns whether it was
    /// independent of the rows already present.
    pub fn insert(&mut self, mut v: GF2Vector, mut tag: GF2Vector) -> bool {
        assert_eq!(v.len(), self.len);
        assert_eq!(tag.len(), self.tags);
        self.reduce(&mut v, &mut tag);
        match v.first_one() {
            Some(pivot) => {
                self.rows.push((pivot, v, tag));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &GF2Vector) -> bool {
        let mut v = v.clone();
        let mut scratch = GF2Vector::zeros(self.tags);
        self.reduce(&mut v, &mut scratch);
        v.is_zero()
    }

    /// Combination of inserted tags equal to `target`, if `target` is in the span.
    pub fn express(&self, target: &GF2Vector) -> Option<GF2Vector> {
        let mut v = target.clone();
        let mut combo = GF2Vector::zeros(self.tags);
        self.reduce(&mut v, &mut combo);
        v.is_zero().then_some(combo)
    }
}
