//! Dense matrices over the two-element field.
//!
//! Rows are packed into `u64` words. Everything here is exact; ranks,
//! kernels and canonical bases all come from Gaussian elimination.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(WORD).max(1);
        Self {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |r, c| rows[r][c] & 1 == 1)
    }

    /// Column matrix whose columns are the given vectors (all of length `len`).
    pub fn from_columns(len: usize, columns: &[Vec<bool>]) -> Self {
        Self::from_fn(len, columns.len(), |r, c| columns[c][r])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.words + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words + c / WORD];
        let bit = 1u64 << (c % WORD);
        if v {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn row(&self, r: usize) -> Vec<bool> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn column(&self, c: usize) -> Vec<bool> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let ow = out.words;
                    for (i, &v) in rhs.row_words(k).iter().enumerate() {
                        out.data[r * ow + i] ^= v;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[bool]) -> Vec<bool> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).filter(|&c| v[c] && self.get(r, c)).count() % 2 == 1)
            .collect()
    }

    pub fn add(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sum");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a ^= *b;
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, rhs.rows);
        BitMatrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                rhs.get(r, c - self.cols)
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.cols);
        BitMatrix::from_fn(self.rows + rhs.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c)
            } else {
                rhs.get(r - self.rows, c)
            }
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> BitMatrix {
        BitMatrix::from_fn(idx.len(), self.cols, |r, c| self.get(idx[r], c))
    }

    pub fn select_cols(&self, idx: &[usize]) -> BitMatrix {
        BitMatrix::from_fn(self.rows, idx.len(), |r, c| self.get(r, idx[c]))
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            self.swap_rows(lead, p);
            for r in 0..self.rows {
                if r != lead && self.get(r, c) {
                    self.xor_row_into(lead, r);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of `{x : self * x = 0}`, returned as the columns of a matrix.
    pub fn nullspace(&self) -> BitMatrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = BitMatrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, true);
            for (i, &p) in pivots.iter().enumerate() {
                if m.get(i, f) {
                    basis.set(p, k, true);
                }
            }
        }
        basis
    }

    /// Canonical basis of the column space: the columns of the result are the
    /// rows of the RREF of the transpose. Two matrices span the same column
    /// space iff their canonical bases are equal.
    pub fn column_space(&self) -> BitMatrix {
        let mut t = self.transpose();
        let k = t.rref_in_place().len();
        let basis_rows: Vec<usize> = (0..k).collect();
        t.select_rows(&basis_rows).transpose()
    }

    /// Leading (pivot) row of every column of a canonical basis.
    pub fn leading_rows(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|c| {
                (0..self.rows)
                    .find(|&r| self.get(r, c))
                    .expect("canonical basis has no zero column")
            })
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{})[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, " ")?;
            }
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            if r + 1 < self.rows {
                write!(f, ";")?;
            }
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    /// Row-major 0/1 entries.
    bits: Vec<Vec<u8>>,
}

impl Serialize for BitMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixWire {
            rows: self.rows,
            cols: self.cols,
            bits: (0..self.rows)
                .map(|r| (0..self.cols).map(|c| u8::from(self.get(r, c))).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BitMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = MatrixWire::deserialize(d)?;
        if w.bits.len() != w.rows || w.bits.iter().any(|r| r.len() != w.cols) {
            return Err(serde::de::Error::custom("matrix bits do not match shape"));
        }
        if w.bits.iter().flatten().any(|&b| b > 1) {
            return Err(serde::de::Error::custom("matrix entries must be 0 or 1"));
        }
        Ok(BitMatrix::from_fn(w.rows, w.cols, |r, c| w.bits[r][c] == 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_matrix(max: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(any::<bool>(), r * c)
                .prop_map(move |bits| BitMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
        })
    }

    #[test]
    fn identity_rank() {
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let m = BitMatrix::from_fn(2, 130, |r, c| (r + c) % 3 == 0);
        let t = m.transpose().transpose();
        assert_eq!(m, t);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn small_nullspace() {
        // x0 + x1 = 0 over F2
        let m = BitMatrix::from_rows(&[vec![1, 1]]);
        let k = m.nullspace();
        assert_eq!(k.shape(), (2, 1));
        assert!(k.get(0, 0) && k.get(1, 0));
    }

    #[test]
    fn json_shape_is_checked() {
        let bad = r#"{"rows":1,"cols":2,"bits":[[1]]}"#;
        assert!(serde_json::from_str::<BitMatrix>(bad).is_err());
        let m = BitMatrix::from_rows(&[vec![1, 0], vec![1, 1]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<BitMatrix>(&s).unwrap(), m);
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(9)) {
            let k = m.nullspace();
            prop_assert_eq!(m.rank() + k.cols(), m.cols());
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn column_space_is_canonical(m in arb_matrix(8)) {
            let a = m.column_space();
            prop_assert_eq!(a.cols(), m.rank());
            // Appending a combination of existing columns changes nothing.
            let extra = m.mul(&BitMatrix::from_fn(m.cols(), 1, |r, _| r % 2 == 0));
            prop_assert_eq!(m.hstack(&extra).column_space(), a);
        }
    }
}
