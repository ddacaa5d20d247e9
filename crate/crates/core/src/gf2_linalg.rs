//! Dense linear algebra over GF(2).
//!
//! Rows are packed little-endian into `u64` words: column `j` lives in word
//! `j / 64`, bit `j % 64`. Row operations are whole-word XORs.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2).
///
/// Bits beyond `len` in the final word are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from a slice of 0/1 values; any nonzero entry counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let bools: Vec<bool> = bits.iter().map(|&b| b != 0).collect();
        BitVec::from_bools(&bools)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + tz)
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn xor_assign(&mut self, other: &BitVec) -> Result<()> {
        if other.len != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, "]")
    }
}

/// A dense `nrows x ncols` matrix over GF(2) with word-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    nrows: usize,
    ncols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        let stride = words_for(ncols);
        BitMatrix {
            nrows,
            ncols,
            stride,
            data: vec![0; nrows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// An empty matrix with `ncols` columns, to be filled with [`BitMatrix::push_row`].
    pub fn with_columns(ncols: usize) -> Self {
        BitMatrix::zeros(0, ncols)
    }

    /// Builds a matrix from rows of 0/1 values. All rows must share a length;
    /// an empty slice gives a 0x0 matrix.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = BitMatrix::with_columns(ncols);
        for r in rows {
            m.push_row(&BitVec::from_bits(r.as_ref()))?;
        }
        Ok(m)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn push_row(&mut self, row: &BitVec) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        self.data.extend_from_slice(&row.words);
        self.nrows += 1;
        Ok(())
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVec {
        assert!(r < self.nrows, "row {r} out of range");
        BitVec {
            len: self.ncols,
            words: self.row_words(r).to_vec(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = BitVec> + '_ {
        (0..self.nrows).map(|r| self.row(r))
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.nrows && c < self.ncols, "({r}, {c}) out of range");
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.nrows && c < self.ncols, "({r}, {c}) out of range");
        let idx = r * self.stride + c / WORD_BITS;
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            self.data[idx] |= mask;
        } else {
            self.data[idx] &= !mask;
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.ncols, self.nrows);
        for r in 0..self.nrows {
            for c in self.row(r).ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// `row[dst] ^= row[src]`, touching only words from `from_word` on.
    #[inline]
    fn xor_row_from(&mut self, dst: usize, src: usize, from_word: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        let (d, sr) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        for (a, b) in d[from_word..].iter_mut().zip(&sr[from_word..]) {
            *a ^= b;
        }
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, dst: usize, src: usize) {
        assert!(dst < self.nrows && src < self.nrows);
        if dst == src {
            // x + x = 0 over GF(2)
            self.data[dst * self.stride..(dst + 1) * self.stride].fill(0);
        } else {
            self.xor_row_from(dst, src, 0);
        }
    }

    /// Gaussian elimination in place. With `full`, clears above each pivot too
    /// (reduced row-echelon form); otherwise only below. Returns pivot columns.
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.ncols {
            if rank == self.nrows {
                break;
            }
            let w = c / WORD_BITS;
            let mask = 1u64 << (c % WORD_BITS);
            let Some(p) = (rank..self.nrows).find(|&r| self.data[r * self.stride + w] & mask != 0)
            else {
                continue;
            };
            self.swap_rows(rank, p);
            let start = if full { 0 } else { rank + 1 };
            for r in start..self.nrows {
                if r != rank && self.data[r * self.stride + w] & mask != 0 {
                    self.xor_row_from(r, rank, w);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    /// GF(2) rank. Works on a copy; see [`BitMatrix::into_rank`] to reuse the buffer.
    pub fn rank(&self) -> usize {
        self.clone().into_rank()
    }

    /// GF(2) rank, consuming the matrix as scratch space.
    pub fn into_rank(mut self) -> usize {
        self.eliminate(false).len()
    }

    /// Reduced row-echelon form and the ordered pivot columns.
    pub fn row_reduce(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate(true);
        (m, pivots)
    }

    /// Returns `(rank(self), rank(self with v appended))`. The two agree iff
    /// `v` lies in the row space.
    pub fn augmented_rank(&self, v: &BitVec) -> Result<(usize, usize)> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: v.len(),
            });
        }
        let mut m = self.clone();
        let pivots = m.eliminate(false);
        let base = pivots.len();
        // Reduce v against the echelon rows.
        let mut rest = v.clone();
        for (r, &c) in pivots.iter().enumerate() {
            if rest.get(c) {
                for (a, b) in rest.words.iter_mut().zip(m.row_words(r)) {
                    *a ^= b;
                }
            }
        }
        Ok((base, base + usize::from(!rest.is_zero())))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.nrows, self.ncols)?;
        for r in 0..self.nrows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}
