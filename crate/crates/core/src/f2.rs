// SPDX-License-Identifier: Apache-2.0
//! Dense bit-packed linear algebra over GF(2).
//!
//! Rows are stored as little-endian `u64` words, bit `j` of a row living in
//! word `j / 64` at position `j % 64`. Padding bits past the logical length
//! are always zero so that equality, hashing and popcounts need no masking.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
fn tail_mask(bits: usize) -> u64 {
    match bits % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// Errors raised by matrix and vector operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum F2Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("block layout inconsistent at block ({row}, {col})")]
    BlockShape { row: usize, col: usize },
    #[error("matrix dimensions overflow usize")]
    SizeOverflow,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Vector of length `len` with ones at `support`.
    ///
    /// # Panics
    /// If an index is out of range.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.flip(i);
        }
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if b {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        Self { len, words }
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(len);
        }
        Self { len, words }
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
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b);
                w &= w - 1;
            }
        }
        out
    }

    /// # Panics
    /// If lengths differ.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        xor_words(&mut self.words, &other.words);
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Popcount of the bitwise OR, the Pauli weight of an `(x, z)` pair.
    pub fn union_weight(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Entries `start..start + len` as a new vector.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        assert!(start + len <= self.len, "slice out of range");
        let mut out = Self::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                out.flip(i);
            }
        }
        out
    }

    pub fn concat(parts: &[&Self]) -> Self {
        let total = parts.iter().map(|p| p.len).sum();
        let mut out = Self::zeros(total);
        let mut off = 0;
        for p in parts {
            for i in p.support() {
                out.flip(off + i);
            }
            off += p.len;
        }
        out
    }

    /// Row-major Kronecker product: entry `(i, j)` lands at `i * other.len() + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len * other.len);
        let inner = other.support();
        for i in self.support() {
            for &j in &inner {
                out.flip(i * other.len + j);
            }
        }
        out
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryVector {
    type Err = F2Error;

    /// Parses a string of `0`/`1` characters; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::new();
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => return Err(F2Error::Parse(alloc::format!("unexpected character {c:?}"))),
            }
        }
        Ok(Self::from_bools(bits))
    }
}

#[inline]
pub(crate) fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// A dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix whose rows are `rows`, each of length `cols`.
    pub fn from_rows(cols: usize, rows: &[BinaryVector]) -> Result<Self, F2Error> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(F2Error::Shape {
                    op: "from_rows",
                    left: (rows.len(), cols),
                    right: (1, r.len()),
                });
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Builds a matrix from rows of `0`/`1` bytes (any nonzero byte is a one).
    pub fn from_bit_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Result<Self, F2Error> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(F2Error::Shape {
                    op: "from_bit_rows",
                    left: (rows.len(), cols),
                    right: (1, r.len()),
                });
            }
            for (j, &b) in r.iter().enumerate() {
                if b != 0 {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of range"
        );
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of range"
        );
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BinaryVector {
        BinaryVector::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn row_vectors(&self) -> Vec<BinaryVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column(&self, c: usize) -> BinaryVector {
        let mut v = BinaryVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.flip(r);
            }
        }
        v
    }

    pub fn column_vectors(&self) -> Vec<BinaryVector> {
        self.transpose().row_vectors()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn max_row_weight(&self) -> usize {
        (0..self.rows)
            .map(|r| self.row_weight(r))
            .max()
            .unwrap_or(0)
    }

    pub fn max_col_weight(&self) -> usize {
        self.transpose().max_row_weight()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for (wi, &w) in self.row_words(r).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let c = wi * WORD_BITS + w.trailing_zeros() as usize;
                    t.data[c * t.stride + r / WORD_BITS] |= 1 << (r % WORD_BITS);
                    w &= w - 1;
                }
            }
        }
        t
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, F2Error> {
        if self.cols != rhs.rows {
            return Err(F2Error::Shape {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            let (lo, hi) = (r * out.stride, (r + 1) * out.stride);
            for (wi, &w) in self.row_words(r).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let k = wi * WORD_BITS + w.trailing_zeros() as usize;
                    xor_words(&mut out.data[lo..hi], rhs.row_words(k));
                    w &= w - 1;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &BinaryVector) -> Result<BinaryVector, F2Error> {
        if self.cols != v.len() {
            return Err(F2Error::Shape {
                op: "mul_vec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        let mut out = BinaryVector::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row_words(r)
                .iter()
                .zip(v.words())
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if parity & 1 == 1 {
                out.flip(r);
            }
        }
        Ok(out)
    }

    /// Entrywise sum.
    pub fn add(&self, rhs: &Self) -> Result<Self, F2Error> {
        if self.shape() != rhs.shape() {
            return Err(F2Error::Shape {
                op: "add",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = self.clone();
        xor_words(&mut out.data, &rhs.data);
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        RowReducer::new(self).rank()
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn rref(&self) -> Self {
        RowReducer::new(self).basis_matrix()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column of the RREF.
    ///
    /// For free column `f` the basis vector has a one at `f` and, for every
    /// pivot row `r`, the entry of that row at `f` placed at the pivot column.
    pub fn kernel_basis(&self) -> Vec<BinaryVector> {
        let red = RowReducer::new(self);
        let mut is_pivot = vec![false; self.cols];
        for &p in &red.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - red.rank());
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BinaryVector::zeros(self.cols);
            v.flip(f);
            for (row, &p) in red.rows.iter().zip(&red.pivots) {
                if row.get(f) {
                    v.flip(p);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Rows spanning the null space of `self`, in canonical RREF.
    ///
    /// The result `B` satisfies `B · selfᵀ = 0` and has `cols - rank` rows.
    pub fn row_space_complement(&self) -> Self {
        let basis = self.kernel_basis();
        let m = Self::from_rows(self.cols, &basis).expect("kernel vectors have matching length");
        m.rref()
    }

    /// Canonical basis of `{y : y · self = 0}` as rows.
    pub fn left_null_space(&self) -> Self {
        self.transpose().row_space_complement()
    }

    /// Some `x` with `self · x = b`, if one exists.
    pub fn solve(&self, b: &BinaryVector) -> Result<Option<BinaryVector>, F2Error> {
        if b.len() != self.rows {
            return Err(F2Error::Shape {
                op: "solve",
                left: self.shape(),
                right: (b.len(), 1),
            });
        }
        let aug = Self::hstack(&[
            self,
            &Self::from_rows(b.len(), core::slice::from_ref(b))?.transpose(),
        ])?;
        let red = RowReducer::new(&aug);
        let mut x = BinaryVector::zeros(self.cols);
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            if p == self.cols {
                return Ok(None);
            }
            if row.get(self.cols) {
                x.flip(p);
            }
        }
        Ok(Some(x))
    }

    /// Standard row-major Kronecker product.
    pub fn kron(&self, rhs: &Self) -> Result<Self, F2Error> {
        let rows = self
            .rows
            .checked_mul(rhs.rows)
            .ok_or(F2Error::SizeOverflow)?;
        let cols = self
            .cols
            .checked_mul(rhs.cols)
            .ok_or(F2Error::SizeOverflow)?;
        rows.checked_mul(words_for(cols))
            .ok_or(F2Error::SizeOverflow)?;
        let mut out = Self::zeros(rows, cols);
        let rhs_rows: Vec<Vec<usize>> = (0..rhs.rows).map(|r| rhs.row(r).support()).collect();
        for i in 0..self.rows {
            let left = self.row(i).support();
            for (k, rk) in rhs_rows.iter().enumerate() {
                let out_row = i * rhs.rows + k;
                for &j in &left {
                    for &l in rk {
                        let c = j * rhs.cols + l;
                        out.data[out_row * out.stride + c / WORD_BITS] |= 1 << (c % WORD_BITS);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(blocks: &[&Self]) -> Result<Self, F2Error> {
        let grid: Vec<Vec<Option<&Self>>> = vec![blocks.iter().map(|b| Some(*b)).collect()];
        Self::block_compose(&grid)
    }

    pub fn vstack(blocks: &[&Self]) -> Result<Self, F2Error> {
        let grid: Vec<Vec<Option<&Self>>> = blocks.iter().map(|b| vec![Some(*b)]).collect();
        Self::block_compose(&grid)
    }

    /// Assembles a block matrix; `None` stands for a zero block.
    ///
    /// Every block row and block column needs at least one concrete block so
    /// its extent can be inferred. Use [`BinaryMatrix::block_compose_sized`]
    /// otherwise.
    pub fn block_compose(grid: &[Vec<Option<&Self>>]) -> Result<Self, F2Error> {
        let ncols = grid.first().map_or(0, Vec::len);
        let mut heights = vec![None; grid.len()];
        let mut widths = vec![None; ncols];
        for (i, row) in grid.iter().enumerate() {
            if row.len() != ncols {
                return Err(F2Error::BlockShape {
                    row: i,
                    col: row.len(),
                });
            }
            for (j, b) in row.iter().enumerate() {
                if let Some(b) = b {
                    heights[i].get_or_insert(b.rows);
                    widths[j].get_or_insert(b.cols);
                }
            }
        }
        let heights: Option<Vec<usize>> = heights.into_iter().collect();
        let widths: Option<Vec<usize>> = widths.into_iter().collect();
        match (heights, widths) {
            (Some(h), Some(w)) => Self::block_compose_sized(&h, &w, grid),
            _ => Err(F2Error::BlockShape { row: 0, col: 0 }),
        }
    }

    /// Assembles a block matrix with explicit block heights and widths.
    pub fn block_compose_sized(
        heights: &[usize],
        widths: &[usize],
        grid: &[Vec<Option<&Self>>],
    ) -> Result<Self, F2Error> {
        if grid.len() != heights.len() {
            return Err(F2Error::BlockShape {
                row: grid.len(),
                col: 0,
            });
        }
        let rows = heights.iter().try_fold(0usize, |a, &h| a.checked_add(h));
        let cols = widths.iter().try_fold(0usize, |a, &w| a.checked_add(w));
        let (rows, cols) = rows.zip(cols).ok_or(F2Error::SizeOverflow)?;
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for (i, row) in grid.iter().enumerate() {
            if row.len() != widths.len() {
                return Err(F2Error::BlockShape {
                    row: i,
                    col: row.len(),
                });
            }
            let mut c0 = 0;
            for (j, b) in row.iter().enumerate() {
                if let Some(b) = b {
                    if b.shape() != (heights[i], widths[j]) {
                        return Err(F2Error::BlockShape { row: i, col: j });
                    }
                    out.write_block(r0, c0, b);
                }
                c0 += widths[j];
            }
            r0 += heights[i];
        }
        Ok(out)
    }

    /// Overwrites the block at `(r0, c0)` with `block`.
    ///
    /// # Panics
    /// If the block does not fit.
    pub fn write_block(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    /// Copy of rows `r0..r0 + h` and columns `c0..c0 + w`.
    pub fn submatrix(&self, r0: usize, h: usize, c0: usize, w: usize) -> Self {
        assert!(
            r0 + h <= self.rows && c0 + w <= self.cols,
            "submatrix out of range"
        );
        let mut out = Self::zeros(h, w);
        for r in 0..h {
            for c in 0..w {
                if self.get(r0 + r, c0 + c) {
                    out.set(r, c, true);
                }
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            let src = self.row_words(r).to_vec();
            out.row_words_mut(i).copy_from_slice(&src);
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        self.transpose().select_rows(cols).transpose()
    }

    /// Column-stacking vectorisation.
    pub fn vec_columns(&self) -> BinaryVector {
        let mut v = BinaryVector::zeros(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                if self.get(r, c) {
                    v.flip(c * self.rows + r);
                }
            }
        }
        v
    }

    /// Inverse of [`BinaryMatrix::vec_columns`].
    pub fn unvec_columns(v: &BinaryVector, rows: usize, cols: usize) -> Result<Self, F2Error> {
        if v.len() != rows * cols {
            return Err(F2Error::Shape {
                op: "unvec_columns",
                left: (rows, cols),
                right: (v.len(), 1),
            });
        }
        let mut m = Self::zeros(rows, cols);
        for i in v.support() {
            m.set(i % rows, i / rows, true);
        }
        Ok(m)
    }

    /// Row-major reshape of a length `rows * cols` vector.
    pub fn reshape_row_major(v: &BinaryVector, rows: usize, cols: usize) -> Result<Self, F2Error> {
        if v.len() != rows * cols {
            return Err(F2Error::Shape {
                op: "reshape_row_major",
                left: (rows, cols),
                right: (v.len(), 1),
            });
        }
        let mut m = Self::zeros(rows, cols);
        for i in v.support() {
            m.set(i / cols, i % cols, true);
        }
        Ok(m)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl FromStr for BinaryMatrix {
    type Err = F2Error;

    /// Rows separated by newlines or `;`, entries `0`/`1`, whitespace ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Vec<BinaryVector> = s
            .split(['\n', ';'])
            .filter(|l| !l.trim().is_empty())
            .map(BinaryVector::from_str)
            .collect::<Result<_, _>>()?;
        let cols = rows.first().map_or(0, BinaryVector::len);
        Self::from_rows(cols, &rows)
    }
}

/// Reduced row echelon form of a row space, kept for repeated reduction.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<BinaryVector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(m: &BinaryMatrix) -> Self {
        Self::from_vectors(m.cols(), m.row_vectors())
    }

    pub fn from_vectors(cols: usize, mut rows: Vec<BinaryVector>) -> Self {
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..cols {
            if top == rows.len() {
                break;
            }
            let Some(p) = (top..rows.len()).find(|&r| rows[r].get(c)) else {
                continue;
            };
            rows.swap(top, p);
            let pivot_row = rows[top].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != top && row.get(c) {
                    xor_words(&mut row.words, &pivot_row.words);
                }
            }
            pivots.push(c);
            top += 1;
        }
        rows.truncate(top);
        Self { cols, rows, pivots }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[BinaryVector] {
        &self.rows
    }

    pub fn basis_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::from_rows(self.cols, &self.rows).expect("rows share the reducer width")
    }

    /// Remainder of `v` after clearing every pivot column; zero iff `v` is in the span.
    pub fn reduce(&self, v: &BinaryVector) -> BinaryVector {
        let mut v = v.clone();
        self.reduce_in_place(&mut v);
        v
    }

    pub fn reduce_in_place(&self, v: &mut BinaryVector) {
        assert_eq!(v.len(), self.cols, "reducing a vector of the wrong length");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                xor_words(&mut v.words, &row.words);
            }
        }
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        self.reduce(v).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::prelude::rust_2021::*;

    fn m(s: &str) -> BinaryMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn rank_of_closed_rep3() {
        assert_eq!(m("110;011;101").rank(), 2);
    }

    #[test]
    fn hamming_rank_and_kernel() {
        let h = m("1010101;0110011;0001111");
        assert_eq!(h.rank(), 3);
        let k = h.kernel_basis();
        assert_eq!(k.len(), 4);
        for v in &k {
            assert!(h.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn complement_example() {
        let b = m("110;011").row_space_complement();
        assert_eq!(b, m("111"));
    }

    #[test]
    fn kron_shape_and_entries() {
        let a = m("11");
        let b = m("1;1");
        assert_eq!(a.kron(&b).unwrap(), m("11;11"));
        let i2 = BinaryMatrix::identity(2);
        assert_eq!(i2.kron(&m("10")).unwrap(), m("1000;0010"));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(m("11").mul(&m("11")), Err(F2Error::Shape { .. })));
        let a = BinaryMatrix::zeros(2, 3);
        let b = BinaryMatrix::zeros(3, 3);
        let grid = vec![vec![Some(&a), Some(&b)]];
        assert!(matches!(
            BinaryMatrix::block_compose(&grid),
            Err(F2Error::BlockShape { .. })
        ));
    }

    #[test]
    fn empty_blocks_compose() {
        let a = m("101");
        let e = BinaryMatrix::zeros(0, 3);
        assert_eq!(BinaryMatrix::vstack(&[&a, &e]).unwrap(), a);
        let z = BinaryMatrix::zeros(1, 0);
        assert_eq!(BinaryMatrix::hstack(&[&z, &a]).unwrap(), a);
    }

    #[test]
    fn solve_finds_preimage() {
        let h = m("110;011");
        let s: BinaryVector = "10".parse().unwrap();
        let x = h.solve(&s).unwrap().unwrap();
        assert_eq!(h.mul_vec(&x).unwrap(), s);
        let a = m("11;11");
        assert_eq!(a.solve(&"10".parse().unwrap()).unwrap(), None);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let n = 130;
        let mut a = BinaryMatrix::zeros(n, n);
        for i in 0..n {
            a.set(i, i, true);
            a.set(i, (i + 1) % n, true);
        }
        assert_eq!(a.rank(), n - 1);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.mul(&BinaryMatrix::identity(n)).unwrap(), a);
    }

    #[test]
    fn vec_roundtrip() {
        let c = m("101;011");
        let v = c.vec_columns();
        assert_eq!(v.to_string(), "100111");
        assert_eq!(BinaryMatrix::unvec_columns(&v, 2, 3).unwrap(), c);
    }
}
