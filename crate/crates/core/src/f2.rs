//! Dense bit-packed linear algebra over F2.
//!
//! Every parity-check matrix, differential and basis in the crate is stored as a
//! [`BitMatrix`] or [`BitVec`]. Rows are packed into `u64` words; bits beyond the
//! logical length of a row are always zero, so word-level XOR, AND and popcount
//! can be used without masking.
//!
//! Gaussian elimination always chooses pivots left to right and swaps pivot rows
//! upward. Every basis returned here is therefore a deterministic function of
//! the input.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum F2Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the smaller span is not contained in the larger span")]
    NotASubspace,
}

/// A vector over F2.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u8>", from = "Vec<u8>")]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = u64::MAX;
        }
        v.clear_padding();
        v
    }

    /// Builds a vector of length `len` with ones exactly at `support`.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % WORD == 0 {
                words.push(0);
            }
            if b {
                words[len / WORD] |= 1 << (len % WORD);
            }
            len += 1;
        }
        Self { len, words }
    }

    pub(crate) fn from_words(len: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        let mut v = Self { len, words: words.to_vec() };
        v.clear_padding();
        v
    }

    fn clear_padding(&mut self) {
        let tail = self.len % WORD;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
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
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Dot product over F2.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// True when every set bit of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Indices of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * WORD + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Concatenation `self ⊕ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.support() {
            out.set(i, true);
        }
        for i in other.support() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Zero-extends or embeds the vector through an index map `i -> map[i]`.
    pub fn embed(&self, map: &[usize], new_len: usize) -> BitVec {
        assert_eq!(map.len(), self.len);
        let mut out = BitVec::zeros(new_len);
        for i in self.support() {
            out.flip(map[i]);
        }
        out
    }

    /// Restriction to the given coordinates, in the given order.
    pub fn select(&self, indices: &[usize]) -> BitVec {
        BitVec::from_bits(indices.iter().map(|&i| self.get(i)))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[")?;
        for b in self.iter() {
            write!(f, "{}", b as u8)?;
        }
        write!(f, "]")
    }
}

impl From<BitVec> for Vec<u8> {
    fn from(v: BitVec) -> Self {
        v.iter().map(u8::from).collect()
    }
}

impl From<Vec<u8>> for BitVec {
    fn from(bits: Vec<u8>) -> Self {
        BitVec::from_bits(bits.into_iter().map(|b| b & 1 == 1))
    }
}

/// A dense matrix over F2, row-major and bit-packed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 entries given row by row.
    ///
    /// # Panics
    ///
    /// Panics if the rows are ragged.
    pub fn from_dense<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &b) in row.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Stacks vectors as rows. All vectors must have length `cols`.
    pub fn from_rows(rows: &[BitVec], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has the wrong length");
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    /// Places vectors as columns. All vectors must have length `rows`.
    pub fn from_columns(columns: &[BitVec], rows: usize) -> Self {
        Self::from_rows(columns, rows).transpose()
    }

    /// Builds a matrix from the set positions of each row.
    pub fn from_row_supports(rows: usize, cols: usize, supports: &[Vec<usize>]) -> Self {
        assert_eq!(supports.len(), rows);
        let mut m = Self::zeros(rows, cols);
        for (i, s) in supports.iter().enumerate() {
            for &j in s {
                m.flip(i, j);
            }
        }
        m
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
    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of range for {}x{}", self.rows, self.cols);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of range for {}x{}", self.rows, self.cols);
        let mask = 1u64 << (j % WORD);
        let w = &mut self.data[i * self.stride + j / WORD];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.stride + j / WORD] ^= 1 << (j % WORD);
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(i))
    }

    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_bits((0..self.rows).map(|i| self.get(i, j)))
    }

    pub fn row_vecs(&self) -> Vec<BitVec> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut out = vec![0; self.cols];
        for i in 0..self.rows {
            for (wi, &w) in self.row_words(i).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    out[wi * WORD + w.trailing_zeros() as usize] += 1;
                    w &= w - 1;
                }
            }
        }
        out
    }

    /// Largest row or column weight; zero for an empty matrix.
    pub fn max_weight(&self) -> usize {
        let rows = (0..self.rows).map(|i| self.row_weight(i)).max().unwrap_or(0);
        let cols = self.column_weights().into_iter().max().unwrap_or(0);
        rows.max(cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row(i).support() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product over F2.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let support = BitVec::from_words(self.cols, self.row_words(i)).support();
            let (start, end) = (i * out.stride, (i + 1) * out.stride);
            for k in support {
                let src = other.row_words(k);
                for (d, s) in out.data[start..end].iter_mut().zip(src) {
                    *d ^= s;
                }
            }
        }
        out
    }

    /// Matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(self.cols, v.len(), "vector length must equal column count");
        BitVec::from_bits(
            (0..self.rows)
                .map(|i| self.row_words(i).iter().zip(v.words()).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1 == 1),
        )
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        let mut out = BitMatrix::zeros(self.rows, self.cols + other.cols);
        out.paste(self, 0, 0);
        out.paste(other, 0, self.cols);
        out
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "vstack needs equal column counts");
        let mut out = BitMatrix::zeros(self.rows + other.rows, self.cols);
        out.data[..self.data.len()].copy_from_slice(&self.data);
        out.data[self.data.len()..].copy_from_slice(&other.data);
        out
    }

    /// `diag(self, other)`.
    pub fn block_diag(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        out.paste(self, 0, 0);
        out.paste(other, self.rows, self.cols);
        out
    }

    /// Kronecker product; the index of `(i, k)` is `i * other.rows + k`.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in self.row(i).support() {
                out.paste(other, i * other.rows, j * other.cols);
            }
        }
        out
    }

    /// XORs `block` into `self` with its top-left corner at `(row, col)`.
    pub fn paste(&mut self, block: &BitMatrix, row: usize, col: usize) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols, "block does not fit");
        for i in 0..block.rows {
            for j in block.row(i).support() {
                self.flip(row + i, col + j);
            }
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                if self.get(i, j) {
                    out.set(i, k, true);
                }
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), self.cols);
        for (k, &i) in rows.iter().enumerate() {
            out.row_words_mut(k).copy_from_slice(self.row_words(i));
        }
        out
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (wi, mask) = (c / WORD, 1u64 << (c % WORD));
            let Some(p) = (r..self.rows).find(|&i| self.data[i * self.stride + wi] & mask != 0) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.data[i * self.stride + wi] & mask != 0 {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// `row[dst] ^= row[src]`.
    pub(crate) fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        if dst < src {
            let (head, tail) = self.data.split_at_mut(src * s);
            for (d, x) in head[dst * s..(dst + 1) * s].iter_mut().zip(&tail[..s]) {
                *d ^= x;
            }
        } else {
            let (head, tail) = self.data.split_at_mut(dst * s);
            for (d, x) in tail[..s].iter_mut().zip(&head[src * s..(src + 1) * s]) {
                *d ^= x;
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column in ascending order.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVec::zeros(self.cols);
                v.set(free, true);
                for (i, &p) in pivots.iter().enumerate() {
                    if r.get(i, free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Basis of the column space: the original columns at the pivot positions.
    pub fn image_basis(&self) -> Vec<BitVec> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    /// Basis of the row space: the nonzero rows of the reduced echelon form.
    pub fn row_space_basis(&self) -> Vec<BitVec> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|i| r.row(i)).collect()
    }

    /// Some `x` with `M x = b`, or `None` when `b` is not in the column space.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>, F2Error> {
        if b.len() != self.rows {
            return Err(F2Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let augmented = self.hstack(&BitMatrix::from_columns(std::slice::from_ref(b), self.rows));
        let (r, pivots) = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if r.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Incrementally built echelon basis of a subspace, for repeated membership tests.
///
/// Rows are stored reduced against all earlier rows, so a single pass in
/// insertion order reduces any vector to its canonical remainder.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Self { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a BitVec>>(len: usize, vectors: I) -> Self {
        let mut e = Self::new(len);
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn from_matrix_rows(m: &BitMatrix) -> Self {
        let mut e = Self::new(m.cols());
        for i in 0..m.rows() {
            e.insert(&m.row(i));
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.len);
        let mut r = v.clone();
        self.reduce_in_place(&mut r);
        r
    }

    fn reduce_in_place(&self, v: &mut BitVec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let r = self.reduce(v);
        match r.support().first() {
            None => false,
            Some(&p) => {
                self.rows.push(r);
                self.pivots.push(p);
                true
            }
        }
    }
}

/// Vectors from `big` extending a basis of `span(small)` to a basis of `span(big)`.
///
/// The returned vectors are taken verbatim from `big`, scanned in order, so their
/// cosets form a basis of `span(big) / span(small)`.
pub fn quotient_basis(big: &[BitVec], small: &[BitVec]) -> Result<Vec<BitVec>, F2Error> {
    let len = match (big.first(), small.first()) {
        (Some(b), _) => b.len(),
        (None, Some(s)) => s.len(),
        (None, None) => return Ok(Vec::new()),
    };
    for v in big.iter().chain(small) {
        if v.len() != len {
            return Err(F2Error::DimensionMismatch { expected: len, found: v.len() });
        }
    }
    let big_span = Echelon::from_vectors(len, big);
    if !small.iter().all(|s| big_span.contains(s)) {
        return Err(F2Error::NotASubspace);
    }
    let mut span = Echelon::from_vectors(len, small);
    Ok(big.iter().filter(|v| span.insert(v)).cloned().collect())
}

/// Rank of a list of vectors.
pub fn span_dim(vectors: &[BitVec]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => Echelon::from_vectors(v.len(), vectors).dim(),
    }
}

/// Inverse of a square matrix, if it is invertible.
pub fn invert(m: &BitMatrix) -> Option<BitMatrix> {
    assert_eq!(m.rows(), m.cols(), "only square matrices are invertible");
    let n = m.rows();
    if n == 0 {
        return Some(BitMatrix::zeros(0, 0));
    }
    let (r, pivots) = m.hstack(&BitMatrix::identity(n)).rref();
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    Some(r.select_columns(&cols))
}
