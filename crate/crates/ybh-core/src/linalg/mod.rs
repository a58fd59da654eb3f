//! Sparse matrices over Q[y, y^-1], tensor index bookkeeping, and Smith
//! normal form (in [`snf`]).
//!
//! Matrices act on tensor powers of the rank-2 module V, so row/column
//! indices are flattened tensor words: the word (i_1, ..., i_n) with
//! digits in {1, 2} flattens to sum (i_t - 1) 2^(n-t), i.e. the first
//! factor is the most significant bit.

pub mod snf;

use crate::laurent::{LaurentPoly, ParseLaurentError};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

/// Index into a basis of V^(x)n: a word of digits 1/2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorIndex {
    digits: Vec<u8>,
}

impl TensorIndex {
    pub fn new(digits: Vec<u8>) -> Self {
        assert!(digits.iter().all(|&d| d == 1 || d == 2), "digits must be 1 or 2");
        Self { digits }
    }

    pub fn n(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Flattened index in lexicographic order, first factor most significant.
    pub fn flat(&self) -> usize {
        self.digits.iter().fold(0, |acc, &d| acc * 2 + (d as usize - 1))
    }

    pub fn from_flat(flat: usize, n: usize) -> Self {
        assert!(flat < (1usize << n), "flat index out of range");
        let digits = (0..n)
            .rev()
            .map(|bit| 1 + ((flat >> bit) & 1) as u8)
            .collect();
        Self { digits }
    }

    /// All basis words of V^(x)n in flat order.
    pub fn all(n: usize) -> impl Iterator<Item = TensorIndex> {
        (0..(1usize << n)).map(move |f| TensorIndex::from_flat(f, n))
    }
}

/// Sparse matrix over the Laurent ring; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<LaurentPoly>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (i, row) in data.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, p) in row.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&LaurentPoly> {
        self.entries.get(&(i, j))
    }

    pub fn get(&self, i: usize, j: usize) -> LaurentPoly {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries.get(&(i, j)).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if p.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), p);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let cur = self.get(i, j);
        self.set(i, j, &cur + p);
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.entries.iter().map(|(&(i, j), p)| (i, j, p))
    }

    pub fn column(&self, j: usize) -> RingMatrix {
        assert!(j < self.cols);
        let mut out = RingMatrix::zeros(self.rows, 1);
        for (&(i, jj), p) in &self.entries {
            if jj == j {
                out.set(i, 0, p.clone());
            }
        }
        out
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.cols, self.rows);
        for (&(i, j), p) in &self.entries {
            out.set(j, i, p.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.rows, self.cols);
        for (&(i, j), p) in &self.entries {
            out.set(i, j, p * c);
        }
        out
    }

    /// Matrix product self * rhs.
    pub fn compose(&self, rhs: &RingMatrix) -> RingMatrix {
        assert_eq!(self.cols, rhs.rows, "compose dimension mismatch");
        let mut rhs_rows: Vec<Vec<(usize, &LaurentPoly)>> = vec![Vec::new(); rhs.rows];
        for (&(k, j), p) in &rhs.entries {
            rhs_rows[k].push((j, p));
        }
        let mut out = RingMatrix::zeros(self.rows, rhs.cols);
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &rhs_rows[k] {
                out.add_to(i, j, &(a * b));
            }
        }
        out
    }

    /// Kronecker product; block (i, j) of the result is a[i][j] * rhs.
    pub fn kron(&self, rhs: &RingMatrix) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (&(i, j), a) in &self.entries {
            for (&(k, l), b) in &rhs.entries {
                out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
            }
        }
        out
    }

    /// Rank over the fraction field, by fraction-free elimination.
    ///
    /// Cross-multiplication rows keep everything in the ring; each reduced
    /// row is divided by the gcd of its entries to curb growth. Row
    /// scaling by nonzero ring elements does not change rank.
    pub fn rank(&self) -> usize {
        let mut m = self.to_dense();
        let rows = self.rows;
        let cols = self.cols;
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot = (rank..rows)
                .filter(|&i| !m[i][col].is_zero())
                .min_by_key(|&i| m[i][col].euclid_norm());
            let Some(pivot) = pivot else { continue };
            m.swap(rank, pivot);
            for i in rank + 1..rows {
                if m[i][col].is_zero() {
                    continue;
                }
                let f_pivot = m[rank][col].clone();
                let f_row = m[i][col].clone();
                for j in col..cols {
                    m[i][j] = &(&m[i][j] * &f_pivot) - &(&m[rank][j] * &f_row);
                }
                reduce_row_content(&mut m[i]);
            }
            rank += 1;
        }
        rank
    }

    pub fn kernel_rank(&self) -> usize {
        self.cols - self.rank()
    }

    /// Determinant by the Bareiss fraction-free scheme; every interior
    /// division is exact in the ring.
    pub fn determinant(&self) -> LaurentPoly {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.to_dense();
        let mut sign = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return LaurentPoly::zero();
                };
                m.swap(k, swap);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev);
                }
                m[i][k] = LaurentPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign {
            -det
        } else {
            det
        }
    }

    /// A square matrix is invertible over the ring iff its determinant is
    /// a unit, i.e. a single monomial.
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().is_unit()
    }

    pub(crate) fn to_dense(&self) -> Vec<Vec<LaurentPoly>> {
        let mut m = vec![vec![LaurentPoly::zero(); self.cols]; self.rows];
        for (&(i, j), p) in &self.entries {
            m[i][j] = p.clone();
        }
        m
    }

    pub(crate) fn from_dense(m: Vec<Vec<LaurentPoly>>) -> Self {
        Self::from_rows(m)
    }

    /// Text form: a `rows cols` header line, then one `row col poly` line
    /// per nonzero entry in row-major order.
    pub fn to_matrix_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.rows, self.cols);
        for (&(i, j), p) in &self.entries {
            let _ = writeln!(out, "{i} {j} {p}");
        }
        out
    }

    pub fn from_matrix_text(text: &str) -> Result<Self, ParseMatrixError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(ParseMatrixError::MissingHeader)?;
        let mut dims = header.split_whitespace();
        let rows = parse_dim(dims.next(), header)?;
        let cols = parse_dim(dims.next(), header)?;
        if dims.next().is_some() {
            return Err(ParseMatrixError::BadHeader(header.to_string()));
        }
        let mut m = Self::zeros(rows, cols);
        for line in lines {
            let line = line.trim();
            let (i_tok, rest) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| ParseMatrixError::BadEntry(line.to_string()))?;
            let (j_tok, poly_text) = rest
                .trim_start()
                .split_once(char::is_whitespace)
                .ok_or_else(|| ParseMatrixError::BadEntry(line.to_string()))?;
            let i: usize = i_tok
                .parse()
                .map_err(|_| ParseMatrixError::BadEntry(line.to_string()))?;
            let j: usize = j_tok
                .parse()
                .map_err(|_| ParseMatrixError::BadEntry(line.to_string()))?;
            if i >= rows || j >= cols {
                return Err(ParseMatrixError::OutOfBounds { i, j, rows, cols });
            }
            if m.entry(i, j).is_some() {
                return Err(ParseMatrixError::DuplicateEntry { i, j });
            }
            let p: LaurentPoly = poly_text.trim().parse()?;
            m.set(i, j, p);
        }
        Ok(m)
    }
}

fn parse_dim(tok: Option<&str>, header: &str) -> Result<usize, ParseMatrixError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseMatrixError::BadHeader(header.to_string()))
}

/// Entrywise equality for same-shape matrices; the name records that the
/// golden d4 table is published transposed, so callers compare after
/// normalizing the presentation. Panics on a dimension mismatch.
pub fn mat_equal_upto_column_order(a: &RingMatrix, b: &RingMatrix) -> bool {
    assert_eq!(
        (a.rows, a.cols),
        (b.rows, b.cols),
        "dimension mismatch in matrix comparison"
    );
    a == b
}

fn reduce_row_content(row: &mut [LaurentPoly]) {
    let mut g = LaurentPoly::zero();
    for p in row.iter() {
        if !p.is_zero() {
            g = g.gcd(p);
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for p in row.iter_mut() {
        if !p.is_zero() {
            *p = p.div_exact(&g);
        }
    }
}

/// Matrix text parse failure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseMatrixError {
    #[error("missing `rows cols` header line")]
    MissingHeader,
    #[error("malformed header `{0}`")]
    BadHeader(String),
    #[error("malformed entry line `{0}`")]
    BadEntry(String),
    #[error("entry ({i}, {j}) out of bounds for {rows} x {cols}")]
    OutOfBounds { i: usize, j: usize, rows: usize, cols: usize },
    #[error("duplicate entry at ({i}, {j})")]
    DuplicateEntry { i: usize, j: usize },
    #[error(transparent)]
    Poly(#[from] ParseLaurentError),
}

impl Add<&RingMatrix> for &RingMatrix {
    type Output = RingMatrix;
    fn add(self, rhs: &RingMatrix) -> RingMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add dimension mismatch");
        let mut out = self.clone();
        for (&(i, j), p) in &rhs.entries {
            out.add_to(i, j, p);
        }
        out
    }
}

impl Sub<&RingMatrix> for &RingMatrix {
    type Output = RingMatrix;
    fn sub(self, rhs: &RingMatrix) -> RingMatrix {
        self + &(-rhs)
    }
}

impl Neg for &RingMatrix {
    type Output = RingMatrix;
    fn neg(self) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.rows, self.cols);
        for (&(i, j), p) in &self.entries {
            out.set(i, j, -p);
        }
        out
    }
}

impl Mul<&RingMatrix> for &RingMatrix {
    type Output = RingMatrix;
    fn mul(self, rhs: &RingMatrix) -> RingMatrix {
        self.compose(rhs)
    }
}
