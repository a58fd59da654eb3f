//! Smith normal form over the Euclidean domain Q[y, y^-1].
//!
//! `compute` returns D = U A V with U, V products of elementary row and
//! column operations, D diagonal with each diagonal entry canonical
//! (see [`LaurentPoly::canonicalize`]) and dividing the next one. The
//! factorization is re-multiplied and checked before it is returned.

use super::RingMatrix;
use crate::laurent::LaurentPoly;


/// Pivot selection rule. Invariant factors are independent of the choice;
/// keeping two rules around lets tests exercise that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// Smallest Euclidean norm, ties by (row, col). Bounds entry growth.
    #[default]
    MinNorm,
    /// First nonzero in row-major scan order.
    FirstNonzero,
}

/// A verified factorization D = U A V.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    a: RingMatrix,
    pub d: RingMatrix,
    pub u: RingMatrix,
    pub v: RingMatrix,
    rank: usize,
}

struct Worker {
    m: Vec<Vec<LaurentPoly>>,
    u: Vec<Vec<LaurentPoly>>,
    v: Vec<Vec<LaurentPoly>>,
    rows: usize,
    cols: usize,
    strategy: PivotStrategy,
}

impl Worker {
    fn new(a: &RingMatrix, strategy: PivotStrategy) -> Self {
        let rows = a.rows();
        let cols = a.cols();
        Self {
            m: a.to_dense(),
            u: RingMatrix::identity(rows).to_dense(),
            v: RingMatrix::identity(cols).to_dense(),
            rows,
            cols,
            strategy,
        }
    }

    fn swap_rows(&mut self, i: usize, t: usize) {
        if i != t {
            self.m.swap(i, t);
            self.u.swap(i, t);
        }
    }

    fn swap_cols(&mut self, j: usize, t: usize) {
        if j == t {
            return;
        }
        for row in &mut self.m {
            row.swap(j, t);
        }
        for row in &mut self.v {
            row.swap(j, t);
        }
    }

    /// Zero m[i][t] against the pivot m[t][t] with a single unimodular
    /// pair of row operations, mirrored on U. When the pivot does not
    /// divide the entry, the pivot is replaced by their gcd, so Bezout
    /// coefficients stay small instead of accumulating through a
    /// remainder cascade.
    fn clear_row_entry(&mut self, t: usize, i: usize) {
        let a = self.m[t][t].clone();
        let b = self.m[i][t].clone();
        let (q, rem) = b.euclid_div(&a);
        if rem.is_zero() {
            self.row_sub(i, t, &q);
            return;
        }
        let (g, s, w) = a.extended_gcd(&b);
        let ag = a.div_exact(&g);
        let bg = b.div_exact(&g);
        for j in 0..self.cols {
            if self.m[t][j].is_zero() && self.m[i][j].is_zero() {
                continue;
            }
            let top = &(&s * &self.m[t][j]) + &(&w * &self.m[i][j]);
            let bot = &(&ag * &self.m[i][j]) - &(&bg * &self.m[t][j]);
            self.m[t][j] = top;
            self.m[i][j] = bot;
        }
        for j in 0..self.rows {
            if self.u[t][j].is_zero() && self.u[i][j].is_zero() {
                continue;
            }
            let top = &(&s * &self.u[t][j]) + &(&w * &self.u[i][j]);
            let bot = &(&ag * &self.u[i][j]) - &(&bg * &self.u[t][j]);
            self.u[t][j] = top;
            self.u[i][j] = bot;
        }
    }

    /// Column counterpart of [`Worker::clear_row_entry`], mirrored on V.
    /// Returns true when a gcd combination touched column t, which can
    /// re-dirty entries below the pivot.
    fn clear_col_entry(&mut self, t: usize, j: usize) -> bool {
        let a = self.m[t][t].clone();
        let b = self.m[t][j].clone();
        let (q, rem) = b.euclid_div(&a);
        if rem.is_zero() {
            self.col_sub(j, t, &q);
            return false;
        }
        let (g, s, w) = a.extended_gcd(&b);
        let ag = a.div_exact(&g);
        let bg = b.div_exact(&g);
        for i in 0..self.rows {
            if self.m[i][t].is_zero() && self.m[i][j].is_zero() {
                continue;
            }
            let left = &(&s * &self.m[i][t]) + &(&w * &self.m[i][j]);
            let right = &(&ag * &self.m[i][j]) - &(&bg * &self.m[i][t]);
            self.m[i][t] = left;
            self.m[i][j] = right;
        }
        for i in 0..self.cols {
            if self.v[i][t].is_zero() && self.v[i][j].is_zero() {
                continue;
            }
            let left = &(&s * &self.v[i][t]) + &(&w * &self.v[i][j]);
            let right = &(&ag * &self.v[i][j]) - &(&bg * &self.v[i][t]);
            self.v[i][t] = left;
            self.v[i][j] = right;
        }
        true
    }

    /// row_i -= q * row_t, mirrored on U.
    fn row_sub(&mut self, i: usize, t: usize, q: &LaurentPoly) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            if !self.m[t][j].is_zero() {
                let delta = &self.m[t][j] * q;
                self.m[i][j] = &self.m[i][j] - &delta;
            }
        }
        for j in 0..self.rows {
            if !self.u[t][j].is_zero() {
                let delta = &self.u[t][j] * q;
                self.u[i][j] = &self.u[i][j] - &delta;
            }
        }
    }

    /// col_j -= q * col_t, mirrored on V.
    fn col_sub(&mut self, j: usize, t: usize, q: &LaurentPoly) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            if !self.m[i][t].is_zero() {
                let delta = &self.m[i][t] * q;
                self.m[i][j] = &self.m[i][j] - &delta;
            }
        }
        for i in 0..self.cols {
            if !self.v[i][t].is_zero() {
                let delta = &self.v[i][t] * q;
                self.v[i][j] = &self.v[i][j] - &delta;
            }
        }
    }

    /// row_t += row_i, mirrored on U.
    fn row_add(&mut self, t: usize, i: usize) {
        for j in 0..self.cols {
            if !self.m[i][j].is_zero() {
                self.m[t][j] = &self.m[t][j] + &self.m[i][j];
            }
        }
        for j in 0..self.rows {
            if !self.u[i][j].is_zero() {
                self.u[t][j] = &self.u[t][j] + &self.u[i][j];
            }
        }
    }

    /// Multiply row t by a unit, mirrored on U.
    fn scale_row(&mut self, t: usize, unit: &LaurentPoly) {
        for j in 0..self.cols {
            if !self.m[t][j].is_zero() {
                self.m[t][j] = &self.m[t][j] * unit;
            }
        }
        for j in 0..self.rows {
            if !self.u[t][j].is_zero() {
                self.u[t][j] = &self.u[t][j] * unit;
            }
        }
    }

    fn best_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(u64, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if self.m[i][j].is_zero() {
                    continue;
                }
                if self.strategy == PivotStrategy::FirstNonzero {
                    return Some((i, j));
                }
                let norm = self.m[i][j].euclid_norm();
                if best.map_or(true, |(bn, bi, bj)| (norm, i, j) < (bn, bi, bj)) {
                    best = Some((norm, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn reduce(&mut self) -> usize {
        let steps = self.rows.min(self.cols);
        let mut rank = 0;
        for t in 0..steps {
            let Some((pi, pj)) = self.best_pivot(t) else { break };
            self.swap_rows(pi, t);
            self.swap_cols(pj, t);
            'reduce: loop {
                for i in t + 1..self.rows {
                    if !self.m[i][t].is_zero() {
                        self.clear_row_entry(t, i);
                    }
                }
                let mut dirtied = false;
                for j in t + 1..self.cols {
                    if !self.m[t][j].is_zero() && self.clear_col_entry(t, j) {
                        dirtied = true;
                    }
                }
                if dirtied {
                    // a gcd combination re-dirtied column t below the
                    // pivot, with a strictly smaller pivot norm
                    continue 'reduce;
                }
                // pivot must divide the whole trailing block for the
                // invariant factor chain; pull in any offender and retry
                let offender = (t + 1..self.rows)
                    .flat_map(|i| (t + 1..self.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| {
                        !self.m[i][j].is_zero() && !self.m[t][t].divides(&self.m[i][j])
                    });
                match offender {
                    Some((i, _)) => {
                        self.row_add(t, i);
                        continue 'reduce;
                    }
                    None => break,
                }
            }
            let pivot = &self.m[t][t];
            let (bot, _) = pivot.trailing().expect("pivot vanished");
            let (_, lead) = pivot.leading().unwrap();
            let unit = LaurentPoly::monomial(-bot, num::BigRational::from_integer(1.into()) / lead);
            self.scale_row(t, &unit);
            rank += 1;
        }
        rank
    }
}

impl SmithNormalForm {
    /// Diagonalize `a`. Panics if the verification re-multiplication or
    /// the invariant factor chain fails; a returned value is trustworthy.
    pub fn compute(a: &RingMatrix) -> Self {
        Self::compute_with(a, PivotStrategy::default())
    }

    pub fn compute_with(a: &RingMatrix, strategy: PivotStrategy) -> Self {
        let mut w = Worker::new(a, strategy);
        let rank = w.reduce();
        let d = RingMatrix::from_dense(w.m);
        let u = RingMatrix::from_dense(w.u);
        let v = RingMatrix::from_dense(w.v);
        let snf = Self { a: a.clone(), d, u, v, rank };
        snf.verify();
        snf
    }

    fn verify(&self) {
        assert_eq!(self.u.compose(&self.a).compose(&self.v), self.d, "U A V != D");
        let n = self.a.rows().min(self.a.cols());
        for (i, j, p) in self.d.iter() {
            assert_eq!(i, j, "off-diagonal entry in D");
            assert!(!p.is_zero());
            assert_eq!(p.canonicalize(), *p, "non-canonical invariant factor");
        }
        for t in 0..n {
            let cur = self.d.get(t, t);
            if t + 1 < n {
                let next = self.d.get(t + 1, t + 1);
                if !next.is_zero() {
                    assert!(!cur.is_zero(), "zero before nonzero on diagonal");
                    assert!(cur.divides(&next), "invariant factor chain broken");
                }
            }
        }
        assert_eq!(
            (0..n).filter(|&t| !self.d.get(t, t).is_zero()).count(),
            self.rank
        );
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero diagonal entries, in chain order.
    pub fn invariant_factors(&self) -> Vec<LaurentPoly> {
        (0..self.rank).map(|t| self.d.get(t, t)).collect()
    }

    /// Invariant factors that are not units, i.e. the torsion data.
    pub fn nonunit_factors(&self) -> Vec<LaurentPoly> {
        self.invariant_factors().into_iter().filter(|p| !p.is_unit()).collect()
    }

    pub fn unit_count(&self) -> usize {
        self.rank - self.nonunit_factors().len()
    }

    /// Solve A x = b for a single column b, if a solution exists.
    pub fn solve(&self, b: &RingMatrix) -> Option<RingMatrix> {
        assert_eq!(b.cols(), 1, "solve expects a column vector");
        assert_eq!(b.rows(), self.a.rows(), "solve dimension mismatch");
        let y = self.u.compose(b);
        let mut z = RingMatrix::zeros(self.a.cols(), 1);
        for i in 0..self.a.rows() {
            let yi = y.get(i, 0);
            if i < self.rank {
                let (q, r) = yi.euclid_div(&self.d.get(i, i));
                if !r.is_zero() {
                    return None;
                }
                z.set(i, 0, q);
            } else if !yi.is_zero() {
                return None;
            }
        }
        let x = self.v.compose(&z);
        assert_eq!(self.a.compose(&x), *b, "solve verification failed");
        Some(x)
    }

    /// Is b in the column span of A over the ring?
    pub fn in_image(&self, b: &RingMatrix) -> bool {
        self.solve(b).is_some()
    }
}
