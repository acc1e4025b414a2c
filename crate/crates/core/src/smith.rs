//! Smith normal form over Euclidean integer types.
//!
//! For an `m × n` integer matrix `A` the decomposition produces unimodular
//! `U` (`m × m`) and `V` (`n × n`) with `U·A·V = D`, where `D` is diagonal,
//! its nonzero entries are positive and each divides the next.

use std::fmt;

use crate::scalar::IntScalar;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from its columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone();
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

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &T) {
        for j in 0..self.cols {
            let v = self[(source, j)].clone() * factor.clone();
            self[(target, j)] = self[(target, j)].clone() + v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &T) {
        for i in 0..self.rows {
            let v = self[(i, source)].clone() * factor.clone();
            self[(i, target)] = self[(i, target)].clone() + v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)].clone();
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols.max(1)).take(self.rows).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Result of [`smith_normal_form`].
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    /// Diagonal entries `d_0 | d_1 | …`, nonzero ones first, all `>= 0`.
    pub diagonal: Vec<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
    rows: usize,
    cols: usize,
}

impl<T: IntScalar> SmithForm<T> {
    /// Nonzero invariant factors, ascending under divisibility.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.diagonal.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    /// Rank of the original matrix.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Finds an integer `y` with `A·y = b`, if one exists.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let c = self.left.mul_vec(b);
        let mut z = vec![T::zero(); self.cols];
        for (i, ci) in c.iter().enumerate() {
            let d = self.diagonal.get(i).cloned().unwrap_or_else(T::zero);
            if d.is_zero() {
                if !ci.is_zero() {
                    return None;
                }
            } else {
                let (q, r) = ci.div_rem(&d);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            }
        }
        Some(self.right.mul_vec(&z))
    }

    /// Whether `b` lies in the column lattice of the original matrix.
    pub fn in_column_lattice(&self, b: &[T]) -> bool {
        self.solve(b).is_some()
    }
}

/// Computes the Smith normal form of `a` with its transforms.
///
/// Pivots are chosen as the entry of least nonzero absolute value in the
/// active submatrix, which keeps intermediate entries small on the matrices
/// this crate produces.
pub fn smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> SmithForm<T> {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut left = Matrix::identity(m);
    let mut right = Matrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                let neg = -q;
                d.add_row(i, t, &neg);
                left.add_row(i, t, &neg);
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                let neg = -q;
                d.add_col(j, t, &neg);
                right.add_col(j, t, &neg);
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A remainder survived: move the smaller entry into the pivot.
                let (pi, pj) = min_nonzero_cross(&d, t);
                d.swap_rows(t, pi);
                left.swap_rows(t, pi);
                d.swap_cols(t, pj);
                right.swap_cols(t, pj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let one = T::one();
                    d.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal = (0..m.min(n)).map(|i| d[(i, i)].clone()).collect();
    SmithForm {
        diagonal,
        left,
        right,
        rows: m,
        cols: n,
    }
}

fn min_nonzero<T: IntScalar>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let v = &d[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` of the active block.
fn min_nonzero_cross<T: IntScalar>(d: &Matrix<T>, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let v = &d[(i, j)];
        if !v.is_zero() && (d[*best].is_zero() || v.abs() < d[*best].abs()) {
            *best = (i, j);
        }
    };
    for i in t..d.rows {
        consider(i, t, &mut best);
    }
    for j in t..d.cols {
        consider(t, j, &mut best);
    }
    best
}
