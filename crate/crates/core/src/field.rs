//! Dense matrices over a prime field `F_p`.
//!
//! Matrices do not carry their characteristic; every operation that reduces
//! goes through a [`Field`]. Entries are always kept in `0..p`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const DEFAULT_CHAR: u64 = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u64,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: DEFAULT_CHAR }
    }
}

impl Field {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=1 << 31).contains(&p) || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::Unsupported(alloc::format!("{p} is not a usable prime")));
        }
        Ok(Field { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }

    pub fn matmul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.cols, b.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..b.cols {
                    let v = out.data[i * b.cols + j] + x * b.get(k, j);
                    out.data[i * b.cols + j] = v % self.p;
                }
            }
        }
        out
    }

    pub fn matadd(&self, a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!((a.rows, a.cols), (b.rows, b.cols), "shape mismatch in sum");
        let data = a.data.iter().zip(&b.data).map(|(&x, &y)| self.add(x, y)).collect();
        Matrix { rows: a.rows, cols: a.cols, data }
    }

    pub fn matsub(&self, a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!((a.rows, a.cols), (b.rows, b.cols), "shape mismatch in difference");
        let data = a.data.iter().zip(&b.data).map(|(&x, &y)| self.sub(x, y)).collect();
        Matrix { rows: a.rows, cols: a.cols, data }
    }

    pub fn scale(&self, c: u64, a: &Matrix) -> Matrix {
        let data = a.data.iter().map(|&x| self.mul(c, x)).collect();
        Matrix { rows: a.rows, cols: a.cols, data }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self, a: &Matrix) -> (Matrix, Vec<usize>) {
        let mut m = a.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(r) = (row..m.rows).find(|&r| m.get(r, col) != 0) else { continue };
            m.swap_rows(row, r);
            let inv = self.inv(m.get(row, col));
            for j in 0..m.cols {
                let v = self.mul(m.get(row, j), inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                let f = m.get(r, col);
                if r == row || f == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = self.sub(m.get(r, j), self.mul(f, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, a: &Matrix) -> usize {
        self.rref(a).1.len()
    }

    /// Basis of `{x : a x = 0}` as column vectors.
    pub fn nullspace(&self, a: &Matrix) -> Vec<Vec<u64>> {
        let (r, pivots) = self.rref(a);
        let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; a.cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(r.get(row, f));
                }
                v
            })
            .collect()
    }

    /// Basis of `{y : y a = 0}` as row vectors.
    pub fn left_nullspace(&self, a: &Matrix) -> Vec<Vec<u64>> {
        self.nullspace(&a.transpose())
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self, a: &Matrix) -> Option<Matrix> {
        if a.rows != a.cols {
            return None;
        }
        let n = a.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = Matrix::hstack(&[a.clone(), Matrix::identity(n)]);
        let (r, pivots) = self.rref(&aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    /// A right inverse `b` of a full-row-rank `a` (so `a b = 1`).
    pub fn right_inverse(&self, a: &Matrix) -> Option<Matrix> {
        if a.rows == 0 {
            return Some(Matrix::zeros(a.cols, 0));
        }
        let t = a.transpose();
        // Solve a x_j = e_j through a left inverse of a^T.
        let aug = Matrix::hstack(&[t.clone(), Matrix::identity(t.rows)]);
        let (r, pivots) = self.rref(&aug);
        if pivots.len() < a.rows || pivots[a.rows - 1] >= a.rows {
            return None;
        }
        // Rows 0..rank of r, columns after t.cols, form l with l t = [1; 0].
        let l = r.block(0, a.rows, a.rows, t.rows);
        Some(l.transpose())
    }

    /// Whether the rows of `a` span the same space as the rows of `b`.
    pub fn same_row_space(&self, a: &Matrix, b: &Matrix) -> bool {
        let ra = self.rank(a);
        ra == self.rank(b) && ra == self.rank(&Matrix::vstack(&[a.clone(), b.clone()]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from rows; entries must already be reduced.
    pub fn from_rows(rows: usize, cols: usize, entries: &[Vec<u64>]) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidRepresentation(alloc::format!(
                "expected a {rows}x{cols} matrix"
            )));
        }
        Ok(Matrix { rows, cols, data: entries.iter().flatten().copied().collect() })
    }

    pub fn from_column(v: &[u64]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// The `h x w` block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Matrix {
        let mut m = Matrix::zeros(h, w);
        for r in 0..h {
            for c in 0..w {
                m.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        m
    }

    /// Writes `b` into `self` at `(r0, c0)`.
    pub fn put(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c));
            }
        }
    }

    /// Side by side; all parts need the same number of rows.
    pub fn hstack(parts: &[Matrix]) -> Matrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            out.put(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    /// On top of each other; all parts need the same number of columns.
    pub fn vstack(parts: &[Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            out.put(r0, 0, m);
            r0 += m.rows;
        }
        out
    }

    /// Columns given as vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<u64>]) -> Matrix {
        let mut m = Matrix::zeros(rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            for (r, &x) in v.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    /// Rows given as vectors.
    pub fn from_row_vectors(cols: usize, rows: &[Vec<u64>]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            for (c, &x) in v.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }
}
