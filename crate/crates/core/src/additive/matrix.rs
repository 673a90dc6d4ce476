use std::fmt;

use crate::fields::fp_poly::{inv_mod_p, mul_mod_p};

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from rows; entries are reduced mod p.
    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            p,
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&v| v % p).collect(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
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
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + mul_mod_p(a, b, self.p)) % self.p)
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = inv_mod_p(self.get(row, col), p);
            for c in 0..self.cols {
                let v = mul_mod_p(self.get(row, c), inv, p);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                let factor = self.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let v = (self.get(r, c) + p - mul_mod_p(factor, self.get(row, c), p)) % p;
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of {v : M v = 0}, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - m.get(r, f)) % p;
                }
                v
            })
            .collect()
    }

    /// Drops zero rows; used after [`rref`](Self::rref).
    pub(crate) fn without_zero_rows(&self) -> Self {
        let rows: Vec<Vec<u64>> = self
            .row_vecs()
            .into_iter()
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect();
        let mut out = Self::from_rows(self.p, &rows);
        out.cols = self.cols;
        out
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(self.p, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Self::zeros(self.p, n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug.get(r, n + c));
            }
        }
        Some(out)
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}{:?}", self.p, self.row_vecs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace() {
        let m = FpMatrix::from_rows(5, &[vec![1, 2, 3], vec![2, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(m.mul_vec(&ns[0]), vec![0, 0]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = FpMatrix::from_rows(7, &[vec![2, 3], vec![1, 4]]);
        let inv = m.inverse().unwrap();
        let e0 = m.mul_vec(&inv.column(0));
        let e1 = m.mul_vec(&inv.column(1));
        assert_eq!((e0, e1), (vec![1, 0], vec![0, 1]));
        let singular = FpMatrix::from_rows(7, &[vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
    }
}
