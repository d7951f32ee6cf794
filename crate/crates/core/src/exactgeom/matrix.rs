use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{ratio_from_int, ExactInt};

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix<T: ExactInt> {
    rows: usize,
    cols: usize,
    data: Vec<Ratio<T>>,
}

impl<T: ExactInt> RationalMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<Ratio<T>>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Self { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Ratio::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Ratio::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Ratio<T>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| ratio_from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Ratio<T> {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Ratio<T>) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Ratio<T>] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Ratio<T>>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_rows(idx.iter().map(|&r| self.row(r).to_vec()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.clone().echelonize().0
    }

    /// In-place forward elimination; returns the rank and pivot columns.
    fn echelonize(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (lead..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, pr);
            let inv = self.get(lead, col).clone().recip();
            for c in col..self.cols {
                let v = self.get(lead, c).clone() * inv.clone();
                self.set(lead, c, v);
            }
            for r in 0..self.rows {
                if r != lead && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c).clone() - f.clone() * self.get(lead, c).clone();
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        (lead, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let (_, pivots) = m.echelonize();
        (m, pivots)
    }

    /// Basis of the right kernel `{x | Mx = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Ratio<T>>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        for &f in &free {
            let mut v = vec![Ratio::zero(); self.cols];
            v[f] = Ratio::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact solution of a square system `Mx = b`, or `None` when `M` is
    /// singular. Singularity is not an error here; callers filter on it.
    pub fn solve_square(&self, b: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
        assert_eq!(self.rows, self.cols, "solve_square needs a square matrix");
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut aug = Self::zero(n, n + 1);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n, b[r].clone());
        }
        let (rank, pivots) = aug.echelonize();
        if rank < n || pivots.iter().any(|&p| p == n) {
            return None;
        }
        let mut x = vec![Ratio::zero(); n];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(row, n).clone();
        }
        Some(x)
    }

    /// `M x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Ratio<T>]) -> Vec<Ratio<T>> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(Ratio::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = RationalMatrix<i64>;

    #[test]
    fn rank_identity() {
        assert_eq!(M::identity(3).rank(), 3);
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(M::zero(2, 4).rank(), 0);
    }

    #[test]
    fn rank_cyclic_rows() {
        let m = M::from_int_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn solve_identity() {
        let b: Vec<_> = [3, -1, 7].iter().map(|&x| ratio_from_int(x)).collect();
        assert_eq!(M::identity(3).solve_square(&b), Some(b.clone()));
    }

    #[test]
    fn solve_singular() {
        let m = M::from_int_rows(&[vec![1, 1], vec![1, 1]]);
        let b: Vec<_> = [1, 2].iter().map(|&x| ratio_from_int(x)).collect();
        assert_eq!(m.solve_square(&b), None);
    }

    #[test]
    fn solve_diagonal() {
        let m = M::from_int_rows(&[vec![2, 0], vec![0, 3]]);
        let b: Vec<_> = [1, 1].iter().map(|&x| ratio_from_int(x)).collect();
        let x = m.solve_square(&b).unwrap();
        assert_eq!(x, vec![Ratio::new(1, 2), Ratio::new(1, 3)]);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = M::from_int_rows(&[vec![1, 2, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }
}
