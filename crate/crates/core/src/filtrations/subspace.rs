use num_rational::Ratio;
use num_traits::Zero;

use super::FiltrationError;
use crate::exactgeom::RationalMatrix;
use crate::ExactInt;

/// A subspace of an `ambient_dim`-dimensional rational space, stored as its
/// reduced row-echelon basis. The canonical form makes equality and hashing
/// meaningful, which the lattice computations rely on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis<T: ExactInt> {
    ambient_dim: usize,
    basis: Vec<Vec<Ratio<T>>>,
}

impl<T: ExactInt> SubspaceBasis<T> {
    /// Build from independent spanning vectors; rejects dependent input.
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<Ratio<T>>>) -> Result<Self, FiltrationError> {
        let count = vectors.len();
        let s = Self::from_spanning(ambient_dim, vectors)?;
        if s.dim() != count {
            return Err(FiltrationError::DependentBasis);
        }
        Ok(s)
    }

    /// Build from an arbitrary spanning set, dropping dependencies.
    pub fn from_spanning(
        ambient_dim: usize,
        vectors: Vec<Vec<Ratio<T>>>,
    ) -> Result<Self, FiltrationError> {
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(FiltrationError::AmbientMismatch {
                    expected: ambient_dim,
                    got: v.len(),
                });
            }
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let (rref, pivots) = RationalMatrix::from_rows(vectors).rref();
        let basis = (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect();
        Ok(Self { ambient_dim, basis })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let id = RationalMatrix::identity(ambient_dim);
        Self {
            ambient_dim,
            basis: id.row_vecs(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Ratio<T>>] {
        &self.basis
    }

    fn stacked_rank(&self, other: &Self) -> usize {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        if rows.is_empty() {
            return 0;
        }
        RationalMatrix::from_rows(rows).rank()
    }

    /// `other` is contained in `self`.
    pub fn contains(&self, other: &Self) -> bool {
        self.stacked_rank(other) == self.dim()
    }

    pub fn contains_vector(&self, v: &[Ratio<T>]) -> bool {
        let probe = Self {
            ambient_dim: self.ambient_dim,
            basis: vec![v.to_vec()],
        };
        v.iter().all(Zero::is_zero) || self.stacked_rank(&probe) == self.dim()
    }

    /// `dim(self ^ other)` by the rank formula.
    pub fn dim_intersection(&self, other: &Self) -> usize {
        self.dim() + other.dim() - self.stacked_rank(other)
    }

    /// The intersection subspace, computed exactly: kernel vectors of
    /// `[A^t | -B^t]` give the coefficient pairs of common elements.
    pub fn intersect(&self, other: &Self) -> Self {
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(self.ambient_dim);
        }
        if self.dim() == self.ambient_dim {
            return other.clone();
        }
        if other.dim() == self.ambient_dim {
            return self.clone();
        }
        let n = self.ambient_dim;
        let a = self.dim();
        let b = other.dim();
        let mut m = RationalMatrix::zero(n, a + b);
        for (col, v) in self.basis.iter().enumerate() {
            for r in 0..n {
                m.set(r, col, v[r].clone());
            }
        }
        for (col, v) in other.basis.iter().enumerate() {
            for r in 0..n {
                m.set(r, a + col, -v[r].clone());
            }
        }
        let mut vectors = Vec::new();
        for kv in m.kernel_basis() {
            let mut w = vec![Ratio::zero(); n];
            for (i, coeff) in kv[..a].iter().enumerate() {
                for c in 0..n {
                    w[c] = w[c].clone() + coeff.clone() * self.basis[i][c].clone();
                }
            }
            vectors.push(w);
        }
        Self::from_spanning(n, vectors).expect("dimensions verified")
    }

    /// The span of the union of both subspaces.
    pub fn span_with(&self, other: &Self) -> Self {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_spanning(self.ambient_dim, rows).expect("dimensions verified")
    }

    /// Image under an invertible change of basis (vectors as columns: each
    /// basis vector `v` becomes `g v`).
    pub fn apply(&self, g: &RationalMatrix<T>) -> Self {
        assert_eq!(g.rows(), self.ambient_dim);
        assert_eq!(g.cols(), self.ambient_dim);
        let vectors: Vec<Vec<Ratio<T>>> = self.basis.iter().map(|v| g.mul_vec(v)).collect();
        let s = Self::from_spanning(self.ambient_dim, vectors).expect("dimensions verified");
        assert_eq!(s.dim(), self.dim(), "basis change must be invertible");
        s
    }
}
