//! Subspaces of a fixed coordinate space, stored as an RREF basis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// A linear subspace of `Q^ambient_dim`.
///
/// The basis is kept in reduced row-echelon form, so equal subspaces have
/// identical representations and coordinates of a member are read directly
/// off its pivot entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim), pivots: (0..ambient_dim).collect() }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.submatrix(0..pivots.len(), 0..m.cols());
        Subspace { ambient_dim: m.cols(), basis, pivots }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        Subspace::row_space(&Matrix::from_rows(vectors, ambient_dim))
    }

    /// Span of standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<Rational>> = indices.iter().map(|&i| unit(ambient_dim, i)).collect();
        Subspace::from_vectors(ambient_dim, &vecs)
    }

    /// Trusts the caller that `basis` is already in RREF with these pivots.
    pub(crate) fn from_rref_parts(basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rows(), pivots.len());
        Subspace { ambient_dim: basis.cols(), basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn vector(&self, i: usize) -> &[Rational] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the RREF basis, if `v` is a member.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the RREF basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (row, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in out.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x += c * b;
                }
            }
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok((0..other.dim()).all(|i| self.contains(other.vector(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        // Solve a*S = b*T: kernel of the column-stacked bases.
        let (s, t) = (self.dim(), other.dim());
        if s == 0 || t == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let stacked = self.basis.vstack(&(-&other.basis)).transpose();
        let vecs: Vec<Vec<Rational>> = stacked.kernel_basis().into_iter().map(|ab| self.combine(&ab[..s])).collect();
        Ok(Subspace::from_vectors(self.ambient_dim, &vecs))
    }

    /// A complement `T` of `self` inside `within` (`self ⊕ T = within`).
    ///
    /// Candidates are the RREF basis vectors of `within` in order, each taken
    /// when it is not already in the span; for `within` the full space these
    /// are the standard vectors with smallest indices outside the pivot set.
    pub fn extend_complement(&self, within: &Subspace) -> Result<Subspace> {
        self.check(within)?;
        if !within.contains_subspace(self)? {
            return Err(Error::DimensionMismatch("subspace is not contained in `within`".into()));
        }
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for i in 0..within.dim() {
            let v = within.vector(i);
            if !acc.contains(v) {
                chosen.push(v.to_vec());
                acc = Subspace::row_space(&acc.basis.vstack(&Matrix::from_rows(&[v.to_vec()], self.ambient_dim)));
            }
        }
        Ok(Subspace::from_vectors(self.ambient_dim, &chosen))
    }

    /// Image under the linear map `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "map from Q^{} applied to subspace of Q^{}",
                m.cols(),
                self.ambient_dim
            )));
        }
        let vecs: Vec<Vec<Rational>> = (0..self.dim()).map(|i| m.mul_vec(self.vector(i))).collect();
        Ok(Subspace::from_vectors(m.rows(), &vecs))
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}, basis {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}

/// The `i`-th standard basis vector of `Q^n`.
pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num_traits::One::one();
    v
}
