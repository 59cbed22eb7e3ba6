use std::fmt;

use num_traits::Zero;

use super::{dot, row_reduce, Matrix, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, stored as its RREF basis.
///
/// The representation is canonical, so `==` is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: v.len() });
            }
        }
        let rows = vectors
            .into_iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .map(|v| v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Ok(Self::from_rref(ambient, row_reduce(rows, ambient)))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        Self::from_spanning(m.ncols(), m.to_rows()).expect("rows have matrix width")
    }

    /// Wraps rows already in canonical RREF.
    pub(crate) fn from_rref(ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        Subspace { ambient, basis: Matrix::from_rows(ambient, rows) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .rows_iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero"))
            .collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// Remainder of `v` after reduction by the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        let mut r = v.to_vec();
        for (row, c) in self.basis.rows_iter().zip(self.pivots()) {
            if r[c].is_zero() {
                continue;
            }
            let f = r[c].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots().into_iter().map(|c| v[c].clone()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for r in self.basis.rows_iter() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Self::from_spanning(self.ambient, vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        self.annihilator().sum(&other.annihilator()).map(|s| s.annihilator())
    }

    /// `{u : u · v = 0 for all v in self}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        let rows = self
            .basis
            .rows_iter()
            .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
            .collect();
        Self::from_rref(self.ambient, super::kernel_rows(rows, self.ambient))
    }

    /// Image under a linear map given as an `m x n` matrix.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        if map.ncols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: map.ncols() });
        }
        let vs = self.basis.rows_iter().map(|r| map.mul_vec(r)).collect::<Result<Vec<_>>>()?;
        Self::from_spanning(map.nrows(), vs)
    }

    /// Span of the basis vectors restricted to the listed coordinates.
    pub fn project(&self, coords: &[usize]) -> Subspace {
        let vs = self.basis.rows_iter().map(|r| coords.iter().map(|&c| r[c].clone()).collect()).collect();
        Self::from_spanning(coords.len(), vs).expect("projected vectors have the right length")
    }

    /// Whether every basis vector pairs to zero with every vector of `other`.
    pub fn is_orthogonal_to(&self, other: &Subspace) -> bool {
        self.basis.rows_iter().all(|a| other.basis.rows_iter().all(|b| dot(a, b).is_zero()))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}) ", self.dim(), self.ambient)?;
        self.basis.fmt(f)
    }
}
