use num_traits::Zero;

use super::{sym_dim, MultiIndex};
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix, Scalar};

/// A quadratic form `q(v) = v^T Q v` with `Q` symmetric.
///
/// Coordinates on `Sym^2 V*` are the entries `Q_ij`, `i <= j`, ordered by
/// the colex rank of `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    q: Matrix,
}

fn half() -> Scalar {
    Scalar::new(1.into(), 2.into())
}

impl QuadraticForm {
    pub fn new(q: Matrix) -> Result<Self> {
        if q.nrows() != q.ncols() {
            return Err(Error::DimensionMismatch { expected: q.nrows(), got: q.ncols() });
        }
        if !q.is_symmetric() {
            return Err(Error::InvalidParameters { name: "quadratic form".into(), reason: "matrix is not symmetric".into() });
        }
        Ok(QuadraticForm { q })
    }

    /// From polynomial terms `c * x_i * x_j`; repeated terms add up.
    pub fn from_terms(n: usize, terms: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut q = Matrix::zeros(n, n);
        for (i, j, c) in terms {
            if *i >= n || *j >= n {
                return Err(Error::DimensionMismatch { expected: n, got: (*i).max(*j) + 1 });
            }
            if i == j {
                q[(*i, *i)] += c;
            } else {
                let h = c * half();
                q[(*i, *j)] += &h;
                q[(*j, *i)] += &h;
            }
        }
        Ok(QuadraticForm { q })
    }

    pub fn dim(&self) -> usize {
        self.q.nrows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.q
    }

    pub fn value(&self, v: &[Scalar]) -> Result<Scalar> {
        self.polar(v, v)
    }

    /// `B_q(u, v) = u^T Q v`.
    pub fn polar(&self, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
        Ok(dot(u, &self.q.mul_vec(v)?))
    }

    /// The covector `B_q(a, .)`.
    pub fn polar_covector(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        self.q.mul_vec(a)
    }

    /// Polynomial terms `(i, j, c)` with `i <= j`, skipping zeros.
    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..=j {
                let x = &self.q[(i, j)];
                if !x.is_zero() {
                    out.push((i, j, if i == j { x.clone() } else { x * Scalar::from_integer(2.into()) }));
                }
            }
        }
        out
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let n = self.dim();
        MultiIndex::all(n, 2).map(|mu| self.q[(mu.as_slice()[0], mu.as_slice()[1])].clone()).collect()
    }

    pub fn from_coords(n: usize, coords: &[Scalar]) -> Result<Self> {
        if coords.len() != sym_dim(n, 2) {
            return Err(Error::DimensionMismatch { expected: sym_dim(n, 2), got: coords.len() });
        }
        let mut q = Matrix::zeros(n, n);
        for (mu, c) in MultiIndex::all(n, 2).zip(coords) {
            let (i, j) = (mu.as_slice()[0], mu.as_slice()[1]);
            q[(i, j)] = c.clone();
            q[(j, i)] = c.clone();
        }
        Ok(QuadraticForm { q })
    }

    /// Row of the evaluation map `Sym^2 V* -> Q`, `q -> q(v)`, in coordinates.
    pub fn evaluation_row(v: &[Scalar]) -> Vec<Scalar> {
        let two = Scalar::from_integer(2.into());
        MultiIndex::all(v.len(), 2)
            .map(|mu| {
                let (i, j) = (mu.as_slice()[0], mu.as_slice()[1]);
                if i == j {
                    &v[i] * &v[i]
                } else {
                    &v[i] * &v[j] * &two
                }
            })
            .collect()
    }

    /// Derivation action `(X.q)(v) = 2 B_q(Xv, v)`, i.e. `Q X + X^T Q`.
    pub fn act(&self, x: &Matrix) -> Result<QuadraticForm> {
        let qx = self.q.mul(x)?;
        Ok(QuadraticForm { q: qx.add(&qx.transpose()) })
    }

    /// Pull-back along a linear map `E: W -> V`, i.e. `E^T Q E`.
    pub fn restrict(&self, e: &Matrix) -> Result<QuadraticForm> {
        Ok(QuadraticForm { q: e.transpose().mul(&self.q)?.mul(e)? })
    }
}
