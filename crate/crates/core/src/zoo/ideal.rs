use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::sym::{sym_dim, QuadraticForm};

/// The degree-2 part of a cone's ideal: a canonical subspace of `Sym^2 V*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticIdeal {
    n: usize,
    space: Subspace,
    forms: Vec<QuadraticForm>,
}

impl QuadraticIdeal {
    pub fn from_space(n: usize, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != sym_dim(n, 2) {
            return Err(Error::AmbientMismatch { left: sym_dim(n, 2), right: space.ambient_dim() });
        }
        let forms = space.vectors().iter().map(|c| QuadraticForm::from_coords(n, c)).collect::<Result<_>>()?;
        Ok(QuadraticIdeal { n, space, forms })
    }

    /// Span of the given forms.
    pub fn from_forms(n: usize, forms: Vec<QuadraticForm>) -> Result<Self> {
        for f in &forms {
            if f.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, got: f.dim() });
            }
        }
        let space = Subspace::from_spanning(sym_dim(n, 2), forms.iter().map(|f| f.coords()).collect())?;
        Self::from_space(n, space)
    }

    /// All quadrics vanishing on the given points.
    pub fn from_samples(n: usize, points: &[Vec<Scalar>]) -> Result<Self> {
        let rows = points
            .iter()
            .map(|p| {
                if p.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, got: p.len() });
                }
                Ok(QuadraticForm::evaluation_row(p))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(sym_dim(n, 2), rows);
        Self::from_space(n, crate::linalg::kernel(&m))
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[QuadraticForm] {
        &self.forms
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, q: &QuadraticForm) -> Result<bool> {
        self.space.contains(&q.coords())
    }

    /// Errors with [`Error::OffCone`] unless every form vanishes at `v`.
    pub fn check_point(&self, v: &[Scalar]) -> Result<()> {
        for (index, f) in self.forms.iter().enumerate() {
            let value = f.value(v)?;
            if !value.is_zero() {
                return Err(Error::OffCone { index, value: value.to_string() });
            }
        }
        Ok(())
    }

    /// Pull-back along `E: W -> V`.
    pub fn restrict(&self, e: &Matrix) -> Result<QuadraticIdeal> {
        let forms = self.forms.iter().map(|f| f.restrict(e)).collect::<Result<Vec<_>>>()?;
        Self::from_forms(e.ncols(), forms)
    }
}
