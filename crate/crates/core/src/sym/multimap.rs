use num_traits::Zero;

use super::{sym_dim, MultiIndex};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// A symmetric multilinear map `V^d -> V`, `d = degree`.
///
/// Stores the basis values `A(e_mu1, ..., e_mud)` for every sorted `mu`;
/// the output coordinate `i` of monomial `mu` sits at `rank(mu) * n + i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymMultiMap {
    n: usize,
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl SymMultiMap {
    pub fn zero(n: usize, degree: usize) -> Self {
        SymMultiMap { n, degree, coeffs: vec![Scalar::zero(); sym_dim(n, degree) * n] }
    }

    pub fn coeff_count(n: usize, degree: usize) -> usize {
        sym_dim(n, degree) * n
    }

    pub fn from_coeffs(n: usize, degree: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        let expected = Self::coeff_count(n, degree);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: coeffs.len() });
        }
        Ok(SymMultiMap { n, degree, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Position of coefficient `(mu, i)` in the flat coefficient vector.
    pub fn index(n: usize, mu: &MultiIndex, i: usize) -> usize {
        mu.rank() * n + i
    }

    pub fn value(&self, mu: &MultiIndex) -> &[Scalar] {
        let r = mu.rank();
        &self.coeffs[r * self.n..(r + 1) * self.n]
    }

    pub fn set(&mut self, mu: &MultiIndex, i: usize, x: Scalar) {
        assert_eq!(mu.len(), self.degree, "multi-index length must equal the degree");
        self.coeffs[Self::index(self.n, mu, i)] = x;
    }

    pub fn add(&self, other: &SymMultiMap) -> Result<SymMultiMap> {
        if self.n != other.n || self.degree != other.degree {
            return Err(Error::DimensionMismatch { expected: self.coeffs.len(), got: other.coeffs.len() });
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(SymMultiMap { n: self.n, degree: self.degree, coeffs })
    }

    pub fn scale(&self, c: &Scalar) -> SymMultiMap {
        SymMultiMap { n: self.n, degree: self.degree, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `A(v_1, ..., v_d)` by multilinear expansion over the supports.
    pub fn evaluate(&self, args: &[&[Scalar]]) -> Result<Vec<Scalar>> {
        if args.len() != self.degree {
            return Err(Error::DimensionMismatch { expected: self.degree, got: args.len() });
        }
        for a in args {
            if a.len() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, got: a.len() });
            }
        }
        let supports: Vec<Vec<usize>> =
            args.iter().map(|a| (0..self.n).filter(|&j| !a[j].is_zero()).collect()).collect();
        let mut out = vec![Scalar::zero(); self.n];
        let mut idx = Vec::with_capacity(self.degree);
        self.expand(args, &supports, &mut idx, Scalar::from_integer(1.into()), &mut out);
        Ok(out)
    }

    fn expand(
        &self,
        args: &[&[Scalar]],
        supports: &[Vec<usize>],
        idx: &mut Vec<usize>,
        weight: Scalar,
        out: &mut [Scalar],
    ) {
        let t = idx.len();
        if t == self.degree {
            let mu = MultiIndex::new(idx.clone());
            for (o, c) in out.iter_mut().zip(self.value(&mu)) {
                if !c.is_zero() {
                    *o += &weight * c;
                }
            }
            return;
        }
        for &j in &supports[t] {
            idx.push(j);
            self.expand(args, supports, idx, &weight * &args[t][j], out);
            idx.pop();
        }
    }

    /// The endomorphism `v -> A(e_mu1, ..., e_muk, v)`.
    pub fn slice(&self, mu: &MultiIndex) -> Result<Matrix> {
        if mu.len() + 1 != self.degree {
            return Err(Error::DimensionMismatch { expected: self.degree - 1, got: mu.len() });
        }
        let mut m = Matrix::zeros(self.n, self.n);
        for j in 0..self.n {
            let col = self.value(&mu.with(j));
            for i in 0..self.n {
                m[(i, j)] = col[i].clone();
            }
        }
        Ok(m)
    }

    /// `v -> A(u_1, ..., u_k, v)` for arbitrary vectors `u`.
    pub fn contract(&self, us: &[&[Scalar]]) -> Result<Matrix> {
        if us.len() + 1 != self.degree {
            return Err(Error::DimensionMismatch { expected: self.degree - 1, got: us.len() });
        }
        let mut m = Matrix::zeros(self.n, self.n);
        let mut e = vec![Scalar::zero(); self.n];
        for j in 0..self.n {
            e[j] = Scalar::from_integer(1.into());
            let mut args = us.to_vec();
            args.push(&e);
            let col = self.evaluate(&args)?;
            for i in 0..self.n {
                m[(i, j)] = col[i].clone();
            }
            e[j] = Scalar::zero();
        }
        Ok(m)
    }

    /// `(P.A)(v_1, ...) = P A(P^-1 v_1, ..., P^-1 v_d)`.
    pub fn transform(&self, p: &Matrix) -> Result<SymMultiMap> {
        let pinv = p.inverse()?;
        self.transform_with(p, &pinv)
    }

    pub(crate) fn transform_with(&self, p: &Matrix, pinv: &Matrix) -> Result<SymMultiMap> {
        if p.nrows() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: p.nrows() });
        }
        let cols: Vec<Vec<Scalar>> = (0..self.n).map(|j| pinv.column(j)).collect();
        let mut out = SymMultiMap::zero(self.n, self.degree);
        for (r, nu) in MultiIndex::all(self.n, self.degree).enumerate() {
            let args: Vec<&[Scalar]> = nu.as_slice().iter().map(|&j| cols[j].as_slice()).collect();
            let v = p.mul_vec(&self.evaluate(&args)?)?;
            out.coeffs[r * self.n..(r + 1) * self.n].clone_from_slice(&v);
        }
        Ok(out)
    }
}
