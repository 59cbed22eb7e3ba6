//! Standard matrix Lie algebras as subspaces of `End(V)` in row-major
//! coordinates (`X[i][j]` at `i * n + j`).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};

pub fn gl(n: usize) -> Subspace {
    Subspace::full(n * n)
}

/// Skew-symmetric matrices (the form is the identity).
pub fn so(n: usize) -> Subspace {
    let mut vs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![Scalar::zero(); n * n];
            v[i * n + j] = Scalar::one();
            v[j * n + i] = -Scalar::one();
            vs.push(v);
        }
    }
    Subspace::from_spanning(n * n, vs).expect("vectors have length n^2")
}

pub fn scalars(n: usize) -> Subspace {
    Subspace::from_spanning(n * n, vec![Matrix::identity(n).to_vec()]).expect("length n^2")
}

/// `so(n)` plus the scalars.
pub fn co(n: usize) -> Subspace {
    so(n).sum(&scalars(n)).expect("same ambient")
}

/// Parses `gl(n)`, `so(n)` or `co(n)`.
pub fn by_name(name: &str) -> Result<Subspace> {
    let bad = || Error::UnknownName(name.to_string());
    let (head, rest) = name.split_once('(').ok_or_else(bad)?;
    let n: usize = rest.strip_suffix(')').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(Error::InvalidParameters { name: name.into(), reason: "n must be at least 1".into() });
    }
    match head.trim() {
        "gl" => Ok(gl(n)),
        "so" => Ok(so(n)),
        "co" => Ok(co(n)),
        _ => Err(bad()),
    }
}

/// Side length `n` of an algebra inside `End(Q^n)`.
pub fn side(g: &Subspace) -> Result<usize> {
    let m = g.ambient_dim();
    let n = (m as f64).sqrt().round() as usize;
    if n * n != m {
        return Err(Error::InvalidParameters { name: "algebra".into(), reason: format!("ambient {m} is not a square") });
    }
    Ok(n)
}

/// Conjugation `X -> P X P^-1` applied to a subspace of `End(V)`.
pub fn conjugate(g: &Subspace, p: &Matrix) -> Result<Subspace> {
    let n = side(g)?;
    let pinv = p.inverse()?;
    let vs = g
        .vectors()
        .into_iter()
        .map(|v| Ok(p.mul(&Matrix::from_vec(n, n, v))?.mul(&pinv)?.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_spanning(n * n, vs)
}

/// Whether the span of `g` is closed under the commutator.
pub fn is_lie_subalgebra(g: &Subspace) -> Result<bool> {
    let n = side(g)?;
    let mats: Vec<Matrix> = g.vectors().into_iter().map(|v| Matrix::from_vec(n, n, v)).collect();
    for (a, x) in mats.iter().enumerate() {
        for y in &mats[a + 1..] {
            if !g.contains(&x.commutator(y)?.to_vec())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
