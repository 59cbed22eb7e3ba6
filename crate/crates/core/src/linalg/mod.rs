//! Exact linear algebra over `Q` and `F_p`.
//!
//! Kernels are returned in canonical RREF. Small systems are reduced directly
//! over the rationals; larger ones go through [`lift`], which computes modulo
//! several primes and certifies the lifted answer exactly.

pub mod elim;
pub mod field;
pub mod lift;
mod matrix;
mod subspace;

use num_traits::Zero;

pub use field::{is_prime, random_prime_62, Field, PrimeField, Rationals, MERSENNE_61};
pub use matrix::{dot, Matrix, SparseMatrix};
pub use subspace::Subspace;

use crate::error::Result;
use elim::SparseRow;

pub type Scalar = num_rational::BigRational;

/// Systems with at most this many dense entries are reduced over `Q` directly.
pub const DIRECT_LIMIT: usize = 4096;

/// Systems this narrow or this short are reduced over `Q` directly
/// whatever their other dimension.
pub const DIRECT_SIDE: usize = 32;

fn is_direct(nrows: usize, ncols: usize) -> bool {
    nrows * ncols <= DIRECT_LIMIT || ncols <= DIRECT_SIDE || nrows <= DIRECT_SIDE
}

fn direct_kernel(rows: Vec<SparseRow<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let red = elim::reduce_dense(&Rationals, rows, ncols);
    elim::kernel_of_reduced(&Rationals, &red)
}

pub(crate) fn kernel_rows(rows: Vec<SparseRow<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    if rows.is_empty() {
        return elim::kernel_of_reduced(&Rationals, &elim::Reduced { ncols, pivots: vec![], rows: vec![] });
    }
    if is_direct(rows.len(), ncols) {
        direct_kernel(rows, ncols)
    } else {
        lift::exact_kernel(&rows, ncols)
    }
}

/// Canonical RREF basis of the span of `rows`.
pub(crate) fn row_reduce(rows: Vec<SparseRow<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    if rows.is_empty() {
        return Vec::new();
    }
    if is_direct(rows.len(), ncols) {
        let red = elim::reduce_dense(&Rationals, rows, ncols);
        return red
            .rows
            .into_iter()
            .map(|r| {
                let mut d = vec![Scalar::zero(); ncols];
                for (j, x) in r {
                    d[j] = x;
                }
                d
            })
            .collect();
    }
    // The row space is the annihilator of the kernel.
    let ker = kernel_rows(rows, ncols);
    kernel_rows(to_sparse_rows(ker), ncols)
}

pub(crate) fn to_sparse_rows(rows: Vec<Vec<Scalar>>) -> Vec<SparseRow<Scalar>> {
    rows.into_iter()
        .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect()
}

/// `{v : M v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::from_rref(m.ncols(), kernel_rows(to_sparse_rows(m.to_rows()), m.ncols()))
}

pub fn kernel_sparse(m: &SparseMatrix) -> Subspace {
    Subspace::from_rref(m.ncols(), kernel_rows(m.sparse_rows(), m.ncols()))
}

pub fn rank(m: &Matrix) -> usize {
    m.ncols() - kernel(m).dim()
}

pub fn rank_sparse(m: &SparseMatrix) -> usize {
    m.ncols() - kernel_sparse(m).dim()
}

fn reduce_mod(m: &SparseMatrix, p: u64) -> Result<Vec<SparseRow<u64>>> {
    let field = PrimeField::new(p);
    let mut rows = vec![Vec::new(); m.nrows()];
    for (i, j, x) in m.entries() {
        let r = field.reduce(x)?;
        if r != 0 {
            rows[*i].push((*j, r));
        }
    }
    Ok(rows)
}

/// Rank of `M` reduced modulo the prime `p`.
pub fn rank_mod_p(m: &Matrix, p: u64) -> Result<usize> {
    rank_mod_p_sparse(&m.to_sparse(), p)
}

pub fn rank_mod_p_sparse(m: &SparseMatrix, p: u64) -> Result<usize> {
    let rows = reduce_mod(m, p)?;
    Ok(lift::rank_mod(&PrimeField::new(p), rows, m.ncols()))
}
