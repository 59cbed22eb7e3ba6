//! Field-generic elimination kernels.
//!
//! Two routes compute the same canonical results:
//!
//! * dense Gauss-Jordan with pivot = leftmost nonzero column, then smallest
//!   row index; the row updates for one pivot run in parallel;
//! * sparse elimination on row lists with a Markowitz-style pivot choice
//!   (shortest remaining row, then its least-populated column), followed by
//!   back substitution.
//!
//! Kernels from either route are re-canonicalised into RREF, so both produce
//! bit-identical output.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::field::Field;
use crate::par;

pub type SparseRow<E> = Vec<(usize, E)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    Dense,
    Sparse,
}

pub const SPARSE_MIN_ENTRIES: usize = 100_000;
pub const SPARSE_MAX_DENSITY: f64 = 0.10;

pub fn choose_path(nrows: usize, ncols: usize, nnz: usize) -> Path {
    let entries = nrows.saturating_mul(ncols);
    if entries > SPARSE_MIN_ENTRIES && (nnz as f64) < SPARSE_MAX_DENSITY * entries as f64 {
        Path::Sparse
    } else {
        Path::Dense
    }
}

/// In-place RREF. Returns the pivot columns; `rows` is truncated to the rank.
pub fn rref_dense<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(&rows[r][c]);
        for x in rows[r][c..].iter_mut() {
            if !field.is_zero(x) {
                *x = field.mul(x, &inv);
            }
        }
        let pivot_nz: Vec<(usize, F::Elem)> = (c..ncols)
            .filter(|&j| !field.is_zero(&rows[r][j]))
            .map(|j| (j, rows[r][j].clone()))
            .collect();
        let pr = r;
        par::for_each_mut(rows, 16, |i, row| {
            if i == pr || field.is_zero(&row[c]) {
                return;
            }
            let factor = row[c].clone();
            for (j, p) in &pivot_nz {
                row[*j] = field.sub_mul(&row[*j], &factor, p);
            }
        });
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Fully reduced echelon system: row `t` has a unit entry at `pivots[t]` and
/// no entry in any other pivot column. Pivots are not sorted.
pub struct Reduced<E> {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseRow<E>>,
}

impl<E: Clone> Reduced<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn axpy_sparse<F: Field>(
    field: &F,
    target: &[(usize, F::Elem)],
    factor: &F::Elem,
    pivot: &[(usize, F::Elem)],
    mut on_fill: impl FnMut(usize),
) -> SparseRow<F::Elem> {
    // target - factor * pivot
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < target.len() || b < pivot.len() {
        let ca = target.get(a).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = pivot.get(b).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(target[a].clone());
            a += 1;
        } else if cb < ca {
            let v = field.sub_mul(&field.zero(), factor, &pivot[b].1);
            if !field.is_zero(&v) {
                on_fill(cb);
                out.push((cb, v));
            }
            b += 1;
        } else {
            let v = field.sub_mul(&target[a].1, factor, &pivot[b].1);
            if !field.is_zero(&v) {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

/// Sparse elimination with Markowitz-style pivoting.
pub fn reduce_sparse<F: Field>(field: &F, rows: Vec<SparseRow<F::Elem>>, ncols: usize) -> Reduced<F::Elem> {
    let mut rows: Vec<Option<SparseRow<F::Elem>>> = rows
        .into_iter()
        .map(|r| {
            let r: SparseRow<F::Elem> = r.into_iter().filter(|(_, x)| !field.is_zero(x)).collect();
            Some(r)
        })
        .collect();
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut heap = BinaryHeap::new();
    for (i, r) in rows.iter().enumerate() {
        let r = r.as_ref().unwrap();
        for (c, _) in r {
            col_rows[*c].push(i as u32);
        }
        if !r.is_empty() {
            heap.push(Reverse((r.len(), i)));
        }
    }
    let mut pivot_cols = Vec::new();
    let mut pivot_rows: Vec<SparseRow<F::Elem>> = Vec::new();

    while let Some(Reverse((len, i))) = heap.pop() {
        let Some(row) = rows[i].as_ref() else { continue };
        if row.len() != len || row.is_empty() {
            continue;
        }
        let (pos, &(c, _)) = row
            .iter()
            .enumerate()
            .min_by_key(|(_, (col, _))| (col_rows[*col].len(), *col))
            .unwrap();
        let inv = field.inv(&row[pos].1);
        let pivot: SparseRow<F::Elem> = row.iter().map(|(j, x)| (*j, field.mul(x, &inv))).collect();
        rows[i] = None;

        let mut touching = std::mem::take(&mut col_rows[c]);
        touching.sort_unstable();
        touching.dedup();
        // Row updates for this pivot are independent of one another.
        let candidates: Vec<usize> = touching
            .iter()
            .map(|&r| r as usize)
            .filter(|&r| rows[r].as_ref().is_some_and(|row| row.binary_search_by_key(&c, |e| e.0).is_ok()))
            .collect();
        let updated: Vec<(usize, SparseRow<F::Elem>, Vec<usize>)> = par::map(&candidates, |&r| {
            let target = rows[r].as_ref().unwrap();
            let k = target.binary_search_by_key(&c, |e| e.0).unwrap();
            let factor = target[k].1.clone();
            let mut fills = Vec::new();
            let new = axpy_sparse(field, target, &factor, &pivot, |col| fills.push(col));
            (r, new, fills)
        });
        for (r, new, fills) in updated {
            for col in fills {
                col_rows[col].push(r as u32);
            }
            if new.is_empty() {
                rows[r] = None;
            } else {
                heap.push(Reverse((new.len(), r)));
                rows[r] = Some(new);
            }
        }
        pivot_cols.push(c);
        pivot_rows.push(pivot);
    }

    back_substitute(field, ncols, pivot_cols, pivot_rows)
}

fn back_substitute<F: Field>(
    field: &F,
    ncols: usize,
    pivots: Vec<usize>,
    mut rows: Vec<SparseRow<F::Elem>>,
) -> Reduced<F::Elem> {
    let mut pivot_of = vec![usize::MAX; ncols];
    for (t, &c) in pivots.iter().enumerate() {
        pivot_of[c] = t;
    }
    let mut scratch: Vec<Option<F::Elem>> = vec![None; ncols];
    let mut touched: Vec<usize> = Vec::new();
    for t in (0..rows.len()).rev() {
        let later: Vec<(usize, F::Elem)> = rows[t]
            .iter()
            .filter(|(c, _)| pivot_of[*c] != usize::MAX && pivot_of[*c] != t)
            .cloned()
            .collect();
        if later.is_empty() {
            continue;
        }
        for (c, x) in rows[t].iter() {
            if pivot_of[*c] == usize::MAX || pivot_of[*c] == t {
                scratch[*c] = Some(x.clone());
                touched.push(*c);
            }
        }
        for (c, factor) in later {
            let s = pivot_of[c];
            for (j, y) in rows[s].iter() {
                if *j == c {
                    continue;
                }
                let cur = scratch[*j].take().unwrap_or_else(|| {
                    touched.push(*j);
                    field.zero()
                });
                scratch[*j] = Some(field.sub_mul(&cur, &factor, y));
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut new = Vec::with_capacity(touched.len());
        for &j in &touched {
            if let Some(x) = scratch[j].take() {
                if !field.is_zero(&x) {
                    new.push((j, x));
                }
            }
        }
        touched.clear();
        rows[t] = new;
    }
    Reduced { ncols, pivots, rows }
}

/// Dense route expressed as a [`Reduced`] system.
pub fn reduce_dense<F: Field>(field: &F, rows: Vec<SparseRow<F::Elem>>, ncols: usize) -> Reduced<F::Elem> {
    let mut dense: Vec<Vec<F::Elem>> = rows
        .into_iter()
        .map(|r| {
            let mut d = vec![field.zero(); ncols];
            for (j, x) in r {
                d[j] = x;
            }
            d
        })
        .collect();
    let pivots = rref_dense(field, &mut dense, ncols);
    let rows = dense
        .into_iter()
        .map(|d| d.into_iter().enumerate().filter(|(_, x)| !field.is_zero(x)).collect())
        .collect();
    Reduced { ncols, pivots, rows }
}

pub fn reduce<F: Field>(field: &F, rows: Vec<SparseRow<F::Elem>>, ncols: usize, path: Path) -> Reduced<F::Elem> {
    match path {
        Path::Dense => reduce_dense(field, rows, ncols),
        Path::Sparse => reduce_sparse(field, rows, ncols),
    }
}

/// Canonical RREF basis of the kernel of a reduced system.
pub fn kernel_of_reduced<F: Field>(field: &F, red: &Reduced<F::Elem>) -> Vec<Vec<F::Elem>> {
    let n = red.ncols;
    let mut is_pivot = vec![false; n];
    for &c in &red.pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut slot = vec![usize::MAX; n];
    for (k, &f) in free.iter().enumerate() {
        slot[f] = k;
    }
    let mut basis: Vec<Vec<F::Elem>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); n];
            v[f] = field.one();
            v
        })
        .collect();
    for (t, row) in red.rows.iter().enumerate() {
        let pc = red.pivots[t];
        for (j, x) in row {
            if *j != pc {
                basis[slot[*j]][pc] = field.neg(x);
            }
        }
    }
    rref_dense(field, &mut basis, n);
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, MERSENNE_61};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_sparse(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64, p: u64) -> Vec<SparseRow<u64>> {
        (0..rows)
            .map(|_| {
                let mut row = Vec::new();
                for j in 0..cols {
                    if rng.gen_bool(density) {
                        row.push((j, rng.gen_range(1..p.min(7))));
                    }
                }
                row
            })
            .collect()
    }

    #[test]
    fn dense_and_sparse_agree_mod_p() {
        let f = PrimeField::new(MERSENNE_61);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..30 {
            let rows = rng.gen_range(1..60);
            let cols = rng.gen_range(1..60);
            let m = random_sparse(&mut rng, rows, cols, 0.08 + 0.01 * (trial % 5) as f64, MERSENNE_61);
            let d = reduce_dense(&f, m.clone(), cols);
            let s = reduce_sparse(&f, m, cols);
            assert_eq!(d.rank(), s.rank());
            assert_eq!(kernel_of_reduced(&f, &d), kernel_of_reduced(&f, &s));
        }
    }
}
