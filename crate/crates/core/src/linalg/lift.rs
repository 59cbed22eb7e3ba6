//! Exact kernels of large rational systems by multimodular lifting.
//!
//! Rows are scaled to integers and the kernel is computed in RREF modulo a
//! sequence of 62-bit primes. Residues from primes sharing the same kernel
//! shape are combined by CRT and lifted by rational reconstruction. A lifted
//! basis is accepted only after it is checked to satisfy every row exactly;
//! since the rational nullity never exceeds the nullity modulo any prime, a
//! verified lift of the smallest modular kernel is the rational kernel.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::elim::{self, Path, SparseRow};
use super::field::{inv_mod, random_prime_62, rational_reconstruct, PrimeField};
use super::Scalar;
use crate::par;

const PRIME_SEED: u64 = 0x5e_ed0f_1a7e;
const MAX_PRIMES: usize = 400;

pub fn integer_rows(rows: &[SparseRow<Scalar>]) -> Vec<Vec<(usize, BigInt)>> {
    par::map(rows, |row| {
        let lcm = row.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
        row.iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (*j, x.numer() * (&lcm / x.denom())))
            .collect()
    })
}

pub fn reduce_rows(field: &PrimeField, rows: &[Vec<(usize, BigInt)>]) -> Vec<SparseRow<u64>> {
    par::map(rows, |row| {
        row.iter()
            .filter_map(|(j, x)| {
                let r = field.reduce_int(x);
                (r != 0).then_some((*j, r))
            })
            .collect()
    })
}

fn kernel_mod(field: &PrimeField, rows: Vec<SparseRow<u64>>, ncols: usize, path: Path) -> (Vec<usize>, Vec<Vec<u64>>) {
    let red = elim::reduce(field, rows, ncols, path);
    let ker = elim::kernel_of_reduced(field, &red);
    let pivots = ker
        .iter()
        .map(|r| r.iter().position(|x| *x != 0).expect("kernel rows are nonzero"))
        .collect();
    (pivots, ker)
}

fn verify(rows: &[Vec<(usize, BigInt)>], basis: &[Vec<Scalar>]) -> bool {
    let ok = par::map(basis, |v| {
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let w: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        rows.iter().all(|row| {
            let mut s = BigInt::zero();
            for (j, a) in row {
                if !w[*j].is_zero() {
                    s += a * &w[*j];
                }
            }
            s.is_zero()
        })
    });
    ok.into_iter().all(|b| b)
}

/// Canonical RREF basis of `{v : row · v = 0 for all rows}`.
pub fn exact_kernel(rows: &[SparseRow<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let int_rows = integer_rows(rows);
    let nnz: usize = int_rows.iter().map(|r| r.len()).sum();
    let path = elim::choose_path(int_rows.len(), ncols, nnz);
    let mut rng = crate::rng::rng(PRIME_SEED, 0);

    let mut best: Option<(Vec<usize>, Vec<Vec<BigInt>>, BigInt)> = None;
    let mut previous: Option<Vec<Vec<Scalar>>> = None;
    let (mut support, mut mismatches) = (0usize, 0usize);
    for _ in 0..MAX_PRIMES {
        let p = random_prime_62(&mut rng);
        let field = PrimeField::new(p);
        let (pivots, ker) = kernel_mod(&field, reduce_rows(&field, &int_rows), ncols, path);
        if ker.is_empty() {
            return Vec::new();
        }
        let pb = BigInt::from(p);
        best = Some(match best.take() {
            None => {
                support = 1;
                start(pivots, ker, pb)
            }
            Some(b) if pivots.len() < b.0.len() => {
                previous = None;
                support = 1;
                start(pivots, ker, pb)
            }
            Some(b) if pivots == b.0 => {
                support += 1;
                combine(b.0, b.1, b.2, &ker, p)
            }
            Some(b) if pivots.len() == b.0.len() && mismatches >= support => {
                drop(b);
                // The first primes were unlucky for the kernel shape.
                previous = None;
                mismatches = 0;
                support = 1;
                start(pivots, ker, pb)
            }
            Some(b) => {
                if pivots.len() == b.0.len() {
                    mismatches += 1;
                }
                best = Some(b);
                continue;
            }
        });
        let (_, res, m) = best.as_ref().unwrap();
        let lifted: Option<Vec<Vec<Scalar>>> = par::map(res, |row| {
            row.iter().map(|a| rational_reconstruct(a, m)).collect::<Option<Vec<_>>>()
        })
        .into_iter()
        .collect();
        match lifted {
            Some(cand) if previous.as_ref() == Some(&cand) => {
                if verify(&int_rows, &cand) {
                    return cand;
                }
                previous = Some(cand);
            }
            other => previous = other,
        }
    }
    panic!("multimodular kernel did not stabilise after {MAX_PRIMES} primes");
}

fn start(pivots: Vec<usize>, ker: Vec<Vec<u64>>, p: BigInt) -> (Vec<usize>, Vec<Vec<BigInt>>, BigInt) {
    let res = ker.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    (pivots, res, p)
}

fn combine(
    pivots: Vec<usize>,
    res: Vec<Vec<BigInt>>,
    m: BigInt,
    ker: &[Vec<u64>],
    p: u64,
) -> (Vec<usize>, Vec<Vec<BigInt>>, BigInt) {
    let field = PrimeField::new(p);
    let minv = inv_mod(field.reduce_int(&m), p);
    let res = par::map_range(res.len(), |t| {
        res[t]
            .iter()
            .zip(&ker[t])
            .map(|(a, &b)| {
                let ar = field.reduce_int(a);
                let diff = if b >= ar { b - ar } else { b + p - ar };
                let k = super::field::mul_mod(diff, minv, p);
                if k == 0 {
                    a.clone()
                } else {
                    a + &m * BigInt::from(k)
                }
            })
            .collect()
    });
    (pivots, res, m * BigInt::from(p))
}

/// Rank of the system modulo `p`.
pub fn rank_mod(field: &PrimeField, rows: Vec<SparseRow<u64>>, ncols: usize) -> usize {
    let nnz: usize = rows.iter().map(|r| r.len()).sum();
    let path = elim::choose_path(rows.len(), ncols, nnz);
    elim::reduce(field, rows, ncols, path).rank()
}
