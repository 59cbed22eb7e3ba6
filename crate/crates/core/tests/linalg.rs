use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use prolab::linalg::{self, Matrix, Scalar, Subspace, MERSENNE_61};

fn q(x: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(x))
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Rank by plain fraction elimination, written independently of the crate.
fn oracle_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn matrix(rows: usize, cols: usize, entries: Vec<i64>) -> Matrix {
    Matrix::from_i64(rows, cols, &entries)
}

/// `rows x cols` matrix of rank at most `r`, as a product of random factors.
fn low_rank(rows: usize, cols: usize, r: usize, seed: u64) -> Matrix {
    let mut g = prolab::rng::rng(seed, 7);
    let a = Matrix::from_rows(r, (0..rows).map(|_| prolab::rng::int_vector(&mut g, r, 4)).collect());
    let b = Matrix::from_rows(cols, (0..r).map(|_| prolab::rng::int_vector(&mut g, cols, 4)).collect());
    a.mul(&b).unwrap()
}

#[test]
fn sum_and_intersection_of_coordinate_lines() {
    let a = Subspace::from_spanning(3, vec![unit(3, 0)]).unwrap();
    let b = Subspace::from_spanning(3, vec![unit(3, 1)]).unwrap();
    assert_eq!(a.sum(&b).unwrap().dim(), 2);
    assert_eq!(a.intersect(&b).unwrap().dim(), 0);
}

#[test]
fn kernel_of_a_known_matrix() {
    let m = matrix(2, 3, vec![1, 2, 3, 2, 4, 6]);
    let k = linalg::kernel(&m);
    assert_eq!(k.dim(), 2);
    let want = Subspace::from_spanning(3, vec![vec![q(-2), q(1), q(0)], vec![q(-3), q(0), q(1)]]).unwrap();
    assert!(k.is_subspace_of(&want).unwrap() && want.is_subspace_of(&k).unwrap());
}

#[test]
fn multimodular_kernel_of_a_large_low_rank_matrix() {
    // 90 x 90 is well past the direct threshold.
    for (r, seed) in [(0, 1), (37, 2), (89, 3)] {
        let m = if r == 0 { Matrix::zeros(90, 90) } else { low_rank(90, 90, r, seed) };
        let want = oracle_rank(&m.to_rows());
        let k = linalg::kernel(&m);
        assert_eq!(k.dim(), 90 - want);
        for v in k.vectors() {
            assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
        assert_eq!(linalg::rank(&m), want);
        assert_eq!(linalg::rank_sparse(&m.to_sparse()), want);
    }
}

#[test]
fn kernel_with_fractional_entries() {
    let rows: Vec<Vec<Scalar>> = (0..70)
        .map(|i| (0..80).map(|j| Scalar::new(BigInt::from((i * 7 + j * 3) % 11 - 5), BigInt::from(1 + (i + j) % 4))).collect())
        .collect();
    let m = Matrix::from_rows(80, rows.clone());
    let k = linalg::kernel(&m);
    assert_eq!(k.dim(), 80 - oracle_rank(&rows));
    for v in k.vectors() {
        assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
    }
}

#[test]
fn inverse_round_trips() {
    let p = matrix(3, 3, vec![2, 1, 0, 1, 3, 1, 0, 1, 4]);
    let pinv = p.inverse().unwrap();
    assert_eq!(p.mul(&pinv).unwrap(), Matrix::identity(3));
    assert!(matrix(2, 2, vec![1, 2, 2, 4]).inverse().is_err());
}

#[test]
fn bad_prime_is_rejected() {
    let m = Matrix::from_rows(1, vec![vec![Scalar::new(BigInt::from(1), BigInt::from(3))]]);
    assert!(linalg::rank_mod_p(&m, 3).is_err());
    assert_eq!(linalg::rank_mod_p(&m, 5).unwrap(), 1);
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(-3i64..=3, r * c).prop_map(move |e| matrix(r, c, e)))
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..n + 1)
        .prop_map(move |vs| Subspace::from_spanning(n, vs.into_iter().map(|v| v.into_iter().map(q).collect()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in small_matrix()) {
        let k = linalg::kernel(&m);
        prop_assert_eq!(linalg::rank(&m) + k.dim(), m.ncols());
        prop_assert_eq!(linalg::rank(&m), oracle_rank(&m.to_rows()));
        prop_assert_eq!(linalg::rank(&m), linalg::rank(&m.transpose()));
        for v in k.vectors() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn modular_rank_agrees_for_a_large_prime(m in small_matrix()) {
        prop_assert_eq!(linalg::rank_mod_p(&m, MERSENNE_61).unwrap(), linalg::rank(&m));
        prop_assert_eq!(linalg::rank_mod_p_sparse(&m.to_sparse(), MERSENNE_61).unwrap(), linalg::rank(&m));
    }

    #[test]
    fn grassmann_formula(a in subspace(5), b in subspace(5)) {
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subspace_of(&a).unwrap() && i.is_subspace_of(&b).unwrap());
        prop_assert!(a.is_subspace_of(&s).unwrap());
        prop_assert_eq!(a.annihilator().dim() + a.dim(), 5);
        prop_assert!(a.is_orthogonal_to(&a.annihilator()));
    }

    #[test]
    fn coordinates_reconstruct(a in subspace(4), c in prop::collection::vec(-3i64..=3, 4)) {
        let basis = a.vectors();
        let mut v = vec![Scalar::zero(); 4];
        for (b, ci) in basis.iter().zip(&c) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += y * q(*ci);
            }
        }
        prop_assert!(a.contains(&v).unwrap());
        let coords = a.coordinates(&v).unwrap().unwrap();
        prop_assert_eq!(coords, c[..basis.len()].iter().map(|x| q(*x)).collect::<Vec<_>>());
    }
}
