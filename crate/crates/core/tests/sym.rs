use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use prolab::linalg::{dot, Matrix, Scalar};
use prolab::sym::{binomial, sym_dim, MultiIndex, QuadraticForm, SymMultiMap};

fn q(x: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(x))
}

fn qs(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|x| q(*x)).collect()
}

/// Every nondecreasing sequence of length `k` in `0..n`, by brute force.
fn brute_indices(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for prefix in brute_indices(n, k - 1) {
        let start = prefix.last().copied().unwrap_or(0);
        for i in start..n {
            let mut p = prefix.clone();
            p.push(i);
            out.push(p);
        }
    }
    out
}

#[test]
fn dimension_counts_match_enumeration() {
    for n in 1..6 {
        for k in 0..5 {
            assert_eq!(sym_dim(n, k), brute_indices(n, k).len(), "n={n} k={k}");
            assert_eq!(MultiIndex::all(n, k).count(), sym_dim(n, k));
        }
    }
    assert_eq!(binomial(10, 3), 120);
    assert_eq!(binomial(3, 5), 0);
}

#[test]
fn ranks_are_a_bijection_onto_an_interval() {
    for n in 1..5 {
        for k in 1..4 {
            let mut ranks: Vec<usize> = brute_indices(n, k).into_iter().map(|v| MultiIndex::new(v).rank()).collect();
            ranks.sort_unstable();
            assert_eq!(ranks, (0..sym_dim(n, k)).collect::<Vec<_>>());
        }
    }
    assert!(MultiIndex::unrank(sym_dim(3, 2), 3, 2).is_err());
}

#[test]
fn quadratic_form_from_polynomial_terms() {
    // x0 x2 - x1^2
    let f = QuadraticForm::from_terms(3, &[(0, 2, q(1)), (1, 1, q(-1))]).unwrap();
    let v = qs(&[2, 3, 5]);
    assert_eq!(f.value(&v).unwrap(), q(2 * 5 - 9));
    assert_eq!(f.polar(&v, &v).unwrap(), f.value(&v).unwrap());
    assert_eq!(dot(&QuadraticForm::evaluation_row(&v), &f.coords()), f.value(&v).unwrap());
    assert_eq!(QuadraticForm::from_coords(3, &f.coords()).unwrap(), f);
}

fn random_map(n: usize, d: usize, entries: &[i64]) -> SymMultiMap {
    let count = SymMultiMap::coeff_count(n, d);
    SymMultiMap::from_coeffs(n, d, entries.iter().cycle().take(count).map(|x| q(*x)).collect()).unwrap()
}

fn vecs(n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_round_trips(n in 1usize..6, k in 0usize..5, seed in 0usize..1000) {
        let total = sym_dim(n, k);
        let r = seed % total;
        let mu = MultiIndex::unrank(r, n, k).unwrap();
        prop_assert_eq!(mu.rank(), r);
        prop_assert_eq!(mu.len(), k);
        prop_assert!(mu.as_slice().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn evaluation_is_symmetric_and_multilinear(
        entries in prop::collection::vec(-4i64..=4, 1..40),
        args in vecs(3, 4),
        c in -3i64..=3,
    ) {
        let a = random_map(3, 3, &entries);
        let (u, v, w, x) = (qs(&args[0]), qs(&args[1]), qs(&args[2]), qs(&args[3]));
        let base = a.evaluate(&[&u, &v, &w]).unwrap();
        prop_assert_eq!(&a.evaluate(&[&w, &u, &v]).unwrap(), &base);
        prop_assert_eq!(&a.evaluate(&[&v, &w, &u]).unwrap(), &base);
        let ux: Vec<Scalar> = u.iter().zip(&x).map(|(s, t)| s + t * q(c)).collect();
        let lhs = a.evaluate(&[&ux, &v, &w]).unwrap();
        let xv = a.evaluate(&[&x, &v, &w]).unwrap();
        let rhs: Vec<Scalar> = base.iter().zip(&xv).map(|(s, t)| s + t * q(c)).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn slices_and_contractions_agree(entries in prop::collection::vec(-4i64..=4, 1..40), i in 0usize..3, j in 0usize..3) {
        let a = random_map(3, 3, &entries);
        let mut ei = vec![Scalar::zero(); 3];
        ei[i] = q(1);
        let mut ej = vec![Scalar::zero(); 3];
        ej[j] = q(1);
        let s = a.slice(&MultiIndex::new(vec![i, j])).unwrap();
        prop_assert_eq!(s, a.contract(&[&ei, &ej]).unwrap());
    }

    #[test]
    fn transform_intertwines(entries in prop::collection::vec(-4i64..=4, 1..20), args in vecs(3, 2)) {
        let a = random_map(3, 2, &entries);
        let p = Matrix::from_i64(3, 3, &[1, 1, 0, 0, 1, 2, 1, 0, 1]);
        let b = a.transform(&p).unwrap();
        let (u, v) = (qs(&args[0]), qs(&args[1]));
        let (pu, pv) = (p.mul_vec(&u).unwrap(), p.mul_vec(&v).unwrap());
        let lhs = b.evaluate(&[&pu, &pv]).unwrap();
        let rhs = p.mul_vec(&a.evaluate(&[&u, &v]).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivation_action(entries in prop::collection::vec(-3i64..=3, 9), x in prop::collection::vec(-3i64..=3, 9), v in prop::collection::vec(-3i64..=3, 3)) {
        let m = Matrix::from_i64(3, 3, &entries);
        let f = QuadraticForm::new(m.add(&m.transpose())).unwrap();
        let xm = Matrix::from_i64(3, 3, &x);
        let v = qs(&v);
        let xv = xm.mul_vec(&v).unwrap();
        let want = f.polar(&xv, &v).unwrap() * q(2);
        prop_assert_eq!(f.act(&xm).unwrap().value(&v).unwrap(), want);
    }
}
