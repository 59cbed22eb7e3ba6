use prolab::linalg::{Matrix, Scalar, Subspace};
use prolab::prolong::{self, algebra, quotient_projector, vanishing_order, Arithmetic, ProlongOptions, Strategy, VanishingOrder};
use prolab::rng;
use prolab::sym::{MultiIndex, SymMultiMap};

fn exact() -> ProlongOptions {
    ProlongOptions::exact()
}

#[test]
fn gl_prolongation_is_everything() {
    for n in 1..=4 {
        for k in 1..=2 {
            let r = prolong::prolong(&algebra::gl(n), k, &exact()).unwrap();
            assert_eq!(r.dim, prolong::gl_prolongation_dim(n, k), "gl({n})^({k})");
            assert_eq!(r.constraint_shape.0, 0);
        }
    }
    assert_eq!(prolong::prolong(&algebra::gl(2), 1, &exact()).unwrap().dim, 6);
}

#[test]
fn quotient_projector_cuts_out_the_algebra() {
    assert_eq!(quotient_projector(&algebra::gl(3)).nrows(), 0);
    let zero = Subspace::zero(9);
    assert_eq!(quotient_projector(&zero), Matrix::identity(9));
    let so3 = algebra::so(3);
    let q = quotient_projector(&so3);
    assert_eq!(q.nrows(), 6);
    assert_eq!(prolab::linalg::kernel(&q), so3);
}

#[test]
fn conformal_algebra_of_a_conic() {
    let r = prolong::prolong(&algebra::co(3), 1, &exact()).unwrap();
    assert_eq!(r.dim, 3);
    for a in &r.basis {
        assert!(prolong::slices_in(&algebra::co(3), a).unwrap());
    }
}

/// Brute-force oracle: dense kernel of the membership conditions written out
/// for every (mu, j) pair separately, without the sparse relabelling.
fn brute_force_dim(g: &Subspace, n: usize) -> usize {
    let unknowns = SymMultiMap::coeff_count(n, 2);
    let ann = g.annihilator();
    let mut rows = Vec::new();
    for mu in 0..n {
        for a in ann.vectors() {
            let mut row = vec![Scalar::from_integer(0.into()); unknowns];
            for i in 0..n {
                for j in 0..n {
                    let idx = MultiIndex::new(vec![mu, j]).rank() * n + i;
                    row[idx] += &a[i * n + j];
                }
            }
            rows.push(row);
        }
    }
    let m = Matrix::from_rows(unknowns, rows);
    unknowns - prolab::linalg::rank(&m)
}

#[test]
fn skew_algebra_has_no_prolongation() {
    let so3 = algebra::so(3);
    assert_eq!(brute_force_dim(&so3, 3), 0);
    assert_eq!(prolong::prolong(&so3, 1, &exact()).unwrap().dim, 0);
    assert_eq!(brute_force_dim(&algebra::co(3), 3), 3);
}

#[test]
fn vanishing_orders() {
    assert_eq!(vanishing_order(&algebra::so(3), 3, &exact()).unwrap(), VanishingOrder::At(1));
    for n in 3..=5 {
        assert_eq!(vanishing_order(&algebra::co(n), 3, &exact()).unwrap(), VanishingOrder::At(2));
    }
    let gl2 = vanishing_order(&algebra::gl(2), 3, &exact()).unwrap();
    assert_eq!(gl2, VanishingOrder::AtLeast(3));
    assert_eq!(gl2.to_string(), "≥ 3");
}

#[test]
fn tower_and_direct_agree() {
    for g in [algebra::co(3), algebra::co(4), algebra::gl(2), algebra::so(4)] {
        for k in 1..=2 {
            let d = prolong::prolong(&g, k, &exact()).unwrap();
            let t = prolong::prolong(&g, k, &exact().with_strategy(Strategy::Tower)).unwrap();
            assert_eq!(d.space, t.space);
            assert_eq!(d.basis, t.basis);
        }
    }
}

#[test]
fn mod_p_matches_exact() {
    for g in [algebra::co(4), algebra::gl(3), algebra::so(5)] {
        for k in 1..=2 {
            let e = prolong::prolong(&g, k, &exact()).unwrap();
            for seed in [1, 2] {
                let m = prolong::prolong(&g, k, &ProlongOptions::random_prime(seed)).unwrap();
                assert!(matches!(m.field_used, Arithmetic::ModP(_)));
                assert_eq!(m.dim, e.dim);
                assert!(m.basis.is_empty());
            }
        }
    }
}

#[test]
fn unknown_cap_is_enforced() {
    let opts = ProlongOptions { unknown_cap: 10, ..ProlongOptions::exact() };
    assert!(matches!(
        prolong::prolong(&algebra::gl(3), 1, &opts),
        Err(prolab::Error::TooManyUnknowns { unknowns: 18, cap: 10 })
    ));
}

fn random_invertible(n: usize, seed: u64) -> Matrix {
    let mut r = rng::rng(seed, 77);
    loop {
        let m = Matrix::from_rows(n, (0..n).map(|_| rng::int_vector(&mut r, n, 3)).collect());
        if m.inverse().is_ok() {
            return m;
        }
    }
}

#[test]
fn scalar_transform_is_homogeneous() {
    let r = prolong::prolong(&algebra::co(3), 1, &exact()).unwrap();
    let c = Scalar::new(3.into(), 2.into());
    let p = Matrix::scalar(3, c.clone());
    for a in &r.basis {
        assert_eq!(a.transform(&p).unwrap(), a.scale(&c.recip()));
        assert_eq!(&a.transform(&Matrix::identity(3)).unwrap(), a);
    }
}

#[test]
fn prolongation_is_equivariant() {
    for (g, n) in [(algebra::co(3), 3), (algebra::so(3), 3), (algebra::co(4), 4)] {
        let base = prolong::prolong(&g, 1, &exact()).unwrap();
        for seed in 0..10 {
            let p = random_invertible(n, seed);
            let h = algebra::conjugate(&g, &p).unwrap();
            let direct = prolong::prolong(&h, 1, &exact()).unwrap();
            assert_eq!(direct.space.unwrap(), prolong::transform_result(&base, &p).unwrap(), "seed {seed}");
        }
    }
}
