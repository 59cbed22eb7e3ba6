use num_bigint::BigInt;
use num_traits::{One, Zero};

use prolab::linalg::{Matrix, Scalar, Subspace};
use prolab::probes::{
    self, cone_aut, contains_identity, kill_prolongation, killer, lambda_of, stabilizer, tangent_space, terracini_secant_dim,
    verify_projection_formula, vmrt_dimension, ProjectionType,
};
use prolab::prolong::{self, algebra, ProlongOptions};
use prolab::sym::SymMultiMap;
use prolab::zoo::{self, pair_index};

fn q(x: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(x))
}

fn same(a: &Subspace, b: &Subspace) -> bool {
    a.is_subspace_of(b).unwrap() && b.is_subspace_of(a).unwrap()
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut v = vec![Scalar::zero(); n * n];
    v[i * n + j] = Scalar::one();
    Matrix::from_vec(n, n, v)
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, rb) = (a.nrows(), b.nrows());
    let n = ra * rb;
    let mut v = vec![Scalar::zero(); n * n];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    v[(i * rb + k) * n + j * rb + l] = a.row(i)[j].clone() * b.row(k)[l].clone();
                }
            }
        }
    }
    Matrix::from_vec(n, n, v)
}

fn line(v: Vec<Scalar>) -> Subspace {
    let n = v.len();
    Subspace::from_spanning(n, vec![v]).unwrap()
}

#[test]
fn automorphisms_of_the_quadric_surface_are_gl2_plus_gl2() {
    let v = zoo::segre(2, 2).unwrap();
    let i2 = Matrix::identity(2);
    let mut oracle = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            oracle.push(kron(&elementary(2, i, j), &i2).to_vec());
            oracle.push(kron(&i2, &elementary(2, i, j)).to_vec());
        }
    }
    let oracle = Subspace::from_spanning(16, oracle).unwrap();
    let aut = cone_aut(&v.ideal);
    assert_eq!(aut.dim(), 7);
    assert!(same(&aut, &oracle));
}

#[test]
fn automorphisms_of_gr25_are_the_induced_gl5() {
    let m = 5;
    let n = m * (m - 1) / 2;
    let mut oracle = Vec::new();
    for i in 0..m {
        for j in 0..m {
            // e_j -> e_i, extended to e_a ∧ e_b as a derivation
            let mut x = vec![Scalar::zero(); n * n];
            for b in 0..m {
                for a in 0..b {
                    let col = pair_index(a, b);
                    for (src, other) in [(a, b), (b, a)] {
                        if src != j || i == other {
                            continue;
                        }
                        // image e_i ∧ e_other with e_i in the slot of e_src
                        let (lo, hi, sign) = if src == a {
                            if i < other { (i, other, 1) } else { (other, i, -1) }
                        } else if other < i {
                            (other, i, 1)
                        } else {
                            (i, other, -1)
                        };
                        x[pair_index(lo, hi) * n + col] += q(sign);
                    }
                }
            }
            oracle.push(x);
        }
    }
    let oracle = Subspace::from_spanning(n * n, oracle).unwrap();
    assert_eq!(oracle.dim(), 25);
    let aut = cone_aut(&zoo::plucker_gr2(5).unwrap().ideal);
    assert!(same(&aut, &oracle));
}

#[test]
fn automorphisms_of_a_quadric_are_conformal() {
    let v = zoo::quadric(4).unwrap();
    let qm = v.ideal.forms()[0].matrix().clone();
    let aut = cone_aut(&v.ideal);
    assert_eq!(aut.dim(), 7);
    for x in aut.vectors() {
        let x = Matrix::from_vec(4, 4, x);
        let s = qm.mul(&x).unwrap().add(&x.transpose().mul(&qm).unwrap());
        assert!(line(qm.to_vec()).contains(&s.to_vec()).unwrap() || s.is_zero());
    }
    assert!(contains_identity(&aut).unwrap());
    assert!(algebra::is_lie_subalgebra(&aut).unwrap());
}

#[test]
fn automorphism_dimensions() {
    assert_eq!(cone_aut(&zoo::s5_hyperplane().unwrap().ideal).dim(), 31);
    assert_eq!(cone_aut(&zoo::veronese(2).unwrap().ideal).dim(), 9);
    let empty = prolab::zoo::QuadraticIdeal::from_forms(3, Vec::new()).unwrap();
    assert_eq!(cone_aut(&empty).dim(), 9);
}

#[test]
fn tangent_spaces() {
    let v = zoo::quadric(5).unwrap();
    assert_eq!(tangent_space(&v.ideal, &v.base_point).unwrap().dim(), 4);
    // Jacobian of the ideal at a sample point
    let v = zoo::veronese(2).unwrap();
    let p = v.sample(4, 0).unwrap();
    let rows: Vec<Vec<Scalar>> = v.ideal.forms().iter().map(|f| f.matrix().mul_vec(&p).unwrap()).collect();
    let jac = prolab::linalg::kernel(&Matrix::from_rows(6, rows));
    let t = tangent_space(&v.ideal, &p).unwrap();
    assert_eq!(t.dim(), 3);
    assert!(same(&t, &jac));
    assert!(tangent_space(&v.ideal, &[q(1), q(1), q(1), q(1), q(1), q(2)]).is_err());
}

#[test]
fn secant_dimensions() {
    for (id, want) in [("segre(2,2)", 3), ("veronese(2)", 4), ("plucker_gr2(5)", 9), ("quadric(5)", 4), ("segre(3,3)", 7)] {
        let v = zoo::build(id).unwrap();
        let est = terracini_secant_dim(&v, 3, 1).unwrap();
        assert_eq!(est.dim, want, "{id}");
        assert!(est.agreeing);
        let d = v.expected.dim.unwrap();
        assert!(est.dim <= (2 * d + 1).min(v.ambient - 1));
    }
    assert!(terracini_secant_dim(&zoo::quadric(3).unwrap(), 0, 0).is_err());
}

#[test]
fn lines_through_the_base_point() {
    for (id, want) in [("quadric(6)", Some(2)), ("segre(3,3)", Some(1)), ("plucker_gr2(5)", Some(3)), ("spinor_s5", Some(6)), ("veronese(2)", None)] {
        assert_eq!(vmrt_dimension(&zoo::build(id).unwrap(), 3, 2).unwrap(), want, "{id}");
    }
    assert!(vmrt_dimension(&zoo::gr25_hyperplane().unwrap(), 1, 0).is_err());
}

#[test]
fn stabilizer_of_a_null_line_is_parabolic() {
    let v = zoo::quadric(5).unwrap();
    let g = cone_aut(&v.ideal);
    assert_eq!(g.dim(), 11);
    let l = line(v.base_point.clone());
    // the orbit of a null line is the 3-dimensional quadric
    assert_eq!(stabilizer(&g, &l).unwrap().dim(), 11 - 3);
    assert_eq!(killer(&g, &l).unwrap().dim(), 11 - 3 - 1);
    assert_eq!(stabilizer(&g, &Subspace::full(5)).unwrap().dim(), 11);
    assert_eq!(killer(&g, &Subspace::full(5)).unwrap().dim(), 0);
    assert!(stabilizer(&g, &Subspace::full(4)).is_err());
}

#[test]
fn killing_prolongation_elements() {
    let v = zoo::segre(3, 3).unwrap();
    let g = cone_aut(&v.ideal);
    let g1 = prolong::prolong(&g, 1, &ProlongOptions::exact()).unwrap();
    assert_eq!(g1.dim, 9);
    let zero = Subspace::zero(9);
    assert_eq!(kill_prolongation(&g1, &zero).unwrap().dim(), 9);
    let l1 = line(v.sample(3, 0).unwrap());
    let l2 = line(v.sample(3, 1).unwrap());
    let k1 = kill_prolongation(&g1, &l1).unwrap();
    let k2 = kill_prolongation(&g1, &l2).unwrap();
    let k12 = kill_prolongation(&g1, &l1.sum(&l2).unwrap()).unwrap();
    assert!(same(&k12, &k1.intersect(&k2).unwrap()));
    for a in probes::maps_of(&k1, 9).unwrap() {
        assert!(a.contract(&[&l1.vectors()[0]]).unwrap().is_zero());
    }
    let modp = prolong::prolong(&g, 1, &ProlongOptions::mod_p(prolab::linalg::MERSENNE_61)).unwrap();
    assert!(kill_prolongation(&modp, &zero).is_err());
}

#[test]
fn conformal_prolongation_kills_nothing_but_zero() {
    let g1 = prolong::prolong(&algebra::co(4), 1, &ProlongOptions::exact()).unwrap();
    assert_eq!(g1.dim, 4);
    let l = line(vec![q(1), q(0), q(2), q(0)]);
    assert_eq!(kill_prolongation(&g1, &l).unwrap().dim(), 0);
}

#[test]
fn projection_formula_examples() {
    let e = |n: usize, i: usize| {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        line(v)
    };
    let cases = [
        (ProjectionType::I { a: 3, b: 3 }, e(9, 0), 4),
        (ProjectionType::II { n: 5 }, e(10, pair_index(0, 1)), 3),
        (ProjectionType::III { n: 3 }, e(6, 0), 3),
    ];
    for (kind, l, want) in cases {
        let r = verify_projection_formula(kind, &l, 7).unwrap();
        assert!(r.pass, "{kind}");
        assert_eq!((r.engine, r.formula), (want, want), "{kind}");
        assert_eq!(r.containments_failed, 0);
    }
    let r = verify_projection_formula(ProjectionType::I { a: 2, b: 3 }, &Subspace::zero(6), 1).unwrap();
    assert_eq!((r.engine, r.formula), (6, 6));
}

#[test]
fn lambda_of_zero_and_conformal_maps() {
    let v = zoo::quadric(4).unwrap();
    let zero = SymMultiMap::zero(4, 2);
    let r = lambda_of(&zero, &v, 4, 0).unwrap();
    assert!(r.lambda.iter().all(Zero::is_zero));
    assert_eq!(r.failures, 0);
    let g1 = prolong::prolong(&cone_aut(&v.ideal), 1, &ProlongOptions::exact()).unwrap();
    for a in &g1.basis {
        let r = lambda_of(a, &v, 6, 3).unwrap();
        assert_eq!((r.pairs_checked, r.failures), (6, 0));
        assert!(r.lambda.iter().any(|x| !x.is_zero()));
    }
}

#[test]
fn lambda_rejects_non_parallel_maps() {
    let v = zoo::segre(2, 2).unwrap();
    let mut c = vec![Scalar::zero(); SymMultiMap::coeff_count(4, 2)];
    c[0] = Scalar::one();
    let a = SymMultiMap::from_coeffs(4, 2, c).unwrap();
    assert!(lambda_of(&a, &v, 2, 0).is_err());
}
