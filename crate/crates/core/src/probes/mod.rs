//! Geometric probes on quadratic cones: infinitesimal automorphisms,
//! tangent spaces, secant and VMRT dimensions, and the restriction of
//! prolongations to a projection centre.

pub mod projection;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, dot, Matrix, Scalar, SparseMatrix, Subspace};
use crate::par;
use crate::prolong::ProlongationResult;
use crate::rng;
use crate::sym::SymMultiMap;
use crate::zoo::{QuadraticIdeal, Variety};

pub use projection::{verify_projection_formula, ProjectionReport, ProjectionScenario, ProjectionType};

/// `{X in End(V) : X.q in span(I) for every q in I}`, in row-major
/// coordinates of `End(V)`.
///
/// Solved jointly for `X` and the matrix `Y` with `X.q_r = sum_s Y[r][s] q_s`.
pub fn cone_aut(ideal: &QuadraticIdeal) -> Subspace {
    let n = ideal.ambient_dim();
    let forms = ideal.forms();
    let d = forms.len();
    if d == 0 {
        return Subspace::full(n * n);
    }
    let nx = n * n;
    let blocks: Vec<Vec<Vec<(usize, Scalar)>>> = par::map_range(d, |r| {
        let q = forms[r].matrix();
        let mut rows = Vec::with_capacity(n * (n + 1) / 2);
        for b in 0..n {
            for a in 0..=b {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for c in 0..n {
                    if !q[(a, c)].is_zero() {
                        *acc.entry(c * n + b).or_insert_with(Scalar::zero) += &q[(a, c)];
                    }
                    if !q[(c, b)].is_zero() {
                        *acc.entry(c * n + a).or_insert_with(Scalar::zero) += &q[(c, b)];
                    }
                }
                for (s, f) in forms.iter().enumerate() {
                    let x = &f.matrix()[(a, b)];
                    if !x.is_zero() {
                        acc.insert(nx + r * d + s, -x);
                    }
                }
                let row: Vec<(usize, Scalar)> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        rows
    });
    let rows: Vec<Vec<(usize, Scalar)>> = blocks.into_iter().flatten().collect();
    let ker = linalg::kernel_sparse(&SparseMatrix::from_sparse_rows(nx + d * d, rows));
    // Y is determined by X because the forms are independent.
    ker.project(&(0..nx).collect::<Vec<_>>())
}

/// `{v : B_q(alpha, v) = 0 for all q}`, the degree-two Zariski tangent space.
pub fn tangent_space(ideal: &QuadraticIdeal, alpha: &[Scalar]) -> Result<Subspace> {
    ideal.check_point(alpha)?;
    let n = ideal.ambient_dim();
    let rows = ideal.forms().iter().map(|q| q.polar_covector(alpha)).collect::<Result<Vec<_>>>()?;
    Ok(linalg::kernel(&Matrix::from_rows(n, rows)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecantEstimate {
    /// `dim(T_a + T_b) - 1` for each trial.
    pub trials: Vec<usize>,
    pub dim: usize,
    /// At least two trials reached the maximum.
    pub agreeing: bool,
}

/// Projective dimension of the secant variety by Terracini's lemma.
pub fn terracini_secant_dim(v: &Variety, trials: usize, seed: u64) -> Result<SecantEstimate> {
    if trials == 0 {
        return Err(Error::InvalidParameters { name: "trials".into(), reason: "need at least one trial".into() });
    }
    let dims = par::map_range(trials, |t| -> Result<usize> {
        let a = v.sample(seed, 2 * t as u64)?;
        let b = v.sample(seed, 2 * t as u64 + 1)?;
        let ta = tangent_space(&v.ideal, &a)?;
        let tb = tangent_space(&v.ideal, &b)?;
        Ok(ta.sum(&tb)?.dim().saturating_sub(1))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let dim = *dims.iter().max().expect("trials >= 1");
    let agreeing = dims.iter().filter(|&&x| x == dim).count() >= 2;
    Ok(SecantEstimate { trials: dims, dim, agreeing })
}

/// Projective dimension of the variety of lines through the base point.
///
/// For a line direction `w` the cone of lines is cut out by `q(u) = 0` and
/// `B_q(alpha, u) = 0`; its tangent space at `w` contains `alpha` and `w`,
/// so the projective dimension is `dim T - 2`. The maximum over `samples`
/// directions is returned. `None` means no line passes through the point.
pub fn vmrt_dimension(v: &Variety, samples: usize, seed: u64) -> Result<Option<usize>> {
    let alpha = &v.base_point;
    v.check_point(alpha)?;
    let forms = v.ideal.forms();
    let n = v.ambient_dim();
    let alpha_rows = forms.iter().map(|q| q.polar_covector(alpha)).collect::<Result<Vec<_>>>()?;
    let mut best = None;
    for t in 0..samples.max(1) {
        let mut r = rng::rng(seed, 0x11e5 + t as u64);
        let Some(w) = v.line_direction(&mut r)? else {
            return Ok(None);
        };
        for (i, q) in forms.iter().enumerate() {
            if !q.value(&w)?.is_zero() || !dot(&alpha_rows[i], &w).is_zero() {
                return Err(Error::Sampler(format!("{}: line direction {t} leaves the cone", v.id)));
            }
        }
        let mut rows = alpha_rows.clone();
        for q in forms {
            rows.push(q.polar_covector(&w)?);
        }
        let dim = linalg::kernel(&Matrix::from_rows(n, rows)).dim() - 2;
        best = Some(best.map_or(dim, |b: usize| b.max(dim)));
    }
    Ok(best)
}

fn algebra_mats(g: &Subspace) -> Result<(usize, Vec<Matrix>)> {
    let n = crate::prolong::algebra::side(g)?;
    Ok((n, g.vectors().into_iter().map(|v| Matrix::from_vec(n, n, v)).collect()))
}

fn combine(mats: &[Matrix], n: usize, coeffs: &Subspace) -> Result<Subspace> {
    let vs = coeffs
        .vectors()
        .into_iter()
        .map(|c| {
            let mut x = Matrix::zeros(n, n);
            for (m, ci) in mats.iter().zip(&c) {
                if !ci.is_zero() {
                    x = x.add(&m.scale(ci));
                }
            }
            x.to_vec()
        })
        .collect();
    Subspace::from_spanning(n * n, vs)
}

/// `{X in g : X(L) ⊂ L}`.
pub fn stabilizer(g: &Subspace, l: &Subspace) -> Result<Subspace> {
    let (n, mats) = algebra_mats(g)?;
    check_ambient(n, l)?;
    let ann = l.annihilator().vectors();
    let images: Vec<Vec<Vec<Scalar>>> =
        l.vectors().iter().map(|x| mats.iter().map(|m| m.mul_vec(x)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for eta in &ann {
        for img in &images {
            rows.push(img.iter().map(|y| dot(eta, y)).collect());
        }
    }
    combine(&mats, n, &linalg::kernel(&Matrix::from_rows(mats.len(), rows)))
}

/// `{X in g : X(L) = 0}`.
pub fn killer(g: &Subspace, l: &Subspace) -> Result<Subspace> {
    let (n, mats) = algebra_mats(g)?;
    check_ambient(n, l)?;
    let mut rows = Vec::new();
    for x in l.vectors() {
        let img = mats.iter().map(|m| m.mul_vec(&x)).collect::<Result<Vec<_>>>()?;
        for i in 0..n {
            rows.push(img.iter().map(|y| y[i].clone()).collect());
        }
    }
    combine(&mats, n, &linalg::kernel(&Matrix::from_rows(mats.len(), rows)))
}

fn check_ambient(n: usize, l: &Subspace) -> Result<()> {
    if l.ambient_dim() != n {
        return Err(Error::AmbientMismatch { left: n, right: l.ambient_dim() });
    }
    Ok(())
}

/// `{A in g^(1) : A(l, .) = 0 for l in L}` as a subspace of the
/// coefficient space of symmetric bilinear maps.
pub fn kill_prolongation(g1: &ProlongationResult, l: &Subspace) -> Result<Subspace> {
    if !g1.is_exact() {
        return Err(Error::InvalidParameters { name: "g1".into(), reason: "an exact prolongation is required".into() });
    }
    if g1.k != 1 {
        return Err(Error::InvalidParameters { name: "g1".into(), reason: format!("degree {} given, 1 expected", g1.k) });
    }
    let n = g1.n;
    check_ambient(n, l)?;
    let total = SymMultiMap::coeff_count(n, 2);
    if g1.basis.is_empty() {
        return Ok(Subspace::zero(total));
    }
    let ls = l.vectors();
    let contracted: Vec<Vec<Matrix>> = par::map(&g1.basis, |a| ls.iter().map(|x| a.contract(&[x])).collect::<Result<Vec<_>>>())
        .into_iter()
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for t in 0..ls.len() {
        for e in 0..n * n {
            let row: Vec<Scalar> = contracted.iter().map(|c| c[t].data()[e].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let coeffs = linalg::kernel(&Matrix::from_rows(g1.basis.len(), rows));
    let vs = coeffs
        .vectors()
        .into_iter()
        .map(|c| {
            let mut acc = vec![Scalar::zero(); total];
            for (a, ci) in g1.basis.iter().zip(&c) {
                if !ci.is_zero() {
                    for (x, y) in acc.iter_mut().zip(a.coeffs()) {
                        *x += y * ci;
                    }
                }
            }
            acc
        })
        .collect();
    Subspace::from_spanning(total, vs)
}

/// Bilinear maps spanning a coefficient-space subspace.
pub fn maps_of(space: &Subspace, n: usize) -> Result<Vec<SymMultiMap>> {
    space.vectors().into_iter().map(|c| SymMultiMap::from_coeffs(n, 2, c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaReport {
    /// The covector with `A(a, a) = lambda(a) a` on the cone.
    pub lambda: Vec<Scalar>,
    pub pairs_checked: usize,
    /// Pairs `(a, a')`, `a'` tangent at `a`, where
    /// `lambda(a) a' + lambda(a') a != 2 A(a, a')`.
    pub failures: usize,
}

/// Recovers `lambda_A` from samples and checks the tangent identity on
/// `pairs` sampled pairs.
pub fn lambda_of(a: &SymMultiMap, v: &Variety, pairs: usize, seed: u64) -> Result<LambdaReport> {
    let n = v.ambient_dim();
    if a.n() != n || a.degree() != 2 {
        return Err(Error::DimensionMismatch { expected: n, got: a.n() });
    }
    let count = n + crate::zoo::SAMPLE_MARGIN;
    let points = v.sample_points(count, seed)?;
    let mut rows = Vec::with_capacity(count);
    for (index, p) in points.iter().enumerate() {
        let s = parallel_factor(&a.evaluate(&[p, p])?, p).ok_or(Error::NotParallel { index })?;
        let mut row = p.clone();
        row.push(-s);
        rows.push(row);
    }
    let ker = linalg::kernel(&Matrix::from_rows(n + 1, rows));
    let sol = match ker.vectors().as_slice() {
        [v] if !v[n].is_zero() => {
            let c = v[n].recip();
            v[..n].iter().map(|x| x * &c).collect::<Vec<_>>()
        }
        _ => return Err(Error::Sampler(format!("{}: samples do not determine lambda", v.id))),
    };
    let two = Scalar::from_integer(2.into());
    let results = par::map_range(pairs, |t| -> Result<bool> {
        let p = v.sample(seed ^ 0x7a9, t as u64)?;
        let tan = tangent_space(&v.ideal, &p)?;
        let mut r = rng::rng(seed, 0x2a00 + t as u64);
        let c = rng::int_vector(&mut r, tan.dim(), 3);
        let mut q = vec![Scalar::zero(); n];
        for (b, ci) in tan.vectors().iter().zip(&c) {
            for (x, y) in q.iter_mut().zip(b) {
                *x += y * ci;
            }
        }
        let (lp, lq) = (dot(&sol, &p), dot(&sol, &q));
        let apq = a.evaluate(&[&p, &q])?;
        Ok((0..n).all(|i| &lp * &q[i] + &lq * &p[i] == &two * &apq[i]))
    });
    let mut failures = 0;
    for ok in results {
        if !ok? {
            failures += 1;
        }
    }
    Ok(LambdaReport { lambda: sol, pairs_checked: pairs, failures })
}

/// `s` with `x = s p`, if `x` is parallel to the nonzero vector `p`.
fn parallel_factor(x: &[Scalar], p: &[Scalar]) -> Option<Scalar> {
    let i = p.iter().position(|y| !y.is_zero())?;
    let s = &x[i] / &p[i];
    x.iter().zip(p).all(|(a, b)| *a == &s * b).then_some(s)
}

/// Whether the identity lies in `g`.
pub fn contains_identity(g: &Subspace) -> Result<bool> {
    let n = crate::prolong::algebra::side(g)?;
    g.contains(&Matrix::identity(n).to_vec())
}
