//! The prolongation `g^(k)` of a matrix Lie algebra `g ⊂ End(V)`: symmetric
//! `(k+1)`-linear maps `A: V^(k+1) -> V` all of whose contractions
//! `v -> A(v_1, ..., v_k, v)` lie in `g`.
//!
//! Membership is linear in `A` and multilinear in `v_1..v_k`, so it suffices
//! to impose it for basis vectors `v_i = e_{mu_i}`, one block of equations per
//! sorted multi-index `mu` of length `k`. The direct strategy solves for all
//! `C(n+k, k+1) * n` coefficients at once. The tower strategy uses
//! `g^(k) = {T: V -> g^(k-1) | T(u)(v, ...) = T(v)(u, ...)}` and is kept as an
//! independent route to the same answer.

pub mod algebra;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::elim::SparseRow;
use crate::linalg::{self, lift, random_prime_62, Matrix, PrimeField, Scalar, Subspace};
use crate::par;
use crate::sym::{sym_dim, MultiIndex, SymMultiMap};

pub const DEFAULT_UNKNOWN_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    /// Dimension only, computed modulo the given prime.
    ModP(u64),
}

impl fmt::Display for Arithmetic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arithmetic::Exact => write!(f, "exact"),
            Arithmetic::ModP(p) => write!(f, "modp({p})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Direct,
    Tower,
}

#[derive(Debug, Clone)]
pub struct ProlongOptions {
    pub arithmetic: Arithmetic,
    pub strategy: Strategy,
    pub unknown_cap: usize,
    pub seed: u64,
}

impl Default for ProlongOptions {
    fn default() -> Self {
        ProlongOptions { arithmetic: Arithmetic::Exact, strategy: Strategy::Direct, unknown_cap: DEFAULT_UNKNOWN_CAP, seed: 0 }
    }
}

impl ProlongOptions {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn mod_p(p: u64) -> Self {
        ProlongOptions { arithmetic: Arithmetic::ModP(p), ..Self::default() }
    }

    /// Mod-p options with a prime drawn from `seed`.
    pub fn random_prime(seed: u64) -> Self {
        let p = random_prime_62(&mut crate::rng::rng(seed, 0x9e11));
        ProlongOptions { arithmetic: Arithmetic::ModP(p), seed, ..Self::default() }
    }

    pub fn with_strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }
}

#[derive(Debug, Clone)]
pub struct ProlongationResult {
    pub k: usize,
    pub n: usize,
    pub dim: usize,
    /// Empty in mod-p mode.
    pub basis: Vec<SymMultiMap>,
    /// Coefficient-space subspace spanned by `basis` (exact mode only).
    pub space: Option<Subspace>,
    pub field_used: Arithmetic,
    pub strategy: Strategy,
    pub constraint_shape: (usize, usize),
    pub seed: u64,
}

impl ProlongationResult {
    pub fn is_exact(&self) -> bool {
        self.field_used == Arithmetic::Exact
    }
}

/// Equations cutting out `g` in `End(V)`: a matrix whose kernel is `g`.
pub fn quotient_projector(g: &Subspace) -> Matrix {
    g.annihilator().basis().clone()
}

fn sparse_rows_of(m: &Matrix) -> Vec<SparseRow<Scalar>> {
    m.rows_iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
        .collect()
}

/// Constraint rows of the direct system for `g^(k)`.
pub fn direct_constraints(g: &Subspace, k: usize) -> Result<(Vec<SparseRow<Scalar>>, usize)> {
    let n = algebra::side(g)?;
    let unknowns = SymMultiMap::coeff_count(n, k + 1);
    let proj = sparse_rows_of(&quotient_projector(g));
    let mus: Vec<MultiIndex> = MultiIndex::all(n, k).collect();
    let blocks = par::map(&mus, |mu| {
        let col_rank: Vec<usize> = (0..n).map(|j| mu.with(j).rank()).collect();
        proj.iter()
            .map(|a| {
                // a . vec(slice(A, mu)), slice[i][j] = c[mu + j][i]
                let mut row: SparseRow<Scalar> =
                    a.iter().map(|(ij, x)| (col_rank[ij % n] * n + ij / n, x.clone())).collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect::<Vec<_>>()
    });
    Ok((blocks.into_iter().flatten().collect(), unknowns))
}

fn check_cap(unknowns: usize, opts: &ProlongOptions) -> Result<()> {
    if unknowns > opts.unknown_cap {
        return Err(Error::TooManyUnknowns { unknowns, cap: opts.unknown_cap });
    }
    Ok(())
}

fn rank_mod_rows(rows: &[SparseRow<Scalar>], ncols: usize, p: u64) -> Result<usize> {
    let field = PrimeField::new(p);
    let reduced = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|(j, x)| Ok((*j, field.reduce(x)?)))
                .filter(|e: &Result<(usize, u64)>| !matches!(e, Ok((_, 0))))
                .collect::<Result<SparseRow<u64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(lift::rank_mod(&field, reduced, ncols))
}

/// Computes `g^(k)`.
pub fn prolong(g: &Subspace, k: usize, opts: &ProlongOptions) -> Result<ProlongationResult> {
    if k == 0 {
        return Err(Error::InvalidParameters { name: "prolong".into(), reason: "k must be at least 1".into() });
    }
    let n = algebra::side(g)?;
    match (opts.strategy, opts.arithmetic) {
        (Strategy::Tower, Arithmetic::Exact) => return tower(g, k, opts),
        (Strategy::Tower, Arithmetic::ModP(_)) => {
            return Err(Error::InvalidParameters {
                name: "prolong".into(),
                reason: "the tower strategy needs exact arithmetic".into(),
            })
        }
        _ => {}
    }
    let unknowns = SymMultiMap::coeff_count(n, k + 1);
    check_cap(unknowns, opts)?;
    let (rows, ncols) = direct_constraints(g, k)?;
    let shape = (rows.len(), ncols);
    let mut result = ProlongationResult {
        k,
        n,
        dim: 0,
        basis: Vec::new(),
        space: None,
        field_used: opts.arithmetic,
        strategy: Strategy::Direct,
        constraint_shape: shape,
        seed: opts.seed,
    };
    match opts.arithmetic {
        Arithmetic::ModP(p) => {
            result.dim = ncols - rank_mod_rows(&rows, ncols, p)?;
        }
        Arithmetic::Exact => {
            let ker = linalg::kernel_rows(rows, ncols);
            finish_exact(&mut result, ker)?;
        }
    }
    Ok(result)
}

fn finish_exact(result: &mut ProlongationResult, ker: Vec<Vec<Scalar>>) -> Result<()> {
    let ncols = SymMultiMap::coeff_count(result.n, result.k + 1);
    result.dim = ker.len();
    result.basis = ker
        .iter()
        .map(|v| SymMultiMap::from_coeffs(result.n, result.k + 1, v.clone()))
        .collect::<Result<_>>()?;
    result.space = Some(Subspace::from_spanning(ncols, ker)?);
    Ok(())
}

/// `g` itself, as degree-1 maps.
fn degree_one(g: &Subspace, n: usize) -> Vec<SymMultiMap> {
    g.vectors()
        .into_iter()
        .map(|v| {
            // value at e_l is column l of X
            let mut c = vec![Scalar::zero(); n * n];
            for i in 0..n {
                for l in 0..n {
                    c[l * n + i] = v[i * n + l].clone();
                }
            }
            SymMultiMap::from_coeffs(n, 1, c).expect("n * n coefficients")
        })
        .collect()
}

fn tower(g: &Subspace, k: usize, opts: &ProlongOptions) -> Result<ProlongationResult> {
    let n = algebra::side(g)?;
    let mut prev = degree_one(g, n);
    let mut shape = (0, 0);
    let mut basis = prev.clone();
    for level in 1..=k {
        let m = prev.len();
        let unknowns = n * m;
        check_cap(unknowns, opts)?;
        if m == 0 {
            basis = Vec::new();
            shape = (0, 0);
            break;
        }
        // unknown (j, s) at j * m + s: T(e_j) = sum_s x_{j,s} prev_s
        let lower: Vec<MultiIndex> = MultiIndex::all(n, level - 1).collect();
        let mut keys = Vec::new();
        for j in 0..n {
            for l in j + 1..n {
                for nu in &lower {
                    keys.push((j, l, nu.clone()));
                }
            }
        }
        let blocks = par::map(&keys, |(j, l, nu)| {
            let (a, b) = (nu.with(*l), nu.with(*j));
            (0..n)
                .map(|i| {
                    let mut row: SparseRow<Scalar> = Vec::new();
                    for (s, p) in prev.iter().enumerate() {
                        let x = &p.value(&a)[i];
                        if !x.is_zero() {
                            row.push((j * m + s, x.clone()));
                        }
                        let y = &p.value(&b)[i];
                        if !y.is_zero() {
                            row.push((l * m + s, -y.clone()));
                        }
                    }
                    row.sort_unstable_by_key(|e| e.0);
                    row
                })
                .filter(|r| !r.is_empty())
                .collect::<Vec<_>>()
        });
        let rows: Vec<SparseRow<Scalar>> = blocks.into_iter().flatten().collect();
        shape = (rows.len(), unknowns);
        let ker = linalg::kernel_rows(rows, unknowns);
        let mus: Vec<MultiIndex> = MultiIndex::all(n, level + 1).collect();
        basis = par::map(&ker, |x| {
            let mut a = SymMultiMap::zero(n, level + 1);
            for mu in &mus {
                let j = mu.as_slice()[0];
                let nu = mu.without(j).expect("j occurs in mu");
                let mut val = vec![Scalar::zero(); n];
                for (s, p) in prev.iter().enumerate() {
                    let c = &x[j * m + s];
                    if c.is_zero() {
                        continue;
                    }
                    for (o, y) in val.iter_mut().zip(p.value(&nu)) {
                        if !y.is_zero() {
                            *o += c * y;
                        }
                    }
                }
                for (i, v) in val.into_iter().enumerate() {
                    a.set(mu, i, v);
                }
            }
            a
        });
        prev = basis.clone();
    }
    let coeffs: Vec<Vec<Scalar>> = basis.iter().map(|a| a.coeffs().to_vec()).collect();
    let space = Subspace::from_spanning(SymMultiMap::coeff_count(n, k + 1), coeffs)?;
    // Report the canonical basis so both strategies agree element-wise.
    let mut result = ProlongationResult {
        k,
        n,
        dim: 0,
        basis: Vec::new(),
        space: None,
        field_used: Arithmetic::Exact,
        strategy: Strategy::Tower,
        constraint_shape: shape,
        seed: opts.seed,
    };
    finish_exact(&mut result, space.vectors())?;
    Ok(result)
}

/// Whether every contraction of `a` on basis vectors lies in `g`.
pub fn slices_in(g: &Subspace, a: &SymMultiMap) -> Result<bool> {
    for mu in MultiIndex::all(a.n(), a.degree() - 1) {
        if !g.contains(&a.slice(&mu)?.to_vec())? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VanishingOrder {
    At(usize),
    AtLeast(usize),
}

impl fmt::Display for VanishingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VanishingOrder::At(k) => write!(f, "{k}"),
            VanishingOrder::AtLeast(k) => write!(f, "≥ {k}"),
        }
    }
}

/// Smallest `k` with `g^(k) = 0`, searching `1..=k_max`.
pub fn vanishing_order(g: &Subspace, k_max: usize, opts: &ProlongOptions) -> Result<VanishingOrder> {
    for k in 1..=k_max {
        if prolong(g, k, opts)?.dim == 0 {
            return Ok(VanishingOrder::At(k));
        }
    }
    Ok(VanishingOrder::AtLeast(k_max))
}

/// `g^(k)` of the conjugate algebra, obtained by transporting a basis.
pub fn transform_result(res: &ProlongationResult, p: &Matrix) -> Result<Subspace> {
    let pinv = p.inverse()?;
    let vs = par::map(&res.basis, |a| a.transform_with(p, &pinv).map(SymMultiMap::into_coeffs))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_spanning(SymMultiMap::coeff_count(res.n, res.k + 1), vs)
}

/// Expected dimension of `gl(n)^(k)`.
pub fn gl_prolongation_dim(n: usize, k: usize) -> usize {
    n * sym_dim(n, k + 1)
}
