//! Linear projections of the classical cones: the part of `aut(S)^(1)`
//! killing a centre `L`, compared against its closed form in terms of the
//! image (and kernel) of `L` viewed as a space of matrices.

use std::fmt;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use super::{kill_prolongation, lambda_of, maps_of};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Scalar, Subspace};
use crate::prolong::{prolong, ProlongOptions, ProlongationResult};
use crate::rng::{self, SeededRng};
use crate::sym::{binomial, MultiIndex};
use crate::zoo::{self, pair_index, wedge, Chart, Variety};

/// Matrix model of the ambient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProjectionType {
    /// `a x b` matrices, the cone over the Segre variety.
    I { a: usize, b: usize },
    /// Skew `n x n` matrices, the cone over `Gr(2, n)`.
    II { n: usize },
    /// Symmetric `n x n` matrices, the cone over `v_2(P^(n-1))`.
    III { n: usize },
    /// `U = (W ⊗ Q) ⊕ Sym^2 W` inside symmetric matrices on `W ⊕ Q`.
    Symp { k: usize, m: usize },
}

impl fmt::Display for ProjectionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectionType::I { a, b } => write!(f, "I({a},{b})"),
            ProjectionType::II { n } => write!(f, "II({n})"),
            ProjectionType::III { n } => write!(f, "III({n})"),
            ProjectionType::Symp { k, m } => write!(f, "Symp({k},{m})"),
        }
    }
}

impl ProjectionType {
    pub fn for_variety(v: &Variety) -> Option<Self> {
        match *v.chart()? {
            Chart::Segre { a, b } => Some(ProjectionType::I { a, b }),
            Chart::Grassmannian { m } => Some(ProjectionType::II { n: m }),
            Chart::Veronese { p } => Some(ProjectionType::III { n: p + 1 }),
            Chart::Symp { k, m } => Some(ProjectionType::Symp { k, m }),
            _ => None,
        }
    }

    pub fn variety(&self) -> Result<Variety> {
        match *self {
            ProjectionType::I { a, b } => zoo::segre(a, b),
            ProjectionType::II { n } => zoo::plucker_gr2(n),
            ProjectionType::III { n } => {
                if n == 0 {
                    return Err(Error::InvalidParameters { name: "III".into(), reason: "n must be positive".into() });
                }
                zoo::veronese(n - 1)
            }
            ProjectionType::Symp { k, m } => zoo::symp_vmrt(k, m),
        }
    }

    pub fn ambient(&self) -> usize {
        match *self {
            ProjectionType::I { a, b } => a * b,
            ProjectionType::II { n } => binomial(n, 2),
            ProjectionType::III { n } => binomial(n + 1, 2),
            ProjectionType::Symp { k, m } => k * m + binomial(k + 1, 2),
        }
    }

    /// Side of the square matrices (rows for type I).
    fn side(&self) -> usize {
        match *self {
            ProjectionType::I { a, .. } => a,
            ProjectionType::II { n } | ProjectionType::III { n } => n,
            ProjectionType::Symp { k, m } => k + m,
        }
    }

    /// Symmetric cells `(i, j)`, `i <= j`, in coordinate order.
    fn sym_cells(&self) -> Vec<(usize, usize)> {
        let cells = |n| MultiIndex::all(n, 2).map(|mu| (mu.as_slice()[0], mu.as_slice()[1]));
        match *self {
            ProjectionType::III { n } => cells(n).collect(),
            ProjectionType::Symp { k, m } => cells(k + m).filter(|&(i, _)| i < k).collect(),
            _ => unreachable!("only the symmetric types have symmetric cells"),
        }
    }

    /// The matrix `phi^#` of a vector of `V`.
    pub fn sharp(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.ambient() {
            return Err(Error::DimensionMismatch { expected: self.ambient(), got: x.len() });
        }
        Ok(match *self {
            ProjectionType::I { a, b } => Matrix::from_vec(a, b, x.to_vec()),
            ProjectionType::II { n } => {
                let mut m = Matrix::zeros(n, n);
                for j in 0..n {
                    for i in 0..j {
                        let v = &x[pair_index(i, j)];
                        m[(i, j)] = v.clone();
                        m[(j, i)] = -v;
                    }
                }
                m
            }
            ProjectionType::III { .. } | ProjectionType::Symp { .. } => {
                let s = self.side();
                let mut m = Matrix::zeros(s, s);
                for (t, (i, j)) in self.sym_cells().into_iter().enumerate() {
                    m[(i, j)] = x[t].clone();
                    m[(j, i)] = x[t].clone();
                }
                m
            }
        })
    }

    /// The form `psi` with `lambda(phi) = c tr(psi phi)`, mapping the target
    /// of `phi^#` back to its source.
    fn psi(&self, lambda: &[Scalar]) -> Result<Option<Matrix>> {
        Ok(match *self {
            ProjectionType::I { .. } => Some(self.sharp(lambda)?.transpose()),
            ProjectionType::II { .. } => Some(self.sharp(lambda)?),
            ProjectionType::III { .. } | ProjectionType::Symp { .. } => {
                let k = match *self {
                    ProjectionType::Symp { k, .. } => k,
                    _ => usize::MAX,
                };
                let s = self.side();
                let half = Scalar::new(1.into(), 2.into());
                let mut m = Matrix::zeros(s, s);
                for (t, (i, j)) in self.sym_cells().into_iter().enumerate() {
                    if j >= k {
                        // W ⊗ Q part: lambda must vanish there.
                        if !lambda[t].is_zero() {
                            return Ok(None);
                        }
                        continue;
                    }
                    let v = if i == j { lambda[t].clone() } else { &lambda[t] * &half };
                    m[(i, j)] = v.clone();
                    m[(j, i)] = v;
                }
                Some(m)
            }
        })
    }

    /// Ambient dimension of `Im(L)`: the rows of `phi^#`, or only the `W`
    /// rows for the symplectic type.
    pub fn image_ambient(&self) -> usize {
        match *self {
            ProjectionType::Symp { k, .. } => k,
            _ => self.side(),
        }
    }

    /// `Im(L)` (or `Im_W(L)`), the span of the images of all `phi^#`.
    pub fn image(&self, l: &Subspace) -> Result<Subspace> {
        let r = self.image_ambient();
        let mut cols = Vec::new();
        for x in l.vectors() {
            let m = self.sharp(&x)?;
            for j in 0..m.ncols() {
                cols.push(m.column(j)[..r].to_vec());
            }
        }
        Subspace::from_spanning(r, cols)
    }

    /// `Ker(L)`, the common kernel of the `phi^#`, for type I.
    pub fn kernel(&self, l: &Subspace) -> Result<Option<Subspace>> {
        let ProjectionType::I { b, .. } = *self else {
            return Ok(None);
        };
        let mut rows = Vec::new();
        for x in l.vectors() {
            rows.extend(self.sharp(&x)?.to_rows());
        }
        Ok(Some(linalg::kernel(&Matrix::from_rows(b, rows))))
    }

    /// Closed-form dimension of the killed prolongation.
    pub fn formula(&self, image_dim: usize, kernel_dim: Option<usize>) -> usize {
        match *self {
            ProjectionType::I { a, .. } => (a - image_dim) * kernel_dim.unwrap_or(0),
            ProjectionType::II { n } => binomial(n - image_dim, 2),
            ProjectionType::III { n } => binomial(n - image_dim + 1, 2),
            ProjectionType::Symp { k, .. } => binomial(k - image_dim + 1, 2),
        }
    }

    /// Whether `phi` lies in `L(psi)`.
    fn in_l_of(&self, psi: &Matrix, phi: &Matrix) -> Result<bool> {
        Ok(match self {
            ProjectionType::I { .. } => phi.mul(psi)?.is_zero() && psi.mul(phi)?.is_zero(),
            _ => psi.mul(phi)?.is_zero(),
        })
    }

    /// A random vector of `V` whose matrix has image in `span(pool)`.
    fn random_element(&self, r: &mut SeededRng, pool: &[Vec<Scalar>], right: &[Vec<Scalar>]) -> Vec<Scalar> {
        let combo = |r: &mut SeededRng, pool: &[Vec<Scalar>]| {
            let mut v = vec![Scalar::zero(); pool[0].len()];
            for p in pool {
                let c = rng::small_int(r, 3);
                for (x, y) in v.iter_mut().zip(p) {
                    *x += y * &c;
                }
            }
            v
        };
        match *self {
            ProjectionType::I { .. } => {
                let (u, w) = (combo(r, pool), combo(r, right));
                u.iter().flat_map(|x| w.iter().map(move |y| x * y)).collect()
            }
            ProjectionType::II { .. } => wedge(&combo(r, pool), &combo(r, pool)),
            ProjectionType::III { .. } => {
                let w = combo(r, pool);
                self.sym_cells().into_iter().map(|(i, j)| &w[i] * &w[j]).collect()
            }
            ProjectionType::Symp { m, .. } => {
                let mut y = combo(r, pool);
                y.extend(rng::int_vector(r, m, 3));
                self.sym_cells().into_iter().map(|(i, j)| &y[i] * &y[j]).collect()
            }
        }
    }

    /// A seeded random centre of dimension `dim`, spanned by low-rank
    /// elements whose images lie in a random subspace, so that `Im(L)` and
    /// `Ker(L)` take a spread of dimensions.
    pub fn random_l(&self, dim: usize, seed: u64) -> Result<Subspace> {
        let n = self.ambient();
        if dim > n {
            return Err(Error::InvalidParameters { name: "dim L".into(), reason: format!("{dim} exceeds ambient {n}") });
        }
        let rows = self.image_ambient();
        let cols = match *self {
            ProjectionType::I { b, .. } => b,
            _ => rows,
        };
        let mut r = rng::rng(seed, 0x1c);
        let mut pool_size = r.gen_range(1..=rows);
        let mut right_size = r.gen_range(1..=cols);
        loop {
            let pool: Vec<Vec<Scalar>> = (0..pool_size).map(|_| rng::int_vector(&mut r, rows, 3)).collect();
            let right: Vec<Vec<Scalar>> = (0..right_size).map(|_| rng::int_vector(&mut r, cols, 3)).collect();
            let mut l = Subspace::zero(n);
            for _ in 0..8 * (dim + 1) {
                if l.dim() == dim {
                    return Ok(l);
                }
                let x = self.random_element(&mut r, &pool, &right);
                l = l.sum(&Subspace::from_spanning(n, vec![x])?)?;
            }
            if l.dim() == dim {
                return Ok(l);
            }
            if pool_size == rows && right_size == cols {
                return Err(Error::Sampler(format!("could not build a {dim}-dimensional centre for {self}")));
            }
            pool_size = (pool_size + 1).min(rows);
            right_size = (right_size + 1).min(cols);
        }
    }
}

/// A projection centre together with the data needed to test it.
#[derive(Clone, Debug)]
pub struct ProjectionScenario {
    pub kind: ProjectionType,
    pub variety: Variety,
    pub g1: ProlongationResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    pub kind: String,
    pub dim_l: usize,
    pub image_dim: usize,
    pub kernel_dim: Option<usize>,
    pub engine: usize,
    pub formula: usize,
    /// Pairs `(psi, phi)` with `psi` from the killed prolongation and `phi`
    /// in a basis of `L`.
    pub containments_checked: usize,
    pub containments_failed: usize,
    pub pass: bool,
}

impl ProjectionScenario {
    pub fn new(kind: ProjectionType) -> Result<Self> {
        let variety = kind.variety()?;
        let g = super::cone_aut(&variety.ideal);
        let g1 = prolong(&g, 1, &ProlongOptions::exact())?;
        Ok(ProjectionScenario { kind, variety, g1 })
    }

    pub fn verify(&self, l: &Subspace, seed: u64) -> Result<ProjectionReport> {
        let kind = self.kind;
        if l.ambient_dim() != kind.ambient() {
            return Err(Error::AmbientMismatch { left: kind.ambient(), right: l.ambient_dim() });
        }
        let killed = kill_prolongation(&self.g1, l)?;
        let image_dim = kind.image(l)?.dim();
        let kernel_dim = kind.kernel(l)?.map(|k| k.dim());
        let formula = kind.formula(image_dim, kernel_dim);
        let phis = l.vectors().iter().map(|x| kind.sharp(x)).collect::<Result<Vec<_>>>()?;
        let (mut checked, mut failed) = (0, 0);
        for a in maps_of(&killed, self.variety.ambient_dim())? {
            let lambda = lambda_of(&a, &self.variety, 0, seed)?.lambda;
            match kind.psi(&lambda)? {
                Some(psi) => {
                    for phi in &phis {
                        checked += 1;
                        if !kind.in_l_of(&psi, phi)? {
                            failed += 1;
                        }
                    }
                }
                None => {
                    checked += phis.len();
                    failed += phis.len();
                }
            }
        }
        Ok(ProjectionReport {
            kind: kind.to_string(),
            dim_l: l.dim(),
            image_dim,
            kernel_dim,
            engine: killed.dim(),
            formula,
            containments_checked: checked,
            containments_failed: failed,
            pass: killed.dim() == formula && failed == 0,
        })
    }
}

/// Compares the killed prolongation with its closed form for one centre.
pub fn verify_projection_formula(kind: ProjectionType, l: &Subspace, seed: u64) -> Result<ProjectionReport> {
    ProjectionScenario::new(kind)?.verify(l, seed)
}
