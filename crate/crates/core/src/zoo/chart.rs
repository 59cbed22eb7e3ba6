//! Rational affine charts `phi: Q^d -> V` of the zoo varieties.
//!
//! Every chart is quadratic, `phi(z) = a + L z + Q(z)` with `phi(0)` the base
//! point, so a line through the base point is `t -> phi(t eta)` for any
//! `eta` with `Q(eta) = 0`.

use num_traits::{One, Zero};

use super::octonion::{Hermitian, Octonion, Quaternion};
use crate::error::Result;
use crate::linalg::Scalar;
use crate::rng::{self, SeededRng};
use crate::sym::{binomial, sym_dim, MultiIndex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chart {
    /// `w -> w^2` on `Q^(p+1)`, `w = (1, z)`.
    Veronese { p: usize },
    /// `(u, w) -> u w^T`, index `i * b + j`.
    Segre { a: usize, b: usize },
    /// Plücker coordinates of `span(e0 + s, e1 + t)`.
    Grassmannian { m: usize },
    /// Null vectors of the split form `sum x_i x_(n-1-i)`.
    Quadric { n: usize },
    /// `(1, omega, omega ^ omega / 2)` for `omega in Λ^2 Q^5`.
    Spinor,
    /// Rank-one Hermitian matrices over the split octonions.
    Cayley,
    /// `(w^2, w q)` inside `Sym^2 (W + Q)` with the `Q`-`Q` block removed.
    Symp { k: usize, m: usize },
}

/// What the line sampler knows about lines through the base point.
pub enum Lines {
    /// A direction `eta` with `Q(eta) = 0`, `eta != 0`.
    Direction(Vec<Scalar>),
    /// The chart's quadratic part has no nonzero null direction.
    NoLines,
}

/// Index of the pair `i < j` among strict pairs.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    binomial(j, 2) + i
}

fn one() -> Scalar {
    Scalar::one()
}

fn int(x: i64) -> Scalar {
    Scalar::from_integer(x.into())
}

impl Chart {
    pub fn params(&self) -> usize {
        match *self {
            Chart::Veronese { p } => p,
            Chart::Segre { a, b } => a + b - 2,
            Chart::Grassmannian { m } => 2 * (m - 2),
            Chart::Quadric { n } => n - 2,
            Chart::Spinor => 10,
            Chart::Cayley => 16,
            Chart::Symp { k, m } => k - 1 + m,
        }
    }

    pub fn ambient(&self) -> usize {
        match *self {
            Chart::Veronese { p } => sym_dim(p + 1, 2),
            Chart::Segre { a, b } => a * b,
            Chart::Grassmannian { m } => binomial(m, 2),
            Chart::Quadric { n } => n,
            Chart::Spinor => 16,
            Chart::Cayley => 27,
            Chart::Symp { k, m } => k * m + sym_dim(k, 2),
        }
    }

    pub fn eval(&self, z: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(z.len(), self.params(), "chart parameter count");
        match *self {
            Chart::Veronese { .. } => {
                let w: Vec<Scalar> = std::iter::once(one()).chain(z.iter().cloned()).collect();
                MultiIndex::all(w.len(), 2).map(|mu| &w[mu.as_slice()[0]] * &w[mu.as_slice()[1]]).collect()
            }
            Chart::Segre { a, b } => {
                let u: Vec<Scalar> = std::iter::once(one()).chain(z[..a - 1].iter().cloned()).collect();
                let w: Vec<Scalar> = std::iter::once(one()).chain(z[a - 1..].iter().cloned()).collect();
                let mut x = Vec::with_capacity(a * b);
                for ui in &u {
                    for wj in &w {
                        x.push(ui * wj);
                    }
                }
                x
            }
            Chart::Grassmannian { m } => {
                let mut u = vec![Scalar::zero(); m];
                let mut v = vec![Scalar::zero(); m];
                u[0] = one();
                v[1] = one();
                for k in 2..m {
                    u[k] = z[k - 2].clone();
                    v[k] = z[m - 2 + k - 2].clone();
                }
                wedge(&u, &v)
            }
            Chart::Quadric { n } => {
                let mut x = vec![Scalar::zero(); n];
                x[0] = one();
                x[1..n - 1].clone_from_slice(z);
                x[n - 1] = -split_value(z) / int(2);
                x
            }
            Chart::Spinor => {
                let mut x = vec![Scalar::zero(); 16];
                x[0] = one();
                x[1..11].clone_from_slice(z);
                let w = |i: usize, j: usize| &z[pair_index(i, j)];
                for missing in 0..5 {
                    let r: Vec<usize> = (0..5).filter(|&i| i != missing).collect();
                    let (a, b, c, d) = (r[0], r[1], r[2], r[3]);
                    x[11 + missing] = w(a, b) * w(c, d) - w(a, c) * w(b, d) + w(a, d) * w(b, c);
                }
                x
            }
            Chart::Cayley => {
                let c2 = Octonion::from_slice(&z[..8]);
                let c3 = Octonion::from_slice(&z[8..]);
                Hermitian { a: [one(), c3.norm(), c2.norm()], c: [c2.mul(&c3).conj(), c2, c3] }.coords()
            }
            Chart::Symp { k, m } => {
                let mut y = vec![Scalar::zero(); k + m];
                y[0] = one();
                y[1..].clone_from_slice(z);
                MultiIndex::all(k + m, 2)
                    .filter(|mu| mu.as_slice()[0] < k)
                    .map(|mu| &y[mu.as_slice()[0]] * &y[mu.as_slice()[1]])
                    .collect()
            }
        }
    }

    pub fn base_point(&self) -> Vec<Scalar> {
        self.eval(&vec![Scalar::zero(); self.params()])
    }

    /// `(L eta, Q(eta))` recovered from `phi(eta)` and `phi(-eta)`.
    pub fn split(&self, eta: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let plus = self.eval(eta);
        let neg: Vec<Scalar> = eta.iter().map(|x| -x).collect();
        let minus = self.eval(&neg);
        let base = self.base_point();
        let half = Scalar::new(1.into(), 2.into());
        let lin = plus.iter().zip(&minus).map(|(p, m)| (p - m) * &half).collect();
        let quad = plus.iter().zip(&minus).zip(&base).map(|((p, m), a)| (p + m) * &half - a).collect();
        (lin, quad)
    }

    pub fn sample_params(&self, rng: &mut SeededRng) -> Vec<Scalar> {
        rng::int_vector(rng, self.params(), 4)
    }

    /// A random null direction of the quadratic part, when one exists.
    pub fn line_direction(&self, r: &mut SeededRng) -> Result<Lines> {
        if self.params() == 0 {
            return Ok(Lines::NoLines);
        }
        let eta = match *self {
            Chart::Veronese { .. } => return Ok(Lines::NoLines),
            Chart::Quadric { n } if n <= 3 => return Ok(Lines::NoLines),
            Chart::Quadric { n } => {
                let d = n - 2;
                let mut z = rng::int_vector(r, d, 4);
                z[d - 1] = rng::small_nonzero(r, 4);
                z[0] = Scalar::zero();
                let rest = split_value(&z);
                z[0] = -rest / (int(2) * &z[d - 1]);
                z
            }
            Chart::Segre { a, b } => {
                let mut z = vec![Scalar::zero(); a + b - 2];
                let (lo, hi) = if (a > 1 && rand::Rng::gen_bool(r, 0.5)) || b == 1 { (0, a - 1) } else { (a - 1, a + b - 2) };
                for x in &mut z[lo..hi] {
                    *x = rng::small_int(r, 4);
                }
                z
            }
            Chart::Grassmannian { m } => {
                let dir = rng::int_vector(r, m - 2, 4);
                let (s, t) = (rng::small_int(r, 3), rng::small_int(r, 3));
                dir.iter().map(|x| x * &s).chain(dir.iter().map(|x| x * &t)).collect()
            }
            Chart::Spinor => {
                let u = rng::int_vector(r, 5, 3);
                let v = rng::int_vector(r, 5, 3);
                wedge(&u, &v)
            }
            Chart::Cayley => {
                let a = Quaternion(std::array::from_fn(|_| rng::small_int(r, 3)));
                let c = Quaternion(std::array::from_fn(|_| rng::small_int(r, 3)));
                let nc = c.norm();
                if nc.is_zero() {
                    vec![Scalar::zero(); 16]
                } else {
                    let b = a.mul(&c.mul(&c)).scale(&nc.recip());
                    let c2 = Octonion(a, b);
                    let w = Octonion::from_slice(&rng::int_vector(r, 8, 3));
                    let c3 = c2.conj().mul(&w);
                    c2.coords().into_iter().chain(c3.coords()).collect()
                }
            }
            Chart::Symp { k, m } => {
                let mut z = vec![Scalar::zero(); k - 1 + m];
                for x in &mut z[k - 1..] {
                    *x = rng::small_int(r, 4);
                }
                z
            }
        };
        if eta.iter().all(Zero::is_zero) {
            return self.line_direction(r);
        }
        Ok(Lines::Direction(eta))
    }
}

/// `sum z_i z_(d-1-i)`.
fn split_value(z: &[Scalar]) -> Scalar {
    let d = z.len();
    (0..d).map(|i| &z[i] * &z[d - 1 - i]).sum()
}

/// Plücker coordinates `u_i v_j - u_j v_i`, `i < j`.
pub fn wedge(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let m = u.len();
    let mut x = vec![Scalar::zero(); binomial(m, 2)];
    for j in 0..m {
        for i in 0..j {
            x[pair_index(i, j)] = &u[i] * &v[j] - &u[j] * &v[i];
        }
    }
    x
}
