//! Hyperplane sections through the base point.
//!
//! Points of `S ∩ H` are drawn from the parent chart by a stereographic
//! trick: along the curve `t -> phi(t eta) = a + t L eta + t^2 Q(eta)` the
//! covector gives `t (lambda(L eta) + t lambda(Q eta))`, whose nonzero root is
//! rational.

use num_traits::Zero;

use super::{is_zero_vec, Chart, Expected, Sampler, Variety};
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix, Scalar};
use crate::rng;

const ATTEMPTS: u64 = 64;

#[derive(Clone, Debug)]
pub struct Section {
    chart: Chart,
    lambda: Vec<Scalar>,
    /// Parent coordinates kept as coordinates of `ker lambda`.
    keep: Vec<usize>,
}

impl Section {
    pub fn lambda(&self) -> &[Scalar] {
        &self.lambda
    }

    pub fn kept_coordinates(&self) -> &[usize] {
        &self.keep
    }

    pub fn parent_chart(&self) -> &Chart {
        &self.chart
    }

    /// The inclusion `ker lambda -> V` in section coordinates.
    pub fn embedding(&self) -> Matrix {
        embedding(&self.lambda, &self.keep)
    }

    pub fn sample(&self, seed: u64, index: u64) -> Result<Vec<Scalar>> {
        for attempt in 0..ATTEMPTS {
            let mut r = rng::rng(seed, index * ATTEMPTS + attempt);
            let eta = self.chart.sample_params(&mut r);
            let (lin, quad) = self.chart.split(&eta);
            let (a, b) = (dot(&self.lambda, &lin), dot(&self.lambda, &quad));
            if b.is_zero() || a.is_zero() {
                continue;
            }
            let t = -a / b;
            let z: Vec<Scalar> = eta.iter().map(|x| x * &t).collect();
            let x = self.chart.eval(&z);
            let s = rng::small_nonzero(&mut r, 3);
            return Ok(self.keep.iter().map(|&i| &x[i] * &s).collect());
        }
        Err(Error::Sampler(format!("no section point after {ATTEMPTS} attempts at index {index}")))
    }
}

fn embedding(lambda: &[Scalar], keep: &[usize]) -> Matrix {
    let n = lambda.len();
    let j = (0..n).find(|i| !keep.contains(i)).expect("one coordinate is dropped");
    let mut e = Matrix::zeros(n, keep.len());
    for (c, &o) in keep.iter().enumerate() {
        e[(o, c)] = Scalar::from_integer(1.into());
        e[(j, c)] = -(&lambda[o] / &lambda[j]);
    }
    e
}

/// A random integer covector vanishing on the base point's support.
pub fn random_section_covector(parent: &Variety, seed: u64) -> Result<Vec<Scalar>> {
    let mut r = rng::rng(seed, 0x1a3b);
    for _ in 0..ATTEMPTS {
        let lambda: Vec<Scalar> = parent
            .base_point
            .iter()
            .map(|b| if b.is_zero() { rng::small_int(&mut r, 3) } else { Scalar::zero() })
            .collect();
        if !is_zero_vec(&lambda) {
            return Ok(lambda);
        }
    }
    Err(Error::DegenerateSection)
}

/// `S ∩ ker lambda`, in coordinates of `ker lambda` obtained by dropping the
/// last coordinate on which `lambda` is nonzero.
pub fn hyperplane_section(parent: &Variety, lambda: &[Scalar]) -> Result<Variety> {
    let n = parent.ambient;
    if lambda.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: lambda.len() });
    }
    let Some(chart) = parent.chart().cloned() else {
        return Err(Error::Sampler(format!("{} has no chart to slice", parent.id)));
    };
    let Some(j) = (0..n).rev().find(|&i| !lambda[i].is_zero()) else {
        return Err(Error::InvalidParameters { name: "hyperplane_section".into(), reason: "covector is zero".into() });
    };
    if !dot(lambda, &parent.base_point).is_zero() {
        return Err(Error::InvalidParameters {
            name: "hyperplane_section".into(),
            reason: "covector must vanish at the base point".into(),
        });
    }
    let probe = parent.sample_points(n + 5, 0x0dd)?;
    if probe.iter().all(|p| dot(lambda, p).is_zero()) {
        return Err(Error::DegenerateSection);
    }
    let keep: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    let e = embedding(lambda, &keep);
    let ideal = parent.ideal.restrict(&e)?;
    let base_point = keep.iter().map(|&i| parent.base_point[i].clone()).collect();
    let expected = Expected { dim: parent.expected.dim.map(|d| d - 1), ..Expected::default() };
    Ok(Variety {
        id: format!("section({})", parent.id),
        ambient: n - 1,
        ideal,
        base_point,
        sampler: Sampler::Section(Section { chart, lambda: lambda.to_vec(), keep }),
        expected,
    })
}
