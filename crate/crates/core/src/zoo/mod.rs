//! The named varieties, each presented as a cone cut out by quadrics with a
//! seeded rational sampler and a base point.

mod chart;
mod ideal;
pub mod json;
pub mod octonion;
mod section;

use num_traits::Zero;
use serde::Serialize;

pub use chart::{pair_index, wedge, Chart, Lines};
pub use ideal::QuadraticIdeal;
pub use section::{hyperplane_section, random_section_covector, Section};

use crate::error::{Error, Result};
use crate::linalg::{Scalar, Subspace};
use crate::rng::{self, SeededRng};
use crate::sym::sym_dim;
use crate::par;

/// Extra samples beyond `dim Sym^2 V*` used when extracting quadrics.
pub const SAMPLE_MARGIN: usize = 20;

/// Fixed seed for the covectors of the named hyperplane sections.
pub const SECTION_SEED: u64 = 0x5ec7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VmrtExpectation {
    Dim(usize),
    NoLines,
}

/// Dimension data known in advance for a variety.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub dim: Option<usize>,
    pub secant: Option<usize>,
    pub aut: Option<usize>,
    pub g1: Option<usize>,
    pub vmrt: Option<VmrtExpectation>,
}

#[derive(Clone, Debug)]
pub enum Sampler {
    Chart(Chart),
    Section(Section),
    Explicit(Vec<Vec<Scalar>>),
}

#[derive(Clone, Debug)]
pub struct Variety {
    pub id: String,
    pub ambient: usize,
    pub ideal: QuadraticIdeal,
    pub base_point: Vec<Scalar>,
    pub sampler: Sampler,
    pub expected: Expected,
}

impl Variety {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Point number `index` of the stream `seed`; a pure function of both.
    pub fn sample(&self, seed: u64, index: u64) -> Result<Vec<Scalar>> {
        match &self.sampler {
            Sampler::Chart(c) => {
                let mut r = rng::rng(seed, index);
                let z = c.sample_params(&mut r);
                let s = rng::small_nonzero(&mut r, 3);
                Ok(c.eval(&z).into_iter().map(|x| x * &s).collect())
            }
            Sampler::Section(s) => s.sample(seed, index),
            Sampler::Explicit(points) => points.get(index as usize).cloned().ok_or_else(|| {
                Error::Sampler(format!("{} has only {} explicit sample points, index {index} requested", self.id, points.len()))
            }),
        }
    }

    pub fn sample_points(&self, count: usize, seed: u64) -> Result<Vec<Vec<Scalar>>> {
        par::map_range(count, |i| self.sample(seed, i as u64)).into_iter().collect()
    }

    pub fn check_point(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        self.ideal.check_point(v)
    }

    /// Chart of the variety, if it is parametrised by one.
    pub fn chart(&self) -> Option<&Chart> {
        match &self.sampler {
            Sampler::Chart(c) => Some(c),
            _ => None,
        }
    }

    /// Direction `v` of a random line through the base point, `None` when
    /// the variety provably contains no line through it.
    pub fn line_direction(&self, r: &mut SeededRng) -> Result<Option<Vec<Scalar>>> {
        let Some(c) = self.chart() else {
            return Err(Error::NoLineSampler(self.id.clone()));
        };
        match c.line_direction(r)? {
            Lines::NoLines => Ok(None),
            Lines::Direction(eta) => Ok(Some(c.split(&eta).0)),
        }
    }

    /// Span of a batch of sample points.
    pub fn sample_span(&self, count: usize, seed: u64) -> Result<Subspace> {
        Subspace::from_spanning(self.ambient, self.sample_points(count, seed)?)
    }
}

fn from_chart(id: String, chart: Chart, expected: Expected) -> Result<Variety> {
    let n = chart.ambient();
    let base_point = chart.base_point();
    let mut v = Variety {
        id,
        ambient: n,
        ideal: QuadraticIdeal::from_forms(n, Vec::new())?,
        base_point,
        sampler: Sampler::Chart(chart),
        expected,
    };
    v.ideal = quadrics_from_samples(&v, sym_dim(n, 2) + SAMPLE_MARGIN, 0)?;
    Ok(v)
}

/// Quadrics vanishing on `count` sampled points.
pub fn quadrics_from_samples(v: &Variety, count: usize, seed: u64) -> Result<QuadraticIdeal> {
    let pts = v.sample_points(count, seed)?;
    QuadraticIdeal::from_samples(v.ambient, &pts)
}

fn invalid(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParameters { name: name.to_string(), reason: reason.into() }
}

/// Second Veronese embedding of `P^p`.
pub fn veronese(p: usize) -> Result<Variety> {
    if p < 1 {
        return Err(invalid("veronese", "p must be at least 1"));
    }
    let expected = Expected {
        dim: Some(p),
        secant: Some(2 * p),
        aut: Some((p + 1) * (p + 1)),
        g1: Some(sym_dim(p + 1, 2)),
        vmrt: Some(VmrtExpectation::NoLines),
    };
    from_chart(format!("veronese({p})"), Chart::Veronese { p }, expected)
}

/// `P^(a-1) x P^(b-1)` in `P(Q^a ⊗ Q^b)`.
pub fn segre(a: usize, b: usize) -> Result<Variety> {
    if a < 1 || b < 1 || a * b < 2 {
        return Err(invalid("segre", "need a, b >= 1 and ab >= 2"));
    }
    let proper = a >= 2 && b >= 2;
    let expected = Expected {
        dim: Some(a + b - 2),
        secant: proper.then(|| (2 * a + 2 * b - 5).min(a * b - 1)),
        aut: proper.then(|| a * a + b * b - 1),
        g1: proper.then_some(a * b),
        vmrt: proper.then(|| VmrtExpectation::Dim(a.max(b) - 2)),
    };
    from_chart(format!("segre({a},{b})"), Chart::Segre { a, b }, expected)
}

/// `Gr(2, m)` in its Plücker embedding.
pub fn plucker_gr2(m: usize) -> Result<Variety> {
    if m < 4 {
        return Err(invalid("plucker_gr2", "m must be at least 4"));
    }
    let n = m * (m - 1) / 2;
    let expected = Expected {
        dim: Some(2 * (m - 2)),
        secant: Some((4 * m - 11).min(n - 1)),
        aut: Some(m * m),
        g1: Some(n),
        vmrt: Some(VmrtExpectation::Dim(m - 2)),
    };
    from_chart(format!("plucker_gr2({m})"), Chart::Grassmannian { m }, expected)
}

/// The smooth quadric `Q^(n-2) ⊂ P^(n-1)` of the split form.
pub fn quadric(n: usize) -> Result<Variety> {
    if n < 3 {
        return Err(invalid("quadric", "n must be at least 3"));
    }
    let expected = Expected {
        dim: Some(n - 2),
        secant: Some(n - 1),
        aut: Some(n * (n - 1) / 2 + 1),
        g1: Some(n),
        vmrt: Some(if n == 3 { VmrtExpectation::NoLines } else { VmrtExpectation::Dim(n - 4) }),
    };
    from_chart(format!("quadric({n})"), Chart::Quadric { n }, expected)
}

/// The ten-dimensional spinor variety in `P^15`.
pub fn spinor_s5() -> Result<Variety> {
    let expected = Expected { dim: Some(10), secant: Some(15), aut: Some(46), g1: Some(16), vmrt: Some(VmrtExpectation::Dim(6)) };
    from_chart("spinor_s5".into(), Chart::Spinor, expected)
}

/// The Cayley plane in `P^26`.
pub fn cayley_op2() -> Result<Variety> {
    let expected = Expected { dim: Some(16), secant: Some(25), aut: Some(79), g1: Some(27), vmrt: Some(VmrtExpectation::Dim(10)) };
    from_chart("cayley_op2".into(), Chart::Cayley, expected)
}

/// `Z = {[w ⊗ q + w^2]} ⊂ P((W ⊗ Q) ⊕ Sym^2 W)`, `dim W = k`, `dim Q = m`.
pub fn symp_vmrt(k: usize, m: usize) -> Result<Variety> {
    if k < 2 || m < 1 {
        return Err(invalid("symp_vmrt", "need k >= 2 and m >= 1"));
    }
    let expected = Expected {
        dim: Some(k - 1 + m),
        secant: Some(2 * m + 2 * k - 2),
        aut: Some(m * m + k * m + k * k),
        g1: Some(k * (k + 1) / 2),
        vmrt: None,
    };
    from_chart(format!("symp_vmrt({k},{m})"), Chart::Symp { k, m }, expected)
}

fn named_section(parent: Variety, id: String, expected: Expected) -> Result<Variety> {
    let lambda = random_section_covector(&parent, SECTION_SEED)?;
    let mut v = hyperplane_section(&parent, &lambda)?;
    v.id = id;
    v.expected = expected;
    Ok(v)
}

/// A hyperplane section of the spinor tenfold.
pub fn s5_hyperplane() -> Result<Variety> {
    let expected = Expected { dim: Some(9), aut: Some(31), g1: Some(7), ..Expected::default() };
    named_section(spinor_s5()?, "s5_hyperplane".into(), expected)
}

/// A hyperplane section of `Gr(2, 5)`, the symplectic Grassmannian.
pub fn gr25_hyperplane() -> Result<Variety> {
    let expected = Expected { dim: Some(5), aut: Some(16), g1: Some(5), ..Expected::default() };
    named_section(plucker_gr2(5)?, "gr25_hyperplane".into(), expected)
}

/// A hyperplane section of the Segre variety.
pub fn segre_hyperplane(a: usize, b: usize) -> Result<Variety> {
    if a < 2 || b < 2 || a + b < 5 {
        return Err(invalid("segre_hyperplane", "need a, b >= 2 and a + b >= 5"));
    }
    let expected = Expected { dim: Some(a + b - 3), g1: Some(0), ..Expected::default() };
    named_section(segre(a, b)?, format!("segre_hyperplane({a},{b})"), expected)
}

fn parse_args(id: &str) -> Result<(String, Vec<usize>)> {
    let id = id.trim();
    let Some((head, rest)) = id.split_once('(') else {
        return Ok((id.to_string(), Vec::new()));
    };
    let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnknownName(id.to_string()))?;
    let args = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|s| s.trim().parse::<usize>()).collect::<std::result::Result<_, _>>().map_err(|_| Error::UnknownName(id.to_string()))?
    };
    Ok((head.trim().to_string(), args))
}

/// Builds a variety from an id such as `segre(2,3)` or `spinor_s5`.
pub fn build(id: &str) -> Result<Variety> {
    let (name, args) = parse_args(id)?;
    let bad = || Error::UnknownName(id.to_string());
    match (name.as_str(), args.as_slice()) {
        ("veronese", [p]) => veronese(*p),
        ("segre", [a, b]) => segre(*a, *b),
        ("plucker_gr2", [m]) => plucker_gr2(*m),
        ("quadric", [n]) => quadric(*n),
        ("spinor_s5", []) => spinor_s5(),
        ("cayley_op2", []) => cayley_op2(),
        ("symp_vmrt", [k, m]) => symp_vmrt(*k, *m),
        ("s5_hyperplane", []) => s5_hyperplane(),
        ("gr25_hyperplane", []) => gr25_hyperplane(),
        ("segre_hyperplane", [a, b]) => segre_hyperplane(*a, *b),
        _ => Err(bad()),
    }
}

/// Families and their parameter conventions, for listings.
pub const FAMILIES: &[(&str, &str)] = &[
    ("veronese(p)", "v2(P^p) in P(Sym^2 Q^(p+1)), p >= 1"),
    ("segre(a,b)", "P^(a-1) x P^(b-1) in P(Q^a ⊗ Q^b)"),
    ("plucker_gr2(m)", "Gr(2, m) in P(Λ^2 Q^m), m >= 4"),
    ("quadric(n)", "smooth split quadric in P^(n-1), n >= 3"),
    ("spinor_s5", "spinor tenfold in P^15"),
    ("cayley_op2", "Cayley plane in P^26 over the split octonions"),
    ("symp_vmrt(k,m)", "Z in P((W ⊗ Q) ⊕ Sym^2 W), dim W = k >= 2, dim Q = m >= 1"),
    ("s5_hyperplane", "hyperplane section of spinor_s5"),
    ("gr25_hyperplane", "hyperplane section of plucker_gr2(5)"),
    ("segre_hyperplane(a,b)", "hyperplane section of segre(a,b)"),
];

/// Instances exercised by the default listing and `variety check`.
pub const CATALOG: &[&str] = &[
    "veronese(1)",
    "veronese(2)",
    "veronese(3)",
    "segre(2,2)",
    "segre(2,3)",
    "segre(3,3)",
    "plucker_gr2(5)",
    "plucker_gr2(6)",
    "quadric(3)",
    "quadric(4)",
    "quadric(5)",
    "quadric(6)",
    "quadric(7)",
    "spinor_s5",
    "cayley_op2",
    "symp_vmrt(2,2)",
    "symp_vmrt(3,2)",
    "symp_vmrt(2,3)",
    "s5_hyperplane",
    "gr25_hyperplane",
    "segre_hyperplane(3,3)",
];

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}
