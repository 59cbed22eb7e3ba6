//! Registered battery cases.

use num_traits::Zero;

use super::{arithmetic_label, BatteryOptions, Record};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::par;
use crate::probes::{self, ProjectionScenario, ProjectionType};
use crate::prolong::{self, algebra, prolong, Arithmetic, ProlongOptions, ProlongationResult};
use crate::rng;
use crate::sym::MultiIndex;
use crate::zoo::{self, VmrtExpectation, Variety};

pub struct Case {
    pub id: &'static str,
    /// The claim checked by the case.
    pub citation: &'static str,
    pub(crate) run: fn(&BatteryOptions) -> Vec<Record>,
}

pub const CASES: &[Case] = &[
    Case {
        id: "z-family",
        citation: "aut(Ẑ) = (W*⊗Q) ⋊ (gl(W) ⊕ gl(Q)) and aut(Ẑ)^(1) ≅ Sym²W* for the symplectic Grassmannian VMRT Z ⊂ P((W⊗Q) ⊕ Sym²W)",
        run: z_family,
    },
    Case {
        id: "cayley-prolong",
        citation: "aut(Ŝ)^(1) ≅ V* for the Cayley plane OP² ⊂ P²⁶ (dim 27)",
        run: cayley_prolong,
    },
    Case { id: "cone-identity", citation: "aut(Ŝ) is a Lie subalgebra of End(V) containing the scalars", run: cone_identity },
    Case { id: "empty", citation: "no checks", run: |_| Vec::new() },
    Case { id: "equivariance", citation: "(P g P⁻¹)^(k) = P · g^(k) for invertible P", run: equivariance },
    Case {
        id: "segre-section",
        citation: "aut(Ŝ)^(1) = 0 for a nonsingular hyperplane section S of Pᵃ × Pᵇ, a ≥ b ≥ 2",
        run: segre_section,
    },
    Case {
        id: "ihss-prolong",
        citation: "aut(Ŝ)^(1) ≅ g₁ ≅ V* for the VMRT S ⊂ PV of an irreducible Hermitian symmetric space",
        run: ihss_prolong,
    },
    Case { id: "k2-vanishing", citation: "aut(Ŝ)^(k) = 0 for all k ≥ 2", run: k2_vanishing },
    Case {
        id: "lambda-identity",
        citation: "A(α, α) = λ_A(α) α and λ_A(α) α′ + λ_A(α′) α = 2 A(α, α′) for α′ ∈ T_α(Ŝ)",
        run: lambda_identity,
    },
    Case {
        id: "general-point",
        citation: "aut(p_L(S)^)^(1) = 0 when the centre PL contains a general point of PV",
        run: general_point,
    },
    Case {
        id: "modp-agreement",
        citation: "prolongation dimensions over F_p agree with those over Q for good primes",
        run: modp_agreement,
    },
    Case { id: "projection-I", citation: "aut(Ŝ, L, 0)^(1) ≅ Hom(B/Im(L), Ker(L)) for S = P(A) × P(B) ⊂ P(Hom(A, B))", run: projection_i },
    Case { id: "projection-II", citation: "aut(Ŝ, L, 0)^(1) ≅ ∧²(W/Im(L))* for S = Gr(2, W) ⊂ P(∧²W)", run: projection_ii },
    Case { id: "projection-III", citation: "aut(Ŝ, L, 0)^(1) ≅ Sym²(W/Im(L))* for S = v₂(P(W)) ⊂ P(Sym²W)", run: projection_iii },
    Case {
        id: "projection-symp",
        citation: "aut(Ŝ, L₃, 0)^(1) ≅ Sym²(W/Im_W(L₂))* for the symplectic Grassmannian VMRT",
        run: projection_symp,
    },
    Case { id: "spinor-section", citation: "aut(Ẑ) = C ⊕ W ⋊ (so(Q) ⊕ C) and aut(Ẑ)^(1) = Q* for a hyperplane section Z of S₅", run: spinor_section },
    Case { id: "gr25-section", citation: "aut(Ẑ)^(1) = Q* for a hyperplane section Z of Gr(2, 5)", run: gr25_section },
    Case { id: "g1-not-one", citation: "dim aut(Ŝ)^(1) ≠ 1 for nonsingular non-degenerate S", run: g1_not_one },
    Case {
        id: "secant-table",
        citation: "dim Sec(S): 2a+2b−5 (Segre), 4n−11 (Gr(2,n)), 2n−2 (Veronese), n−1 (quadrics), 15 (S₅), 25 (OP²); dim Sec(Z) = 2m+2k−2",
        run: secant_table,
    },
    Case { id: "vmrt", citation: "VMRTs of the Hermitian symmetric spaces: Pᵃ⁻¹ × Pᵇ⁻¹, Qⁿ⁻², Gr(2,5), S₅; Veronese cones contain no lines", run: vmrt },
];

pub(crate) fn citation(id: &str) -> &'static str {
    CASES.iter().find(|c| c.id == id).map_or("", |c| c.citation)
}

const IHSS: &[&str] = &[
    "quadric(3)",
    "quadric(4)",
    "quadric(5)",
    "quadric(6)",
    "quadric(7)",
    "segre(2,2)",
    "segre(2,3)",
    "segre(3,3)",
    "veronese(1)",
    "veronese(2)",
    "veronese(3)",
    "plucker_gr2(5)",
    "plucker_gr2(6)",
    "spinor_s5",
];

/// Seed of trial `t` within a run seeded by `seed`.
fn trial_seed(seed: u64, t: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(t as u64)
}

/// Runs `f` on every instance in parallel, turning errors into failed records.
fn each(case: &'static str, ids: &[&'static str], f: impl Fn(&str) -> Result<Vec<Record>> + Sync) -> Vec<Record> {
    par::map(ids, |id| f(id).unwrap_or_else(|e| vec![Record::error(case, *id, &e)])).into_iter().flatten().collect()
}

/// `g^(k)` in the requested arithmetic, falling back to a random prime when
/// the exact system is over the unknown cap.
fn prolong_in(g: &Subspace, k: usize, opts: &BatteryOptions) -> Result<(ProlongationResult, Option<String>)> {
    let o = opts.field.options(opts.seed);
    match prolong(g, k, &o) {
        Err(Error::TooManyUnknowns { unknowns, cap }) if o.arithmetic == Arithmetic::Exact => {
            let r = prolong(g, k, &ProlongOptions::random_prime(opts.seed))?;
            Ok((r, Some(format!("{unknowns} unknowns exceed the exact cap {cap}; computed mod p"))))
        }
        other => other.map(|r| (r, None)),
    }
}

fn prolong_record(case: &str, instance: &str, quantity: &str, res: &ProlongationResult, note: Option<String>, expected: usize) -> Record {
    let mut r = Record::count(case, instance, quantity, res.dim, expected).with_k(res.k);
    r.field = arithmetic_label(res.field_used);
    r.constraint_shape = Some(res.constraint_shape);
    if let Some(n) = note {
        r = r.with_note(n);
    }
    r
}

fn exact_g1(v: &Variety) -> Result<(Subspace, ProlongationResult)> {
    let g = probes::cone_aut(&v.ideal);
    let g1 = prolong(&g, 1, &ProlongOptions::exact())?;
    Ok((g, g1))
}

fn ihss_prolong(opts: &BatteryOptions) -> Vec<Record> {
    each("ihss-prolong", IHSS, |id| {
        let v = zoo::build(id)?;
        let (res, note) = prolong_in(&probes::cone_aut(&v.ideal), 1, opts)?;
        Ok(vec![prolong_record("ihss-prolong", id, "dim g^(1) vs dim V", &res, note, v.ambient_dim())])
    })
}

fn k2_vanishing(opts: &BatteryOptions) -> Vec<Record> {
    each("k2-vanishing", IHSS, |id| {
        let v = zoo::build(id)?;
        let (res, note) = prolong_in(&probes::cone_aut(&v.ideal), 2, opts)?;
        Ok(vec![prolong_record("k2-vanishing", id, "dim g^(2)", &res, note, 0)])
    })
}

/// Coordinates of `Sym^2 Q` inside `Sym^2 (W ⊕ Q)`, `dim W = k`.
fn sym2_q(k: usize, m: usize) -> Result<Subspace> {
    let n = k + m;
    let cells: Vec<Vec<Scalar>> = MultiIndex::all(n, 2)
        .enumerate()
        .filter(|(_, mu)| mu.as_slice()[0] >= k)
        .map(|(t, _)| {
            let mut v = vec![Scalar::zero(); n * (n + 1) / 2];
            v[t] = Scalar::from_integer(1.into());
            v
        })
        .collect();
    Subspace::from_spanning(n * (n + 1) / 2, cells)
}

fn z_family(opts: &BatteryOptions) -> Vec<Record> {
    each("z-family", &["symp_vmrt(2,2)", "symp_vmrt(3,2)", "symp_vmrt(2,3)"], |id| {
        let v = zoo::build(id)?;
        let Some(zoo::Chart::Symp { k, m }) = v.chart().cloned() else {
            return Err(Error::UnknownName(id.into()));
        };
        let g = probes::cone_aut(&v.ideal);
        let (res, note) = prolong_in(&g, 1, opts)?;
        let mut out = vec![
            Record::count("z-family", id, "dim aut", g.dim(), m * m + k * m + k * k),
            prolong_record("z-family", id, "dim g^(1)", &res, note, k * (k + 1) / 2),
        ];
        // The same algebra seen upstairs, as the stabiliser of Sym^2 Q in
        // the automorphisms of the Veronese cone over P(W ⊕ Q).
        let ver = zoo::veronese(k + m - 1)?;
        let l = sym2_q(k, m)?;
        let stab = probes::stabilizer(&probes::cone_aut(&ver.ideal), &l)?;
        out.push(Record::count("z-family", id, "dim stabiliser of Sym²Q in aut(v₂(P(W⊕Q)))", stab.dim(), m * m + k * m + k * k));
        let mut worst = 0;
        for t in 0..5 {
            let a = ver.sample(trial_seed(opts.seed, t), 0)?;
            worst = worst.max(probes::tangent_space(&ver.ideal, &a)?.intersect(&l)?.dim());
        }
        out.push(Record::count("z-family", id, "max dim T_α ∩ Sym²Q over 5 points", worst, 0));
        Ok(out)
    })
}

fn hyperplane_case(case: &'static str, ids: &[&'static str], opts: &BatteryOptions) -> Vec<Record> {
    each(case, ids, |id| {
        let v = zoo::build(id)?;
        let g = probes::cone_aut(&v.ideal);
        let (res, note) = prolong_in(&g, 1, opts)?;
        let mut out = Vec::new();
        if let Some(a) = v.expected.aut {
            out.push(Record::count(case, id, "dim aut", g.dim(), a));
        }
        out.push(prolong_record(case, id, "dim g^(1)", &res, note, v.expected.g1.unwrap_or(0)));
        Ok(out)
    })
}

fn spinor_section(opts: &BatteryOptions) -> Vec<Record> {
    let mut out = hyperplane_case("spinor-section", &["s5_hyperplane"], opts);
    let extra = (|| -> Result<Vec<Record>> {
        let v = zoo::s5_hyperplane()?;
        let (g, g1) = exact_g1(&v)?;
        let mut lambdas = Vec::new();
        for a in &g1.basis {
            lambdas.push(probes::lambda_of(a, &v, 0, opts.seed)?.lambda);
        }
        let span = Subspace::from_spanning(v.ambient_dim(), lambdas)?;
        // W is the common kernel of the λ_A; it must be aut-invariant.
        let w = span.annihilator();
        let stab = probes::stabilizer(&g, &w)?;
        Ok(vec![
            Record::count("spinor-section", "s5_hyperplane", "dim span of λ_A", span.dim(), 7),
            Record::count("spinor-section", "s5_hyperplane", "dim aut-stabiliser of W = ∩ ker λ_A", stab.dim(), g.dim()),
        ])
    })();
    out.extend(extra.unwrap_or_else(|e| vec![Record::error("spinor-section", "s5_hyperplane", &e)]));
    out
}

fn gr25_section(opts: &BatteryOptions) -> Vec<Record> {
    hyperplane_case("gr25-section", &["gr25_hyperplane"], opts)
}

fn segre_section(opts: &BatteryOptions) -> Vec<Record> {
    hyperplane_case("segre-section", &["segre_hyperplane(3,3)", "segre_hyperplane(3,4)"], opts)
}

fn secant_table(opts: &BatteryOptions) -> Vec<Record> {
    let ids = &[
        "segre(2,3)",
        "segre(3,3)",
        "segre(3,4)",
        "plucker_gr2(5)",
        "plucker_gr2(6)",
        "veronese(1)",
        "veronese(2)",
        "veronese(3)",
        "quadric(4)",
        "quadric(5)",
        "quadric(6)",
        "quadric(7)",
        "spinor_s5",
        "cayley_op2",
        "symp_vmrt(3,2)",
        "symp_vmrt(2,3)",
    ];
    each("secant-table", ids, |id| {
        let v = zoo::build(id)?;
        let est = probes::terracini_secant_dim(&v, 2, opts.seed)?;
        let r = Record::new("secant-table", id, "dim Sec(S)", Some(est.dim), v.expected.secant)
            .requiring(est.agreeing, "trials disagree");
        Ok(vec![r])
    })
}

fn vmrt(opts: &BatteryOptions) -> Vec<Record> {
    let ids = &[
        "quadric(3)",
        "quadric(5)",
        "quadric(6)",
        "quadric(7)",
        "segre(2,3)",
        "segre(3,3)",
        "plucker_gr2(5)",
        "plucker_gr2(6)",
        "veronese(2)",
        "spinor_s5",
        "cayley_op2",
    ];
    each("vmrt", ids, |id| {
        let v = zoo::build(id)?;
        let got = probes::vmrt_dimension(&v, 4, opts.seed)?;
        let want = match v.expected.vmrt {
            Some(VmrtExpectation::Dim(d)) => Some(d),
            _ => None,
        };
        Ok(vec![Record::new("vmrt", id, "dim VMRT at the base point (none: no lines)", got, want)])
    })
}

fn projection(case: &'static str, kind: ProjectionType, example: Option<(&str, Vec<Vec<Scalar>>, usize)>, opts: &BatteryOptions) -> Vec<Record> {
    let inner = || -> Result<Vec<Record>> {
        let sc = ProjectionScenario::new(kind)?;
        let mut out = Vec::new();
        let instance = kind.to_string();
        if let Some((name, vectors, want)) = example {
            let l = Subspace::from_spanning(kind.ambient(), vectors)?;
            let rep = sc.verify(&l, opts.seed)?;
            out.push(
                Record::count(case, format!("{instance} {name}"), "dim killed g^(1)", rep.engine, want)
                    .requiring(rep.formula == want, "closed form disagrees")
                    .requiring(rep.containments_failed == 0, "L ⊄ L(ψ)"),
            );
        }
        let reports = par::map_range(50, |t| -> Result<_> {
            let s = trial_seed(opts.seed, t);
            let l = kind.random_l(2 + t % 3, s)?;
            sc.verify(&l, s)
        });
        let mut bad = Vec::new();
        let mut checked = 0;
        for (t, r) in reports.into_iter().enumerate() {
            let r = r?;
            checked += r.containments_checked;
            if !r.pass {
                bad.push(format!("trial {t}: engine {} formula {} containment failures {}", r.engine, r.formula, r.containments_failed));
            }
        }
        let mut rec = Record::count(case, format!("{instance} random"), "mismatches over 50 random centres", bad.len(), 0)
            .with_note(format!("{checked} containments L ⊂ L(ψ) checked"));
        if let Some(first) = bad.first() {
            rec = rec.with_note(first.clone());
        }
        out.push(rec);
        Ok(out)
    };
    inner().unwrap_or_else(|e| vec![Record::error(case, kind.to_string(), &e)])
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::from_integer(1.into());
    v
}

fn projection_i(opts: &BatteryOptions) -> Vec<Record> {
    projection("projection-I", ProjectionType::I { a: 3, b: 3 }, Some(("L = <E11>", vec![unit(9, 0)], 4)), opts)
}

fn projection_ii(opts: &BatteryOptions) -> Vec<Record> {
    projection("projection-II", ProjectionType::II { n: 6 }, Some(("L = <e1∧e2>", vec![unit(15, 0)], 6)), opts)
}

fn projection_iii(opts: &BatteryOptions) -> Vec<Record> {
    projection("projection-III", ProjectionType::III { n: 4 }, Some(("L = <e1²>", vec![unit(10, 0)], 6)), opts)
}

fn projection_symp(opts: &BatteryOptions) -> Vec<Record> {
    let (k, m) = (3, 2);
    let mut r = rng::rng(opts.seed, 0x5e);
    let w = rng::int_vector(&mut r, k, 3);
    let q: Vec<Scalar> = (0..m).map(|_| rng::small_nonzero(&mut r, 3)).collect();
    let mut w = w;
    if w.iter().all(Zero::is_zero) {
        w[0] = Scalar::from_integer(1.into());
    }
    let phi: Vec<Scalar> = MultiIndex::all(k + m, 2)
        .filter(|mu| mu.as_slice()[0] < k)
        .map(|mu| {
            let (i, j) = (mu.as_slice()[0], mu.as_slice()[1]);
            if j >= k {
                &w[i] * &q[j - k]
            } else {
                Scalar::zero()
            }
        })
        .collect();
    projection("projection-symp", ProjectionType::Symp { k, m }, Some(("L = <w⊗q>", vec![phi], 3)), opts)
}

fn general_point(opts: &BatteryOptions) -> Vec<Record> {
    each("general-point", &["veronese(2)", "segre(2,3)", "symp_vmrt(3,2)", "plucker_gr2(6)"], |id| {
        let v = zoo::build(id)?;
        let kind = ProjectionType::for_variety(&v).ok_or_else(|| Error::UnknownName(id.into()))?;
        let (_, g1) = exact_g1(&v)?;
        let n = v.ambient_dim();
        let runs = par::map_range(20, |t| -> Result<(usize, usize)> {
            let mut r = rng::rng(trial_seed(opts.seed, t), 0x6e);
            // A general point has a matrix of maximal rank; points failing
            // that are redrawn and counted.
            let mut redraws = 0;
            let l = loop {
                let l = Subspace::from_spanning(n, vec![rng::int_vector(&mut r, n, 5)])?;
                if kind.image(&l)?.dim() == kind.image_ambient() {
                    break l;
                }
                redraws += 1;
            };
            Ok((probes::kill_prolongation(&g1, &l)?.dim(), redraws))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let worst = runs.iter().map(|r| r.0).max().unwrap_or(0);
        let redraws: usize = runs.iter().map(|r| r.1).sum();
        Ok(vec![Record::count("general-point", id, "max dim killed g^(1) over 20 general points", worst, 0)
            .with_note(format!("{redraws} points of non-maximal rank redrawn"))])
    })
}

fn g1_not_one(opts: &BatteryOptions) -> Vec<Record> {
    let mut ids: Vec<&'static str> = zoo::CATALOG.to_vec();
    ids.push("segre_hyperplane(3,4)");
    each("g1-not-one", &ids, |id| {
        let v = zoo::build(id)?;
        let (res, note) = prolong_in(&probes::cone_aut(&v.ideal), 1, opts)?;
        Ok(vec![prolong_record("g1-not-one", id, "dim g^(1)", &res, note, 1).differs()])
    })
}

fn cone_identity(_: &BatteryOptions) -> Vec<Record> {
    each("cone-identity", zoo::CATALOG, |id| {
        let v = zoo::build(id)?;
        let g = probes::cone_aut(&v.ideal);
        Ok(vec![
            Record::count("cone-identity", id, "identity in aut", probes::contains_identity(&g)? as usize, 1),
            Record::count("cone-identity", id, "aut closed under bracket", algebra::is_lie_subalgebra(&g)? as usize, 1),
        ])
    })
}

fn lambda_identity(opts: &BatteryOptions) -> Vec<Record> {
    let ids = &[
        "quadric(3)",
        "quadric(4)",
        "quadric(5)",
        "quadric(6)",
        "veronese(2)",
        "segre(2,3)",
        "plucker_gr2(5)",
        "symp_vmrt(3,2)",
        "s5_hyperplane",
        "gr25_hyperplane",
    ];
    each("lambda-identity", ids, |id| {
        let v = zoo::build(id)?;
        let (_, g1) = exact_g1(&v)?;
        let mut failures = 0;
        let mut pairs = 0;
        for (s, a) in g1.basis.iter().enumerate() {
            let rep = probes::lambda_of(a, &v, 20, trial_seed(opts.seed, s))?;
            failures += rep.failures;
            pairs += rep.pairs_checked;
        }
        Ok(vec![Record::count("lambda-identity", id, "pairs with nonzero residual", failures, 0)
            .with_note(format!("{} basis elements, {pairs} pairs", g1.basis.len()))])
    })
}

fn modp_agreement(opts: &BatteryOptions) -> Vec<Record> {
    each("modp-agreement", IHSS, |id| {
        let v = zoo::build(id)?;
        let g = probes::cone_aut(&v.ideal);
        let mut out = Vec::new();
        for k in 1..=2 {
            let exact = prolong(&g, k, &ProlongOptions::exact())?;
            let p1 = prolong(&g, k, &ProlongOptions::random_prime(opts.seed))?;
            let p2 = prolong(&g, k, &ProlongOptions::random_prime(opts.seed.wrapping_add(1)))?;
            let mut r = prolong_record("modp-agreement", id, "dim g^(k) mod p vs exact", &p1, None, exact.dim)
                .requiring(p1.dim == p2.dim, "primes disagree");
            r.field = format!("{} {}", arithmetic_label(p1.field_used), arithmetic_label(p2.field_used));
            out.push(r);
        }
        Ok(out)
    })
}

/// A random invertible integer matrix.
fn random_invertible(n: usize, seed: u64) -> Matrix {
    let mut r = rng::rng(seed, 0xc0);
    loop {
        let rows = (0..n).map(|_| rng::int_vector(&mut r, n, 3)).collect();
        let p = Matrix::from_rows(n, rows);
        if p.inverse().is_ok() {
            return p;
        }
    }
}

fn equivariance(opts: &BatteryOptions) -> Vec<Record> {
    each("equivariance", &["co(3)", "co(4)", "so(4)", "gl(2)", "aut(segre(2,2))"], |id| {
        let g = match id.strip_prefix("aut(").and_then(|s| s.strip_suffix(')')) {
            Some(v) => probes::cone_aut(&zoo::build(v)?.ideal),
            None => algebra::by_name(id)?,
        };
        let n = algebra::side(&g)?;
        let res = prolong(&g, 1, &ProlongOptions::exact())?;
        let mut bad = 0;
        for t in 0..10 {
            let p = random_invertible(n, trial_seed(opts.seed, t));
            let moved = prolong::transform_result(&res, &p)?;
            let direct = prolong(&algebra::conjugate(&g, &p)?, 1, &ProlongOptions::exact())?;
            if direct.space.as_ref() != Some(&moved) {
                bad += 1;
            }
        }
        Ok(vec![Record::count("equivariance", id, "conjugations breaking equivariance (of 10)", bad, 0).with_k(1)])
    })
}

fn cayley_prolong(opts: &BatteryOptions) -> Vec<Record> {
    each("cayley-prolong", &["cayley_op2"], |id| {
        let v = zoo::build(id)?;
        let g = probes::cone_aut(&v.ideal);
        let p1 = prolong(&g, 1, &ProlongOptions::random_prime(opts.seed))?;
        let p2 = prolong(&g, 1, &ProlongOptions::random_prime(opts.seed.wrapping_add(1)))?;
        let mut r = prolong_record("cayley-prolong", id, "dim g^(1) over two primes", &p1, None, 27)
            .requiring(p1.dim == p2.dim, "primes disagree");
        r.field = format!("{} {}", arithmetic_label(p1.field_used), arithmetic_label(p2.field_used));
        Ok(vec![Record::count("cayley-prolong", id, "dim aut", g.dim(), 79), r])
    })
}
