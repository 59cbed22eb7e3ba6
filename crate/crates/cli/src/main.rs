//! `prolab`: prolongations, cone automorphisms and the claim battery from
//! the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use prolab::linalg::Subspace;
use prolab::probes::{self, ProjectionScenario, ProjectionType};
use prolab::prolong::{algebra, Arithmetic, ProlongOptions, DEFAULT_UNKNOWN_CAP};
use prolab::report::{self, BatteryOptions, FieldMode, Format};
use prolab::zoo::{self, json, Variety};
use prolab::{prolong, Error, SymMultiMap};

#[derive(Parser)]
#[command(name = "prolab", version, about = "Exact prolongations of linear Lie algebras and projective cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Named and custom varieties.
    #[command(subcommand)]
    Variety(VarietyCmd),
    /// Dimension of the k-th prolongation of a matrix algebra or of aut(Ŝ).
    Prolong(ProlongArgs),
    /// Secant dimension by Terracini's lemma.
    Secant {
        #[arg(long)]
        variety: String,
        #[arg(long, default_value_t = 2)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dimension of the variety of lines through the base point.
    Vmrt {
        #[arg(long)]
        variety: String,
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Prolongation killing a projection centre, against its closed form.
    Project(ProjectArgs),
    /// Runs registered cases and writes a report.
    Battery(BatteryArgs),
}

#[derive(Subcommand)]
enum VarietyCmd {
    /// Lists families and catalogue instances.
    List,
    /// Prints a variety as JSON.
    Show {
        variety: String,
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verifies samples and the recorded dimensions of a variety.
    Check {
        variety: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Exact,
    Modp,
}

#[derive(Args)]
struct ProlongArgs {
    /// `gl(n)`, `so(n)` or `co(n)`.
    #[arg(long, conflicts_with = "variety", required_unless_present = "variety")]
    algebra: Option<String>,
    /// Catalogue id or JSON file; the algebra is aut(Ŝ).
    #[arg(long)]
    variety: Option<String>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum, default_value = "exact")]
    field: FieldArg,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest exact system, in unknowns; larger ones switch to mod p.
    #[arg(long, default_value_t = DEFAULT_UNKNOWN_CAP)]
    cap: usize,
}

#[derive(Args)]
struct ProjectArgs {
    #[arg(long)]
    variety: String,
    /// Dimension of a random centre.
    #[arg(long, conflicts_with = "l_file", required_unless_present = "l_file")]
    l_random: Option<usize>,
    /// JSON file `{"vectors": [[...], ...]}` spanning the centre.
    #[arg(long)]
    l_file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct BatteryArgs {
    /// Comma-separated case ids; all cases when absent.
    #[arg(long)]
    select: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "exact")]
    field: FieldArg,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Record wall times (the report is then not reproducible).
    #[arg(long)]
    timings: bool,
    /// Lists the registered cases instead of running them.
    #[arg(long)]
    list: bool,
}

/// Failure with its exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownCase(_) | Error::UnknownName(_) | Error::InvalidParameters { .. } | Error::Schema { .. } => 2,
            Error::Io(_) | Error::Json(_) => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Variety(cmd) => variety(cmd),
        Command::Prolong(args) => prolong_cmd(args),
        Command::Secant { variety, trials, seed } => secant(&variety, trials, seed),
        Command::Vmrt { variety, samples, seed } => vmrt(&variety, samples, seed),
        Command::Project(args) => project(args),
        Command::Battery(args) => battery(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

/// A catalogue id, or a path to a variety JSON file.
fn load_variety(name: &str) -> Result<Variety, Failure> {
    if name.ends_with(".json") || Path::new(name).is_file() {
        let bytes = fs::read(name).map_err(|e| Failure(2, format!("{name}: {e}")))?;
        return Ok(json::parse_variety(&bytes)?);
    }
    Ok(zoo::build(name)?)
}

fn variety(cmd: VarietyCmd) -> Outcome {
    match cmd {
        VarietyCmd::List => {
            println!("families:");
            for (name, about) in zoo::FAMILIES {
                println!("  {name:<24} {about}");
            }
            println!("catalogue:");
            for id in zoo::CATALOG {
                println!("  {id}");
            }
            Ok(true)
        }
        VarietyCmd::Show { variety, samples, seed } => {
            let v = load_variety(&variety)?;
            let doc = json::variety_to_json(&v, samples, seed)?;
            println!("{}", serde_json::to_string_pretty(&doc).map_err(Error::from)?);
            Ok(true)
        }
        VarietyCmd::Check { variety, seed } => check(&variety, seed),
    }
}

fn line(ok: bool, what: &str, got: impl std::fmt::Display, want: Option<impl std::fmt::Display>) -> bool {
    match want {
        Some(w) => println!("{} {what}: {got} (expected {w})", if ok { "PASS" } else { "FAIL" }),
        None => println!("INFO {what}: {got}"),
    }
    ok
}

fn check(name: &str, seed: u64) -> Outcome {
    let v = load_variety(name)?;
    let mut ok = true;
    println!("{}: ambient {}, {} quadrics", v.id, v.ambient_dim(), v.ideal.dim());
    v.check_point(&v.base_point)?;
    let count = match &v.sampler {
        zoo::Sampler::Explicit(points) => points.len(),
        _ => 10,
    };
    let points = v.sample_points(count, seed)?;
    for p in &points {
        v.check_point(p)?;
    }
    println!("PASS base point and {count} samples lie on the cone");
    let tangent = probes::tangent_space(&v.ideal, &v.base_point)?.dim();
    let dim = tangent.saturating_sub(1);
    ok &= line(v.expected.dim.is_none_or(|d| d == dim), "dim S", dim, v.expected.dim);
    let g = probes::cone_aut(&v.ideal);
    ok &= line(v.expected.aut.is_none_or(|d| d == g.dim()), "dim aut", g.dim(), v.expected.aut);
    ok &= line(probes::contains_identity(&g)?, "identity in aut", "yes", Some("yes"));
    let g1 = match prolong(&g, 1, &ProlongOptions::exact()) {
        Err(Error::TooManyUnknowns { unknowns, cap }) => {
            eprintln!("warning: {unknowns} unknowns exceed the exact cap {cap}; computing modulo a random prime");
            prolong(&g, 1, &ProlongOptions::random_prime(seed))?
        }
        other => other?,
    };
    ok &= line(v.expected.g1.is_none_or(|d| d == g1.dim), "dim g^(1)", g1.dim, v.expected.g1);
    if matches!(v.sampler, zoo::Sampler::Chart(_) | zoo::Sampler::Section(_)) {
        let sec = probes::terracini_secant_dim(&v, 2, seed)?;
        let good = sec.agreeing && v.expected.secant.is_none_or(|d| d == sec.dim);
        ok &= line(good, "dim Sec(S)", sec.dim, v.expected.secant);
    }
    Ok(ok)
}

fn prolong_cmd(args: ProlongArgs) -> Outcome {
    let (label, g) = match (&args.algebra, &args.variety) {
        (Some(a), _) => (a.clone(), algebra::by_name(a)?),
        (None, Some(v)) => {
            let v = load_variety(v)?;
            (format!("aut({})", v.id), probes::cone_aut(&v.ideal))
        }
        (None, None) => return Err(Failure(2, "one of --algebra or --variety is required".into())),
    };
    let n = algebra::side(&g)?;
    let mut opts = match (args.field, args.prime) {
        (FieldArg::Exact, Some(_)) => return Err(Failure(2, "--prime needs --field modp".into())),
        (FieldArg::Exact, None) => ProlongOptions::exact(),
        (FieldArg::Modp, Some(p)) => ProlongOptions::mod_p(p),
        (FieldArg::Modp, None) => ProlongOptions::random_prime(args.seed),
    };
    opts.unknown_cap = args.cap;
    let unknowns = SymMultiMap::coeff_count(n, args.k + 1);
    if opts.arithmetic == Arithmetic::Exact && unknowns > args.cap {
        eprintln!("warning: {unknowns} unknowns exceed the exact cap {}; computing modulo a random prime", args.cap);
        opts = ProlongOptions::random_prime(args.seed);
        opts.unknown_cap = usize::MAX;
    }
    let res = prolong(&g, args.k, &opts)?;
    println!("algebra: {label} (dim {}, n = {n})", g.dim());
    println!("k: {}", res.k);
    println!("field: {}", res.field_used);
    println!("constraints: {} x {}", res.constraint_shape.0, res.constraint_shape.1);
    println!("dim g^({}): {}", res.k, res.dim);
    Ok(true)
}

fn secant(name: &str, trials: usize, seed: u64) -> Outcome {
    let v = load_variety(name)?;
    let est = probes::terracini_secant_dim(&v, trials, seed)?;
    let trials: Vec<String> = est.trials.iter().map(ToString::to_string).collect();
    println!("{}: dim Sec(S) = {} (trials: {}; {})", v.id, est.dim, trials.join(" "), if est.agreeing { "agreeing" } else { "not agreeing" });
    Ok(match v.expected.secant {
        Some(d) => line(d == est.dim && est.agreeing, "table value", est.dim, Some(d)),
        None => true,
    })
}

fn vmrt(name: &str, samples: usize, seed: u64) -> Outcome {
    let v = load_variety(name)?;
    match probes::vmrt_dimension(&v, samples, seed)? {
        Some(d) => println!("{}: dim VMRT = {d}", v.id),
        None => println!("{}: no lines through the base point", v.id),
    }
    Ok(true)
}

fn project(args: ProjectArgs) -> Outcome {
    let v = load_variety(&args.variety)?;
    let kind = ProjectionType::for_variety(&v)
        .ok_or_else(|| Failure(2, format!("{} is not a Segre, Grassmannian, Veronese or symplectic cone", v.id)))?;
    let l: Subspace = match (&args.l_random, &args.l_file) {
        (Some(d), _) => kind.random_l(*d, args.seed)?,
        (None, Some(path)) => {
            let bytes = fs::read(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?;
            json::parse_subspace(&bytes, v.ambient_dim())?
        }
        (None, None) => return Err(Failure(2, "one of --l-random or --l-file is required".into())),
    };
    let rep = ProjectionScenario::new(kind)?.verify(&l, args.seed)?;
    println!("{}", serde_json::to_string_pretty(&rep).map_err(Error::from)?);
    Ok(rep.pass)
}

fn battery(args: BatteryArgs) -> Outcome {
    if args.list {
        for case in report::CASES {
            println!("{:<18} {}", case.id, case.citation);
        }
        return Ok(true);
    }
    let field = match (args.field, args.prime) {
        (FieldArg::Exact, Some(_)) => return Err(Failure(2, "--prime needs --field modp".into())),
        (FieldArg::Exact, None) => FieldMode::Exact,
        (FieldArg::Modp, p) => FieldMode::ModP(p),
    };
    let opts = BatteryOptions { field, seed: args.seed, timings: args.timings };
    let rep = report::run_battery(args.select.as_deref(), &opts)?;
    let format = match args.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Text => Format::Text,
    };
    let bytes = report::emit_report(&rep, format)?;
    match &args.out {
        Some(path) => {
            fs::write(path, &bytes).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?;
            eprintln!("{} records, {} passed, {} failed", rep.summary.total, rep.summary.passed, rep.summary.failed);
        }
        None => print!("{}", String::from_utf8_lossy(&bytes)),
    }
    Ok(rep.all_passed())
}
