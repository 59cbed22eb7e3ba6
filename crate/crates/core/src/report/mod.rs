//! The case battery and its machine-readable report.
//!
//! Each case checks one published claim on a list of instances and yields
//! one record per checked quantity. Records are sorted by case and then by
//! instance, and wall times are only recorded on request, so the report is a
//! pure function of the selection, the field and the seed.

mod cases;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::prolong::{Arithmetic, ProlongOptions};

pub use cases::{Case, CASES};

pub const SCHEMA: &str = "prolab-report/1";

/// Arithmetic requested for the prolongation dimensions of a battery run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Exact,
    /// A fixed prime, or one drawn from the seed.
    ModP(Option<u64>),
}

impl FieldMode {
    pub fn label(&self) -> String {
        match self {
            FieldMode::Exact => "exact".into(),
            FieldMode::ModP(Some(p)) => format!("modp({p})"),
            FieldMode::ModP(None) => "modp".into(),
        }
    }

    pub(crate) fn options(&self, seed: u64) -> ProlongOptions {
        match *self {
            FieldMode::Exact => ProlongOptions::exact(),
            FieldMode::ModP(Some(p)) => ProlongOptions::mod_p(p),
            FieldMode::ModP(None) => ProlongOptions::random_prime(seed),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// Pass when computed equals expected.
    Eq,
    /// Pass when computed differs from expected.
    Ne,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub case: String,
    pub instance: String,
    pub quantity: String,
    pub k: Option<usize>,
    /// `null` stands for "no lines" in VMRT records.
    pub computed: Option<usize>,
    pub expected: Option<usize>,
    pub relation: Relation,
    pub citation: String,
    pub pass: bool,
    pub field: String,
    pub constraint_shape: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    pub(crate) fn new(case: &str, instance: impl Into<String>, quantity: &str, computed: Option<usize>, expected: Option<usize>) -> Self {
        Record {
            case: case.into(),
            instance: instance.into(),
            quantity: quantity.into(),
            k: None,
            computed,
            expected,
            relation: Relation::Eq,
            citation: cases::citation(case).to_string(),
            pass: computed == expected,
            field: "exact".into(),
            constraint_shape: None,
            wall_ms: None,
            note: None,
        }
    }

    pub(crate) fn count(case: &str, instance: impl Into<String>, quantity: &str, computed: usize, expected: usize) -> Self {
        Record::new(case, instance, quantity, Some(computed), Some(expected))
    }

    pub(crate) fn differs(mut self) -> Self {
        self.relation = Relation::Ne;
        self.pass = self.computed != self.expected;
        self
    }

    pub(crate) fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Additional condition that must hold for the record to pass.
    pub(crate) fn requiring(mut self, ok: bool, why: &str) -> Self {
        if !ok {
            self.pass = false;
            self.note = Some(why.into());
        }
        self
    }

    /// A record for a case that could not be evaluated.
    pub(crate) fn error(case: &str, instance: impl Into<String>, e: &Error) -> Self {
        let mut r = Record::new(case, instance, "error", None, None);
        r.pass = false;
        r.note = Some(e.to_string());
        r
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invocation {
    pub command: String,
    pub selection: Vec<String>,
    pub field: String,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub invocation: Invocation,
    pub cases: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(invocation: Invocation, mut cases: Vec<Record>) -> Self {
        cases.sort_by(|a, b| (&a.case, &a.instance, &a.quantity).cmp(&(&b.case, &b.instance, &b.quantity)));
        let passed = cases.iter().filter(|r| r.pass).count();
        let summary = Summary { total: cases.len(), passed, failed: cases.len() - passed };
        Report { schema: SCHEMA.into(), invocation, cases, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::UnknownName(s.into())),
        }
    }
}

/// Columns of the CSV form, in order.
pub const CSV_COLUMNS: &[&str] = &[
    "case",
    "instance",
    "quantity",
    "k",
    "computed",
    "expected",
    "relation",
    "pass",
    "field",
    "constraint_rows",
    "constraint_cols",
    "wall_ms",
    "note",
    "citation",
];

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn emit_report(report: &Report, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
            w.write_record(CSV_COLUMNS).map_err(io)?;
            for r in &report.cases {
                let (rows, cols) = r.constraint_shape.map_or((None, None), |(a, b)| (Some(a), Some(b)));
                w.write_record([
                    r.case.clone(),
                    r.instance.clone(),
                    r.quantity.clone(),
                    opt(&r.k),
                    opt(&r.computed),
                    opt(&r.expected),
                    match r.relation {
                        Relation::Eq => "eq".into(),
                        Relation::Ne => "ne".into(),
                    },
                    r.pass.to_string(),
                    r.field.clone(),
                    opt(&rows),
                    opt(&cols),
                    opt(&r.wall_ms),
                    opt(&r.note),
                    r.citation.clone(),
                ])
                .map_err(io)?;
            }
            w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))
        }
        Format::Text => {
            let mut s = String::new();
            for r in &report.cases {
                let show = |x: &Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
                let rel = if r.relation == Relation::Eq { "=" } else { "!=" };
                s.push_str(&format!(
                    "{} {} {} {}: {} (expected {rel} {})",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.case,
                    r.instance,
                    r.quantity,
                    show(&r.computed),
                    show(&r.expected)
                ));
                if let Some(ms) = r.wall_ms {
                    s.push_str(&format!(" [{ms} ms]"));
                }
                if let Some(n) = &r.note {
                    s.push_str(&format!(" note: {n}"));
                }
                s.push('\n');
            }
            s.push_str(&format!(
                "{} records, {} passed, {} failed\n",
                report.summary.total, report.summary.passed, report.summary.failed
            ));
            Ok(s.into_bytes())
        }
    }
}

/// Reads back a JSON report.
pub fn parse_report(bytes: &[u8]) -> Result<Report> {
    let report: Report = serde_json::from_slice(bytes)?;
    if report.schema != SCHEMA {
        return Err(Error::Schema { path: "schema".into(), reason: format!("expected {SCHEMA}, found {}", report.schema) });
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct BatteryOptions {
    pub field: FieldMode,
    pub seed: u64,
    /// Record wall times; reports are then no longer reproducible.
    pub timings: bool,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions { field: FieldMode::Exact, seed: 0, timings: false }
    }
}

/// Resolves a comma-separated selection; `None` selects every case and
/// `empty` selects none.
pub fn resolve_selection(selection: Option<&str>) -> Result<Vec<&'static str>> {
    let Some(sel) = selection else {
        return Ok(CASES.iter().map(|c| c.id).filter(|id| *id != "empty").collect());
    };
    let mut out = Vec::new();
    for part in sel.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let case = CASES.iter().find(|c| c.id == part).ok_or_else(|| Error::UnknownCase(part.into()))?;
        if case.id != "empty" && !out.contains(&case.id) {
            out.push(case.id);
        }
    }
    Ok(out)
}

pub fn run_battery(selection: Option<&str>, opts: &BatteryOptions) -> Result<Report> {
    let ids = resolve_selection(selection)?;
    let records: Vec<Vec<Record>> = par::map(&ids, |id| {
        let case = CASES.iter().find(|c| c.id == *id).expect("resolved ids are registered");
        let start = Instant::now();
        let mut recs = (case.run)(opts);
        if opts.timings {
            let ms = start.elapsed().as_millis() as u64;
            for r in &mut recs {
                r.wall_ms = Some(ms);
            }
        }
        recs
    });
    let invocation = Invocation {
        command: "battery".into(),
        selection: match selection {
            Some(s) => s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect(),
            None => ids.iter().map(|s| s.to_string()).collect(),
        },
        field: opts.field.label(),
        seed: opts.seed,
    };
    Ok(Report::new(invocation, records.into_iter().flatten().collect()))
}

pub(crate) fn arithmetic_label(a: Arithmetic) -> String {
    a.to_string()
}
