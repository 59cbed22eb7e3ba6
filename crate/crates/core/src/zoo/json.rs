//! Custom varieties from JSON.
//!
//! ```json
//! {
//!   "schema": "prolab-variety/1",
//!   "name": "my-conic",
//!   "ambient_dim": 3,
//!   "quadrics": [[[0, 2, 1, 1], [1, 1, -1, 1]]],
//!   "base_point": ["1", "0", "0"],
//!   "samples": [["1", "1", "1"], ["4", "2", "1"]]
//! }
//! ```
//!
//! Each quadric is a list of terms `[i, j, num, den]` standing for
//! `num/den * x_i * x_j`. Points are lists of `"num/den"` strings or
//! integers. `schema` and `samples` are optional.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{Expected, QuadraticIdeal, Sampler, Variety};
use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::sym::QuadraticForm;

pub const SCHEMA: &str = "prolab-variety/1";

fn schema(path: &str, reason: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), reason: reason.into() }
}

fn parse_int(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| schema(path, "expected an integer")),
        Value::String(s) => s.trim().parse::<BigInt>().map_err(|_| schema(path, format!("`{s}` is not an integer"))),
        _ => Err(schema(path, "expected an integer")),
    }
}

/// Parses `"n"` or `"n/d"` with `d != 0`.
pub fn parse_fraction(s: &str, path: &str) -> Result<Scalar> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| schema(path, format!("`{s}` is not a fraction")))?;
    let den: BigInt = den.parse().map_err(|_| schema(path, format!("`{s}` is not a fraction")))?;
    if den.is_zero() {
        return Err(schema(path, format!("zero denominator in `{s}`")));
    }
    Ok(Scalar::new(num, den))
}

fn parse_scalar(v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_fraction(s, path),
        Value::Number(_) => Ok(Scalar::from_integer(parse_int(v, path)?)),
        _ => Err(schema(path, "expected a fraction string or an integer")),
    }
}

fn parse_point(v: &Value, n: usize, path: &str) -> Result<Vec<Scalar>> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array"))?;
    if arr.len() != n {
        return Err(schema(path, format!("expected {n} coordinates, found {}", arr.len())));
    }
    arr.iter().enumerate().map(|(i, x)| parse_scalar(x, &format!("{path}[{i}]"))).collect()
}

fn parse_index(v: &Value, n: usize, path: &str) -> Result<usize> {
    let i = v.as_u64().ok_or_else(|| schema(path, "expected a non-negative index"))? as usize;
    if i >= n {
        return Err(schema(path, format!("index {i} out of range for ambient dimension {n}")));
    }
    Ok(i)
}

pub fn parse_variety(bytes: &[u8]) -> Result<Variety> {
    let doc: Value = serde_json::from_slice(bytes)?;
    let obj = doc.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    if let Some(s) = obj.get("schema") {
        if s.as_str() != Some(SCHEMA) {
            return Err(schema("schema", format!("expected `{SCHEMA}`")));
        }
    }
    let n = obj
        .get("ambient_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| schema("ambient_dim", "missing or not a non-negative integer"))? as usize;
    if n == 0 {
        return Err(schema("ambient_dim", "must be positive"));
    }
    let quadrics = obj.get("quadrics").and_then(Value::as_array).ok_or_else(|| schema("quadrics", "missing or not an array"))?;
    let mut forms = Vec::with_capacity(quadrics.len());
    for (qi, q) in quadrics.iter().enumerate() {
        let qpath = format!("quadrics[{qi}]");
        let terms = q.as_array().ok_or_else(|| schema(&qpath, "expected an array of terms"))?;
        let mut parsed = Vec::with_capacity(terms.len());
        for (ti, t) in terms.iter().enumerate() {
            let tpath = format!("{qpath}[{ti}]");
            let t = t.as_array().filter(|t| t.len() == 4).ok_or_else(|| schema(&tpath, "expected [i, j, num, den]"))?;
            let i = parse_index(&t[0], n, &format!("{tpath}[0]"))?;
            let j = parse_index(&t[1], n, &format!("{tpath}[1]"))?;
            let num = parse_int(&t[2], &format!("{tpath}[2]"))?;
            let den = parse_int(&t[3], &format!("{tpath}[3]"))?;
            if den.is_zero() {
                return Err(schema(&format!("{tpath}[3]"), "zero denominator"));
            }
            parsed.push((i, j, Scalar::new(num, den)));
        }
        forms.push(QuadraticForm::from_terms(n, &parsed)?);
    }
    let ideal = QuadraticIdeal::from_forms(n, forms)?;
    let base_point = parse_point(obj.get("base_point").ok_or_else(|| schema("base_point", "missing"))?, n, "base_point")?;
    if base_point.iter().all(Zero::is_zero) {
        return Err(schema("base_point", "must be nonzero"));
    }
    ideal.check_point(&base_point)?;
    let samples = match obj.get("samples") {
        None | Some(Value::Null) => vec![base_point.clone()],
        Some(Value::Array(pts)) => {
            let pts = pts
                .iter()
                .enumerate()
                .map(|(k, p)| parse_point(p, n, &format!("samples[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            for p in &pts {
                ideal.check_point(p)?;
            }
            pts
        }
        Some(_) => return Err(schema("samples", "expected an array of points")),
    };
    let id = obj.get("name").and_then(Value::as_str).unwrap_or("custom").to_string();
    Ok(Variety { id, ambient: n, ideal, base_point, sampler: Sampler::Explicit(samples), expected: Expected::default() })
}

fn scalar_json(x: &Scalar) -> Value {
    if x.denom().is_one() {
        Value::String(x.numer().to_string())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

/// JSON document for a variety; `samples` lists `sample_count` points.
pub fn variety_to_json(v: &Variety, sample_count: usize, seed: u64) -> Result<Value> {
    let quadrics: Vec<Value> = v
        .ideal
        .forms()
        .iter()
        .map(|f| {
            Value::Array(
                f.terms()
                    .into_iter()
                    .map(|(i, j, c)| json!([i, j, c.numer().to_string(), c.denom().to_string()]))
                    .collect(),
            )
        })
        .collect();
    let samples: Vec<Value> = v
        .sample_points(sample_count, seed)?
        .iter()
        .map(|p| Value::Array(p.iter().map(scalar_json).collect()))
        .collect();
    Ok(json!({
        "schema": SCHEMA,
        "name": v.id,
        "ambient_dim": v.ambient,
        "quadrics": quadrics,
        "base_point": v.base_point.iter().map(scalar_json).collect::<Vec<_>>(),
        "samples": samples,
    }))
}

/// Parses `{"vectors": [[...], ...]}` into the span of the vectors.
pub fn parse_subspace(bytes: &[u8], ambient: usize) -> Result<crate::linalg::Subspace> {
    let doc: Value = serde_json::from_slice(bytes)?;
    let rows = doc.get("vectors").and_then(Value::as_array).ok_or_else(|| schema("vectors", "expected an array"))?;
    let mut vs = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let path = format!("vectors[{r}]");
        let entries = row.as_array().ok_or_else(|| schema(&path, "expected an array"))?;
        if entries.len() != ambient {
            return Err(schema(&path, format!("expected {ambient} entries, found {}", entries.len())));
        }
        vs.push(entries.iter().enumerate().map(|(i, x)| parse_scalar(x, &format!("{path}[{i}]"))).collect::<Result<Vec<_>>>()?);
    }
    crate::linalg::Subspace::from_spanning(ambient, vs)
}
