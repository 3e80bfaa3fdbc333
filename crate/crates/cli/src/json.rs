//! Canonical JSON for forms, scalars and the batch input schemas.
//!
//! Objects are built as `serde_json::Value`, whose map keeps keys sorted, so
//! compact output is byte-for-byte canonical. Scalars are exact `"p/q"`
//! strings; with an approximation requested they become
//! `{"approx": "...", "exact": "p/q"}`. Decoders accept a scalar as a string,
//! an integer, or that object.

use pointform_core::{Blade, Frame, FreeForm, GeometricForm, Scalar};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid input at {path}: {message}")]
pub struct DecodeError {
    pub path: String,
    pub message: String,
}

fn bad<T>(path: &str, message: impl Into<String>) -> Result<T, DecodeError> {
    Err(DecodeError { path: path.to_string(), message: message.into() })
}

/// Output options shared by every encoder.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    pub approx: Option<usize>,
}

impl Style {
    pub fn scalar(self, s: &Scalar) -> Value {
        match self.approx {
            None => Value::String(s.to_string()),
            Some(digits) => json!({ "exact": s.to_string(), "approx": s.to_decimal(digits) }),
        }
    }

    pub fn scalars(self, xs: &[Scalar]) -> Value {
        Value::Array(xs.iter().map(|s| self.scalar(s)).collect())
    }

    /// `{"n": .., "terms": [{"blade": [..], "coeff": ..}]}` in blade order.
    pub fn form(self, x: &GeometricForm) -> Value {
        let terms: Vec<Value> = x
            .terms()
            .map(|(blade, c)| json!({ "blade": blade.indices().collect::<Vec<_>>(), "coeff": self.scalar(c) }))
            .collect();
        json!({ "n": x.frame().dim(), "terms": terms })
    }
}

pub fn parse(text: &str) -> Result<Value, DecodeError> {
    serde_json::from_str(text).map_err(|e| DecodeError { path: "$".into(), message: e.to_string() })
}

fn field<'a>(v: &'a Value, path: &str, key: &str) -> Result<&'a Value, DecodeError> {
    match v {
        Value::Object(map) => match map.get(key) {
            Some(x) => Ok(x),
            None => bad(path, format!("missing field \"{key}\"")),
        },
        _ => bad(path, "expected an object"),
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, DecodeError> {
    v.as_array().map_or_else(|| bad(path, "expected an array"), Ok)
}

fn index(v: &Value, path: &str) -> Result<usize, DecodeError> {
    match v.as_u64().and_then(|n| usize::try_from(n).ok()) {
        Some(n) => Ok(n),
        None => bad(path, "expected a non-negative integer"),
    }
}

pub fn scalar(v: &Value, path: &str) -> Result<Scalar, DecodeError> {
    match v {
        Value::String(s) => s.parse().map_err(|e| DecodeError { path: path.into(), message: format!("{e}") }),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            n.to_string().parse().map_err(|e| DecodeError { path: path.into(), message: format!("{e}") })
        }
        Value::Object(_) => scalar(field(v, path, "exact")?, &format!("{path}.exact")),
        _ => bad(path, "expected a rational as \"p/q\" or an integer"),
    }
}

pub fn coords(v: &Value, path: &str, dim: usize) -> Result<Vec<Scalar>, DecodeError> {
    let items = array(v, path)?;
    if items.len() != dim {
        return bad(path, format!("expected {dim} coordinates, found {}", items.len()));
    }
    items.iter().enumerate().map(|(i, x)| scalar(x, &format!("{path}[{i}]"))).collect()
}

fn point(v: &Value, path: &str, frame: Frame) -> Result<GeometricForm, DecodeError> {
    let c = coords(v, path, frame.dim())?;
    GeometricForm::point(frame, &c).or_else(|e| bad(path, e.to_string()))
}

pub fn form(v: &Value) -> Result<GeometricForm, DecodeError> {
    let dim = index(field(v, "$", "n")?, "$.n")?;
    let frame = Frame::new(dim).or_else(|e| bad("$.n", e.to_string()))?;
    let mut terms = Vec::new();
    for (i, t) in array(field(v, "$", "terms")?, "$.terms")?.iter().enumerate() {
        let path = format!("$.terms[{i}]");
        let indices: Vec<usize> = array(field(t, &path, "blade")?, &format!("{path}.blade"))?
            .iter()
            .map(|x| index(x, &format!("{path}.blade")))
            .collect::<Result<_, _>>()?;
        let blade = Blade::from_indices(&indices).or_else(|e| bad(&path, e.to_string()))?;
        terms.push((blade, scalar(field(t, &path, "coeff")?, &format!("{path}.coeff"))?));
    }
    let mut out = GeometricForm::zero(frame);
    for (blade, c) in terms {
        let term = GeometricForm::from_terms(frame, [(blade, c)]).or_else(|e| bad("$.terms", e.to_string()))?;
        out = &out + &term;
    }
    Ok(out)
}

/// `{"forces": [{"at": [..], "vec": [..]}]}` as (point, vector) pairs.
pub fn forces(v: &Value, frame: Frame) -> Result<Vec<(GeometricForm, GeometricForm)>, DecodeError> {
    let items = array(field(v, "$", "forces")?, "$.forces")?;
    items
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let path = format!("$.forces[{i}]");
            let at = point(field(f, &path, "at")?, &format!("{path}.at"), frame)?;
            let c = coords(field(f, &path, "vec")?, &format!("{path}.vec"), frame.dim())?;
            let vec = GeometricForm::vector(frame, &c).or_else(|e| bad(&path, e.to_string()))?;
            Ok((at, vec))
        })
        .collect()
}

/// `{"points": [{"at": [..], "weight": ..}]}`.
pub fn weighted_points(v: &Value, frame: Frame) -> Result<Vec<(GeometricForm, Scalar)>, DecodeError> {
    let items = array(field(v, "$", "points")?, "$.points")?;
    items
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let path = format!("$.points[{i}]");
            let at = point(field(p, &path, "at")?, &format!("{path}.at"), frame)?;
            Ok((at, scalar(field(p, &path, "weight")?, &format!("{path}.weight"))?))
        })
        .collect()
}

/// `{"points": [[..], ..]}`.
pub fn points(v: &Value, frame: Frame) -> Result<Vec<GeometricForm>, DecodeError> {
    let items = array(field(v, "$", "points")?, "$.points")?;
    items.iter().enumerate().map(|(i, p)| point(p, &format!("$.points[{i}]"), frame)).collect()
}

/// `{"faces": [[[..], [..], [..]], ..]}`.
pub fn faces(v: &Value, frame: Frame) -> Result<Vec<[GeometricForm; 3]>, DecodeError> {
    let items = array(field(v, "$", "faces")?, "$.faces")?;
    items
        .iter()
        .enumerate()
        .map(|(i, face)| {
            let path = format!("$.faces[{i}]");
            let corners = array(face, &path)?;
            if corners.len() != 3 {
                return bad(&path, format!("expected 3 corners, found {}", corners.len()));
            }
            let [a, b, c] = [0, 1, 2].map(|j| point(&corners[j], &format!("{path}[{j}]"), frame));
            Ok([a?, b?, c?])
        })
        .collect()
}

/// `{"k": .., "terms": [{"coeff": .., "points": [[..], ..]}]}`; the
/// dimension is taken from `dim`.
pub fn free_form(v: &Value, dim: usize) -> Result<FreeForm, DecodeError> {
    let k = index(field(v, "$", "k")?, "$.k")?;
    let mut out = FreeForm::new(dim, k).or_else(|e| bad("$.k", e.to_string()))?;
    for (i, t) in array(field(v, "$", "terms")?, "$.terms")?.iter().enumerate() {
        let path = format!("$.terms[{i}]");
        let coeff = scalar(field(t, &path, "coeff")?, &format!("{path}.coeff"))?;
        let pts = array(field(t, &path, "points")?, &format!("{path}.points"))?
            .iter()
            .enumerate()
            .map(|(j, p)| coords(p, &format!("{path}.points[{j}]"), dim))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(coeff, pts).or_else(|e| bad(&path, e.to_string()))?;
    }
    Ok(out)
}
