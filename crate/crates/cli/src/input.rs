//! Points files and form files.
//!
//! A points file is a JSON object:
//!
//! ```json
//! { "name": "twisted", "points": [[1, 0, 0], ["1/2", -3, 1]], "z_hint": [0, 0, 1] }
//! ```
//!
//! Coordinates are JSON integers or strings `"p"` / `"p/q"`. JSON numbers with
//! a fraction or exponent are rejected so that no value passes through a
//! float.

use gorpoints::exactalg::{parse_rational, ExpVec, Poly, Rational, Ring};
use gorpoints::pointset::{validate, PointSet};
use gorpoints::Error;
use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct PointsInput {
    pub name: Option<String>,
    pub points: PointSet,
    pub z_hint: Option<Vec<Rational>>,
    pub warnings: Vec<String>,
}

fn field_err(path: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("field {path}: {msg}"))
}

fn parse_json(text: &str) -> Result<Map<String, Value>, CliError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed JSON: {e}")))?;
    match value {
        Value::Object(map) => Ok(map),
        _ => Err(CliError::Input(
            "line 1: the document must be a JSON object".into(),
        )),
    }
}

/// An integer or a `"p/q"` string.
pub fn parse_scalar(value: &Value, path: &str) -> Result<Rational, CliError> {
    match value {
        Value::Number(n) => {
            let text = n.to_string();
            parse_rational(&text).map_err(|_| {
                field_err(
                    path,
                    format!("{text} is not an integer; write non-integers as \"p/q\" strings"),
                )
            })
        }
        Value::String(s) => parse_rational(s).map_err(|e| field_err(path, e)),
        other => Err(field_err(
            path,
            format!(
                "expected an integer or a \"p/q\" string, found {}",
                kind(other)
            ),
        )),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

pub fn parse_vector(value: &Value, path: &str) -> Result<Vec<Rational>, CliError> {
    let Value::Array(items) = value else {
        return Err(field_err(
            path,
            format!("expected an array, found {}", kind(value)),
        ));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, v)| parse_scalar(v, &format!("{path}[{i}]")))
        .collect()
}

pub fn parse_points(text: &str) -> Result<PointsInput, CliError> {
    let map = parse_json(text)?;
    if let Some(key) = map
        .keys()
        .find(|k| !matches!(k.as_str(), "points" | "z_hint" | "name"))
    {
        return Err(field_err(key, "unknown field"));
    }
    let raw = map
        .get("points")
        .ok_or_else(|| field_err("points", "missing"))?;
    let Value::Array(rows) = raw else {
        return Err(field_err(
            "points",
            format!("expected an array, found {}", kind(raw)),
        ));
    };
    let coords = rows
        .iter()
        .enumerate()
        .map(|(i, row)| parse_vector(row, &format!("points[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let report = validate(coords).map_err(|e| match e {
        Error::DuplicatePoints { first, second } => field_err(
            &format!("points[{second}]"),
            format!("duplicate point: projectively equal to points[{first}]"),
        ),
        Error::ZeroPoint { index } => field_err(&format!("points[{index}]"), "zero vector"),
        Error::DimensionMismatch { expected, found } => field_err(
            "points",
            format!("all points need {expected} coordinates, one has {found}"),
        ),
        Error::EmptyPointSet => field_err("points", "empty"),
        other => field_err("points", other),
    })?;
    let z_hint = match map.get("z_hint") {
        None | Some(Value::Null) => None,
        Some(v) => {
            let z = parse_vector(v, "z_hint")?;
            if z.len() != report.point_set.nvars() {
                return Err(field_err(
                    "z_hint",
                    format!(
                        "expected {} coordinates, found {}",
                        report.point_set.nvars(),
                        z.len()
                    ),
                ));
            }
            Some(z)
        }
    };
    let name = match map.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(v) => {
            return Err(field_err(
                "name",
                format!("expected a string, found {}", kind(v)),
            ))
        }
    };
    Ok(PointsInput {
        name,
        points: report.point_set,
        z_hint,
        warnings: report.warnings,
    })
}

/// A form in the dual ring: `{"terms": [{"exponents": [..], "coefficient": ..}]}`.
///
/// The object may also be nested as `result.apolar_form` or `result.form` of
/// an output document, so the output of `check` or `apolar-form` can be fed
/// back directly.
pub fn parse_form(text: &str) -> Result<Poly, CliError> {
    let map = parse_json(text)?;
    let (obj, prefix) = if map.contains_key("terms") {
        (&map, String::new())
    } else {
        let nested = ["apolar_form", "form"].iter().find_map(|key| {
            map.get("result")
                .and_then(|r| r.get(*key))
                .and_then(Value::as_object)
                .map(|o| (o, format!("result.{key}.")))
        });
        nested.ok_or_else(|| field_err("terms", "missing"))?
    };
    let Some(Value::Array(terms)) = obj.get("terms") else {
        return Err(field_err(&format!("{prefix}terms"), "expected an array"));
    };
    let mut nvars = None;
    let mut out = Vec::with_capacity(terms.len());
    for (i, term) in terms.iter().enumerate() {
        let path = format!("{prefix}terms[{i}]");
        let exps = term
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| field_err(&format!("{path}.exponents"), "expected an array"))?;
        let exps = exps
            .iter()
            .enumerate()
            .map(|(k, e)| {
                e.as_u64()
                    .and_then(|v| u32::try_from(v).ok())
                    .ok_or_else(|| {
                        field_err(
                            &format!("{path}.exponents[{k}]"),
                            "expected a nonnegative integer",
                        )
                    })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        match nvars {
            None => nvars = Some(exps.len()),
            Some(n) if n != exps.len() => {
                return Err(field_err(
                    &format!("{path}.exponents"),
                    format!("expected {n} exponents, found {}", exps.len()),
                ))
            }
            Some(_) => {}
        }
        let c = term
            .get("coefficient")
            .ok_or_else(|| field_err(&format!("{path}.coefficient"), "missing"))?;
        out.push((
            ExpVec::new(exps),
            parse_scalar(c, &format!("{path}.coefficient"))?,
        ));
    }
    let nvars = nvars.ok_or_else(|| field_err(&format!("{prefix}terms"), "empty"))?;
    Ok(Poly::from_terms(Ring::Dual, nvars, out))
}

pub fn read_file(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}
