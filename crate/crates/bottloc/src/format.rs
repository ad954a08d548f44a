//! JSON interchange for profiles, rationals and reports.
//!
//! Serialization is canonical: compact, keys sorted, one fixed layout. A
//! profile written by [`serialize_profile`] parses back to the same value
//! and re-serializes to the same bytes.

use bottloc_core::{
    ConsistencyReport, FixedPointProfile, Flavor, LevelDecomposition, PointDatum, Rational,
    TheoremReport, Violation,
};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown flavor {0:?} (expected \"oriented\" or \"almost-complex\")")]
    Flavor(String),
    #[error("invalid profile: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep only the cause.
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileDoc {
    dimension: usize,
    flavor: String,
    points: Vec<PointDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointDoc {
    tangent_weights: Vec<i64>,
    line_weight: i64,
}

fn profile_from_doc(doc: ProfileDoc) -> Result<FixedPointProfile, FormatError> {
    let flavor: Flavor = doc
        .flavor
        .parse()
        .map_err(|_| FormatError::Flavor(doc.flavor.clone()))?;
    let points = doc
        .points
        .into_iter()
        .map(|p| PointDatum::new(p.tangent_weights, p.line_weight))
        .collect();
    let p = FixedPointProfile::new(doc.dimension, flavor, points);
    let violations = bottloc_core::validate(&p);
    if violations.is_empty() {
        Ok(p)
    } else {
        Err(FormatError::Invalid(violations))
    }
}

/// Parses and validates a profile document.
pub fn parse_profile(text: &str) -> Result<FixedPointProfile, FormatError> {
    profile_from_doc(serde_json::from_str(text)?)
}

pub(crate) fn parse_profile_value(v: Value) -> Result<FixedPointProfile, FormatError> {
    profile_from_doc(serde_json::from_value(v)?)
}

pub fn profile_to_value(p: &FixedPointProfile) -> Value {
    let points: Vec<Value> = p
        .points
        .iter()
        .map(|pt| json!({"tangent_weights": pt.tangent_weights, "line_weight": pt.line_weight}))
        .collect();
    json!({
        "dimension": p.dimension,
        "flavor": p.flavor.as_str(),
        "points": points,
    })
}

/// Compact canonical JSON, no trailing newline.
pub fn serialize_profile(p: &FixedPointProfile) -> String {
    profile_to_value(p).to_string()
}

pub fn rational_to_value(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

pub fn levels_to_value(levels: &LevelDecomposition) -> Value {
    Value::Array(
        levels
            .levels
            .iter()
            .map(|l| {
                json!({
                    "value": l.value,
                    "weight_sum": rational_to_value(&l.weight_sum),
                    "multiplicity": l.multiplicity,
                })
            })
            .collect(),
    )
}

pub fn consistency_to_value(c: &ConsistencyReport) -> Value {
    let moments: Vec<Value> = c
        .moments
        .iter()
        .map(|m| json!({"t": m.t, "value": rational_to_value(&m.value), "passes": m.passes()}))
        .collect();
    json!({
        "moments": moments,
        "chern_top": rational_to_value(&c.chern_top),
        "consistent": c.is_consistent(),
        "non_integral_warning": c.non_integral_warning(),
    })
}

pub fn theorem_report_to_value(r: &TheoremReport) -> Value {
    let verdicts: Vec<Value> = r
        .verdicts
        .iter()
        .map(|v| json!({"statement": v.statement.id(), "status": v.status.as_str()}))
        .collect();
    json!({
        "consistency": consistency_to_value(&r.consistency),
        "classification": r.classification.as_str(),
        "chern_top": rational_to_value(&r.chern_top),
        "levels": levels_to_value(&r.levels),
        "verdicts": verdicts,
        "dichotomy": r.dichotomy.map(|c| c.label()),
        "vacuous": r.is_vacuous(),
    })
}
