//! Line-delimited catalogs: one canonical profile per line in canonical
//! order, then one summary line.

use std::io::{self, Write};

use bottloc_core::{FixedPointProfile, SearchSpec};
use serde_json::{json, Value};

use crate::format::{parse_profile_value, serialize_profile, FormatError};

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog line {line}: {source}")]
    Line { line: usize, source: FormatError },
    #[error("catalog line {line}: summary must be the last line")]
    SummaryNotLast { line: usize },
    #[error("catalog summary counts {declared} profiles but {found} are present")]
    CountMismatch { declared: u64, found: usize },
    #[error("catalog summary is malformed")]
    BadSummary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub profiles: Vec<FixedPointProfile>,
    /// The summary object, when the catalog has one.
    pub summary: Option<Value>,
}

pub fn summary_line(spec: &SearchSpec, count: usize) -> String {
    json!({
        "summary": {
            "count": count,
            "dimension": spec.dimension,
            "points": spec.points,
            "tangent_bound": spec.tangent_bound,
            "line_bound": spec.line_bound,
            "flavor": spec.flavor.as_str(),
        }
    })
    .to_string()
}

pub fn write_catalog<W: Write>(
    mut out: W,
    spec: &SearchSpec,
    profiles: &[FixedPointProfile],
) -> io::Result<()> {
    for p in profiles {
        writeln!(out, "{}", serialize_profile(p))?;
    }
    writeln!(out, "{}", summary_line(spec, profiles.len()))?;
    out.flush()
}

pub fn read_catalog(text: &str) -> Result<Catalog, CatalogError> {
    let mut profiles = Vec::new();
    let mut summary = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        if summary.is_some() {
            return Err(CatalogError::SummaryNotLast { line: line - 1 });
        }
        let value: Value = serde_json::from_str(raw).map_err(|e| CatalogError::Line {
            line,
            source: e.into(),
        })?;
        if let Some(s) = value.get("summary") {
            summary = Some(s.clone());
            continue;
        }
        let p = parse_profile_value(value).map_err(|source| CatalogError::Line { line, source })?;
        profiles.push(p);
    }
    if let Some(s) = &summary {
        let declared = s
            .get("count")
            .and_then(Value::as_u64)
            .ok_or(CatalogError::BadSummary)?;
        if declared != profiles.len() as u64 {
            return Err(CatalogError::CountMismatch {
                declared,
                found: profiles.len(),
            });
        }
    }
    Ok(Catalog { profiles, summary })
}
