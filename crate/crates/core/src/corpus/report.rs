//! JSON report files.
//!
//! One [`ReportFile`] per group: the group's name, order and degree plus one
//! [`MatchEntry`] per verified hypothesis match. Field order is fixed by the
//! struct definitions, so serialization is byte-stable.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::class_algebra::{ClassId, ClassTable};
use crate::lab::{Check, HypothesisKind, HypothesisMatch, Status, Theorem, TheoremReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassEntry {
    pub id: ClassId,
    pub size: usize,
    pub element_order: u64,
    pub real: bool,
    /// Least member in cycle notation.
    pub rep: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchEntry {
    pub hypothesis: HypothesisKind,
    pub theorem: Theorem,
    pub classes: Vec<ClassEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_subgroup: Option<Vec<ClassId>>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub group: GroupInfo,
    pub matches: Vec<MatchEntry>,
}

impl ReportFile {
    /// Rebuilds the verifier reports; `group_ref` is the group name.
    pub fn theorem_reports(&self) -> Vec<TheoremReport> {
        self.matches
            .iter()
            .map(|m| TheoremReport {
                theorem: m.theorem,
                matched: HypothesisMatch {
                    kind: m.hypothesis,
                    class_ids: m.classes.iter().map(|c| c.id).collect(),
                    normal_subgroup: m.normal_subgroup.clone(),
                    group_ref: self.group.name.clone(),
                },
                checks: m.checks.clone(),
                facts: m.facts.clone(),
                notes: m.notes.clone(),
                status: m.status,
            })
            .collect()
    }

    pub fn count(&self, status: Status) -> usize {
        self.matches.iter().filter(|m| m.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

pub fn build_report(name: &str, table: &ClassTable, reports: &[TheoremReport]) -> ReportFile {
    let g = table.group();
    let entry = |id: ClassId| {
        let c = table.class(id);
        ClassEntry {
            id,
            size: c.size(),
            element_order: c.element_order,
            real: c.real,
            rep: table.representative(id).to_string(),
        }
    };
    ReportFile {
        group: GroupInfo {
            name: name.to_string(),
            order: g.order(),
            degree: g.degree(),
        },
        matches: reports
            .iter()
            .map(|r| MatchEntry {
                hypothesis: r.matched.kind,
                theorem: r.theorem,
                classes: r.matched.class_ids.iter().map(|&id| entry(id)).collect(),
                normal_subgroup: r.matched.normal_subgroup.clone(),
                checks: r.checks.clone(),
                facts: r.facts.clone(),
                notes: r.notes.clone(),
                status: r.status,
            })
            .collect(),
    }
}

/// Schema violation with a JSON-pointer path such as `/matches/0/hypothesis`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("schema error at {0}")]
    Schema(#[from] SchemaError),
}

fn pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    if out.is_empty() {
        out.push('/');
    }
    out
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, SchemaError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| SchemaError {
        path: pointer(e.path()),
        message: e.inner().to_string(),
    })
}

pub fn parse_report(text: &str) -> Result<ReportFile, SchemaError> {
    parse(text)
}

pub fn parse_reports(text: &str) -> Result<Vec<ReportFile>, SchemaError> {
    parse(text)
}

pub fn reports_to_json(reports: &[ReportFile]) -> String {
    serde_json::to_string_pretty(reports).expect("report serialization cannot fail")
}

fn write_text(path: &Path, mut text: String) -> Result<(), ReportError> {
    text.push('\n');
    fs::write(path, text).map_err(|source| ReportError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_text(path: &Path) -> Result<String, ReportError> {
    fs::read_to_string(path).map_err(|source| ReportError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_report(path: &Path, report: &ReportFile) -> Result<(), ReportError> {
    write_text(path, report.to_json())
}

pub fn write_reports(path: &Path, reports: &[ReportFile]) -> Result<(), ReportError> {
    write_text(path, reports_to_json(reports))
}

pub fn read_report(path: &Path) -> Result<ReportFile, ReportError> {
    Ok(parse_report(&read_text(path)?)?)
}

pub fn read_reports(path: &Path) -> Result<Vec<ReportFile>, ReportError> {
    Ok(parse_reports(&read_text(path)?)?)
}
