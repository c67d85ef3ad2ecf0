//! Declarative mapping language: compile a mapping document, execute it over
//! CSV/TSV/JSON sources, and materialize a graph.
//!
//! The document format is line-oriented (EBNF in `docs/mapping-format.md`):
//! `PREFIX` declarations followed by `RULE` blocks with `SOURCE`, `SUBJECT`,
//! `PO`, and `JOIN` lines. The concepts map one-to-one onto the usual
//! mapping-language vocabulary: logical source, subject map with optional
//! class, predicate-object maps, and single-field equi-joins.

mod exec;
mod parse;

pub use exec::materialize;
pub use parse::parse_mapping_doc;

use std::path::PathBuf;

use indexmap::IndexMap;
use percent_encoding::utf8_percent_encode;
use thiserror::Error;

use crate::rdf::{Iri, Term};

#[derive(Debug, Error)]
pub enum MappingError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown prefix {prefix:?}")]
    UnknownPrefix { line: usize, prefix: String },
    #[error("line {line}: duplicate rule name {name:?}")]
    DuplicateRule { line: usize, name: String },
    #[error("rule {rule:?}: join references unknown rule {parent:?}")]
    UnknownJoinParent { rule: String, parent: String },
    #[error("rule {rule:?}: cyclic join reference")]
    CyclicJoin { rule: String },
    #[error("rule {rule:?}: field {field:?} is not a column of {path}")]
    MissingField {
        rule: String,
        field: String,
        path: String,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: record {record}: {message}")]
    BadRecord {
        path: String,
        record: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    BadSource { path: String, message: String },
}

/// Where a rule's records come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SourceFormat {
    Csv,
    Tsv,
    Json,
}

/// A tabular or JSON record source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalSource {
    pub path: PathBuf,
    pub format: SourceFormat,
    /// Path expression selecting the record array; JSON only.
    pub iterator: Option<String>,
}

/// An IRI template with `{field}` slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    parts: Vec<TemplatePart>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TemplatePart {
    Text(String),
    Slot(String),
}

impl Template {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut parts = Vec::new();
        let mut buf = String::new();
        let mut chars = text.chars();
        while let Some(c) = chars.next() {
            match c {
                '{' => {
                    if !buf.is_empty() {
                        parts.push(TemplatePart::Text(std::mem::take(&mut buf)));
                    }
                    let mut slot = String::new();
                    loop {
                        match chars.next() {
                            Some('}') => break,
                            Some('{') => return Err("nested '{' in template".into()),
                            Some(c) => slot.push(c),
                            None => return Err("unclosed '{' in template".into()),
                        }
                    }
                    if slot.is_empty() {
                        return Err("empty slot name in template".into());
                    }
                    parts.push(TemplatePart::Slot(slot));
                }
                '}' => return Err("unmatched '}' in template".into()),
                c => buf.push(c),
            }
        }
        if !buf.is_empty() {
            parts.push(TemplatePart::Text(buf));
        }
        if parts.is_empty() {
            return Err("empty template".into());
        }
        Ok(Template { parts })
    }

    pub fn fields(&self) -> impl Iterator<Item = &str> {
        self.parts.iter().filter_map(|p| match p {
            TemplatePart::Slot(name) => Some(name.as_str()),
            TemplatePart::Text(_) => None,
        })
    }

    /// Expands the template against a record; slot values are
    /// percent-encoded. Returns `None` when any slot is missing or empty.
    pub fn expand(&self, record: &Record) -> Option<String> {
        let mut out = String::new();
        for part in &self.parts {
            match part {
                TemplatePart::Text(text) => out.push_str(text),
                TemplatePart::Slot(field) => {
                    let value = record.get(field)?;
                    if value.is_empty() {
                        return None;
                    }
                    out.push_str(
                        &utf8_percent_encode(value, crate::schema::iri_segment_set()).to_string(),
                    );
                }
            }
        }
        Some(out)
    }
}

/// How one position of an emitted triple is produced.
#[derive(Debug, Clone, PartialEq)]
pub enum TermMap {
    /// IRI built from a template.
    Template(Template),
    /// Literal read from a field, with an optional declared datatype.
    Reference {
        field: String,
        datatype: Option<Iri>,
    },
    /// A fixed term.
    Constant(Term),
}

/// Single-field equi-join against another rule's subjects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Join {
    pub predicate: Iri,
    pub parent_rule: String,
    pub child_field: String,
    pub parent_field: String,
}

/// One mapping rule: a source, a subject template, and productions.
#[derive(Debug, Clone, PartialEq)]
pub struct TripleMapRule {
    pub name: String,
    pub source: LogicalSource,
    pub subject: Template,
    pub subject_class: Option<Iri>,
    pub po_maps: Vec<(Iri, TermMap)>,
    pub joins: Vec<Join>,
}

/// A parsed and validated mapping document.
#[derive(Debug, Clone, PartialEq)]
pub struct MappingDoc {
    pub prefixes: IndexMap<String, Iri>,
    pub rules: Vec<TripleMapRule>,
}

/// One source record: field name to string value. Absent and empty values
/// are treated alike by the executor.
pub type Record = std::collections::BTreeMap<String, String>;
