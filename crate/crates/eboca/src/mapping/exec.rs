//! Mapping execution: load sources, expand rules, materialize a graph.

use std::collections::HashMap;
use std::path::Path;

use rayon::prelude::*;

use crate::rdf::{Graph, Iri, Literal, Term, Triple};
use crate::vocab;

use super::{
    LogicalSource, MappingDoc, MappingError, Record, SourceFormat, TermMap, TripleMapRule,
};

struct LoadedSource {
    /// Column names; `None` for schema-free JSON sources.
    header: Option<Vec<String>>,
    records: Vec<Record>,
}

/// Executes every rule of the document over sources resolved against
/// `base_dir` and returns the deduplicated graph.
///
/// Rules run in parallel and merge through set union, so the result is
/// independent of rule and record processing order. Empty or absent field
/// values suppress exactly the triples that reference them; a record whose
/// subject template cannot be filled contributes nothing.
pub fn materialize(doc: &MappingDoc, base_dir: &Path) -> Result<Graph, MappingError> {
    let sources = load_sources(doc, base_dir)?;

    // column check for tabular sources: every referenced field must exist
    for rule in &doc.rules {
        let loaded = &sources[&source_key(&rule.source)];
        if let Some(header) = &loaded.header {
            for field in rule_fields(rule) {
                if !header.iter().any(|h| h == field) {
                    return Err(MappingError::MissingField {
                        rule: rule.name.clone(),
                        field: field.to_string(),
                        path: rule.source.path.display().to_string(),
                    });
                }
            }
        }
    }

    // subject tables for every (parent rule, parent field) a join touches
    let mut parent_tables: HashMap<(String, String), HashMap<String, Vec<Iri>>> = HashMap::new();
    for rule in &doc.rules {
        for join in &rule.joins {
            let key = (join.parent_rule.clone(), join.parent_field.clone());
            if parent_tables.contains_key(&key) {
                continue;
            }
            let parent = doc
                .rules
                .iter()
                .find(|r| r.name == join.parent_rule)
                .expect("join parents checked at parse time");
            let loaded = &sources[&source_key(&parent.source)];
            if let Some(header) = &loaded.header {
                if !header.iter().any(|h| h == &join.parent_field) {
                    return Err(MappingError::MissingField {
                        rule: parent.name.clone(),
                        field: join.parent_field.clone(),
                        path: parent.source.path.display().to_string(),
                    });
                }
            }
            let mut table: HashMap<String, Vec<Iri>> = HashMap::new();
            for record in &loaded.records {
                let Some(value) = non_empty(record, &join.parent_field) else {
                    continue;
                };
                let Some(subject) = expand_subject(parent, record)? else {
                    continue;
                };
                table.entry(value.to_string()).or_default().push(subject);
            }
            parent_tables.insert(key, table);
        }
    }

    let per_rule: Vec<Result<Vec<Triple>, MappingError>> = doc
        .rules
        .par_iter()
        .map(|rule| execute_rule(rule, &sources[&source_key(&rule.source)], &parent_tables))
        .collect();

    let mut graph = Graph::new();
    for triples in per_rule {
        graph.extend(triples?);
    }
    Ok(graph)
}

fn execute_rule(
    rule: &TripleMapRule,
    loaded: &LoadedSource,
    parent_tables: &HashMap<(String, String), HashMap<String, Vec<Iri>>>,
) -> Result<Vec<Triple>, MappingError> {
    let mut out = Vec::new();
    for record in &loaded.records {
        let Some(subject) = expand_subject(rule, record)? else {
            continue;
        };
        if let Some(class) = &rule.subject_class {
            out.push(Triple::new(
                subject.clone(),
                vocab::RDF_TYPE.clone(),
                class.clone(),
            ));
        }
        for (predicate, map) in &rule.po_maps {
            match map {
                TermMap::Reference { field, datatype } => {
                    let Some(value) = non_empty(record, field) else {
                        continue;
                    };
                    let literal = match datatype {
                        Some(dt) => Literal::typed(value, dt.clone()).map_err(|e| {
                            MappingError::BadSource {
                                path: rule.source.path.display().to_string(),
                                message: e.to_string(),
                            }
                        })?,
                        None => Literal::simple(value),
                    };
                    out.push(Triple::new(subject.clone(), predicate.clone(), literal));
                }
                TermMap::Template(template) => {
                    let Some(text) = template.expand(record) else {
                        continue;
                    };
                    let object = Iri::new(text).map_err(|e| bad_iri(rule, e))?;
                    out.push(Triple::new(subject.clone(), predicate.clone(), object));
                }
                TermMap::Constant(term) => {
                    out.push(Triple::new(
                        subject.clone(),
                        predicate.clone(),
                        term.clone(),
                    ));
                }
            }
        }
        for join in &rule.joins {
            let Some(value) = non_empty(record, &join.child_field) else {
                continue;
            };
            let table = &parent_tables[&(join.parent_rule.clone(), join.parent_field.clone())];
            if let Some(parents) = table.get(value) {
                for parent_subject in parents {
                    out.push(Triple::new(
                        subject.clone(),
                        join.predicate.clone(),
                        Term::Iri(parent_subject.clone()),
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn expand_subject(rule: &TripleMapRule, record: &Record) -> Result<Option<Iri>, MappingError> {
    match rule.subject.expand(record) {
        Some(text) => Iri::new(text).map(Some).map_err(|e| bad_iri(rule, e)),
        None => Ok(None),
    }
}

fn bad_iri(rule: &TripleMapRule, e: crate::rdf::TermError) -> MappingError {
    MappingError::BadSource {
        path: rule.source.path.display().to_string(),
        message: format!("rule {:?} produced a malformed IRI: {e}", rule.name),
    }
}

fn non_empty<'r>(record: &'r Record, field: &str) -> Option<&'r str> {
    record
        .get(field)
        .map(String::as_str)
        .filter(|v| !v.is_empty())
}

fn rule_fields(rule: &TripleMapRule) -> Vec<&str> {
    let mut fields: Vec<&str> = rule.subject.fields().collect();
    for (_, map) in &rule.po_maps {
        match map {
            TermMap::Reference { field, .. } => fields.push(field),
            TermMap::Template(template) => fields.extend(template.fields()),
            TermMap::Constant(_) => {}
        }
    }
    for join in &rule.joins {
        fields.push(&join.child_field);
    }
    fields
}

type SourceKey = (String, SourceFormat, Option<String>);

fn source_key(source: &LogicalSource) -> SourceKey {
    (
        source.path.display().to_string(),
        source.format,
        source.iterator.clone(),
    )
}

fn load_sources(
    doc: &MappingDoc,
    base_dir: &Path,
) -> Result<HashMap<SourceKey, LoadedSource>, MappingError> {
    let mut out = HashMap::new();
    for rule in &doc.rules {
        let key = source_key(&rule.source);
        if out.contains_key(&key) {
            continue;
        }
        let loaded = load_source(&rule.source, base_dir)?;
        out.insert(key, loaded);
    }
    Ok(out)
}

fn load_source(source: &LogicalSource, base_dir: &Path) -> Result<LoadedSource, MappingError> {
    let full_path = base_dir.join(&source.path);
    let shown_path = source.path.display().to_string();
    match source.format {
        SourceFormat::Csv | SourceFormat::Tsv => {
            let delimiter = if source.format == SourceFormat::Csv {
                b','
            } else {
                b'\t'
            };
            let file = std::fs::File::open(&full_path).map_err(|e| MappingError::Io {
                path: shown_path.clone(),
                source: e,
            })?;
            let mut reader = csv::ReaderBuilder::new()
                .delimiter(delimiter)
                .from_reader(file);
            let header: Vec<String> = reader
                .headers()
                .map_err(|e| MappingError::BadSource {
                    path: shown_path.clone(),
                    message: e.to_string(),
                })?
                .iter()
                .map(|h| h.trim().to_string())
                .collect();
            let mut records = Vec::new();
            for (idx, row) in reader.records().enumerate() {
                let row = row.map_err(|e| MappingError::BadRecord {
                    path: shown_path.clone(),
                    record: idx + 1,
                    message: e.to_string(),
                })?;
                let mut record = Record::new();
                for (name, value) in header.iter().zip(row.iter()) {
                    record.insert(name.clone(), value.to_string());
                }
                records.push(record);
            }
            Ok(LoadedSource {
                header: Some(header),
                records,
            })
        }
        SourceFormat::Json => {
            let text = std::fs::read_to_string(&full_path).map_err(|e| MappingError::Io {
                path: shown_path.clone(),
                source: e,
            })?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| MappingError::BadSource {
                    path: shown_path.clone(),
                    message: e.to_string(),
                })?;
            let iterator = source.iterator.as_deref().expect("checked at parse time");
            let records = select_records(&value, iterator, &shown_path)?;
            Ok(LoadedSource {
                header: None,
                records,
            })
        }
    }
}

/// Resolves an iterator expression like `$.data.items[*]` or `$[*]`.
fn select_records(
    value: &serde_json::Value,
    iterator: &str,
    path: &str,
) -> Result<Vec<Record>, MappingError> {
    let bad = |message: String| MappingError::BadSource {
        path: path.to_string(),
        message,
    };
    let expr = iterator
        .strip_prefix('$')
        .ok_or_else(|| bad(format!("iterator {iterator:?} must start with '$'")))?;
    let expr = expr
        .strip_suffix("[*]")
        .ok_or_else(|| bad(format!("iterator {iterator:?} must end with '[*]'")))?;

    let mut current = value;
    for segment in expr.split('.').filter(|s| !s.is_empty()) {
        current = current
            .get(segment)
            .ok_or_else(|| bad(format!("iterator segment {segment:?} not found")))?;
    }
    let array = current
        .as_array()
        .ok_or_else(|| bad(format!("iterator {iterator:?} does not select an array")))?;

    let mut records = Vec::with_capacity(array.len());
    for (idx, item) in array.iter().enumerate() {
        let object = item.as_object().ok_or_else(|| MappingError::BadRecord {
            path: path.to_string(),
            record: idx + 1,
            message: "record is not a JSON object".to_string(),
        })?;
        let mut record = Record::new();
        for (key, value) in object {
            flatten_value(key, value, &mut record);
        }
        records.push(record);
    }
    Ok(records)
}

/// Scalars become strings; nested objects flatten with dotted paths; arrays
/// and nulls are treated as absent.
fn flatten_value(prefix: &str, value: &serde_json::Value, out: &mut Record) {
    match value {
        serde_json::Value::Null | serde_json::Value::Array(_) => {}
        serde_json::Value::Bool(b) => {
            out.insert(prefix.to_string(), b.to_string());
        }
        serde_json::Value::Number(n) => {
            out.insert(prefix.to_string(), n.to_string());
        }
        serde_json::Value::String(s) => {
            out.insert(prefix.to_string(), s.clone());
        }
        serde_json::Value::Object(map) => {
            for (key, nested) in map {
                flatten_value(&format!("{prefix}.{key}"), nested, out);
            }
        }
    }
}
