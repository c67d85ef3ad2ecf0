//! Parser for the mapping document format.

use std::collections::{HashMap, HashSet};
use std::path::PathBuf;

use indexmap::IndexMap;

use crate::rdf::{Iri, Literal, Term};

use super::{
    Join, LogicalSource, MappingDoc, MappingError, SourceFormat, Template, TermMap, TripleMapRule,
};

struct RuleBuilder {
    line: usize,
    name: String,
    source: Option<LogicalSource>,
    subject: Option<(Template, Option<Iri>)>,
    po_maps: Vec<(Iri, TermMap)>,
    joins: Vec<Join>,
}

/// Parses and validates a mapping document. All structural invariants are
/// checked here: unique rule names, resolvable prefixes, existing and
/// acyclic join parents, and complete rule blocks.
pub fn parse_mapping_doc(text: &str) -> Result<MappingDoc, MappingError> {
    let mut prefixes: IndexMap<String, Iri> = IndexMap::new();
    let mut builders: Vec<RuleBuilder> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed, ""),
        };
        match keyword {
            "PREFIX" => {
                let (name, iri_text) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| err(line, "PREFIX needs a name and a namespace IRI"))?;
                let name = name.trim_end_matches(':');
                let namespace = parse_angle_iri(iri_text.trim(), line)?;
                if prefixes.insert(name.to_string(), namespace).is_some() {
                    return Err(err(line, format!("prefix {name:?} declared twice")));
                }
            }
            "RULE" => {
                if rest.is_empty() {
                    return Err(err(line, "RULE needs a name"));
                }
                if builders.iter().any(|b| b.name == rest) {
                    return Err(MappingError::DuplicateRule {
                        line,
                        name: rest.to_string(),
                    });
                }
                builders.push(RuleBuilder {
                    line,
                    name: rest.to_string(),
                    source: None,
                    subject: None,
                    po_maps: Vec::new(),
                    joins: Vec::new(),
                });
            }
            "SOURCE" | "SUBJECT" | "PO" | "JOIN" => {
                let builder = builders
                    .last_mut()
                    .ok_or_else(|| err(line, format!("{keyword} before any RULE")))?;
                match keyword {
                    "SOURCE" => builder.source = Some(parse_source(rest, line)?),
                    "SUBJECT" => builder.subject = Some(parse_subject(rest, line, &prefixes)?),
                    "PO" => builder.po_maps.push(parse_po(rest, line, &prefixes)?),
                    "JOIN" => builder.joins.push(parse_join(rest, line, &prefixes)?),
                    _ => unreachable!(),
                }
            }
            other => return Err(err(line, format!("unknown keyword {other:?}"))),
        }
    }

    let mut rules = Vec::with_capacity(builders.len());
    for builder in builders {
        let source = builder.source.ok_or_else(|| {
            err(
                builder.line,
                format!("rule {:?} has no SOURCE", builder.name),
            )
        })?;
        let (subject, subject_class) = builder.subject.ok_or_else(|| {
            err(
                builder.line,
                format!("rule {:?} has no SUBJECT", builder.name),
            )
        })?;
        rules.push(TripleMapRule {
            name: builder.name,
            source,
            subject,
            subject_class,
            po_maps: builder.po_maps,
            joins: builder.joins,
        });
    }

    let names: HashSet<&str> = rules.iter().map(|r| r.name.as_str()).collect();
    for rule in &rules {
        for join in &rule.joins {
            if !names.contains(join.parent_rule.as_str()) {
                return Err(MappingError::UnknownJoinParent {
                    rule: rule.name.clone(),
                    parent: join.parent_rule.clone(),
                });
            }
        }
    }
    check_acyclic(&rules)?;

    Ok(MappingDoc { prefixes, rules })
}

fn err(line: usize, message: impl Into<String>) -> MappingError {
    MappingError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_angle_iri(text: &str, line: usize) -> Result<Iri, MappingError> {
    let inner = text
        .strip_prefix('<')
        .and_then(|t| t.strip_suffix('>'))
        .ok_or_else(|| err(line, format!("expected <IRI>, found {text:?}")))?;
    Iri::new(inner).map_err(|e| err(line, e.to_string()))
}

/// Resolves `<full-iri>` or `prefix:local` using the declared prefixes.
fn resolve_iri(
    text: &str,
    line: usize,
    prefixes: &IndexMap<String, Iri>,
) -> Result<Iri, MappingError> {
    if text.starts_with('<') {
        return parse_angle_iri(text, line);
    }
    let (prefix, local) = text.split_once(':').ok_or_else(|| {
        err(
            line,
            format!("expected <IRI> or prefix:local, found {text:?}"),
        )
    })?;
    let namespace = prefixes
        .get(prefix)
        .ok_or_else(|| MappingError::UnknownPrefix {
            line,
            prefix: prefix.to_string(),
        })?;
    Iri::new(format!("{}{}", namespace.as_str(), local)).map_err(|e| err(line, e.to_string()))
}

fn parse_source(rest: &str, line: usize) -> Result<LogicalSource, MappingError> {
    let mut parts = rest.split_whitespace();
    let format = match parts.next().map(|f| f.to_ascii_lowercase()).as_deref() {
        Some("csv") => SourceFormat::Csv,
        Some("tsv") => SourceFormat::Tsv,
        Some("json") => SourceFormat::Json,
        other => {
            return Err(err(
                line,
                format!("SOURCE format must be csv, tsv, or json, found {other:?}"),
            ))
        }
    };
    let path = parts
        .next()
        .ok_or_else(|| err(line, "SOURCE needs a file path"))?;
    let iterator = parts.next().map(|s| s.to_string());
    if parts.next().is_some() {
        return Err(err(line, "unexpected extra tokens after SOURCE"));
    }
    match (format, &iterator) {
        (SourceFormat::Json, None) => {
            return Err(err(
                line,
                "json SOURCE requires an iterator expression like $.items[*]",
            ));
        }
        (SourceFormat::Csv | SourceFormat::Tsv, Some(_)) => {
            return Err(err(line, "iterator expressions only apply to json sources"));
        }
        _ => {}
    }
    Ok(LogicalSource {
        path: PathBuf::from(path),
        format,
        iterator,
    })
}

fn parse_subject(
    rest: &str,
    line: usize,
    prefixes: &IndexMap<String, Iri>,
) -> Result<(Template, Option<Iri>), MappingError> {
    let (template_text, class_text) = split_angle_then_rest(rest, line)?;
    let template = Template::parse(&template_text).map_err(|e| err(line, e))?;
    let class = match class_text {
        Some(text) => Some(resolve_iri(&text, line, prefixes)?),
        None => None,
    };
    Ok((template, class))
}

/// Splits `<...> rest` into the angle-bracketed text and the remainder.
fn split_angle_then_rest(
    rest: &str,
    line: usize,
) -> Result<(String, Option<String>), MappingError> {
    let inner = rest
        .strip_prefix('<')
        .ok_or_else(|| err(line, format!("expected <template>, found {rest:?}")))?;
    let end = inner
        .find('>')
        .ok_or_else(|| err(line, "unterminated template: missing '>'"))?;
    let template = inner[..end].to_string();
    let tail = inner[end + 1..].trim();
    Ok((template, (!tail.is_empty()).then(|| tail.to_string())))
}

fn parse_po(
    rest: &str,
    line: usize,
    prefixes: &IndexMap<String, Iri>,
) -> Result<(Iri, TermMap), MappingError> {
    let (predicate_text, object_text) = rest
        .split_once(char::is_whitespace)
        .ok_or_else(|| err(line, "PO needs a predicate and an object map"))?;
    let predicate = resolve_iri(predicate_text, line, prefixes)?;
    let object_text = object_text.trim();

    let object = if let Some(args) = strip_call(object_text, "ref") {
        let (field, datatype) = match args.split_once(',') {
            Some((f, d)) => (f.trim(), Some(resolve_iri(d.trim(), line, prefixes)?)),
            None => (args.trim(), None),
        };
        if field.is_empty() {
            return Err(err(line, "ref() needs a field name"));
        }
        TermMap::Reference {
            field: field.to_string(),
            datatype,
        }
    } else if let Some(args) = strip_call(object_text, "tmpl") {
        let inner = args
            .trim()
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .ok_or_else(|| err(line, "tmpl() needs an angle-bracketed template"))?;
        TermMap::Template(Template::parse(inner).map_err(|e| err(line, e))?)
    } else if let Some(args) = strip_call(object_text, "const") {
        TermMap::Constant(parse_const(args.trim(), line, prefixes)?)
    } else {
        return Err(err(
            line,
            format!("object map must be ref(...), tmpl(...), or const(...), found {object_text:?}"),
        ));
    };
    Ok((predicate, object))
}

fn strip_call<'a>(text: &'a str, name: &str) -> Option<&'a str> {
    text.strip_prefix(name)
        .and_then(|t| t.strip_prefix('('))
        .and_then(|t| t.strip_suffix(')'))
}

fn parse_const(
    text: &str,
    line: usize,
    prefixes: &IndexMap<String, Iri>,
) -> Result<Term, MappingError> {
    if let Some(rest) = text.strip_prefix('"') {
        let end = rest
            .find('"')
            .ok_or_else(|| err(line, "unterminated string constant"))?;
        let lexical = &rest[..end];
        let tail = rest[end + 1..].trim();
        if tail.is_empty() {
            return Ok(Term::Literal(Literal::simple(lexical)));
        }
        if let Some(dt) = tail.strip_prefix("^^") {
            let datatype = resolve_iri(dt.trim(), line, prefixes)?;
            return Literal::typed(lexical, datatype)
                .map(Term::Literal)
                .map_err(|e| err(line, e.to_string()));
        }
        if let Some(tag) = tail.strip_prefix('@') {
            return Literal::lang(lexical, tag)
                .map(Term::Literal)
                .map_err(|e| err(line, e.to_string()));
        }
        return Err(err(
            line,
            format!("unexpected trailing content after string constant: {tail:?}"),
        ));
    }
    resolve_iri(text, line, prefixes).map(Term::Iri)
}

fn parse_join(
    rest: &str,
    line: usize,
    prefixes: &IndexMap<String, Iri>,
) -> Result<Join, MappingError> {
    // JOIN <predicate> <parent-rule> ON <child-field> = <parent-field>
    let mut tokens = rest.split_whitespace();
    let predicate_text = tokens
        .next()
        .ok_or_else(|| err(line, "JOIN needs a predicate"))?;
    let parent = tokens
        .next()
        .ok_or_else(|| err(line, "JOIN needs a parent rule name"))?;
    let on = tokens.next();
    if on != Some("ON") {
        return Err(err(line, "JOIN condition must start with ON"));
    }
    let predicate = resolve_iri(predicate_text, line, prefixes)?;
    let condition: String = tokens.collect::<Vec<_>>().concat();
    let (child, parent_field) = condition
        .split_once('=')
        .ok_or_else(|| err(line, "JOIN condition must be 'child_field = parent_field'"))?;
    if child.is_empty() || parent_field.is_empty() {
        return Err(err(line, "JOIN condition must name both fields"));
    }
    Ok(Join {
        predicate,
        parent_rule: parent.to_string(),
        child_field: child.to_string(),
        parent_field: parent_field.to_string(),
    })
}

fn check_acyclic(rules: &[TripleMapRule]) -> Result<(), MappingError> {
    let index: HashMap<&str, &TripleMapRule> = rules.iter().map(|r| (r.name.as_str(), r)).collect();
    for start in rules {
        let mut stack: Vec<&str> = start.joins.iter().map(|j| j.parent_rule.as_str()).collect();
        let mut seen: HashSet<&str> = HashSet::new();
        while let Some(current) = stack.pop() {
            if current == start.name {
                return Err(MappingError::CyclicJoin {
                    rule: start.name.clone(),
                });
            }
            if !seen.insert(current) {
                continue;
            }
            if let Some(rule) = index.get(current) {
                stack.extend(rule.joins.iter().map(|j| j.parent_rule.as_str()));
            }
        }
    }
    Ok(())
}
