//! Shared helpers for the integration suites: independent brute-force
//! oracles, seeded-violation fixtures, and process metrics.
//!
//! The oracles deliberately reimplement behavior from the contracts —
//! naive parsing, nested loops, no indexes — so they stay independent of
//! the implementation paths they check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use eboca::query::Query;
use eboca::rdf::ntriples::format_term;
use eboca::rdf::{Graph, Iri, Literal, Term, Triple};
use eboca::vocab;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn golden_dir() -> PathBuf {
    fixture_dir().join("golden")
}

// ---------------------------------------------------------------------------
// mapping oracle: its own parser and a naive nested-loop executor
// ---------------------------------------------------------------------------

#[derive(Debug, Default)]
struct OracleRule {
    name: String,
    source_format: String,
    source_path: String,
    iterator: Option<String>,
    subject_template: String,
    subject_class: Option<String>,
    po: Vec<(String, OracleObject)>,
    joins: Vec<(String, String, String, String)>, // predicate, parent, child field, parent field
}

#[derive(Debug)]
enum OracleObject {
    Ref {
        field: String,
        datatype: Option<String>,
    },
    Tmpl(String),
    ConstIri(String),
    ConstLiteral(String),
}

type OracleRecord = BTreeMap<String, String>;

/// Computes the expected triple set of a mapping run as sorted N-Triples
/// lines, from the raw mapping text, with naive nested loops throughout.
pub fn mapping_oracle(map_text: &str, base_dir: &Path) -> BTreeSet<String> {
    let (prefixes, rules) = oracle_parse(map_text);

    let mut records_by_rule: BTreeMap<String, Vec<OracleRecord>> = BTreeMap::new();
    for rule in &rules {
        let records = oracle_load(
            &base_dir.join(&rule.source_path),
            &rule.source_format,
            rule.iterator.as_deref(),
        );
        records_by_rule.insert(rule.name.clone(), records);
    }

    let mut lines = BTreeSet::new();
    for rule in &rules {
        for record in &records_by_rule[&rule.name] {
            let Some(subject) = oracle_expand(&rule.subject_template, record) else {
                continue;
            };
            let subject = Iri::new(subject).expect("oracle subject IRI");
            if let Some(class) = &rule.subject_class {
                let class = Iri::new(resolve(class, &prefixes)).unwrap();
                lines.insert(line(&subject, &vocab::RDF_TYPE, &Term::Iri(class)));
            }
            for (predicate, object) in &rule.po {
                let predicate = Iri::new(resolve(predicate, &prefixes)).unwrap();
                let term = match object {
                    OracleObject::Ref { field, datatype } => {
                        let Some(value) = record.get(field).filter(|v| !v.is_empty()) else {
                            continue;
                        };
                        match datatype {
                            Some(dt) => Term::Literal(
                                Literal::typed(value, Iri::new(resolve(dt, &prefixes)).unwrap())
                                    .unwrap(),
                            ),
                            None => Term::Literal(Literal::simple(value)),
                        }
                    }
                    OracleObject::Tmpl(template) => {
                        let Some(text) = oracle_expand(template, record) else {
                            continue;
                        };
                        Term::Iri(Iri::new(text).unwrap())
                    }
                    OracleObject::ConstIri(iri) => {
                        Term::Iri(Iri::new(resolve(iri, &prefixes)).unwrap())
                    }
                    OracleObject::ConstLiteral(text) => Term::Literal(Literal::simple(text)),
                };
                lines.insert(line(&subject, &predicate, &term));
            }
            for (predicate, parent_rule, child_field, parent_field) in &rule.joins {
                let Some(child_value) = record.get(child_field).filter(|v| !v.is_empty()) else {
                    continue;
                };
                let parent = rules
                    .iter()
                    .find(|r| &r.name == parent_rule)
                    .expect("parent exists");
                for parent_record in &records_by_rule[parent_rule] {
                    let Some(parent_value) =
                        parent_record.get(parent_field).filter(|v| !v.is_empty())
                    else {
                        continue;
                    };
                    if parent_value != child_value {
                        continue;
                    }
                    let Some(parent_subject) =
                        oracle_expand(&parent.subject_template, parent_record)
                    else {
                        continue;
                    };
                    let predicate = Iri::new(resolve(predicate, &prefixes)).unwrap();
                    lines.insert(line(
                        &subject,
                        &predicate,
                        &Term::Iri(Iri::new(parent_subject).unwrap()),
                    ));
                }
            }
        }
    }
    lines
}

fn line(subject: &Iri, predicate: &Iri, object: &Term) -> String {
    format!(
        "<{}> <{}> {} .",
        subject.as_str(),
        predicate.as_str(),
        format_term(object)
    )
}

fn resolve(token: &str, prefixes: &BTreeMap<String, String>) -> String {
    if let Some(inner) = token.strip_prefix('<') {
        return inner.trim_end_matches('>').to_string();
    }
    let (prefix, local) = token.split_once(':').expect("prefixed name");
    format!("{}{}", prefixes[prefix], local)
}

fn oracle_parse(text: &str) -> (BTreeMap<String, String>, Vec<OracleRule>) {
    let mut prefixes = BTreeMap::new();
    let mut rules: Vec<OracleRule> = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "PREFIX" => {
                let (name, ns) = rest.split_once(char::is_whitespace).unwrap();
                prefixes.insert(
                    name.trim_end_matches(':').to_string(),
                    ns.trim()
                        .trim_start_matches('<')
                        .trim_end_matches('>')
                        .to_string(),
                );
            }
            "RULE" => rules.push(OracleRule {
                name: rest.to_string(),
                ..OracleRule::default()
            }),
            "SOURCE" => {
                let rule = rules.last_mut().unwrap();
                let mut parts = rest.split_whitespace();
                rule.source_format = parts.next().unwrap().to_ascii_lowercase();
                rule.source_path = parts.next().unwrap().to_string();
                rule.iterator = parts.next().map(str::to_string);
            }
            "SUBJECT" => {
                let rule = rules.last_mut().unwrap();
                let inner = rest.strip_prefix('<').unwrap();
                let end = inner.find('>').unwrap();
                rule.subject_template = inner[..end].to_string();
                let tail = inner[end + 1..].trim();
                if !tail.is_empty() {
                    rule.subject_class = Some(tail.to_string());
                }
            }
            "PO" => {
                let rule = rules.last_mut().unwrap();
                let (predicate, object) = rest.split_once(char::is_whitespace).unwrap();
                let object = object.trim();
                let parsed = if let Some(args) = object
                    .strip_prefix("ref(")
                    .and_then(|a| a.strip_suffix(')'))
                {
                    match args.split_once(',') {
                        Some((field, dt)) => OracleObject::Ref {
                            field: field.trim().to_string(),
                            datatype: Some(dt.trim().to_string()),
                        },
                        None => OracleObject::Ref {
                            field: args.trim().to_string(),
                            datatype: None,
                        },
                    }
                } else if let Some(args) = object
                    .strip_prefix("tmpl(")
                    .and_then(|a| a.strip_suffix(')'))
                {
                    OracleObject::Tmpl(
                        args.trim()
                            .trim_start_matches('<')
                            .trim_end_matches('>')
                            .to_string(),
                    )
                } else if let Some(args) = object
                    .strip_prefix("const(")
                    .and_then(|a| a.strip_suffix(')'))
                {
                    let args = args.trim();
                    if let Some(lit) = args.strip_prefix('"').and_then(|a| a.strip_suffix('"')) {
                        OracleObject::ConstLiteral(lit.to_string())
                    } else {
                        OracleObject::ConstIri(args.to_string())
                    }
                } else {
                    panic!("oracle cannot parse object map {object:?}");
                };
                rule.po.push((predicate.to_string(), parsed));
            }
            "JOIN" => {
                let rule = rules.last_mut().unwrap();
                let mut parts = rest.split_whitespace();
                let predicate = parts.next().unwrap().to_string();
                let parent = parts.next().unwrap().to_string();
                assert_eq!(parts.next(), Some("ON"));
                let condition: String = parts.collect::<Vec<_>>().concat();
                let (child, parent_field) = condition.split_once('=').unwrap();
                rule.joins.push((
                    predicate,
                    parent,
                    child.to_string(),
                    parent_field.to_string(),
                ));
            }
            other => panic!("oracle cannot parse keyword {other:?}"),
        }
    }
    (prefixes, rules)
}

/// Naive source reader: comma/tab splitting for tabular files (the bundled
/// fixtures avoid quoting), serde_json plus a local flattener for JSON.
fn oracle_load(path: &Path, format: &str, iterator: Option<&str>) -> Vec<OracleRecord> {
    let text = std::fs::read_to_string(path)
        .unwrap_or_else(|e| panic!("oracle read {}: {e}", path.display()));
    match format {
        "csv" | "tsv" => {
            let sep = if format == "csv" { ',' } else { '\t' };
            let mut lines = text.lines();
            let header: Vec<&str> = lines.next().expect("header row").split(sep).collect();
            lines
                .filter(|l| !l.is_empty())
                .map(|row| {
                    header
                        .iter()
                        .zip(row.split(sep))
                        .map(|(h, v)| (h.to_string(), v.to_string()))
                        .collect()
                })
                .collect()
        }
        "json" => {
            let value: serde_json::Value = serde_json::from_str(&text).unwrap();
            let expr = iterator.unwrap();
            let trimmed = expr.strip_prefix('$').unwrap().strip_suffix("[*]").unwrap();
            let mut current = &value;
            for segment in trimmed.split('.').filter(|s| !s.is_empty()) {
                current = &current[segment];
            }
            current
                .as_array()
                .unwrap()
                .iter()
                .map(|item| {
                    let mut record = OracleRecord::new();
                    oracle_flatten("", item, &mut record);
                    record
                })
                .collect()
        }
        other => panic!("oracle does not know source format {other:?}"),
    }
}

fn oracle_flatten(prefix: &str, value: &serde_json::Value, out: &mut OracleRecord) {
    match value {
        serde_json::Value::Object(map) => {
            for (key, nested) in map {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                oracle_flatten(&path, nested, out);
            }
        }
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
    }
}

/// Template expansion with a hand-rolled percent encoder.
fn oracle_expand(template: &str, record: &OracleRecord) -> Option<String> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(start) = rest.find('{') {
        out.push_str(&rest[..start]);
        let end = rest[start..].find('}').expect("closed slot") + start;
        let field = &rest[start + 1..end];
        let value = record.get(field).filter(|v| !v.is_empty())?;
        out.push_str(&oracle_percent_encode(value));
        rest = &rest[end + 1..];
    }
    out.push_str(rest);
    Some(out)
}

fn oracle_percent_encode(value: &str) -> String {
    let mut out = String::new();
    for byte in value.bytes() {
        match byte {
            b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'-' | b'.' | b'_' | b'~' => {
                out.push(byte as char)
            }
            other => out.push_str(&format!("%{other:02X}")),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// query oracles
// ---------------------------------------------------------------------------

fn term_of_pattern(position: &eboca::query::PatternTerm) -> Option<&Term> {
    match position {
        eboca::query::PatternTerm::Bound(term) => Some(term),
        eboca::query::PatternTerm::Variable(_) => None,
    }
}

fn oracle_filter(filter: &eboca::query::Filter, term: &Term) -> bool {
    use eboca::query::FilterOp;
    let as_num = |t: &Term| match t {
        Term::Literal(l) => l
            .lexical()
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite()),
        _ => None,
    };
    match filter.op {
        FilterOp::Eq | FilterOp::Ne => {
            let equal = match (as_num(term), as_num(&filter.constant)) {
                (Some(a), Some(b)) => a == b,
                _ => term == &filter.constant,
            };
            (filter.op == FilterOp::Eq) == equal
        }
        FilterOp::Lt | FilterOp::Gt => match (as_num(term), as_num(&filter.constant)) {
            (Some(a), Some(b)) => {
                if filter.op == FilterOp::Lt {
                    a < b
                } else {
                    a > b
                }
            }
            _ => false,
        },
        FilterOp::Regex => {
            let Term::Literal(pattern) = &filter.constant else {
                return false;
            };
            let text = match term {
                Term::Iri(iri) => iri.as_str(),
                Term::Blank(b) => b.label(),
                Term::Literal(l) => l.lexical(),
            };
            regex::Regex::new(pattern.lexical())
                .map(|re| re.is_match(text))
                .unwrap_or(false)
        }
    }
}

fn assignment_satisfies(graph: &Graph, query: &Query, assignment: &BTreeMap<&str, Term>) -> bool {
    for pattern in query.patterns() {
        let resolve_pos = |position: &eboca::query::PatternTerm| -> Term {
            match position {
                eboca::query::PatternTerm::Bound(term) => term.clone(),
                eboca::query::PatternTerm::Variable(name) => assignment[name.as_str()].clone(),
            }
        };
        let s = resolve_pos(&pattern.subject);
        let p = resolve_pos(&pattern.predicate);
        let o = resolve_pos(&pattern.object);
        let (Some(s), Term::Iri(p)) = (s.to_subject(), p) else {
            return false;
        };
        if !graph.contains(&Triple::new(s, p, o)) {
            return false;
        }
    }
    query
        .filters()
        .iter()
        .all(|f| oracle_filter(f, &assignment[f.variable.as_str()]))
}

fn query_variables(query: &Query) -> Vec<&str> {
    let mut vars = BTreeSet::new();
    for pattern in query.patterns() {
        for position in [&pattern.subject, &pattern.predicate, &pattern.object] {
            if let eboca::query::PatternTerm::Variable(name) = position {
                vars.insert(name.as_str());
            }
        }
    }
    vars.into_iter().collect()
}

/// Exhaustive oracle: try every assignment of every variable to every term
/// of the graph. Exponential; for small graphs and few variables only.
pub fn query_oracle_exhaustive(graph: &Graph, query: &Query) -> BTreeSet<Vec<Term>> {
    let mut universe: BTreeSet<Term> = BTreeSet::new();
    for t in graph.iter() {
        universe.insert(Term::from(t.subject.clone()));
        universe.insert(Term::Iri(t.predicate.clone()));
        universe.insert(t.object.clone());
    }
    let universe: Vec<Term> = universe.into_iter().collect();
    let variables = query_variables(query);

    let mut rows = BTreeSet::new();
    let mut assignment: BTreeMap<&str, Term> = BTreeMap::new();
    enumerate(
        graph,
        query,
        &variables,
        0,
        &universe,
        &mut assignment,
        &mut rows,
    );
    rows
}

fn enumerate<'q>(
    graph: &Graph,
    query: &'q Query,
    variables: &[&'q str],
    depth: usize,
    universe: &[Term],
    assignment: &mut BTreeMap<&'q str, Term>,
    rows: &mut BTreeSet<Vec<Term>>,
) {
    if depth == variables.len() {
        if assignment_satisfies(graph, query, assignment) {
            rows.insert(
                query
                    .select()
                    .iter()
                    .map(|v| assignment[v.as_str()].clone())
                    .collect(),
            );
        }
        return;
    }
    for term in universe {
        assignment.insert(variables[depth], term.clone());
        enumerate(
            graph,
            query,
            variables,
            depth + 1,
            universe,
            assignment,
            rows,
        );
    }
    assignment.remove(variables[depth]);
}

/// Scan-join oracle: evaluate patterns in written order by scanning every
/// triple linearly, no indexes, then apply filters. Polynomial and
/// independent of the planner.
pub fn query_oracle_scan(graph: &Graph, query: &Query) -> BTreeSet<Vec<Term>> {
    use eboca::query::PatternTerm;
    let mut partial: Vec<BTreeMap<&str, Term>> = vec![BTreeMap::new()];
    for pattern in query.patterns() {
        let mut next = Vec::new();
        for binding in &partial {
            for triple in graph.iter() {
                let mut extended = binding.clone();
                let mut ok = true;
                for (position, actual) in [
                    (&pattern.subject, Term::from(triple.subject.clone())),
                    (&pattern.predicate, Term::Iri(triple.predicate.clone())),
                    (&pattern.object, triple.object.clone()),
                ] {
                    match position {
                        PatternTerm::Bound(expected) => {
                            if expected != &actual {
                                ok = false;
                                break;
                            }
                        }
                        PatternTerm::Variable(name) => match extended.get(name.as_str()) {
                            Some(existing) if existing != &actual => {
                                ok = false;
                                break;
                            }
                            Some(_) => {}
                            None => {
                                extended.insert(name, actual);
                            }
                        },
                    }
                }
                if ok {
                    next.push(extended);
                }
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .filter(|binding| {
            query
                .filters()
                .iter()
                .all(|f| oracle_filter(f, &binding[f.variable.as_str()]))
        })
        .map(|binding| {
            query
                .select()
                .iter()
                .map(|v| binding[v.as_str()].clone())
                .collect()
        })
        .collect()
}

pub fn binding_rows(bindings: &eboca::query::BindingSet) -> BTreeSet<Vec<Term>> {
    bindings.rows().iter().cloned().collect()
}

// ---------------------------------------------------------------------------
// seeded fixtures
// ---------------------------------------------------------------------------

fn sd(local: &str) -> Iri {
    Iri::new(format!("https://w3id.org/eboca/sem-disnet#{local}")).unwrap()
}

/// Ontology with exactly 2 P04, 3 P08, 2 P11, 1 P13, and 1 P22 seeded
/// violations and nothing else.
pub fn seeded_pitfall_ontology() -> Graph {
    let mut g = Graph::new();
    fn class(g: &mut Graph, name: &str) -> Iri {
        let iri = sd(name);
        g.insert(Triple::new(
            iri.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::OWL_CLASS.clone(),
        ));
        iri
    }

    // P04 x2: annotated but unconnected classes
    for name in ["OrphanClassOne", "OrphanClassTwo"] {
        let orphan = class(&mut g, name);
        g.insert(Triple::new(
            orphan.clone(),
            vocab::RDFS_LABEL.clone(),
            Literal::simple(name),
        ));
        g.insert(Triple::new(
            orphan,
            vocab::RDFS_COMMENT.clone(),
            Literal::simple("seeded orphan"),
        ));
    }

    // P08 x3: connected classes without any annotation
    let alpha = class(&mut g, "AnnotationlessAlpha");
    g.insert(Triple::new(
        alpha.clone(),
        vocab::RDFS_SUBCLASS_OF.clone(),
        vocab::SIO_ASSOCIATION.clone(),
    ));
    let beta = class(&mut g, "AnnotationlessBeta");
    g.insert(Triple::new(
        beta.clone(),
        vocab::RDFS_SUBCLASS_OF.clone(),
        alpha.clone(),
    ));
    let gamma = class(&mut g, "AnnotationlessGamma");
    g.insert(Triple::new(gamma, vocab::RDFS_SUBCLASS_OF.clone(), beta));

    // P11 x2: mutually inverse annotated properties, one missing range and
    // one missing domain
    let missing_range = sd("relatesForward");
    let missing_domain = sd("relatesBackward");
    for (prop, label) in [
        (&missing_range, "relates forward"),
        (&missing_domain, "relates backward"),
    ] {
        g.insert(Triple::new(
            prop.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::OWL_OBJECT_PROPERTY.clone(),
        ));
        g.insert(Triple::new(
            prop.clone(),
            vocab::RDFS_LABEL.clone(),
            Literal::simple(label),
        ));
        g.insert(Triple::new(
            prop.clone(),
            vocab::RDFS_COMMENT.clone(),
            Literal::simple("seeded property"),
        ));
    }
    g.insert(Triple::new(
        missing_range.clone(),
        vocab::OWL_INVERSE_OF.clone(),
        missing_domain.clone(),
    ));
    g.insert(Triple::new(
        missing_range.clone(),
        vocab::RDFS_DOMAIN.clone(),
        alpha.clone(),
    ));
    g.insert(Triple::new(
        missing_domain.clone(),
        vocab::RDFS_RANGE.clone(),
        alpha.clone(),
    ));

    // P13 x1: fully described object property without an inverse
    let lonely = sd("standsAlone");
    g.insert(Triple::new(
        lonely.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::OWL_OBJECT_PROPERTY.clone(),
    ));
    g.insert(Triple::new(
        lonely.clone(),
        vocab::RDFS_LABEL.clone(),
        Literal::simple("stands alone"),
    ));
    g.insert(Triple::new(
        lonely.clone(),
        vocab::RDFS_COMMENT.clone(),
        Literal::simple("seeded property"),
    ));
    g.insert(Triple::new(
        lonely.clone(),
        vocab::RDFS_DOMAIN.clone(),
        alpha.clone(),
    ));
    g.insert(Triple::new(
        lonely,
        vocab::RDFS_RANGE.clone(),
        alpha.clone(),
    ));

    // P22 x1: one snake_case class among camel-case ones
    let styled = class(&mut g, "mis_styled_class");
    g.insert(Triple::new(
        styled.clone(),
        vocab::RDFS_LABEL.clone(),
        Literal::simple("mis styled"),
    ));
    g.insert(Triple::new(
        styled.clone(),
        vocab::RDFS_COMMENT.clone(),
        Literal::simple("seeded naming clash"),
    ));
    g.insert(Triple::new(styled, vocab::RDFS_SUBCLASS_OF.clone(), alpha));

    g
}

/// Instance graph with exactly four seeded rule violations: a score above
/// one, an evidence with two ECO kinds, a documented-statement evidence
/// without derivation, and a paragraph outside any expression.
pub fn seeded_invalid_instances() -> Graph {
    let mut g = Graph::new();
    let res = |kind: &str, id: &str| {
        Iri::new(format!("https://w3id.org/eboca/resource/{kind}/{id}")).unwrap()
    };

    let score = res("score", "overflow");
    g.insert(Triple::new(
        score.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::NCIT_SCORE.clone(),
    ));
    g.insert(Triple::new(
        score,
        vocab::SIO_HAS_VALUE.clone(),
        Literal::typed("1.5", vocab::XSD_DOUBLE.clone()).unwrap(),
    ));

    let dual = res("evidence", "dual-kind");
    g.insert(Triple::new(
        dual.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::EV_EVIDENCE.clone(),
    ));
    g.insert(Triple::new(
        dual.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::ECO_COMPUTATIONAL_INFERENCE.clone(),
    ));
    g.insert(Triple::new(
        dual.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::ECO_DOCUMENTED_STATEMENT.clone(),
    ));
    g.insert(Triple::new(
        dual,
        vocab::PAV_DERIVED_FROM.clone(),
        Iri::new("https://example.org/source").unwrap(),
    ));

    let underived = res("evidence", "underived");
    g.insert(Triple::new(
        underived.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::EV_EVIDENCE.clone(),
    ));
    g.insert(Triple::new(
        underived,
        vocab::RDF_TYPE.clone(),
        vocab::ECO_DOCUMENTED_STATEMENT.clone(),
    ));

    let orphan = res("paragraph", "orphan");
    g.insert(Triple::new(
        orphan.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::DOCO_PARAGRAPH.clone(),
    ));
    g.insert(Triple::new(
        orphan,
        vocab::EV_TEXT.clone(),
        Literal::simple("floating text"),
    ));

    g
}

// ---------------------------------------------------------------------------
// process metrics
// ---------------------------------------------------------------------------

/// Peak resident set size of this process in bytes (Linux).
pub fn peak_rss_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    for line in status.lines() {
        if let Some(rest) = line.strip_prefix("VmHWM:") {
            let kb: u64 = rest.trim().trim_end_matches("kB").trim().parse().ok()?;
            return Some(kb * 1024);
        }
    }
    None
}
