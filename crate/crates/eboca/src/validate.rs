//! Instance-shape validation and the ontology pitfall scanner.
//!
//! `validate_instances` applies the built-in shape rules E1-E5 to an
//! instance graph; `scan_pitfalls` checks an ontology graph for the pitfall
//! patterns P04, P08, P11, P13, and P22. Both return findings rather than
//! failing: an empty list means clean.

use std::collections::{BTreeMap, BTreeSet};

use chrono::NaiveDate;
use serde::Serialize;

use crate::rdf::{Graph, Iri, Subject, Term};
use crate::schema::{AssociationKind, ConceptKind};
use crate::vocab;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Severity {
    Error,
    Warning,
}

/// One rule violation, keyed by the rule or pitfall code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub code: &'static str,
    pub subject: Iri,
    pub severity: Severity,
    pub message: String,
}

impl Finding {
    fn error(code: &'static str, subject: Iri, message: String) -> Self {
        Finding {
            code,
            subject,
            severity: Severity::Error,
            message,
        }
    }

    fn warning(code: &'static str, subject: Iri, message: String) -> Self {
        Finding {
            code,
            subject,
            severity: Severity::Warning,
            message,
        }
    }
}

fn sort_findings(mut findings: Vec<Finding>) -> Vec<Finding> {
    findings.sort_by(|a, b| {
        (a.code, a.subject.as_str(), &a.message).cmp(&(b.code, b.subject.as_str(), &b.message))
    });
    findings
}

fn iri_subjects_of_type<'g>(graph: &'g Graph, class: &Iri) -> Vec<&'g Iri> {
    let mut subjects: Vec<&Iri> = graph
        .matching(
            None,
            Some(&vocab::RDF_TYPE),
            Some(&Term::Iri(class.clone())),
        )
        .filter_map(|t| t.subject.as_iri())
        .collect();
    subjects.sort_unstable();
    subjects.dedup();
    subjects
}

/// Applies the built-in instance rules:
///
/// - E1: every association instance has exactly two distinct endpoint links
///   to concept-typed nodes of the kinds its class requires
/// - E2: every score or confidence literal is numeric in `[0, 1]`
/// - E3: every evidence node has exactly one ECO kind, and a
///   documented-statement evidence has a derivation source
/// - E4: date literals are valid ISO-8601 calendar dates
/// - E5: every paragraph is part of some expression
pub fn validate_instances(graph: &Graph) -> Vec<Finding> {
    let mut findings = Vec::new();
    check_association_endpoints(graph, &mut findings);
    check_score_bounds(graph, &mut findings);
    check_evidence_kinds(graph, &mut findings);
    check_dates(graph, &mut findings);
    check_paragraph_containment(graph, &mut findings);
    sort_findings(findings)
}

fn check_association_endpoints(graph: &Graph, findings: &mut Vec<Finding>) {
    for kind in AssociationKind::ALL {
        let (want_a, want_b) = kind.endpoint_kinds();
        for association in iri_subjects_of_type(graph, kind.class()) {
            let subject = Subject::Iri(association.clone());
            let endpoints: BTreeSet<&Term> = graph
                .matching(Some(&subject), Some(&vocab::SIO_REFERS_TO), None)
                .map(|t| &t.object)
                .collect();
            if endpoints.len() != 2 {
                findings.push(Finding::error(
                    "E1",
                    association.clone(),
                    format!(
                        "{:?} association has {} distinct endpoint links, expected exactly 2",
                        kind,
                        endpoints.len()
                    ),
                ));
                continue;
            }
            let mut kinds: Vec<Option<ConceptKind>> = Vec::new();
            for endpoint in &endpoints {
                let concept_kind = endpoint.to_subject().and_then(|s| {
                    graph
                        .matching(Some(&s), Some(&vocab::RDF_TYPE), None)
                        .filter_map(|t| t.object.as_iri())
                        .find_map(ConceptKind::from_class)
                });
                kinds.push(concept_kind);
            }
            if kinds.iter().any(Option::is_none) {
                findings.push(Finding::error(
                    "E1",
                    association.clone(),
                    format!(
                        "{kind:?} association links an endpoint that is not typed as a concept"
                    ),
                ));
                continue;
            }
            let mut got: Vec<ConceptKind> = kinds.into_iter().flatten().collect();
            got.sort();
            let mut want = vec![want_a, want_b];
            want.sort();
            if got != want {
                findings.push(Finding::error(
                    "E1",
                    association.clone(),
                    format!("{kind:?} association requires {want_a:?} and {want_b:?} endpoints, found {got:?}"),
                ));
            }
        }
    }
}

fn check_score_bounds(graph: &Graph, findings: &mut Vec<Finding>) {
    let mut check_value = |subject: Iri, term: &Term, what: &str| {
        let ok = term
            .as_literal()
            .and_then(|l| l.as_f64())
            .is_some_and(|v| (0.0..=1.0).contains(&v));
        if !ok {
            findings.push(Finding::error(
                "E2",
                subject,
                format!(
                    "{what} {} is not a numeric literal in [0, 1]",
                    crate::rdf::ntriples::format_term(term)
                ),
            ));
        }
    };
    for score_node in iri_subjects_of_type(graph, &vocab::NCIT_SCORE) {
        let subject = Subject::Iri(score_node.clone());
        for t in graph.matching(Some(&subject), Some(&vocab::SIO_HAS_VALUE), None) {
            check_value(score_node.clone(), &t.object, "score value");
        }
    }
    for t in graph.matching(None, Some(&vocab::EV_CONFIDENCE_SCORE), None) {
        if let Some(subject) = t.subject.as_iri() {
            check_value(subject.clone(), &t.object, "confidence value");
        }
    }
}

fn check_evidence_kinds(graph: &Graph, findings: &mut Vec<Finding>) {
    let eco_kinds = [
        &*vocab::ECO_COMPUTATIONAL_INFERENCE,
        &*vocab::ECO_DOCUMENTED_STATEMENT,
    ];
    for evidence in iri_subjects_of_type(graph, &vocab::EV_EVIDENCE) {
        let subject = Subject::Iri(evidence.clone());
        let types: BTreeSet<&Iri> = graph
            .matching(Some(&subject), Some(&vocab::RDF_TYPE), None)
            .filter_map(|t| t.object.as_iri())
            .filter(|iri| eco_kinds.contains(iri))
            .collect();
        if types.len() != 1 {
            findings.push(Finding::error(
                "E3",
                evidence.clone(),
                format!(
                    "evidence node carries {} ECO kinds, expected exactly 1",
                    types.len()
                ),
            ));
            continue;
        }
        let is_documented = types.contains(&*vocab::ECO_DOCUMENTED_STATEMENT);
        let has_derivation = graph
            .matching(Some(&subject), Some(&vocab::PAV_DERIVED_FROM), None)
            .next()
            .is_some();
        if is_documented && !has_derivation {
            findings.push(Finding::error(
                "E3",
                evidence.clone(),
                "documented-statement evidence has no derivation source".to_string(),
            ));
        }
    }
}

fn check_dates(graph: &Graph, findings: &mut Vec<Finding>) {
    for predicate in [&*vocab::PAV_CREATED_ON, &*vocab::PAV_LAST_UPDATED_ON] {
        for t in graph.matching(None, Some(predicate), None) {
            let ok = t
                .object
                .as_literal()
                .is_some_and(|l| NaiveDate::parse_from_str(l.lexical(), "%Y-%m-%d").is_ok());
            if !ok {
                if let Some(subject) = t.subject.as_iri() {
                    findings.push(Finding::error(
                        "E4",
                        subject.clone(),
                        format!(
                            "{} is not a valid ISO-8601 calendar date",
                            crate::rdf::ntriples::format_term(&t.object)
                        ),
                    ));
                }
            }
        }
    }
}

fn check_paragraph_containment(graph: &Graph, findings: &mut Vec<Finding>) {
    for paragraph in iri_subjects_of_type(graph, &vocab::DOCO_PARAGRAPH) {
        let subject = Subject::Iri(paragraph.clone());
        let contained = graph
            .matching(Some(&subject), Some(&vocab::DCT_IS_PART_OF), None)
            .any(|t| {
                t.object.to_subject().is_some_and(|expr| {
                    graph
                        .matching(
                            Some(&expr),
                            Some(&vocab::RDF_TYPE),
                            Some(&Term::Iri(vocab::FABIO_EXPRESSION.clone())),
                        )
                        .next()
                        .is_some()
                })
            });
        if !contained {
            findings.push(Finding::error(
                "E5",
                paragraph.clone(),
                "paragraph is not part of any expression".to_string(),
            ));
        }
    }
}

/// Scanner settings; by default only terms in the schema's own namespaces
/// are reported, since reused vocabulary terms are documented upstream.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    pub include_reused: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum TermCategory {
    Class,
    ObjectProperty,
    DatatypeProperty,
}

impl TermCategory {
    fn label(&self) -> &'static str {
        match self {
            TermCategory::Class => "classes",
            TermCategory::ObjectProperty => "object properties",
            TermCategory::DatatypeProperty => "datatype properties",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum NamingStyle {
    Camel,
    Snake,
    Code,
}

impl NamingStyle {
    fn classify(local: &str) -> NamingStyle {
        let has_lowercase = local.chars().any(|c| c.is_ascii_lowercase());
        let has_digit = local.chars().any(|c| c.is_ascii_digit());
        if has_lowercase && local.contains('_') {
            NamingStyle::Snake
        } else if !has_lowercase && has_digit {
            NamingStyle::Code
        } else {
            NamingStyle::Camel
        }
    }

    fn label(&self) -> &'static str {
        match self {
            NamingStyle::Camel => "camelCase",
            NamingStyle::Snake => "snake_case",
            NamingStyle::Code => "uppercase code",
        }
    }
}

fn local_name(iri: &Iri) -> &str {
    let s = iri.as_str();
    let cut = s.rfind(['#', '/']).map(|i| i + 1).unwrap_or(0);
    &s[cut..]
}

/// Scans an ontology graph for modeling pitfalls:
///
/// - P04: a declared term participating in no axiom beyond its own
///   declaration and annotations (Error)
/// - P08: a declared term with neither label nor comment (Error)
/// - P11: a property missing domain or range (Error)
/// - P13: an object property with no declared inverse (Warning)
/// - P22: mixed naming styles within one term category (Warning)
pub fn scan_pitfalls(ontology: &Graph, options: &ScanOptions) -> Vec<Finding> {
    let mut declared: BTreeMap<&Iri, TermCategory> = BTreeMap::new();
    for (class_iri, category) in [
        (&*vocab::OWL_CLASS, TermCategory::Class),
        (&*vocab::OWL_OBJECT_PROPERTY, TermCategory::ObjectProperty),
        (
            &*vocab::OWL_DATATYPE_PROPERTY,
            TermCategory::DatatypeProperty,
        ),
    ] {
        for term in iri_subjects_of_type(ontology, class_iri) {
            declared.insert(term, category);
        }
    }
    let in_scope =
        |iri: &Iri| options.include_reused || iri.as_str().starts_with("https://w3id.org/eboca/");

    let mut findings = Vec::new();
    for (&term, &category) in &declared {
        if !in_scope(term) {
            continue;
        }
        let subject = Subject::Iri(term.clone());

        let connected = ontology.matching(Some(&subject), None, None).any(|t| {
            t.predicate != *vocab::RDF_TYPE
                && t.predicate != *vocab::RDFS_LABEL
                && t.predicate != *vocab::RDFS_COMMENT
        }) || ontology
            .matching(None, None, Some(&Term::Iri(term.clone())))
            .next()
            .is_some();
        if !connected {
            findings.push(Finding::error(
                "P04",
                term.clone(),
                "term participates in no axiom beyond its own declaration".to_string(),
            ));
        }

        let has_label = ontology
            .matching(Some(&subject), Some(&vocab::RDFS_LABEL), None)
            .next()
            .is_some();
        let has_comment = ontology
            .matching(Some(&subject), Some(&vocab::RDFS_COMMENT), None)
            .next()
            .is_some();
        if !has_label && !has_comment {
            findings.push(Finding::error(
                "P08",
                term.clone(),
                "term has neither rdfs:label nor rdfs:comment".to_string(),
            ));
        }

        if matches!(
            category,
            TermCategory::ObjectProperty | TermCategory::DatatypeProperty
        ) {
            let has_domain = ontology
                .matching(Some(&subject), Some(&vocab::RDFS_DOMAIN), None)
                .next()
                .is_some();
            let has_range = ontology
                .matching(Some(&subject), Some(&vocab::RDFS_RANGE), None)
                .next()
                .is_some();
            if !has_domain || !has_range {
                let missing = match (has_domain, has_range) {
                    (false, false) => "domain and range",
                    (false, true) => "domain",
                    (true, false) => "range",
                    (true, true) => unreachable!(),
                };
                findings.push(Finding::error(
                    "P11",
                    term.clone(),
                    format!("property is missing rdfs:{missing}"),
                ));
            }
        }

        if category == TermCategory::ObjectProperty {
            let has_inverse = ontology
                .matching(Some(&subject), Some(&vocab::OWL_INVERSE_OF), None)
                .next()
                .is_some()
                || ontology
                    .matching(
                        None,
                        Some(&vocab::OWL_INVERSE_OF),
                        Some(&Term::Iri(term.clone())),
                    )
                    .next()
                    .is_some();
            if !has_inverse {
                findings.push(Finding::warning(
                    "P13",
                    term.clone(),
                    "object property has no declared inverse".to_string(),
                ));
            }
        }
    }

    // P22: one finding per category whose in-scope local names mix styles
    let mut by_category: BTreeMap<TermCategory, BTreeMap<NamingStyle, BTreeSet<&Iri>>> =
        BTreeMap::new();
    for (&term, &category) in &declared {
        if !in_scope(term) {
            continue;
        }
        by_category
            .entry(category)
            .or_default()
            .entry(NamingStyle::classify(local_name(term)))
            .or_default()
            .insert(term);
    }
    for (category, buckets) in by_category {
        if buckets.len() < 2 {
            continue;
        }
        let styles: Vec<&str> = buckets.keys().map(NamingStyle::label).collect();
        let minority = buckets
            .values()
            .min_by_key(|terms| terms.len())
            .and_then(|terms| terms.first())
            .expect("buckets are non-empty");
        findings.push(Finding::warning(
            "P22",
            (*minority).clone(),
            format!(
                "{} mix naming styles: {}",
                category.label(),
                styles.join(", ")
            ),
        ));
    }

    sort_findings(findings)
}
