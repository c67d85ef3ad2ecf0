//! Turns NER extraction batches into association, evidence, and provenance
//! triples.
//!
//! Input is JSON Lines, one paragraph per line (field names documented in
//! `docs/jsonl-input.md`). Every type-compatible co-occurring entity pair in
//! a paragraph becomes one association plus one computational-inference
//! evidence derived from that paragraph.

use std::collections::{BTreeMap, BTreeSet};

use chrono::NaiveDate;
use rayon::prelude::*;
use serde::Deserialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::rdf::{Graph, Iri, Literal, Triple};
use crate::schema::{
    association_to_triples, concept_to_triples, mint_iri, AssociationKind, AssociationRecord,
    ConceptEntity, ConceptKind, ConceptRef, MintKind, SchemaError,
};
use crate::vocab;

#[derive(Debug, Error)]
pub enum AnnotateError {
    #[error("line {line}: invalid JSON: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("line {line}: duplicate paragraph_id {id:?}")]
    DuplicateParagraph { line: usize, id: String },
    #[error("line {line}: {reason}")]
    Invalid { line: usize, reason: String },
    #[error("documented-statement evidence requires a derivation source")]
    MissingDerivation,
    #[error("evidence confidence {0} is outside [0, 1]")]
    ConfidenceOutOfRange(f64),
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

/// Entity categories the extractor vocabulary covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
pub enum ExtractedKind {
    Disease,
    Drug,
    Gene,
}

impl ExtractedKind {
    pub fn concept_kind(&self) -> ConceptKind {
        match self {
            ExtractedKind::Disease => ConceptKind::Disease,
            ExtractedKind::Drug => ConceptKind::Drug,
            ExtractedKind::Gene => ConceptKind::Gene,
        }
    }
}

/// One recognized and normalized mention.
#[derive(Debug, Clone, Deserialize)]
pub struct ExtractedEntity {
    pub surface: String,
    pub normalized_id: String,
    pub kind: ExtractedKind,
    #[serde(default)]
    pub confidence: Option<f64>,
}

/// Bibliographic work a paragraph belongs to.
#[derive(Debug, Clone, Deserialize)]
pub struct ExpressionMeta {
    pub expression_id: String,
    #[serde(default)]
    pub title: Option<String>,
    #[serde(default, rename = "abstract")]
    pub abstract_text: Option<String>,
    #[serde(default)]
    pub url: Option<Iri>,
}

/// The software (and optionally the operator) that produced an extraction.
#[derive(Debug, Clone, Deserialize)]
pub struct SoftwareMeta {
    pub name: String,
    pub version: String,
    #[serde(default)]
    pub agent: Option<String>,
}

/// One paragraph with its recognized entities.
#[derive(Debug, Clone, Deserialize)]
pub struct ParagraphExtraction {
    pub paragraph_id: String,
    pub text: String,
    #[serde(default)]
    pub section: Option<String>,
    pub expression: ExpressionMeta,
    pub entities: Vec<ExtractedEntity>,
    pub extractor: SoftwareMeta,
}

impl ParagraphExtraction {
    pub fn paragraph_iri(&self) -> Result<Iri, SchemaError> {
        mint_iri(MintKind::Paragraph, &self.paragraph_id)
    }
}

/// How an evidence was obtained, mapped onto its ECO class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvidenceKind {
    ComputationalInference,
    DocumentedStatement,
}

impl EvidenceKind {
    pub fn eco_class(&self) -> &'static Iri {
        match self {
            EvidenceKind::ComputationalInference => &vocab::ECO_COMPUTATIONAL_INFERENCE,
            EvidenceKind::DocumentedStatement => &vocab::ECO_DOCUMENTED_STATEMENT,
        }
    }
}

/// Provenance bundle for one association.
#[derive(Debug, Clone)]
pub struct EvidenceRecord {
    pub evidence_id: String,
    pub kind: EvidenceKind,
    pub created_on: NaiveDate,
    pub updated_on: Option<NaiveDate>,
    pub version: Option<String>,
    pub software: Option<SoftwareMeta>,
    pub creator: Option<String>,
    pub derived_from: Option<Iri>,
    pub confidence: Option<f64>,
}

impl EvidenceRecord {
    pub fn iri(&self) -> Result<Iri, SchemaError> {
        mint_iri(MintKind::Evidence, &self.evidence_id)
    }
}

/// Batch-level settings; the creation date must come from the caller so
/// repeated runs stay byte-identical.
#[derive(Debug, Clone, Copy)]
pub struct AnnotatorConfig {
    pub created_on: NaiveDate,
}

/// Associations paired with their supporting evidence, plus skip warnings.
pub type ExtractionOutcome = (Vec<(AssociationRecord, EvidenceRecord)>, Vec<String>);

/// Derives associations from every type-compatible pair of distinct
/// normalized entities in the paragraph: drug-disease (inferred),
/// disease-gene, and drug-drug. Gene-gene and disease-disease pairs have no
/// co-occurrence class and are skipped. Duplicate normalized pairs collapse.
///
/// Each association gets exactly one computational-inference evidence
/// derived from the paragraph; its confidence is the minimum of the two
/// entity confidences when both are present.
pub fn extract_associations(
    paragraph: &ParagraphExtraction,
    config: &AnnotatorConfig,
) -> Result<ExtractionOutcome, AnnotateError> {
    let mut warnings = Vec::new();

    // dedupe mentions by (kind, id); keep the best confidence and the
    // lexicographically smallest surface for stable labels
    let mut entities: BTreeMap<(ExtractedKind, String), (Option<f64>, String)> = BTreeMap::new();
    for entity in &paragraph.entities {
        if entity.normalized_id.is_empty() {
            warnings.push(format!(
                "paragraph {}: entity {:?} has no normalized id, skipped",
                paragraph.paragraph_id, entity.surface
            ));
            continue;
        }
        let slot = entities
            .entry((entity.kind, entity.normalized_id.clone()))
            .or_insert((entity.confidence, entity.surface.clone()));
        slot.0 = match (slot.0, entity.confidence) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        if entity.surface < slot.1 {
            slot.1 = entity.surface.clone();
        }
    }

    type EntityEntry<'a> = (&'a (ExtractedKind, String), &'a (Option<f64>, String));
    let flat: Vec<EntityEntry<'_>> = entities.iter().collect();
    let paragraph_iri = paragraph.paragraph_iri()?;

    let mut seen_pairs = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..flat.len() {
        for j in (i + 1)..flat.len() {
            let ((kind_a, id_a), (conf_a, _)) = flat[i];
            let ((kind_b, id_b), (conf_b, _)) = flat[j];
            let Some(assoc_kind) = classify_pair(*kind_a, *kind_b) else {
                continue;
            };

            let (src, tgt) = orient(
                assoc_kind,
                (*kind_a, id_a.as_str(), *conf_a),
                (*kind_b, id_b.as_str(), *conf_b),
            );

            let local_id = format!("{}|{}", src.1, tgt.1);
            if !seen_pairs.insert((assoc_kind, local_id.clone())) {
                continue;
            }

            let association = AssociationRecord::new(
                assoc_kind,
                ConceptRef::new(src.0.concept_kind(), src.1)?,
                ConceptRef::new(tgt.0.concept_kind(), tgt.1)?,
                None,
                local_id.clone(),
            )?;

            let confidence = match (src.2, tgt.2) {
                (Some(a), Some(b)) => Some(a.min(b)),
                _ => None,
            };
            let evidence_id = content_id(
                &paragraph.paragraph_id,
                assoc_kind.slug(),
                &local_id,
                &paragraph.extractor.version,
            );
            let evidence = EvidenceRecord {
                evidence_id,
                kind: EvidenceKind::ComputationalInference,
                created_on: config.created_on,
                updated_on: None,
                version: Some(paragraph.extractor.version.clone()),
                software: Some(paragraph.extractor.clone()),
                creator: paragraph.extractor.agent.clone(),
                derived_from: Some(paragraph_iri.clone()),
                confidence,
            };
            out.push((association, evidence));
        }
    }
    Ok((out, warnings))
}

fn classify_pair(a: ExtractedKind, b: ExtractedKind) -> Option<AssociationKind> {
    use ExtractedKind::*;
    match (a, b) {
        (Drug, Disease) | (Disease, Drug) => Some(AssociationKind::DrugDiseaseInferred),
        (Disease, Gene) | (Gene, Disease) => Some(AssociationKind::DiseaseGene),
        (Drug, Drug) => Some(AssociationKind::DrugDrugInteraction),
        // gene-gene would need protein-level curation, disease-disease has
        // no association class, drug-gene is not modeled
        _ => None,
    }
}

type EntityView<'a> = (ExtractedKind, &'a str, Option<f64>);

fn orient<'a>(
    kind: AssociationKind,
    a: EntityView<'a>,
    b: EntityView<'a>,
) -> (EntityView<'a>, EntityView<'a>) {
    let want_first = match kind {
        AssociationKind::DrugDiseaseInferred => ExtractedKind::Drug,
        AssociationKind::DiseaseGene => ExtractedKind::Disease,
        // symmetric kinds order by id for stable pair identifiers
        _ => return if a.1 <= b.1 { (a, b) } else { (b, a) },
    };
    if a.0 == want_first {
        (a, b)
    } else {
        (b, a)
    }
}

fn content_id(paragraph_id: &str, slug: &str, pair_id: &str, version: &str) -> String {
    let mut hasher = Sha256::new();
    for part in [paragraph_id, slug, pair_id, version] {
        hasher.update(part.as_bytes());
        hasher.update([0x1f]);
    }
    let digest = hasher.finalize();
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Triples for one evidence and its link from the supported association.
pub fn evidence_to_triples(
    evidence: &EvidenceRecord,
    association: &Iri,
) -> Result<Vec<Triple>, AnnotateError> {
    if evidence.kind == EvidenceKind::DocumentedStatement && evidence.derived_from.is_none() {
        return Err(AnnotateError::MissingDerivation);
    }
    if let Some(c) = evidence.confidence {
        if !(0.0..=1.0).contains(&c) {
            return Err(AnnotateError::ConfidenceOutOfRange(c));
        }
    }

    let ev = evidence.iri()?;
    let mut out = vec![
        Triple::new(
            association.clone(),
            vocab::SIO_HAS_EVIDENCE.clone(),
            ev.clone(),
        ),
        Triple::new(
            ev.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::EV_EVIDENCE.clone(),
        ),
        Triple::new(
            ev.clone(),
            vocab::RDF_TYPE.clone(),
            evidence.kind.eco_class().clone(),
        ),
    ];
    if let Some(source) = &evidence.derived_from {
        out.push(Triple::new(
            ev.clone(),
            vocab::PAV_DERIVED_FROM.clone(),
            source.clone(),
        ));
    }
    out.push(Triple::new(
        ev.clone(),
        vocab::PAV_CREATED_ON.clone(),
        date_literal(evidence.created_on),
    ));
    if let Some(updated) = evidence.updated_on {
        out.push(Triple::new(
            ev.clone(),
            vocab::PAV_LAST_UPDATED_ON.clone(),
            date_literal(updated),
        ));
    }
    if let Some(version) = &evidence.version {
        out.push(Triple::new(
            ev.clone(),
            vocab::PAV_VERSION.clone(),
            Literal::simple(version),
        ));
    }
    if let Some(software) = &evidence.software {
        let sw = mint_iri(
            MintKind::Software,
            &format!("{} {}", software.name, software.version),
        )?;
        out.push(Triple::new(
            ev.clone(),
            vocab::PAV_CREATED_WITH.clone(),
            sw.clone(),
        ));
        out.push(Triple::new(
            sw.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::FOAF_AGENT.clone(),
        ));
        out.push(Triple::new(
            sw.clone(),
            vocab::RDFS_LABEL.clone(),
            Literal::simple(&software.name),
        ));
        out.push(Triple::new(
            sw,
            vocab::PAV_VERSION.clone(),
            Literal::simple(&software.version),
        ));
    }
    if let Some(creator) = &evidence.creator {
        let agent = mint_iri(MintKind::Agent, creator)?;
        out.push(Triple::new(
            ev.clone(),
            vocab::PAV_CREATED_BY.clone(),
            agent.clone(),
        ));
        out.push(Triple::new(
            agent.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::FOAF_AGENT.clone(),
        ));
        out.push(Triple::new(
            agent,
            vocab::RDFS_LABEL.clone(),
            Literal::simple(creator),
        ));
    }
    if let Some(confidence) = evidence.confidence {
        let value = Literal::typed(format!("{confidence}"), vocab::XSD_DOUBLE.clone())
            .expect("xsd:double literal");
        out.push(Triple::new(ev, vocab::EV_CONFIDENCE_SCORE.clone(), value));
    }
    Ok(out)
}

fn date_literal(date: NaiveDate) -> Literal {
    Literal::typed(date.format("%Y-%m-%d").to_string(), vocab::XSD_DATE.clone())
        .expect("xsd:date literal")
}

/// Triples describing the paragraph and the expression it is part of.
pub fn paragraph_to_triples(paragraph: &ParagraphExtraction) -> Result<Vec<Triple>, AnnotateError> {
    let par = paragraph.paragraph_iri()?;
    let expr = mint_iri(MintKind::Expression, &paragraph.expression.expression_id)?;

    let mut out = vec![
        Triple::new(
            par.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::DOCO_PARAGRAPH.clone(),
        ),
        Triple::new(
            par.clone(),
            vocab::EV_TEXT.clone(),
            Literal::simple(&paragraph.text),
        ),
        Triple::new(par.clone(), vocab::DCT_IS_PART_OF.clone(), expr.clone()),
        Triple::new(
            expr.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::FABIO_EXPRESSION.clone(),
        ),
    ];
    if let Some(section) = &paragraph.section {
        out.push(Triple::new(
            par,
            vocab::EV_SECTION.clone(),
            Literal::simple(section),
        ));
    }
    if let Some(title) = &paragraph.expression.title {
        out.push(Triple::new(
            expr.clone(),
            vocab::DCT_TITLE.clone(),
            Literal::simple(title),
        ));
    }
    if let Some(abstract_text) = &paragraph.expression.abstract_text {
        out.push(Triple::new(
            expr.clone(),
            vocab::DCT_ABSTRACT.clone(),
            Literal::simple(abstract_text),
        ));
    }
    if let Some(url) = &paragraph.expression.url {
        out.push(Triple::new(expr, vocab::FOAF_PAGE.clone(), url.clone()));
    }
    Ok(out)
}

/// Parses a JSON Lines batch, validating per-line invariants.
pub fn parse_batch(input: &str) -> Result<Vec<ParagraphExtraction>, AnnotateError> {
    let mut batch = Vec::new();
    let mut seen_ids = BTreeSet::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let paragraph: ParagraphExtraction =
            serde_json::from_str(raw).map_err(|source| AnnotateError::Json { line, source })?;
        if paragraph.paragraph_id.is_empty() {
            return Err(AnnotateError::Invalid {
                line,
                reason: "paragraph_id must not be empty".into(),
            });
        }
        if paragraph.expression.expression_id.is_empty() {
            return Err(AnnotateError::Invalid {
                line,
                reason: "expression_id must not be empty".into(),
            });
        }
        if paragraph.extractor.name.is_empty() {
            return Err(AnnotateError::Invalid {
                line,
                reason: "extractor name must not be empty".into(),
            });
        }
        for entity in &paragraph.entities {
            if let Some(c) = entity.confidence {
                if !(0.0..=1.0).contains(&c) {
                    return Err(AnnotateError::Invalid {
                        line,
                        reason: format!(
                            "entity {:?} confidence {c} is outside [0, 1]",
                            entity.normalized_id
                        ),
                    });
                }
            }
        }
        if !seen_ids.insert(paragraph.paragraph_id.clone()) {
            return Err(AnnotateError::DuplicateParagraph {
                line,
                id: paragraph.paragraph_id,
            });
        }
        batch.push(paragraph);
    }
    Ok(batch)
}

/// Runs the whole batch: paragraph/expression triples, endpoint concept
/// triples, associations, and evidences, merged into one graph.
///
/// Paragraphs are processed in parallel; the merge is a set union, so the
/// result equals sequential processing.
pub fn annotate_batch(
    batch: &[ParagraphExtraction],
    config: &AnnotatorConfig,
) -> Result<(Graph, Vec<String>), AnnotateError> {
    type ParagraphTriples = Result<(Vec<Triple>, Vec<String>), AnnotateError>;
    let results: Vec<ParagraphTriples> = batch
        .par_iter()
        .map(|paragraph| {
            let mut triples = paragraph_to_triples(paragraph)?;
            let (pairs, warnings) = extract_associations(paragraph, config)?;

            let mut concepts: BTreeMap<(ConceptKind, String), String> = BTreeMap::new();
            for entity in &paragraph.entities {
                if entity.normalized_id.is_empty() {
                    continue;
                }
                let key = (entity.kind.concept_kind(), entity.normalized_id.clone());
                let label = concepts
                    .entry(key)
                    .or_insert_with(|| entity.surface.clone());
                if entity.surface < *label {
                    *label = entity.surface.clone();
                }
            }
            for ((kind, id), label) in &concepts {
                let concept = ConceptEntity::new(*kind, id.clone())?.with_name(label.clone());
                triples.extend(concept_to_triples(&concept));
            }

            for (association, evidence) in &pairs {
                triples.extend(association_to_triples(association));
                triples.extend(evidence_to_triples(evidence, &association.iri())?);
            }
            Ok((triples, warnings))
        })
        .collect();

    let mut graph = Graph::new();
    let mut warnings = Vec::new();
    for result in results {
        let (triples, mut w) = result?;
        graph.extend(triples);
        warnings.append(&mut w);
    }
    Ok((graph, warnings))
}
