//! The bundled competency-question catalog.
//!
//! Fifteen questions cover the concept and association vocabulary
//! (`cq01`-`cq15`) and seven cover evidence metadata
//! (`eboca-ev1`-`eboca-ev7`). Intent sentences are duplicated in
//! `docs/cq-catalog.md`.

use crate::rdf::Graph;

use super::{parse_query, solve, BindingSet, Query, QueryError};

/// One catalog entry: identifier, what the question asks, and its query.
#[derive(Debug, Clone, Copy)]
pub struct CqEntry {
    pub id: &'static str,
    pub intent: &'static str,
    pub text: &'static str,
}

impl CqEntry {
    pub fn query(&self) -> Query {
        parse_query(self.text).expect("catalog queries are well-formed")
    }
}

const CATALOG: &[CqEntry] = &[
    CqEntry {
        id: "cq01",
        intent: "Which diseases are in the knowledge graph, and what are their names?",
        text: "\
SELECT ?disease ?name
PATTERN ?disease rdf:type ncit:C7057
PATTERN ?disease rdfs:label ?name
",
    },
    CqEntry {
        id: "cq02",
        intent: "What semantic types do diseases have?",
        text: "\
SELECT ?disease ?semanticType
PATTERN ?disease rdf:type ncit:C7057
PATTERN ?disease sio:SIO_000008 ?semanticType
PATTERN ?semanticType rdf:type sio:SIO_000326
",
    },
    CqEntry {
        id: "cq03",
        intent: "Which genes are associated with which diseases?",
        text: "\
SELECT ?disease ?gene
PATTERN ?assoc rdf:type sio:SIO_000983
PATTERN ?assoc sio:SIO_000628 ?disease
PATTERN ?assoc sio:SIO_000628 ?gene
PATTERN ?disease rdf:type ncit:C7057
PATTERN ?gene rdf:type ncit:C16612
",
    },
    CqEntry {
        id: "cq04",
        intent: "What score quantifies each disease-gene association?",
        text: "\
SELECT ?assoc ?score
PATTERN ?assoc rdf:type sio:SIO_000983
PATTERN ?assoc sio:SIO_000216 ?scoreNode
PATTERN ?scoreNode rdf:type ncit:C25338
PATTERN ?scoreNode sio:SIO_000300 ?score
",
    },
    CqEntry {
        id: "cq05",
        intent: "Which disease-gene associations have a score above 0.5?",
        text: "\
SELECT ?disease ?gene ?score
PATTERN ?assoc rdf:type sio:SIO_000983
PATTERN ?assoc sio:SIO_000628 ?disease
PATTERN ?assoc sio:SIO_000628 ?gene
PATTERN ?assoc sio:SIO_000216 ?scoreNode
PATTERN ?scoreNode sio:SIO_000300 ?score
PATTERN ?disease rdf:type ncit:C7057
PATTERN ?gene rdf:type ncit:C16612
FILTER ?score > 0.5
",
    },
    CqEntry {
        id: "cq06",
        intent: "Which genetic variants are associated with which diseases?",
        text: "\
SELECT ?disease ?variant
PATTERN ?assoc rdf:type eboca-sd:DiseaseVariantAssociation
PATTERN ?assoc sio:SIO_000628 ?disease
PATTERN ?assoc sio:SIO_000628 ?variant
PATTERN ?disease rdf:type ncit:C7057
PATTERN ?variant rdf:type obo:SO_0001060
",
    },
    CqEntry {
        id: "cq07",
        intent:
            "Which drugs are associated with which diseases, and with what kind of association?",
        text: "\
SELECT ?drug ?disease ?associationType
PATTERN ?assoc rdf:type ?associationType
PATTERN ?assoc sio:SIO_000628 ?drug
PATTERN ?assoc sio:SIO_000628 ?disease
PATTERN ?drug rdf:type cco:Drug
PATTERN ?disease rdf:type ncit:C7057
",
    },
    CqEntry {
        id: "cq08",
        intent: "Which drugs are used therapeutically against which diseases?",
        text: "\
SELECT ?drug ?disease
PATTERN ?assoc rdf:type eboca-sd:DrugDiseaseTherapeutic
PATTERN ?assoc sio:SIO_000628 ?drug
PATTERN ?assoc sio:SIO_000628 ?disease
PATTERN ?drug rdf:type cco:Drug
PATTERN ?disease rdf:type ncit:C7057
",
    },
    CqEntry {
        id: "cq09",
        intent: "Which variants are located in which genes?",
        text: "\
SELECT ?gene ?variant
PATTERN ?assoc rdf:type eboca-sd:GeneVariantAssociation
PATTERN ?assoc sio:SIO_000628 ?gene
PATTERN ?assoc sio:SIO_000628 ?variant
PATTERN ?gene rdf:type ncit:C16612
PATTERN ?variant rdf:type obo:SO_0001060
",
    },
    CqEntry {
        id: "cq10",
        intent: "Which genes participate in which pathways?",
        text: "\
SELECT ?gene ?pathway
PATTERN ?assoc rdf:type eboca-sd:GenePathwayAssociation
PATTERN ?assoc sio:SIO_000628 ?gene
PATTERN ?assoc sio:SIO_000628 ?pathway
PATTERN ?gene rdf:type ncit:C16612
PATTERN ?pathway rdf:type wp:Pathway
",
    },
    CqEntry {
        id: "cq11",
        intent: "Which drugs interact with other drugs?",
        text: "\
SELECT ?interaction ?drug
PATTERN ?interaction rdf:type sio:SIO_001006
PATTERN ?interaction sio:SIO_000628 ?drug
PATTERN ?drug rdf:type cco:Drug
",
    },
    CqEntry {
        id: "cq12",
        intent: "Which drugs are in the knowledge graph, and what are their names?",
        text: "\
SELECT ?drug ?name
PATTERN ?drug rdf:type cco:Drug
PATTERN ?drug rdfs:label ?name
",
    },
    CqEntry {
        id: "cq13",
        intent: "Which external source pages describe each disease?",
        text: "\
SELECT ?disease ?source
PATTERN ?disease rdf:type ncit:C7057
PATTERN ?disease rdfs:seeAlso ?source
",
    },
    CqEntry {
        id: "cq14",
        intent: "Which diseases are connected to pathways through an associated gene?",
        text: "\
SELECT ?disease ?gene ?pathway
PATTERN ?dg rdf:type sio:SIO_000983
PATTERN ?dg sio:SIO_000628 ?disease
PATTERN ?dg sio:SIO_000628 ?gene
PATTERN ?gp rdf:type eboca-sd:GenePathwayAssociation
PATTERN ?gp sio:SIO_000628 ?gene
PATTERN ?gp sio:SIO_000628 ?pathway
PATTERN ?disease rdf:type ncit:C7057
PATTERN ?gene rdf:type ncit:C16612
PATTERN ?pathway rdf:type wp:Pathway
",
    },
    CqEntry {
        id: "cq15",
        intent: "Which drugs reach which genes through a shared disease association?",
        text: "\
SELECT ?drug ?disease ?gene
PATTERN ?dd sio:SIO_000628 ?drug
PATTERN ?dd sio:SIO_000628 ?disease
PATTERN ?dg rdf:type sio:SIO_000983
PATTERN ?dg sio:SIO_000628 ?disease
PATTERN ?dg sio:SIO_000628 ?gene
PATTERN ?drug rdf:type cco:Drug
PATTERN ?disease rdf:type ncit:C7057
PATTERN ?gene rdf:type ncit:C16612
",
    },
    CqEntry {
        id: "eboca-ev1",
        intent: "Which evidences support which associations?",
        text: "\
SELECT ?association ?evidence
PATTERN ?association sio:SIO_000772 ?evidence
PATTERN ?evidence rdf:type eboca-ev:Evidence
",
    },
    CqEntry {
        id: "eboca-ev2",
        intent: "What kind of evidence (ECO class) backs each evidence node?",
        text: "\
SELECT ?evidence ?kind
PATTERN ?evidence rdf:type eboca-ev:Evidence
PATTERN ?evidence rdf:type ?kind
FILTER ?kind != eboca-ev:Evidence
",
    },
    CqEntry {
        id: "eboca-ev3",
        intent: "From which paragraphs are evidences derived, and what do they say?",
        text: "\
SELECT ?evidence ?paragraph ?text
PATTERN ?evidence rdf:type eboca-ev:Evidence
PATTERN ?evidence pav:derivedFrom ?paragraph
PATTERN ?paragraph rdf:type doco:Paragraph
PATTERN ?paragraph eboca-ev:text ?text
",
    },
    CqEntry {
        id: "eboca-ev4",
        intent: "Which expressions (papers) do evidence paragraphs belong to?",
        text: "\
SELECT ?paragraph ?expression ?title
PATTERN ?paragraph rdf:type doco:Paragraph
PATTERN ?paragraph dct:isPartOf ?expression
PATTERN ?expression rdf:type fabio:Expression
PATTERN ?expression dct:title ?title
",
    },
    CqEntry {
        id: "eboca-ev5",
        intent: "Which software produced each evidence, and in which version?",
        text: "\
SELECT ?evidence ?software ?name ?version
PATTERN ?evidence rdf:type eboca-ev:Evidence
PATTERN ?evidence pav:createdWith ?software
PATTERN ?software rdfs:label ?name
PATTERN ?software pav:version ?version
",
    },
    CqEntry {
        id: "eboca-ev6",
        intent: "When was each evidence created, and under which version?",
        text: "\
SELECT ?evidence ?created ?version
PATTERN ?evidence rdf:type eboca-ev:Evidence
PATTERN ?evidence pav:createdOn ?created
PATTERN ?evidence pav:version ?version
",
    },
    CqEntry {
        id: "eboca-ev7",
        intent: "What confidence score does each evidence carry?",
        text: "\
SELECT ?evidence ?confidence
PATTERN ?evidence rdf:type eboca-ev:Evidence
PATTERN ?evidence eboca-ev:confidenceScore ?confidence
",
    },
];

/// All bundled competency questions, in catalog order.
pub fn catalog() -> &'static [CqEntry] {
    CATALOG
}

pub fn find(id: &str) -> Option<&'static CqEntry> {
    CATALOG.iter().find(|e| e.id == id)
}

/// Executes one catalog question against the graph.
pub fn run_cq(graph: &Graph, id: &str) -> Result<BindingSet, QueryError> {
    let entry = find(id).ok_or_else(|| QueryError::UnknownCq {
        id: id.to_string(),
        available: CATALOG.iter().map(|e| e.id).collect::<Vec<_>>().join(", "),
    })?;
    Ok(solve(graph, &entry.query()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_fifteen_concept_and_seven_evidence_questions() {
        let concept = CATALOG.iter().filter(|e| e.id.starts_with("cq")).count();
        let evidence = CATALOG
            .iter()
            .filter(|e| e.id.starts_with("eboca-ev"))
            .count();
        assert_eq!(concept, 15);
        assert_eq!(evidence, 7);
    }

    #[test]
    fn every_catalog_query_parses() {
        for entry in CATALOG {
            let _ = entry.query();
            assert!(!entry.intent.is_empty());
        }
    }

    #[test]
    fn any_cq_on_the_empty_graph_is_empty() {
        let graph = Graph::new();
        for entry in CATALOG {
            assert!(
                run_cq(&graph, entry.id).unwrap().is_empty(),
                "{} not empty",
                entry.id
            );
        }
    }

    #[test]
    fn unknown_cq_lists_available_ids() {
        let err = run_cq(&Graph::new(), "cq99").unwrap_err();
        match err {
            QueryError::UnknownCq { id, available } => {
                assert_eq!(id, "cq99");
                assert!(available.contains("cq01"));
                assert!(available.contains("eboca-ev7"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
