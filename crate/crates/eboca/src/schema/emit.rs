//! Triple emitters for concepts, associations, and the ontology axioms.

use crate::rdf::{Graph, Iri, Literal, Triple};
use crate::vocab;

#[cfg(test)]
use super::AssociationKind;
use super::{AssociationRecord, ConceptEntity, MintKind};

fn typed(subject: Iri, class: &Iri) -> Triple {
    Triple::new(subject, vocab::RDF_TYPE.clone(), class.clone())
}

/// Triples describing one concept instance: a typing triple, an optional
/// label, one triple per attribute, and one `rdfs:seeAlso` per linkout.
pub fn concept_to_triples(concept: &ConceptEntity) -> Vec<Triple> {
    let iri = concept.iri();
    let mut out = vec![typed(iri.clone(), concept.kind.class())];
    if let Some(name) = &concept.name {
        out.push(Triple::new(
            iri.clone(),
            vocab::RDFS_LABEL.clone(),
            Literal::simple(name),
        ));
    }
    for (property, value) in &concept.attributes {
        out.push(Triple::new(iri.clone(), property.clone(), value.clone()));
    }
    for linkout in &concept.linkouts {
        out.push(Triple::new(
            iri.clone(),
            vocab::RDFS_SEE_ALSO.clone(),
            linkout.clone(),
        ));
    }
    out
}

/// Triples describing one association instance: its most specific typing
/// triple, a `refers to` link per endpoint, and — when a score is present —
/// a score node carrying the numeric value.
pub fn association_to_triples(association: &AssociationRecord) -> Vec<Triple> {
    let iri = association.iri();
    let mut out = vec![typed(iri.clone(), association.kind.class())];
    out.push(Triple::new(
        iri.clone(),
        vocab::SIO_REFERS_TO.clone(),
        association.source.iri(),
    ));
    out.push(Triple::new(
        iri.clone(),
        vocab::SIO_REFERS_TO.clone(),
        association.target.iri(),
    ));
    if let Some(score) = association.score {
        let score_id = format!("{}:{}", association.kind.slug(), association.local_id);
        let score_iri = super::mint_iri(MintKind::Score, &score_id).expect("score id is non-empty");
        out.push(Triple::new(
            iri,
            vocab::SIO_HAS_MEASUREMENT_VALUE.clone(),
            score_iri.clone(),
        ));
        out.push(typed(score_iri.clone(), &vocab::NCIT_SCORE));
        let value = Literal::typed(format!("{score}"), vocab::XSD_DOUBLE.clone())
            .expect("xsd:double literal");
        out.push(Triple::new(score_iri, vocab::SIO_HAS_VALUE.clone(), value));
    }
    out
}

struct AxiomWriter {
    graph: Graph,
}

impl AxiomWriter {
    fn add(&mut self, subject: &Iri, predicate: &Iri, object: &Iri) {
        self.graph.insert(Triple::new(
            subject.clone(),
            predicate.clone(),
            object.clone(),
        ));
    }

    fn annotate(&mut self, subject: &Iri, label: &str, comment: &str) {
        self.graph.insert(Triple::new(
            subject.clone(),
            vocab::RDFS_LABEL.clone(),
            Literal::simple(label),
        ));
        self.graph.insert(Triple::new(
            subject.clone(),
            vocab::RDFS_COMMENT.clone(),
            Literal::simple(comment),
        ));
    }

    fn declare_class(&mut self, class: &Iri) {
        self.add(class, &vocab::RDF_TYPE, &vocab::OWL_CLASS);
    }

    fn created_class(&mut self, class: &Iri, label: &str, comment: &str, parents: &[&Iri]) {
        self.declare_class(class);
        self.annotate(class, label, comment);
        for parent in parents {
            self.add(class, &vocab::RDFS_SUBCLASS_OF, parent);
        }
    }
}

/// The ontology axiom graph: class and property declarations, the
/// association hierarchy under the shared association superclass, the
/// created property hierarchy, and annotations plus domain/range for every
/// created term.
///
/// Reused terms are declared but deliberately left unannotated; they are
/// documented by their source vocabularies.
pub fn emit_ontology_axioms() -> Graph {
    let mut w = AxiomWriter {
        graph: Graph::new(),
    };

    // association hierarchy: every association class sits under the shared
    // superclass, directly or through an intermediate parent
    w.declare_class(&vocab::SIO_ASSOCIATION);
    for reused in [
        &vocab::SIO_DISEASE_GENE_ASSOCIATION,
        &vocab::SIO_DRUG_DRUG_INTERACTION,
        &vocab::NCIT_PPI,
        &vocab::CCO_DRUG_INDICATION,
        &vocab::SCT_SIDE_EFFECT,
        &vocab::CTD_CHEMICAL_DISEASE_ASSOCIATION,
    ] {
        w.declare_class(reused);
        w.add(reused, &vocab::RDFS_SUBCLASS_OF, &vocab::SIO_ASSOCIATION);
    }
    w.declare_class(&vocab::CCO_MECHANISM);

    w.created_class(
        &vocab::SD_DISEASE_VARIANT_ASSOCIATION,
        "disease-variant association",
        "Association between a disease and a sequence variant, quantified by a score.",
        &[&vocab::SIO_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_DISEASE_PHENOTYPE_ASSOCIATION,
        "disease-phenotype association",
        "Association between a disease and a phenotype observed with it.",
        &[&vocab::SIO_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_GENE_VARIANT_ASSOCIATION,
        "gene-variant association",
        "Association between a gene and a sequence variant located in or affecting it.",
        &[&vocab::SIO_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_GENE_PATHWAY_ASSOCIATION,
        "gene-pathway association",
        "Association between a gene and a biological pathway it participates in.",
        &[&vocab::SIO_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_DISEASE_NCRNA_ASSOCIATION,
        "disease-ncRNA association",
        "Association between a disease and a non-coding RNA.",
        &[&vocab::SIO_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_DRUG_DISEASE_MARKER,
        "drug-disease marker association",
        "Drug-disease association in which the chemical correlates with the disease.",
        &[&vocab::CTD_CHEMICAL_DISEASE_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_DRUG_DISEASE_THERAPEUTIC,
        "drug-disease therapeutic association",
        "Drug-disease association in which the drug is used to treat the disease.",
        &[&vocab::CTD_CHEMICAL_DISEASE_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_DRUG_DISEASE_INFERRED,
        "drug-disease inferred association",
        "Drug-disease association obtained by inference rather than curation.",
        &[&vocab::CTD_CHEMICAL_DISEASE_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_DRUG_TARGET_ASSOCIATION,
        "drug-target association",
        "Mechanism-of-action association between a drug and the target it addresses.",
        &[&vocab::CCO_MECHANISM, &vocab::SIO_ASSOCIATION],
    );
    w.created_class(
        &vocab::SD_PHENOTYPE,
        "phenotype",
        "An observable characteristic linked to diseases or to drug responses.",
        &[&vocab::OBO_PHENOTYPIC_ABNORMALITY],
    );
    w.created_class(
        &vocab::EV_EVIDENCE,
        "evidence",
        "Support for an association: what kind of finding backs it, when and by what it was produced, and where it derives from.",
        &[],
    );

    // reused object properties of the linking hierarchy; refers-to and
    // is-referred-to-by are declared inverses
    for reused in [
        &vocab::SIO_REFERS_TO,
        &vocab::SIO_IS_REFERRED_TO_BY,
        &vocab::CCO_HAS_MECHANISM,
    ] {
        w.add(reused, &vocab::RDF_TYPE, &vocab::OWL_OBJECT_PROPERTY);
    }
    w.add(
        &vocab::SIO_REFERS_TO,
        &vocab::OWL_INVERSE_OF,
        &vocab::SIO_IS_REFERRED_TO_BY,
    );

    // created object property: dual subproperty joining the ChEMBL meaning
    // with the generic is-referred-to-by direction
    let dfm = &vocab::SD_DRUG_FOR_MECHANISM;
    w.add(dfm, &vocab::RDF_TYPE, &vocab::OWL_OBJECT_PROPERTY);
    w.annotate(
        dfm,
        "drug for mechanism",
        "Connects a drug to a mechanism association that refers to it.",
    );
    w.add(dfm, &vocab::RDFS_SUBPROPERTY_OF, &vocab::CCO_HAS_MECHANISM);
    w.add(
        dfm,
        &vocab::RDFS_SUBPROPERTY_OF,
        &vocab::SIO_IS_REFERRED_TO_BY,
    );
    w.add(dfm, &vocab::RDFS_DOMAIN, &vocab::CCO_DRUG);
    w.add(dfm, &vocab::RDFS_RANGE, &vocab::SD_DRUG_TARGET_ASSOCIATION);

    // created datatype properties of the evidences module
    let datatype_props: [(&Iri, &str, &str, &Iri, &Iri); 3] = [
        (
            &vocab::EV_CONFIDENCE_SCORE,
            "confidence score",
            "Confidence the producing method assigns to an evidence, in [0, 1].",
            &vocab::EV_EVIDENCE,
            &vocab::XSD_DOUBLE,
        ),
        (
            &vocab::EV_TEXT,
            "text",
            "Complete text of a paragraph.",
            &vocab::DOCO_PARAGRAPH,
            &vocab::XSD_STRING,
        ),
        (
            &vocab::EV_SECTION,
            "section",
            "Name of the document section a paragraph belongs to.",
            &vocab::DOCO_PARAGRAPH,
            &vocab::XSD_STRING,
        ),
    ];
    for (prop, label, comment, domain, range) in datatype_props {
        w.add(prop, &vocab::RDF_TYPE, &vocab::OWL_DATATYPE_PROPERTY);
        w.annotate(prop, label, comment);
        w.add(prop, &vocab::RDFS_DOMAIN, domain);
        w.add(prop, &vocab::RDFS_RANGE, range);
    }
    w.declare_class(&vocab::DOCO_PARAGRAPH);

    w.graph
}

#[cfg(test)]
fn association_classes() -> Vec<&'static Iri> {
    AssociationKind::ALL.iter().map(|k| k.class()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::{AssociationRecord, ConceptEntity, ConceptKind, ConceptRef, MintKind};
    use crate::vocab;

    #[test]
    fn disease_with_name_emits_type_and_label() {
        let disease = ConceptEntity::new(ConceptKind::Disease, "C0011849")
            .unwrap()
            .with_name("Diabetes Mellitus");
        let triples = concept_to_triples(&disease);
        assert_eq!(triples.len(), 2);
        let g: Graph = triples.into_iter().collect();
        let iri = disease.iri();
        assert!(g.contains(&Triple::new(
            iri.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::NCIT_DISEASE.clone()
        )));
        assert!(g.contains(&Triple::new(
            iri,
            vocab::RDFS_LABEL.clone(),
            Literal::simple("Diabetes Mellitus")
        )));
    }

    #[test]
    fn bare_drug_emits_exactly_one_typing_triple() {
        let drug = ConceptEntity::new(ConceptKind::Drug, "CHEMBL25").unwrap();
        let triples = concept_to_triples(&drug);
        assert_eq!(triples.len(), 1);
        assert_eq!(triples[0].predicate, *vocab::RDF_TYPE);
        assert_eq!(triples[0].object, Term::Iri(vocab::CCO_DRUG.clone()));
    }

    use crate::rdf::Term;

    #[test]
    fn gene_with_pathway_linkout_emits_two_triples() {
        let pathway_iri =
            crate::schema::mint_iri(MintKind::Concept(ConceptKind::Pathway), "WP534").unwrap();
        let gene = ConceptEntity::new(ConceptKind::Gene, "3630")
            .unwrap()
            .with_linkout(pathway_iri.clone());
        let triples = concept_to_triples(&gene);
        assert_eq!(triples.len(), 2);
        assert!(triples
            .iter()
            .any(|t| t.predicate == *vocab::RDFS_SEE_ALSO
                && t.object == Term::Iri(pathway_iri.clone())));
    }

    #[test]
    fn scored_disease_gene_association_emits_score_node() {
        let disease = ConceptRef::new(ConceptKind::Disease, "C0011849").unwrap();
        let gene = ConceptRef::new(ConceptKind::Gene, "3630").unwrap();
        let assoc = AssociationRecord::new(
            AssociationKind::DiseaseGene,
            disease.clone(),
            gene.clone(),
            Some(0.7),
            "dg1",
        )
        .unwrap();
        let g: Graph = association_to_triples(&assoc).into_iter().collect();
        assert_eq!(g.len(), 6);

        let a = assoc.iri();
        assert!(g.contains(&Triple::new(
            a.clone(),
            vocab::RDF_TYPE.clone(),
            vocab::SIO_DISEASE_GENE_ASSOCIATION.clone()
        )));
        assert!(g.contains(&Triple::new(
            a.clone(),
            vocab::SIO_REFERS_TO.clone(),
            disease.iri()
        )));
        assert!(g.contains(&Triple::new(
            a.clone(),
            vocab::SIO_REFERS_TO.clone(),
            gene.iri()
        )));

        let score_node = g
            .matching(None, Some(&vocab::SIO_HAS_MEASUREMENT_VALUE), None)
            .next()
            .expect("score link")
            .object
            .clone();
        let score_subject = score_node.to_subject().unwrap();
        assert!(g
            .matching(
                Some(&score_subject),
                Some(&vocab::RDF_TYPE),
                Some(&Term::Iri(vocab::NCIT_SCORE.clone()))
            )
            .next()
            .is_some());
        let value = g
            .matching(Some(&score_subject), Some(&vocab::SIO_HAS_VALUE), None)
            .next()
            .unwrap()
            .object
            .clone();
        let lit = value.as_literal().unwrap();
        assert_eq!(lit.lexical(), "0.7");
        assert_eq!(lit.datatype(), &*vocab::XSD_DOUBLE);
    }

    #[test]
    fn unscored_association_has_no_score_triples() {
        let drug = ConceptRef::new(ConceptKind::Drug, "CHEMBL1431").unwrap();
        let disease = ConceptRef::new(ConceptKind::Disease, "C0011849").unwrap();
        let assoc = AssociationRecord::new(
            AssociationKind::DrugDiseaseTherapeutic,
            drug,
            disease,
            None,
            "ddt1",
        )
        .unwrap();
        let triples = association_to_triples(&assoc);
        assert_eq!(triples.len(), 3);
        assert!(triples
            .iter()
            .any(|t| t.object == Term::Iri(vocab::SD_DRUG_DISEASE_THERAPEUTIC.clone())));
        assert!(!triples
            .iter()
            .any(|t| t.predicate == *vocab::SIO_HAS_MEASUREMENT_VALUE));
    }

    #[test]
    fn drug_drug_interaction_types_to_the_reused_class() {
        let a = ConceptRef::new(ConceptKind::Drug, "CHEMBL25").unwrap();
        let b = ConceptRef::new(ConceptKind::Drug, "CHEMBL1431").unwrap();
        let assoc = AssociationRecord::new(AssociationKind::DrugDrugInteraction, a, b, None, "dd1")
            .unwrap();
        let g: Graph = association_to_triples(&assoc).into_iter().collect();
        assert_eq!(g.len(), 3);
        assert!(g.contains(&Triple::new(
            assoc.iri(),
            vocab::RDF_TYPE.clone(),
            vocab::SIO_DRUG_DRUG_INTERACTION.clone()
        )));
        assert_eq!(
            g.matching(None, Some(&vocab::SIO_REFERS_TO), None).count(),
            2
        );
    }

    #[test]
    fn axioms_put_every_association_class_under_the_superclass() {
        let axioms = emit_ontology_axioms();
        let top = Term::Iri(vocab::SIO_ASSOCIATION.clone());
        for class in association_classes() {
            let mut reachable = vec![class.clone()];
            let mut seen = false;
            while let Some(current) = reachable.pop() {
                for t in axioms.matching(
                    Some(&crate::rdf::Subject::Iri(current.clone())),
                    Some(&vocab::RDFS_SUBCLASS_OF),
                    None,
                ) {
                    if t.object == top {
                        seen = true;
                    } else if let Term::Iri(parent) = &t.object {
                        reachable.push(parent.clone());
                    }
                }
            }
            assert!(
                seen,
                "{} does not reach the association superclass",
                class.as_str()
            );
        }
    }

    #[test]
    fn axioms_contain_the_expected_hierarchy_edges() {
        let axioms = emit_ontology_axioms();
        assert!(axioms.contains(&Triple::new(
            vocab::SD_DRUG_DISEASE_MARKER.clone(),
            vocab::RDFS_SUBCLASS_OF.clone(),
            vocab::CTD_CHEMICAL_DISEASE_ASSOCIATION.clone()
        )));
        assert!(axioms.contains(&Triple::new(
            vocab::SD_DRUG_FOR_MECHANISM.clone(),
            vocab::RDFS_SUBPROPERTY_OF.clone(),
            vocab::CCO_HAS_MECHANISM.clone()
        )));
        assert!(axioms.contains(&Triple::new(
            vocab::SD_DRUG_FOR_MECHANISM.clone(),
            vocab::RDFS_SUBPROPERTY_OF.clone(),
            vocab::SIO_IS_REFERRED_TO_BY.clone()
        )));
        assert!(axioms.contains(&Triple::new(
            vocab::SD_DRUG_TARGET_ASSOCIATION.clone(),
            vocab::RDFS_SUBCLASS_OF.clone(),
            vocab::CCO_MECHANISM.clone()
        )));
    }

    #[test]
    fn emitters_are_deterministic() {
        let disease = ConceptRef::new(ConceptKind::Disease, "C0011849").unwrap();
        let gene = ConceptRef::new(ConceptKind::Gene, "3630").unwrap();
        let assoc = AssociationRecord::new(
            AssociationKind::DiseaseGene,
            disease,
            gene,
            Some(0.35),
            "dg9",
        )
        .unwrap();
        assert_eq!(
            association_to_triples(&assoc),
            association_to_triples(&assoc)
        );
        assert_eq!(emit_ontology_axioms(), emit_ontology_axioms());
    }

    #[test]
    fn emitted_iris_are_catalog_or_minted() {
        let disease = ConceptEntity::new(ConceptKind::Disease, "C0011849")
            .unwrap()
            .with_name("Diabetes Mellitus")
            .with_linkout(Iri::new("https://meshb.nlm.nih.gov/record/ui?ui=D003920").unwrap());
        let gene = ConceptEntity::new(ConceptKind::Gene, "3630").unwrap();
        let assoc = AssociationRecord::new(
            AssociationKind::DiseaseGene,
            ConceptRef::from(&disease),
            ConceptRef::from(&gene),
            Some(0.7),
            "dg1",
        )
        .unwrap();

        let mut triples = concept_to_triples(&disease);
        triples.extend(concept_to_triples(&gene));
        triples.extend(association_to_triples(&assoc));
        triples.extend(emit_ontology_axioms().iter().cloned());

        for t in &triples {
            if let crate::rdf::Subject::Iri(iri) = &t.subject {
                assert!(vocab::is_known(iri), "unknown subject {}", iri.as_str());
            }
            assert!(
                vocab::is_known(&t.predicate),
                "unknown predicate {}",
                t.predicate.as_str()
            );
            if let Term::Iri(iri) = &t.object {
                // linkouts are externally provided targets, everything else
                // must be catalog or minted
                let is_linkout = t.predicate == *vocab::RDFS_SEE_ALSO;
                assert!(
                    is_linkout || vocab::is_known(iri),
                    "unknown object {}",
                    iri.as_str()
                );
            }
        }
    }
}
