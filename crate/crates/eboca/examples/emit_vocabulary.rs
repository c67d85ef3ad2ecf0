//! The typed domain model: mint instance IRIs, emit concept and association
//! triples, and export the ontology axiom graph.
//!
//! Run with `cargo run --example emit_vocabulary`.

use eboca::rdf::{ntriples, turtle};
use eboca::schema::{
    association_to_triples, concept_to_triples, emit_ontology_axioms, mint_iri, AssociationKind,
    AssociationRecord, ConceptEntity, ConceptKind, ConceptRef, MintKind,
};
use eboca::vocab;

fn main() {
    // deterministic instance IRIs
    let minted = mint_iri(MintKind::Concept(ConceptKind::Drug), "CHEMBL 25").unwrap();
    println!(
        "minted drug IRI (space percent-encoded): {}\n",
        minted.as_str()
    );

    // one concept with a label and a linkout
    let disease = ConceptEntity::new(ConceptKind::Disease, "C0011849")
        .unwrap()
        .with_name("Diabetes Mellitus")
        .with_linkout(
            eboca::rdf::Iri::new("https://meshb.nlm.nih.gov/record/ui?ui=D003920").unwrap(),
        );
    let gene = ConceptEntity::new(ConceptKind::Gene, "3630")
        .unwrap()
        .with_name("INS");

    // a scored association between them
    let association = AssociationRecord::new(
        AssociationKind::DiseaseGene,
        ConceptRef::from(&disease),
        ConceptRef::from(&gene),
        Some(0.9),
        "dg-example",
    )
    .unwrap();

    let mut triples = concept_to_triples(&disease);
    triples.extend(concept_to_triples(&gene));
    triples.extend(association_to_triples(&association));
    println!("emitted instance triples:");
    for t in &triples {
        println!("  {}", ntriples::format_triple(t));
    }

    // the axiom graph puts every association class under the shared
    // association superclass and documents all created terms
    let axioms = emit_ontology_axioms();
    println!("\naxiom graph ({} triples), as Turtle:\n", axioms.len());
    println!("{}", turtle::serialize(&axioms, &vocab::default_prefixes()));

    println!(
        "vocabulary catalog ({} terms), first ten rows:",
        vocab::CATALOG.len()
    );
    for line in vocab::catalog_table().lines().take(10) {
        println!("  {line}");
    }
}
