//! Instance validation and ontology pitfall scanning, on both clean and
//! deliberately broken graphs.
//!
//! Run with `cargo run --example validate_and_scan`.

use eboca::rdf::{Graph, Iri, Literal, Triple};
use eboca::schema::emit_ontology_axioms;
use eboca::validate::{scan_pitfalls, validate_instances, ScanOptions};
use eboca::vocab;

fn main() {
    // a score node violating the [0, 1] bound and an orphan paragraph
    let mut broken = Graph::new();
    let score = Iri::new("https://w3id.org/eboca/resource/score/demo").unwrap();
    broken.insert(Triple::new(
        score.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::NCIT_SCORE.clone(),
    ));
    broken.insert(Triple::new(
        score,
        vocab::SIO_HAS_VALUE.clone(),
        Literal::typed("1.5", vocab::XSD_DOUBLE.clone()).unwrap(),
    ));
    let paragraph = Iri::new("https://w3id.org/eboca/resource/paragraph/demo").unwrap();
    broken.insert(Triple::new(
        paragraph,
        vocab::RDF_TYPE.clone(),
        vocab::DOCO_PARAGRAPH.clone(),
    ));

    println!("instance findings on the broken graph:");
    for finding in validate_instances(&broken) {
        println!(
            "  [{}] {:?} {} — {}",
            finding.code,
            finding.severity,
            finding.subject.as_str(),
            finding.message
        );
    }

    // the exported axiom graph carries no error-severity pitfalls
    let axioms = emit_ontology_axioms();
    println!("\npitfall findings on the axiom graph (own terms only):");
    for finding in scan_pitfalls(&axioms, &ScanOptions::default()) {
        println!(
            "  [{}] {:?} {} — {}",
            finding.code,
            finding.severity,
            finding.subject.as_str(),
            finding.message
        );
    }

    // including reused terms surfaces what their home vocabularies leave to
    // their own documentation
    let findings = scan_pitfalls(
        &axioms,
        &ScanOptions {
            include_reused: true,
        },
    );
    println!("\nwith --include-reused the scan reports {} findings; the extra ones point at reused terms:", findings.len());
    for finding in findings
        .iter()
        .filter(|f| !f.subject.as_str().contains("eboca"))
        .take(6)
    {
        println!(
            "  [{}] {:?} {}",
            finding.code,
            finding.severity,
            finding.subject.as_str()
        );
    }
}
