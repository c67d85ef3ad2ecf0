//! Build a small graph by hand, match patterns against it, and print both
//! serialization formats.
//!
//! Run with `cargo run --example build_graph`.

use eboca::rdf::{ntriples, turtle, Graph, Iri, Literal, Triple};
use eboca::vocab;

fn main() {
    let mut graph = Graph::new();

    let diabetes = Iri::new("https://w3id.org/eboca/resource/disease/C0011849").unwrap();
    graph.insert(Triple::new(
        diabetes.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::NCIT_DISEASE.clone(),
    ));
    graph.insert(Triple::new(
        diabetes.clone(),
        vocab::RDFS_LABEL.clone(),
        Literal::simple("Diabetes Mellitus"),
    ));
    graph.insert(Triple::new(
        diabetes.clone(),
        vocab::RDFS_SEE_ALSO.clone(),
        Iri::new("https://meshb.nlm.nih.gov/record/ui?ui=D003920").unwrap(),
    ));

    // duplicate inserts are no-ops
    let fresh = graph.insert(Triple::new(
        diabetes.clone(),
        vocab::RDF_TYPE.clone(),
        vocab::NCIT_DISEASE.clone(),
    ));
    println!("second insert of the typing triple added anything: {fresh}");
    println!("graph size: {}\n", graph.len());

    println!("triples about <{}>:", diabetes.as_str());
    let subject = eboca::rdf::Subject::Iri(diabetes);
    for t in graph.matching(Some(&subject), None, None) {
        println!("  {}", ntriples::format_triple(t));
    }

    println!("\ncanonical N-Triples:\n{}", ntriples::serialize(&graph));
    println!(
        "Turtle with the catalog prefixes:\n{}",
        turtle::serialize(&graph, &vocab::default_prefixes())
    );
}
