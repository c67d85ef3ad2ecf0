//! Turn the bundled NER extraction batch into association, evidence, and
//! provenance triples.
//!
//! Run with `cargo run --example annotate_paragraphs`.

use std::path::PathBuf;

use chrono::NaiveDate;
use eboca::annotate::{annotate_batch, extract_associations, parse_batch, AnnotatorConfig};
use eboca::rdf::ntriples;

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let text = std::fs::read_to_string(fixtures.join("ner/cord19_sample.jsonl")).unwrap();
    let batch = parse_batch(&text).unwrap();
    let config = AnnotatorConfig {
        created_on: NaiveDate::from_ymd_opt(2022, 5, 1).unwrap(),
    };

    println!("per-paragraph associations:");
    for paragraph in &batch {
        let (pairs, warnings) = extract_associations(paragraph, &config).unwrap();
        println!(
            "  {}: {} entities -> {} associations",
            paragraph.paragraph_id,
            paragraph.entities.len(),
            pairs.len()
        );
        for (association, evidence) in &pairs {
            println!(
                "      {:?} {} (evidence {})",
                association.kind, association.local_id, evidence.evidence_id
            );
        }
        for warning in warnings {
            println!("      warning: {warning}");
        }
    }

    let (graph, _) = annotate_batch(&batch, &config).unwrap();
    println!("\nannotated graph: {} triples; a sample:", graph.len());
    let mut lines: Vec<String> = graph.iter().map(ntriples::format_triple).collect();
    lines.sort();
    for line in lines.iter().take(12) {
        println!("  {line}");
    }
}
