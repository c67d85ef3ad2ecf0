//! Materialize the bundled DISNET-like fixture tables with the mapping
//! engine and print graph statistics.
//!
//! Run with `cargo run --example materialize_kg`.

use std::path::PathBuf;

use eboca::mapping::{materialize, parse_mapping_doc};

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");

    let map_text = std::fs::read_to_string(fixtures.join("mappings/sem_disnet.map")).unwrap();
    let doc = parse_mapping_doc(&map_text).unwrap();
    println!(
        "mapping document: {} prefixes, {} rules over the CSV tables",
        doc.prefixes.len(),
        doc.rules.len()
    );

    let graph = materialize(&doc, &fixtures).unwrap();
    println!("\n{}", eboca::cli::stats_text(&graph));

    // the same engine handles JSON sources through an iterator expression
    let json_map = std::fs::read_to_string(fixtures.join("mappings/drugs_json.map")).unwrap();
    let json_doc = parse_mapping_doc(&json_map).unwrap();
    let json_graph = materialize(&json_doc, &fixtures).unwrap();
    println!("JSON-source mapping produced {} triples:", json_graph.len());
    let mut lines: Vec<String> = json_graph
        .iter()
        .map(eboca::rdf::ntriples::format_triple)
        .collect();
    lines.sort();
    for line in lines {
        println!("  {line}");
    }
}
