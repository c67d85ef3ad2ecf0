//! Run the bundled competency-question catalog against the fixture
//! knowledge graph, plus one ad-hoc query.
//!
//! Run with `cargo run --example competency_queries`.

use std::path::PathBuf;

use chrono::NaiveDate;
use eboca::annotate::{annotate_batch, parse_batch, AnnotatorConfig};
use eboca::mapping::{materialize, parse_mapping_doc};
use eboca::query::{catalog, parse_query, run_cq, solve};

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let map_text = std::fs::read_to_string(fixtures.join("mappings/sem_disnet.map")).unwrap();
    let mut graph = materialize(&parse_mapping_doc(&map_text).unwrap(), &fixtures).unwrap();

    let ner = std::fs::read_to_string(fixtures.join("ner/cord19_sample.jsonl")).unwrap();
    let config = AnnotatorConfig {
        created_on: NaiveDate::from_ymd_opt(2022, 5, 1).unwrap(),
    };
    let (evidence_graph, _) = annotate_batch(&parse_batch(&ner).unwrap(), &config).unwrap();
    graph.merge(&evidence_graph);

    println!("merged knowledge graph: {} triples\n", graph.len());
    for entry in catalog() {
        let result = run_cq(&graph, entry.id).unwrap();
        println!(
            "{:<10} {:>3} rows  {}",
            entry.id,
            result.len(),
            entry.intent
        );
    }

    // eboca-ev7 is empty because the extractor reports no confidence scores
    let ev7 = run_cq(&graph, "eboca-ev7").unwrap();
    println!("\neboca-ev7 row count on this batch: {}\n", ev7.len());

    let query = parse_query(
        "# therapeutic drugs and their diseases, as labels\n\
         SELECT ?drugName ?diseaseName\n\
         PATTERN ?assoc rdf:type eboca-sd:DrugDiseaseTherapeutic\n\
         PATTERN ?assoc sio:SIO_000628 ?drug\n\
         PATTERN ?assoc sio:SIO_000628 ?disease\n\
         PATTERN ?drug rdf:type cco:Drug\n\
         PATTERN ?disease rdf:type ncit:C7057\n\
         PATTERN ?drug rdfs:label ?drugName\n\
         PATTERN ?disease rdfs:label ?diseaseName\n",
    )
    .unwrap();
    println!("ad-hoc query result:\n{}", solve(&graph, &query).to_tsv());
}
