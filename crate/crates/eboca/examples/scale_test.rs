//! Generate synthetic sources at a chosen scale, materialize them, and
//! check the closed-form triple count. Pass a target triple count as the
//! first argument (default 100000).
//!
//! Run with `cargo run --release --example scale_test -- 1000000`.

use std::time::Instant;

use eboca::mapping::{materialize, parse_mapping_doc};
use eboca::synth::{generate, SynthConfig};

fn main() {
    let target: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100_000);
    let config = SynthConfig::for_target_triples(target);
    println!("target {target} triples -> {config:?}");
    println!(
        "closed-form expectation: {} triples",
        config.expected_triples()
    );

    let dir = tempfile::tempdir().unwrap();
    let started = Instant::now();
    let plan = generate(dir.path(), &config).unwrap();
    println!("generated sources in {:?}", started.elapsed());

    let map_text = std::fs::read_to_string(&plan.mapping_path).unwrap();
    let doc = parse_mapping_doc(&map_text).unwrap();
    let started = Instant::now();
    let graph = materialize(&doc, dir.path()).unwrap();
    let elapsed = started.elapsed();

    assert_eq!(
        graph.len(),
        plan.expected_triples,
        "count must match the closed form"
    );
    println!("materialized {} triples in {elapsed:?}", graph.len());
    println!("\n{}", head(&eboca::cli::stats_text(&graph), 8));
}

fn head(text: &str, lines: usize) -> String {
    text.lines().take(lines).collect::<Vec<_>>().join("\n")
}
