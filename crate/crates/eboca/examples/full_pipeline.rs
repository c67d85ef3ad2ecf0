//! The whole pipeline through the command-line entry point: materialize,
//! annotate, merge, validate, scan, query, stats — writing into
//! `target/full-pipeline-out/`.
//!
//! Run with `cargo run --example full_pipeline`.

use std::path::PathBuf;

use eboca::cli::run;

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let out_dir = std::env::temp_dir().join("eboca-full-pipeline-out");
    std::fs::create_dir_all(&out_dir).unwrap();
    let path = |name: &str| out_dir.join(name).to_str().unwrap().to_string();
    let fixture = |name: &str| fixtures.join(name).to_str().unwrap().to_string();

    let steps: Vec<Vec<String>> = vec![
        vec![
            "eboca".into(),
            "materialize".into(),
            "--mapping".into(),
            fixture("mappings/sem_disnet.map"),
            "--base-dir".into(),
            fixtures.to_str().unwrap().into(),
            "--out".into(),
            path("kg.nt"),
        ],
        vec![
            "eboca".into(),
            "annotate".into(),
            "--input".into(),
            fixture("ner/cord19_sample.jsonl"),
            "--created-on".into(),
            "2022-05-01".into(),
            "--out".into(),
            path("evidence.nt"),
        ],
        vec![
            "eboca".into(),
            "merge".into(),
            path("kg.nt"),
            path("evidence.nt"),
            "--out".into(),
            path("merged.nt"),
        ],
        vec![
            "eboca".into(),
            "validate".into(),
            "--graph".into(),
            path("merged.nt"),
            "--report".into(),
            path("report.json"),
        ],
        vec![
            "eboca".into(),
            "export-axioms".into(),
            "--out".into(),
            path("eboca-axioms.ttl"),
        ],
        vec![
            "eboca".into(),
            "scan".into(),
            "--ontology".into(),
            path("eboca-axioms.ttl"),
            "--report".into(),
            path("scan.json"),
        ],
        vec![
            "eboca".into(),
            "query".into(),
            "--graph".into(),
            path("merged.nt"),
            "--cq".into(),
            "cq03".into(),
            "--out".into(),
            path("cq03.tsv"),
        ],
        vec![
            "eboca".into(),
            "stats".into(),
            "--graph".into(),
            path("merged.nt"),
        ],
    ];

    for step in steps {
        println!("$ {}", step.join(" "));
        let code = run(step);
        assert_eq!(code, 0, "pipeline step failed");
    }

    println!("\noutputs in {}:", out_dir.display());
    let mut names: Vec<String> = std::fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    for name in names {
        println!("  {name}");
    }
}
