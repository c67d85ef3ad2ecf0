//! The `eboca` command line: materialize, annotate, merge, validate, scan,
//! query, stats, and axiom export.
//!
//! All graph outputs are canonical sorted N-Triples so runs are
//! byte-reproducible and golden-file friendly. Logs go to standard error
//! only. Exit status: 0 on success (and on validation runs that found no
//! Error-severity findings), 1 when Error findings were detected, 2 for
//! usage or operational failures.

mod turtle_in;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use clap::{Parser, Subcommand, ValueEnum};

use crate::annotate::{annotate_batch, parse_batch, AnnotatorConfig};
use crate::mapping::{materialize, parse_mapping_doc};
use crate::query::{parse_query, run_cq, solve, BindingSet};
use crate::rdf::{ntriples, turtle, Graph};
use crate::schema::emit_ontology_axioms;
use crate::validate::{scan_pitfalls, validate_instances, Finding, ScanOptions, Severity};
use crate::vocab;

#[derive(Parser)]
#[command(
    name = "eboca",
    version,
    about = "Build, validate, and query EBOCA knowledge graphs"
)]
struct Cli {
    /// More log output on standard error (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a mapping document over its sources and write the graph.
    Materialize {
        /// Mapping document path.
        #[arg(long)]
        mapping: PathBuf,
        /// Directory source paths resolve against; defaults to the mapping
        /// document's directory.
        #[arg(long)]
        base_dir: Option<PathBuf>,
        /// Output N-Triples file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Turn an NER extraction batch (JSON Lines) into evidence triples.
    Annotate {
        /// Input JSON Lines file, one paragraph per line.
        #[arg(long)]
        input: PathBuf,
        /// Output N-Triples file.
        #[arg(long)]
        out: PathBuf,
        /// Evidence creation date (YYYY-MM-DD); defaults to today. Pin it
        /// for reproducible output.
        #[arg(long)]
        created_on: Option<NaiveDate>,
    },
    /// Set-union several N-Triples graphs.
    Merge {
        /// Input N-Triples files.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Output N-Triples file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check an instance graph against the built-in shape rules.
    Validate {
        /// Graph to validate (N-Triples).
        #[arg(long)]
        graph: PathBuf,
        /// Write the findings as JSON here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Scan an ontology graph for modeling pitfalls.
    Scan {
        /// Ontology graph (N-Triples or the Turtle subset this tool emits).
        #[arg(long)]
        ontology: PathBuf,
        /// Write the findings as JSON here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also report findings on reused (non-EBOCA) terms.
        #[arg(long)]
        include_reused: bool,
    },
    /// Run a bundled competency question or a query file.
    Query {
        /// Graph to query (N-Triples).
        #[arg(long)]
        graph: PathBuf,
        /// Competency question id (see `docs/cq-catalog.md`).
        #[arg(long, conflicts_with = "query")]
        cq: Option<String>,
        /// Query file in the line-oriented pattern syntax.
        #[arg(long)]
        query: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = QueryFormat::Tsv)]
        format: QueryFormat,
        /// Write results here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print triple count, distinct subjects/predicates, and per-class
    /// instance counts.
    Stats {
        /// Graph to summarize (N-Triples).
        #[arg(long)]
        graph: PathBuf,
    },
    /// Write the ontology axiom graph (Turtle for .ttl, N-Triples
    /// otherwise).
    ExportAxioms {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QueryFormat {
    Tsv,
    Json,
}

/// Parses `argv` and runs the selected subcommand, returning the process
/// exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    init_logging(cli.verbose);
    match execute(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    let _ = env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .try_init();
}

fn execute(command: Command) -> Result<i32, String> {
    match command {
        Command::Materialize {
            mapping,
            base_dir,
            out,
        } => {
            let text = read_text(&mapping)?;
            let doc =
                parse_mapping_doc(&text).map_err(|e| format!("{}: {e}", mapping.display()))?;
            let base = base_dir
                .unwrap_or_else(|| mapping.parent().unwrap_or(Path::new(".")).to_path_buf());
            let graph = materialize(&doc, &base).map_err(|e| e.to_string())?;
            log::info!(
                "materialized {} triples from {} rules",
                graph.len(),
                doc.rules.len()
            );
            write_text(&out, &ntriples::serialize(&graph))?;
            Ok(0)
        }
        Command::Annotate {
            input,
            out,
            created_on,
        } => {
            let text = read_text(&input)?;
            let batch = parse_batch(&text).map_err(|e| format!("{}: {e}", input.display()))?;
            let created_on = created_on.unwrap_or_else(|| chrono::Local::now().date_naive());
            let (graph, warnings) = annotate_batch(&batch, &AnnotatorConfig { created_on })
                .map_err(|e| format!("{}: {e}", input.display()))?;
            for warning in warnings {
                log::warn!("{warning}");
            }
            log::info!(
                "annotated {} paragraphs into {} triples",
                batch.len(),
                graph.len()
            );
            write_text(&out, &ntriples::serialize(&graph))?;
            Ok(0)
        }
        Command::Merge { inputs, out } => {
            let mut merged = Graph::new();
            for input in &inputs {
                let graph = read_graph(input)?;
                merged.merge(&graph);
            }
            log::info!(
                "merged {} files into {} triples",
                inputs.len(),
                merged.len()
            );
            write_text(&out, &ntriples::serialize(&merged))?;
            Ok(0)
        }
        Command::Validate { graph, report } => {
            let g = read_graph(&graph)?;
            let findings = validate_instances(&g);
            emit_findings(&findings, report.as_deref())?;
            Ok(exit_for_findings(&findings))
        }
        Command::Scan {
            ontology,
            report,
            include_reused,
        } => {
            let g = read_graph(&ontology)?;
            let findings = scan_pitfalls(&g, &ScanOptions { include_reused });
            emit_findings(&findings, report.as_deref())?;
            Ok(exit_for_findings(&findings))
        }
        Command::Query {
            graph,
            cq,
            query,
            format,
            out,
        } => {
            let g = read_graph(&graph)?;
            let bindings = match (cq, query) {
                (Some(id), None) => run_cq(&g, &id).map_err(|e| e.to_string())?,
                (None, Some(path)) => {
                    let text = read_text(&path)?;
                    let parsed =
                        parse_query(&text).map_err(|e| format!("{}: {e}", path.display()))?;
                    solve(&g, &parsed)
                }
                _ => return Err("exactly one of --cq or --query is required".to_string()),
            };
            let rendered = render_bindings(&bindings, format);
            match out {
                Some(path) => write_text(&path, &rendered)?,
                None => print!("{rendered}"),
            }
            Ok(0)
        }
        Command::Stats { graph } => {
            let g = read_graph(&graph)?;
            print!("{}", stats_text(&g));
            Ok(0)
        }
        Command::ExportAxioms { out } => {
            let axioms = emit_ontology_axioms();
            let rendered = if out.extension().is_some_and(|e| e == "ttl") {
                turtle::serialize(&axioms, &vocab::default_prefixes())
            } else {
                ntriples::serialize(&axioms)
            };
            write_text(&out, &rendered)?;
            Ok(0)
        }
    }
}

fn render_bindings(bindings: &BindingSet, format: QueryFormat) -> String {
    match format {
        QueryFormat::Tsv => bindings.to_tsv(),
        QueryFormat::Json => {
            let mut out = bindings.to_json();
            out.push('\n');
            out
        }
    }
}

fn exit_for_findings(findings: &[Finding]) -> i32 {
    if findings.iter().any(|f| f.severity == Severity::Error) {
        1
    } else {
        0
    }
}

fn emit_findings(findings: &[Finding], report: Option<&Path>) -> Result<(), String> {
    let json = serde_json::to_string_pretty(findings).expect("findings serialize");
    match report {
        Some(path) => write_text(path, &format!("{json}\n"))?,
        None => println!("{json}"),
    }
    let errors = findings
        .iter()
        .filter(|f| f.severity == Severity::Error)
        .count();
    let warnings = findings.len() - errors;
    eprintln!(
        "{} findings ({errors} errors, {warnings} warnings)",
        findings.len()
    );
    for finding in findings {
        eprintln!(
            "  [{}] {:?} {} — {}",
            finding.code,
            finding.severity,
            finding.subject.as_str(),
            finding.message
        );
    }
    Ok(())
}

/// Summary counts: total triples, distinct subjects and predicates, and
/// instances per class.
pub fn stats_text(graph: &Graph) -> String {
    use std::collections::BTreeMap;
    let mut out = String::new();
    out.push_str(&format!("triples: {}\n", graph.len()));
    out.push_str(&format!(
        "distinct subjects: {}\n",
        graph.subjects().count()
    ));
    out.push_str(&format!(
        "distinct predicates: {}\n",
        graph.predicates().count()
    ));

    let mut per_class: BTreeMap<String, usize> = BTreeMap::new();
    for t in graph.matching(None, Some(&vocab::RDF_TYPE), None) {
        if let crate::rdf::Term::Iri(class) = &t.object {
            *per_class.entry(class.as_str().to_string()).or_default() += 1;
        }
    }
    out.push_str("instances by class:\n");
    for (class, count) in per_class {
        out.push_str(&format!("  <{class}>: {count}\n"));
    }
    out
}

fn read_text(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write_text(path: &Path, content: &str) -> Result<(), String> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)
                .map_err(|e| format!("cannot create {}: {e}", parent.display()))?;
        }
    }
    fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Reads a graph file. `.ttl` files go through the Turtle subset reader,
/// everything else is parsed as N-Triples.
pub fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = read_text(path)?;
    if path.extension().is_some_and(|e| e == "ttl") {
        turtle_in::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    } else {
        ntriples::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_text_counts_classes() {
        use crate::rdf::{Iri, Triple};
        let mut g = Graph::new();
        let class = Iri::new("http://x/C").unwrap();
        g.insert(Triple::new(
            Iri::new("http://x/a").unwrap(),
            vocab::RDF_TYPE.clone(),
            class.clone(),
        ));
        g.insert(Triple::new(
            Iri::new("http://x/b").unwrap(),
            vocab::RDF_TYPE.clone(),
            class,
        ));
        let text = stats_text(&g);
        assert!(text.contains("triples: 2"));
        assert!(text.contains("distinct subjects: 2"));
        assert!(text.contains("distinct predicates: 1"));
        assert!(text.contains("<http://x/C>: 2"));
    }

    #[test]
    fn bad_flags_return_usage_exit() {
        assert_eq!(run(["eboca", "no-such-command"]), 2);
        assert_eq!(run(["eboca", "query", "--graph", "x.nt"]), 2);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run(["eboca", "--help"]), 0);
    }

    #[test]
    fn missing_input_file_is_an_operational_error() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("out.nt");
        let code = run([
            "eboca",
            "merge",
            dir.path().join("absent.nt").to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 2);
    }
}
