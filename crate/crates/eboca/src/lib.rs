//! Toolkit for building, validating, and querying RDF knowledge graphs that
//! follow the EBOCA schema: biomedical concept associations (SEM-DISNET)
//! enriched with evidence and provenance metadata (Evidences).
//!
//! The crate is organized around a small in-memory RDF core and the
//! pipeline stages layered on top of it:
//!
//! - [`rdf`] — terms, an indexed triple store, N-Triples and Turtle output,
//!   N-Triples parsing
//! - [`vocab`] — the vocabulary catalog every emitter draws from
//! - [`schema`] — typed concepts/associations, IRI minting, triple emitters,
//!   and the ontology axiom graph
//! - [`mapping`] — a declarative mapping language compiled and executed over
//!   CSV/TSV/JSON sources to materialize a graph
//! - [`annotate`] — turns NER extraction batches into association, evidence,
//!   and provenance triples
//! - [`validate`] — instance shape rules and the ontology pitfall scanner
//! - [`query`] — basic-graph-pattern evaluation and the bundled competency
//!   question catalog
//! - [`synth`] — synthetic source generator for scale testing
//! - [`cli`] — the `eboca` command-line pipeline
//!
//! The `examples/` directory holds one runnable example per capability; see
//! the repository README for the tour.

pub mod annotate;
pub mod cli;
pub mod mapping;
pub mod query;
pub mod rdf;
pub mod schema;
pub mod synth;
pub mod validate;
pub mod vocab;

pub use rdf::{Graph, Iri, Literal, Term, Triple};
