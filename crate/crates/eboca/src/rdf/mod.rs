//! RDF data model, indexed graph store, and serialization.

pub mod graph;
pub mod ntriples;
pub mod term;
pub mod turtle;

pub use graph::Graph;
pub use term::{BlankNode, Iri, Literal, Subject, Term, TermError, Triple};
