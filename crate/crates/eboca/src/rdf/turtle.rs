//! Turtle output for human inspection and ontology export.

use indexmap::IndexMap;

use super::graph::Graph;
use super::ntriples::{format_literal, format_subject, format_term};
use super::term::{Iri, Term, Triple};

const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

/// Serializes a graph as Turtle.
///
/// IRIs under a declared namespace are compacted to prefixed names when the
/// remainder is a safe local name. Subjects are grouped and every level is
/// sorted by its N-Triples rendering, so output is deterministic for equal
/// graphs.
pub fn serialize(graph: &Graph, prefixes: &IndexMap<String, Iri>) -> String {
    let mut decls: Vec<(&str, &Iri)> = prefixes.iter().map(|(p, ns)| (p.as_str(), ns)).collect();
    decls.sort_unstable_by_key(|(p, _)| *p);

    let mut out = String::new();
    for (prefix, ns) in &decls {
        out.push_str(&format!("@prefix {}: <{}> .\n", prefix, ns.as_str()));
    }

    // subject -> predicate -> objects, each layer sorted by serialized form
    let mut triples: Vec<&Triple> = graph.iter().collect();
    triples.sort_unstable_by_key(|t| {
        (
            format_subject(&t.subject),
            predicate_sort_key(&t.predicate),
            format_term(&t.object),
        )
    });

    let mut current_subject: Option<String> = None;
    let mut current_predicate: Option<String> = None;
    for t in triples {
        let subj = format_subject(&t.subject);
        let subj_rendered = match &t.subject {
            super::term::Subject::Iri(iri) => render_iri(iri, &decls),
            super::term::Subject::Blank(b) => format!("_:{}", b.label()),
        };
        let pred_rendered = if t.predicate.as_str() == RDF_TYPE {
            "a".to_string()
        } else {
            render_iri(&t.predicate, &decls)
        };
        let obj_rendered = match &t.object {
            Term::Iri(iri) => render_iri(iri, &decls),
            Term::Blank(b) => format!("_:{}", b.label()),
            Term::Literal(lit) => render_literal(lit, &decls),
        };

        if current_subject.as_deref() != Some(&subj) {
            if current_subject.is_some() {
                out.push_str(" .\n");
            }
            out.push('\n');
            out.push_str(&subj_rendered);
            out.push(' ');
            out.push_str(&pred_rendered);
            out.push(' ');
            out.push_str(&obj_rendered);
            current_subject = Some(subj);
            current_predicate = Some(pred_rendered);
        } else if current_predicate.as_deref() != Some(&pred_rendered) {
            out.push_str(" ;\n    ");
            out.push_str(&pred_rendered);
            out.push(' ');
            out.push_str(&obj_rendered);
            current_predicate = Some(pred_rendered);
        } else {
            out.push_str(", ");
            out.push_str(&obj_rendered);
        }
    }
    if current_subject.is_some() {
        out.push_str(" .\n");
    }
    out
}

fn predicate_sort_key(p: &Iri) -> String {
    // rdf:type leads its subject block, everything else sorts by IRI
    if p.as_str() == RDF_TYPE {
        String::new()
    } else {
        format!("<{}>", p.as_str())
    }
}

fn render_iri(iri: &Iri, decls: &[(&str, &Iri)]) -> String {
    let mut best: Option<(&str, &str)> = None;
    for (prefix, ns) in decls {
        if let Some(local) = iri.as_str().strip_prefix(ns.as_str()) {
            if is_safe_local(local) && best.is_none_or(|(_, l)| local.len() < l.len()) {
                best = Some((prefix, local));
            }
        }
    }
    match best {
        Some((prefix, local)) => format!("{prefix}:{local}"),
        None => format!("<{}>", iri.as_str()),
    }
}

fn render_literal(lit: &super::term::Literal, decls: &[(&str, &Iri)]) -> String {
    let nt = format_literal(lit);
    if lit.language().is_none() && lit.datatype().as_str() != super::term::XSD_STRING {
        // recompose with a possibly prefixed datatype
        let quoted_end = nt.rfind("^^<").expect("typed literal form");
        let quoted = &nt[..quoted_end];
        return format!("{}^^{}", quoted, render_iri(lit.datatype(), decls));
    }
    nt
}

/// Conservative PN_LOCAL check: alphanumerics, `_`, `-`, `.`, and `%XX`
/// escapes, with no leading/trailing dot and no leading dash.
fn is_safe_local(local: &str) -> bool {
    if local.is_empty() {
        return true;
    }
    if local.starts_with('.') || local.ends_with('.') || local.starts_with('-') {
        return false;
    }
    let bytes = local.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'%' => {
                if i + 2 >= bytes.len()
                    || !bytes[i + 1].is_ascii_hexdigit()
                    || !bytes[i + 2].is_ascii_hexdigit()
                {
                    return false;
                }
                i += 3;
            }
            b if b.is_ascii_alphanumeric() || b == b'_' || b == b'-' || b == b'.' => i += 1,
            _ => return false,
        }
    }
    true
}
