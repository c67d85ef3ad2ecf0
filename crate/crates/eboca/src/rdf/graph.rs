//! In-memory triple set with subject, predicate, and object indexes.

use std::collections::HashMap;

use indexmap::IndexSet;

use super::term::{Iri, Subject, Term, Triple};

/// An indexed set of triples.
///
/// Duplicate inserts are no-ops, and the three single-position indexes are
/// kept in lockstep with the triple set. A graph that is no longer mutated
/// can be shared across threads for concurrent matching.
#[derive(Debug, Default, Clone)]
pub struct Graph {
    triples: IndexSet<Triple>,
    by_subject: HashMap<Subject, Vec<u32>>,
    by_predicate: HashMap<Iri, Vec<u32>>,
    by_object: HashMap<Term, Vec<u32>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.triples.contains(t)
    }

    /// Inserts a triple, returning `true` when it was not already present.
    pub fn insert(&mut self, t: Triple) -> bool {
        let (id, added) = self.triples.insert_full(t);
        if added {
            let id = id as u32;
            let t = self.triples.get_index(id as usize).expect("just inserted");
            self.by_subject
                .entry(t.subject.clone())
                .or_default()
                .push(id);
            self.by_predicate
                .entry(t.predicate.clone())
                .or_default()
                .push(id);
            self.by_object.entry(t.object.clone()).or_default().push(id);
        }
        added
    }

    pub fn extend<I: IntoIterator<Item = Triple>>(&mut self, triples: I) {
        for t in triples {
            self.insert(t);
        }
    }

    /// Set union with another graph.
    pub fn merge(&mut self, other: &Graph) {
        for t in other.iter() {
            if !self.contains(t) {
                self.insert(t.clone());
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// Triples matching the pattern; `None` positions are wildcards.
    ///
    /// The most selective populated index drives candidate enumeration, so a
    /// lookup touches the smallest posting list available rather than the
    /// whole graph.
    pub fn matching<'g>(
        &'g self,
        subject: Option<&Subject>,
        predicate: Option<&Iri>,
        object: Option<&Term>,
    ) -> Box<dyn Iterator<Item = &'g Triple> + 'g> {
        let candidates: Box<dyn Iterator<Item = &'g Triple> + 'g> =
            match self.candidate_ids(subject, predicate, object) {
                Candidates::All => Box::new(self.triples.iter()),
                Candidates::Posting(ids) => Box::new(ids.iter().map(move |&id| {
                    self.triples
                        .get_index(id as usize)
                        .expect("index coherence")
                })),
                Candidates::Empty => Box::new(std::iter::empty()),
            };
        let (s, p, o) = (subject.cloned(), predicate.cloned(), object.cloned());
        Box::new(candidates.filter(move |t| {
            s.as_ref().is_none_or(|s| &t.subject == s)
                && p.as_ref().is_none_or(|p| &t.predicate == p)
                && o.as_ref().is_none_or(|o| &t.object == o)
        }))
    }

    /// Convenience form taking any terms; a literal in subject position
    /// matches nothing.
    pub fn matching_terms<'g>(
        &'g self,
        subject: Option<&Term>,
        predicate: Option<&Term>,
        object: Option<&Term>,
    ) -> Box<dyn Iterator<Item = &'g Triple> + 'g> {
        let s = match subject {
            Some(term) => match term.to_subject() {
                Some(s) => Some(s),
                None => return Box::new(std::iter::empty()),
            },
            None => None,
        };
        let p = match predicate {
            Some(Term::Iri(iri)) => Some(iri.clone()),
            Some(_) => return Box::new(std::iter::empty()),
            None => None,
        };
        Box::new(self.matching(s.as_ref(), p.as_ref(), object))
    }

    /// Estimated result size for a pattern, used for join ordering.
    pub fn estimate(
        &self,
        subject: Option<&Subject>,
        predicate: Option<&Iri>,
        object: Option<&Term>,
    ) -> usize {
        match self.candidate_ids(subject, predicate, object) {
            Candidates::All => self.triples.len(),
            Candidates::Posting(ids) => ids.len(),
            Candidates::Empty => 0,
        }
    }

    fn candidate_ids(
        &self,
        subject: Option<&Subject>,
        predicate: Option<&Iri>,
        object: Option<&Term>,
    ) -> Candidates<'_> {
        let mut best: Option<&Vec<u32>> = None;
        let mut missing = false;
        if let Some(s) = subject {
            match self.by_subject.get(s) {
                Some(ids) => best = Some(ids),
                None => missing = true,
            }
        }
        if let Some(p) = predicate {
            match self.by_predicate.get(p) {
                Some(ids) => {
                    if best.is_none_or(|b| ids.len() < b.len()) {
                        best = Some(ids);
                    }
                }
                None => missing = true,
            }
        }
        if let Some(o) = object {
            match self.by_object.get(o) {
                Some(ids) => {
                    if best.is_none_or(|b| ids.len() < b.len()) {
                        best = Some(ids);
                    }
                }
                None => missing = true,
            }
        }
        if missing {
            return Candidates::Empty;
        }
        match best {
            Some(ids) => Candidates::Posting(ids),
            None => Candidates::All,
        }
    }

    pub fn subjects(&self) -> impl Iterator<Item = &Subject> {
        self.by_subject.keys()
    }

    pub fn predicates(&self) -> impl Iterator<Item = &Iri> {
        self.by_predicate.keys()
    }
}

enum Candidates<'g> {
    All,
    Posting(&'g Vec<u32>),
    Empty,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().all(|t| other.contains(t))
    }
}

impl Eq for Graph {}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        g.extend(iter);
        g
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Triple;
    type IntoIter = indexmap::set::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::term::Literal;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    fn t(s: &str, p: &str, o: &str) -> Triple {
        Triple::new(iri(s), iri(p), iri(o))
    }

    #[test]
    fn insert_is_set_semantics() {
        let mut g = Graph::new();
        assert!(g.insert(t("http://x/a", "http://x/p", "http://x/b")));
        assert_eq!(g.len(), 1);
        assert!(!g.insert(t("http://x/a", "http://x/p", "http://x/b")));
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn distinct_objects_are_distinct_triples() {
        let mut g = Graph::new();
        let s = iri("http://x/a");
        let p = iri("http://x/p");
        g.insert(Triple::new(s.clone(), p.clone(), Literal::simple("one")));
        g.insert(Triple::new(s, p, Literal::simple("two")));
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn wildcard_match_returns_everything() {
        let g: Graph = [
            t("http://x/a", "http://x/p", "http://x/b"),
            t("http://x/b", "http://x/p", "http://x/c"),
        ]
        .into_iter()
        .collect();
        assert_eq!(g.matching(None, None, None).count(), 2);
    }

    #[test]
    fn absent_term_matches_nothing() {
        let g: Graph = [t("http://x/a", "http://x/p", "http://x/b")]
            .into_iter()
            .collect();
        let nowhere = iri("http://x/nowhere");
        assert_eq!(
            g.matching(Some(&Subject::Iri(nowhere)), None, None).count(),
            0
        );
    }

    #[test]
    fn bound_positions_all_constrain() {
        let g: Graph = [
            t("http://x/a", "http://x/p", "http://x/b"),
            t("http://x/a", "http://x/q", "http://x/b"),
            t("http://x/c", "http://x/p", "http://x/b"),
        ]
        .into_iter()
        .collect();
        let p = iri("http://x/p");
        let o = Term::Iri(iri("http://x/b"));
        assert_eq!(g.matching(None, Some(&p), Some(&o)).count(), 2);
    }

    #[test]
    fn literal_subject_lookup_is_empty_not_panic() {
        let g: Graph = [t("http://x/a", "http://x/p", "http://x/b")]
            .into_iter()
            .collect();
        let lit = Term::Literal(Literal::simple("x"));
        assert_eq!(g.matching_terms(Some(&lit), None, None).count(), 0);
    }

    #[test]
    fn frozen_graph_supports_concurrent_matching() {
        fn assert_shareable<T: Send + Sync>() {}
        assert_shareable::<Graph>();

        let graph: Graph = (0..64)
            .map(|i| {
                t(
                    &format!("http://x/s{i}"),
                    "http://x/p",
                    &format!("http://x/o{}", i % 7),
                )
            })
            .collect();
        let frozen = &graph;
        std::thread::scope(|scope| {
            for k in 0..4 {
                scope.spawn(move || {
                    let object = Term::Iri(iri(&format!("http://x/o{k}")));
                    let hits = frozen.matching(None, None, Some(&object)).count();
                    assert!(hits > 0);
                });
            }
        });
    }

    #[test]
    fn graph_equality_ignores_insertion_order() {
        let a: Graph = [
            t("http://x/a", "http://x/p", "http://x/b"),
            t("http://x/b", "http://x/p", "http://x/c"),
        ]
        .into_iter()
        .collect();
        let b: Graph = [
            t("http://x/b", "http://x/p", "http://x/c"),
            t("http://x/a", "http://x/p", "http://x/b"),
        ]
        .into_iter()
        .collect();
        assert_eq!(a, b);
    }
}
