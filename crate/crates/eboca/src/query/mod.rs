//! Conjunctive basic-graph-pattern queries with simple filters, plus the
//! bundled competency-question catalog.

pub mod catalog;
mod parse;

pub use catalog::{catalog, run_cq, CqEntry};
pub use parse::parse_query;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::rdf::ntriples::format_term;
use crate::rdf::{Graph, Term};

#[derive(Debug, Error, PartialEq)]
pub enum QueryError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown prefix {prefix:?}")]
    UnknownPrefix { line: usize, prefix: String },
    #[error("{0}")]
    Invalid(String),
    #[error("unknown competency question {id:?}; available: {available}")]
    UnknownCq { id: String, available: String },
}

/// One position of a triple pattern.
#[derive(Debug, Clone, PartialEq)]
pub enum PatternTerm {
    Variable(String),
    Bound(Term),
}

impl PatternTerm {
    fn variable(&self) -> Option<&str> {
        match self {
            PatternTerm::Variable(name) => Some(name),
            PatternTerm::Bound(_) => None,
        }
    }
}

/// A triple pattern; any position may be a variable.
#[derive(Debug, Clone, PartialEq)]
pub struct TriplePattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl TriplePattern {
    fn variables(&self) -> impl Iterator<Item = &str> {
        [&self.subject, &self.predicate, &self.object]
            .into_iter()
            .filter_map(PatternTerm::variable)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterOp {
    Eq,
    Ne,
    Lt,
    Gt,
    Regex,
}

/// A filter comparing one variable against a constant.
#[derive(Debug, Clone, PartialEq)]
pub struct Filter {
    pub variable: String,
    pub op: FilterOp,
    pub constant: Term,
}

/// A validated conjunctive query.
#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    select: Vec<String>,
    patterns: Vec<TriplePattern>,
    filters: Vec<Filter>,
}

impl Query {
    /// Builds a query, checking that selected and filtered variables all
    /// appear in some pattern.
    pub fn new(
        select: Vec<String>,
        patterns: Vec<TriplePattern>,
        filters: Vec<Filter>,
    ) -> Result<Self, QueryError> {
        if select.is_empty() {
            return Err(QueryError::Invalid("query selects no variables".into()));
        }
        let pattern_vars: BTreeSet<&str> =
            patterns.iter().flat_map(TriplePattern::variables).collect();
        for name in &select {
            if !pattern_vars.contains(name.as_str()) {
                return Err(QueryError::Invalid(format!(
                    "selected variable ?{name} appears in no pattern"
                )));
            }
        }
        for filter in &filters {
            if !pattern_vars.contains(filter.variable.as_str()) {
                return Err(QueryError::Invalid(format!(
                    "filtered variable ?{} appears in no pattern",
                    filter.variable
                )));
            }
        }
        Ok(Query {
            select,
            patterns,
            filters,
        })
    }

    pub fn select(&self) -> &[String] {
        &self.select
    }

    pub fn patterns(&self) -> &[TriplePattern] {
        &self.patterns
    }

    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }
}

/// Query solutions: rows binding exactly the selected variables, distinct
/// and sorted by their serialized form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BindingSet {
    variables: Vec<String>,
    rows: Vec<Vec<Term>>,
}

impl BindingSet {
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn rows(&self) -> &[Vec<Term>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows as variable-to-term maps.
    pub fn iter_maps(&self) -> impl Iterator<Item = BTreeMap<&str, &Term>> {
        self.rows.iter().map(move |row| {
            self.variables
                .iter()
                .map(String::as_str)
                .zip(row.iter())
                .collect()
        })
    }

    /// Tab-separated output: `?var` header row, N-Triples terms in cells.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.variables.iter().map(|v| format!("?{v}")).collect();
        out.push_str(&header.join("\t"));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(format_term).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }

    /// JSON output: an array of objects mapping variable names to
    /// N-Triples-serialized terms.
    pub fn to_json(&self) -> String {
        let rows: Vec<BTreeMap<&str, String>> = self
            .rows
            .iter()
            .map(|row| {
                self.variables
                    .iter()
                    .map(String::as_str)
                    .zip(row.iter().map(format_term))
                    .collect()
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("string maps serialize")
    }
}

/// Evaluates the query: index-backed pattern ordering by estimated
/// selectivity, nested-loop joins, filters, then distinct sorted projection.
pub fn solve(graph: &Graph, query: &Query) -> BindingSet {
    let order = plan(graph, query.patterns());

    let mut solutions: Vec<BTreeMap<&str, Term>> = vec![BTreeMap::new()];
    for &pattern in &order {
        let mut next = Vec::new();
        for binding in &solutions {
            let s = resolve(&pattern.subject, binding);
            let p = resolve(&pattern.predicate, binding);
            let o = resolve(&pattern.object, binding);
            for triple in graph.matching_terms(s.as_ref(), p.as_ref(), o.as_ref()) {
                let mut extended = binding.clone();
                if extend(
                    &mut extended,
                    &pattern.subject,
                    &Term::from(triple.subject.clone()),
                ) && extend(
                    &mut extended,
                    &pattern.predicate,
                    &Term::Iri(triple.predicate.clone()),
                ) && extend(&mut extended, &pattern.object, &triple.object)
                {
                    next.push(extended);
                }
            }
        }
        solutions = next;
        if solutions.is_empty() {
            break;
        }
    }

    let filtered = solutions
        .into_iter()
        .filter(|binding| query.filters().iter().all(|f| filter_passes(f, binding)));

    let mut rows: BTreeSet<Vec<Term>> = BTreeSet::new();
    for binding in filtered {
        let row: Vec<Term> = query
            .select()
            .iter()
            .map(|name| binding[name.as_str()].clone())
            .collect();
        rows.insert(row);
    }
    let mut rows: Vec<Vec<Term>> = rows.into_iter().collect();
    rows.sort_by_cached_key(|row| row.iter().map(format_term).collect::<Vec<_>>());

    BindingSet {
        variables: query.select().to_vec(),
        rows,
    }
}

/// Greedy join order: repeatedly take the connected pattern with the
/// smallest constant-position index estimate.
fn plan<'q>(graph: &Graph, patterns: &'q [TriplePattern]) -> Vec<&'q TriplePattern> {
    let mut remaining: Vec<&TriplePattern> = patterns.iter().collect();
    let mut order = Vec::with_capacity(remaining.len());
    let mut bound: BTreeSet<&str> = BTreeSet::new();

    while !remaining.is_empty() {
        let (idx, _) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| {
                let connected = order.is_empty() || p.variables().any(|v| bound.contains(v));
                let estimate = estimate_constants(graph, p);
                (!connected, estimate)
            })
            .expect("remaining is non-empty");
        let chosen = remaining.swap_remove(idx);
        bound.extend(chosen.variables());
        order.push(chosen);
    }
    order
}

fn estimate_constants(graph: &Graph, pattern: &TriplePattern) -> usize {
    let s = match &pattern.subject {
        PatternTerm::Bound(term) => match term.to_subject() {
            Some(subject) => Some(subject),
            None => return 0,
        },
        PatternTerm::Variable(_) => None,
    };
    let p = match &pattern.predicate {
        PatternTerm::Bound(Term::Iri(iri)) => Some(iri.clone()),
        PatternTerm::Bound(_) => return 0,
        PatternTerm::Variable(_) => None,
    };
    let o = match &pattern.object {
        PatternTerm::Bound(term) => Some(term),
        PatternTerm::Variable(_) => None,
    };
    graph.estimate(s.as_ref(), p.as_ref(), o)
}

fn resolve(position: &PatternTerm, binding: &BTreeMap<&str, Term>) -> Option<Term> {
    match position {
        PatternTerm::Bound(term) => Some(term.clone()),
        PatternTerm::Variable(name) => binding.get(name.as_str()).cloned(),
    }
}

/// Binds a variable position to the matched term, rejecting clashes when
/// the same variable occurs twice in one pattern.
fn extend<'q>(
    binding: &mut BTreeMap<&'q str, Term>,
    position: &'q PatternTerm,
    term: &Term,
) -> bool {
    match position {
        PatternTerm::Bound(_) => true,
        PatternTerm::Variable(name) => match binding.get(name.as_str()) {
            Some(existing) => existing == term,
            None => {
                binding.insert(name, term.clone());
                true
            }
        },
    }
}

fn filter_passes(filter: &Filter, binding: &BTreeMap<&str, Term>) -> bool {
    let term = &binding[filter.variable.as_str()];
    match filter.op {
        FilterOp::Eq => terms_equal(term, &filter.constant),
        FilterOp::Ne => !terms_equal(term, &filter.constant),
        FilterOp::Lt | FilterOp::Gt => {
            // only numeric literals are ordered; incomparable rows drop out
            let (Some(a), Some(b)) = (numeric(term), numeric(&filter.constant)) else {
                return false;
            };
            if filter.op == FilterOp::Lt {
                a < b
            } else {
                a > b
            }
        }
        FilterOp::Regex => {
            let Term::Literal(pattern) = &filter.constant else {
                return false;
            };
            let Ok(re) = regex::Regex::new(pattern.lexical()) else {
                return false;
            };
            re.is_match(term_text(term))
        }
    }
}

fn terms_equal(a: &Term, b: &Term) -> bool {
    if let (Some(x), Some(y)) = (numeric(a), numeric(b)) {
        return x == y;
    }
    a == b
}

fn numeric(term: &Term) -> Option<f64> {
    term.as_literal().and_then(|l| l.as_f64())
}

fn term_text(term: &Term) -> &str {
    match term {
        Term::Iri(iri) => iri.as_str(),
        Term::Blank(b) => b.label(),
        Term::Literal(lit) => lit.lexical(),
    }
}
