//! Parser for the line-oriented query format.
//!
//! ```text
//! # genes of a disease
//! SELECT ?disease ?gene
//! PATTERN ?assoc rdf:type sio:SIO_000983
//! PATTERN ?assoc sio:SIO_000628 ?disease
//! FILTER ?score > 0.5
//! ```
//!
//! IRIs are written bracketed (`<http://…>`) or prefixed; the catalog
//! prefixes are preloaded and `PREFIX name <iri>` lines add more. Bare
//! numbers are `xsd:double` literals. Grammar in `docs/query-format.md`.

use indexmap::IndexMap;

use crate::rdf::{Iri, Literal, Term};
use crate::vocab;

use super::{Filter, FilterOp, PatternTerm, Query, QueryError, TriplePattern};

pub fn parse_query(text: &str) -> Result<Query, QueryError> {
    let mut prefixes = vocab::default_prefixes();
    let mut select: Vec<String> = Vec::new();
    let mut patterns: Vec<TriplePattern> = Vec::new();
    let mut filters: Vec<Filter> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed, ""),
        };
        match keyword {
            "PREFIX" => {
                let (name, iri_text) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| err(line, "PREFIX needs a name and a namespace IRI"))?;
                let inner = iri_text
                    .trim()
                    .strip_prefix('<')
                    .and_then(|t| t.strip_suffix('>'))
                    .ok_or_else(|| err(line, "PREFIX namespace must be bracketed"))?;
                let namespace = Iri::new(inner).map_err(|e| err(line, e.to_string()))?;
                prefixes.insert(name.trim_end_matches(':').to_string(), namespace);
            }
            "SELECT" => {
                for token in rest.split_whitespace() {
                    select.push(parse_variable(token, line)?);
                }
                if select.is_empty() {
                    return Err(err(line, "SELECT needs at least one ?variable"));
                }
            }
            "PATTERN" => {
                let terms = tokenize(rest, line)?;
                if terms.len() != 3 {
                    return Err(err(
                        line,
                        format!("PATTERN needs exactly 3 terms, found {}", terms.len()),
                    ));
                }
                let mut terms = terms.into_iter();
                let subject = parse_pattern_term(&terms.next().unwrap(), line, &prefixes)?;
                let predicate = parse_pattern_term(&terms.next().unwrap(), line, &prefixes)?;
                if let PatternTerm::Bound(bound) = &predicate {
                    if !matches!(bound, Term::Iri(_)) {
                        return Err(err(line, "pattern predicate must be an IRI or a variable"));
                    }
                }
                let object = parse_pattern_term(&terms.next().unwrap(), line, &prefixes)?;
                if let PatternTerm::Bound(Term::Literal(_)) = &subject {
                    return Err(err(line, "pattern subject cannot be a literal"));
                }
                patterns.push(TriplePattern {
                    subject,
                    predicate,
                    object,
                });
            }
            "FILTER" => {
                let tokens = tokenize(rest, line)?;
                if tokens.len() != 3 {
                    return Err(err(line, "FILTER needs '?variable op constant'"));
                }
                let variable = parse_variable(&tokens[0], line)?;
                let op = match tokens[1].as_str() {
                    "=" | "==" => FilterOp::Eq,
                    "!=" => FilterOp::Ne,
                    "<" => FilterOp::Lt,
                    ">" => FilterOp::Gt,
                    "regex" => FilterOp::Regex,
                    other => return Err(err(line, format!("unknown filter operator {other:?}"))),
                };
                let constant = match parse_pattern_term(&tokens[2], line, &prefixes)? {
                    PatternTerm::Bound(term) => term,
                    PatternTerm::Variable(v) => {
                        return Err(err(
                            line,
                            format!("filter constant cannot be the variable ?{v}"),
                        ));
                    }
                };
                filters.push(Filter {
                    variable,
                    op,
                    constant,
                });
            }
            other => return Err(err(line, format!("unknown keyword {other:?}"))),
        }
    }

    Query::new(select, patterns, filters)
}

fn err(line: usize, message: impl Into<String>) -> QueryError {
    QueryError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_variable(token: &str, line: usize) -> Result<String, QueryError> {
    let name = token
        .strip_prefix('?')
        .ok_or_else(|| err(line, format!("expected ?variable, found {token:?}")))?;
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(err(
            line,
            format!("variable name must match [a-zA-Z0-9_]+, found {name:?}"),
        ));
    }
    Ok(name.to_string())
}

/// Splits a line into terms, keeping quoted strings (with their suffixes)
/// and bracketed IRIs intact.
fn tokenize(rest: &str, line: usize) -> Result<Vec<String>, QueryError> {
    let mut tokens = Vec::new();
    let mut chars = rest.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut token = String::new();
        if c == '"' {
            token.push(chars.next().unwrap());
            let mut escaped = false;
            loop {
                match chars.next() {
                    Some(ch) => {
                        token.push(ch);
                        if escaped {
                            escaped = false;
                        } else if ch == '\\' {
                            escaped = true;
                        } else if ch == '"' {
                            break;
                        }
                    }
                    None => return Err(err(line, "unterminated string")),
                }
            }
            // datatype or language suffix sticks to the literal
            while let Some(&next) = chars.peek() {
                if next.is_whitespace() {
                    break;
                }
                token.push(chars.next().unwrap());
            }
        } else if c == '<' {
            loop {
                match chars.next() {
                    Some(ch) => {
                        token.push(ch);
                        if ch == '>' {
                            break;
                        }
                    }
                    None => return Err(err(line, "unterminated IRI")),
                }
            }
        } else {
            while let Some(&next) = chars.peek() {
                if next.is_whitespace() {
                    break;
                }
                token.push(chars.next().unwrap());
            }
        }
        tokens.push(token);
    }
    Ok(tokens)
}

fn parse_pattern_term(
    token: &str,
    line: usize,
    prefixes: &IndexMap<String, Iri>,
) -> Result<PatternTerm, QueryError> {
    if token.starts_with('?') {
        return Ok(PatternTerm::Variable(parse_variable(token, line)?));
    }
    if let Some(inner) = token.strip_prefix('<') {
        let inner = inner
            .strip_suffix('>')
            .ok_or_else(|| err(line, "unterminated IRI"))?;
        let iri = Iri::new(inner).map_err(|e| err(line, e.to_string()))?;
        return Ok(PatternTerm::Bound(Term::Iri(iri)));
    }
    if token.starts_with('"') {
        return parse_literal_token(token, line, prefixes)
            .map(|l| PatternTerm::Bound(Term::Literal(l)));
    }
    if token.starts_with("_:") {
        return Err(err(line, "blank nodes are not allowed in queries"));
    }
    // bare number -> xsd:double literal
    if token.parse::<f64>().is_ok() {
        let literal = Literal::typed(token, vocab::XSD_DOUBLE.clone()).expect("double literal");
        return Ok(PatternTerm::Bound(Term::Literal(literal)));
    }
    let (prefix, local) = token
        .split_once(':')
        .ok_or_else(|| err(line, format!("expected a term, found {token:?}")))?;
    let namespace = prefixes
        .get(prefix)
        .ok_or_else(|| QueryError::UnknownPrefix {
            line,
            prefix: prefix.to_string(),
        })?;
    let iri = Iri::new(format!("{}{}", namespace.as_str(), local))
        .map_err(|e| err(line, e.to_string()))?;
    Ok(PatternTerm::Bound(Term::Iri(iri)))
}

fn parse_literal_token(
    token: &str,
    line: usize,
    prefixes: &IndexMap<String, Iri>,
) -> Result<Literal, QueryError> {
    let rest = &token[1..];
    let mut lexical = String::new();
    let mut chars = rest.chars();
    let mut closed_at = None;
    let mut consumed = 1usize;
    let mut escaped = false;
    for ch in chars.by_ref() {
        consumed += ch.len_utf8();
        if escaped {
            match ch {
                'n' => lexical.push('\n'),
                't' => lexical.push('\t'),
                'r' => lexical.push('\r'),
                '"' => lexical.push('"'),
                '\\' => lexical.push('\\'),
                other => return Err(err(line, format!("unknown escape \\{other}"))),
            }
            escaped = false;
        } else if ch == '\\' {
            escaped = true;
        } else if ch == '"' {
            closed_at = Some(consumed);
            break;
        } else {
            lexical.push(ch);
        }
    }
    let closed_at = closed_at.ok_or_else(|| err(line, "unterminated string"))?;
    let suffix = &token[closed_at..];
    if suffix.is_empty() {
        return Ok(Literal::simple(lexical));
    }
    if let Some(dt) = suffix.strip_prefix("^^") {
        let datatype = match parse_pattern_term(dt, line, prefixes)? {
            PatternTerm::Bound(Term::Iri(iri)) => iri,
            _ => return Err(err(line, "datatype must be an IRI")),
        };
        return Literal::typed(lexical, datatype).map_err(|e| err(line, e.to_string()));
    }
    if let Some(tag) = suffix.strip_prefix('@') {
        return Literal::lang(lexical, tag).map_err(|e| err(line, e.to_string()));
    }
    Err(err(line, format!("unexpected literal suffix {suffix:?}")))
}
