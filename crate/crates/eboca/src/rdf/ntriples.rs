//! Canonical N-Triples output and a line-oriented N-Triples parser.
//!
//! Output is one statement per line, sorted lexicographically by the
//! serialized statement, so equal graphs serialize to identical bytes no
//! matter how they were built.

use std::fmt::Write as _;

use thiserror::Error;

use super::graph::Graph;
use super::term::{BlankNode, Iri, Literal, Subject, Term, TermError, Triple, XSD_STRING};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct NtParseError {
    pub line: usize,
    pub message: String,
}

impl NtParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        NtParseError {
            line,
            message: message.into(),
        }
    }
}

/// Renders a term in N-Triples syntax.
pub fn format_term(term: &Term) -> String {
    match term {
        Term::Iri(iri) => format!("<{}>", iri.as_str()),
        Term::Blank(b) => format!("_:{}", b.label()),
        Term::Literal(lit) => format_literal(lit),
    }
}

pub fn format_subject(s: &Subject) -> String {
    match s {
        Subject::Iri(iri) => format!("<{}>", iri.as_str()),
        Subject::Blank(b) => format!("_:{}", b.label()),
    }
}

pub fn format_literal(lit: &Literal) -> String {
    let mut out = String::with_capacity(lit.lexical().len() + 2);
    out.push('"');
    escape_into(lit.lexical(), &mut out);
    out.push('"');
    if let Some(tag) = lit.language() {
        out.push('@');
        out.push_str(tag);
    } else if lit.datatype().as_str() != XSD_STRING {
        out.push_str("^^<");
        out.push_str(lit.datatype().as_str());
        out.push('>');
    }
    out
}

/// One serialized statement, without trailing newline.
pub fn format_triple(t: &Triple) -> String {
    format!(
        "{} <{}> {} .",
        format_subject(&t.subject),
        t.predicate.as_str(),
        format_term(&t.object)
    )
}

fn escape_into(s: &str, out: &mut String) {
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            '\u{8}' => out.push_str("\\b"),
            '\u{c}' => out.push_str("\\f"),
            c if (c as u32) < 0x20 || c == '\u{7f}' => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
}

/// Canonical sorted serialization of a whole graph.
pub fn serialize(graph: &Graph) -> String {
    let mut lines: Vec<String> = graph.iter().map(format_triple).collect();
    lines.sort_unstable();
    let mut out = String::with_capacity(lines.iter().map(|l| l.len() + 1).sum());
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Parses an N-Triples document. Duplicate statements collapse silently;
/// syntax errors carry the 1-based line number.
pub fn parse(doc: &str) -> Result<Graph, NtParseError> {
    let mut graph = Graph::new();
    for (idx, raw_line) in doc.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        let mut cursor = Cursor::new(line, line_no);
        cursor.skip_ws();
        if cursor.at_end() || cursor.peek() == Some('#') {
            continue;
        }
        let subject = cursor.parse_subject()?;
        cursor.expect_ws()?;
        let predicate = cursor.parse_iri()?;
        cursor.expect_ws()?;
        let object = cursor.parse_term()?;
        cursor.skip_ws();
        if !cursor.eat('.') {
            return Err(NtParseError::new(line_no, "statement missing terminal '.'"));
        }
        cursor.skip_ws();
        if let Some(c) = cursor.peek() {
            if c != '#' {
                return Err(NtParseError::new(
                    line_no,
                    format!("unexpected trailing content starting at {c:?}"),
                ));
            }
        }
        graph.insert(Triple::new(subject, predicate, object));
    }
    Ok(graph)
}

struct Cursor<'a> {
    rest: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str, line: usize) -> Self {
        Cursor { rest: s, line }
    }

    fn err(&self, message: impl Into<String>) -> NtParseError {
        NtParseError::new(self.line, message)
    }

    fn term_err(&self, e: TermError) -> NtParseError {
        self.err(e.to_string())
    }

    fn at_end(&self) -> bool {
        self.rest.is_empty()
    }

    fn peek(&self) -> Option<char> {
        self.rest.chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.rest = &self.rest[c.len_utf8()..];
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start_matches([' ', '\t']);
    }

    fn expect_ws(&mut self) -> Result<(), NtParseError> {
        if self.peek().is_none_or(|c| c != ' ' && c != '\t') {
            return Err(self.err("expected whitespace between terms"));
        }
        self.skip_ws();
        Ok(())
    }

    fn parse_subject(&mut self) -> Result<Subject, NtParseError> {
        match self.peek() {
            Some('<') => Ok(Subject::Iri(self.parse_iri()?)),
            Some('_') => Ok(Subject::Blank(self.parse_blank()?)),
            Some('"') => Err(self.err("literal is not allowed in subject position")),
            Some(c) => Err(self.err(format!("expected IRI or blank node, found {c:?}"))),
            None => Err(self.err("unexpected end of line, expected subject")),
        }
    }

    fn parse_term(&mut self) -> Result<Term, NtParseError> {
        match self.peek() {
            Some('<') => Ok(Term::Iri(self.parse_iri()?)),
            Some('_') => Ok(Term::Blank(self.parse_blank()?)),
            Some('"') => Ok(Term::Literal(self.parse_literal()?)),
            Some(c) => Err(self.err(format!("expected IRI, blank node, or literal, found {c:?}"))),
            None => Err(self.err("unexpected end of line, expected object")),
        }
    }

    fn parse_iri(&mut self) -> Result<Iri, NtParseError> {
        if !self.eat('<') {
            let token: String = self.rest.chars().take(20).collect();
            return Err(self.err(format!("expected '<' starting an IRI, found {token:?}")));
        }
        let mut value = String::new();
        loop {
            match self.next_char("unterminated IRI")? {
                '>' => break,
                '\\' => value.push(self.parse_uchar()?),
                c => value.push(c),
            }
        }
        Iri::new(value).map_err(|e| self.term_err(e))
    }

    fn parse_blank(&mut self) -> Result<BlankNode, NtParseError> {
        if !self.rest.starts_with("_:") {
            return Err(self.err("expected '_:' starting a blank node"));
        }
        self.rest = &self.rest[2..];
        let label_len = self
            .rest
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
            .unwrap_or(self.rest.len());
        let (label, rest) = self.rest.split_at(label_len);
        self.rest = rest;
        BlankNode::new(label).map_err(|e| self.term_err(e))
    }

    fn parse_literal(&mut self) -> Result<Literal, NtParseError> {
        self.eat('"');
        let mut lexical = String::new();
        loop {
            match self.next_char("unterminated string literal")? {
                '"' => break,
                '\\' => {
                    let esc = self.next_char("dangling escape")?;
                    match esc {
                        't' => lexical.push('\t'),
                        'b' => lexical.push('\u{8}'),
                        'n' => lexical.push('\n'),
                        'r' => lexical.push('\r'),
                        'f' => lexical.push('\u{c}'),
                        '"' => lexical.push('"'),
                        '\'' => lexical.push('\''),
                        '\\' => lexical.push('\\'),
                        'u' => lexical.push(self.parse_hex_escape(4)?),
                        'U' => lexical.push(self.parse_hex_escape(8)?),
                        c => return Err(self.err(format!("unknown escape sequence \\{c}"))),
                    }
                }
                c => lexical.push(c),
            }
        }
        if self.eat('@') {
            let tag_len = self
                .rest
                .find(|c: char| !c.is_ascii_alphanumeric() && c != '-')
                .unwrap_or(self.rest.len());
            let (tag, rest) = self.rest.split_at(tag_len);
            self.rest = rest;
            return Literal::lang(lexical, tag).map_err(|e| self.term_err(e));
        }
        if self.rest.starts_with("^^") {
            self.rest = &self.rest[2..];
            let datatype = self.parse_iri()?;
            return Literal::typed(lexical, datatype).map_err(|e| self.term_err(e));
        }
        Ok(Literal::simple(lexical))
    }

    fn parse_uchar(&mut self) -> Result<char, NtParseError> {
        match self.next_char("dangling escape in IRI")? {
            'u' => self.parse_hex_escape(4),
            'U' => self.parse_hex_escape(8),
            c => Err(self.err(format!("invalid IRI escape \\{c}"))),
        }
    }

    fn parse_hex_escape(&mut self, digits: usize) -> Result<char, NtParseError> {
        if self.rest.len() < digits || !self.rest.is_char_boundary(digits) {
            return Err(self.err("truncated \\u escape"));
        }
        let (hex, rest) = self.rest.split_at(digits);
        let code = u32::from_str_radix(hex, 16)
            .map_err(|_| self.err(format!("bad hex digits {hex:?}")))?;
        self.rest = rest;
        char::from_u32(code)
            .ok_or_else(|| self.err(format!("\\u escape U+{code:04X} is not a scalar value")))
    }

    fn next_char(&mut self, eof_msg: &str) -> Result<char, NtParseError> {
        match self.peek() {
            Some(c) => {
                self.rest = &self.rest[c.len_utf8()..];
                Ok(c)
            }
            None => Err(self.err(eof_msg)),
        }
    }
}
