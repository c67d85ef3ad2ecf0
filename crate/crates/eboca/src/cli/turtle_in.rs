//! Reader for the Turtle subset this tool's own exporter produces:
//! `@prefix` declarations, prefixed names, the `a` keyword, bracketed IRIs,
//! literals with language tags or datatypes, and `;`/`,` groups. Enough to
//! read an exported axiom file back; full Turtle is out of scope.

use std::collections::HashMap;

use crate::rdf::term::{BlankNode, Iri, Literal, Subject, Term, Triple};
use crate::rdf::Graph;

pub fn parse(text: &str) -> Result<Graph, String> {
    Parser {
        tokens: tokenize(text)?,
        pos: 0,
        prefixes: HashMap::new(),
        graph: Graph::new(),
    }
    .run()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    IriRef(String),
    Prefixed(String, String),
    Blank(String),
    Literal {
        lexical: String,
        lang: Option<String>,
        datatype: Option<Box<Token>>,
    },
    A,
    PrefixDecl,
    Dot,
    Semicolon,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '#' => {
                for ch in chars.by_ref() {
                    if ch == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '.' => {
                chars.next();
                tokens.push(Token::Dot);
            }
            ';' => {
                chars.next();
                tokens.push(Token::Semicolon);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            '<' => {
                chars.next();
                let mut iri = String::new();
                loop {
                    match chars.next() {
                        Some('>') => break,
                        Some(ch) => iri.push(ch),
                        None => return Err("unterminated IRI".to_string()),
                    }
                }
                tokens.push(Token::IriRef(iri));
            }
            '"' => {
                chars.next();
                let mut lexical = String::new();
                loop {
                    match chars.next() {
                        Some('\\') => match chars.next() {
                            Some('n') => lexical.push('\n'),
                            Some('r') => lexical.push('\r'),
                            Some('t') => lexical.push('\t'),
                            Some('b') => lexical.push('\u{8}'),
                            Some('f') => lexical.push('\u{c}'),
                            Some('"') => lexical.push('"'),
                            Some('\'') => lexical.push('\''),
                            Some('\\') => lexical.push('\\'),
                            Some('u') => lexical.push(hex_escape(&mut chars, 4)?),
                            Some('U') => lexical.push(hex_escape(&mut chars, 8)?),
                            other => return Err(format!("unknown escape {other:?}")),
                        },
                        Some('"') => break,
                        Some(ch) => lexical.push(ch),
                        None => return Err("unterminated string".to_string()),
                    }
                }
                let mut lang = None;
                let mut datatype = None;
                if chars.peek() == Some(&'@') {
                    chars.next();
                    let mut tag = String::new();
                    while let Some(&ch) = chars.peek() {
                        if ch.is_ascii_alphanumeric() || ch == '-' {
                            tag.push(ch);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    lang = Some(tag);
                } else if chars.peek() == Some(&'^') {
                    chars.next();
                    if chars.next() != Some('^') {
                        return Err("expected ^^ before datatype".to_string());
                    }
                    let mut rest = String::new();
                    while let Some(&ch) = chars.peek() {
                        if ch.is_whitespace() || ch == ';' || ch == ',' {
                            break;
                        }
                        // a dot ends the statement unless it is inside a
                        // prefixed local name (followed by a name char)
                        if ch == '.' {
                            let mut lookahead = chars.clone();
                            lookahead.next();
                            match lookahead.peek() {
                                Some(&n) if n.is_ascii_alphanumeric() || n == '_' => {}
                                _ => break,
                            }
                        }
                        rest.push(ch);
                        chars.next();
                    }
                    let inner = tokenize(&rest)?;
                    match inner.into_iter().next() {
                        Some(t @ (Token::IriRef(_) | Token::Prefixed(..))) => {
                            datatype = Some(Box::new(t))
                        }
                        other => return Err(format!("bad datatype token {other:?}")),
                    }
                }
                tokens.push(Token::Literal {
                    lexical,
                    lang,
                    datatype,
                });
            }
            '_' => {
                chars.next();
                if chars.next() != Some(':') {
                    return Err("expected ':' after '_'".to_string());
                }
                let mut label = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        label.push(ch);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Blank(label));
            }
            _ => {
                let mut word = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_whitespace() || ch == ';' || ch == ',' {
                        break;
                    }
                    if ch == '.' {
                        // statement dot vs dot inside a local name
                        let mut lookahead = chars.clone();
                        lookahead.next();
                        match lookahead.peek() {
                            Some(&n) if n.is_ascii_alphanumeric() || n == '_' || n == '-' => {}
                            _ => break,
                        }
                    }
                    word.push(ch);
                    chars.next();
                }
                if word == "a" {
                    tokens.push(Token::A);
                } else if word == "@prefix" {
                    tokens.push(Token::PrefixDecl);
                } else if let Some((prefix, local)) = word.split_once(':') {
                    tokens.push(Token::Prefixed(prefix.to_string(), local.to_string()));
                } else if word.is_empty() {
                    return Err(format!("unexpected character {:?}", chars.peek()));
                } else {
                    return Err(format!("unexpected token {word:?}"));
                }
            }
        }
    }
    Ok(tokens)
}

fn hex_escape(
    chars: &mut std::iter::Peekable<std::str::Chars<'_>>,
    digits: usize,
) -> Result<char, String> {
    let mut hex = String::new();
    for _ in 0..digits {
        hex.push(chars.next().ok_or("truncated \\u escape")?);
    }
    let code = u32::from_str_radix(&hex, 16).map_err(|_| format!("bad hex {hex:?}"))?;
    char::from_u32(code).ok_or_else(|| format!("invalid scalar U+{code:04X}"))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    prefixes: HashMap<String, String>,
    graph: Graph,
}

impl Parser {
    fn run(mut self) -> Result<Graph, String> {
        while self.pos < self.tokens.len() {
            if self.tokens[self.pos] == Token::PrefixDecl {
                self.pos += 1;
                self.prefix_declaration()?;
            } else {
                self.statement()?;
            }
        }
        Ok(self.graph)
    }

    fn next(&mut self) -> Result<Token, String> {
        let token = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or("unexpected end of input")?;
        self.pos += 1;
        Ok(token)
    }

    fn prefix_declaration(&mut self) -> Result<(), String> {
        let name = match self.next()? {
            Token::Prefixed(prefix, local) if local.is_empty() => prefix,
            other => return Err(format!("expected prefix name, found {other:?}")),
        };
        let namespace = match self.next()? {
            Token::IriRef(iri) => iri,
            other => return Err(format!("expected namespace IRI, found {other:?}")),
        };
        if self.next()? != Token::Dot {
            return Err("expected '.' after @prefix".to_string());
        }
        self.prefixes.insert(name, namespace);
        Ok(())
    }

    fn statement(&mut self) -> Result<(), String> {
        let token = self.next()?;
        let subject = match self.term(token)? {
            Term::Iri(iri) => Subject::Iri(iri),
            Term::Blank(b) => Subject::Blank(b),
            Term::Literal(_) => return Err("literal cannot be a subject".to_string()),
        };
        loop {
            let token = self.next()?;
            let predicate = match self.term(token)? {
                Term::Iri(iri) => iri,
                other => return Err(format!("predicate must be an IRI, found {other:?}")),
            };
            loop {
                let token = self.next()?;
                let object = self.term(token)?;
                self.graph
                    .insert(Triple::new(subject.clone(), predicate.clone(), object));
                match self.next()? {
                    Token::Comma => continue,
                    Token::Semicolon => break,
                    Token::Dot => return Ok(()),
                    other => return Err(format!("expected ',', ';', or '.', found {other:?}")),
                }
            }
        }
    }

    fn term(&self, token: Token) -> Result<Term, String> {
        match token {
            Token::IriRef(iri) => Iri::new(iri).map(Term::Iri).map_err(|e| e.to_string()),
            Token::Prefixed(prefix, local) => {
                let namespace = self
                    .prefixes
                    .get(&prefix)
                    .ok_or_else(|| format!("undeclared prefix {prefix:?}"))?;
                // percent sequences in a local name stand for the same
                // three characters of the IRI, so no decoding happens
                Iri::new(format!("{namespace}{local}"))
                    .map(Term::Iri)
                    .map_err(|e| e.to_string())
            }
            Token::A => Ok(Term::Iri(crate::vocab::RDF_TYPE.clone())),
            Token::Blank(label) => BlankNode::new(label)
                .map(Term::Blank)
                .map_err(|e| e.to_string()),
            Token::Literal {
                lexical,
                lang,
                datatype,
            } => {
                if let Some(tag) = lang {
                    return Literal::lang(lexical, tag)
                        .map(Term::Literal)
                        .map_err(|e| e.to_string());
                }
                if let Some(dt) = datatype {
                    let datatype = match self.term(*dt)? {
                        Term::Iri(iri) => iri,
                        other => return Err(format!("datatype must be an IRI, found {other:?}")),
                    };
                    return Literal::typed(lexical, datatype)
                        .map(Term::Literal)
                        .map_err(|e| e.to_string());
                }
                Ok(Term::Literal(Literal::simple(lexical)))
            }
            other => Err(format!("expected a term, found {other:?}")),
        }
    }
}
