//! RDF terms: IRIs, blank nodes, literals, and triples.

use std::fmt;

use thiserror::Error;

/// Datatype IRI assigned to plain string literals.
pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
/// Datatype IRI carried by every language-tagged literal.
pub const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

/// Errors raised while constructing terms or triples.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TermError {
    #[error("empty IRI")]
    EmptyIri,
    #[error("IRI contains forbidden character {ch:?}: {iri}")]
    ForbiddenIriChar { iri: String, ch: char },
    #[error("IRI has no scheme (missing or misplaced ':'): {0}")]
    MissingScheme(String),
    #[error("IRI scheme must start with a letter: {0}")]
    BadScheme(String),
    #[error("blank node label must match [A-Za-z0-9_]+: {0:?}")]
    BadBlankLabel(String),
    #[error("malformed language tag: {0:?}")]
    BadLanguageTag(String),
    #[error("rdf:langString literal requires a language tag")]
    LangStringWithoutTag,
}

/// An absolute IRI.
///
/// Validation is deliberately light: a leading alphabetic scheme, no
/// whitespace or control characters, and none of the characters that cannot
/// appear raw inside an angle-bracketed serialization. Identifiers coming
/// from upstream vocabularies (hyphens, unusual local names) must pass.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, TermError> {
        let value = value.into();
        if value.is_empty() {
            return Err(TermError::EmptyIri);
        }
        for ch in value.chars() {
            if ch <= ' '
                || ch == '\u{7f}'
                || matches!(ch, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\')
            {
                return Err(TermError::ForbiddenIriChar { iri: value, ch });
            }
        }
        match value.find(':') {
            None | Some(0) => return Err(TermError::MissingScheme(value)),
            Some(pos) => {
                let scheme = &value[..pos];
                if !scheme
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_alphabetic())
                {
                    return Err(TermError::BadScheme(value));
                }
            }
        }
        Ok(Iri(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl serde::Serialize for Iri {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> serde::Deserialize<'de> for Iri {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        Iri::new(raw).map_err(serde::de::Error::custom)
    }
}

/// A blank node with a restricted label alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlankNode(String);

impl BlankNode {
    pub fn new(label: impl Into<String>) -> Result<Self, TermError> {
        let label = label.into();
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(TermError::BadBlankLabel(label));
        }
        Ok(BlankNode(label))
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// An RDF literal: lexical form plus datatype, or a language-tagged string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: String,
    datatype: Iri,
    language: Option<String>,
}

impl Literal {
    /// Plain `xsd:string` literal.
    pub fn simple(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: Iri::new(XSD_STRING).expect("constant IRI"),
            language: None,
        }
    }

    /// Literal with an explicit datatype. `rdf:langString` is rejected here
    /// because it is only reachable through [`Literal::lang`].
    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Result<Self, TermError> {
        if datatype.as_str() == RDF_LANG_STRING {
            return Err(TermError::LangStringWithoutTag);
        }
        Ok(Literal {
            lexical: lexical.into(),
            datatype,
            language: None,
        })
    }

    /// Language-tagged string; the datatype is forced to `rdf:langString`.
    pub fn lang(lexical: impl Into<String>, tag: impl Into<String>) -> Result<Self, TermError> {
        let tag = tag.into();
        if !is_valid_language_tag(&tag) {
            return Err(TermError::BadLanguageTag(tag));
        }
        Ok(Literal {
            lexical: lexical.into(),
            datatype: Iri::new(RDF_LANG_STRING).expect("constant IRI"),
            language: Some(tag),
        })
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }

    /// Numeric view of the lexical form, used by score checks and filters.
    pub fn as_f64(&self) -> Option<f64> {
        self.lexical
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
    }
}

fn is_valid_language_tag(tag: &str) -> bool {
    let mut parts = tag.split('-');
    let primary = match parts.next() {
        Some(p) => p,
        None => return false,
    };
    if primary.is_empty() || !primary.chars().all(|c| c.is_ascii_alphabetic()) {
        return false;
    }
    parts.all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_alphanumeric()))
}

/// Subject position: an IRI or a blank node, never a literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    Iri(Iri),
    Blank(BlankNode),
}

impl Subject {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Subject::Iri(iri) => Some(iri),
            Subject::Blank(_) => None,
        }
    }
}

impl From<Iri> for Subject {
    fn from(iri: Iri) -> Self {
        Subject::Iri(iri)
    }
}

impl From<BlankNode> for Subject {
    fn from(b: BlankNode) -> Self {
        Subject::Blank(b)
    }
}

/// Any RDF term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    Blank(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    /// Subject view of this term; literals have none.
    pub fn to_subject(&self) -> Option<Subject> {
        match self {
            Term::Iri(iri) => Some(Subject::Iri(iri.clone())),
            Term::Blank(b) => Some(Subject::Blank(b.clone())),
            Term::Literal(_) => None,
        }
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Self {
        Term::Blank(b)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

impl From<Subject> for Term {
    fn from(s: Subject) -> Self {
        match s {
            Subject::Iri(iri) => Term::Iri(iri),
            Subject::Blank(b) => Term::Blank(b),
        }
    }
}

/// One RDF statement. The type system already guarantees that predicates are
/// IRIs and that literals never appear in subject position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Subject,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: impl Into<Subject>, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple {
            subject: subject.into(),
            predicate,
            object: object.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_accepts_vocabulary_shapes() {
        for ok in [
            "http://purl.obolibrary.org/obo/SO_0001060",
            "https://w3id.org/eboca/sem-disnet#DrugDiseaseMarker",
            "ctd:Chemical-Disease-Association",
            "urn:uuid:1234",
        ] {
            assert!(Iri::new(ok).is_ok(), "{ok} should parse");
        }
    }

    #[test]
    fn iri_rejects_whitespace_controls_and_missing_scheme() {
        assert_eq!(Iri::new(""), Err(TermError::EmptyIri));
        assert!(matches!(
            Iri::new("http://x y"),
            Err(TermError::ForbiddenIriChar { ch: ' ', .. })
        ));
        assert!(matches!(
            Iri::new("http://x\ny"),
            Err(TermError::ForbiddenIriChar { ch: '\n', .. })
        ));
        assert!(matches!(
            Iri::new("no-scheme-here"),
            Err(TermError::MissingScheme(_))
        ));
        assert!(matches!(
            Iri::new(":leading"),
            Err(TermError::MissingScheme(_))
        ));
        assert!(matches!(
            Iri::new("1http://x"),
            Err(TermError::BadScheme(_))
        ));
        assert!(matches!(
            Iri::new("http://a<b"),
            Err(TermError::ForbiddenIriChar { ch: '<', .. })
        ));
    }

    #[test]
    fn blank_label_alphabet() {
        assert!(BlankNode::new("b0_x").is_ok());
        assert!(BlankNode::new("").is_err());
        assert!(BlankNode::new("a-b").is_err());
    }

    #[test]
    fn literal_language_invariants() {
        let lang = Literal::lang("diabetes", "en").unwrap();
        assert_eq!(lang.datatype().as_str(), RDF_LANG_STRING);
        assert_eq!(lang.language(), Some("en"));

        let plain = Literal::simple("x");
        assert_eq!(plain.datatype().as_str(), XSD_STRING);
        assert_eq!(plain.language(), None);

        // langString is unreachable without a tag
        let dt = Iri::new(RDF_LANG_STRING).unwrap();
        assert_eq!(
            Literal::typed("x", dt),
            Err(TermError::LangStringWithoutTag)
        );
        assert!(Literal::lang("x", "not a tag").is_err());
        assert!(Literal::lang("x", "en-GB-1").is_ok());
    }

    #[test]
    fn numeric_view() {
        let dt = Iri::new("http://www.w3.org/2001/XMLSchema#double").unwrap();
        assert_eq!(Literal::typed("0.7", dt).unwrap().as_f64(), Some(0.7));
        assert_eq!(Literal::simple("not a number").as_f64(), None);
        assert_eq!(Literal::simple("NaN").as_f64(), None);
    }

    #[test]
    fn terms_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<Term>();
        check::<Triple>();
    }
}
