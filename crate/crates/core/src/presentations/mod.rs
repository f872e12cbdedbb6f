//! Finite and recursive presentations, triviality certificates, the
//! trivial-word enumerator and abelianization.

mod abelian;
mod certificate;
mod enumerate;

use std::fmt;

use thiserror::Error;

use crate::stream::{FiniteSource, Pull, Source};
use crate::words::{Alphabet, Word, WordError};

pub use abelian::{
    abelianization_invariants, exponent_matrix, is_perfect, smith_normal_form, Abelianization, IntMatrix, Smith,
};
pub use certificate::{certificate_word, Factor, TrivialityCertificate};
pub use enumerate::{semidecide_trivial, trivial_word_stream, Dedup, Semidecision, TrivialWordStream};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("relator index {index} out of range ({available} relators)")]
    RelatorIndexOutOfRange { index: usize, available: usize },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

/// `⟨X | R⟩` with finitely many relators, each stored freely reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePresentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl FinitePresentation {
    pub fn new(alphabet: &Alphabet, relators: Vec<Word>) -> Result<Self, PresentationError> {
        if relators.iter().any(|r| !r.alphabet().same_as(alphabet)) {
            return Err(WordError::AlphabetMismatch.into());
        }
        Ok(FinitePresentation { alphabet: alphabet.clone(), relators })
    }

    /// Builds a presentation from generator names and relator texts.
    pub fn from_strs(gens: &[&str], relators: &[&str]) -> Result<Self, PresentationError> {
        let alphabet = Alphabet::new(gens.iter().copied())?;
        let relators = relators.iter().map(|r| Word::parse(&alphabet, r)).collect::<Result<Vec<_>, _>>()?;
        FinitePresentation::new(&alphabet, relators)
    }

    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        parse_presentation(text)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn word(&self, text: &str) -> Result<Word, WordError> {
        Word::parse(&self.alphabet, text)
    }

    /// Relators sorted in shortlex order, used for canonical serialization.
    pub fn canonical_string(&self) -> String {
        let mut rels: Vec<&Word> = self.relators.iter().collect();
        rels.sort_by(|a, b| a.shortlex_cmp(b));
        let rels: Vec<String> = rels.iter().map(|r| r.to_letter_string()).collect();
        format!("<{}|{}>", self.alphabet.names().join(","), rels.join(","))
    }

    pub fn to_recursive(&self) -> RecursivePresentation {
        RecursivePresentation::new(&self.alphabet, FiniteSource::new(self.relators.clone()))
    }
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        if rels.is_empty() {
            write!(f, "< {} | >", self.alphabet.names().join(", "))
        } else {
            write!(f, "< {} | {} >", self.alphabet.names().join(", "), rels.join(", "))
        }
    }
}

impl fmt::Debug for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinitePresentation({self})")
    }
}

/// Finitely many generators and a relator stream that may be infinite and
/// may repeat.
pub struct RecursivePresentation {
    alphabet: Alphabet,
    source: Box<dyn Source<Word> + Send>,
}

impl RecursivePresentation {
    /// Relators pulled from `source` must be over `alphabet`; foreign ones
    /// are dropped by consumers.
    pub fn new<S: Source<Word> + Send + 'static>(alphabet: &Alphabet, source: S) -> Self {
        RecursivePresentation { alphabet: alphabet.clone(), source: Box::new(source) }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn pull(&mut self) -> Pull<Word> {
        self.source.pull()
    }

    pub(crate) fn into_parts(self) -> (Alphabet, Box<dyn Source<Word> + Send>) {
        (self.alphabet, self.source)
    }
}

impl Source<Word> for RecursivePresentation {
    fn pull(&mut self) -> Pull<Word> {
        self.source.pull()
    }
}

impl fmt::Debug for RecursivePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RecursivePresentation< {} | ... >", self.alphabet)
    }
}

fn syntax(pos: usize, msg: &str) -> PresentationError {
    PresentationError::Syntax { pos, msg: msg.to_string() }
}

/// Parses `< gens | relators >`.
///
/// Generators are comma separated; relators are comma separated, each a
/// word or `u = v` (stored as `u v^-1`). Relators that reduce to the empty
/// word are dropped.
pub fn parse_presentation(text: &str) -> Result<FinitePresentation, PresentationError> {
    let open = text.find(|c: char| !c.is_whitespace()).ok_or_else(|| syntax(0, "empty input"))?;
    if !text[open..].starts_with('<') {
        return Err(syntax(open, "expected '<'"));
    }
    let bar = text.find('|').ok_or_else(|| syntax(text.len(), "expected '|'"))?;
    let close = text.rfind('>').ok_or_else(|| syntax(text.len(), "expected '>'"))?;
    if close < bar {
        return Err(syntax(close, "'>' before '|'"));
    }
    if let Some(extra) = text[close + 1..].find(|c: char| !c.is_whitespace()) {
        return Err(syntax(close + 1 + extra, "trailing input after '>'"));
    }
    if let Some(p) = text[bar + 1..close].find(['|', '<']) {
        return Err(syntax(bar + 1 + p, "unexpected delimiter"));
    }

    let mut names = Vec::new();
    let mut offset = open + 1;
    for part in text[open + 1..bar].split(',') {
        let name = part.trim();
        if name.is_empty() {
            if text[open + 1..bar].trim().is_empty() {
                break;
            }
            return Err(syntax(offset, "empty generator name"));
        }
        if !crate::words::is_valid_name(name) {
            return Err(syntax(offset + part.find(name).unwrap_or(0), "invalid generator name"));
        }
        names.push(name.to_string());
        offset += part.len() + 1;
    }
    let alphabet = Alphabet::new(names)?;

    let mut relators = Vec::new();
    let body = &text[bar + 1..close];
    let mut offset = bar + 1;
    for clause in body.split(',') {
        let base = offset;
        offset += clause.len() + 1;
        if clause.trim().is_empty() {
            if body.trim().is_empty() {
                break;
            }
            return Err(syntax(base, "empty relator"));
        }
        let mut sides = clause.split('=');
        let lhs = sides.next().unwrap_or("");
        let w = match sides.next() {
            None => Word::parse_at(&alphabet, lhs, base)?,
            Some(rhs) => {
                if sides.next().is_some() {
                    return Err(syntax(base, "more than one '=' in relator"));
                }
                let u = Word::parse_at(&alphabet, lhs, base)?;
                let v = Word::parse_at(&alphabet, rhs, base + lhs.len() + 1)?;
                u.concat(&v.inverse())?
            }
        };
        if !w.is_identity() {
            relators.push(w);
        }
    }
    Ok(FinitePresentation { alphabet, relators })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_bs23() {
        let p = parse_presentation("< s, t | s^-1 t^2 s = t^3 >").unwrap();
        assert_eq!(p.alphabet().names(), ["s", "t"]);
        assert_eq!(p.relators(), [p.word("s^-1 t^2 s t^-3").unwrap()]);
    }

    #[test]
    fn parse_free_and_degenerate() {
        let p = parse_presentation("< x | >").unwrap();
        assert_eq!(p.generator_count(), 1);
        assert!(p.relators().is_empty());
        let p = parse_presentation("<x|x x^-1>").unwrap();
        assert!(p.relators().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_presentation("< x, x | >"),
            Err(PresentationError::Word(WordError::DuplicateGenerator(_)))
        ));
        assert_eq!(
            parse_presentation("< x | y >"),
            Err(PresentationError::Word(WordError::UnknownGenerator { name: "y".into(), pos: 6 }))
        );
        assert!(matches!(parse_presentation("x | y >"), Err(PresentationError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_presentation("< x  y >"), Err(PresentationError::Syntax { .. })));
        assert!(matches!(parse_presentation("< x | x = x = x >"), Err(PresentationError::Syntax { .. })));
        assert!(matches!(parse_presentation("< x | x,, x >"), Err(PresentationError::Syntax { .. })));
        assert!(matches!(parse_presentation("< x | x > junk"), Err(PresentationError::Syntax { .. })));
    }

    #[test]
    fn display_parses_back() {
        let p = parse_presentation("< a, b | a^2, b^3 = a, a b a^-1 b^-1 >").unwrap();
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn canonical_string_sorts_relators() {
        let p = FinitePresentation::from_strs(&["x"], &["x^3", "x^2"]).unwrap();
        let q = FinitePresentation::from_strs(&["x"], &["x^2", "x^3"]).unwrap();
        assert_eq!(p.canonical_string(), q.canonical_string());
        assert_eq!(p.canonical_string(), "<x|x x,x x x>");
    }
}
