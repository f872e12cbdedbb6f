//! Tietze transformations on finite presentations, checked by certificates.

use std::fmt;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::presentations::{
    certificate_word, semidecide_trivial, Factor, FinitePresentation, PresentationError, TrivialityCertificate,
};
use crate::words::{is_valid_name, substitute, Alphabet, GeneratorMap, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TietzeError {
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("generator name clash: {0}")]
    GeneratorNameClash(String),
    #[error("no defining relator for {0}")]
    DefiningRelatorNotFound(String),
    #[error("relator index {index} out of range ({available} relators)")]
    IndexOutOfRange { index: usize, available: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("malformed move: {0}")]
    Malformed(String),
    #[error("move {step}: {source}")]
    AtStep { step: usize, source: Box<TietzeError> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TietzeMove {
    /// Appends a consequence of the relators; the certificate is checked
    /// against the current relators.
    AddRelator { word: Word, cert: Option<TrivialityCertificate> },
    /// Deletes a relator; the certificate is checked against the relators
    /// that remain, indexed after the deletion.
    RemoveRelator { index: usize, cert: Option<TrivialityCertificate> },
    /// Appends generator `name` and relator `name · def^-1`.
    AddGenerator { name: String, def: Word },
    /// Eliminates `name` using a relator literally equal to `name · w^-1`
    /// with `w` free of `name`. With `via = None` the first such relator is
    /// used.
    RemoveGenerator { name: String, via: Option<usize> },
}

impl TietzeMove {
    pub fn add_relator(word: Word, cert: TrivialityCertificate) -> Self {
        TietzeMove::AddRelator { word, cert: Some(cert) }
    }

    pub fn remove_relator(index: usize, cert: TrivialityCertificate) -> Self {
        TietzeMove::RemoveRelator { index, cert: Some(cert) }
    }

    pub fn add_generator(name: &str, def: Word) -> Self {
        TietzeMove::AddGenerator { name: name.to_string(), def }
    }

    pub fn remove_generator(name: &str) -> Self {
        TietzeMove::RemoveGenerator { name: name.to_string(), via: None }
    }

    pub fn to_json(&self) -> Value {
        let cert_json = |c: &Option<TrivialityCertificate>| c.as_ref().map_or(Value::Null, |c| c.to_json());
        match self {
            TietzeMove::AddRelator { word, cert } => {
                json!({"op": "add_rel", "word": word.to_string(), "cert": cert_json(cert)})
            }
            TietzeMove::RemoveRelator { index, cert } => {
                json!({"op": "rem_rel", "index": index, "cert": cert_json(cert)})
            }
            TietzeMove::AddGenerator { name, def } => json!({"op": "add_gen", "name": name, "def": def.to_string()}),
            TietzeMove::RemoveGenerator { name, via } => json!({"op": "rem_gen", "name": name, "via": via}),
        }
    }

    /// Parses a move whose words are over `alphabet`, the generators of the
    /// presentation it will be applied to.
    pub fn from_json(alphabet: &Alphabet, value: &Value) -> Result<Self, TietzeError> {
        let field = |k: &str| value.get(k).filter(|v| !v.is_null());
        let text = |k: &str| {
            field(k).and_then(Value::as_str).ok_or_else(|| TietzeError::Malformed(format!("missing string '{k}'")))
        };
        let index = |k: &str| {
            field(k)
                .map(|v| v.as_u64().map(|i| i as usize).ok_or_else(|| TietzeError::Malformed(format!("bad '{k}'"))))
                .transpose()
        };
        let cert = || -> Result<Option<TrivialityCertificate>, TietzeError> {
            Ok(field("cert").map(|c| TrivialityCertificate::from_json(alphabet, c)).transpose()?)
        };
        match text("op")? {
            "add_rel" => Ok(TietzeMove::AddRelator { word: Word::parse(alphabet, text("word")?)?, cert: cert()? }),
            "rem_rel" => Ok(TietzeMove::RemoveRelator {
                index: index("index")?.ok_or_else(|| TietzeError::Malformed("missing 'index'".into()))?,
                cert: cert()?,
            }),
            "add_gen" => Ok(TietzeMove::AddGenerator {
                name: text("name")?.to_string(),
                def: Word::parse(alphabet, text("def")?)?,
            }),
            "rem_gen" => Ok(TietzeMove::RemoveGenerator { name: text("name")?.to_string(), via: index("via")? }),
            op => Err(TietzeError::Malformed(format!("unknown op '{op}'"))),
        }
    }
}

impl fmt::Display for TietzeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TietzeMove::AddRelator { word, .. } => write!(f, "add relator {word}"),
            TietzeMove::RemoveRelator { index, .. } => write!(f, "remove relator #{index}"),
            TietzeMove::AddGenerator { name, def } => write!(f, "add generator {name} = {def}"),
            TietzeMove::RemoveGenerator { name, .. } => write!(f, "remove generator {name}"),
        }
    }
}

fn translate_cert(cert: &TrivialityCertificate, alphabet: &Alphabet) -> Result<TrivialityCertificate, TietzeError> {
    let factors = cert
        .factors
        .iter()
        .map(|f| Ok(Factor { conj: f.conj.translate(alphabet)?, rel: f.rel, sign: f.sign }))
        .collect::<Result<Vec<_>, WordError>>()?;
    Ok(TrivialityCertificate::new(factors))
}

fn check_cert(cert: &TrivialityCertificate, relators: &[Word], w: &Word) -> Result<(), TietzeError> {
    let cert = translate_cert(cert, w.alphabet()).map_err(|e| TietzeError::InvalidCertificate(e.to_string()))?;
    let value =
        certificate_word(w.alphabet(), relators, &cert).map_err(|e| TietzeError::InvalidCertificate(e.to_string()))?;
    if &value == w {
        Ok(())
    } else {
        Err(TietzeError::InvalidCertificate(format!("certificate evaluates to {value}, not {w}")))
    }
}

/// Index of the first relator of the form `g · w^-1` with `w` free of `g`.
fn defining_relator(p: &FinitePresentation, g: usize, via: Option<usize>) -> Option<usize> {
    let is_defining = |r: &Word| {
        r.letters().first().is_some_and(|l| l.gen == g && !l.inv) && r.letters()[1..].iter().all(|l| l.gen != g)
    };
    match via {
        Some(i) => p.relators().get(i).filter(|r| is_defining(r)).map(|_| i),
        None => p.relators().iter().position(is_defining),
    }
}

fn relator_index(p: &FinitePresentation, index: usize) -> Result<(), TietzeError> {
    if index < p.relators().len() {
        Ok(())
    } else {
        Err(TietzeError::IndexOutOfRange { index, available: p.relators().len() })
    }
}

fn missing_cert() -> TietzeError {
    TietzeError::InvalidCertificate("no certificate given".into())
}

pub fn apply_move(p: &FinitePresentation, mv: &TietzeMove) -> Result<FinitePresentation, TietzeError> {
    let alphabet = p.alphabet();
    match mv {
        TietzeMove::AddRelator { word, cert } => {
            let word = word.translate(alphabet)?;
            check_cert(cert.as_ref().ok_or_else(missing_cert)?, p.relators(), &word)?;
            let mut rels = p.relators().to_vec();
            rels.push(word);
            Ok(FinitePresentation::new(alphabet, rels)?)
        }
        TietzeMove::RemoveRelator { index, cert } => {
            relator_index(p, *index)?;
            let mut rels = p.relators().to_vec();
            let removed = rels.remove(*index);
            check_cert(cert.as_ref().ok_or_else(missing_cert)?, &rels, &removed)?;
            Ok(FinitePresentation::new(alphabet, rels)?)
        }
        TietzeMove::AddGenerator { name, def } => {
            if alphabet.index_of(name).is_some() {
                return Err(TietzeError::GeneratorNameClash(name.clone()));
            }
            if !is_valid_name(name) {
                return Err(WordError::InvalidName(name.clone()).into());
            }
            let def = def.translate(alphabet)?;
            let wider = alphabet.extended(name)?;
            let mut rels = p.relators().iter().map(|r| r.translate(&wider)).collect::<Result<Vec<_>, _>>()?;
            let g = Word::generator(&wider, wider.len() - 1);
            rels.push(g.concat(&def.translate(&wider)?.inverse())?);
            Ok(FinitePresentation::new(&wider, rels)?)
        }
        TietzeMove::RemoveGenerator { name, via } => {
            let g = alphabet.index_of(name).ok_or_else(|| TietzeError::DefiningRelatorNotFound(name.clone()))?;
            if let Some(i) = via {
                relator_index(p, *i)?;
            }
            let d = defining_relator(p, g, *via).ok_or_else(|| TietzeError::DefiningRelatorNotFound(name.clone()))?;
            let narrower = alphabet.without(g)?;
            let def = Word::from_letters(alphabet, p.relators()[d].letters()[1..].iter().map(|l| l.inverse()).rev())?;
            let images =
                (0..alphabet.len())
                    .map(|h| {
                        if h == g {
                            def.translate(&narrower)
                        } else {
                            Word::generator(alphabet, h).translate(&narrower)
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
            let sigma = GeneratorMap::new(alphabet, &narrower, images)?;
            let rels = p
                .relators()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != d)
                .map(|(_, r)| substitute(r, &sigma))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FinitePresentation::new(&narrower, rels)?)
        }
    }
}

/// Hex SHA-256 of [`FinitePresentation::canonical_string`].
pub fn presentation_hash(p: &FinitePresentation) -> String {
    hex::encode(Sha256::digest(p.canonical_string().as_bytes()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogEntry {
    pub mv: TietzeMove,
    pub before: String,
    pub after: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MoveLog {
    pub entries: Vec<LogEntry>,
}

impl MoveLog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn chains(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].after == w[1].before)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|e| json!({"move": e.mv.to_json(), "before": e.before, "after": e.after}))
                .collect(),
        )
    }
}

pub fn apply_sequence(
    p: &FinitePresentation,
    moves: &[TietzeMove],
) -> Result<(FinitePresentation, MoveLog), TietzeError> {
    let mut current = p.clone();
    let mut log = MoveLog::default();
    let mut hash = presentation_hash(&current);
    for (step, mv) in moves.iter().enumerate() {
        let next = apply_move(&current, mv).map_err(|e| TietzeError::AtStep { step, source: Box::new(e) })?;
        let after = presentation_hash(&next);
        log.entries.push(LogEntry { mv: mv.clone(), before: hash, after: after.clone() });
        hash = after;
        current = next;
    }
    Ok((current, log))
}

/// Applies a JSON array of moves, parsing each against the presentation it
/// is applied to.
pub fn apply_json_sequence(
    p: &FinitePresentation,
    moves: &Value,
) -> Result<(FinitePresentation, MoveLog), TietzeError> {
    let list = moves.as_array().ok_or_else(|| TietzeError::Malformed("expected a JSON array of moves".into()))?;
    let mut current = p.clone();
    let mut log = MoveLog::default();
    for (step, value) in list.iter().enumerate() {
        let at = |e| TietzeError::AtStep { step, source: Box::new(e) };
        let mv = TietzeMove::from_json(current.alphabet(), value).map_err(at)?;
        let next = apply_move(&current, &mv).map_err(at)?;
        log.entries.push(LogEntry { mv, before: presentation_hash(&current), after: presentation_hash(&next) });
        current = next;
    }
    Ok((current, log))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveCheck {
    Valid,
    Invalid(String),
    Unverifiable { budget: u64 },
}

/// Like [`apply_move`] but total. Relator moves without a certificate are
/// settled by searching the trivial-word stream of the relevant relators.
pub fn check_move(p: &FinitePresentation, mv: &TietzeMove, budget: u64) -> MoveCheck {
    let search = |rels: Vec<Word>, w: Word| {
        let q = match FinitePresentation::new(p.alphabet(), rels) {
            Ok(q) => q,
            Err(e) => return MoveCheck::Invalid(e.to_string()),
        };
        if semidecide_trivial(&q, &w, budget).is_proved() {
            MoveCheck::Valid
        } else {
            MoveCheck::Unverifiable { budget }
        }
    };
    match mv {
        TietzeMove::AddRelator { word, cert: None } => match word.translate(p.alphabet()) {
            Ok(w) => search(p.relators().to_vec(), w),
            Err(e) => MoveCheck::Invalid(e.to_string()),
        },
        TietzeMove::RemoveRelator { index, cert: None } => {
            if let Err(e) = relator_index(p, *index) {
                return MoveCheck::Invalid(e.to_string());
            }
            let mut rels = p.relators().to_vec();
            let removed = rels.remove(*index);
            search(rels, removed)
        }
        _ => match apply_move(p, mv) {
            Ok(_) => MoveCheck::Valid,
            Err(e) => MoveCheck::Invalid(e.to_string()),
        },
    }
}
