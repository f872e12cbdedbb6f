use serde::{Deserialize, Serialize};

use super::{FinitePresentation, PresentationError};
use crate::words::{push_reduced, Alphabet, Word};

/// One factor `conj · r^sign · conj^-1`. `rel == None` is the empty relator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub conj: Word,
    pub rel: Option<usize>,
    pub sign: i8,
}

/// A product of conjugates of relators, witnessing that its value is trivial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrivialityCertificate {
    pub factors: Vec<Factor>,
}

#[derive(Serialize, Deserialize)]
struct FactorRecord {
    conj: String,
    rel: i64,
    sign: i8,
}

impl TrivialityCertificate {
    pub fn new(factors: Vec<Factor>) -> Self {
        TrivialityCertificate { factors }
    }

    pub fn empty() -> Self {
        TrivialityCertificate::default()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Builds a certificate from `(conjugator text, relator index, sign)` triples.
    pub fn from_triples(alphabet: &Alphabet, triples: &[(&str, usize, i8)]) -> Result<Self, PresentationError> {
        let factors = triples
            .iter()
            .map(|&(c, rel, sign)| {
                Ok(Factor { conj: Word::parse(alphabet, c)?, rel: Some(rel), sign: check_sign(sign)? })
            })
            .collect::<Result<Vec<_>, PresentationError>>()?;
        Ok(TrivialityCertificate { factors })
    }

    /// Largest relator index used, if any.
    pub fn max_relator(&self) -> Option<usize> {
        self.factors.iter().filter_map(|f| f.rel).max()
    }

    /// JSON array of `{conj, rel, sign}`; the empty relator has `rel = -1`.
    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<FactorRecord> = self
            .factors
            .iter()
            .map(|f| FactorRecord { conj: f.conj.to_string(), rel: f.rel.map_or(-1, |r| r as i64), sign: f.sign })
            .collect();
        serde_json::to_value(records).expect("certificate records serialize")
    }

    pub fn from_json(alphabet: &Alphabet, value: &serde_json::Value) -> Result<Self, PresentationError> {
        let records: Vec<FactorRecord> = serde_json::from_value(value.clone())
            .map_err(|e| PresentationError::MalformedCertificate(e.to_string()))?;
        let factors = records
            .into_iter()
            .map(|r| {
                let rel = match r.rel {
                    -1 => None,
                    i if i >= 0 => Some(i as usize),
                    i => return Err(PresentationError::MalformedCertificate(format!("relator index {i}"))),
                };
                Ok(Factor { conj: Word::parse(alphabet, &r.conj)?, rel, sign: check_sign(r.sign)? })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TrivialityCertificate { factors })
    }

    pub fn from_json_str(alphabet: &Alphabet, text: &str) -> Result<Self, PresentationError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PresentationError::MalformedCertificate(e.to_string()))?;
        Self::from_json(alphabet, &value)
    }

    /// Value of the product against `p`'s relators.
    pub fn evaluate(&self, p: &FinitePresentation) -> Result<Word, PresentationError> {
        certificate_word(p.alphabet(), p.relators(), self)
    }

    /// Does the certificate evaluate to `w` against `relators`?
    pub fn proves(&self, relators: &[Word], w: &Word) -> bool {
        certificate_word(w.alphabet(), relators, self).is_ok_and(|v| &v == w)
    }
}

fn check_sign(sign: i8) -> Result<i8, PresentationError> {
    if sign == 1 || sign == -1 {
        Ok(sign)
    } else {
        Err(PresentationError::MalformedCertificate(format!("sign {sign}")))
    }
}

/// Free-reduced value of `Π conj_i · r_i^sign_i · conj_i^-1`.
pub fn certificate_word(
    alphabet: &Alphabet,
    relators: &[Word],
    cert: &TrivialityCertificate,
) -> Result<Word, PresentationError> {
    let mut out = Vec::new();
    for f in &cert.factors {
        if !f.conj.alphabet().same_as(alphabet) {
            return Err(crate::words::WordError::AlphabetMismatch.into());
        }
        check_sign(f.sign)?;
        let Some(index) = f.rel else { continue };
        let r = relators
            .get(index)
            .ok_or(PresentationError::RelatorIndexOutOfRange { index, available: relators.len() })?;
        if !r.alphabet().same_as(alphabet) {
            return Err(crate::words::WordError::AlphabetMismatch.into());
        }
        push_factor(&mut out, f.conj.letters(), r.letters(), f.sign < 0);
    }
    Ok(Word::from_reduced_unchecked(alphabet, out))
}

#[inline]
pub(crate) fn push_factor(
    out: &mut Vec<crate::words::Letter>,
    conj: &[crate::words::Letter],
    rel: &[crate::words::Letter],
    inverse: bool,
) {
    for &l in conj {
        push_reduced(out, l);
    }
    if inverse {
        for &l in rel.iter().rev() {
            push_reduced(out, l.inverse());
        }
    } else {
        for &l in rel {
            push_reduced(out, l);
        }
    }
    for &l in conj.iter().rev() {
        push_reduced(out, l.inverse());
    }
}
