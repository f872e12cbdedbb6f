//! Free-group words over a finite alphabet.
//!
//! Every [`Word`] is freely reduced; the only place unreduced letter
//! sequences exist is the raw parse layer ([`parse_letters`]) and
//! [`free_reduce`] itself.
//!
//! Letter order, used by shortlex comparison and enumeration: generators in
//! declaration order, each immediately followed by its inverse. The letter
//! `(gen, inv)` has code `2 * gen + inv`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
    #[error("unknown generator {name:?} at offset {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("generator {0:?} has no image")]
    UnmappedGenerator(String),
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("map has {got} images for {expected} generators")]
    ArityMismatch { expected: usize, got: usize },
}

const FORBIDDEN: &[char] = &['^', ',', '|', '<', '>', '='];

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii() && !c.is_ascii_whitespace() && !c.is_ascii_control() && !FORBIDDEN.contains(&c))
}

/// An ordered set of generator names. Cheap to clone.
#[derive(Clone)]
pub struct Alphabet(Arc<[String]>);

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if !is_valid_name(n) {
                return Err(WordError::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(WordError::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Alphabet(names.into()))
    }

    /// `prefix1, prefix2, ..., prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self, WordError> {
        Alphabet::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of letters, `2 * len()`.
    pub fn letter_count(&self) -> usize {
        2 * self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.0[gen]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn same_as(&self, other: &Alphabet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    /// This alphabet with `name` appended.
    pub fn extended(&self, name: &str) -> Result<Alphabet, WordError> {
        Alphabet::new(self.0.iter().cloned().chain(std::iter::once(name.to_string())))
    }

    /// This alphabet with generator `gen` removed.
    pub fn without(&self, gen: usize) -> Result<Alphabet, WordError> {
        if gen >= self.len() {
            return Err(WordError::IndexOutOfRange(gen));
        }
        Alphabet::new(self.0.iter().enumerate().filter(|(i, _)| *i != gen).map(|(_, n)| n.clone()))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(", "))
    }
}

/// A generator or its inverse, by index into an alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, sign: i32) -> Letter {
        debug_assert!(sign == 1 || sign == -1);
        Letter { gen, inv: sign < 0 }
    }

    pub fn from_code(code: usize) -> Letter {
        Letter { gen: code / 2, inv: code % 2 == 1 }
    }

    pub fn code(self) -> usize {
        2 * self.gen + self.inv as usize
    }

    pub fn sign(self) -> i32 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, inv: !self.inv }
    }
}

/// Pushes `l` onto a reduced stack, cancelling against the top if possible.
#[inline]
pub(crate) fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    if stack.last() == Some(&l.inverse()) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

/// The unique freely reduced form of a letter sequence.
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(letters.len());
    for &l in letters {
        push_reduced(&mut out, l);
    }
    out
}

pub fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|p| p[0] != p[1].inverse())
}

/// Parses the word syntax into an unreduced letter sequence.
///
/// Letters are whitespace separated, each `name` or `name^k` for a nonzero
/// integer `k`. Offsets in errors are byte offsets into `text`.
pub fn parse_letters(alphabet: &Alphabet, text: &str) -> Result<Vec<Letter>, WordError> {
    parse_letters_at(alphabet, text, 0)
}

pub(crate) fn parse_letters_at(alphabet: &Alphabet, text: &str, base: usize) -> Result<Vec<Letter>, WordError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in text.split_ascii_whitespace() {
        let start = text[offset..].find(token).map(|i| i + offset).unwrap_or(offset);
        offset = start + token.len();
        let pos = base + start;
        let (name, exp) = match token.split_once('^') {
            None => (token, 1i64),
            Some((name, k)) => {
                let k: i64 = k
                    .parse()
                    .map_err(|_| WordError::Syntax { pos: pos + name.len() + 1, msg: format!("bad exponent {k:?}") })?;
                if k == 0 {
                    return Err(WordError::Syntax {
                        pos: pos + name.len() + 1,
                        msg: "exponent must be nonzero".into(),
                    });
                }
                (name, k)
            }
        };
        let gen = alphabet.index_of(name).ok_or_else(|| WordError::UnknownGenerator { name: name.to_string(), pos })?;
        let l = Letter::new(gen, exp.signum() as i32);
        for _ in 0..exp.unsigned_abs() {
            out.push(l);
        }
    }
    Ok(out)
}

/// A freely reduced word over an [`Alphabet`].
#[derive(Clone)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: &Alphabet) -> Word {
        Word { alphabet: alphabet.clone(), letters: Vec::new() }
    }

    pub fn generator(alphabet: &Alphabet, gen: usize) -> Word {
        assert!(gen < alphabet.len(), "generator index out of range");
        Word { alphabet: alphabet.clone(), letters: vec![Letter { gen, inv: false }] }
    }

    /// Reduces the given letters.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(alphabet: &Alphabet, letters: I) -> Result<Word, WordError> {
        let mut stack = Vec::new();
        for l in letters {
            if l.gen >= alphabet.len() {
                return Err(WordError::IndexOutOfRange(l.gen));
            }
            push_reduced(&mut stack, l);
        }
        Ok(Word { alphabet: alphabet.clone(), letters: stack })
    }

    /// Caller guarantees the letters are reduced and in range.
    pub(crate) fn from_reduced_unchecked(alphabet: &Alphabet, letters: Vec<Letter>) -> Word {
        debug_assert!(is_reduced(&letters));
        debug_assert!(letters.iter().all(|l| l.gen < alphabet.len()));
        Word { alphabet: alphabet.clone(), letters }
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Word, WordError> {
        let raw = parse_letters(alphabet, text)?;
        Ok(Word { alphabet: alphabet.clone(), letters: free_reduce(&raw) })
    }

    pub(crate) fn parse_at(alphabet: &Alphabet, text: &str, base: usize) -> Result<Word, WordError> {
        let raw = parse_letters_at(alphabet, text, base)?;
        Ok(Word { alphabet: alphabet.clone(), letters: free_reduce(&raw) })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { alphabet: self.alphabet.clone(), letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    fn check_same(&self, other: &Word) -> Result<(), WordError> {
        if self.alphabet.same_as(&other.alphabet) {
            Ok(())
        } else {
            Err(WordError::AlphabetMismatch)
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        self.check_same(other)?;
        Ok(self.mul(other))
    }

    /// Concatenation without the alphabet check.
    pub(crate) fn mul(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Word { alphabet: self.alphabet.clone(), letters }
    }

    /// `[self, other] = self other self^-1 other^-1`.
    pub fn commutator(&self, other: &Word) -> Result<Word, WordError> {
        self.check_same(other)?;
        Ok(self.mul(other).mul(&self.inverse()).mul(&other.inverse()))
    }

    /// `c self c^-1`.
    pub fn conjugate_by(&self, c: &Word) -> Result<Word, WordError> {
        self.check_same(c)?;
        Ok(c.mul(self).mul(&c.inverse()))
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(&self.alphabet);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.sign() as i64).sum()
    }

    pub fn uses_generator(&self, gen: usize) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    /// Rewrites the word over `target`, matching generators by name.
    pub fn translate(&self, target: &Alphabet) -> Result<Word, WordError> {
        if self.alphabet.same_as(target) {
            return Ok(Word { alphabet: target.clone(), letters: self.letters.clone() });
        }
        let table: Vec<Option<usize>> = self.alphabet.names().iter().map(|n| target.index_of(n)).collect();
        let letters = self
            .letters
            .iter()
            .map(|l| match table[l.gen] {
                Some(gen) => Ok(Letter { gen, inv: l.inv }),
                None => Err(WordError::UnmappedGenerator(self.alphabet.name(l.gen).to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word { alphabet: target.clone(), letters })
    }

    /// Shortlex: shorter first, then lexicographic by letter code.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.iter().map(|l| l.code()).cmp(other.letters.iter().map(|l| l.code())))
    }

    /// One token per letter (`s^-1 t t`) rather than the run form of `Display`.
    pub fn to_letter_string(&self) -> String {
        self.letters
            .iter()
            .map(|l| {
                let name = self.alphabet.name(l.gen);
                if l.inv {
                    format!("{name}^-1")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.alphabet.same_as(&other.alphabet)
    }
}

impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

/// Run form: `s^-1 t^2 s t^-3`. The identity prints as the empty string.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64 * l.sign() as i64;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(self.alphabet.name(l.gen))?;
            if run != 1 {
                write!(f, "^{run}")?;
            }
            i = j;
        }
        Ok(())
    }
}

/// A set map from one alphabet's generators to words over another.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorMap {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
}

impl GeneratorMap {
    pub fn new(domain: &Alphabet, codomain: &Alphabet, images: Vec<Word>) -> Result<Self, WordError> {
        if images.len() != domain.len() {
            return Err(WordError::ArityMismatch { expected: domain.len(), got: images.len() });
        }
        if images.iter().any(|w| !w.alphabet.same_as(codomain)) {
            return Err(WordError::AlphabetMismatch);
        }
        Ok(GeneratorMap { domain: domain.clone(), codomain: codomain.clone(), images })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = (0..alphabet.len()).map(|g| Word::generator(alphabet, g)).collect();
        GeneratorMap { domain: alphabet.clone(), codomain: alphabet.clone(), images }
    }

    /// Parses `gen=word,gen=word`. Every domain generator needs exactly one image.
    pub fn parse(domain: &Alphabet, codomain: &Alphabet, text: &str) -> Result<Self, WordError> {
        let mut images: Vec<Option<Word>> = vec![None; domain.len()];
        let mut offset = 0;
        for clause in text.split(',') {
            let base = offset;
            offset += clause.len() + 1;
            if clause.trim().is_empty() {
                continue;
            }
            let (lhs, rhs) = clause
                .split_once('=')
                .ok_or_else(|| WordError::Syntax { pos: base, msg: "expected gen=word".into() })?;
            let name = lhs.trim();
            let gen = domain
                .index_of(name)
                .ok_or_else(|| WordError::UnknownGenerator { name: name.to_string(), pos: base })?;
            if images[gen].is_some() {
                return Err(WordError::DuplicateGenerator(name.to_string()));
            }
            images[gen] = Some(Word::parse_at(codomain, rhs, base + lhs.len() + 1)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(g, w)| w.ok_or_else(|| WordError::UnmappedGenerator(domain.name(g).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GeneratorMap { domain: domain.clone(), codomain: codomain.clone(), images })
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &Word {
        &self.images[gen]
    }

    /// Extends the map to words: see [`substitute`].
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        substitute(w, self)
    }

    /// `self` followed by `next`: `g ↦ next(self(g))`.
    pub fn then(&self, next: &GeneratorMap) -> Result<GeneratorMap, WordError> {
        let images = self.images.iter().map(|w| next.apply(w)).collect::<Result<Vec<_>, _>>()?;
        Ok(GeneratorMap { domain: self.domain.clone(), codomain: next.codomain.clone(), images })
    }
}

impl fmt::Display for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, w) in self.images.iter().enumerate() {
            if g > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}={}", self.domain.name(g), w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorMap({self})")
    }
}

/// Replaces each letter of `w` by the image of its generator (or the
/// inverse image), then reduces. Generators are matched by name when `w`
/// is not over the map's domain alphabet.
pub fn substitute(w: &Word, map: &GeneratorMap) -> Result<Word, WordError> {
    let table: Vec<Option<usize>> = if w.alphabet.same_as(&map.domain) {
        (0..map.domain.len()).map(Some).collect()
    } else {
        w.alphabet.names().iter().map(|n| map.domain.index_of(n)).collect()
    };
    let mut out = Vec::new();
    for l in &w.letters {
        let g = table[l.gen].ok_or_else(|| WordError::UnmappedGenerator(w.alphabet.name(l.gen).to_string()))?;
        let image = &map.images[g];
        if l.inv {
            for &x in image.letters.iter().rev() {
                push_reduced(&mut out, x.inverse());
            }
        } else {
            for &x in &image.letters {
                push_reduced(&mut out, x);
            }
        }
    }
    Ok(Word { alphabet: map.codomain.clone(), letters: out })
}

/// Advances `digits` to the next reduced sequence of the same length in
/// lexicographic order of letter codes. Returns false when none exists.
fn advance_reduced(digits: &mut [usize], letter_count: usize) -> bool {
    for i in (0..digits.len()).rev() {
        let forbidden = if i > 0 { Some(digits[i - 1] ^ 1) } else { None };
        let mut d = digits[i] + 1;
        if Some(d) == forbidden {
            d += 1;
        }
        if d < letter_count {
            digits[i] = d;
            for j in i + 1..digits.len() {
                digits[j] = if digits[j - 1] == 1 { 1 } else { 0 };
            }
            return true;
        }
    }
    false
}

fn digits_to_word(alphabet: &Alphabet, digits: &[usize]) -> Word {
    Word::from_reduced_unchecked(alphabet, digits.iter().map(|&d| Letter::from_code(d)).collect())
}

/// All reduced words of length exactly `len`, in shortlex order.
pub fn reduced_words_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    let mut digits = vec![0usize; len];
    let mut out = vec![digits_to_word(alphabet, &digits)];
    while advance_reduced(&mut digits, alphabet.letter_count()) {
        out.push(digits_to_word(alphabet, &digits));
    }
    out
}

/// Number of reduced words of length `len` over `gens` generators.
pub fn reduced_word_count(gens: usize, len: usize) -> u128 {
    if len == 0 {
        1
    } else {
        2 * gens as u128 * (2 * gens as u128 - 1).pow(len as u32 - 1)
    }
}

/// Every reduced word over the alphabet exactly once, in shortlex order.
#[derive(Clone, Debug)]
pub struct ShortlexStream {
    alphabet: Alphabet,
    digits: Vec<usize>,
    started: bool,
}

impl ShortlexStream {
    pub fn new(alphabet: &Alphabet) -> Self {
        ShortlexStream { alphabet: alphabet.clone(), digits: Vec::new(), started: false }
    }
}

pub fn shortlex_stream(alphabet: &Alphabet) -> ShortlexStream {
    ShortlexStream::new(alphabet)
}

impl Iterator for ShortlexStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if !self.started {
            self.started = true;
        } else if !advance_reduced(&mut self.digits, self.alphabet.letter_count()) {
            let len = self.digits.len() + 1;
            self.digits = vec![0; len];
        }
        Some(digits_to_word(&self.alphabet, &self.digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn st() -> Alphabet {
        Alphabet::new(["s", "t"]).unwrap()
    }

    fn w(a: &Alphabet, text: &str) -> Word {
        Word::parse(a, text).unwrap()
    }

    fn raw(a: &Alphabet, text: &str) -> Vec<Letter> {
        parse_letters(a, text).unwrap()
    }

    #[test]
    fn alphabet_validation() {
        assert_eq!(Alphabet::new(Vec::<String>::new()).unwrap_err(), WordError::EmptyAlphabet);
        assert!(matches!(Alphabet::new(["s", "s"]), Err(WordError::DuplicateGenerator(_))));
        for bad in ["", "a b", "x^", "a,b", "a|", "<a", "a>", "a=b"] {
            assert!(matches!(Alphabet::new([bad]), Err(WordError::InvalidName(_))), "{bad:?}");
        }
        assert!(Alphabet::new(["W1", "x_2", "a'"]).is_ok());
    }

    #[test]
    fn free_reduce_examples() {
        let a = st();
        assert!(free_reduce(&raw(&a, "s s^-1")).is_empty());
        assert_eq!(free_reduce(&raw(&a, "t s s^-1 t")), raw(&a, "t t"));
        assert_eq!(free_reduce(&raw(&a, "s^-1 t s")), raw(&a, "s^-1 t s"));
    }

    #[test]
    fn invert_examples() {
        let a = st();
        assert_eq!(w(&a, "s t").inverse(), w(&a, "t^-1 s^-1"));
        assert_eq!(w(&a, "").inverse(), w(&a, ""));
        assert_eq!(w(&a, "t^-1").inverse(), w(&a, "t"));
    }

    #[test]
    fn concat_examples() {
        let a = st();
        assert!(w(&a, "s").concat(&w(&a, "s^-1")).unwrap().is_identity());
        assert_eq!(w(&a, "s t").concat(&w(&a, "t^-1 s")).unwrap(), w(&a, "s s"));
        assert_eq!(w(&a, "").concat(&w(&a, "t")).unwrap(), w(&a, "t"));
        let x = Alphabet::new(["x"]).unwrap();
        assert_eq!(w(&a, "s").concat(&w(&x, "x")), Err(WordError::AlphabetMismatch));
    }

    #[test]
    fn commutator_examples() {
        let a = st();
        assert_eq!(w(&a, "s^-1 t s").commutator(&w(&a, "t")).unwrap(), w(&a, "s^-1 t s t s^-1 t^-1 s t^-1"));
        assert!(w(&a, "t").commutator(&w(&a, "t")).unwrap().is_identity());
        assert_eq!(w(&a, "s").commutator(&w(&a, "t")).unwrap(), w(&a, "s t s^-1 t^-1"));
    }

    #[test]
    fn substitute_examples() {
        let a = st();
        let f = GeneratorMap::parse(&a, &a, "s=s,t=t^2").unwrap();
        assert_eq!(substitute(&w(&a, "t"), &f).unwrap(), w(&a, "t t"));
        assert_eq!(substitute(&w(&a, "s^-1 t s"), &GeneratorMap::identity(&a)).unwrap(), w(&a, "s^-1 t s"));
        assert_eq!(substitute(&w(&a, "t^-1"), &f).unwrap(), w(&a, "t^-1 t^-1"));
    }

    #[test]
    fn substitute_unmapped_generator() {
        let xy = Alphabet::new(["x", "y"]).unwrap();
        let x = Alphabet::new(["x"]).unwrap();
        let m = GeneratorMap::parse(&x, &x, "x=x^2").unwrap();
        assert_eq!(substitute(&w(&xy, "x y"), &m), Err(WordError::UnmappedGenerator("y".into())));
        // a word over a different alphabet that only uses mapped names is fine
        assert_eq!(substitute(&w(&xy, "x"), &m).unwrap(), w(&x, "x x"));
    }

    #[test]
    fn map_parse_errors() {
        let a = st();
        assert!(matches!(GeneratorMap::parse(&a, &a, "s=s"), Err(WordError::UnmappedGenerator(_))));
        assert!(matches!(GeneratorMap::parse(&a, &a, "s=s,s=t,t=t"), Err(WordError::DuplicateGenerator(_))));
        assert!(matches!(GeneratorMap::parse(&a, &a, "s=s,t=u"), Err(WordError::UnknownGenerator { .. })));
        let m = GeneratorMap::parse(&a, &a, "s=,t=s^-1 t s t^-1").unwrap();
        assert!(m.image(0).is_identity());
        assert_eq!(GeneratorMap::parse(&a, &a, &m.to_string()).unwrap(), m);
    }

    #[test]
    fn parse_syntax() {
        let a = st();
        assert_eq!(w(&a, "t^3 t^-1").len(), 2);
        assert!(matches!(Word::parse(&a, "t^0"), Err(WordError::Syntax { pos: 2, .. })));
        assert!(matches!(Word::parse(&a, "t^x"), Err(WordError::Syntax { .. })));
        assert_eq!(Word::parse(&a, "s  u"), Err(WordError::UnknownGenerator { name: "u".into(), pos: 3 }));
    }

    #[test]
    fn display_uses_runs() {
        let a = st();
        assert_eq!(w(&a, "t s^-1 t t s t^-3 t^-1").to_string(), "t s^-1 t^2 s t^-4");
        assert_eq!(w(&a, "t t").to_letter_string(), "t t");
        assert_eq!(w(&a, "").to_string(), "");
    }

    /// Brute force: all letter sequences of length `len` in lexicographic
    /// code order, filtered to reduced ones.
    fn brute_reduced(k: usize, len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let total = k.pow(len as u32);
        for mut n in 0..total {
            let mut digits = vec![0; len];
            for i in (0..len).rev() {
                digits[i] = n % k;
                n /= k;
            }
            if digits.windows(2).all(|p| p[0] != p[1] ^ 1) {
                out.push(digits);
            }
        }
        out
    }

    #[test]
    fn shortlex_matches_brute_force() {
        for names in [vec!["t"], vec!["s", "t"], vec!["a", "b", "c"]] {
            let a = Alphabet::new(names).unwrap();
            let k = a.letter_count();
            let expected: Vec<Vec<usize>> = (0..=4).flat_map(|len| brute_reduced(k, len)).collect();
            let got: Vec<Vec<usize>> = shortlex_stream(&a)
                .take(expected.len())
                .map(|w| w.letters().iter().map(|l| l.code()).collect())
                .collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn shortlex_first_outputs() {
        let t = Alphabet::new(["t"]).unwrap();
        let got: Vec<String> = shortlex_stream(&t).take(5).map(|w| w.to_letter_string()).collect();
        assert_eq!(got, ["", "t", "t^-1", "t t", "t^-1 t^-1"]);
        assert!(shortlex_stream(&st()).next().unwrap().is_identity());
    }

    #[test]
    fn shortlex_count_bound_and_order() {
        let a = st();
        let bound: u128 = (0..=5).map(|k| reduced_word_count(2, k)).sum();
        let words: Vec<Word> = shortlex_stream(&a).take(bound as usize).collect();
        assert!(words.windows(2).all(|p| p[0].shortlex_cmp(&p[1]) == Ordering::Less));
        assert_eq!(words.last().unwrap().len(), 5);
        let set: std::collections::HashSet<_> = words.iter().cloned().collect();
        assert_eq!(set.len(), words.len());
        for len in 0..=5 {
            assert_eq!(reduced_words_of_length(&a, len).len() as u128, reduced_word_count(2, len));
        }
    }

    fn arb_word(a: Alphabet) -> impl Strategy<Value = Word> {
        let k = a.letter_count();
        proptest::collection::vec(0..k, 0..12)
            .prop_map(move |codes| Word::from_letters(&a, codes.into_iter().map(Letter::from_code)).unwrap())
    }

    proptest! {
        #[test]
        fn reduce_idempotent(codes in proptest::collection::vec(0usize..4, 0..20)) {
            let letters: Vec<Letter> = codes.into_iter().map(Letter::from_code).collect();
            let once = free_reduce(&letters);
            prop_assert!(is_reduced(&once));
            prop_assert_eq!(free_reduce(&once), once);
        }

        #[test]
        fn concat_associative(u in arb_word(st()), v in arb_word(st()), x in arb_word(st())) {
            let left = u.concat(&v).unwrap().concat(&x).unwrap();
            let right = u.concat(&v.concat(&x).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert!(u.concat(&u.inverse()).unwrap().is_identity());
        }

        #[test]
        fn substitute_distributes(u in arb_word(st()), v in arb_word(st()), a in arb_word(st()), b in arb_word(st())) {
            let alph = st();
            let m = GeneratorMap::new(&alph, &alph, vec![a, b]).unwrap();
            let lhs = substitute(&u.concat(&v).unwrap(), &m).unwrap();
            let rhs = substitute(&u, &m).unwrap().concat(&substitute(&v, &m).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn display_parse_roundtrip(u in arb_word(st())) {
            prop_assert_eq!(Word::parse(&st(), &u.to_string()).unwrap(), u.clone());
            prop_assert_eq!(Word::parse(&st(), &u.to_letter_string()).unwrap(), u);
        }
    }
}
