//! Baumslag–Solitar groups `BS(m,n) = ⟨s, t | s^-1 t^m s = t^n⟩`.
//!
//! The word problem is solved by Britton reduction on syllable form: a
//! *pinch* is `s^-1 t^k s` with `m | k` (rewritten to `t^{kn/m}`) or
//! `s t^k s^-1` with `n | k` (rewritten to `t^{km/n}`). A word with no
//! pinch left is trivial iff it has no `s`-letters and `t`-exponent 0.
//!
//! The endomorphism `f: s ↦ s, t ↦ t^2` of BS(2,3) is onto but not
//! injective; [`w_family`] builds the words `w_j`, which lie in the kernel of
//! `f^i` exactly when `j ≤ i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::presentations::FinitePresentation;
use crate::stream::{Pull, Source};
use crate::words::{Alphabet, GeneratorMap, Letter, ShortlexStream, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BsError {
    #[error("generator {0:?} is not s or t")]
    ForeignGenerator(String),
    #[error("BS parameters must be at least 1 (got m={m}, n={n})")]
    BadParams { m: u64, n: u64 },
    #[error("t-exponent {0} too large to expand into letters")]
    ExponentTooLarge(BigInt),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BSParams {
    m: u64,
    n: u64,
}

impl BSParams {
    pub const BS23: BSParams = BSParams { m: 2, n: 3 };

    pub fn new(m: u64, n: u64) -> Result<Self, BsError> {
        if m == 0 || n == 0 {
            return Err(BsError::BadParams { m, n });
        }
        Ok(BSParams { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `⟨s, t | s^-1 t^m s t^-n⟩`.
    pub fn presentation(&self) -> FinitePresentation {
        let a = bs_alphabet();
        let s = Word::generator(&a, 0);
        let t = Word::generator(&a, 1);
        let rel = s.inverse().mul(&t.pow(self.m as i64)).mul(&s).mul(&t.pow(-(self.n as i64)));
        FinitePresentation::new(&a, vec![rel]).expect("relator over the BS alphabet")
    }
}

impl fmt::Display for BSParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BS({},{})", self.m, self.n)
    }
}

/// The alphabet `[s, t]`. Shared, so words built here compare cheaply.
pub fn bs_alphabet() -> Alphabet {
    static ALPHABET: std::sync::OnceLock<Alphabet> = std::sync::OnceLock::new();
    ALPHABET.get_or_init(|| Alphabet::new(["s", "t"]).expect("valid names")).clone()
}

/// `t^{a0} s^{e1} t^{a1} ... s^{ek} t^{ak}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SyllableWord {
    runs: Vec<BigInt>,
    signs: Vec<i8>,
}

impl SyllableWord {
    pub fn identity() -> Self {
        SyllableWord { runs: vec![BigInt::zero()], signs: Vec::new() }
    }

    /// `runs.len()` must be `signs.len() + 1`; zero runs between inverse
    /// `s`-letters are cancelled.
    pub fn new(runs: Vec<BigInt>, signs: Vec<i8>) -> Self {
        assert_eq!(runs.len(), signs.len() + 1, "syllable shape");
        assert!(signs.iter().all(|&e| e == 1 || e == -1), "s-signs are ±1");
        let mut out = SyllableWord { runs: vec![runs[0].clone()], signs: Vec::new() };
        for (e, a) in signs.into_iter().zip(runs.into_iter().skip(1)) {
            out.push_s(e, None);
            *out.runs.last_mut().unwrap() += a;
        }
        out
    }

    pub fn t_runs(&self) -> &[BigInt] {
        &self.runs
    }

    pub fn s_signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn s_count(&self) -> usize {
        self.signs.len()
    }

    /// Britton-trivial shape: no `s`, exponent 0.
    pub fn is_identity(&self) -> bool {
        self.signs.is_empty() && self.runs[0].is_zero()
    }

    /// Appends `s^e`. With `params`, cancels a pinch against the previous
    /// `s`-letter; without, only cancels `s^e t^0 s^-e`. Returns whether a
    /// cancellation happened.
    fn push_s(&mut self, e: i8, params: Option<BSParams>) -> bool {
        let cur = self.runs.last().unwrap();
        if let Some(&top) = self.signs.last() {
            if top == -e {
                let replaced = match params {
                    None => cur.is_zero().then(BigInt::zero),
                    Some(p) => {
                        // s^-1 t^k s with m | k, or s t^k s^-1 with n | k
                        let (div, mul) = if top == -1 { (p.m, p.n) } else { (p.n, p.m) };
                        let (q, r) = cur.div_rem(&BigInt::from(div));
                        r.is_zero().then(|| q * BigInt::from(mul))
                    }
                };
                if let Some(k) = replaced {
                    self.runs.pop();
                    self.signs.pop();
                    *self.runs.last_mut().unwrap() += k;
                    return true;
                }
            }
        }
        self.signs.push(e);
        self.runs.push(BigInt::zero());
        false
    }

    /// Multiplies every `t`-exponent by `factor`.
    pub fn scale_t(&self, factor: &BigInt) -> SyllableWord {
        SyllableWord::new(self.runs.iter().map(|a| a * factor).collect(), self.signs.clone())
    }
}

impl fmt::Display for SyllableWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}", self.runs[0])?;
        for (e, a) in self.signs.iter().zip(&self.runs[1..]) {
            write!(f, " s^{e} t^{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SyllableWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SyllableWord({self})")
    }
}

/// Index of `s` and `t` in the word's alphabet; any other name is foreign.
fn st_indices(a: &Alphabet) -> Result<(Option<usize>, Option<usize>), BsError> {
    if let Some(bad) = a.names().iter().find(|n| *n != "s" && *n != "t") {
        return Err(BsError::ForeignGenerator(bad.clone()));
    }
    Ok((a.index_of("s"), a.index_of("t")))
}

pub fn to_syllables(w: &Word) -> Result<SyllableWord, BsError> {
    let (s, _) = st_indices(w.alphabet())?;
    let mut out = SyllableWord::identity();
    for l in w.letters() {
        if Some(l.gen) == s {
            out.push_s(l.sign() as i8, None);
        } else {
            *out.runs.last_mut().unwrap() += l.sign();
        }
    }
    Ok(out)
}

/// Expands into a word over [`bs_alphabet`].
pub fn from_syllables(sw: &SyllableWord) -> Result<Word, BsError> {
    let a = bs_alphabet();
    let mut letters = Vec::new();
    let push_run = |letters: &mut Vec<Letter>, k: &BigInt| -> Result<(), BsError> {
        let n = k.abs().to_usize().filter(|&n| n <= 1 << 28).ok_or_else(|| BsError::ExponentTooLarge(k.clone()))?;
        letters.extend(std::iter::repeat_n(Letter { gen: 1, inv: k.is_negative() }, n));
        Ok(())
    };
    push_run(&mut letters, &sw.runs[0])?;
    for (e, k) in sw.signs.iter().zip(&sw.runs[1..]) {
        letters.push(Letter { gen: 0, inv: *e < 0 });
        push_run(&mut letters, k)?;
    }
    Ok(Word::from_letters(&a, letters).expect("letters in range"))
}

/// Britton reduction of syllable form, leftmost pinch first. Returns the
/// reduced form and the number of pinches rewritten.
pub fn britton_reduce_syllables(p: BSParams, sw: &SyllableWord) -> (SyllableWord, usize) {
    let mut out = SyllableWord { runs: vec![sw.runs[0].clone()], signs: Vec::new() };
    let mut pinches = 0;
    for (e, a) in sw.signs.iter().zip(&sw.runs[1..]) {
        if out.push_s(*e, Some(p)) {
            pinches += 1;
        }
        *out.runs.last_mut().unwrap() += a;
    }
    (out, pinches)
}

pub fn britton_reduce(p: BSParams, w: &Word) -> Result<SyllableWord, BsError> {
    Ok(britton_reduce_syllables(p, &to_syllables(w)?).0)
}

pub fn bs_is_trivial(p: BSParams, w: &Word) -> Result<bool, BsError> {
    Ok(britton_reduce(p, w)?.is_identity())
}

pub fn bs_equal(p: BSParams, u: &Word, v: &Word) -> Result<bool, BsError> {
    let uv = to_syllables(u)?;
    let vv = to_syllables(v)?;
    // u v^-1 in syllable form
    let mut runs = uv.runs.clone();
    let mut signs = uv.signs.clone();
    let inv_runs: Vec<BigInt> = vv.runs.iter().rev().map(|a| -a).collect();
    let inv_signs: Vec<i8> = vv.signs.iter().rev().map(|e| -e).collect();
    *runs.last_mut().unwrap() += &inv_runs[0];
    runs.extend(inv_runs[1..].iter().cloned());
    signs.extend(inv_signs);
    let (r, _) = britton_reduce_syllables(p, &SyllableWord::new(runs, signs));
    Ok(r.is_identity())
}

/// `f^i` on syllable form: every `t`-run scaled by `2^i`.
pub fn apply_f_syllables(sw: &SyllableWord, i: u32) -> SyllableWord {
    sw.scale_t(&(BigInt::one() << i))
}

/// `i`-fold substitution `s ↦ s, t ↦ t^2`; `i = 0` is the identity.
pub fn apply_f(w: &Word, i: u32) -> Result<Word, BsError> {
    let (s, t) = st_indices(w.alphabet())?;
    let Some(t) = t else { return Ok(w.clone()) };
    let mut letters = Vec::new();
    for l in w.letters() {
        let copies = if l.gen == t { 1usize << i } else { 1 };
        debug_assert!(l.gen == t || Some(l.gen) == s);
        letters.extend(std::iter::repeat_n(*l, copies));
    }
    Ok(Word::from_letters(w.alphabet(), letters).expect("letters in range"))
}

/// Is `w` in the kernel of `f^i` on BS(2,3)?
pub fn in_kernel(w: &Word, i: u32) -> Result<bool, BsError> {
    let sw = apply_f_syllables(&to_syllables(w)?, i);
    Ok(britton_reduce_syllables(BSParams::BS23, &sw).0.is_identity())
}

/// `{s ↦ s, t ↦ t^2}` as a map on [`bs_alphabet`].
pub fn f_map() -> GeneratorMap {
    let a = bs_alphabet();
    GeneratorMap::parse(&a, &a, "s=s,t=t^2").expect("valid map")
}

/// `{s ↦ s, t ↦ [s^-1, t]}`, the substitution generating the w-family.
pub fn g_map() -> GeneratorMap {
    let a = bs_alphabet();
    GeneratorMap::parse(&a, &a, "s=s,t=s^-1 t s t^-1").expect("valid map")
}

/// `w_0 = ∅`, `w_1 = [s^-1 t s, t]`, `w_{i+1} = w_i(s, [s^-1, t])`.
pub fn w_family(i: usize) -> Word {
    let a = bs_alphabet();
    if i == 0 {
        return Word::identity(&a);
    }
    let s = Word::generator(&a, 0);
    let t = Word::generator(&a, 1);
    let mut w = t.conjugate_by(&s.inverse()).unwrap().commutator(&t).unwrap();
    let g = g_map();
    for _ in 1..i {
        w = g.apply(&w).expect("w-family words are over {s,t}");
    }
    w
}

/// Preimages under `f` of the generators, witnessing that `f` is onto:
/// `f(s) = s` and `f(s^-1 t s t^-1) = s^-1 t^2 s t^-2 = t` in BS(2,3).
pub fn f_preimage_witnesses() -> GeneratorMap {
    g_map()
}

/// Reduced words in the kernel of `f^i` on BS(2,3), in shortlex order.
#[derive(Clone, Debug)]
pub struct KernelStream {
    iterate: u32,
    words: ShortlexStream,
    examined: u64,
}

impl KernelStream {
    pub fn iterate(&self) -> u32 {
        self.iterate
    }

    /// Candidates tested so far.
    pub fn examined(&self) -> u64 {
        self.examined
    }

    /// Membership test used as the stream's filter.
    pub fn admits(&self, w: &Word) -> bool {
        in_kernel(w, self.iterate).unwrap_or(false)
    }
}

pub fn kernel_stream(i: u32) -> KernelStream {
    KernelStream { iterate: i, words: ShortlexStream::new(&bs_alphabet()), examined: 0 }
}

/// One candidate per pull: the candidate, or `Stalled` if it is not in the kernel.
impl Source<Word> for KernelStream {
    fn pull(&mut self) -> Pull<Word> {
        let w = self.words.next().expect("shortlex stream is infinite");
        self.examined += 1;
        if self.admits(&w) {
            Pull::Item(w)
        } else {
            Pull::Stalled
        }
    }
}

impl Iterator for KernelStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if let Pull::Item(w) = self.pull() {
                return Some(w);
            }
        }
    }
}

/// Britton-reduction oracle for the word problem of BS(m,n).
#[derive(Debug, Clone, Copy)]
pub struct BsOracle(pub BSParams);

impl crate::search::WordOracle for BsOracle {
    fn is_trivial(&self, w: &Word) -> bool {
        bs_is_trivial(self.0, w).unwrap_or(false)
    }
}
