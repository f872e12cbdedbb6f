//! Fair enumeration of the trivial words of a presentation.
//!
//! Every trivial word is a product `Π c_i r_i^{e_i} c_i^-1` with `r_i` a
//! relator or the empty word. [`TrivialWordStream`] enumerates all such
//! certificates, each exactly once, and emits the value of each.
//!
//! Order. Each relator carries a *cost*: its index for finite
//! presentations. The size of a certificate is
//! `factor count + Σ |c_i| + max cost(r_i)`, with the empty relator costing
//! 0. Certificates are emitted by increasing size (a *stage*); within a
//! stage by factor count, then by the max relator cost, then by the tuple of
//! conjugator lengths in lexicographic order, then lexicographically over
//! the factors, each factor ordered by (conjugator in shortlex, relator slot
//! with the empty relator first, sign `+1` before `-1`). Stage 0 holds only
//! the empty product.
//!
//! Recursive presentations are pulled [`PULLS_PER_STAGE`] times at the start
//! of every stage. A relator arriving at stage `S` with index `j` costs
//! `max(j, S)`, so no certificate of an earlier stage can need it and the
//! enumeration stays complete.

use std::collections::HashSet;

use super::certificate::push_factor;
use super::{Factor, FinitePresentation, RecursivePresentation, TrivialityCertificate};
use crate::stream::{Pull, Source};
use crate::words::{reduced_words_of_length, Alphabet, Letter, Word};

/// Pulls granted to a recursive relator source per stage.
pub const PULLS_PER_STAGE: usize = 16;

struct Block {
    factors: usize,
    max_cost: usize,
    lengths: Vec<usize>,
    slots: usize,
    conj: Vec<usize>,
    slot: Vec<usize>,
    negative: Vec<bool>,
}

pub struct TrivialWordStream {
    alphabet: Alphabet,
    relators: Vec<Word>,
    costs: Vec<usize>,
    source: Option<Box<dyn Source<Word> + Send>>,
    conj_cache: Vec<Vec<Word>>,
    stage: usize,
    block: Option<Block>,
    emitted: u64,
    scratch: Vec<Letter>,
}

impl TrivialWordStream {
    pub fn finite(p: &FinitePresentation) -> Self {
        Self::build(p.alphabet().clone(), p.relators().to_vec(), None)
    }

    pub fn recursive(p: RecursivePresentation) -> Self {
        let (alphabet, source) = p.into_parts();
        Self::build(alphabet, Vec::new(), Some(source))
    }

    fn build(alphabet: Alphabet, relators: Vec<Word>, source: Option<Box<dyn Source<Word> + Send>>) -> Self {
        let costs = (0..relators.len()).collect();
        TrivialWordStream {
            alphabet,
            relators,
            costs,
            source,
            conj_cache: Vec::new(),
            stage: 0,
            block: None,
            emitted: 0,
            scratch: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Relators known so far; certificate indices refer to this list.
    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    fn conjugators(&mut self, len: usize) -> &[Word] {
        while self.conj_cache.len() <= len {
            let l = self.conj_cache.len();
            self.conj_cache.push(reduced_words_of_length(&self.alphabet, l));
        }
        &self.conj_cache[len]
    }

    fn slot_cost(&self, slot: usize) -> usize {
        if slot == 0 {
            0
        } else {
            self.costs[slot - 1]
        }
    }

    fn pull_relators(&mut self) {
        let Some(source) = self.source.as_mut() else { return };
        for _ in 0..PULLS_PER_STAGE {
            match source.pull() {
                Pull::Item(r) => {
                    let Ok(r) = r.translate(&self.alphabet) else { continue };
                    let index = self.relators.len();
                    self.relators.push(r);
                    self.costs.push(index.max(self.stage));
                }
                Pull::Stalled => {}
                Pull::Exhausted => {
                    self.source = None;
                    return;
                }
            }
        }
    }

    fn slots_up_to(&self, max_cost: usize) -> usize {
        1 + self.costs.iter().take_while(|&&c| c <= max_cost).count()
    }

    fn has_cost(&self, cost: usize) -> bool {
        cost == 0 || self.costs.contains(&cost)
    }

    fn open_block(&mut self, factors: usize, max_cost: usize, lengths: Vec<usize>) -> Block {
        for &l in &lengths {
            self.conjugators(l);
        }
        Block {
            factors,
            max_cost,
            slots: self.slots_up_to(max_cost),
            conj: vec![0; factors],
            slot: vec![0; factors],
            negative: vec![false; factors],
            lengths,
        }
    }

    /// First block of the stage at or after `(factors, max_cost)`.
    fn first_block_from(&mut self, mut factors: usize, mut max_cost: usize) -> Option<Block> {
        let s = self.stage;
        while factors <= s {
            while factors + max_cost <= s {
                if self.has_cost(max_cost) {
                    let mut lengths = vec![0; factors];
                    lengths[factors - 1] = s - factors - max_cost;
                    return Some(self.open_block(factors, max_cost, lengths));
                }
                max_cost += 1;
            }
            factors += 1;
            max_cost = 0;
        }
        None
    }

    fn next_block(&mut self, b: &Block) -> Option<Block> {
        let mut lengths = b.lengths.clone();
        if next_composition(&mut lengths) {
            return Some(self.open_block(b.factors, b.max_cost, lengths));
        }
        self.first_block_from(b.factors, b.max_cost + 1)
    }

    fn block_valid(&self, b: &Block) -> bool {
        b.slot.iter().map(|&s| self.slot_cost(s)).max() == Some(b.max_cost)
    }

    /// Mixed-radix increment; factor 0 most significant.
    fn increment(&self, b: &mut Block) -> bool {
        for f in (0..b.factors).rev() {
            if !b.negative[f] {
                b.negative[f] = true;
                return true;
            }
            b.negative[f] = false;
            if b.slot[f] + 1 < b.slots {
                b.slot[f] += 1;
                return true;
            }
            b.slot[f] = 0;
            if b.conj[f] + 1 < self.conj_cache[b.lengths[f]].len() {
                b.conj[f] += 1;
                return true;
            }
            b.conj[f] = 0;
        }
        false
    }

    /// Moves the cursor to the next certificate. `fresh` means the block was
    /// just opened and its first position has not been tried yet.
    fn advance(&mut self) {
        let mut block = self.block.take();
        let mut fresh = false;
        loop {
            match block.as_mut() {
                None => {
                    self.stage += 1;
                    self.pull_relators();
                    block = self.first_block_from(1, 0);
                    fresh = true;
                }
                Some(b) => {
                    let moved = if fresh { true } else { self.increment(b) };
                    fresh = false;
                    if moved {
                        if self.block_valid(b) {
                            break;
                        }
                    } else {
                        let done = block.take().unwrap();
                        block = self.next_block(&done);
                        fresh = true;
                        if block.is_none() {
                            continue;
                        }
                    }
                }
            }
        }
        self.block = block;
    }

    /// Advances and returns the next trivial word. Its certificate is
    /// available from [`Self::current_certificate`] until the next call.
    pub fn next_word(&mut self) -> Word {
        if self.emitted > 0 {
            self.advance();
        } else if self.source.is_some() {
            // stage 0 still gets its pulls so costs are index-based for
            // relators that are available up front
            self.pull_relators();
        }
        self.emitted += 1;
        let mut out = std::mem::take(&mut self.scratch);
        out.clear();
        if let Some(b) = &self.block {
            for f in 0..b.factors {
                if b.slot[f] == 0 {
                    continue;
                }
                let conj = self.conj_cache[b.lengths[f]][b.conj[f]].letters();
                push_factor(&mut out, conj, self.relators[b.slot[f] - 1].letters(), b.negative[f]);
            }
        }
        let w = Word::from_reduced_unchecked(&self.alphabet, out.clone());
        self.scratch = out;
        w
    }

    pub fn current_certificate(&self) -> TrivialityCertificate {
        let Some(b) = &self.block else { return TrivialityCertificate::empty() };
        let factors = (0..b.factors)
            .map(|f| Factor {
                conj: self.conj_cache[b.lengths[f]][b.conj[f]].clone(),
                rel: if b.slot[f] == 0 { None } else { Some(b.slot[f] - 1) },
                sign: if b.negative[f] { -1 } else { 1 },
            })
            .collect();
        TrivialityCertificate { factors }
    }

    /// Drops repeated words, keeping the first certificate for each.
    pub fn dedup(self) -> Dedup {
        Dedup { inner: self, seen: HashSet::new() }
    }
}

impl Iterator for TrivialWordStream {
    type Item = (Word, TrivialityCertificate);

    fn next(&mut self) -> Option<Self::Item> {
        let w = self.next_word();
        Some((w, self.current_certificate()))
    }
}

/// Next composition (fixed sum, fixed part count) in lexicographic order.
fn next_composition(parts: &mut [usize]) -> bool {
    let n = parts.len();
    let mut rest = 0;
    for i in (0..n.saturating_sub(1)).rev() {
        rest += parts[i + 1];
        if rest > 0 {
            parts[i] += 1;
            for p in &mut parts[i + 1..] {
                *p = 0;
            }
            parts[n - 1] = rest - 1;
            return true;
        }
    }
    false
}

/// Deduplicating wrapper. Each pull of the inner stream still advances it,
/// so repeated words are skipped inside `next`.
pub struct Dedup {
    inner: TrivialWordStream,
    seen: HashSet<Word>,
}

impl Dedup {
    pub fn inner(&self) -> &TrivialWordStream {
        &self.inner
    }
}

impl Iterator for Dedup {
    type Item = (Word, TrivialityCertificate);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let w = self.inner.next_word();
            if self.seen.insert(w.clone()) {
                return Some((w, self.inner.current_certificate()));
            }
        }
    }
}

pub fn trivial_word_stream(p: &FinitePresentation) -> TrivialWordStream {
    TrivialWordStream::finite(p)
}

/// Outcome of a budgeted search for a triviality certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Semidecision {
    /// `steps` is the 1-based position of the certificate in the stream.
    ProvedTrivial {
        certificate: TrivialityCertificate,
        steps: u64,
    },
    Exhausted {
        steps: u64,
    },
}

impl Semidecision {
    pub fn is_proved(&self) -> bool {
        matches!(self, Semidecision::ProvedTrivial { .. })
    }
}

/// Scans the first `budget` emissions of the trivial-word stream for `w`.
pub fn semidecide_trivial(p: &FinitePresentation, w: &Word, budget: u64) -> Semidecision {
    let mut stream = TrivialWordStream::finite(p);
    semidecide_in(&mut stream, w, budget)
}

/// As [`semidecide_trivial`], continuing an existing stream.
pub fn semidecide_in(stream: &mut TrivialWordStream, w: &Word, budget: u64) -> Semidecision {
    let Ok(target) = w.translate(stream.alphabet()) else {
        return Semidecision::Exhausted { steps: 0 };
    };
    for step in 1..=budget {
        if stream.next_word() == target {
            return Semidecision::ProvedTrivial { certificate: stream.current_certificate(), steps: step };
        }
    }
    Semidecision::Exhausted { steps: budget }
}
