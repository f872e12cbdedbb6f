//! Cantor pairing, stream compression, the quotient-tower presentations
//! `P_W = ⟨s, t | s^-1 t^2 s t^-3, ker f^{i+1} for i ∈ compress(W)⟩`, and
//! recovery of `|W|` from a word-problem oracle via the w-family.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Roots;
use thiserror::Error;

use crate::bs::{bs_alphabet, in_kernel, kernel_stream, w_family, BSParams, KernelStream};
use crate::presentations::RecursivePresentation;
use crate::search::WordOracle;
use crate::stream::{FiniteSource, Pull, Source};
use crate::words::Word;

/// `½(x+y)(x+y+1) + y`, or `None` on overflow.
pub fn cantor_pair(x: u64, y: u64) -> Option<u64> {
    let s = u128::from(x) + u128::from(y);
    u64::try_from(s.checked_mul(s + 1)? / 2 + u128::from(y)).ok()
}

pub fn cantor_unpair(z: u64) -> (u64, u64) {
    let z = u128::from(z);
    let w = ((8 * z + 1).sqrt() - 1) / 2;
    let y = z - w * (w + 1) / 2;
    ((w - y) as u64, y as u64)
}

/// `⟨a, b, c⟩ = ⟨⟨a, b⟩, c⟩`, folding left. A single element codes itself.
pub fn cantor_tuple(xs: &[u64]) -> Option<u64> {
    let (&first, rest) = xs.split_first()?;
    rest.iter().try_fold(first, |acc, &x| cantor_pair(acc, x))
}

/// Inverse of [`cantor_tuple`] for tuples of length `n ≥ 1`.
pub fn cantor_untuple(z: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0; n.max(1)];
    let mut acc = z;
    for slot in out.iter_mut().skip(1).rev() {
        let (a, b) = cantor_unpair(acc);
        *slot = b;
        acc = a;
    }
    out[0] = acc;
    out
}

/// A possibly infinite, possibly repeating stream of naturals.
pub trait NatStream: Source<u64> {}

impl<S: Source<u64> + ?Sized> NatStream for S {}

/// Emits `0, 1, 2, ...`, one new value for each distinct input value;
/// repeated inputs produce `Stalled`.
pub struct CompressStream<S> {
    input: S,
    seen: HashSet<u64>,
}

impl<S: Source<u64>> CompressStream<S> {
    /// Distinct inputs consumed so far, which is also the next output.
    pub fn distinct(&self) -> u64 {
        self.seen.len() as u64
    }
}

impl<S: Source<u64>> Source<u64> for CompressStream<S> {
    fn pull(&mut self) -> Pull<u64> {
        match self.input.pull() {
            Pull::Item(x) => {
                let next = self.seen.len() as u64;
                if self.seen.insert(x) {
                    Pull::Item(next)
                } else {
                    Pull::Stalled
                }
            }
            Pull::Stalled => Pull::Stalled,
            Pull::Exhausted => Pull::Exhausted,
        }
    }
}

pub fn compress_stream<S: Source<u64>>(input: S) -> CompressStream<S> {
    CompressStream { input, seen: HashSet::new() }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid natural {0:?} in set")]
pub struct SetParseError(String);

/// A finite set of naturals, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExplicitFiniteSet(BTreeSet<u64>);

impl ExplicitFiniteSet {
    pub fn new<I: IntoIterator<Item = u64>>(items: I) -> Self {
        ExplicitFiniteSet(items.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    /// The elements in ascending order, then `Exhausted`.
    pub fn source(&self) -> FiniteSource<u64> {
        FiniteSource::new(self.iter().collect())
    }
}

impl FromStr for ExplicitFiniteSet {
    type Err = SetParseError;

    /// Comma-separated naturals; the empty string is the empty set.
    fn from_str(s: &str) -> Result<Self, SetParseError> {
        s.split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<u64>().map_err(|_| SetParseError(p.to_string())))
            .collect::<Result<BTreeSet<_>, _>>()
            .map(ExplicitFiniteSet)
    }
}

impl fmt::Display for ExplicitFiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Word problem of `BS(2,3) / ker f^k`: `w ↦ f^k(w) = e` in BS(2,3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TowerOracle(pub u32);

impl WordOracle for TowerOracle {
    fn is_trivial(&self, w: &Word) -> bool {
        in_kernel(w, self.0).unwrap_or(false)
    }
}

pub fn tower_oracle(k: u32) -> TowerOracle {
    TowerOracle(k)
}

/// Relator source of the tower presentation. Each pull advances the
/// compressed set stream once and then one kernel stream, round-robin.
pub struct TowerSource<S> {
    sent_bs: bool,
    indices: CompressStream<S>,
    indices_done: bool,
    kernels: Vec<KernelStream>,
    cursor: usize,
}

impl<S: Source<u64>> Source<Word> for TowerSource<S> {
    fn pull(&mut self) -> Pull<Word> {
        if !self.sent_bs {
            self.sent_bs = true;
            let rel = BSParams::BS23.presentation().relators()[0].clone();
            return Pull::Item(rel);
        }
        if !self.indices_done {
            match self.indices.pull() {
                Pull::Item(i) => self.kernels.push(kernel_stream(i as u32 + 1)),
                Pull::Stalled => {}
                Pull::Exhausted => self.indices_done = true,
            }
        }
        if self.kernels.is_empty() {
            return if self.indices_done { Pull::Exhausted } else { Pull::Stalled };
        }
        self.cursor %= self.kernels.len();
        let out = self.kernels[self.cursor].pull();
        self.cursor += 1;
        out
    }
}

pub fn tower_source<S: Source<u64>>(set: S) -> TowerSource<S> {
    TowerSource { sent_bs: false, indices: compress_stream(set), indices_done: false, kernels: Vec::new(), cursor: 0 }
}

/// The tower presentation for a finite set `W`; it presents a group
/// isomorphic to BS(2,3), with `ker f^{|W|}` among its relators.
pub fn quotient_tower_presentation(set: &ExplicitFiniteSet) -> RecursivePresentation {
    RecursivePresentation::new(&bs_alphabet(), tower_source(set.source()))
}

/// Largest `j ≤ k_max + 1` with `oracle(w_j)` trivial.
pub fn recover_cardinality<O: WordOracle + ?Sized>(oracle: &O, k_max: usize) -> usize {
    (0..=k_max + 1).filter(|&j| oracle.is_trivial(&w_family(j))).max().unwrap_or(0)
}

/// Compresses `set`, builds the tower oracle for the compressed size and
/// reads the size back off the w-family.
pub fn reduction_pipeline(set: &ExplicitFiniteSet, k_max: usize) -> usize {
    let mut compressed = compress_stream(set.source());
    let mut k = 0u32;
    loop {
        match compressed.pull() {
            Pull::Item(_) => k += 1,
            Pull::Stalled => {}
            Pull::Exhausted => break,
        }
    }
    recover_cardinality(&tower_oracle(k), k_max)
}
