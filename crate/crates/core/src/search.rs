//! Budgeted semi-decision procedures: homomorphism checking, isomorphism
//! search, subgroup presentation search, and the Hopfian lift.
//!
//! All searches are deterministic and run on a fixed schedule; a budget only
//! decides when the schedule is cut off. Raising a budget therefore never
//! changes a result that was already found, it can only turn `Exhausted`
//! into `Found`.
//!
//! Units: admitting one candidate map costs one candidate unit; one emission
//! of a trivial-word stream, or one oracle query in the subgroup search,
//! costs one stream unit.

use std::collections::HashMap;
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentations::{FinitePresentation, TrivialWordStream, TrivialityCertificate};
use crate::words::{reduced_words_of_length, substitute, Alphabet, GeneratorMap, ShortlexStream, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("map goes {got}, expected {expected}")]
    WrongMapShape { expected: String, got: String },
    #[error("subgroup generators must be a nonempty list over one alphabet")]
    BadGenerators,
}

/// A total decision procedure for the word problem of some group.
pub trait WordOracle {
    fn is_trivial(&self, w: &Word) -> bool;
}

impl<F: Fn(&Word) -> bool> WordOracle for F {
    fn is_trivial(&self, w: &Word) -> bool {
        self(w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_candidates: u64,
    pub max_stream_steps: u64,
}

impl SearchBudget {
    pub fn new(max_candidates: u64, max_stream_steps: u64) -> Self {
        SearchBudget { max_candidates, max_stream_steps }
    }

    /// Same cap for both counters.
    pub fn units(n: u64) -> Self {
        SearchBudget { max_candidates: n, max_stream_steps: n }
    }
}

/// Running totals against a [`SearchBudget`].
#[derive(Debug, Clone)]
pub struct Meter {
    budget: SearchBudget,
    candidates: u64,
    steps: u64,
}

impl Meter {
    pub fn new(budget: SearchBudget) -> Self {
        Meter { budget, candidates: 0, steps: 0 }
    }

    fn take_candidate(&mut self) -> bool {
        if self.candidates < self.budget.max_candidates {
            self.candidates += 1;
            true
        } else {
            false
        }
    }

    fn take_step(&mut self) -> bool {
        if self.steps < self.budget.max_stream_steps {
            self.steps += 1;
            true
        } else {
            false
        }
    }

    pub fn candidates_used(&self) -> u64 {
        self.candidates
    }

    pub fn steps_used(&self) -> u64 {
        self.steps
    }
}

fn check_map(phi: &GeneratorMap, from: &Alphabet, to: &Alphabet) -> Result<(), SearchError> {
    if phi.domain().same_as(from) && phi.codomain().same_as(to) {
        Ok(())
    } else {
        Err(SearchError::WrongMapShape {
            expected: format!("[{from}] -> [{to}]"),
            got: format!("[{}] -> [{}]", phi.domain(), phi.codomain()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomCheck {
    /// One certificate per relator of the domain, in relator order.
    Proved {
        certificates: Vec<TrivialityCertificate>,
        steps: u64,
    },
    Exhausted {
        steps: u64,
    },
}

impl HomCheck {
    pub fn is_proved(&self) -> bool {
        matches!(self, HomCheck::Proved { .. })
    }
}

/// Looks for a triviality certificate in `q` for the image of every relator
/// of `p`, sharing one stream of `q`'s trivial words among all of them.
pub fn semidecide_homomorphism(
    phi: &GeneratorMap,
    p: &FinitePresentation,
    q: &FinitePresentation,
    budget: u64,
) -> Result<HomCheck, SearchError> {
    check_map(phi, p.alphabet(), q.alphabet())?;
    let targets = p.relators().iter().map(|r| substitute(r, phi)).collect::<Result<Vec<_>, _>>()?;
    let mut found: Vec<Option<TrivialityCertificate>> = vec![None; targets.len()];
    let mut open = targets.len();
    let mut stream = TrivialWordStream::finite(q);
    let mut steps = 0;
    while open > 0 {
        if steps == budget {
            return Ok(HomCheck::Exhausted { steps });
        }
        steps += 1;
        let w = stream.next_word();
        for (i, t) in targets.iter().enumerate() {
            if found[i].is_none() && *t == w {
                found[i] = Some(stream.current_certificate());
                open -= 1;
            }
        }
    }
    Ok(HomCheck::Proved { certificates: found.into_iter().map(Option::unwrap).collect(), steps })
}

/// Decides whether `phi` extends to a homomorphism, given a word-problem
/// oracle for the target group.
pub fn decide_homomorphism<O: WordOracle + ?Sized>(
    phi: &GeneratorMap,
    p: &FinitePresentation,
    oracle_q: &O,
) -> Result<bool, SearchError> {
    if !phi.domain().same_as(p.alphabet()) {
        return Err(WordError::AlphabetMismatch.into());
    }
    for r in p.relators() {
        if !oracle_q.is_trivial(&substitute(r, phi)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Mutually inverse homomorphisms between two presented groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub forward: GeneratorMap,
    pub backward: GeneratorMap,
}

#[derive(Serialize, Deserialize)]
struct IsoWitnessRecord {
    forward: String,
    backward: String,
    domain: Vec<String>,
    codomain: Vec<String>,
}

impl IsoWitness {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(IsoWitnessRecord {
            forward: self.forward.to_string(),
            backward: self.backward.to_string(),
            domain: self.forward.domain().names().to_vec(),
            codomain: self.forward.codomain().names().to_vec(),
        })
        .expect("witness serializes")
    }

    pub fn from_json(p: &Alphabet, q: &Alphabet, value: &serde_json::Value) -> Result<Self, SearchError> {
        let rec: IsoWitnessRecord =
            serde_json::from_value(value.clone()).map_err(|e| WordError::Syntax { pos: 0, msg: e.to_string() })?;
        Ok(IsoWitness {
            forward: GeneratorMap::parse(p, q, &rec.forward)?,
            backward: GeneratorMap::parse(q, p, &rec.backward)?,
        })
    }

    /// The words whose triviality makes this a witness: relator images and
    /// the two round trips on generators, tagged with the presentation they
    /// must be trivial in (`false` = `p`, `true` = `q`).
    pub fn obligations(
        &self,
        p: &FinitePresentation,
        q: &FinitePresentation,
    ) -> Result<Vec<(bool, Word)>, SearchError> {
        check_map(&self.forward, p.alphabet(), q.alphabet())?;
        check_map(&self.backward, q.alphabet(), p.alphabet())?;
        let mut out = Vec::new();
        for r in p.relators() {
            out.push((true, substitute(r, &self.forward)?));
        }
        for r in q.relators() {
            out.push((false, substitute(r, &self.backward)?));
        }
        for g in 0..p.generator_count() {
            let x = Word::generator(p.alphabet(), g);
            out.push((false, self.backward.apply(self.forward.image(g))?.mul(&x.inverse())));
        }
        for g in 0..q.generator_count() {
            let y = Word::generator(q.alphabet(), g);
            out.push((true, self.forward.apply(self.backward.image(g))?.mul(&y.inverse())));
        }
        Ok(out)
    }

    /// Re-runs every check from scratch with fresh trivial-word streams.
    pub fn verify(&self, p: &FinitePresentation, q: &FinitePresentation, budget_per_check: u64) -> bool {
        let Ok(obligations) = self.obligations(p, q) else { return false };
        obligations.iter().all(|(in_q, w)| {
            let target = if *in_q { q } else { p };
            crate::presentations::semidecide_trivial(target, w, budget_per_check).is_proved()
        })
    }

    /// Checks with word-problem oracles instead of enumeration.
    pub fn verify_with<A: WordOracle + ?Sized, B: WordOracle + ?Sized>(
        &self,
        p: &FinitePresentation,
        q: &FinitePresentation,
        oracle_p: &A,
        oracle_q: &B,
    ) -> bool {
        let Ok(obligations) = self.obligations(p, q) else { return false };
        obligations.iter().all(|(in_q, w)| if *in_q { oracle_q.is_trivial(w) } else { oracle_p.is_trivial(w) })
    }
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "forward {{{}}} backward {{{}}}", self.forward, self.backward)
    }
}

/// A found witness with the certificates of all its obligations, in the
/// order of [`IsoWitness::obligations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoFound {
    pub witness: IsoWitness,
    pub certificates: Vec<TrivialityCertificate>,
}

impl IsoFound {
    /// Checks each certificate against its obligation.
    pub fn verify_certificates(&self, p: &FinitePresentation, q: &FinitePresentation) -> bool {
        let Ok(obligations) = self.witness.obligations(p, q) else { return false };
        obligations.len() == self.certificates.len()
            && obligations.iter().zip(&self.certificates).all(|((in_q, w), c)| {
                let target = if *in_q { q } else { p };
                c.proves(target.relators(), w)
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Found(IsoFound),
    Exhausted,
}

impl IsoOutcome {
    pub fn found(&self) -> Option<&IsoFound> {
        match self {
            IsoOutcome::Found(f) => Some(f),
            IsoOutcome::Exhausted => None,
        }
    }
}

/// All set maps `domain → codomain*`, ordered by total image length, then by
/// the tuple of image lengths (lexicographic), then lexicographically over
/// the images in shortlex order.
pub struct MapStream {
    domain: Alphabet,
    codomain: Alphabet,
    cache: Vec<Vec<Word>>,
    lengths: Vec<usize>,
    index: Vec<usize>,
    started: bool,
}

impl MapStream {
    pub fn new(domain: &Alphabet, codomain: &Alphabet) -> Self {
        MapStream {
            domain: domain.clone(),
            codomain: codomain.clone(),
            cache: Vec::new(),
            lengths: vec![0; domain.len()],
            index: vec![0; domain.len()],
            started: false,
        }
    }

    fn words(&mut self, len: usize) -> &[Word] {
        while self.cache.len() <= len {
            let l = self.cache.len();
            self.cache.push(reduced_words_of_length(&self.codomain, l));
        }
        &self.cache[len]
    }

    fn advance(&mut self) {
        for f in (0..self.index.len()).rev() {
            let len = self.lengths[f];
            if self.index[f] + 1 < self.words(len).len() {
                self.index[f] += 1;
                return;
            }
            self.index[f] = 0;
        }
        self.index.iter_mut().for_each(|i| *i = 0);
        if !next_composition(&mut self.lengths) {
            let total: usize = self.lengths.iter().sum::<usize>() + 1;
            self.lengths.iter_mut().for_each(|l| *l = 0);
            *self.lengths.last_mut().unwrap() = total;
        }
    }
}

impl Iterator for MapStream {
    type Item = GeneratorMap;

    fn next(&mut self) -> Option<GeneratorMap> {
        if self.started {
            self.advance();
        }
        self.started = true;
        let lengths = self.lengths.clone();
        let images = lengths.iter().zip(self.index.clone()).map(|(&l, i)| self.words(l)[i].clone()).collect();
        Some(GeneratorMap::new(&self.domain, &self.codomain, images).expect("images over codomain"))
    }
}

fn next_composition(parts: &mut [usize]) -> bool {
    let n = parts.len();
    let mut rest = 0;
    for i in (0..n.saturating_sub(1)).rev() {
        rest += parts[i + 1];
        if rest > 0 {
            parts[i] += 1;
            parts[i + 1..].iter_mut().for_each(|p| *p = 0);
            parts[n - 1] = rest - 1;
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Forward(usize),
    Backward(usize),
    Pair(usize),
}

struct Candidate {
    map: GeneratorMap,
    open: usize,
}

struct PairState {
    forward: usize,
    backward: usize,
    open: usize,
}

/// One side of an isomorphism search: a trivial-word stream, a fingerprint
/// of everything it has emitted, and the words still waited on.
struct Side {
    presentation: FinitePresentation,
    stream: TrivialWordStream,
    seen: HashMap<u128, u64>,
    pending: HashMap<Word, Vec<Target>>,
}

fn fingerprint(w: &Word) -> u128 {
    let half = |salt: u8| {
        let mut h = DefaultHasher::new();
        salt.hash(&mut h);
        w.hash(&mut h);
        h.finish()
    };
    u128::from(half(0)) << 64 | u128::from(half(1))
}

impl Side {
    fn new(p: &FinitePresentation) -> Self {
        Side {
            presentation: p.clone(),
            stream: TrivialWordStream::finite(p),
            seen: HashMap::new(),
            pending: HashMap::new(),
        }
    }

    /// Registers `w`; true if already known trivial.
    fn wait_for(&mut self, w: Word, t: Target) -> bool {
        if self.seen.contains_key(&fingerprint(&w)) {
            true
        } else {
            self.pending.entry(w).or_default().push(t);
            false
        }
    }

    fn step(&mut self) -> Vec<Target> {
        let index = self.stream.emitted();
        let w = self.stream.next_word();
        let key = fingerprint(&w);
        if self.seen.contains_key(&key) {
            return Vec::new();
        }
        self.seen.insert(key, index);
        self.pending.remove(&w).unwrap_or_default()
    }

    /// Certificates for `words`, all previously emitted, recovered by
    /// replaying the stream.
    fn certificates(&self, words: &[Word]) -> Option<Vec<TrivialityCertificate>> {
        let indices: Vec<u64> = words.iter().map(|w| self.seen.get(&fingerprint(w)).copied()).collect::<Option<_>>()?;
        let mut wanted: Vec<u64> = indices.clone();
        wanted.sort_unstable();
        wanted.dedup();
        let mut replay = TrivialWordStream::finite(&self.presentation);
        let mut found = HashMap::new();
        for &i in &wanted {
            while replay.emitted() < i {
                replay.next_word();
            }
            replay.next_word();
            found.insert(i, replay.current_certificate());
        }
        words
            .iter()
            .zip(&indices)
            .map(|(w, i)| {
                let cert = found[i].clone();
                cert.proves(self.presentation.relators(), w).then_some(cert)
            })
            .collect()
    }
}

/// Resumable search for an isomorphism between two finite presentations.
///
/// Round `r` (from zero) admits the next candidate `p → q` map and the next
/// `q → p` map, then advances the trivial-word streams of `p` and `q` by
/// `r + 1` emissions each. Candidates proved to be homomorphisms are paired
/// with every proved homomorphism in the other direction, and each pair
/// waits for its round-trip words to show up as trivial.
pub struct IsoSearch {
    p: Side,
    q: Side,
    forward_maps: MapStream,
    backward_maps: MapStream,
    forwards: Vec<Candidate>,
    backwards: Vec<Candidate>,
    hom_forwards: Vec<usize>,
    hom_backwards: Vec<usize>,
    pairs: Vec<PairState>,
    completed: Vec<usize>,
    rounds: u64,
}

impl IsoSearch {
    pub fn new(p: &FinitePresentation, q: &FinitePresentation) -> Self {
        IsoSearch {
            p: Side::new(p),
            q: Side::new(q),
            forward_maps: MapStream::new(p.alphabet(), q.alphabet()),
            backward_maps: MapStream::new(q.alphabet(), p.alphabet()),
            forwards: Vec::new(),
            backwards: Vec::new(),
            hom_forwards: Vec::new(),
            hom_backwards: Vec::new(),
            pairs: Vec::new(),
            completed: Vec::new(),
            rounds: 0,
        }
    }

    pub fn rounds(&self) -> u64 {
        self.rounds
    }

    fn resolve(&mut self, mut queue: Vec<Target>) {
        while let Some(t) = queue.pop() {
            match t {
                Target::Forward(i) => {
                    self.forwards[i].open -= 1;
                    if self.forwards[i].open == 0 {
                        self.hom_forwards.push(i);
                        for j in self.hom_backwards.clone() {
                            self.open_pair(i, j, &mut queue);
                        }
                    }
                }
                Target::Backward(j) => {
                    self.backwards[j].open -= 1;
                    if self.backwards[j].open == 0 {
                        self.hom_backwards.push(j);
                        for i in self.hom_forwards.clone() {
                            self.open_pair(i, j, &mut queue);
                        }
                    }
                }
                Target::Pair(k) => {
                    self.pairs[k].open -= 1;
                    if self.pairs[k].open == 0 {
                        self.completed.push(k);
                    }
                }
            }
        }
    }

    fn open_pair(&mut self, i: usize, j: usize, queue: &mut Vec<Target>) {
        let k = self.pairs.len();
        let f = self.forwards[i].map.clone();
        let b = self.backwards[j].map.clone();
        let np = self.p.presentation.generator_count();
        let nq = self.q.presentation.generator_count();
        self.pairs.push(PairState { forward: i, backward: j, open: np + nq });
        for g in 0..np {
            let x = Word::generator(self.p.presentation.alphabet(), g);
            let w = b.apply(f.image(g)).expect("composable maps").mul(&x.inverse());
            if self.p.wait_for(w, Target::Pair(k)) {
                queue.push(Target::Pair(k));
            }
        }
        for g in 0..nq {
            let y = Word::generator(self.q.presentation.alphabet(), g);
            let w = f.apply(b.image(g)).expect("composable maps").mul(&y.inverse());
            if self.q.wait_for(w, Target::Pair(k)) {
                queue.push(Target::Pair(k));
            }
        }
    }

    fn admit_forward(&mut self) {
        let map = self.forward_maps.next().expect("map stream is infinite");
        let i = self.forwards.len();
        let images: Vec<Word> =
            self.p.presentation.relators().iter().map(|r| substitute(r, &map).expect("map over p")).collect();
        self.forwards.push(Candidate { map, open: images.len() + 1 });
        let mut queue = vec![Target::Forward(i)];
        for w in images {
            if self.q.wait_for(w, Target::Forward(i)) {
                queue.push(Target::Forward(i));
            }
        }
        self.resolve(queue);
    }

    fn admit_backward(&mut self) {
        let map = self.backward_maps.next().expect("map stream is infinite");
        let j = self.backwards.len();
        let images: Vec<Word> =
            self.q.presentation.relators().iter().map(|r| substitute(r, &map).expect("map over q")).collect();
        self.backwards.push(Candidate { map, open: images.len() + 1 });
        let mut queue = vec![Target::Backward(j)];
        for w in images {
            if self.p.wait_for(w, Target::Backward(j)) {
                queue.push(Target::Backward(j));
            }
        }
        self.resolve(queue);
    }

    fn found(&self) -> Option<IsoFound> {
        let mut done = self.completed.clone();
        done.sort_unstable();
        done.into_iter().find_map(|k| self.certify(k))
    }

    fn certify(&self, k: usize) -> Option<IsoFound> {
        let pair = &self.pairs[k];
        let witness = IsoWitness {
            forward: self.forwards[pair.forward].map.clone(),
            backward: self.backwards[pair.backward].map.clone(),
        };
        let obligations =
            witness.obligations(&self.p.presentation, &self.q.presentation).expect("maps match presentations");
        let words = |side: bool| -> Vec<Word> {
            obligations.iter().filter(|(in_q, _)| *in_q == side).map(|(_, w)| w.clone()).collect()
        };
        let mut from_p = self.p.certificates(&words(false))?.into_iter();
        let mut from_q = self.q.certificates(&words(true))?.into_iter();
        let certificates = obligations
            .iter()
            .map(|(in_q, _)| if *in_q { from_q.next() } else { from_p.next() }.expect("one certificate per obligation"))
            .collect();
        Some(IsoFound { witness, certificates })
    }

    /// Runs one round. `None` means keep going; `Some(Exhausted)` means the
    /// meter ran out before the round could finish.
    pub fn round(&mut self, meter: &mut Meter) -> Option<IsoOutcome> {
        if !meter.take_candidate() {
            return Some(IsoOutcome::Exhausted);
        }
        self.admit_forward();
        if !meter.take_candidate() {
            return Some(IsoOutcome::Exhausted);
        }
        self.admit_backward();
        if let Some(f) = self.found() {
            return Some(IsoOutcome::Found(f));
        }
        for _ in 0..=self.rounds {
            if !meter.take_step() {
                return Some(IsoOutcome::Exhausted);
            }
            let hits = self.p.step();
            self.resolve(hits);
            if !meter.take_step() {
                return Some(IsoOutcome::Exhausted);
            }
            let hits = self.q.step();
            self.resolve(hits);
        }
        self.rounds += 1;
        self.found().map(IsoOutcome::Found)
    }

    pub fn run(&mut self, meter: &mut Meter) -> IsoOutcome {
        loop {
            if let Some(out) = self.round(meter) {
                return out;
            }
        }
    }
}

/// Semi-decides `p ≅ q`; only fully verified witnesses are returned.
pub fn iso_search(p: &FinitePresentation, q: &FinitePresentation, budget: SearchBudget) -> IsoOutcome {
    IsoSearch::new(p, q).run(&mut Meter::new(budget))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupOutcome {
    /// `presentation` is `P_k = ⟨W_1..W_n | c_1..c_k⟩`; the witness goes
    /// from the given presentation `Q` to `P_k`.
    Found {
        k: usize,
        presentation: FinitePresentation,
        iso: IsoFound,
        relators: Vec<Word>,
    },
    Exhausted {
        relators: Vec<Word>,
    },
}

/// Searches for a presentation of the subgroup of `p` generated by `gens`
/// that is isomorphic to `q`; `oracle` solves the word problem of `p`.
///
/// Words `c_1, c_2, ...` over fresh symbols `W1..Wn` are enumerated in
/// shortlex order, keeping those whose image under `W_i ↦ gens[i]` is
/// trivial by `oracle`. Every prefix gives a presentation
/// `P_k = ⟨W | c_1..c_k⟩`; an isomorphism search between `q` and each `P_k`
/// is started as soon as `P_k` exists. Each round tests one more word and
/// then gives every running isomorphism search one round, in order of `k`.
pub fn subgroup_presentation_search<O: WordOracle + ?Sized>(
    p: &FinitePresentation,
    oracle: &O,
    gens: &[Word],
    q: &FinitePresentation,
    budget: SearchBudget,
) -> Result<SubgroupOutcome, SearchError> {
    let Some(first) = gens.first() else { return Err(SearchError::BadGenerators) };
    if gens.iter().any(|g| !g.alphabet().same_as(p.alphabet())) {
        return Err(SearchError::BadGenerators);
    }
    let fresh = Alphabet::numbered("W", gens.len())?;
    let lift = GeneratorMap::new(&fresh, first.alphabet(), gens.to_vec())?;
    let mut words = ShortlexStream::new(&fresh);
    words.next(); // the empty word adds nothing
    let mut relators: Vec<Word> = Vec::new();
    let mut presentations = vec![FinitePresentation::new(&fresh, Vec::new()).expect("over fresh")];
    let mut searches = vec![IsoSearch::new(q, &presentations[0])];
    let mut meter = Meter::new(budget);
    loop {
        if !meter.take_step() {
            return Ok(SubgroupOutcome::Exhausted { relators });
        }
        let c = words.next().expect("shortlex stream is infinite");
        if oracle.is_trivial(&lift.apply(&c)?) {
            relators.push(c);
            let pk = FinitePresentation::new(&fresh, relators.clone()).expect("over fresh");
            searches.push(IsoSearch::new(q, &pk));
            presentations.push(pk);
        }
        for (k, search) in searches.iter_mut().enumerate() {
            match search.round(&mut meter) {
                None => {}
                Some(IsoOutcome::Exhausted) => return Ok(SubgroupOutcome::Exhausted { relators }),
                Some(IsoOutcome::Found(iso)) => {
                    return Ok(SubgroupOutcome::Found {
                        k,
                        presentation: presentations[k].clone(),
                        iso,
                        relators: relators[..k].to_vec(),
                    })
                }
            }
        }
    }
}

/// The map `W_i ↦ gens[i]` out of a found subgroup presentation.
///
/// It is checked to be a homomorphism. Injectivity is not certified: it
/// holds when the subgroup is Hopfian, and cannot be checked in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfianLift {
    pub map: GeneratorMap,
    pub homomorphism_verified: bool,
    pub injectivity_certified: bool,
}

pub fn hopfian_lift<O: WordOracle + ?Sized>(
    gens: &[Word],
    pk: &FinitePresentation,
    oracle: &O,
) -> Result<HopfianLift, SearchError> {
    if gens.len() != pk.generator_count() {
        return Err(WordError::ArityMismatch { expected: pk.generator_count(), got: gens.len() }.into());
    }
    let first = gens.first().ok_or(SearchError::BadGenerators)?;
    let map = GeneratorMap::new(pk.alphabet(), first.alphabet(), gens.to_vec())?;
    let homomorphism_verified = decide_homomorphism(&map, pk, oracle)?;
    Ok(HopfianLift { map, homomorphism_verified, injectivity_certified: false })
}
