//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use fpw::presentations::{certificate_word, Factor, FinitePresentation, IntMatrix, TrivialityCertificate};
use fpw::tietze::{apply_move, TietzeMove};
use fpw::words::{substitute, Alphabet, GeneratorMap, Letter, Word};

/// Uniform random reduced word of length exactly `len`.
pub fn random_word<R: Rng>(rng: &mut R, a: &Alphabet, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::from_code(rng.gen_range(0..a.letter_count()));
        if letters.last().is_some_and(|p| *p == l.inverse()) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(a, letters).unwrap()
}

/// Random certificate: `1..=max_factors` factors, conjugators of length
/// `0..=max_conj`, relator or the empty relator, either sign.
pub fn random_certificate<R: Rng>(
    rng: &mut R,
    p: &FinitePresentation,
    max_factors: usize,
    max_conj: usize,
) -> TrivialityCertificate {
    let n = rng.gen_range(1..=max_factors);
    let factors = (0..n)
        .map(|_| {
            let conj = {
                let len = rng.gen_range(0..=max_conj);
                random_word(rng, p.alphabet(), len)
            };
            let rel = if p.relators().is_empty() || rng.gen_ratio(1, 8) {
                None
            } else {
                Some(rng.gen_range(0..p.relators().len()))
            };
            Factor { conj, rel, sign: if rng.gen() { 1 } else { -1 } }
        })
        .collect();
    TrivialityCertificate::new(factors)
}

/// Determinant by cofactor expansion, for small square matrices.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k = gcd of k×k minors`,
/// factor `k` is `d_k / d_{k-1}`. Trailing zeros fill to `min(rows, cols)`.
pub fn invariant_factors_by_minors(a: &IntMatrix) -> Vec<BigInt> {
    let (r, c) = (a.rows(), a.cols());
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor: Vec<Vec<BigInt>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| a[(i, j)].clone()).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        divisors.push(g);
    }
    (1..divisors.len())
        .map(|k| if divisors[k].is_zero() { BigInt::zero() } else { &divisors[k] / &divisors[k - 1] })
        .collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, max_entry: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let data: Vec<Vec<i64>> =
        (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-max_entry..=max_entry)).collect()).collect();
    IntMatrix::from_rows(&data)
}

pub fn square_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.rows() == m.cols() && det(&square_rows(m)).abs() == BigInt::from(1)
}

/// Walks never grow a presentation past this many generators.
pub const WALK_MAX_GENERATORS: usize = 3;

/// Bookkeeping for generating random valid Tietze sequences.
pub struct TietzeWalk {
    pub current: FinitePresentation,
    /// Certificate of each relator over the relators before it, when known.
    certs: Vec<Option<TrivialityCertificate>>,
    /// Added generators and the index of their defining relator.
    added: Vec<(String, usize)>,
    fresh: usize,
}

impl TietzeWalk {
    pub fn new(p: &FinitePresentation) -> Self {
        TietzeWalk { current: p.clone(), certs: vec![None; p.relators().len()], added: Vec::new(), fresh: 0 }
    }

    fn removable_relators(&self) -> Vec<usize> {
        (0..self.certs.len())
            .filter(|&i| {
                self.certs[i].is_some()
                    && !self.certs.iter().flatten().any(|c| c.factors.iter().any(|f| f.rel == Some(i)))
            })
            .collect()
    }

    /// Picks, applies and returns one random valid move.
    pub fn step<R: Rng>(&mut self, rng: &mut R) -> TietzeMove {
        let removable = self.removable_relators();
        let mut kinds = vec![1];
        if self.current.generator_count() < WALK_MAX_GENERATORS {
            kinds.push(0);
        }
        if !removable.is_empty() {
            kinds.push(2);
        }
        if !self.added.is_empty() {
            kinds.push(3);
        }
        let alphabet = self.current.alphabet().clone();
        let mv = match *kinds.choose(rng).unwrap() {
            0 => {
                let name = format!("y{}", self.fresh);
                self.fresh += 1;
                let def = {
                    let len = rng.gen_range(0..=2);
                    random_word(rng, &alphabet, len)
                };
                TietzeMove::add_generator(&name, def)
            }
            1 => {
                let cert = random_certificate(rng, &self.current, 2, 1);
                let word = certificate_word(&alphabet, self.current.relators(), &cert).unwrap();
                TietzeMove::add_relator(word, cert)
            }
            2 => {
                let i = *removable.choose(rng).unwrap();
                TietzeMove::remove_relator(i, self.certs[i].clone().unwrap())
            }
            _ => {
                let (name, d) = self.added.choose(rng).unwrap().clone();
                TietzeMove::RemoveGenerator { name, via: Some(d) }
            }
        };
        let next = apply_move(&self.current, &mv).expect("generated moves are valid");
        self.track(&mv, &next);
        self.current = next;
        mv
    }

    fn track(&mut self, mv: &TietzeMove, next: &FinitePresentation) {
        match mv {
            TietzeMove::AddGenerator { name, .. } => {
                let wider = next.alphabet();
                for c in self.certs.iter_mut().flatten() {
                    for f in &mut c.factors {
                        f.conj = f.conj.translate(wider).unwrap();
                    }
                }
                self.certs.push(None);
                self.added.push((name.clone(), next.relators().len() - 1));
            }
            TietzeMove::AddRelator { cert, .. } => self.certs.push(cert.clone()),
            TietzeMove::RemoveRelator { index, .. } => {
                self.certs.remove(*index);
                self.shift_after(*index);
            }
            TietzeMove::RemoveGenerator { name, via } => {
                let d = via.unwrap();
                let old = self.current.alphabet();
                let g = old.index_of(name).unwrap();
                let r = &self.current.relators()[d];
                let def = Word::from_letters(old, r.letters()[1..].iter().map(|l| l.inverse()).rev()).unwrap();
                let narrower = next.alphabet();
                let images = (0..old.len())
                    .map(|h| {
                        if h == g {
                            def.translate(narrower).unwrap()
                        } else {
                            Word::generator(old, h).translate(narrower).unwrap()
                        }
                    })
                    .collect();
                let sigma = GeneratorMap::new(old, narrower, images).unwrap();
                self.certs.remove(d);
                for c in &mut self.certs {
                    if c.as_ref().is_some_and(|c| c.factors.iter().any(|f| f.rel == Some(d))) {
                        *c = None;
                    }
                    if let Some(c) = c {
                        for f in &mut c.factors {
                            f.conj = substitute(&f.conj, &sigma).unwrap();
                        }
                    }
                }
                self.added.retain(|(n, _)| n != name);
                self.shift_after(d);
            }
        }
    }

    fn shift_after(&mut self, removed: usize) {
        for c in self.certs.iter_mut().flatten() {
            for f in &mut c.factors {
                if let Some(r) = f.rel.as_mut() {
                    if *r > removed {
                        *r -= 1;
                    }
                }
            }
        }
        for (_, d) in &mut self.added {
            if *d > removed {
                *d -= 1;
            }
        }
    }
}
