mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fpw::presentations::{
    abelianization_invariants, certificate_word, exponent_matrix, is_perfect, semidecide_trivial, smith_normal_form,
    FinitePresentation, TrivialWordStream, TrivialityCertificate,
};
use fpw::words::{reduced_words_of_length, Alphabet, Word};

use common::{
    det, invariant_factors_by_minors, is_unimodular, random_certificate, random_matrix, random_word, square_rows,
};

/// Emissions within which `x^{2k}`, `|k| ≤ 3`, all appear for `⟨x | x^2⟩`
/// (measured: 165).
const EVEN_POWERS_BUDGET: u64 = 200;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_presentation(r: &mut ChaCha8Rng) -> FinitePresentation {
    let gens = r.gen_range(1..=2);
    let a = Alphabet::numbered("x", gens).unwrap();
    let n = r.gen_range(0..=3);
    let rels = (0..n)
        .map(|_| {
            let len = r.gen_range(1..=5);
            random_word(r, &a, len)
        })
        .collect();
    FinitePresentation::new(&a, rels).unwrap()
}

/// `Z^g / rowspace` is trivial iff the g×g minors of the exponent matrix
/// have gcd 1.
fn perfect_by_minors(p: &FinitePresentation) -> bool {
    let m = exponent_matrix(p);
    let g = p.generator_count();
    m.rows() >= g && {
        let factors = invariant_factors_by_minors(&m);
        factors.len() == g && factors.iter().all(|d| d.is_one())
    }
}

#[test]
fn parse_examples() {
    let p = FinitePresentation::parse("< s, t | s^-1 t^2 s = t^3 >").unwrap();
    assert_eq!(p.relators().len(), 1);
    assert_eq!(p.relators()[0].to_string(), "s^-1 t^2 s t^-3");
    assert!(FinitePresentation::parse("< x | >").unwrap().relators().is_empty());
    assert!(FinitePresentation::parse("< x | x x^-1 >").unwrap().relators().is_empty());
    assert!(FinitePresentation::parse("< x, x | >").is_err());
    assert!(FinitePresentation::parse("< x | y >").is_err());
    assert!(FinitePresentation::parse("< x | x^2").is_err());
}

#[test]
fn even_powers_appear() {
    let p = FinitePresentation::from_strs(&["x"], &["x^2"]).unwrap();
    let mut worst = 0;
    for k in -3i64..=3 {
        let w = p.word("x").unwrap().pow(2 * k);
        match semidecide_trivial(&p, &w, EVEN_POWERS_BUDGET) {
            fpw::presentations::Semidecision::ProvedTrivial { certificate, steps } => {
                assert!(certificate.proves(p.relators(), &w));
                worst = worst.max(steps);
            }
            other => panic!("x^{} not reached: {other:?}", 2 * k),
        }
    }
    assert!(worst <= EVEN_POWERS_BUDGET);
    assert!(!semidecide_trivial(&p, &p.word("x").unwrap(), EVEN_POWERS_BUDGET).is_proved());
}

#[test]
fn perfect_matches_minors_exhaustively() {
    let mut checked = 0;
    for gens in 1..=2 {
        let a = Alphabet::numbered("x", gens).unwrap();
        let words: Vec<Word> = (0..=4).flat_map(|l| reduced_words_of_length(&a, l)).collect();
        let mut sets: Vec<Vec<Word>> = vec![vec![]];
        sets.extend(words.iter().map(|w| vec![w.clone()]));
        for (i, u) in words.iter().enumerate() {
            for v in &words[i..] {
                sets.push(vec![u.clone(), v.clone()]);
            }
        }
        for rels in sets {
            let p = FinitePresentation::new(&a, rels).unwrap();
            assert_eq!(is_perfect(&p), perfect_by_minors(&p), "{p}");
            checked += 1;
        }
    }
    assert!(checked > 6000);
    assert!(is_perfect(&FinitePresentation::from_strs(&["x"], &["x"]).unwrap()));
    assert!(!is_perfect(&FinitePresentation::from_strs(&["x"], &["x^2"]).unwrap()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn stream_emissions_carry_their_certificates(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        let mut stream = TrivialWordStream::finite(&p);
        for _ in 0..300 {
            let w = stream.next_word();
            let cert = stream.current_certificate();
            prop_assert_eq!(certificate_word(p.alphabet(), p.relators(), &cert).unwrap(), w);
        }
    }

    #[test]
    fn certificate_json_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_presentation(&mut r);
        let cert = random_certificate(&mut r, &p, 4, 3);
        let back = TrivialityCertificate::from_json(p.alphabet(), &cert.to_json()).unwrap();
        prop_assert_eq!(&back, &cert);
        let w = certificate_word(p.alphabet(), p.relators(), &cert).unwrap();
        prop_assert!(cert.proves(p.relators(), &w));
    }

    #[test]
    fn smith_postconditions(seed in any::<u64>()) {
        let a = random_matrix(&mut rng(seed), 6, 9);
        let s = smith_normal_form(&a);
        prop_assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.d.is_diagonal());
        let diag = s.invariant_factors();
        prop_assert!(diag.iter().all(|d| *d >= BigInt::zero()));
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
        prop_assert_eq!(diag, invariant_factors_by_minors(&a));
    }

    #[test]
    fn abelianization_matches_minors(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        let ab = abelianization_invariants(&p);
        let factors = invariant_factors_by_minors(&exponent_matrix(&p));
        let rank = factors.iter().filter(|d| !d.is_zero()).count();
        prop_assert_eq!(ab.free_rank, p.generator_count() - rank);
        let torsion: Vec<BigInt> = factors.into_iter().filter(|d| *d > BigInt::one()).collect();
        prop_assert_eq!(ab.torsion, torsion);
        if p.generator_count() == p.relators().len() {
            let d = det(&square_rows(&exponent_matrix(&p))).magnitude().clone();
            prop_assert_eq!(is_perfect(&p), d == num_bigint::BigUint::one());
        }
    }
}
