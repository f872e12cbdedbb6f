mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use fpw::bs::BSParams;
use fpw::presentations::{certificate_word, FinitePresentation, TrivialityCertificate};
use fpw::search::{IsoOutcome, IsoSearch, Meter, SearchBudget};
use fpw::tietze::{
    apply_json_sequence, apply_move, apply_sequence, check_move, presentation_hash, MoveCheck, TietzeError, TietzeMove,
};

use common::{random_certificate, random_word, TietzeWalk};

/// Isomorphism-search budget for confirming random walks.
const WALK_ISO_BUDGET: u64 = 2_000_000;

fn fp(gens: &[&str], rels: &[&str]) -> FinitePresentation {
    FinitePresentation::from_strs(gens, rels).unwrap()
}

fn starts() -> Vec<FinitePresentation> {
    vec![fp(&["x"], &["x^2"]), fp(&["x"], &[]), fp(&["x"], &["x^3"]), BSParams::BS23.presentation()]
}

/// The certificate a relator move carries, checked against the relator set
/// the move names: all current relators for an addition, all but the
/// removed one for a removal.
fn certificate_holds(before: &FinitePresentation, mv: &TietzeMove) -> bool {
    match mv {
        TietzeMove::AddRelator { word, cert: Some(cert) } => {
            certificate_word(before.alphabet(), before.relators(), cert).as_ref() == Ok(word)
        }
        TietzeMove::RemoveRelator { index, cert: Some(cert) } => {
            let mut rest = before.relators().to_vec();
            let removed = rest.remove(*index);
            certificate_word(before.alphabet(), &rest, cert).as_ref() == Ok(&removed)
        }
        _ => true,
    }
}

#[test]
fn bad_moves_are_rejected() {
    let p = fp(&["x"], &["x^2"]);
    let cert = TrivialityCertificate::from_triples(p.alphabet(), &[("", 0, 1)]).unwrap();
    let wrong = TietzeMove::add_relator(p.word("x^3").unwrap(), cert.clone());
    assert!(matches!(apply_move(&p, &wrong), Err(TietzeError::InvalidCertificate(_))));
    assert!(matches!(check_move(&p, &wrong, 1000), MoveCheck::Invalid(_)));
    assert!(apply_move(&p, &TietzeMove::add_generator("x", p.word("x").unwrap())).is_err());
    assert!(apply_move(&p, &TietzeMove::remove_generator("x")).is_err());
    assert!(apply_move(&p, &TietzeMove::remove_relator(3, cert)).is_err());
    let free = TietzeMove::AddRelator { word: p.word("x^4").unwrap(), cert: None };
    assert_eq!(check_move(&p, &free, 1000), MoveCheck::Valid);
    let odd = TietzeMove::AddRelator { word: p.word("x^3").unwrap(), cert: None };
    assert_eq!(check_move(&p, &odd, 1000), MoveCheck::Unverifiable { budget: 1000 });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relator_round_trip(seed in any::<u64>(), which in 0usize..4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let p = &starts()[which];
        let cert = random_certificate(&mut r, p, 3, 3);
        let w = certificate_word(p.alphabet(), p.relators(), &cert).unwrap();
        let n = p.relators().len();
        let (back, log) =
            apply_sequence(p, &[TietzeMove::add_relator(w, cert.clone()), TietzeMove::remove_relator(n, cert)]).unwrap();
        prop_assert_eq!(&back, p);
        prop_assert!(log.chains());
        prop_assert_eq!(&log.entries[1].after, &presentation_hash(p));
    }

    #[test]
    fn generator_round_trip(seed in any::<u64>(), which in 0usize..4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let p = &starts()[which];
        let def = { let len = r.gen_range(0..5); random_word(&mut r, p.alphabet(), len) };
        let (back, _) =
            apply_sequence(p, &[TietzeMove::add_generator("g", def), TietzeMove::remove_generator("g")]).unwrap();
        prop_assert_eq!(&back, p);
    }

    #[test]
    fn walks_replay_from_json(seed in any::<u64>(), which in 0usize..3) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let start = &starts()[which];
        let mut walk = TietzeWalk::new(start);
        let mut current = start.clone();
        let mut moves = Vec::new();
        for _ in 0..r.gen_range(1..=6) {
            let mv = walk.step(&mut r);
            prop_assert!(certificate_holds(&current, &mv));
            prop_assert_eq!(check_move(&current, &mv, 0), MoveCheck::Valid);
            current = apply_move(&current, &mv).unwrap();
            moves.push(mv);
        }
        prop_assert_eq!(&current, &walk.current);
        let (end, log) = apply_sequence(start, &moves).unwrap();
        prop_assert_eq!(&end, &current);
        prop_assert!(log.chains());
        let json = Value::Array(moves.iter().map(TietzeMove::to_json).collect());
        let (replayed, replay_log) = apply_json_sequence(start, &json).unwrap();
        prop_assert_eq!(&replayed, &end);
        prop_assert_eq!(replay_log, log);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn walks_preserve_the_group(seed in any::<u64>(), which in 0usize..3) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let start = &starts()[which];
        let mut walk = TietzeWalk::new(start);
        let moves: Vec<TietzeMove> = (0..r.gen_range(1..=6)).map(|_| walk.step(&mut r)).collect();
        let (end, _) = apply_sequence(start, &moves).unwrap();
        let mut meter = Meter::new(SearchBudget::units(WALK_ISO_BUDGET));
        match IsoSearch::new(start, &end).run(&mut meter) {
            IsoOutcome::Found(found) => prop_assert!(found.verify_certificates(start, &end)),
            IsoOutcome::Exhausted => prop_assert!(false, "{} vs {} exhausted", start, end),
        }
    }
}
