//! Certificate-checked Tietze moves, with a hash-chained log.

use fpw::presentations::{FinitePresentation, TrivialityCertificate};
use fpw::search::{iso_search, SearchBudget};
use fpw::tietze::{apply_move, apply_sequence, check_move, TietzeMove};

fn main() {
    let p = FinitePresentation::parse("< s, t | s^-1 t^2 s = t^3 >").unwrap();

    let add_u = TietzeMove::add_generator("u", p.word("t^2").unwrap());
    let with_u = apply_move(&p, &add_u).unwrap();
    let cert = TrivialityCertificate::from_triples(with_u.alphabet(), &[("s^-1", 1, 1), ("", 0, 1)]).unwrap();
    let add_rel = TietzeMove::add_relator(with_u.word("s^-1 u s t^-3").unwrap(), cert);

    let (q, log) = apply_sequence(&p, &[add_u, add_rel]).unwrap();
    for entry in &log.entries {
        println!("{}  {} -> {}", entry.mv, &entry.before[..12], &entry.after[..12]);
    }
    println!("{p}  ->  {q}");
    println!("log chains: {}", log.chains());
    println!("{}", serde_json::to_string(&log.to_json()).unwrap());

    // a move without a certificate can still be checked by search
    let unproved = TietzeMove::AddRelator { word: p.word("s^-1 t^4 s t^-6").unwrap(), cert: None };
    println!("uncertified relator: {:?}", check_move(&p, &unproved, 1_000_000));

    // and a bad certificate is refused
    let bogus = TrivialityCertificate::from_triples(p.alphabet(), &[("t", 0, 1)]).unwrap();
    let bad = TietzeMove::add_relator(p.word("t").unwrap(), bogus);
    println!("bogus move: {}", apply_move(&p, &bad).unwrap_err());

    println!("iso search confirms: {}", iso_search(&p, &q, SearchBudget::units(3_000_000)).found().is_some());
}
