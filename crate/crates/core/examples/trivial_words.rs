//! Enumerating the trivial words of a presentation together with
//! certificates, and semi-deciding triviality of a given word.

use fpw::presentations::{semidecide_trivial, FinitePresentation, Semidecision, TrivialWordStream};

fn main() {
    let p = FinitePresentation::parse("< a, b | a^2, b^3, a b a^-1 b^-1 >").unwrap();
    println!("{p}");

    let mut stream = TrivialWordStream::finite(&p).dedup();
    for _ in 0..12 {
        let (w, cert) = stream.next().unwrap();
        println!("  {:20} {}", if w.is_identity() { "1".to_string() } else { w.to_string() }, cert.to_json());
    }

    for text in ["a^-2", "b a b^-1 a", "a b"] {
        let w = p.word(text).unwrap();
        match semidecide_trivial(&p, &w, 200_000) {
            Semidecision::ProvedTrivial { certificate, steps } => {
                println!("{text}: trivial after {steps} steps, {} factors", certificate.len())
            }
            Semidecision::Exhausted { steps } => println!("{text}: no certificate in {steps} steps"),
        }
    }
}
