//! Budgeted isomorphism search between finite presentations.

use fpw::presentations::FinitePresentation;
use fpw::search::{iso_search, IsoOutcome, IsoSearch, Meter, SearchBudget};

fn main() {
    let pairs = [("< x | x^3 >", "< y | y^-3 >"), ("< x | >", "< a, b | b a^-1 >"), ("< x | x^2 >", "< y | y^3 >")];
    for (p, q) in pairs {
        let p = FinitePresentation::parse(p).unwrap();
        let q = FinitePresentation::parse(q).unwrap();
        let mut meter = Meter::new(SearchBudget::units(50_000));
        match IsoSearch::new(&p, &q).run(&mut meter) {
            IsoOutcome::Found(found) => {
                println!("{p} ≅ {q}");
                println!("  forward  {}", found.witness.forward);
                println!("  backward {}", found.witness.backward);
                println!(
                    "  {} certificates, all check: {}",
                    found.certificates.len(),
                    found.verify_certificates(&p, &q)
                );
            }
            IsoOutcome::Exhausted => println!("{p} vs {q}: nothing within budget"),
        }
        println!("  spent {} candidates, {} stream steps", meter.candidates_used(), meter.steps_used());
    }

    // A larger search: BS(2,3) against a copy with u = t^2 adjoined.
    let bs = FinitePresentation::parse("< s, t | s^-1 t^2 s = t^3 >").unwrap();
    let variant = FinitePresentation::parse("< s, t, u | s^-1 t^2 s = t^3, u = t^2, s^-1 u s = t^3 >").unwrap();
    if let IsoOutcome::Found(found) = iso_search(&bs, &variant, SearchBudget::units(3_000_000)) {
        println!("{bs} ≅ {variant} via {}", found.witness.backward);
    }
}
