//! Searching for a finite presentation of a subgroup, given a word-problem
//! oracle for the ambient group.

use fpw::bs::{bs_alphabet, BSParams, BsOracle};
use fpw::presentations::FinitePresentation;
use fpw::search::{hopfian_lift, subgroup_presentation_search, SearchBudget, SubgroupOutcome};
use fpw::words::Word;

fn main() {
    let bs = BSParams::BS23.presentation();
    let oracle = BsOracle(BSParams::BS23);
    let a = bs_alphabet();

    // ⟨t⟩ in BS(2,3) is infinite cyclic
    let gens = vec![Word::parse(&a, "t").unwrap()];
    let z = FinitePresentation::parse("< a | >").unwrap();
    if let SubgroupOutcome::Found { k, presentation, iso, .. } =
        subgroup_presentation_search(&bs, &oracle, &gens, &z, SearchBudget::units(10_000)).unwrap()
    {
        println!("<t> ≅ {presentation} after {k} relators, witness {}", iso.witness.forward);
        let lift = hopfian_lift(&gens, &presentation, &oracle).unwrap();
        println!("lift {} is a homomorphism: {}", lift.map, lift.homomorphism_verified);
    }

    // Z/2 inside Z/2, with an oracle given as a closure
    let z2 = FinitePresentation::parse("< x | x^2 >").unwrap();
    let parity = |w: &Word| w.exponent_sum(0) % 2 == 0;
    let x = vec![z2.word("x").unwrap()];
    let target = FinitePresentation::parse("< b | b^2 >").unwrap();
    if let SubgroupOutcome::Found { k, presentation, .. } =
        subgroup_presentation_search(&z2, &parity, &x, &target, SearchBudget::units(10_000)).unwrap()
    {
        println!("<x> in Z/2 ≅ {presentation} after {k} relators");
    }

    // the wrong target is never confirmed, only given up on
    let z2_target = FinitePresentation::parse("< b | b^2 >").unwrap();
    match subgroup_presentation_search(&bs, &oracle, &gens, &z2_target, SearchBudget::units(10_000)).unwrap() {
        SubgroupOutcome::Found { .. } => println!("unexpected witness"),
        SubgroupOutcome::Exhausted { relators } => println!("<t> vs Z/2: exhausted, {} relators seen", relators.len()),
    }
}
