//! Checking that a map of generators extends to a homomorphism, with and
//! without a word-problem oracle for the target.

use fpw::bs::{BSParams, BsOracle};
use fpw::presentations::FinitePresentation;
use fpw::search::{decide_homomorphism, semidecide_homomorphism, HomCheck};
use fpw::words::GeneratorMap;

fn main() {
    let p = FinitePresentation::parse("< x | x^6 >").unwrap();
    let q = FinitePresentation::parse("< y | y^4 >").unwrap();
    for images in ["x=y^2", "x=y"] {
        let phi = GeneratorMap::parse(p.alphabet(), q.alphabet(), images).unwrap();
        match semidecide_homomorphism(&phi, &p, &q, 100_000).unwrap() {
            HomCheck::Proved { certificates, steps } => {
                println!("{phi}: homomorphism, certificate {} after {steps} steps", certificates[0].to_json())
            }
            HomCheck::Exhausted { steps } => println!("{phi}: no certificate in {steps} steps"),
        }
    }

    let bs = BSParams::BS23.presentation();
    let oracle = BsOracle(BSParams::BS23);
    for images in ["s=s,t=t^2", "s=s,t=t^3", "s=s^-1,t=t"] {
        let phi = GeneratorMap::parse(bs.alphabet(), bs.alphabet(), images).unwrap();
        println!("{phi} on BS(2,3): {}", decide_homomorphism(&phi, &bs, &oracle).unwrap());
    }
}
