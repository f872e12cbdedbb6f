//! Reading |W| back off a word-problem oracle: compress W, build the tower
//! quotient BS(2,3)/ker f^|W|, and find the last w_j it kills.

use fpw::bs::{kernel_stream, w_family};
use fpw::harness::{
    quotient_tower_presentation, recover_cardinality, reduction_pipeline, tower_oracle, ExplicitFiniteSet,
};
use fpw::search::WordOracle;
use fpw::stream::drain;

fn main() {
    for text in ["", "5", "4,7", "0,3,9", "1,1,2,2"] {
        let set: ExplicitFiniteSet = text.parse().unwrap();
        println!("W = {set:10} recovered |W| = {}", reduction_pipeline(&set, 5));
    }

    let oracle = tower_oracle(2);
    println!();
    for j in 0..5 {
        println!("w_{j} trivial in BS(2,3)/ker f^2: {}", oracle.is_trivial(&w_family(j)));
    }
    println!("recovered: {}", recover_cardinality(&oracle, 4));

    // P_W is recursive: the BS relator, then the kernel of f^|W| as it is found
    let mut tower = quotient_tower_presentation(&"4,7".parse().unwrap());
    let (relators, _) = drain(&mut tower, 50);
    println!();
    println!("P_{{4,7}} opens with {}", relators[0]);
    let kernel: Vec<String> = kernel_stream(2).skip(1).take(4).map(|w| w.to_string()).collect();
    println!("shortest words of ker f^2: {}", kernel.join(", "));
}
