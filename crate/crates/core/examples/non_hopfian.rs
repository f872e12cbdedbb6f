//! f: s ↦ s, t ↦ t^2 is an epimorphism of BS(2,3) with nontrivial kernel,
//! and the words w_i separate the kernels of its iterates.

use fpw::bs::{apply_f, bs_equal, bs_is_trivial, f_map, f_preimage_witnesses, w_family, BSParams, BsOracle};
use fpw::search::decide_homomorphism;
use fpw::words::Word;

fn main() {
    let p = BSParams::BS23;
    let bs = p.presentation();

    let hom = decide_homomorphism(&f_map(), &bs, &BsOracle(p)).unwrap();
    println!("f = {} is a homomorphism: {hom}", f_map());

    let pre = f_preimage_witnesses();
    for g in 0..2 {
        let x = Word::generator(bs.alphabet(), g);
        let image = apply_f(pre.image(g), 1).unwrap();
        println!("f({}) = {} = {x}: {}", pre.image(g), image, bs_equal(p, &image, &x).unwrap());
    }

    let w1 = w_family(1);
    println!("w_1 = {w1}");
    println!(
        "w_1 trivial: {}, f(w_1) trivial: {}",
        bs_is_trivial(p, &w1).unwrap(),
        bs_is_trivial(p, &apply_f(&w1, 1).unwrap()).unwrap()
    );

    println!();
    println!("f^i(w_j) trivial (rows i, columns j):");
    for i in 0..5 {
        let row: Vec<&str> = (0..5)
            .map(|j| if bs_is_trivial(p, &apply_f(&w_family(j), i).unwrap()).unwrap() { "e" } else { "." })
            .collect();
        println!("  i={i}  {}", row.join(" "));
    }
}
