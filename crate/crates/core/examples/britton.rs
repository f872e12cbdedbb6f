//! Britton reduction in BS(2,3): normal forms, equality and the map f.

use fpw::bs::{apply_f, britton_reduce, bs_alphabet, bs_equal, bs_is_trivial, from_syllables, in_kernel, BSParams};
use fpw::words::Word;

fn main() {
    let p = BSParams::BS23;
    let a = bs_alphabet();
    let word = |s: &str| Word::parse(&a, s).unwrap();

    for text in ["s^-1 t^2 s t^-3", "s^-1 t^4 s", "s t^3 s^-1", "s^-1 t s t s^-1 t^-1 s t^-1"] {
        let w = word(text);
        let nf = britton_reduce(p, &w).unwrap();
        let reduced = from_syllables(&nf).unwrap();
        let shown = if reduced.is_identity() { "1".to_string() } else { reduced.to_string() };
        println!("{text:30} -> {shown:30} syllables {nf}");
    }

    println!();
    println!("s^-1 t^4 s = t^6 ? {}", bs_equal(p, &word("s^-1 t^4 s"), &word("t^6")).unwrap());
    println!("s^-1 t s = t     ? {}", bs_equal(p, &word("s^-1 t s"), &word("t")).unwrap());

    // the commutator [s^-1 t s, t] survives, its image under f does not
    let c = word("s^-1 t s").commutator(&word("t")).unwrap();
    println!();
    println!("c = {c}");
    println!("c trivial: {}", bs_is_trivial(p, &c).unwrap());
    println!("f(c) = {}", apply_f(&c, 1).unwrap());
    println!("c in ker f: {}", in_kernel(&c, 1).unwrap());

    // other Baumslag-Solitar groups use the same solver
    let bs12 = BSParams::new(1, 2).unwrap();
    println!();
    println!("BS(1,2): s^-1 t s = t^2 ? {}", bs_equal(bs12, &word("s^-1 t s"), &word("t^2")).unwrap());
}
