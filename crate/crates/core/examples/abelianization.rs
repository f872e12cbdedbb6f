//! Abelianizations through the Smith normal form of the exponent-sum matrix.

use fpw::presentations::{
    abelianization_invariants, exponent_matrix, is_perfect, smith_normal_form, FinitePresentation,
};

fn main() {
    let examples = [
        "< s, t | s^-1 t^2 s = t^3 >",
        "< x | x^2 >",
        "< x | x >",
        "< a, b | a^4 b^6, a^2 b^-2 >",
        "< a, b, c | a b a^-1 b^-1, c^3 >",
        "< x, y | x^2 = y^3, x y x = y x y >",
    ];
    for text in examples {
        let p = FinitePresentation::parse(text).unwrap();
        let ab = abelianization_invariants(&p);
        println!("{p:40} ab = {ab:12} perfect: {}", is_perfect(&p));
    }

    let p = FinitePresentation::parse("< a, b | a^4 b^6, a^2 b^-2 >").unwrap();
    let smith = smith_normal_form(&exponent_matrix(&p));
    println!();
    println!("A = {:?}", exponent_matrix(&p).to_i64_rows().unwrap());
    println!("U = {:?}", smith.u.to_i64_rows().unwrap());
    println!("D = {:?}", smith.d.to_i64_rows().unwrap());
    println!("V = {:?}", smith.v.to_i64_rows().unwrap());
}
