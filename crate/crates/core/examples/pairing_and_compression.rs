//! Cantor pairing and the compression of a stream of naturals.

use fpw::harness::{cantor_pair, cantor_tuple, cantor_unpair, cantor_untuple, compress_stream};
use fpw::stream::{FiniteSource, IterSource, Pull, Source};

fn main() {
    for (x, y) in [(0, 0), (1, 0), (0, 1), (3, 4), (100, 0)] {
        let z = cantor_pair(x, y).unwrap();
        println!("<{x}, {y}> = {z}, unpaired {:?}", cantor_unpair(z));
    }
    let z = cantor_tuple(&[2, 7, 1]).unwrap();
    println!("<2, 7, 1> = {z}, untupled {:?}", cantor_untuple(z, 3));
    println!("<2^63, 2^63> overflows: {}", cantor_pair(1 << 63, 1 << 63).is_none());

    println!();
    let mut c = compress_stream(FiniteSource::new(vec![9, 4, 9, 9, 12, 4]));
    let mut events = Vec::new();
    loop {
        match c.pull() {
            Pull::Item(k) => events.push(k.to_string()),
            Pull::Stalled => events.push("-".into()),
            Pull::Exhausted => break,
        }
    }
    println!("compress [9, 4, 9, 9, 12, 4] -> {}", events.join(" "));

    let mut squares = compress_stream(IterSource((0u64..).map(|n| n * n % 10)));
    let firsts: Vec<String> = (0..12)
        .map(|_| match squares.pull() {
            Pull::Item(k) => k.to_string(),
            _ => "-".into(),
        })
        .collect();
    println!("compress n^2 mod 10 -> {} ...", firsts.join(" "));
}
