//! Verma and primitive characters as q-series.

use wbasis::exactcore::q;
use wbasis::walgebra::{primitive_character, verma_character};

fn main() {
    let v = verma_character(&[q(-1, 4), q(1, 4)], 1, 8);
    println!("Verma, l = 1: {v}");
    let v2 = verma_character(&[q(0, 1), q(0, 1), q(0, 1)], 2, 8);
    println!("Verma, l = 2, lambda = 0: {v2}");
    match primitive_character(&[q(2, 3), q(1, 3)], 8) {
        Ok(p) => println!("primitive, s = (2/3, 1/3): {p}"),
        Err(e) => println!("{e}"),
    }
    if let Err(e) = primitive_character(&[q(1, 2), q(3, 2)], 8) {
        println!("s = (1/2, 3/2): {e}");
    }
}
