//! The W-algebra as the joint kernel of the screenings, degree by degree, and
//! its free generators.

use wbasis::walgebra::{choose_generators, expected_walg_dim, pbw_span_check, walg_graded_basis};

fn main() -> Result<(), wbasis::Error> {
    let rank: usize = std::env::args().nth(1).map_or(2, |a| a.parse().expect("rank"));
    println!(" d  kernel  PBW count");
    for d in 0..=6 {
        println!("{d:>2}  {:>6}  {:>9}", walg_graded_basis(rank, d).len(), expected_walg_dim(rank, d));
    }
    let gens = choose_generators(rank)?;
    for g in &gens.generators {
        println!("omega^({}) weight {}: {}", g.p, g.degree, g.state);
    }
    for d in 0..=5 {
        let (r, inside) = pbw_span_check(&gens, d);
        println!("degree {d}: PBW rank {r}, inside kernel: {inside}");
    }
    Ok(())
}
