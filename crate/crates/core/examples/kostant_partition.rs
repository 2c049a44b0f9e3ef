//! The t-analog of Kostant's partition function on a few affine root-lattice
//! points, and the Weyl terms that survive in the alternating sum.

use wbasis::exactcore::qi;
use wbasis::rootsys::{affine_weyl_elements_for, positive_affine_roots_up_to, AffineWeight};
use wbasis::tanalog::{lusztig_poly, t_kostant};

fn main() -> Result<(), wbasis::Error> {
    let rank = 1;
    let roots = positive_affine_roots_up_to(rank, 2);
    println!("positive affine roots with delta-coefficient <= 2: {}", roots.len());
    for r in &roots {
        println!("  {:?} (mult {})", r.root_coords(rank), r.multiplicity);
    }

    // beta = k_0 alpha_0 + k_1 alpha_1 is encoded as an affine weight of level 0
    let delta = AffineWeight::delta(rank);
    for n in 0..4 {
        let beta = delta.scale(&qi(n));
        println!("K_t({n} delta) = {}", t_kostant(rank, &beta));
    }

    let lambda = AffineWeight::lambda0(rank);
    let mu = AffineWeight::level_one_weight(rank, 3);
    let terms = affine_weyl_elements_for(&lambda, &mu)?;
    println!("{} Weyl terms contribute to m(Lambda_0, Lambda_0 - 3 delta)", terms.len());
    for t in &terms {
        println!("  word {:?} sign {}", t.word, t.sign);
    }
    println!("m = {}", lusztig_poly(&lambda, &mu)?);
    Ok(())
}
