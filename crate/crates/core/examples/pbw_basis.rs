//! PBW vectors of the W-generators acting on the twisted vacuum; the ones of
//! energy n form a basis of Z_n.

use wbasis::brylinski::build_z_slice;
use wbasis::twistedfock::TwistedModule;
use wbasis::walgebra::choose_generators;

fn main() -> Result<(), wbasis::Error> {
    let rank = 2;
    let gens = choose_generators(rank)?;
    let module = TwistedModule::new(rank);
    println!("omega^(1)_(-1)(sigma)|0> = {}", module.pbw_vector(&gens, &[(1, -1)])?.render(3, "b"));
    for n in 0..=4 {
        let slice = build_z_slice(&module, &gens, n)?;
        println!("Z_{n}: {} independent PBW vectors", slice.len());
        if n == 2 {
            for w in &slice.words {
                println!("  {w:?}");
            }
        }
    }
    Ok(())
}
