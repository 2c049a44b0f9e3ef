//! Graded dimensions of the Brylinski filtration on Z against the two-variable
//! product, and the mode shift checks on the computed slices.

use wbasis::brylinski::{verify_main_theorem, verify_mode_shifts};
use wbasis::twistedfock::TwistedModule;
use wbasis::walgebra::choose_generators;

fn main() -> Result<(), wbasis::Error> {
    let rank: usize = std::env::args().nth(1).map_or(1, |a| a.parse().expect("rank"));
    let n_max = if rank == 1 { 4 } else { 3 };
    let gens = choose_generators(rank)?;
    let module = TwistedModule::new(rank);
    let report = verify_main_theorem(&module, &gens, n_max, None)?;
    for c in report.cells.iter().filter(|c| c.dim > 0) {
        println!("n={} d={:<2} dim F^d = {:<3} graded {} expected {} {}", c.n, c.d, c.dim, c.graded, c.expected, if c.pass { "" } else { "FAIL" });
    }
    println!("all cells pass: {}", report.all_pass());
    let shifts = verify_mode_shifts(&module, &gens, 2)?;
    println!("mode shifts: {} checks, {} failures", shifts.checks, shifts.failures.len());
    Ok(())
}
