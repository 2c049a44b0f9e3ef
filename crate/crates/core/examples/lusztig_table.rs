//! Lusztig t-analogs of the weight multiplicities of `Lambda_0 - n delta` in
//! the basic representation, next to the product side.
//!
//! `cargo run --release --example lusztig_table -- 2 5`

use wbasis::tanalog::verify_level1_identity;

fn main() -> Result<(), wbasis::Error> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let rank = args.next().unwrap_or(2);
    let n_max = args.next().unwrap_or(5);

    let report = verify_level1_identity(rank, n_max)?;
    println!("rank {rank}");
    for row in &report.rows {
        let mark = if row.pass { "ok" } else { "MISMATCH" };
        println!("n={:<2} m(t) = {}  [{}; m(1) = {}]", row.n, row.lusztig, mark, row.at_one);
    }
    Ok(())
}
