//! The principally twisted Fock space: Heisenberg modes, twisted Virasoro
//! modes and the product identity coefficients.

use wbasis::exactcore::{q, qi};
use wbasis::heisenberg::Fock;
use wbasis::twistedfock::{kappa_printed, reconcile_kappa, TwistedModule};

fn main() -> Result<(), wbasis::Error> {
    let m1 = TwistedModule::new(1);
    let vac = Fock::vacuum();
    let v = m1.heis_mode(1, &q(-1, 2), &vac)?;
    println!("b_(-1/2)|0> = {}", v.render(2, "b"));
    println!("b_(1/2) b_(-1/2)|0> = {}", m1.heis_mode(1, &q(1, 2), &v)?.render(2, "b"));
    println!("b_(1)|0>: {}", m1.heis_mode(1, &qi(1), &vac).unwrap_err());

    let m2 = TwistedModule::new(2);
    println!("L_(-2)(sigma)|0> = {}", m2.virasoro(-2, &vac).render(3, "b"));
    let l1 = m2.virasoro(-1, &vac);
    // the twisted vacuum has L_0 eigenvalue 1/9 at rank 2
    println!("L_(-1)(sigma)|0> = {}", l1.render(3, "b"));
    println!("L_0(sigma) L_(-1)(sigma)|0> = {}", m2.virasoro(0, &l1).render(3, "b"));
    let samples = m2.sample_states(3);
    let clean = samples.iter().all(|s| (-2..=2).all(|a| (-2..=2).all(|b| m2.virasoro_defect(a, b, s).is_zero())));
    println!("Virasoro relations with c = 2 on {} states: {clean}", samples.len());

    println!("printed kappa at N_ab = 1, n = 0: {}", kappa_printed(&q(1, 2), 0, 1));
    let report = reconcile_kappa(&m1, 2);
    println!("adopted coefficients agree on {} cases: {}", report.rows.len(), report.adopted_all_agree());
    println!("printed closed form disagrees on {} cases", report.printed_discrepancies().len());
    Ok(())
}
