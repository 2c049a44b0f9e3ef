//! Modes of states of the Heisenberg vertex algebra: nth products, the
//! Virasoro action and the screening zero-modes.

use wbasis::exactcore::{q, qi};
use wbasis::heisenberg::{
    conformal_vector, generator_state, heis_mode, nth_product, screening_zero_mode, FockState, VirasoroAction,
};
use wbasis::rootsys::RootSystemA;

fn main() {
    let rank = 2;
    let rs = RootSystemA::new(rank);
    let a = rs.simple_roots()[0].clone();
    let b = rs.simple_roots()[1].clone();
    let vac = FockState::vacuum(rank);

    let hb = heis_mode(&b, -1, &vac);
    println!("a_(1) b_(-1)|0> = {}", heis_mode(&a, 1, &hb).state);
    let ha = FockState::new(vac.lambda.clone(), generator_state(&a));
    println!("(a_(-1)|0>)_(1) a_(-1)|0> = {}", nth_product(&generator_state(&a), 1, &ha).state);

    let omega = conformal_vector(rank);
    println!("omega = {omega}");

    let lambda = vec![q(1, 3), q(1, 3), q(-2, 3)];
    let vir = VirasoroAction::new(&lambda);
    let top = FockState::highest(lambda.clone());
    println!("L_0 |lambda> = {}", vir.l(0, &top.state));
    let v = heis_mode(&a, -2, &top);
    println!("L_0 a_(-2)|lambda> = {}", vir.l(0, &v.state));

    for alpha in rs.roots() {
        let s = screening_zero_mode(&alpha, &FockState::new(vec![qi(0); rank + 1], omega.clone()));
        let coords: Vec<String> = alpha.iter().map(|x| x.to_string()).collect();
        println!("screening ({}) kills omega: {}", coords.join(", "), s.is_zero());
    }
}
