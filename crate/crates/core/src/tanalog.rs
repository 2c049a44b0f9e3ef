//! Lusztig t-analogs of weight multiplicities for `A_l^(1)`.
//!
//! `m^lambda_mu(t) = sum_w sign(w) K_t(w(lambda+rho) - (mu+rho))`, where the
//! t-Kostant function `K_t` is tabulated on a box of simple-root coordinates.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactcore::series::level_one_factors;
use crate::exactcore::{colored_partitions, product_series, TPoly};
use crate::rootsys::{affine_weyl_elements_for, exponents_and_degrees, positive_affine_roots_up_to, AffineWeight};
use crate::Error;

/// `K_t(beta)` for every `beta = sum k_i alpha_i` with `0 <= k_i <= bounds[i]`.
#[derive(Clone, Debug)]
pub struct TKostantTable {
    rank: usize,
    bounds: Vec<usize>,
    data: Vec<TPoly>,
}

impl TKostantTable {
    pub fn new(rank: usize, bounds: &[usize]) -> Self {
        assert_eq!(bounds.len(), rank + 1);
        let size: usize = bounds.iter().map(|b| b + 1).product();
        let mut data = vec![TPoly::zero(); size];
        data[0] = TPoly::one();
        let mut table = TKostantTable { rank, bounds: bounds.to_vec(), data };
        let t = BigInt::from(1);
        for root in positive_affine_roots_up_to(rank, bounds[0]) {
            let alpha = root.root_coords(rank);
            if alpha.iter().zip(bounds).any(|(&a, &b)| a as usize > b) {
                continue;
            }
            let shift = table.offset(&alpha.iter().map(|&a| a as usize).collect::<Vec<_>>());
            for _ in 0..root.multiplicity {
                // multiply by 1/(1 - t e^alpha); beta - alpha precedes beta
                for idx in 0..size {
                    let beta = table.coords(idx);
                    if beta.iter().zip(&alpha).all(|(&b, &a)| b as i64 >= a) {
                        let prev = table.data[idx - shift].clone();
                        table.data[idx].add_scaled_shifted(&prev, &t, 1);
                    }
                }
            }
        }
        table
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, k: &[usize]) -> usize {
        let mut idx = 0;
        for (i, &ki) in k.iter().enumerate() {
            idx = idx * (self.bounds[i] + 1) + ki;
        }
        idx
    }

    fn coords(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.bounds.len()];
        for i in (0..self.bounds.len()).rev() {
            out[i] = idx % (self.bounds[i] + 1);
            idx /= self.bounds[i] + 1;
        }
        out
    }

    /// `K_t(beta)`; zero outside `Q_+`, `None` beyond the tabulated box.
    pub fn get(&self, k: &[i64]) -> Option<TPoly> {
        if k.iter().any(|&x| x < 0) {
            return Some(TPoly::zero());
        }
        if k.iter().zip(&self.bounds).any(|(&x, &b)| x as usize > b) {
            return None;
        }
        let u: Vec<usize> = k.iter().map(|&x| x as usize).collect();
        Some(self.data[self.offset(&u)].clone())
    }
}

/// t-analog of Kostant's partition function at `beta` (simple-root coordinates).
pub fn t_kostant(rank: usize, beta: &AffineWeight) -> TPoly {
    let Some(k) = beta.root_coords() else { return TPoly::zero() };
    if k.iter().any(|&x| x < 0) {
        return TPoly::zero();
    }
    let bounds: Vec<usize> = k.iter().map(|&x| x as usize).collect();
    TKostantTable::new(rank, &bounds).get(&k).expect("inside box")
}

/// Lusztig's t-analog `m^lambda_mu(t)`.
pub fn lusztig_poly(lambda: &AffineWeight, mu: &AffineWeight) -> Result<TPoly, Error> {
    let terms = affine_weyl_elements_for(lambda, mu)?;
    let rho = AffineWeight::rho(lambda.rank());
    let target = mu + &rho;
    let betas: Vec<(i32, Vec<i64>)> = terms
        .iter()
        .map(|t| (t.sign, (&t.image - &target).root_coords().expect("cone elements are integral")))
        .collect();
    let mut bounds = vec![0usize; lambda.rank() + 1];
    for (_, b) in &betas {
        for (m, &x) in bounds.iter_mut().zip(b) {
            *m = (*m).max(x as usize);
        }
    }
    let table = TKostantTable::new(lambda.rank(), &bounds);
    Ok(alternating_sum(&table, &betas))
}

fn alternating_sum(table: &TKostantTable, betas: &[(i32, Vec<i64>)]) -> TPoly {
    let parts: Vec<TPoly> = betas
        .par_iter()
        .map(|(sign, b)| {
            let k = table.get(b).expect("beta inside the table");
            if *sign > 0 { k } else { -&k }
        })
        .collect();
    parts.iter().fold(TPoly::zero(), |acc, p| &acc + p)
}

#[derive(Clone, Debug, Serialize)]
pub struct Level1Row {
    pub n: usize,
    pub lusztig: String,
    pub product: String,
    pub at_one: String,
    pub colored_partitions: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Level1Report {
    pub rank: usize,
    pub rows: Vec<Level1Row>,
}

impl Level1Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Lusztig polynomials `m^{Lambda_0}_{Lambda_0 - n delta}` for `n <= n_max`,
/// sharing one t-Kostant table.
pub fn level_one_lusztig(rank: usize, n_max: usize) -> Result<Vec<TPoly>, Error> {
    let table = TKostantTable::new(rank, &vec![n_max; rank + 1]);
    let lambda = AffineWeight::lambda0(rank);
    let target_shift = AffineWeight::rho(rank);
    (0..=n_max)
        .map(|n| {
            let mu = AffineWeight::level_one_weight(rank, n as i64);
            let target = &mu + &target_shift;
            let betas: Vec<(i32, Vec<i64>)> = affine_weyl_elements_for(&lambda, &mu)?
                .iter()
                .map(|t| (t.sign, (&t.image - &target).root_coords().expect("integral")))
                .collect();
            Ok(alternating_sum(&table, &betas))
        })
        .collect()
}

/// Compares `m^{Lambda_0}_{Lambda_0 - n delta}(t)` with the `q^n` coefficient
/// of `prod_k prod_j (1 - t^{d_k} q^j)^{-1}`.
pub fn verify_level1_identity(rank: usize, n_max: usize) -> Result<Level1Report, Error> {
    let (_, degrees) = exponents_and_degrees(rank);
    let t_max = (rank + 1) * n_max;
    let series = product_series(&level_one_factors(&degrees, n_max), t_max, n_max)?;
    let lusztig = level_one_lusztig(rank, n_max)?;
    let rows = lusztig
        .into_iter()
        .enumerate()
        .map(|(n, m)| {
            let p = series.q_coeff(n);
            let cp = colored_partitions(rank as u32, n);
            let pass = m == p && m.eval_one() == cp && m.all_nonnegative();
            Level1Row {
                n,
                lusztig: m.to_string(),
                product: p.to_string(),
                at_one: m.eval_one().to_string(),
                colored_partitions: cp.to_string(),
                pass,
            }
        })
        .collect();
    Ok(Level1Report { rank, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::qi;
    use crate::rootsys::RootSystemA;

    #[test]
    fn kostant_small_values() {
        assert_eq!(t_kostant(1, &AffineWeight::zero(1)), TPoly::one());
        let a1 = AffineWeight::new(RootSystemA::new(2).simple_roots()[0].clone(), qi(0), qi(0));
        assert_eq!(t_kostant(2, &a1), TPoly::monomial(1));
        assert_eq!(t_kostant(1, &AffineWeight::delta(1)).to_string(), "t + t^2");
        assert!(t_kostant(1, &(-&AffineWeight::delta(1))).is_zero());
    }

    /// Brute force: count multisets of positive roots (with colours for the
    /// imaginary ones) summing to beta, weighted by t^{number of parts}.
    fn brute_kostant(rank: usize, k: &[i64]) -> TPoly {
        let mut parts: Vec<Vec<i64>> = Vec::new();
        for r in positive_affine_roots_up_to(rank, k[0] as usize) {
            for _ in 0..r.multiplicity {
                parts.push(r.root_coords(rank));
            }
        }
        fn rec(rest: &mut Vec<i64>, parts: &[Vec<i64>], from: usize, used: usize, out: &mut TPoly) {
            if rest.iter().all(|&x| x == 0) {
                out.add_scaled_shifted(&TPoly::one(), &BigInt::from(1), used);
                return;
            }
            for i in from..parts.len() {
                if parts[i].iter().zip(rest.iter()).all(|(a, b)| a <= b) {
                    for (x, a) in rest.iter_mut().zip(&parts[i]) {
                        *x -= a;
                    }
                    rec(rest, parts, i, used + 1, out);
                    for (x, a) in rest.iter_mut().zip(&parts[i]) {
                        *x += a;
                    }
                }
            }
        }
        let mut out = TPoly::zero();
        rec(&mut k.to_vec(), &parts, 0, 0, &mut out);
        out
    }

    #[test]
    fn kostant_matches_brute_force() {
        let table = TKostantTable::new(2, &[2, 2, 2]);
        for k0 in 0..=2 {
            for k1 in 0..=2 {
                for k2 in 0..=2 {
                    let k = [k0, k1, k2];
                    assert_eq!(table.get(&k).unwrap(), brute_kostant(2, &k), "beta {k:?}");
                }
            }
        }
    }

    #[test]
    fn lusztig_examples() {
        let l0 = AffineWeight::lambda0(1);
        assert_eq!(lusztig_poly(&l0, &l0).unwrap(), TPoly::one());
        let m = lusztig_poly(&l0, &AffineWeight::level_one_weight(1, 1)).unwrap();
        assert_eq!(m, TPoly::monomial(2));
        let m = lusztig_poly(&l0, &AffineWeight::level_one_weight(1, 2)).unwrap();
        assert_eq!(m.to_string(), "t^2 + t^4");
        let m = lusztig_poly(&AffineWeight::lambda0(2), &AffineWeight::level_one_weight(2, 2)).unwrap();
        assert_eq!(m.to_string(), "t^2 + t^3 + t^4 + t^5 + t^6");
    }

    #[test]
    fn identity_rank_one() {
        let report = verify_level1_identity(1, 3).unwrap();
        let got: Vec<&str> = report.rows.iter().map(|r| r.product.as_str()).collect();
        assert_eq!(got, ["1", "t^2", "t^2 + t^4", "t^2 + t^4 + t^6"]);
        assert!(report.all_pass());
    }
}
