//! The Brylinski filtration on the W-span `Z` of the vacuum of `M_sigma`.
//!
//! `F^d` is the joint kernel of all products of `d + 1` positive twisted
//! Heisenberg modes. On `Z_n` it is computed in the coordinates of the PBW
//! vectors of energy `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactcore::{colored_partitions, product_series, CycScalar, EchelonBasis, SparseVec};
use crate::exactcore::series::level_one_factors;
use crate::heisenberg::{Fock, Monomial};
use crate::rootsys::exponents_and_degrees;
use crate::twistedfock::{TwistedModule, TwistedState};
use crate::walgebra::{PbwWord, WGeneratorSet};
use crate::Error;

/// A product of positive modes `(label, ticks)`, sorted.
pub type ModeWord = Vec<(usize, i64)>;

/// The PBW vectors of energy `n` and their coordinates in `M_sigma`.
pub struct ZSlice {
    pub n: usize,
    pub words: Vec<PbwWord>,
    pub states: Vec<TwistedState>,
    pub index: BTreeMap<Monomial, usize>,
    pub coords: Vec<SparseVec<CycScalar>>,
}

impl ZSlice {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `sum_i d_{p_i}` of every word.
    pub fn word_degrees(&self, gens: &WGeneratorSet) -> Vec<usize> {
        self.words.iter().map(|w| w.iter().map(|&(p, _)| gens.get(p).degree).sum()).collect()
    }

    /// The vector with the given coordinates in the PBW basis.
    pub fn combine(&self, c: &[CycScalar]) -> TwistedState {
        let mut out = Fock::zero();
        for (x, s) in c.iter().zip(&self.states) {
            out.add_scaled(s, x);
        }
        out
    }
}

/// Evaluates every PBW word of energy `n`, checking independence and the count.
pub fn build_z_slice(module: &TwistedModule, gens: &WGeneratorSet, n: usize) -> Result<ZSlice, Error> {
    let h = module.coxeter_number();
    let (words, states): (Vec<_>, Vec<_>) = module.pbw_vectors(gens, n).into_iter().unzip();
    let index: BTreeMap<Monomial, usize> =
        module.basis(n as i64 * h).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let coords: Vec<SparseVec<CycScalar>> = states.iter().map(|s| s.coordinates(&index)).collect();
    let mut ech = EchelonBasis::new();
    for c in &coords {
        ech.insert(c);
    }
    let expected = colored_partitions(module.rank() as u32, n);
    if ech.rank() != words.len() || BigInt::from(words.len()) != expected {
        return Err(Error::Verification(format!(
            "Z_{n}: {} words of rank {}, expected {expected}",
            words.len(),
            ech.rank()
        )));
    }
    Ok(ZSlice { n, words, states, index, coords })
}

/// Multisets of `len` positive legal modes of total energy at most `budget`
/// (in units, not ticks).
pub fn positive_mode_products(rank: usize, len: usize, budget: usize) -> Vec<ModeWord> {
    let h = rank as i64 + 1;
    let cap = budget as i64 * h;
    let mut symbols = Vec::new();
    for l in 0..rank {
        let coset = (-(l as i64 + 1)).rem_euclid(h);
        let mut t = if coset == 0 { h } else { coset };
        while t <= cap {
            symbols.push((l, t));
            t += h;
        }
    }
    symbols.sort();
    let mut out = Vec::new();
    fn rec(len: usize, rest: i64, syms: &[(usize, i64)], from: usize, cur: &mut ModeWord, out: &mut Vec<ModeWord>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in from..syms.len() {
            if syms[i].1 <= rest {
                cur.push(syms[i]);
                rec(len, rest - syms[i].1, syms, i, cur, out);
                cur.pop();
            }
        }
    }
    if len > 0 {
        rec(len, cap, &symbols, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Applies a product of modes (they commute) to `v`.
pub fn apply_mode_word(module: &TwistedModule, word: &[(usize, i64)], v: &TwistedState) -> TwistedState {
    let mut out = v.clone();
    for &(l, t) in word {
        if out.is_zero() {
            break;
        }
        out = module.space().apply_mode(l, t, &out);
    }
    out
}

/// `F^d` of a slice as a basis of coordinate vectors against the PBW basis,
/// using operator words of energy at most `budget`.
pub fn brylinski_subspace(module: &TwistedModule, slice: &ZSlice, d: i64, budget: usize) -> Vec<Vec<CycScalar>> {
    if d < 0 {
        return Vec::new();
    }
    let ops = positive_mode_products(module.rank(), d as usize + 1, budget);
    let images: Vec<Vec<(usize, TwistedState)>> = ops
        .par_iter()
        .map(|op| {
            slice
                .states
                .iter()
                .enumerate()
                .map(|(j, s)| (j, apply_mode_word(module, op, s)))
                .filter(|(_, x)| !x.is_zero())
                .collect()
        })
        .collect();
    let mut rows: BTreeMap<(usize, Monomial), Vec<(usize, CycScalar)>> = BTreeMap::new();
    for (o, per_state) in images.iter().enumerate() {
        for (j, img) in per_state {
            for (m, c) in img.terms() {
                rows.entry((o, m.clone())).or_default().push((*j, c.clone()));
            }
        }
    }
    let mut ech = EchelonBasis::new();
    for row in rows.values() {
        ech.insert(row);
    }
    ech.nullspace(slice.len())
}

/// `F^d` computed instead as the vectors of `Z_n` whose monomials all have at
/// most `d` factors.
pub fn degree_filtration(slice: &ZSlice, d: i64) -> Vec<Vec<CycScalar>> {
    let mut rows: BTreeMap<&Monomial, Vec<(usize, CycScalar)>> = BTreeMap::new();
    for (j, s) in slice.states.iter().enumerate() {
        for (m, c) in s.terms() {
            if m.len() as i64 > d {
                rows.entry(m).or_default().push((j, c.clone()));
            }
        }
    }
    let mut ech = EchelonBasis::new();
    for row in rows.values() {
        ech.insert(row);
    }
    ech.nullspace(slice.len())
}

/// Whether every product of `d + 1` positive modes kills `v`.
pub fn in_filtration(module: &TwistedModule, v: &TwistedState, d: i64) -> bool {
    if v.is_zero() {
        return true;
    }
    if d < 0 {
        return false;
    }
    let h = module.coxeter_number();
    let budget = (v.max_ticks() + h - 1) / h;
    positive_mode_products(module.rank(), d as usize + 1, budget as usize)
        .iter()
        .all(|op| apply_mode_word(module, op, v).is_zero())
}

fn echelon(vs: &[Vec<CycScalar>]) -> EchelonBasis<CycScalar> {
    let mut ech = EchelonBasis::new();
    for v in vs {
        ech.insert(&crate::exactcore::linalg::sparse_from_dense(v));
    }
    ech
}

fn unit(j: usize) -> SparseVec<CycScalar> {
    vec![(j, CycScalar::one())]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceRow {
    pub n: usize,
    pub words: usize,
    pub expected: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationCell {
    pub n: usize,
    pub d: usize,
    pub dim: usize,
    pub graded: usize,
    pub expected: String,
    /// Words with `sum d_p = d` lie in `F^d`.
    pub pbw_in_fd: bool,
    /// Words with `sum d_p <= d` span `F^d`.
    pub pbw_spans: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub rank: usize,
    pub n_max: usize,
    pub slices: Vec<SliceRow>,
    pub cells: Vec<FiltrationCell>,
    /// `F^{d-1} <= F^d` held for every computed pair.
    pub increasing: bool,
    /// Recomputing with energy budget `n + 1` changed nothing.
    pub idempotent: bool,
    /// The graded dimensions sum to `dim Z_n` for every `n`.
    pub totals: bool,
}

impl FiltrationReport {
    pub fn all_pass(&self) -> bool {
        self.increasing
            && self.idempotent
            && self.totals
            && self.slices.iter().all(|s| s.pass)
            && self.cells.iter().all(|c| c.pass)
    }
}

/// Graded dimensions of `F^d Z_n` against the `t^d q^n` coefficients of
/// `prod_k prod_j (1 - t^{d_k} q^j)^{-1}`, with the spanning checks on the
/// PBW subsets. `d_max` caps the filtration degrees examined.
pub fn verify_main_theorem(
    module: &TwistedModule,
    gens: &WGeneratorSet,
    n_max: usize,
    d_max: Option<usize>,
) -> Result<FiltrationReport, Error> {
    let rank = module.rank();
    let h = rank + 1;
    let (_, degrees) = exponents_and_degrees(rank);
    let series = product_series(&level_one_factors(&degrees, n_max), h * n_max.max(1), n_max)?;
    let mut slices = Vec::new();
    let mut cells = Vec::new();
    let mut increasing = true;
    let mut idempotent = true;
    let mut totals = true;
    for n in 0..=n_max {
        let slice = match build_z_slice(module, gens, n) {
            Ok(s) => s,
            Err(_) => {
                slices.push(SliceRow { n, words: 0, expected: colored_partitions(rank as u32, n).to_string(), pass: false });
                continue;
            }
        };
        slices.push(SliceRow { n, words: slice.len(), expected: slice.len().to_string(), pass: true });
        let wdeg = slice.word_degrees(gens);
        let top = (h * n).min(d_max.unwrap_or(usize::MAX));
        let subspaces: Vec<Vec<Vec<CycScalar>>> =
            (0..=top).into_par_iter().map(|d| brylinski_subspace(module, &slice, d as i64, n)).collect();
        let mut prev_dim = 0;
        let mut prev = EchelonBasis::new();
        let mut sum = 0;
        for (d, fd) in subspaces.iter().enumerate() {
            let ech = echelon(fd);
            if d > 0 {
                increasing &= prev.reduced_rows().values().all(|r| ech.contains(r));
            }
            if d == top && brylinski_subspace(module, &slice, d as i64, n + 1).len() != fd.len() {
                idempotent = false;
            }
            let dim = fd.len();
            let graded = dim.saturating_sub(prev_dim);
            sum += graded;
            let expected = series.coeff(d, n);
            let designated: Vec<usize> = (0..slice.len()).filter(|&j| wdeg[j] <= d).collect();
            let pbw_in_fd = designated.iter().filter(|&&j| wdeg[j] == d).all(|&j| ech.contains(&unit(j)));
            let pbw_spans = designated.iter().all(|&j| ech.contains(&unit(j))) && designated.len() == dim;
            let pass = expected == crate::exactcore::qi(graded as i64) && pbw_in_fd && pbw_spans && dim >= prev_dim;
            cells.push(FiltrationCell { n, d, dim, graded, expected: expected.to_string(), pbw_in_fd, pbw_spans, pass });
            prev_dim = dim;
            prev = ech;
        }
        if d_max.map_or(true, |m| m >= h * n) {
            totals &= sum == slice.len();
        }
    }
    Ok(FiltrationReport { rank, n_max, slices, cells, increasing, idempotent, totals })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ModeShiftReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl ModeShiftReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// On every computed `F^d Z_n`, `n <= n_max`: positive Heisenberg modes land
/// in `F^{d-1}`, negative ones in `F^{d+1}`, and `omega^(p)_k(sigma)` lands in
/// `F^{d+d_p}` for `k` in `-2..=n`.
pub fn verify_mode_shifts(module: &TwistedModule, gens: &WGeneratorSet, n_max: usize) -> Result<ModeShiftReport, Error> {
    let rank = module.rank();
    let h = module.coxeter_number();
    let mut report = ModeShiftReport::default();
    let eig: Vec<TwistedState> = gens.generators.iter().map(|g| module.to_eigen(&g.state)).collect();
    for n in 0..=n_max {
        let slice = build_z_slice(module, gens, n)?;
        for d in 0..=(h as usize * n) as i64 {
            let fd = brylinski_subspace(module, &slice, d, n);
            for c in &fd {
                let v = slice.combine(c);
                for l in 0..rank {
                    for t in 1..=h {
                        if module.space().is_legal(l, t) {
                            report.checks += 1;
                            let down = module.space().apply_mode(l, t, &v);
                            if !in_filtration(module, &down, d - 1) {
                                report.failures.push(format!("b{}({t}/{h}) on F^{d} Z_{n}", l + 1));
                            }
                        }
                        if module.space().is_legal(l, -t) {
                            report.checks += 1;
                            let up = module.space().apply_mode(l, -t, &v);
                            if !in_filtration(module, &up, d + 1) {
                                report.failures.push(format!("b{}(-{t}/{h}) on F^{d} Z_{n}", l + 1));
                            }
                        }
                    }
                }
                for (g, u) in gens.generators.iter().zip(&eig) {
                    for k in -2..=n as i64 {
                        report.checks += 1;
                        let w = module.engine().mode(u, (k + g.degree as i64 - 1) * h, &v);
                        if !in_filtration(module, &w, d + g.degree as i64) {
                            report.failures.push(format!("omega{}_{k} on F^{d} Z_{n}", g.p));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walgebra::choose_generators;

    #[test]
    fn mode_products() {
        assert_eq!(positive_mode_products(1, 1, 1), vec![vec![(0, 1)]]);
        assert_eq!(positive_mode_products(1, 2, 1), vec![vec![(0, 1), (0, 1)]]);
        for rank in 1..=3 {
            for i in 1..=3 {
                assert!(positive_mode_products(rank, i, 0).is_empty());
            }
        }
        // l = 2: legal ticks 2, 5, .. for label 0 and 1, 4, .. for label 1
        assert_eq!(positive_mode_products(2, 1, 1), vec![vec![(0, 2)], vec![(1, 1)]]);
    }

    #[test]
    fn slices() {
        let gens = choose_generators(1).unwrap();
        let m = TwistedModule::new(1);
        assert_eq!(build_z_slice(&m, &gens, 0).unwrap().len(), 1);
        let s2 = build_z_slice(&m, &gens, 2).unwrap();
        assert_eq!(s2.words, vec![vec![(1, -2)], vec![(1, -1), (1, -1)]]);
        assert!(brylinski_subspace(&m, &s2, -1, 2).is_empty());
        assert_eq!(brylinski_subspace(&m, &s2, 2, 2).len(), 1);
        assert_eq!(brylinski_subspace(&m, &s2, 4, 2).len(), 2);
        for d in 0..=4 {
            assert_eq!(brylinski_subspace(&m, &s2, d, 2).len(), degree_filtration(&s2, d).len());
        }
        let gens2 = choose_generators(2).unwrap();
        let m2 = TwistedModule::new(2);
        assert_eq!(build_z_slice(&m2, &gens2, 3).unwrap().len(), 10);
    }

    #[test]
    fn graded_filtration_small() {
        let gens = choose_generators(1).unwrap();
        let m = TwistedModule::new(1);
        let rep = verify_main_theorem(&m, &gens, 3, None).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        let rep0 = verify_main_theorem(&m, &gens, 0, None).unwrap();
        assert_eq!(rep0.cells.len(), 1);
        assert_eq!(rep0.cells[0].graded, 1);
    }

    #[test]
    fn mode_shifts_small() {
        let gens = choose_generators(1).unwrap();
        let m = TwistedModule::new(1);
        let rep = verify_mode_shifts(&m, &gens, 2).unwrap();
        assert!(rep.checks > 0);
        assert!(rep.pass(), "{:?}", rep.failures);
    }

    #[test]
    fn filtration_matches_degree() {
        let gens = choose_generators(2).unwrap();
        let m = TwistedModule::new(2);
        let s = build_z_slice(&m, &gens, 2).unwrap();
        for d in 0..=6 {
            assert_eq!(brylinski_subspace(&m, &s, d, 2).len(), degree_filtration(&s, d).len());
        }
        let v = m.space().apply_mode(0, -1, &Fock::vacuum());
        assert!(in_filtration(&m, &v, 1));
        assert!(!in_filtration(&m, &v, 0));
        assert!(in_filtration(&m, &Fock::zero(), -1));
    }
}
