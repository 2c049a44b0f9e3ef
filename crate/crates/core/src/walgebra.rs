//! The W-algebra of `sl(l+1)` as the joint kernel of the screening zero-modes
//! on the Heisenberg vertex algebra, its free generators and characters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::exactcore::{product_series, qi, EchelonBasis, ProductFactor, QSeries, Q};
use crate::heisenberg::{conformal_vector, screening_zero_mode, vacuum_space, FieldEngine, Fock, FockState};
use crate::rootsys::{exponents_and_degrees, RootSystemA};
use crate::Error;

/// Basis of `{u in F_d : e^alpha_(0) u = 0 for every root alpha}`.
pub fn walg_graded_basis(rank: usize, d: usize) -> Vec<Fock<Q>> {
    let space = vacuum_space(rank);
    let cols = space.basis(d as i64);
    let roots = RootSystemA::new(rank).roots();
    let vac = vec![Q::zero(); rank + 1];
    // image of every column under every screening, computed in parallel
    let images: Vec<Vec<Fock<Q>>> = cols
        .par_iter()
        .map(|m| {
            let v = FockState::new(vac.clone(), Fock::monomial(m.clone(), qi(1)));
            roots.iter().map(|a| screening_zero_mode(a, &v).state).collect()
        })
        .collect();
    let mut rows: BTreeMap<(usize, Vec<(usize, i64)>), Vec<(usize, Q)>> = BTreeMap::new();
    for (c, per_root) in images.iter().enumerate() {
        for (r, img) in per_root.iter().enumerate() {
            for (m, x) in img.terms() {
                rows.entry((r, m.clone())).or_default().push((c, x.clone()));
            }
        }
    }
    let mut ech = EchelonBasis::new();
    for row in rows.values() {
        ech.insert(row);
    }
    ech.nullspace(cols.len())
        .into_iter()
        .map(|v| {
            let mut f = Fock::zero();
            for (c, x) in v.into_iter().enumerate() {
                f.add_term(cols[c].clone(), x);
            }
            f
        })
        .collect()
}

/// Coefficient of `q^d` in `prod_k prod_{n >= d_k} (1 - q^n)^{-1}`.
pub fn expected_walg_dim(rank: usize, d: usize) -> BigInt {
    let (_, degrees) = exponents_and_degrees(rank);
    let factors: Vec<ProductFactor> =
        degrees.iter().flat_map(|&dk| (dk..=d.max(1)).map(|n| ProductFactor::new(0, n, 1))).collect();
    let s = product_series(&factors, 0, d).expect("no constant factors");
    s.coeff(0, d).to_integer()
}

/// A word `((p_1, k_1), .., (p_r, k_r))` with generator indices `p` (1-based)
/// and renumbered modes `k`, ordered `p_1 >= .. >= p_r` with `k_i <= k_{i+1}`
/// on ties.
pub type PbwWord = Vec<(usize, i64)>;

/// All words of total depth `sum(-k_i) = energy` with `k <= -min_depth(p)`.
pub fn pbw_words(rank: usize, energy: usize, min_depth: impl Fn(usize) -> i64) -> Vec<PbwWord> {
    // letters sorted in word order: p descending, then k ascending
    let mut letters: Vec<(usize, i64)> = Vec::new();
    for p in (1..=rank).rev() {
        for depth in (min_depth(p)..=energy as i64).rev() {
            letters.push((p, -depth));
        }
    }
    let mut out = Vec::new();
    fn rec(rest: i64, letters: &[(usize, i64)], from: usize, cur: &mut PbwWord, out: &mut Vec<PbwWord>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..letters.len() {
            if -letters[i].1 <= rest {
                cur.push(letters[i]);
                rec(rest + letters[i].1, letters, i, cur, out);
                cur.pop();
            }
        }
    }
    rec(energy as i64, &letters, 0, &mut Vec::new(), &mut out);
    out
}

/// Checks the ordering conditions on a word.
pub fn validate_word(rank: usize, word: &[(usize, i64)], min_depth: impl Fn(usize) -> i64) -> Result<(), Error> {
    for (i, &(p, k)) in word.iter().enumerate() {
        if p == 0 || p > rank {
            return Err(Error::InvalidWord(format!("generator index {p} out of range")));
        }
        if -k < min_depth(p) {
            return Err(Error::InvalidWord(format!("mode {k} of generator {p} is not a creation mode")));
        }
        if i > 0 {
            let (pp, kp) = word[i - 1];
            if pp < p || (pp == p && kp > k) {
                return Err(Error::InvalidWord(format!("letters {:?} and {:?} out of order", word[i - 1], word[i])));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WGenerator {
    pub p: usize,
    pub degree: usize,
    pub state: Fock<Q>,
}

/// Free generators `omega^(1) .. omega^(l)` of the W-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WGeneratorSet {
    pub rank: usize,
    pub generators: Vec<WGenerator>,
}

impl WGeneratorSet {
    pub fn degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn get(&self, p: usize) -> &WGenerator {
        &self.generators[p - 1]
    }
}

/// Applies a word of renumbered modes `omega^p_k = omega^p_(k + d_p - 1)`
/// (rightmost letter first) to `|0>` in `F`.
pub fn untwisted_pbw_state(engine: &FieldEngine<Q>, gens: &[WGenerator], word: &[(usize, i64)]) -> Fock<Q> {
    let mut v = Fock::vacuum();
    for &(p, k) in word.iter().rev() {
        let g = &gens[p - 1];
        v = engine.mode(&g.state, k + g.degree as i64 - 1, &v);
    }
    v
}

/// Picks `omega^(p)` in degree `p + 1` outside the span of PBW states of the
/// earlier generators; `omega^(1)` is the conformal vector.
pub fn choose_generators(rank: usize) -> Result<WGeneratorSet, Error> {
    let engine = FieldEngine::new(vacuum_space(rank));
    let mut gens: Vec<WGenerator> = Vec::new();
    let (_, degrees) = exponents_and_degrees(rank);
    for (idx, &d) in degrees.iter().enumerate() {
        let p = idx + 1;
        let kernel = walg_graded_basis(rank, d);
        let cols = vacuum_space(rank).basis(d as i64);
        let index: BTreeMap<Vec<(usize, i64)>, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut span = EchelonBasis::new();
        let known = gens.len();
        for word in pbw_words(known.max(1), d, |q| gens.get(q - 1).map_or(i64::MAX, |g| g.degree as i64)) {
            if word.iter().any(|&(q, _)| q > known) {
                continue;
            }
            span.insert(&untwisted_pbw_state(&engine, &gens, &word).coordinates(&index));
        }
        let chosen = if p == 1 {
            let omega = conformal_vector(rank);
            if span.contains(&omega.coordinates(&index)) {
                return Err(Error::EmptyCoset(d));
            }
            omega
        } else {
            kernel
                .into_iter()
                .find(|v| !span.contains(&v.coordinates(&index)))
                .ok_or(Error::EmptyCoset(d))?
        };
        gens.push(WGenerator { p, degree: d, state: chosen });
    }
    Ok(WGeneratorSet { rank, generators: gens })
}

/// Rank of the PBW states of weight `d` and whether they all lie in the
/// screening kernel.
pub fn pbw_span_check(gens: &WGeneratorSet, d: usize) -> (usize, bool) {
    let rank = gens.rank;
    let engine = FieldEngine::new(vacuum_space(rank));
    let cols = vacuum_space(rank).basis(d as i64);
    let index: BTreeMap<Vec<(usize, i64)>, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let kernel = walg_graded_basis(rank, d);
    let mut kspan = EchelonBasis::new();
    for v in &kernel {
        kspan.insert(&v.coordinates(&index));
    }
    let mut span = EchelonBasis::new();
    let mut inside = true;
    for word in pbw_words(rank, d, |p| gens.get(p).degree as i64) {
        let coords = untwisted_pbw_state(&engine, &gens.generators, &word).coordinates(&index);
        inside &= kspan.contains(&coords);
        span.insert(&coords);
    }
    (span.rank(), inside)
}

/// `q^{|lambda+rho|^2/2} / phi(q)^l` for a finite weight `lambda`.
pub fn verma_character(lambda: &[Q], rank: usize, n_max: usize) -> QSeries {
    let rho = RootSystemA::new(rank).rho();
    let shifted: Vec<Q> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let norm: Q = shifted.iter().map(|x| x * x).sum();
    QSeries::eta_quotient(norm / qi(2), rank as u32, n_max)
}

/// `q^{sum s_i(s_i - 1)/2} / phi(q)^{l+1}`; requires `s_i - s_j` non-integral.
pub fn primitive_character(s: &[Q], n_max: usize) -> Result<QSeries, Error> {
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if (&s[i] - &s[j]).is_integer() {
                return Err(Error::IntegralDifference { i, j });
            }
        }
    }
    let offset: Q = s.iter().map(|x| x * (x - qi(1)) / qi(2)).sum();
    Ok(QSeries::eta_quotient(offset, s.len() as u32, n_max))
}

/// Number of PBW words in the untwisted sense (`k <= -d_p`) of weight `d`.
pub fn count_untwisted_words(rank: usize, d: usize) -> usize {
    pbw_words(rank, d, |p| p as i64 + 1).len()
}
