//! The principally twisted Fock space `M_sigma` and the twisted fields of
//! states of the Heisenberg vertex algebra.
//!
//! Labels are the Coxeter eigenvectors `v_m`, `m = 1..l`, stored as `m - 1`,
//! with `<v_m, v_m'> = h` when `m + m' = 0 mod h`. The mode `b^(m)_(j)` is
//! legal iff `h j = -m mod h`, and modes are measured in ticks of `1/h`.
//! Energies are relative: the vacuum sits at energy 0.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use parking_lot::RwLock;
use rayon::prelude::*;

use crate::exactcore::rational::format_q;
use crate::exactcore::{generalized_binomial, int_binomial, q, qi, CycScalar, Scalar, Q};
use crate::heisenberg::fock::monomial_with;
use crate::heisenberg::{borcherds_defect_generic, conformal_vector, FieldEngine, Fock, HeisSpace, Monomial, Strategy};
use crate::rootsys::RootSystemA;
use crate::walgebra::{pbw_words, validate_word, PbwWord, WGeneratorSet};
use crate::Error;

pub type TwistedState = Fock<CycScalar>;

/// `M_sigma` as a [`HeisSpace`] over `Q(zeta_h)`.
pub fn twisted_space(rank: usize) -> HeisSpace<CycScalar> {
    let h = rank as i64 + 1;
    let gram = (1..=rank)
        .map(|m| {
            (1..=rank)
                .map(|m2| if (m + m2) as i64 % h == 0 { CycScalar::rational(qi(h)) } else { CycScalar::zero() })
                .collect()
        })
        .collect();
    let cosets = (1..=rank).map(|m| (-(m as i64)).rem_euclid(h)).collect();
    HeisSpace { denom: h, gram, cosets, zero_modes: vec![CycScalar::zero(); rank] }
}

/// Converts a mode value to ticks of `1/denom`.
pub fn to_ticks(k: &Q, denom: i64) -> Result<i64, Error> {
    let t = k * qi(denom);
    if !t.is_integer() {
        return Err(Error::OffLattice { value: format_q(k), denom });
    }
    Ok(t.to_integer().try_into().expect("small mode"))
}

pub struct TwistedModule {
    rank: usize,
    h: i64,
    /// Eigen coordinates of each simple root.
    coords: Vec<Vec<CycScalar>>,
    engine: FieldEngine<CycScalar>,
    algebra: FieldEngine<CycScalar>,
    omega: TwistedState,
    eigen_cache: RwLock<HashMap<Monomial, TwistedState>>,
}

impl TwistedModule {
    pub fn new(rank: usize) -> Self {
        let rs = RootSystemA::new(rank);
        let cox = rs.coxeter();
        let coords = rs.simple_roots().iter().map(|a| cox.eigen_coords(a)).collect();
        let engine = FieldEngine::new(twisted_space(rank));
        let algebra = FieldEngine::new(engine.algebra().clone());
        let mut out = TwistedModule {
            rank,
            h: rank as i64 + 1,
            coords,
            engine,
            algebra,
            omega: Fock::zero(),
            eigen_cache: RwLock::new(HashMap::new()),
        };
        out.omega = out.to_eigen(&conformal_vector(rank));
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coxeter_number(&self) -> i64 {
        self.h
    }

    pub fn space(&self) -> &HeisSpace<CycScalar> {
        self.engine.module()
    }

    pub fn engine(&self) -> &FieldEngine<CycScalar> {
        &self.engine
    }

    /// The untwisted engine on the eigen-labelled vertex algebra.
    pub fn algebra_engine(&self) -> &FieldEngine<CycScalar> {
        &self.algebra
    }

    /// Rewrites a state of `F` (simple-root labels) in eigen labels.
    pub fn to_eigen(&self, u: &Fock<Q>) -> TwistedState {
        let mut out = Fock::zero();
        for (m, c) in u.terms() {
            out.add_scaled(&self.expand_monomial(m), &CycScalar::rational(c.clone()));
        }
        out
    }

    fn expand_monomial(&self, m: &Monomial) -> TwistedState {
        if let Some(hit) = self.eigen_cache.read().get(m) {
            return hit.clone();
        }
        let mut acc: TwistedState = Fock::vacuum();
        for &(i, t) in m {
            let mut next = Fock::zero();
            for (mono, c) in acc.terms() {
                for (e, x) in self.coords[i].iter().enumerate() {
                    if !x.is_zero() {
                        next.add_term(monomial_with(mono, (e, t)), c.times(x));
                    }
                }
            }
            acc = next;
        }
        self.eigen_cache.write().insert(m.clone(), acc.clone());
        acc
    }

    /// Monomial basis of the slice of energy `ticks / h`.
    pub fn basis(&self, ticks: i64) -> Vec<Monomial> {
        self.space().basis(ticks)
    }

    /// Every basis monomial of energy at most `max_ticks / h`, as states.
    pub fn sample_states(&self, max_ticks: i64) -> Vec<TwistedState> {
        (0..=max_ticks).flat_map(|t| self.basis(t)).map(|m| Fock::monomial(m, CycScalar::one())).collect()
    }

    /// `b^(m)_(p) v` for an eigen-label `m` in `1..=l`.
    pub fn heis_mode(&self, m: usize, p: &Q, v: &TwistedState) -> Result<TwistedState, Error> {
        let ticks = to_ticks(p, self.h)?;
        if m == 0 || m > self.rank || !self.space().is_legal(m - 1, ticks) {
            return Err(Error::IllegalMode { label: m, ticks, denom: self.h });
        }
        Ok(self.space().apply_mode(m - 1, ticks, v))
    }

    /// `u_(k) v` for a homogeneous state `u` of `F`.
    pub fn field_mode(&self, u: &Fock<Q>, k: &Q, v: &TwistedState) -> Result<TwistedState, Error> {
        self.field_mode_with(u, to_ticks(k, self.h)?, v, Strategy::default())
    }

    /// Same with the mode in ticks and an explicit recursion strategy.
    pub fn field_mode_with(&self, u: &Fock<Q>, ticks: i64, v: &TwistedState, st: Strategy) -> Result<TwistedState, Error> {
        if !u.is_zero() && u.homogeneous_ticks().is_none() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.engine.mode_with(&self.to_eigen(u), ticks, v, st))
    }

    /// `L_n(sigma) v = omega_(n+1) v`.
    pub fn virasoro(&self, n: i64, v: &TwistedState) -> TwistedState {
        self.engine.mode(&self.omega, (n + 1) * self.h, v)
    }

    /// `[L_m, L_n] v - (m-n) L_{m+n} v - delta_{m+n,0} (m^3-m)/12 l v`.
    pub fn virasoro_defect(&self, m: i64, n: i64, v: &TwistedState) -> TwistedState {
        let lhs = self.virasoro(m, &self.virasoro(n, v)).sub(&self.virasoro(n, &self.virasoro(m, v)));
        let mut rhs = self.virasoro(m + n, v).scale(&CycScalar::rational(qi(m - n)));
        if m + n == 0 {
            rhs.add_scaled(v, &CycScalar::rational(q(m * m * m - m, 12) * qi(self.rank as i64)));
        }
        lhs.sub(&rhs)
    }

    /// Borcherds defect for eigen-labelled `a, b`; `m`, `k` in ticks.
    pub fn borcherds_defect(&self, a: &TwistedState, b: &TwistedState, c: &TwistedState, (m, n, k): (i64, i64, i64)) -> TwistedState {
        borcherds_defect_generic(&self.engine, a, b, c, (m, n, k))
    }

    /// `omega^(p_1)_(k_1)(sigma) .. omega^(p_r)_(k_r)(sigma) |0>` with modes
    /// renumbered by conformal weight.
    pub fn pbw_vector(&self, gens: &WGeneratorSet, word: &[(usize, i64)]) -> Result<TwistedState, Error> {
        validate_word(self.rank, word, |_| 1)?;
        let eig: Vec<TwistedState> = gens.generators.iter().map(|g| self.to_eigen(&g.state)).collect();
        Ok(self.apply_word(gens, &eig, word))
    }

    fn apply_word(&self, gens: &WGeneratorSet, eig: &[TwistedState], word: &[(usize, i64)]) -> TwistedState {
        let mut v = Fock::vacuum();
        for &(p, k) in word.iter().rev() {
            let d = gens.get(p).degree as i64;
            v = self.engine.mode(&eig[p - 1], (k + d - 1) * self.h, &v);
        }
        v
    }

    /// All PBW words of energy `n` with their vectors, in word order.
    pub fn pbw_vectors(&self, gens: &WGeneratorSet, n: usize) -> Vec<(PbwWord, TwistedState)> {
        let eig: Vec<TwistedState> = gens.generators.iter().map(|g| self.to_eigen(&g.state)).collect();
        let words = pbw_words(self.rank, n, |_| 1);
        words.into_par_iter().map(|w| {
            let v = self.apply_word(gens, &eig, &w);
            (w, v)
        }).collect()
    }

    /// Smallest `N` with `a_(k) b = 0` for all `k >= N`.
    pub fn product_bound(&self, a: &TwistedState, b: &TwistedState) -> i64 {
        let top = a.max_ticks() + b.max_ticks();
        (0..=top).rev().find(|&k| !self.algebra.mode(a, k, b).is_zero()).map_or(0, |k| k + 1)
    }

    /// `(a_(n) b)_(r) c` through the product identity with the chosen
    /// coefficient rule, summing `a_(p) b_(q) c` over a window of `p` that is
    /// doubled once to confirm stabilisation.
    pub fn kappa_product(
        &self,
        a: &Fock<Q>,
        b: &Fock<Q>,
        n: i64,
        r: i64,
        c: &TwistedState,
        rule: KappaRule,
    ) -> Result<TwistedState, Error> {
        let (wa, wb) = match (a.homogeneous_ticks(), b.homogeneous_ticks()) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::NotHomogeneous),
        };
        let h = self.h;
        let ae = self.to_eigen(a);
        let be = self.to_eigen(b);
        let n_ab = self.product_bound(&ae, &be);
        let ec = c.max_ticks();
        let total = r + n * h;
        let mut by_coset: BTreeMap<i64, TwistedState> = BTreeMap::new();
        for (m, x) in ae.terms() {
            let coset = m.iter().map(|(l, _)| self.space().cosets[*l]).sum::<i64>().rem_euclid(h);
            by_coset.entry(coset).or_insert_with(Fock::zero).add_term(m.clone(), x.clone());
        }
        let sum = |window: i64| {
            let mut out = Fock::zero();
            for (&coset, part) in &by_coset {
                let legal = |min: i64| min + (coset - min).rem_euclid(h);
                let m0 = legal(ec + (wa - 1) * h + 1);
                let p_min = legal(total - ec - (wb - 1) * h);
                let mut p = p_min;
                while p <= p_min + window {
                    let coef = match rule {
                        KappaRule::Printed => kappa_printed(&q(p, h), n, n_ab),
                        KappaRule::Adopted => kappa_adopted(&q(p, h), &q(m0, h), n, n_ab),
                    };
                    if !coef.is_zero() {
                        let bc = self.engine.mode(&be, total - p, c);
                        if !bc.is_zero() {
                            out.add_scaled(&self.engine.mode(part, p, &bc), &CycScalar::rational(coef));
                        }
                    }
                    p += h;
                }
            }
            out
        };
        let m0_max = ec + wa * h + h;
        let w0 = (m0_max + n_ab * h - (total - ec - (wb - 1) * h)).max(h);
        let first = sum(w0);
        if sum(2 * w0) != first {
            return Err(Error::Unstable(format!("product identity window {w0} for n = {n}, r = {r}/{h}")));
        }
        Ok(first)
    }

    /// `(a_(n) b)_(r) c` straight from the recursive engine.
    pub fn direct_product(&self, a: &Fock<Q>, b: &Fock<Q>, n: i64, r: i64, c: &TwistedState) -> TwistedState {
        let ab = self.algebra.mode(&self.to_eigen(a), n, &self.to_eigen(b));
        self.engine.mode(&ab, r, c)
    }
}

/// Coefficient rule in the product identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaRule {
    /// `sum_{m=0}^N (-1)^{N-m} C(N,m) C(m-p-1, N-n-1)`, `N = max(N_ab, n+1)`.
    Printed,
    /// Coefficient obtained by inverting the Borcherds identity at a mode `m0`
    /// of `a` that kills `c`.
    Adopted,
}

/// The closed form as printed; identically zero for `n >= 0`.
pub fn kappa_printed(p: &Q, n: i64, n_ab: i64) -> Q {
    let big_n = n_ab.max(n + 1);
    let mut acc = Q::zero();
    for m in 0..=big_n {
        let sign = if (big_n - m) % 2 == 0 { qi(1) } else { qi(-1) };
        let c1 = Q::from_integer(int_binomial(big_n, m as u64));
        let c2 = generalized_binomial(&(qi(m - 1) - p), (big_n - n - 1) as u64);
        acc += sign * c1 * c2;
    }
    acc
}

/// `sum_{i=0}^{N_ab-n-1} C(-m0, i) (-1)^{n+i-s} C(n+i, n+i-s)` with
/// `s = p - m0`, valid whenever `a_(m0+j) c = 0` for all `j >= 0`.
pub fn kappa_adopted(p: &Q, m0: &Q, n: i64, n_ab: i64) -> Q {
    let s = p - m0;
    assert!(s.is_integer(), "p and m0 lie in different cosets");
    let s: i64 = s.to_integer().try_into().expect("small mode");
    let mut acc = Q::zero();
    for i in 0..(n_ab - n).max(0) {
        let lower = n + i - s;
        if lower < 0 {
            continue;
        }
        let sign = if lower % 2 == 0 { qi(1) } else { qi(-1) };
        acc += generalized_binomial(&-m0, i as u64) * sign * Q::from_integer(int_binomial(n + i, lower as u64));
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct KappaRow {
    pub case: String,
    pub n: i64,
    pub n_ab: i64,
    pub r: String,
    pub adopted_agrees: bool,
    /// `None` if the printed rule did not stabilise.
    pub printed_agrees: Option<bool>,
}

#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct KappaReport {
    pub rows: Vec<KappaRow>,
}

impl KappaReport {
    pub fn adopted_all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.adopted_agrees)
    }

    /// Cases where the printed closed form disagrees with the engine.
    pub fn printed_discrepancies(&self) -> Vec<&KappaRow> {
        self.rows.iter().filter(|r| r.printed_agrees != Some(true)).collect()
    }
}

/// Small states of `F` used as `a`, `b` in the product regression suite.
pub fn kappa_regression_states(rank: usize) -> Vec<(String, Fock<Q>)> {
    let x = |m: Monomial| Fock::monomial(m, qi(1));
    let mut out = vec![
        ("x1[-1]".to_string(), x(vec![(0, 1)])),
        ("x1[-2]".to_string(), x(vec![(0, 2)])),
        ("x1[-1]^2".to_string(), x(vec![(0, 1), (0, 1)])),
    ];
    if rank >= 2 {
        out.push(("x2[-1]".to_string(), x(vec![(1, 1)])));
        out.push(("x1[-1]x2[-1]".to_string(), x(vec![(0, 1), (1, 1)])));
    }
    out
}

/// Compares both coefficient rules against the engine on every pair of
/// regression states, `n` in `-2..=1`, a window of `r`, and `c` of energy at
/// most `max_c_ticks / h`.
pub fn reconcile_kappa(module: &TwistedModule, max_c_ticks: i64) -> KappaReport {
    let h = module.coxeter_number();
    let states = kappa_regression_states(module.rank());
    let cs = module.sample_states(max_c_ticks);
    let mut cases = Vec::new();
    for (na, a) in &states {
        for (nb, b) in &states {
            for n in -2..=1 {
                for r in -2 * h..=2 * h {
                    cases.push((na, a, nb, b, n, r));
                }
            }
        }
    }
    let rows = cases
        .par_iter()
        .map(|&(na, a, nb, b, n, r)| {
            let ae = module.to_eigen(a);
            let be = module.to_eigen(b);
            let n_ab = module.product_bound(&ae, &be);
            let mut adopted = true;
            let mut printed = Some(true);
            for c in &cs {
                let want = module.direct_product(a, b, n, r, c);
                match module.kappa_product(a, b, n, r, c, KappaRule::Adopted) {
                    Ok(v) => adopted &= v == want,
                    Err(_) => adopted = false,
                }
                match module.kappa_product(a, b, n, r, c, KappaRule::Printed) {
                    Ok(v) => {
                        if printed.is_some() && v != want {
                            printed = Some(false);
                        }
                    }
                    Err(_) => printed = None,
                }
            }
            KappaRow {
                case: format!("({na})_({n}) {nb}"),
                n,
                n_ab,
                r: format_q(&q(r, h)),
                adopted_agrees: adopted,
                printed_agrees: printed,
            }
        })
        .collect();
    KappaReport { rows }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FractionalReport {
    pub checked: usize,
    /// `(p, ticks, sample index)` of every nonzero fractional mode.
    pub violations: Vec<(usize, i64, usize)>,
}

/// Checks `omega^(p)_(k)(sigma) v = 0` for `k` in `(1/h)Z \ Z`,
/// `|k| <= window`, on every sample.
pub fn fractional_mode_vanishing_check(
    module: &TwistedModule,
    gens: &WGeneratorSet,
    samples: &[TwistedState],
    window: i64,
) -> FractionalReport {
    let h = module.coxeter_number();
    let mut report = FractionalReport::default();
    for g in &gens.generators {
        let u = module.to_eigen(&g.state);
        for t in -window * h..=window * h {
            if t % h == 0 {
                continue;
            }
            for (i, v) in samples.iter().enumerate() {
                report.checked += 1;
                if !module.engine().mode(&u, t, v).is_zero() {
                    report.violations.push((g.p, t, i));
                }
            }
        }
    }
    report
}

/// Eigen-coset of every monomial of `u`; a `sigma`-invariant state has only 0.
pub fn eigen_cosets(module: &TwistedModule, u: &TwistedState) -> Vec<i64> {
    let h = module.coxeter_number();
    let mut out: Vec<i64> =
        u.terms().map(|(m, _)| m.iter().map(|(l, _)| module.space().cosets[*l]).sum::<i64>().rem_euclid(h)).collect();
    out.sort();
    out.dedup();
    out
}
