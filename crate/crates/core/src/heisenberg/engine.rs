//! Modes of vertex-algebra states acting on a (possibly twisted) Fock module.
//!
//! For a monomial `u = a_(n) b` with `a = x_{i,(-1)}|0>` and `n < 0`, the
//! Borcherds identity at `(m0, n, r - m0)` gives
//!
//! ```text
//! (a_(n) b)_(r) c = sum_j (-1)^j C(n,j) a_(m0+n-j) b_(r-m0+j) c
//!                 - (-1)^n sum_j (-1)^j C(n,j) b_(n+r-m0-j) a_(m0+j) c
//!                 - sum_{j>=1} C(m0,j) (a_(n+j) b)_(r-j) c
//! ```
//!
//! where `m0` is any mode of `a` legal on the module. Every term either has
//! fewer factors or lower weight, so the recursion terminates; the sums are
//! finite because modes above the available energy annihilate `c`.

use std::collections::HashMap;

use num_traits::Zero;
use parking_lot::RwLock;

use super::fock::{monomial_ticks, monomial_with, Fock, HeisSpace, Monomial};
use crate::exactcore::{generalized_binomial, int_binomial, q, Scalar, Q};

/// Which legal mode of the peeled factor anchors the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Anchor {
    /// Smallest non-negative legal mode.
    Low,
    /// Smallest legal mode above the energy of the target vector; the
    /// second sum then vanishes.
    High,
}

/// Which factor of a monomial is peeled off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Peel {
    First,
    Last,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strategy {
    pub anchor: Anchor,
    pub peel: Peel,
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy { anchor: Anchor::Low, peel: Peel::First }
    }
}

type Key = (Monomial, i64, Monomial, Strategy);

/// Memoizing evaluator of `u_(r) c` for monomials `u` of the vacuum algebra
/// and `c` of the module. Modes are in ticks of `1/denom`.
pub struct FieldEngine<S> {
    module: HeisSpace<S>,
    algebra: HeisSpace<S>,
    cache: RwLock<HashMap<Key, Fock<S>>>,
}

impl<S: Scalar> FieldEngine<S> {
    pub fn new(module: HeisSpace<S>) -> Self {
        let algebra = module.vacuum_algebra();
        FieldEngine { module, algebra, cache: RwLock::new(HashMap::new()) }
    }

    pub fn module(&self) -> &HeisSpace<S> {
        &self.module
    }

    pub fn algebra(&self) -> &HeisSpace<S> {
        &self.algebra
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().len()
    }

    /// Whether `r` lies in the mode coset of the field of `u`.
    pub fn is_legal_mode(&self, u: &[(usize, i64)], r: i64) -> bool {
        let coset: i64 = u.iter().map(|(l, _)| self.module.cosets[*l]).sum();
        (r - coset).rem_euclid(self.module.denom) == 0
    }

    pub fn mode(&self, u: &Fock<S>, r: i64, v: &Fock<S>) -> Fock<S> {
        self.mode_with(u, r, v, Strategy::default())
    }

    pub fn mode_with(&self, u: &Fock<S>, r: i64, v: &Fock<S>, st: Strategy) -> Fock<S> {
        let mut out = Fock::zero();
        for (um, uc) in u.terms() {
            for (vm, vc) in v.terms() {
                let x = self.mode_monomial(um, r, vm, st);
                out.add_scaled(&x, &uc.times(vc));
            }
        }
        out
    }

    pub fn mode_monomial(&self, u: &Monomial, r: i64, c: &Monomial, st: Strategy) -> Fock<S> {
        let d = self.module.denom;
        if u.is_empty() {
            return if r == -d { Fock::monomial(c.clone(), S::one()) } else { Fock::zero() };
        }
        let ec = monomial_ticks(c);
        if ec + monomial_ticks(u) * d - r - d < 0 || !self.is_legal_mode(u, r) {
            return Fock::zero();
        }
        if u.len() == 1 && u[0].1 == 1 {
            return self.module.apply_mode(u[0].0, r, &Fock::monomial(c.clone(), S::one()));
        }
        let key = (u.clone(), r, c.clone(), st);
        if let Some(hit) = self.cache.read().get(&key) {
            return hit.clone();
        }
        let out = self.expand(u, r, c, st);
        self.cache.write().insert(key, out.clone());
        out
    }

    fn expand(&self, u: &Monomial, r: i64, c: &Monomial, st: Strategy) -> Fock<S> {
        let d = self.module.denom;
        let idx = match st.peel {
            Peel::First => 0,
            Peel::Last => u.len() - 1,
        };
        let (i, t) = u[idx];
        let mut b = u.clone();
        b.remove(idx);
        let n = -t;
        let ec = monomial_ticks(c);
        let wb = monomial_ticks(&b);
        let m0 = match st.anchor {
            Anchor::Low => self.module.legal_at_least(i, 0),
            Anchor::High => self.module.legal_at_least(i, ec + 1),
        };
        let k = r - m0;
        let cvec = Fock::monomial(c.clone(), S::one());
        let mut out = Fock::zero();

        let mut j: i64 = 0;
        while ec + wb * d - (k + j * d) - d >= 0 {
            let coef = signed_binomial(n, j);
            let inner = self.mode_monomial(&b, k + j * d, c, st);
            if !inner.is_zero() {
                let outer = self.module.apply_mode(i, m0 + (n - j) * d, &inner);
                out.add_scaled(&outer, &S::from_rational(&coef));
            }
            j += 1;
        }

        let sign_n: i64 = if n % 2 == 0 { 1 } else { -1 };
        let mut j: i64 = 0;
        while m0 + j * d <= ec {
            let coef = -signed_binomial(n, j) * q(sign_n, 1);
            let inner = self.module.apply_mode(i, m0 + j * d, &cvec);
            for (cm, cc) in inner.terms() {
                let x = self.mode_monomial(&b, (n - j) * d + k, cm, st);
                out.add_scaled(&x, &cc.mul_rational(&coef));
            }
            j += 1;
        }

        let m0q = q(m0, d);
        let mut j: i64 = 1;
        while n + j <= wb {
            let s = n + j;
            let coef = generalized_binomial(&m0q, j as u64);
            if !coef.is_zero() && s != 0 {
                let x = if s < 0 {
                    self.mode_monomial(&monomial_with(&b, (i, -s)), r - j * d, c, st)
                } else {
                    let fs = self.algebra.apply_mode(i, s, &Fock::monomial(b.clone(), S::one()));
                    let mut acc = Fock::zero();
                    for (bm, bc) in fs.terms() {
                        acc.add_scaled(&self.mode_monomial(bm, r - j * d, c, st), bc);
                    }
                    acc
                };
                out.add_scaled(&x, &S::from_rational(&-coef));
            }
            j += 1;
        }
        out
    }
}

/// `(-1)^j C(n, j)` as a rational.
fn signed_binomial(n: i64, j: i64) -> Q {
    let b = Q::from_integer(int_binomial(n, j as u64));
    if j % 2 == 0 {
        b
    } else {
        -b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::qi;

    fn rank_one() -> FieldEngine<Q> {
        FieldEngine::new(HeisSpace::untwisted(vec![vec![qi(2)]], vec![qi(0)]))
    }

    #[test]
    fn vacuum_and_generator() {
        let e = rank_one();
        let c: Monomial = vec![(0, 1), (0, 2)];
        let st = Strategy::default();
        assert_eq!(e.mode_monomial(&vec![], -1, &c, st), Fock::monomial(c.clone(), qi(1)));
        assert!(e.mode_monomial(&vec![], 0, &c, st).is_zero());
        let v = e.mode_monomial(&vec![(0, 1)], 2, &c, st);
        assert_eq!(v, Fock::monomial(vec![(0, 1)], qi(4)));
    }

    #[test]
    fn derivative_fields() {
        // (a_(-2)|0>)_(r) = -r a_(r-1)
        let e = rank_one();
        let st = Strategy::default();
        let c: Monomial = vec![(0, 3)];
        for r in -3..=4 {
            let lhs = e.mode_monomial(&vec![(0, 2)], r, &c, st);
            let rhs = e.module().apply_mode(0, r - 1, &Fock::monomial(c.clone(), qi(-r)));
            assert_eq!(lhs, rhs, "r = {r}");
        }
    }

    #[test]
    fn anchors_agree() {
        let e = rank_one();
        let u: Monomial = vec![(0, 1), (0, 1), (0, 2)];
        for c in [vec![], vec![(0, 1)], vec![(0, 1), (0, 2)], vec![(0, 3)]] {
            for r in -4..=5 {
                let a = e.mode_monomial(&u, r, &c, Strategy { anchor: Anchor::Low, peel: Peel::First });
                let b = e.mode_monomial(&u, r, &c, Strategy { anchor: Anchor::High, peel: Peel::Last });
                assert_eq!(a, b);
            }
        }
    }
}
