//! Sparse Fock-space vectors and the free-boson mode action.
//!
//! A monomial is a sorted list of creation symbols `(label, ticks)`, meaning
//! `x_{label, (-ticks/denom)}` with `ticks > 0`; the empty monomial is the
//! highest-weight vector. Modes are measured in ticks of `1/denom`, so the
//! untwisted and twisted spaces share one implementation.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactcore::{qi, q, Scalar, Q};

pub type Monomial = Vec<(usize, i64)>;

/// Inserts a creation symbol keeping canonical order.
pub fn monomial_with(m: &[(usize, i64)], sym: (usize, i64)) -> Monomial {
    let pos = m.partition_point(|x| *x <= sym);
    let mut out = Vec::with_capacity(m.len() + 1);
    out.extend_from_slice(&m[..pos]);
    out.push(sym);
    out.extend_from_slice(&m[pos..]);
    out
}

/// Energy of a monomial in ticks.
pub fn monomial_ticks(m: &[(usize, i64)]) -> i64 {
    m.iter().map(|(_, t)| t).sum()
}

/// All monomials built from `symbols` (each `(label, ticks)`) with total
/// `ticks`, in increasing canonical order.
pub fn monomials_of_ticks(symbols: &[(usize, i64)], ticks: i64) -> Vec<Monomial> {
    let mut syms: Vec<(usize, i64)> = symbols.iter().copied().filter(|s| s.1 > 0 && s.1 <= ticks).collect();
    syms.sort();
    syms.dedup();
    let mut out = Vec::new();
    fn rec(rest: i64, syms: &[(usize, i64)], from: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..syms.len() {
            if syms[i].1 <= rest {
                cur.push(syms[i]);
                rec(rest - syms[i].1, syms, i, cur, out);
                cur.pop();
            }
        }
    }
    rec(ticks, &syms, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A finite linear combination of monomials with no stored zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Fock<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Fock<S> {
    pub fn zero() -> Self {
        Fock { terms: BTreeMap::new() }
    }

    pub fn vacuum() -> Self {
        Self::monomial(Vec::new(), S::one())
    }

    pub fn monomial(m: Monomial, c: S) -> Self {
        let mut f = Self::zero();
        f.add_term(m, c);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[(usize, i64)]) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Fock<S>, c: &S) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.times(c));
        }
    }

    pub fn add(&self, other: &Fock<S>) -> Fock<S> {
        let mut out = self.clone();
        out.add_scaled(other, &S::one());
        out
    }

    pub fn sub(&self, other: &Fock<S>) -> Fock<S> {
        let mut out = self.clone();
        out.add_scaled(other, &S::one().negated());
        out
    }

    pub fn scale(&self, c: &S) -> Fock<S> {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Fock<T> {
        let mut out = Fock::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v));
        }
        out
    }

    /// Energy in ticks if every monomial has the same energy.
    pub fn homogeneous_ticks(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| monomial_ticks(m));
        let first = it.next()?;
        it.all(|e| e == first).then_some(first)
    }

    pub fn max_ticks(&self) -> i64 {
        self.terms.keys().map(|m| monomial_ticks(m)).max().unwrap_or(0)
    }

    /// Coordinates against an indexed monomial basis; panics on a missing key.
    pub fn coordinates(&self, index: &BTreeMap<Monomial, usize>) -> Vec<(usize, S)> {
        let mut v: Vec<(usize, S)> =
            self.terms.iter().map(|(m, c)| (*index.get(m).expect("monomial outside basis"), c.clone())).collect();
        v.sort_by_key(|x| x.0);
        v
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Fock<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let syms: Vec<String> = m.iter().map(|(l, t)| format!("x{}[-{}]", l + 1, t)).collect();
                if syms.is_empty() {
                    format!("({c})|0>")
                } else {
                    format!("({c}){}|0>", syms.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar + fmt::Display> Fock<S> {
    /// Like `Display`, with modes written as fractions of `denom` and labels
    /// prefixed by `prefix`.
    pub fn render(&self, denom: i64, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let syms: String = m
                    .iter()
                    .map(|(l, t)| {
                        let g = num_integer::gcd(*t, denom);
                        if denom / g == 1 {
                            format!("{prefix}{}[-{}]", l + 1, t / g)
                        } else {
                            format!("{prefix}{}[-{}/{}]", l + 1, t / g, denom / g)
                        }
                    })
                    .collect();
                format!("({c}){syms}|0>")
            })
            .collect();
        parts.join(" + ")
    }
}

impl<S: Scalar> fmt::Debug for Fock<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Mode algebra `[x_{a,(j)}, x_{b,(k)}] = (j/denom) delta_{j+k,0} gram[a][b]`
/// on a Fock space; `x_{a,(j)}` is a legal mode iff `j = cosets[a] mod denom`.
#[derive(Clone, Debug)]
pub struct HeisSpace<S> {
    pub denom: i64,
    pub gram: Vec<Vec<S>>,
    pub cosets: Vec<i64>,
    /// Eigenvalue of `x_{a,(0)}` on the highest-weight vector.
    pub zero_modes: Vec<S>,
}

impl<S: Scalar> HeisSpace<S> {
    /// Untwisted space (all integer modes legal).
    pub fn untwisted(gram: Vec<Vec<S>>, zero_modes: Vec<S>) -> Self {
        let n = gram.len();
        HeisSpace { denom: 1, gram, cosets: vec![0; n], zero_modes }
    }

    pub fn labels(&self) -> usize {
        self.gram.len()
    }

    /// The untwisted vertex algebra with the same labels and form.
    pub fn vacuum_algebra(&self) -> HeisSpace<S> {
        HeisSpace::untwisted(self.gram.clone(), vec![S::zero(); self.labels()])
    }

    pub fn is_legal(&self, label: usize, ticks: i64) -> bool {
        (ticks - self.cosets[label]).rem_euclid(self.denom) == 0
    }

    /// Smallest legal tick for `label` that is at least `min`.
    pub fn legal_at_least(&self, label: usize, min: i64) -> i64 {
        min + (self.cosets[label] - min).rem_euclid(self.denom)
    }

    /// Creation symbols `(label, ticks)` with `ticks <= max_ticks`.
    pub fn creation_symbols(&self, max_ticks: i64) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for l in 0..self.labels() {
            for t in 1..=max_ticks {
                if self.is_legal(l, -t) {
                    out.push((l, t));
                }
            }
        }
        out
    }

    /// Monomial basis of the energy-`ticks` subspace.
    pub fn basis(&self, ticks: i64) -> Vec<Monomial> {
        monomials_of_ticks(&self.creation_symbols(ticks), ticks)
    }

    /// `x_{label,(j)} v`. The caller guarantees legality.
    pub fn apply_mode(&self, label: usize, j: i64, v: &Fock<S>) -> Fock<S> {
        debug_assert!(self.is_legal(label, j), "illegal mode {label} {j}");
        let mut out = Fock::zero();
        if j < 0 {
            for (m, c) in v.terms() {
                out.add_term(monomial_with(m, (label, -j)), c.clone());
            }
        } else if j == 0 {
            out.add_scaled(v, &self.zero_modes[label]);
        } else {
            let jq: Q = q(j, self.denom);
            for (m, c) in v.terms() {
                let mut i = 0;
                while i < m.len() {
                    let sym = m[i];
                    let mut run = 1;
                    while i + run < m.len() && m[i + run] == sym {
                        run += 1;
                    }
                    if sym.1 == j && !self.gram[label][sym.0].is_zero() {
                        let mut rest = m.clone();
                        rest.remove(i);
                        let coef = self.gram[label][sym.0].mul_rational(&(&jq * qi(run as i64))).times(c);
                        out.add_term(rest, coef);
                    }
                    i += run;
                }
            }
        }
        out
    }

    /// `h_(j) v` for `h = sum_a coeffs[a] x_a`.
    pub fn apply_vector_mode(&self, coeffs: &[S], j: i64, v: &Fock<S>) -> Fock<S> {
        let mut out = Fock::zero();
        for (a, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.apply_mode(a, j, v), c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> HeisSpace<Q> {
        HeisSpace::untwisted(vec![vec![qi(2)]], vec![qi(0)])
    }

    #[test]
    fn bracket_and_vacuum() {
        let s = sl2();
        let vac = Fock::<Q>::vacuum();
        for j in 0..3 {
            assert!(s.apply_mode(0, j, &vac).is_zero());
        }
        let v = s.apply_mode(0, -1, &vac);
        assert_eq!(s.apply_mode(0, 1, &v), vac.scale(&qi(2)));
        let w = s.apply_mode(0, -2, &v);
        assert_eq!(s.apply_mode(0, 2, &w), v.scale(&qi(4)));
        let vv = s.apply_mode(0, -1, &v);
        assert_eq!(s.apply_mode(0, 1, &vv), v.scale(&qi(4)));
    }

    #[test]
    fn bases() {
        let s = HeisSpace::untwisted(vec![vec![qi(2), qi(-1)], vec![qi(-1), qi(2)]], vec![qi(0), qi(0)]);
        assert_eq!(s.basis(3).len(), 10);
        let t: HeisSpace<Q> = HeisSpace { denom: 2, gram: vec![vec![qi(2)]], cosets: vec![1], zero_modes: vec![qi(0)] };
        assert_eq!(t.creation_symbols(3), vec![(0, 1), (0, 3)]);
        assert_eq!(t.legal_at_least(0, 0), 1);
        assert_eq!(t.legal_at_least(0, 2), 3);
        assert_eq!(t.basis(4).len(), 2);
    }
}
