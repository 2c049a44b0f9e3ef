//! Root data for `A_l` and `A_l^(1)` in epsilon coordinates.
//!
//! Finite weights are vectors of length `h = l + 1` with coordinate sum zero;
//! the form is the standard dot product, so roots `e_i - e_j` have norm 2.
//! Affine weights add a level and a `delta` coefficient.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactcore::{q, qi, CycScalar, Scalar, Q};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemA {
    rank: usize,
}

impl RootSystemA {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        RootSystemA { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coxeter number `h = l + 1`.
    pub fn coxeter_number(&self) -> usize {
        self.rank + 1
    }

    /// `e_i - e_j` (zero-based indices).
    pub fn root(&self, i: usize, j: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.coxeter_number()];
        v[i] += qi(1);
        v[j] -= qi(1);
        v
    }

    /// Simple roots `alpha_1 .. alpha_l`.
    pub fn simple_roots(&self) -> Vec<Vec<Q>> {
        (0..self.rank).map(|i| self.root(i, i + 1)).collect()
    }

    pub fn positive_roots(&self) -> Vec<Vec<Q>> {
        let h = self.coxeter_number();
        let mut out = Vec::new();
        for i in 0..h {
            for j in i + 1..h {
                out.push(self.root(i, j));
            }
        }
        out
    }

    /// All `l(l+1)` roots, positive ones first.
    pub fn roots(&self) -> Vec<Vec<Q>> {
        let pos = self.positive_roots();
        let neg: Vec<Vec<Q>> = pos.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        pos.into_iter().chain(neg).collect()
    }

    pub fn highest_root(&self) -> Vec<Q> {
        self.root(0, self.rank)
    }

    pub fn rho(&self) -> Vec<Q> {
        let h = self.coxeter_number() as i64;
        (0..h).map(|i| q(h - 1 - 2 * i, 2)).collect()
    }

    pub fn form(&self, x: &[Q], y: &[Q]) -> Q {
        x.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    /// Coefficients of a root-lattice vector in the simple roots.
    pub fn simple_coords(&self, x: &[Q]) -> Vec<Q> {
        let mut acc = Q::zero();
        x.iter().take(self.rank).map(|c| {
            acc += c;
            acc.clone()
        }).collect()
    }

    /// Gram matrix of the simple roots (the Cartan matrix).
    pub fn cartan_matrix(&self) -> Vec<Vec<Q>> {
        let s = self.simple_roots();
        s.iter().map(|a| s.iter().map(|b| self.form(a, b)).collect()).collect()
    }

    pub fn coxeter(&self) -> CoxeterAction {
        CoxeterAction { rank: self.rank }
    }
}

pub fn exponents_and_degrees(rank: usize) -> (Vec<usize>, Vec<usize>) {
    ((1..=rank).collect(), (2..=rank + 1).collect())
}

/// Affine exponents up to `n_max`: positive `j` with `j mod h != 0`.
pub fn affine_exponents_up_to(rank: usize, n_max: usize) -> Vec<usize> {
    (1..=n_max).filter(|j| j % (rank + 1) != 0).collect()
}

/// The Coxeter element as the cyclic shift `e_i -> e_{i+1}`.
#[derive(Clone, Copy, Debug)]
pub struct CoxeterAction {
    rank: usize,
}

impl CoxeterAction {
    pub fn order(&self) -> usize {
        self.rank + 1
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        let h = self.order();
        (0..h).map(|i| x[(i + h - 1) % h].clone()).collect()
    }

    pub fn matrix(&self) -> Vec<Vec<Q>> {
        let h = self.order();
        (0..h).map(|i| (0..h).map(|j| if (j + 1) % h == i { qi(1) } else { qi(0) }).collect()).collect()
    }

    /// `v_m = sum_i zeta^{-m i} e_i`, eigenvalue `zeta^m`.
    pub fn eigenvector(&self, m: usize) -> Vec<CycScalar> {
        let h = self.order();
        (0..h).map(|i| CycScalar::zeta_pow(h as u32, -((m * i) as i64))).collect()
    }

    /// Coordinates `c_m` of a real Cartan vector `x = sum_m c_m v_m`,
    /// `c_m = <x, v_{h-m}> / h`.
    pub fn eigen_coords(&self, x: &[Q]) -> Vec<CycScalar> {
        let h = self.order();
        let inv_h = q(1, h as i64);
        (1..h)
            .map(|m| {
                let v = self.eigenvector(h - m);
                let mut acc = CycScalar::zero();
                for (xi, vi) in x.iter().zip(&v) {
                    acc = acc.plus(&vi.mul_rational(xi));
                }
                acc.mul_rational(&inv_h)
            })
            .collect()
    }
}

/// An affine weight `finite + level * Lambda_0 + delta_coeff * delta`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    pub finite: Vec<Q>,
    pub level: Q,
    pub delta: Q,
}

impl AffineWeight {
    pub fn new(finite: Vec<Q>, level: Q, delta: Q) -> Self {
        AffineWeight { finite, level, delta }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Q::zero(); rank + 1], Q::zero(), Q::zero())
    }

    pub fn lambda0(rank: usize) -> Self {
        Self::new(vec![Q::zero(); rank + 1], Q::one(), Q::zero())
    }

    pub fn delta(rank: usize) -> Self {
        Self::new(vec![Q::zero(); rank + 1], Q::zero(), Q::one())
    }

    /// `Lambda_0 - n delta`.
    pub fn level_one_weight(rank: usize, n: i64) -> Self {
        Self::new(vec![Q::zero(); rank + 1], Q::one(), qi(-n))
    }

    /// Affine rho: finite rho at level `h`, delta coefficient zero.
    pub fn rho(rank: usize) -> Self {
        Self::new(RootSystemA::new(rank).rho(), qi(rank as i64 + 1), Q::zero())
    }

    pub fn rank(&self) -> usize {
        self.finite.len() - 1
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.finite.iter().map(|x| x * c).collect(), &self.level * c, &self.delta * c)
    }

    /// `<self, alpha_i^vee>` for `i = 0..=l`.
    pub fn pairing(&self, i: usize) -> Q {
        if i == 0 {
            &self.level - (&self.finite[0] - &self.finite[self.rank()])
        } else {
            &self.finite[i - 1] - &self.finite[i]
        }
    }

    pub fn is_dominant(&self) -> bool {
        (0..=self.rank()).all(|i| {
            let c = self.pairing(i);
            c.is_integer() && !c.is_negative()
        })
    }

    /// Simple reflection `s_i`.
    pub fn reflect(&self, i: usize) -> Self {
        let c = self.pairing(i);
        let mut out = self.clone();
        let r = self.rank();
        if i == 0 {
            out.finite[0] += &c;
            out.finite[r] -= &c;
            out.delta -= c;
        } else {
            out.finite[i - 1] -= &c;
            out.finite[i] += c;
        }
        out
    }

    /// Coordinates `(k_0, .., k_l)` in the simple affine roots, if `self` is an
    /// integral level-zero element of the root lattice.
    pub fn root_coords(&self) -> Option<Vec<i64>> {
        if !self.level.is_zero() || !self.delta.is_integer() {
            return None;
        }
        let k0 = self.delta.to_integer().to_i64()?;
        let rs = RootSystemA::new(self.rank());
        let fin = rs.simple_coords(&self.finite);
        let total: Q = self.finite.iter().sum();
        if !total.is_zero() {
            return None;
        }
        let mut out = vec![k0];
        for c in fin {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer().to_i64()? + k0);
        }
        Some(out)
    }

    /// Membership in the cone `Q_+` of non-negative combinations of simple roots.
    pub fn in_positive_cone(&self) -> bool {
        self.root_coords().is_some_and(|k| k.iter().all(|&x| x >= 0))
    }
}

impl Add for &AffineWeight {
    type Output = AffineWeight;
    fn add(self, o: &AffineWeight) -> AffineWeight {
        AffineWeight::new(
            self.finite.iter().zip(&o.finite).map(|(a, b)| a + b).collect(),
            &self.level + &o.level,
            &self.delta + &o.delta,
        )
    }
}

impl Sub for &AffineWeight {
    type Output = AffineWeight;
    fn sub(self, o: &AffineWeight) -> AffineWeight {
        self + &(-o)
    }
}

impl Neg for &AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        self.scale(&qi(-1))
    }
}

impl fmt::Debug for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fin: Vec<String> = self.finite.iter().map(|x| x.to_string()).collect();
        write!(f, "([{}], level {}, delta {})", fin.join(", "), self.level, self.delta)
    }
}

/// A positive root `finite + n delta`; `finite` empty means imaginary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRoot {
    pub finite: Option<Vec<Q>>,
    pub n: i64,
    pub multiplicity: u32,
}

impl AffineRoot {
    pub fn is_real(&self) -> bool {
        self.finite.is_some()
    }

    /// Coordinates in the simple affine roots.
    pub fn root_coords(&self, rank: usize) -> Vec<i64> {
        let fin = self.finite.clone().unwrap_or_else(|| vec![Q::zero(); rank + 1]);
        AffineWeight::new(fin, Q::zero(), qi(self.n)).root_coords().expect("roots are integral")
    }
}

/// Positive roots of `A_l^(1)` with delta-height at most `n_max`, ordered by
/// height and then by finite part.
pub fn positive_affine_roots_up_to(rank: usize, n_max: usize) -> Vec<AffineRoot> {
    let rs = RootSystemA::new(rank);
    let mut out: Vec<AffineRoot> =
        rs.positive_roots().into_iter().map(|r| AffineRoot { finite: Some(r), n: 0, multiplicity: 1 }).collect();
    let mut all = rs.roots();
    all.sort();
    for n in 1..=n_max as i64 {
        out.push(AffineRoot { finite: None, n, multiplicity: rank as u32 });
        for r in &all {
            out.push(AffineRoot { finite: Some(r.clone()), n, multiplicity: 1 });
        }
    }
    out
}

/// One term of the alternating sum: `w` as a word in simple reflections
/// (rightmost applied first), its sign, and `w(lambda + rho)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylTerm {
    pub word: Vec<usize>,
    pub sign: i32,
    pub image: AffineWeight,
}

/// Affine Weyl elements `w` with `w(lambda + rho) - (mu + rho)` in `Q_+`.
pub fn affine_weyl_elements_for(lambda: &AffineWeight, mu: &AffineWeight) -> Result<Vec<WeylTerm>, Error> {
    let order: Vec<usize> = (0..=lambda.rank()).collect();
    affine_weyl_elements_ordered(lambda, mu, &order, &AffineWeight::rho(lambda.rank()))
}

/// Same search with an explicit reflection order and choice of rho.
pub fn affine_weyl_elements_ordered(
    lambda: &AffineWeight,
    mu: &AffineWeight,
    order: &[usize],
    rho: &AffineWeight,
) -> Result<Vec<WeylTerm>, Error> {
    if lambda.level != mu.level {
        return Err(Error::LevelMismatch(lambda.level.to_string(), mu.level.to_string()));
    }
    let start = lambda + rho;
    let target = mu + rho;
    // Every w(lambda+rho) is reached from lambda+rho by a chain of descents,
    // each adding one to the length; delta never increases along a chain.
    let mut seen: HashMap<AffineWeight, (Vec<usize>, usize)> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone(), (Vec::new(), 0));
    queue.push_back(start);
    while let Some(nu) = queue.pop_front() {
        let (word, len) = seen[&nu].clone();
        for &i in order {
            if !nu.pairing(i).is_positive() {
                continue;
            }
            let next = nu.reflect(i);
            assert!(next.delta <= nu.delta, "delta coefficient increased along a descent");
            if next.delta < target.delta || seen.contains_key(&next) {
                continue;
            }
            let mut w = vec![i];
            w.extend_from_slice(&word);
            seen.insert(next.clone(), (w, len + 1));
            queue.push_back(next);
        }
    }
    let mut out: Vec<WeylTerm> = seen
        .into_iter()
        .filter(|(nu, _)| (nu - &target).in_positive_cone())
        .map(|(image, (word, len))| WeylTerm { sign: if len % 2 == 0 { 1 } else { -1 }, word, image })
        .collect();
    out.sort_by(|a, b| (a.word.len(), &a.image).cmp(&(b.word.len(), &b.image)));
    Ok(out)
}

/// Images `w(lambda + rho)` as a set, for order-independence checks.
pub fn weyl_images(terms: &[WeylTerm]) -> BTreeSet<AffineWeight> {
    terms.iter().map(|t| t.image.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::linalg::sparse_from_dense;
    use crate::exactcore::nullspace;

    #[test]
    fn basic_data() {
        for rank in 1..=4 {
            let rs = RootSystemA::new(rank);
            assert_eq!(rs.roots().len(), rank * (rank + 1));
            for a in rs.simple_roots() {
                assert_eq!(rs.form(&rs.rho(), &a), qi(1));
                assert_eq!(rs.form(&a, &a), qi(2));
            }
        }
        assert_eq!(exponents_and_degrees(3).1, vec![2, 3, 4]);
        assert_eq!(exponents_and_degrees(1).1, vec![2]);
        assert_eq!(exponents_and_degrees(2).0, vec![1, 2]);
    }

    #[test]
    fn affine_rho_pairs_to_one() {
        for rank in 1..=4 {
            let rho = AffineWeight::rho(rank);
            for i in 0..=rank {
                assert_eq!(rho.pairing(i), qi(1));
            }
            assert_eq!(AffineWeight::lambda0(rank).pairing(0), qi(1));
        }
    }

    #[test]
    fn reflections_are_involutions() {
        let w = AffineWeight::new(vec![q(3, 2), qi(0), q(-3, 2)], qi(2), qi(-1));
        for i in 0..=2 {
            assert_eq!(w.reflect(i).reflect(i), w);
        }
    }

    #[test]
    fn coxeter_element() {
        for rank in 1..=4 {
            let c = RootSystemA::new(rank).coxeter();
            let h = c.order();
            let x: Vec<Q> = (0..h).map(|i| qi(i as i64 * i as i64 - 1)).collect();
            let mut y = x.clone();
            for k in 1..=h {
                y = c.apply(&y);
                assert_eq!(y == x, k == h);
            }
            for m in 1..h {
                let v = c.eigenvector(m);
                let sv: Vec<CycScalar> = (0..h).map(|i| v[(i + h - 1) % h].clone()).collect();
                let z = CycScalar::zeta_pow(h as u32, m as i64);
                assert!(sv.iter().zip(&v).all(|(a, b)| *a == b.times(&z)));
                for mp in 1..h {
                    let w = c.eigenvector(mp);
                    let mut ip = CycScalar::zero();
                    for (a, b) in v.iter().zip(&w) {
                        ip = ip.plus(&a.times(b));
                    }
                    let want = if (m + mp) % h == 0 { h as i64 } else { 0 };
                    assert_eq!(ip, CycScalar::from_int(want));
                }
            }
        }
    }

    #[test]
    fn eigen_coords_reconstruct() {
        let c = RootSystemA::new(2).coxeter();
        let x = vec![qi(1), qi(-3), qi(2)];
        let coords = c.eigen_coords(&x);
        for i in 0..3 {
            let mut acc = CycScalar::zero();
            for (m, cm) in coords.iter().enumerate() {
                acc = acc.plus(&cm.times(&c.eigenvector(m + 1)[i]));
            }
            assert_eq!(acc, CycScalar::rational(x[i].clone()));
        }
    }

    /// Dimension of the degree-`j` part of the centralizer of the principal
    /// cyclic element in the loop algebra of `sl_h`, computed by a nullspace.
    fn centralizer_dim(h: usize, j: usize) -> usize {
        // degree-j basis: E_{a,b} t^k with b - a + h k = j; the loop variable
        // is implicit, so only the (a, b) pattern matters
        let cols: Vec<(usize, usize)> =
            (0..h).flat_map(|a| (0..h).map(move |b| (a, b))).filter(|(a, b)| (b + h - a) % h == j % h).collect();
        let idx = |a: usize, b: usize| a * h + b;
        // rows: entries of [x, e] with e = sum_a E_{a,a+1}, plus the trace
        let mut rows: Vec<Vec<Q>> = vec![vec![Q::zero(); cols.len()]; h * h + 1];
        for (c, &(a, b)) in cols.iter().enumerate() {
            // E_{a,b} E_{b,b+1} - E_{a-1,a} E_{a,b}
            rows[idx(a, (b + 1) % h)][c] += qi(1);
            rows[idx((a + h - 1) % h, b)][c] -= qi(1);
            if a == b {
                rows[h * h][c] += qi(1);
            }
        }
        let sparse: Vec<_> = rows.iter().map(|r| sparse_from_dense(r)).collect();
        nullspace(&sparse, cols.len()).len()
    }

    #[test]
    fn affine_exponents_match_centralizer() {
        for rank in 1..=3 {
            let h = rank + 1;
            let oracle: Vec<usize> = (1..=8).filter(|&j| centralizer_dim(h, j) == 1).collect();
            assert!((1..=8).all(|j| centralizer_dim(h, j) <= 1));
            assert_eq!(affine_exponents_up_to(rank, 8), oracle);
        }
        assert_eq!(affine_exponents_up_to(1, 6), vec![1, 3, 5]);
        assert_eq!(affine_exponents_up_to(2, 4), vec![1, 2, 4]);
        assert!(affine_exponents_up_to(3, 0).is_empty());
    }

    #[test]
    fn affine_root_counts() {
        assert_eq!(positive_affine_roots_up_to(1, 0).len(), 1);
        let r = positive_affine_roots_up_to(1, 1);
        assert_eq!(r.len(), 4);
        let r2 = positive_affine_roots_up_to(2, 1);
        assert_eq!(r2.len(), 10);
        assert_eq!(r2.iter().filter(|x| !x.is_real()).map(|x| x.multiplicity).sum::<u32>(), 2);
        for root in positive_affine_roots_up_to(3, 3) {
            assert_eq!(root.multiplicity, if root.is_real() { 1 } else { 3 });
            assert!(root.root_coords(3).iter().all(|&k| k >= 0));
        }
    }

    #[test]
    fn weyl_search() {
        let l0 = AffineWeight::lambda0(1);
        let terms = affine_weyl_elements_for(&l0, &l0).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].sign, 1);
        assert!(terms[0].word.is_empty());
        let two = AffineWeight::new(vec![qi(0), qi(0)], qi(2), qi(0));
        assert!(matches!(affine_weyl_elements_for(&l0, &two), Err(Error::LevelMismatch(..))));
        let mu = AffineWeight::level_one_weight(2, 3);
        let a = affine_weyl_elements_for(&AffineWeight::lambda0(2), &mu).unwrap();
        let rho = AffineWeight::rho(2);
        let b = affine_weyl_elements_ordered(&AffineWeight::lambda0(2), &mu, &[2, 0, 1], &rho).unwrap();
        assert_eq!(weyl_images(&a), weyl_images(&b));
    }

    #[test]
    fn rho_shift_by_delta_is_invisible() {
        let l0 = AffineWeight::lambda0(2);
        let mu = AffineWeight::level_one_weight(2, 3);
        let rho = AffineWeight::rho(2);
        let diffs = |rho: &AffineWeight| -> BTreeSet<Vec<i64>> {
            let target = &mu + rho;
            affine_weyl_elements_ordered(&l0, &mu, &[0, 1, 2], rho)
                .unwrap()
                .iter()
                .map(|t| (&t.image - &target).root_coords().unwrap())
                .collect()
        };
        let base = diffs(&rho);
        for c in [-3, 2, 7] {
            let shifted = &rho + &AffineWeight::delta(2).scale(&qi(c));
            assert_eq!(diffs(&shifted), base);
        }
    }
}
