//! Exact arithmetic in `Q(e^{2 pi i / h})`.
//!
//! Elements are stored as coefficient vectors in the power basis of
//! `Q[x] / Phi_h(x)`, so an element is zero exactly when all of its stored
//! coefficients are zero. Rationals are stored with `order == 1` and combine
//! with elements of any order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use super::linalg::solve_square;
use super::rational::{format_q, Scalar, Q};

/// Integer coefficients of the `h`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(h: u32) -> Vec<BigInt> {
    assert!(h >= 1, "cyclotomic order must be positive");
    // x^h - 1 divided by Phi_d for every proper divisor d of h.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); h as usize + 1];
    num[0] = BigInt::from(-1);
    num[h as usize] = BigInt::one();
    for d in 1..h {
        if h % d == 0 {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Reduction data for one cyclotomic field: `x^k mod Phi_h` for all exponents
/// that can occur in a product of two reduced elements.
struct FieldData {
    degree: usize,
    /// `powers[k]` is `x^k` reduced, for `0 <= k < 2 * degree`.
    powers: Vec<Vec<Q>>,
}

fn field_data(order: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = cache.read().get(&order) {
        return d.clone();
    }
    let phi = cyclotomic_polynomial(order);
    let degree = phi.len() - 1;
    let mut powers: Vec<Vec<Q>> = Vec::with_capacity(2 * degree);
    let mut cur = vec![Q::zero(); degree];
    cur[0] = Q::one();
    for _ in 0..(2 * degree).max(order as usize + 1) {
        powers.push(cur.clone());
        // multiply by x and reduce using x^degree = -sum phi_i x^i
        let top = cur[degree - 1].clone();
        for i in (1..degree).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = Q::zero();
        if !top.is_zero() {
            for (i, c) in phi.iter().take(degree).enumerate() {
                cur[i] -= &top * Q::from_integer(c.clone());
            }
        }
    }
    let data = Arc::new(FieldData { degree, powers });
    cache.write().insert(order, data.clone());
    data
}

/// An exact element of the cyclotomic field of the given order.
#[derive(Clone)]
pub struct CycScalar {
    order: u32,
    coeffs: Vec<Q>,
}

impl CycScalar {
    /// Embeds a rational; compatible with every order.
    pub fn rational(x: Q) -> Self {
        CycScalar { order: 1, coeffs: vec![x] }
    }

    /// `zeta^k` where `zeta = e^{2 pi i / order}`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let data = field_data(order);
        let e = k.rem_euclid(order as i64) as usize;
        CycScalar { order, coeffs: data.powers[e].clone() }.normalized()
    }

    /// Builds an element from power-basis coefficients (any length; reduced here).
    pub fn from_power_coeffs(order: u32, raw: &[Q]) -> Self {
        let data = field_data(order);
        let mut coeffs = vec![Q::zero(); data.degree];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = k % order as usize;
            for (i, p) in data.powers[e].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[i] += c * p;
                }
            }
        }
        CycScalar { order, coeffs }.normalized()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coefficients (length `deg Phi_order`).
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<Q> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn normalized(self) -> Self {
        if self.order != 1 && self.coeffs.iter().skip(1).all(Zero::is_zero) {
            CycScalar { order: 1, coeffs: vec![self.coeffs[0].clone()] }
        } else {
            self
        }
    }

    fn promoted(&self, order: u32) -> Vec<Q> {
        if self.order == order {
            return self.coeffs.clone();
        }
        assert_eq!(self.order, 1, "mixing cyclotomic fields of orders {} and {order}", self.order);
        let mut v = vec![Q::zero(); field_data(order).degree];
        v[0] = self.coeffs[0].clone();
        v
    }

    fn common_order(&self, other: &Self) -> u32 {
        match (self.order, other.order) {
            (1, o) | (o, 1) => o,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing cyclotomic fields of orders {a} and {b}"),
        }
    }

    /// Image under the Galois automorphism `zeta -> zeta^k` (`gcd(k, order) = 1`).
    pub fn galois(&self, k: i64) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let h = self.order as i64;
        assert_eq!(k.gcd(&h), 1, "zeta -> zeta^{k} is not an automorphism");
        let mut raw = vec![Q::zero(); self.order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i as i64 * k).rem_euclid(h) as usize;
            raw[e] += c;
        }
        Self::from_power_coeffs(self.order, &raw)
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Product of all Galois conjugates; a rational number.
    pub fn norm(&self) -> Q {
        if self.order == 1 {
            return self.coeffs[0].clone();
        }
        let h = self.order as i64;
        let mut acc = CycScalar::rational(Q::one());
        for k in 1..h {
            if k.gcd(&h) == 1 {
                acc = Scalar::times(&acc, &self.galois(k));
            }
        }
        acc.as_rational().expect("norm of a cyclotomic number is rational")
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        if order == 1 {
            return CycScalar::rational(&self.coeffs[0] * &other.coeffs[0]);
        }
        if self.order == 1 {
            return other.scaled(&self.coeffs[0]);
        }
        if other.order == 1 {
            return self.scaled(&other.coeffs[0]);
        }
        let data = field_data(order);
        let d = data.degree;
        let mut raw = vec![Q::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut coeffs = raw[..d].to_vec();
        for (k, c) in raw.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (i, p) in data.powers[k].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[i] += c * p;
                }
            }
        }
        CycScalar { order, coeffs }.normalized()
    }

    fn scaled(&self, x: &Q) -> Self {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| c * x).collect() }.normalized()
    }

    fn zip(&self, other: &Self, f: impl Fn(&Q, &Q) -> Q) -> Self {
        let order = self.common_order(other);
        let a = self.promoted(order);
        let b = other.promoted(order);
        CycScalar { order, coeffs: a.iter().zip(&b).map(|(x, y)| f(x, y)).collect() }.normalized()
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        let order = self.common_order(other);
        self.promoted(order) == other.promoted(order)
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format_q(c),
                1 => format!("({})z", format_q(c)),
                _ => format!("({})z^{i}", format_q(c)),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl std::ops::Add for CycScalar {
    type Output = CycScalar;
    fn add(self, other: Self) -> Self {
        self.zip(&other, |a, b| a + b)
    }
}

impl std::ops::Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, other: Self) -> Self {
        self.mul_impl(&other)
    }
}

impl Zero for CycScalar {
    fn zero() -> Self {
        CycScalar::rational(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for CycScalar {
    fn one() -> Self {
        CycScalar::rational(Q::one())
    }
}

impl Scalar for CycScalar {
    fn from_rational(x: &Q) -> Self {
        CycScalar::rational(x.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }
    fn minus(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn negated(&self) -> Self {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.order == 1 {
            return Some(CycScalar::rational(self.coeffs[0].recip()));
        }
        // Solve (multiplication-by-self) * y = 1 in the power basis.
        let d = self.coeffs.len();
        let mut columns: Vec<Vec<Q>> = Vec::with_capacity(d);
        for j in 0..d {
            let basis = CycScalar::from_power_coeffs(self.order, &unit(j, d));
            columns.push(self.mul_impl(&basis).promoted(self.order));
        }
        let matrix: Vec<Vec<Q>> = (0..d).map(|i| (0..d).map(|j| columns[j][i].clone()).collect()).collect();
        let y = solve_square(matrix, unit(0, d))?;
        Some(CycScalar { order: self.order, coeffs: y }.normalized())
    }
    fn mul_rational(&self, x: &Q) -> Self {
        self.scaled(x)
    }
}

fn unit(j: usize, d: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    v[j] = Q::one();
    v
}
