//! Truncated power series: two-variable `(t, q)` tables for the level-one
//! generating function and one-variable `q`-series with a rational leading
//! exponent for characters.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{format_q, Q};
use super::tpoly::TPoly;
use crate::Error;

/// A power series in `t` and `q`, exact up to (and including) the truncation
/// orders. Coefficients are stored as `coeffs[q_degree][t_degree]`.
#[derive(Clone, PartialEq, Eq)]
pub struct SeriesTQ {
    t_max: usize,
    q_max: usize,
    coeffs: Vec<Vec<Q>>,
}

impl SeriesTQ {
    pub fn zero(t_max: usize, q_max: usize) -> Self {
        SeriesTQ { t_max, q_max, coeffs: vec![vec![Q::zero(); t_max + 1]; q_max + 1] }
    }

    pub fn one(t_max: usize, q_max: usize) -> Self {
        let mut s = Self::zero(t_max, q_max);
        s.coeffs[0][0] = Q::one();
        s
    }

    pub fn t_max(&self) -> usize {
        self.t_max
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    /// Coefficient of `t^t_deg q^q_deg` (zero beyond truncation).
    pub fn coeff(&self, t_deg: usize, q_deg: usize) -> Q {
        self.coeffs.get(q_deg).and_then(|row| row.get(t_deg)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set_coeff(&mut self, t_deg: usize, q_deg: usize, value: Q) {
        assert!(t_deg <= self.t_max && q_deg <= self.q_max, "coefficient beyond truncation");
        self.coeffs[q_deg][t_deg] = value;
    }

    /// The coefficient of `q^n` as a polynomial in `t`; panics if it is not integral.
    pub fn q_coeff(&self, n: usize) -> TPoly {
        let row = &self.coeffs[n];
        TPoly::from_coeffs(row.iter().map(|c| {
            assert!(c.is_integer(), "non-integral coefficient {c}");
            c.to_integer()
        }))
    }

    pub fn add(&self, other: &SeriesTQ) -> SeriesTQ {
        let t_max = self.t_max.min(other.t_max);
        let q_max = self.q_max.min(other.q_max);
        let mut out = Self::zero(t_max, q_max);
        for qd in 0..=q_max {
            for td in 0..=t_max {
                out.coeffs[qd][td] = &self.coeffs[qd][td] + &other.coeffs[qd][td];
            }
        }
        out
    }

    /// Truncated product; the result carries the smaller truncation orders.
    pub fn mul(&self, other: &SeriesTQ) -> SeriesTQ {
        let t_max = self.t_max.min(other.t_max);
        let q_max = self.q_max.min(other.q_max);
        let mut out = Self::zero(t_max, q_max);
        for q1 in 0..=q_max {
            for t1 in 0..=t_max {
                let a = &self.coeffs[q1][t1];
                if a.is_zero() {
                    continue;
                }
                for q2 in 0..=(q_max - q1) {
                    for t2 in 0..=(t_max - t1) {
                        let b = &other.coeffs[q2][t2];
                        if !b.is_zero() {
                            out.coeffs[q1 + q2][t1 + t2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiplies in place by `(1 - t^a q^b)^{-m}` (`m` may be negative).
    fn apply_factor(&mut self, f: &ProductFactor) {
        let (a, b) = (f.t_degree, f.q_degree);
        if a > self.t_max || b > self.q_max {
            return;
        }
        for _ in 0..f.multiplicity.unsigned_abs() {
            if f.multiplicity > 0 {
                // divide by (1 - x): running sum in increasing degree
                for qd in b..=self.q_max {
                    for td in a..=self.t_max {
                        let prev = self.coeffs[qd - b][td - a].clone();
                        self.coeffs[qd][td] += prev;
                    }
                }
            } else {
                for qd in (b..=self.q_max).rev() {
                    for td in (a..=self.t_max).rev() {
                        let prev = self.coeffs[qd - b][td - a].clone();
                        self.coeffs[qd][td] -= prev;
                    }
                }
            }
        }
    }
}

impl fmt::Debug for SeriesTQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SeriesTQ(t<={}, q<={})", self.t_max, self.q_max)?;
        for (n, row) in self.coeffs.iter().enumerate() {
            let terms: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| format!("{}t^{d}", format_q(c)))
                .collect();
            writeln!(f, "  q^{n}: {}", terms.join(" + "))?;
        }
        Ok(())
    }
}

/// The factor `(1 - t^t_degree q^q_degree)^{-multiplicity}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductFactor {
    pub t_degree: usize,
    pub q_degree: usize,
    pub multiplicity: i64,
}

impl ProductFactor {
    pub fn new(t_degree: usize, q_degree: usize, multiplicity: i64) -> Self {
        ProductFactor { t_degree, q_degree, multiplicity }
    }
}

/// Expands `prod (1 - t^a q^b)^{-m}` up to `t^t_max q^q_max`.
pub fn product_series(factors: &[ProductFactor], t_max: usize, q_max: usize) -> Result<SeriesTQ, Error> {
    let mut s = SeriesTQ::one(t_max, q_max);
    for f in factors {
        if f.t_degree == 0 && f.q_degree == 0 {
            return Err(Error::SingularFactor);
        }
        s.apply_factor(f);
    }
    Ok(s)
}

/// Factors of `prod_{k} prod_{j>=1} (1 - t^{d_k} q^j)^{-1}` needed up to `q^q_max`.
pub fn level_one_factors(degrees: &[usize], q_max: usize) -> Vec<ProductFactor> {
    degrees
        .iter()
        .flat_map(|&d| (1..=q_max).map(move |j| ProductFactor::new(d, j, 1)))
        .collect()
}

/// `q^offset * sum_n coeffs[n] q^n`, truncated after `coeffs.len()` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    pub offset: Q,
    pub coeffs: Vec<BigInt>,
}

impl QSeries {
    /// `q^offset / prod_{j>=1} (1 - q^j)^{colors}` to relative order `n_max`.
    pub fn eta_quotient(offset: Q, colors: u32, n_max: usize) -> Self {
        QSeries { offset, coeffs: super::partitions::colored_partitions_table(colors, n_max) }
    }

    pub fn relative_order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| if n == 0 { c.to_string() } else if c.is_one() { format!("q^{n}") } else { format!("{c}q^{n}") })
            .collect();
        write!(f, "q^({}) * ({} + O(q^{}))", format_q(&self.offset), body.join(" + "), self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::qi;

    #[test]
    fn level_one_rank_one() {
        let s = product_series(&level_one_factors(&[2], 3), 8, 3).unwrap();
        assert_eq!(s.q_coeff(0), TPoly::one());
        assert_eq!(s.q_coeff(1), TPoly::monomial(2));
        assert_eq!(s.q_coeff(2).to_string(), "t^2 + t^4");
        assert_eq!(s.q_coeff(3).to_string(), "t^2 + t^4 + t^6");
    }

    #[test]
    fn empty_product_and_singular_factor() {
        assert_eq!(product_series(&[], 3, 3).unwrap(), SeriesTQ::one(3, 3));
        assert!(matches!(product_series(&[ProductFactor::new(0, 0, 1)], 2, 2), Err(Error::SingularFactor)));
    }

    #[test]
    fn inverse_factors_cancel() {
        let f = [ProductFactor::new(1, 2, 3), ProductFactor::new(1, 2, -3)];
        assert_eq!(product_series(&f, 5, 5).unwrap(), SeriesTQ::one(5, 5));
        let mut s = SeriesTQ::zero(2, 2);
        s.set_coeff(1, 1, qi(4));
        assert_eq!(s.mul(&SeriesTQ::one(2, 2)), s);
    }
}
