use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `t` with integer coefficients, lowest degree first.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TPoly(Vec<BigInt>);

impl TPoly {
    pub fn zero() -> Self {
        TPoly(Vec::new())
    }

    pub fn one() -> Self {
        TPoly(vec![BigInt::one()])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        TPoly(v)
    }

    pub fn from_coeffs<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        let mut p = TPoly(coeffs.into_iter().map(Into::into).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// `self += c * t^shift * other`.
    pub fn add_scaled_shifted(&mut self, other: &TPoly, c: &BigInt, shift: usize) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let need = other.0.len() + shift;
        if self.0.len() < need {
            self.0.resize(need, BigInt::zero());
        }
        for (i, x) in other.0.iter().enumerate() {
            self.0[i + shift] += c * x;
        }
        self.trim();
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &BigInt::one(), 0);
        out
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        self.add_scaled_shifted(rhs, &BigInt::one(), 0);
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &BigInt::from(-1), 0);
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (i, c) in self.0.iter().enumerate() {
            out.add_scaled_shifted(rhs, c, i);
        }
        out
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = if mag.is_one() && k > 0 { String::new() } else { mag.to_string() };
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_arith() {
        let p = TPoly::from_coeffs([0, 0, 1, 0, 1]);
        assert_eq!(p.to_string(), "t^2 + t^4");
        assert_eq!(TPoly::from_coeffs([1, -2, 0, 3]).to_string(), "1 - 2t + 3t^3");
        assert_eq!((&p - &p), TPoly::zero());
        assert_eq!(&TPoly::monomial(1) * &TPoly::monomial(2), TPoly::monomial(3));
        assert_eq!(p.eval_one(), BigInt::from(2));
        assert_eq!(TPoly::from_coeffs([1, 0, 0]).degree(), Some(0));
    }
}
