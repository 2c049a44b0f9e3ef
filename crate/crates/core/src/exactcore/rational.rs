use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Q = BigRational;

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Field operations needed by the exact linear algebra and the Fock-space
/// engines. Implemented for [`Q`] and for cyclotomic numbers.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + Zero + One + 'static {
    fn from_rational(x: &Q) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn mul_rational(&self, x: &Q) -> Self {
        self.times(&Self::from_rational(x))
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&qi(n))
    }
}

impl Scalar for Q {
    fn from_rational(x: &Q) -> Self {
        x.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn mul_rational(&self, x: &Q) -> Self {
        self * x
    }
}

/// `x (x-1) ... (x-k+1) / k!` for rational `x`.
pub fn generalized_binomial(x: &Q, k: u64) -> Q {
    let mut acc = Q::one();
    for i in 0..k {
        acc = acc * (x - qi(i as i64)) / qi(i as i64 + 1);
    }
    acc
}

/// Binomial coefficient with an arbitrary integer upper argument and `k >= 0`.
pub fn int_binomial(n: i64, k: u64) -> BigInt {
    let v = generalized_binomial(&qi(n), k);
    debug_assert!(v.is_integer());
    v.to_integer()
}

pub(crate) fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(generalized_binomial(&q(7, 3), 0), qi(1));
        assert_eq!(generalized_binomial(&qi(-1), 2), qi(1));
        assert_eq!(generalized_binomial(&q(1, 2), 2), q(-1, 8));
        assert_eq!(int_binomial(5, 2), BigInt::from(10));
        assert_eq!(int_binomial(-3, 2), BigInt::from(6));
        assert_eq!(int_binomial(2, 3), BigInt::from(0));
    }

    #[test]
    fn rationals_stay_reduced() {
        let x = q(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(format_q(&x), "-3/2");
    }
}
