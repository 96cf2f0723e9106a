//! Arbitrary-precision rational numbers, the coefficient field everywhere.

use rug::ops::Pow;
use rug::{Integer, Rational};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact rational number backed by GMP.
///
/// Always canonical: gcd(|numerator|, denominator) = 1, denominator > 0,
/// zero is 0/1. These invariants are maintained by the underlying
/// representation on every operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigRational(Rational);

impl BigRational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational(Rational::from((num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        BigRational(Rational::from(n))
    }

    pub fn from_integer(n: Integer) -> Self {
        BigRational(Rational::from(n))
    }

    pub fn zero() -> Self {
        BigRational(Rational::new())
    }

    pub fn one() -> Self {
        BigRational(Rational::from(1))
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Equal
    }

    pub fn is_negative(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Less
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        BigRational(Rational::from(self.0.abs_ref()))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        BigRational(Rational::from(self.0.recip_ref()))
    }

    /// Exact integer power, negative exponents allowed for nonzero values.
    pub fn pow_i32(&self, k: i32) -> Self {
        if k < 0 {
            assert!(!self.is_zero(), "negative power of zero");
        }
        BigRational(Rational::from((&self.0).pow(k)))
    }

    /// 1/2^k for k >= 0.
    pub fn inv_pow2(k: u32) -> Self {
        BigRational(Rational::from((1, Integer::from(1) << k)))
    }

    pub fn as_rug(&self) -> &Rational {
        &self.0
    }

    pub fn into_rug(self) -> Rational {
        self.0
    }
}

impl From<Rational> for BigRational {
    fn from(r: Rational) -> Self {
        BigRational(r)
    }
}

impl From<i64> for BigRational {
    fn from(n: i64) -> Self {
        BigRational::from_int(n)
    }
}

impl fmt::Display for BigRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for BigRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &BigRational {
            type Output = BigRational;
            fn $method(self, rhs: &BigRational) -> BigRational {
                BigRational(Rational::from($trait::$method(&self.0, &rhs.0)))
            }
        }
        impl $trait for BigRational {
            type Output = BigRational;
            fn $method(self, rhs: BigRational) -> BigRational {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&BigRational> for BigRational {
            type Output = BigRational;
            fn $method(self, rhs: &BigRational) -> BigRational {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<BigRational> for &BigRational {
            type Output = BigRational;
            fn $method(self, rhs: BigRational) -> BigRational {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &BigRational {
    type Output = BigRational;
    fn div(self, rhs: &BigRational) -> BigRational {
        assert!(!rhs.is_zero(), "division by zero");
        BigRational(Rational::from(&self.0 / &rhs.0))
    }
}
impl Div for BigRational {
    type Output = BigRational;
    fn div(self, rhs: BigRational) -> BigRational {
        &self / &rhs
    }
}
impl Div<&BigRational> for BigRational {
    type Output = BigRational;
    fn div(self, rhs: &BigRational) -> BigRational {
        &self / rhs
    }
}

impl Neg for &BigRational {
    type Output = BigRational;
    fn neg(self) -> BigRational {
        BigRational(Rational::from(-&self.0))
    }
}
impl Neg for BigRational {
    type Output = BigRational;
    fn neg(self) -> BigRational {
        BigRational(-self.0)
    }
}

/// n! as an exact integer.
pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(n).binomial(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = BigRational::new(2, 4);
        assert_eq!(a, BigRational::new(1, 2));
        let b = BigRational::new(3, -6);
        assert_eq!(b, BigRational::new(-1, 2));
        assert!(b.is_negative());
        assert!(BigRational::zero().denom() == &1);
    }

    #[test]
    fn pow_and_recip() {
        let a = BigRational::new(-2, 3);
        assert_eq!(a.pow_i32(3), BigRational::new(-8, 27));
        assert_eq!(a.pow_i32(-2), BigRational::new(9, 4));
        assert_eq!(BigRational::inv_pow2(9), BigRational::new(1, 512));
    }

    #[test]
    fn factorial_binomial() {
        assert_eq!(factorial(8), 40320);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(6, 0), 1);
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn div_by_zero_panics() {
        let _ = BigRational::one() / BigRational::zero();
    }
}
