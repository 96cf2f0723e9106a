//! The quadratic field Q[sqrt(2)], carrier of the duplication-transform
//! coefficients before sqrt(2)-cancellation.

use super::rational::BigRational;
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element `rat + irr * sqrt(2)` of Q[sqrt(2)].
///
/// The representation is unique since sqrt(2) is irrational; equality is
/// componentwise.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Sqrt2Number {
    rat: BigRational,
    irr: BigRational,
}

impl Sqrt2Number {
    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        Sqrt2Number { rat, irr }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        Sqrt2Number {
            rat,
            irr: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_int(n))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// sqrt(2) itself.
    pub fn sqrt2() -> Self {
        Sqrt2Number {
            rat: BigRational::zero(),
            irr: BigRational::one(),
        }
    }

    pub fn rat_component(&self) -> &BigRational {
        &self.rat
    }

    pub fn irr_component(&self) -> &BigRational {
        &self.irr
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// Galois conjugate `rat - irr * sqrt(2)`.
    pub fn conjugate(&self) -> Self {
        Sqrt2Number {
            rat: self.rat.clone(),
            irr: -&self.irr,
        }
    }

    /// Field norm `rat^2 - 2 irr^2`; zero iff the element is zero.
    pub fn norm(&self) -> BigRational {
        &(&self.rat * &self.rat) - &(BigRational::from_int(2) * &self.irr * &self.irr)
    }

    /// By-reference product, convenient in long chains.
    pub fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Sqrt2Number {
            rat: &self.rat * c,
            irr: &self.irr * c,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm().recip();
        Some(self.conjugate().scale(&n))
    }

    /// Exact k-th power by binary exponentiation.
    pub fn pow_u32(&self, k: u32) -> Self {
        let mut acc = Sqrt2Number::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Returns the rational component when the irrational part is exactly
    /// zero; otherwise reports the failed cancellation.
    pub fn rational_part(&self) -> Result<BigRational> {
        if self.irr.is_zero() {
            Ok(self.rat.clone())
        } else {
            Err(Error::NonRational(format!("{self}")))
        }
    }
}

impl From<BigRational> for Sqrt2Number {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for Sqrt2Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt(2)", self.rat, self.irr)
    }
}

impl fmt::Debug for Sqrt2Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Sqrt2Number {
    type Output = Sqrt2Number;
    fn add(self, rhs: &Sqrt2Number) -> Sqrt2Number {
        Sqrt2Number {
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
        }
    }
}

impl Sub for &Sqrt2Number {
    type Output = Sqrt2Number;
    fn sub(self, rhs: &Sqrt2Number) -> Sqrt2Number {
        Sqrt2Number {
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
        }
    }
}

impl Mul for &Sqrt2Number {
    type Output = Sqrt2Number;
    fn mul(self, rhs: &Sqrt2Number) -> Sqrt2Number {
        // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s,  s = sqrt(2)
        let two = BigRational::from_int(2);
        Sqrt2Number {
            rat: &(&self.rat * &rhs.rat) + &(&two * &self.irr * &rhs.irr),
            irr: &(&self.rat * &rhs.irr) + &(&self.irr * &rhs.rat),
        }
    }
}

impl Div for &Sqrt2Number {
    type Output = Sqrt2Number;
    fn div(self, rhs: &Sqrt2Number) -> Sqrt2Number {
        self * &rhs.inv().expect("division by zero in Q[sqrt(2)]")
    }
}

impl Neg for &Sqrt2Number {
    type Output = Sqrt2Number;
    fn neg(self) -> Sqrt2Number {
        Sqrt2Number {
            rat: -&self.rat,
            irr: -&self.irr,
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Sqrt2Number {
            type Output = Sqrt2Number;
            fn $method(self, rhs: Sqrt2Number) -> Sqrt2Number {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Sqrt2Number> for Sqrt2Number {
            type Output = Sqrt2Number;
            fn $method(self, rhs: &Sqrt2Number) -> Sqrt2Number {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Sqrt2Number> for &Sqrt2Number {
            type Output = Sqrt2Number;
            fn $method(self, rhs: Sqrt2Number) -> Sqrt2Number {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Sqrt2Number {
    type Output = Sqrt2Number;
    fn neg(self) -> Sqrt2Number {
        -&self
    }
}
