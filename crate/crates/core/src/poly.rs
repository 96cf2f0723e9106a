//! Dense univariate polynomials over an exact coefficient ring, plus the
//! sqrt(1-x)-weighted expressions the closed-form engines differentiate.

use crate::exact::{BigRational, Sqrt2Number};
use std::fmt;

/// Minimal exact commutative ring interface for polynomial coefficients.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiply by a small integer (used by derivative).
    fn mul_int(&self, n: i64) -> Self;
}

impl Ring for BigRational {
    fn zero() -> Self {
        BigRational::zero()
    }
    fn one() -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        BigRational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_int(&self, n: i64) -> Self {
        self * &BigRational::from_int(n)
    }
}

impl Ring for Sqrt2Number {
    fn zero() -> Self {
        Sqrt2Number::zero()
    }
    fn one() -> Self {
        Sqrt2Number::one()
    }
    fn is_zero(&self) -> bool {
        Sqrt2Number::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_int(n))
    }
}

/// A dense univariate polynomial; `coeffs[i]` is the coefficient of x^i.
///
/// Canonical: no trailing zero coefficient, the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![R::one()],
        }
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![R::zero(), R::one()],
        }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).add(&other.coeff(i)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_int(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation at a ring element.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Returns p(1-x) expanded, via Horner in (1-x).
    pub fn compose_one_minus_x(&self) -> Self {
        let one_minus_x = Self::from_coeffs(vec![R::one(), R::one().neg()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&one_minus_x).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Exact division by (1-x); None when (1-x) does not divide self.
    pub fn div_exact_one_minus_x(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // p(x) = (1-x) q(x): synthetic division from the top coefficient.
        let n = self.coeffs.len();
        let mut q = vec![R::zero(); n - 1];
        let mut carry = R::zero(); // coefficient still owed at current degree
        for i in (1..n).rev() {
            let qi = self.coeffs[i].add(&carry).neg();
            carry = qi.neg();
            q[i - 1] = qi;
        }
        // remainder = p(1) must vanish
        if self.coeffs[0].add(&carry).is_zero() {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    /// Coefficient sequence reversed in place of degree, for palindrome checks.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.reversed()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<BigRational> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_int(c)).collect())
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, " + ({c})*x^{i}")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `poly_part(x) * (1-x)^(sqrt_power/2)` with sqrt_power in {-1, 0, +1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SqrtFactorExpr {
    poly_part: Poly<BigRational>,
    sqrt_power: i8,
}

impl SqrtFactorExpr {
    pub fn new(poly_part: Poly<BigRational>, sqrt_power: i8) -> Self {
        assert!(
            (-1..=1).contains(&sqrt_power),
            "sqrt_power must be -1, 0 or +1"
        );
        let sqrt_power = if poly_part.is_zero() { 0 } else { sqrt_power };
        SqrtFactorExpr {
            poly_part,
            sqrt_power,
        }
    }

    pub fn poly_part(&self) -> &Poly<BigRational> {
        &self.poly_part
    }

    pub fn sqrt_power(&self) -> i8 {
        self.sqrt_power
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.poly_part.scale(c), self.sqrt_power)
    }

    pub fn mul_poly(&self, p: &Poly<BigRational>) -> Self {
        Self::new(self.poly_part.mul(p), self.sqrt_power)
    }

    /// d/dx of `g(x) * sqrt(1-x)`: requires sqrt_power = +1 and returns
    /// `[g'(x)(1-x) - g(x)/2] * (1-x)^{-1/2}`.
    pub fn derivative_of_poly_times_sqrt(&self) -> crate::error::Result<Self> {
        if self.sqrt_power != 1 {
            return Err(crate::error::Error::Domain(format!(
                "derivative_of_poly_times_sqrt requires sqrt_power = +1, got {}",
                self.sqrt_power
            )));
        }
        let one_minus_x = Poly::from_i64(&[1, -1]);
        let g = &self.poly_part;
        let half = BigRational::new(1, 2);
        let new_poly = g.derivative().mul(&one_minus_x).sub(&g.scale(&half));
        Ok(Self::new(new_poly, -1))
    }

    /// Value at x in Q[sqrt(2)], given sqrt(1-x) at the same point.
    pub fn eval_sqrt2(&self, x: &Sqrt2Number, sqrt_one_minus_x: &Sqrt2Number) -> Sqrt2Number {
        let base = self.poly_part.map(|c| Sqrt2Number::from_rational(c.clone())).eval(x);
        match self.sqrt_power {
            0 => base,
            1 => &base * sqrt_one_minus_x,
            -1 => &base / sqrt_one_minus_x,
            _ => unreachable!(),
        }
    }

    /// Canonical form with sqrt_power lifted to {0, +1} when the poly part
    /// carries the needed (1-x) factor.
    pub fn normalized(&self) -> Self {
        if self.sqrt_power == -1 {
            if let Some(q) = self.poly_part.div_exact_one_minus_x() {
                return Self::new(q, 1);
            }
        }
        self.clone()
    }
}
