//! Canonical closed-form representation: finite sums of rational multiples of
//! Gamma(1/4)^g * pi^(h/2), plus the Ramanujan parameter point at x = 1/2.

use super::rational::BigRational;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A finite sum `sum c * Gamma(1/4)^g * pi^(h2/2)` with rational coefficients.
///
/// Keys are `(gamma_exp, pi_exp_times2)`; pi exponents are stored doubled so
/// the half-integer powers of the Ramanujan point values stay exact. No
/// stored coefficient is zero and the zero expression has no terms, so
/// structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GammaPiExpr {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl GammaPiExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `coeff * Gamma^gamma_exp * pi^(pi_exp_times2 / 2)`.
    pub fn monomial(coeff: BigRational, gamma_exp: i64, pi_exp_times2: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((gamma_exp, pi_exp_times2), coeff);
        }
        GammaPiExpr { terms }
    }

    pub fn constant(coeff: BigRational) -> Self {
        Self::monomial(coeff, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending `(gamma_exp, pi_exp_times2)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, gamma_exp: i64, pi_exp_times2: i64) -> Option<&BigRational> {
        self.terms.get(&(gamma_exp, pi_exp_times2))
    }

    fn insert_add(&mut self, key: (i64, i64), c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GammaPiExpr {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// Multiply by `Gamma^dg * pi^(dh2/2)`: pure exponent bookkeeping.
    pub fn shift(&self, dg: i64, dh2: i64) -> Self {
        GammaPiExpr {
            terms: self
                .terms
                .iter()
                .map(|(&(g, h2), v)| ((g + dg, h2 + dh2), v.clone()))
                .collect(),
        }
    }

    pub fn pow_u32(&self, k: u32) -> Self {
        let mut acc = Self::constant(BigRational::one());
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

    /// True when every pi exponent is an even doubled value, i.e. integral.
    pub fn has_integer_pi_exponents(&self) -> bool {
        self.terms.keys().all(|&(_, h2)| h2 % 2 == 0)
    }

    /// Renders the expression in LaTeX, e.g.
    /// `\frac{\Gamma^8}{2^9\pi^3}-\frac{\Gamma^4}{2^6\pi}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((g, h2), c)) in self.terms_display_order().enumerate() {
            let negative = c.is_negative();
            if negative {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            out.push_str(&latex_term(&c.abs(), g, h2));
        }
        out
    }

    /// Terms ordered by descending Gamma exponent, then descending pi.
    pub fn terms_display_order(&self) -> impl Iterator<Item = ((i64, i64), &BigRational)> {
        self.terms.iter().rev().map(|(&k, v)| (k, v))
    }
}

fn exp_str(sym: &str, e: i64) -> String {
    debug_assert!(e > 0);
    if e == 1 {
        sym.to_string()
    } else if e < 10 {
        format!("{sym}^{e}")
    } else {
        format!("{sym}^{{{e}}}")
    }
}

fn half_exp_str(sym: &str, h2: i64) -> String {
    debug_assert!(h2 > 0);
    if h2 % 2 == 0 {
        exp_str(sym, h2 / 2)
    } else {
        format!("{sym}^{{{h2}/2}}")
    }
}

fn latex_term(c_abs: &BigRational, g: i64, h2: i64) -> String {
    let mut num_parts: Vec<String> = Vec::new();
    let mut den_parts: Vec<String> = Vec::new();

    let num = c_abs.numer();
    let den = c_abs.denom();
    if *num != 1 {
        num_parts.push(num.to_string());
    }
    if *den != 1 {
        // powers of two render in the 2^k style of the tables
        let k = den.find_one(0);
        if den.is_power_of_two() && k.is_some() && k.unwrap() >= 4 {
            den_parts.push(exp_str("2", k.unwrap() as i64));
        } else {
            den_parts.push(den.to_string());
        }
    }
    if g > 0 {
        num_parts.push(exp_str("\\Gamma", g));
    } else if g < 0 {
        den_parts.push(exp_str("\\Gamma", -g));
    }
    if h2 > 0 {
        num_parts.push(half_exp_str("\\pi", h2));
    } else if h2 < 0 {
        den_parts.push(half_exp_str("\\pi", -h2));
    }

    let num_str = if num_parts.is_empty() {
        "1".to_string()
    } else {
        num_parts.join("")
    };
    if den_parts.is_empty() {
        num_str
    } else {
        format!("\\frac{{{}}}{{{}}}", num_str, den_parts.join(""))
    }
}

impl fmt::Display for GammaPiExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((g, h2), c)) in self.terms_display_order().enumerate() {
            if c.is_negative() {
                write!(f, "{}", if i == 0 { "-" } else { " - " })?;
            } else if i > 0 {
                write!(f, " + ")?;
            }
            let c_abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if g != 0 {
                parts.push(if g == 1 {
                    "Gamma".to_string()
                } else {
                    format!("Gamma^{g}")
                });
            }
            if h2 != 0 {
                parts.push(if h2 == 2 {
                    "pi".to_string()
                } else if h2 % 2 == 0 {
                    format!("pi^{}", h2 / 2)
                } else {
                    format!("pi^({h2}/2)")
                });
            }
            if parts.is_empty() {
                write!(f, "{c_abs}")?;
            } else if c_abs == BigRational::one() {
                write!(f, "{}", parts.join("*"))?;
            } else if c_abs.numer() == &1 {
                write!(f, "{}/{}", parts.join("*"), c_abs.denom())?;
            } else {
                write!(f, "({})*{}", c_abs, parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GammaPiExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &GammaPiExpr {
    type Output = GammaPiExpr;
    fn add(self, rhs: &GammaPiExpr) -> GammaPiExpr {
        let mut out = self.clone();
        for (k, v) in rhs.terms.iter() {
            out.insert_add(*k, v);
        }
        out
    }
}

impl Sub for &GammaPiExpr {
    type Output = GammaPiExpr;
    fn sub(self, rhs: &GammaPiExpr) -> GammaPiExpr {
        self + &(-rhs)
    }
}

impl Mul for &GammaPiExpr {
    type Output = GammaPiExpr;
    fn mul(self, rhs: &GammaPiExpr) -> GammaPiExpr {
        let mut out = GammaPiExpr::zero();
        for (&(g1, h1), c1) in self.terms.iter() {
            for (&(g2, h2), c2) in rhs.terms.iter() {
                out.insert_add((g1 + g2, h1 + h2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &GammaPiExpr {
    type Output = GammaPiExpr;
    fn neg(self) -> GammaPiExpr {
        GammaPiExpr {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

macro_rules! forward_owned_expr {
    ($trait:ident, $method:ident) => {
        impl $trait for GammaPiExpr {
            type Output = GammaPiExpr;
            fn $method(self, rhs: GammaPiExpr) -> GammaPiExpr {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&GammaPiExpr> for GammaPiExpr {
            type Output = GammaPiExpr;
            fn $method(self, rhs: &GammaPiExpr) -> GammaPiExpr {
                $trait::$method(&self, rhs)
            }
        }
    };
}

forward_owned_expr!(Add, add);
forward_owned_expr!(Sub, sub);
forward_owned_expr!(Mul, mul);

impl Neg for GammaPiExpr {
    type Output = GammaPiExpr;
    fn neg(self) -> GammaPiExpr {
        -&self
    }
}

/// A positive rational multiple of pi, the only admissible evaluation points
/// for the hyperbolic series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiMultiple {
    coeff: BigRational,
}

impl PiMultiple {
    pub fn new(coeff: BigRational) -> Result<Self> {
        if coeff.is_zero() || coeff.is_negative() {
            return Err(Error::Domain(format!(
                "series evaluation point must be a positive multiple of pi, got {coeff}*pi"
            )));
        }
        Ok(PiMultiple { coeff })
    }

    pub fn pi() -> Self {
        PiMultiple {
            coeff: BigRational::one(),
        }
    }

    pub fn half_pi() -> Self {
        PiMultiple {
            coeff: BigRational::new(1, 2),
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    /// Parses forms like `pi`, `pi/2`, `2pi`, `3pi/4`, `2*pi`.
    pub fn parse(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        let lower = cleaned.to_ascii_lowercase();
        let err = || {
            Error::InvalidSpec(format!(
                "cannot parse '{s}' as a rational multiple of pi (expected e.g. pi, pi/2, 2pi, 3pi/4)"
            ))
        };
        let pos = lower.find("pi").ok_or_else(err)?;
        let (before, after) = (&lower[..pos], &lower[pos + 2..]);
        let num: i64 = if before.is_empty() {
            1
        } else {
            before.parse().map_err(|_| err())?
        };
        let den: i64 = if after.is_empty() {
            1
        } else {
            let rest = after.strip_prefix('/').ok_or_else(err)?;
            rest.parse().map_err(|_| err())?
        };
        if den == 0 {
            return Err(err());
        }
        PiMultiple::new(BigRational::new(num, den))
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.coeff.numer();
        let d = self.coeff.denom();
        if *n == 1 && *d == 1 {
            write!(f, "pi")
        } else if *d == 1 {
            write!(f, "{n}pi")
        } else if *n == 1 {
            write!(f, "pi/{d}")
        } else {
            write!(f, "{n}pi/{d}")
        }
    }
}

/// The Ramanujan parameters specialized to the lemniscatic point x = 1/2,
/// where y = pi, z = Gamma(1/4)^2 / (2 pi^{3/2}) and z' = 4 pi^{1/2} / Gamma(1/4)^2.
#[derive(Clone, Debug)]
pub struct RamanujanPoint {
    x: BigRational,
    y: PiMultiple,
    z0: GammaPiExpr,
    z0_prime: GammaPiExpr,
}

impl RamanujanPoint {
    pub fn lemniscatic() -> Self {
        RamanujanPoint {
            x: BigRational::new(1, 2),
            y: PiMultiple::pi(),
            z0: GammaPiExpr::monomial(BigRational::new(1, 2), 2, -3),
            z0_prime: GammaPiExpr::monomial(BigRational::from_int(4), -2, 1),
        }
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn y(&self) -> &PiMultiple {
        &self.y
    }

    pub fn z0(&self) -> &GammaPiExpr {
        &self.z0
    }

    pub fn z0_prime(&self) -> &GammaPiExpr {
        &self.z0_prime
    }

    /// `z0^a * z0'^b` as a single exact monomial.
    pub fn z_monomial(&self, a: u32, b: u32) -> GammaPiExpr {
        &self.z0.pow_u32(a) * &self.z0_prime.pow_u32(b)
    }
}
