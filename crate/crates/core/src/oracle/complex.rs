//! Minimal arbitrary-precision complex arithmetic over MPFR floats; only the
//! operations the Barnes-zeta quadrature needs.

use rug::Float;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A complex number with both parts at the same working precision.
#[derive(Clone, PartialEq)]
pub struct Cplx {
    pub re: Float,
    pub im: Float,
}

impl Cplx {
    pub fn new(re: Float, im: Float) -> Self {
        Cplx { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Cplx {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        Cplx {
            re: Float::with_val(prec, 1),
            im: Float::new(prec),
        }
    }

    pub fn from_float(re: Float) -> Self {
        let prec = re.prec();
        Cplx {
            re,
            im: Float::new(prec),
        }
    }

    pub fn from_ints(prec: u32, re: i64, im: i64) -> Self {
        Cplx {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn conj(&self) -> Self {
        Cplx {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, &self.re * &self.re) + Float::with_val(p, &self.im * &self.im)
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, f: &Float) -> Self {
        let p = self.prec();
        Cplx {
            re: Float::with_val(p, &self.re * f),
            im: Float::with_val(p, &self.im * f),
        }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        let p = self.prec();
        Cplx {
            re: Float::with_val(p, &self.re / &n),
            im: -Float::with_val(p, &self.im / &n),
        }
    }

    /// exp(z) = e^re (cos im + i sin im).
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let m = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        Cplx {
            re: Float::with_val(p, &c * &m),
            im: Float::with_val(p, &s * &m),
        }
    }

    pub fn pow_u32(&self, k: u32) -> Self {
        let mut acc = Cplx::one(self.prec());
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
}

impl fmt::Debug for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl fmt::Display for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

impl Add for &Cplx {
    type Output = Cplx;
    fn add(self, rhs: &Cplx) -> Cplx {
        let p = self.prec();
        Cplx {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl Sub for &Cplx {
    type Output = Cplx;
    fn sub(self, rhs: &Cplx) -> Cplx {
        let p = self.prec();
        Cplx {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl Mul for &Cplx {
    type Output = Cplx;
    fn mul(self, rhs: &Cplx) -> Cplx {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &rhs.re) - Float::with_val(p, &self.im * &rhs.im);
        let im = Float::with_val(p, &self.re * &rhs.im) + Float::with_val(p, &self.im * &rhs.re);
        Cplx { re, im }
    }
}

impl Div for &Cplx {
    type Output = Cplx;
    fn div(self, rhs: &Cplx) -> Cplx {
        self * &rhs.recip()
    }
}

impl Neg for &Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        let p = self.prec();
        Cplx {
            re: -Float::with_val(p, &self.re),
            im: -Float::with_val(p, &self.im),
        }
    }
}

macro_rules! forward_owned_cplx {
    ($trait:ident, $method:ident) => {
        impl $trait for Cplx {
            type Output = Cplx;
            fn $method(self, rhs: Cplx) -> Cplx {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Cplx> for Cplx {
            type Output = Cplx;
            fn $method(self, rhs: &Cplx) -> Cplx {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Cplx> for &Cplx {
            type Output = Cplx;
            fn $method(self, rhs: Cplx) -> Cplx {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned_cplx!(Add, add);
forward_owned_cplx!(Sub, sub);
forward_owned_cplx!(Mul, mul);
forward_owned_cplx!(Div, div);

impl Neg for Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        -&self
    }
}
