//! Tanh-sinh (double exponential) quadrature over MPFR floats, and the
//! improper-integral oracle for the mixed Berndt-type integrands.

use super::complex::Cplx;
use super::PrecisionContext;
use crate::error::{Error, Result};
use crate::integrals::IntegralSpec;
use rug::ops::Pow;
use rug::Float;

/// Values a quadrature rule can accumulate: reals and complex numbers.
pub trait QuadValue: Clone {
    fn zero(prec: u32) -> Self;
    fn accumulate(&mut self, other: &Self);
    fn scale(&self, f: &Float) -> Self;
    fn magnitude(&self) -> Float;
}

impl QuadValue for Float {
    fn zero(prec: u32) -> Self {
        Float::new(prec)
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn scale(&self, f: &Float) -> Self {
        Float::with_val(self.prec(), self * f)
    }
    fn magnitude(&self) -> Float {
        self.clone().abs()
    }
}

impl QuadValue for Cplx {
    fn zero(prec: u32) -> Self {
        Cplx::zero(prec)
    }
    fn accumulate(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn scale(&self, f: &Float) -> Self {
        Cplx::scale(self, f)
    }
    fn magnitude(&self) -> Float {
        self.abs()
    }
}

/// Integrates `f` over the finite interval [a, b] with the substitution
/// x = c + r tanh((pi/2) sinh t), doubling the node density per level until
/// two successive levels agree to the context threshold.
///
/// The integrand must be analytic on the open interval; endpoint algebraic
/// singularities are handled by the double-exponential decay of the weights.
pub fn tanh_sinh<T: QuadValue>(
    f: &dyn Fn(&Float) -> T,
    a: &Float,
    b: &Float,
    ctx: &PrecisionContext,
) -> Result<T> {
    let prec = ctx.prec_bits();
    let eps = ctx.target_eps();
    let half_pi = super::pi(ctx) / 2u32;
    let center = Float::with_val(prec, a + b) / 2u32;
    let radius = Float::with_val(prec, b - a) / 2u32;
    if radius.cmp0() != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Domain("empty integration interval".into()));
    }

    // weights decay like exp(-(pi/2) e^t); run t out far enough that the
    // weight alone is below threshold with margin
    let ln_inv_eps = Float::with_val(prec, ctx.working_digits() + 8) * Float::with_val(prec, 10f64.ln());
    let t_max = Float::with_val(prec, &ln_inv_eps / &half_pi).asinh();

    // node at parameter t, with u = (pi/2) sinh t: instead of the offset
    // tanh(u), track the distance 1 - tanh(u) = 2 e^{-2u}/(1 + e^{-2u}) to
    // the endpoint, which stays positive and fully precise for large u;
    // weight is (pi/2) cosh t / cosh^2(u) = (pi/2) cosh t * 4 em/(1+em)^2.
    let node = |t: &Float| -> (Float, Float) {
        let u = Float::with_val(prec, t.sinh_ref()) * &half_pi;
        let em = Float::with_val(prec, -2 * &u).exp();
        let one_plus = Float::with_val(prec, 1 + &em);
        let one_minus_tau = Float::with_val(prec, 2 * &em) / &one_plus;
        let sech2 = Float::with_val(prec, 4 * &em) / Float::with_val(prec, (&one_plus).pow(2));
        let w = Float::with_val(prec, t.cosh_ref()) * &half_pi * sech2;
        (one_minus_tau, w)
    };

    let eval_pair = |t: &Float| -> T {
        let (omt, w) = node(t);
        let d = Float::with_val(prec, &radius * &omt);
        let x_plus = Float::with_val(prec, b - &d);
        let x_minus = Float::with_val(prec, a + &d);
        let mut v = f(&x_plus);
        v.accumulate(&f(&x_minus));
        v.scale(&w)
    };

    // level 0: h = 1, nodes at integer t
    let mut node_sum = {
        let w0 = half_pi.clone();
        let mut s = f(&center).scale(&w0);
        let mut j = 1u32;
        loop {
            let t = Float::with_val(prec, j);
            if t > t_max {
                break;
            }
            s.accumulate(&eval_pair(&t));
            j += 1;
        }
        s
    };
    let mut h = Float::with_val(prec, 1);
    let mut prev = node_sum.scale(&Float::with_val(prec, &h * &radius));

    let max_level = 14u32;
    for _level in 1..=max_level {
        h /= 2u32;
        // new nodes at odd multiples of the refined step
        let mut j = 1u64;
        loop {
            let t = Float::with_val(prec, &h * Float::with_val(prec, j));
            if t > t_max {
                break;
            }
            node_sum.accumulate(&eval_pair(&t));
            j += 2;
        }
        let estimate = node_sum.scale(&Float::with_val(prec, &h * &radius));
        let mut diff = estimate.clone();
        diff.accumulate(&prev.scale(&Float::with_val(prec, -1)));
        let err = diff.magnitude();
        let scale = estimate.magnitude().max(&Float::with_val(prec, 1));
        if err < Float::with_val(prec, &eps * &scale) {
            return Ok(estimate);
        }
        prev = estimate;
    }
    Err(Error::NoConvergence(format!(
        "tanh-sinh on [{a}, {b}] stalled at level {max_level}"
    )))
}

/// `2 sum_{k>=0} x^{r0+4k} / (r0+4k)!` - the cancellation-free lacunary
/// series of sinh/cosh +/- sin/cos combinations, used for x <= 1.
fn lacunary_series(x: &Float, r0: u32, prec: u32, eps: &Float) -> Float {
    let mut term = Float::with_val(prec, x.pow(r0)) * 2u32;
    for k in 1..=r0 {
        term /= k;
    }
    let x4 = Float::with_val(prec, x.pow(4u32));
    let mut sum = term.clone();
    let mut k = r0;
    loop {
        term *= &x4;
        for j in 1..=4u32 {
            term /= k + j;
        }
        k += 4;
        sum += &term;
        if term < *eps {
            return sum;
        }
    }
}

/// Numerator and denominator pieces of the mixed integrand, stable near 0.
struct MixedPieces {
    prec: u32,
    eps: Float,
}

impl MixedPieces {
    fn new(ctx: &PrecisionContext) -> Self {
        MixedPieces {
            prec: ctx.prec_bits(),
            eps: ctx.target_eps(),
        }
    }

    fn sinh_pm_sin(&self, x: &Float, sign: i32) -> Float {
        if *x <= 1u32 {
            // sinh + sin = 2(x + x^5/5! + ...), sinh - sin = 2(x^3/3! + x^7/7! + ...)
            lacunary_series(x, if sign > 0 { 1 } else { 3 }, self.prec, &self.eps)
        } else {
            let s = Float::with_val(self.prec, x.sinh_ref());
            let t = Float::with_val(self.prec, x.sin_ref());
            if sign > 0 {
                s + t
            } else {
                s - t
            }
        }
    }

    fn cosh_pm_cos(&self, x: &Float, sign: i32) -> Float {
        if *x <= 1u32 {
            lacunary_series(x, if sign > 0 { 0 } else { 2 }, self.prec, &self.eps)
        } else {
            let c = Float::with_val(self.prec, x.cosh_ref());
            let t = Float::with_val(self.prec, x.cos_ref());
            if sign > 0 {
                c + t
            } else {
                c - t
            }
        }
    }

    /// sinh^2 x + sin^2 x = (cosh 2x - cos 2x)/2.
    fn sq_sum(&self, x: &Float) -> Float {
        let two_x = Float::with_val(self.prec, x * 2u32);
        self.cosh_pm_cos(&two_x, -1) / 2u32
    }

    fn integrand(&self, spec: &IntegralSpec, x: &Float) -> Float {
        let num = self.sinh_pm_sin(x, spec.family().sin_sign());
        let den_sq = self.sq_sum(x);
        let den_c = self.cosh_pm_cos(x, spec.family().cos_sign());
        let xs = Float::with_val(self.prec, x.pow(spec.exponent()));
        xs * num / (den_sq * den_c)
    }
}

/// Truncation point: beyond T the integrand is below 8 x^s e^{-2x}, and the
/// tail integral is below the context threshold.
fn tail_cutoff(spec: &IntegralSpec, ctx: &PrecisionContext) -> u32 {
    let s = spec.exponent() as f64;
    let digits = ctx.working_digits() as f64;
    let t = 1.5 * (s + digits * std::f64::consts::LN_10.max(2.302585)) ;
    (t.ceil() as u32).max(40)
}

/// Independent high-precision value of a mixed Berndt-type integral by
/// tanh-sinh quadrature on geometrically growing panels [0,1], [1,2], ...,
/// with the integrand evaluated through cancellation-free series near 0.
pub fn integrate_berndt(spec: &IntegralSpec, ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.prec_bits();
    let pieces = MixedPieces::new(ctx);
    let t_cut = tail_cutoff(spec, ctx);
    let f = |x: &Float| pieces.integrand(spec, x);

    let mut total = Float::new(prec);
    let mut lo = 0u32;
    let mut hi = 1u32;
    while lo < t_cut {
        let a = Float::with_val(prec, lo);
        let b = Float::with_val(prec, hi.min(t_cut));
        total += tanh_sinh(&f, &a, &b, ctx)?;
        lo = hi.min(t_cut);
        hi *= 2;
    }
    Ok(total)
}
