//! Generalized Barnes multiple zeta evaluation through the integral
//! representation, the combined-integrand evaluator for the four-term
//! combinations, and a low-precision truncated lattice sum used as a sanity
//! oracle.

use super::complex::Cplx;
use super::quadrature::tanh_sinh;
use super::PrecisionContext;
use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::integrals::BarnesComboSpec;
use rug::ops::Pow;
use rug::Float;

/// Parameters of the generalized Barnes multiple zeta
/// `zeta_N(s, omega | a_N; sigma_N) = sum sigma_1^{n_1}...sigma_N^{n_N}
///  (omega + n_1 a_1 + ... + n_N a_N)^{-s}`.
#[derive(Clone, Debug)]
pub struct BarnesParams {
    s: Cplx,
    omega: Cplx,
    a: Vec<Cplx>,
    sigma: Vec<i8>,
}

impl BarnesParams {
    /// Validates the integral-representation conditions: Re(a_j) > 0,
    /// Re(omega) > 0, and Re(s) > N.
    pub fn new(s: Cplx, omega: Cplx, a: Vec<Cplx>, sigma: Vec<i8>) -> Result<Self> {
        if a.is_empty() || a.len() != sigma.len() {
            return Err(Error::InvalidSpec(
                "parameter vectors a and sigma must be nonempty and of equal length".into(),
            ));
        }
        if sigma.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidSpec("sigma entries must be +1 or -1".into()));
        }
        if a.iter().any(|aj| aj.re.cmp0() != Some(std::cmp::Ordering::Greater)) {
            return Err(Error::Domain("integral representation needs Re(a_j) > 0".into()));
        }
        if omega.re.cmp0() != Some(std::cmp::Ordering::Greater) {
            return Err(Error::Domain("integral representation needs Re(omega) > 0".into()));
        }
        let n = a.len() as u32;
        if !(s.re.clone() > n) {
            return Err(Error::Domain(format!(
                "integral representation needs Re(s) > N = {n}"
            )));
        }
        Ok(BarnesParams { s, omega, a, sigma })
    }

    pub fn order(&self) -> usize {
        self.a.len()
    }

    pub fn s(&self) -> &Cplx {
        &self.s
    }
}

/// `1 - sigma e^{-a u}` for real u > 0, via the expm1-style series when
/// `|a| u` is small enough for the direct form to cancel.
fn one_minus_sigma_exp(a: &Cplx, sigma: i8, u: &Float, prec: u32, eps: &Float) -> Cplx {
    let au = a.scale(u);
    if sigma == -1 {
        // 1 + e^{-au}: no cancellation anywhere on u > 0
        return &Cplx::one(prec) + &(-&au).exp();
    }
    if au.abs() > 0.5 {
        return &Cplx::one(prec) - &(-&au).exp();
    }
    // 1 - e^{-z} = z - z^2/2! + z^3/3! - ... at z = a u
    let mut term = au.clone();
    let mut sum = term.clone();
    let mut k = 1u32;
    loop {
        term = &term * &au;
        k += 1;
        term = term.scale(&-(Float::with_val(prec, k).recip()));
        sum = &sum + &term;
        if term.abs() < *eps {
            return sum;
        }
    }
}

/// Evaluates the generalized Barnes zeta by quadrature of
/// `u^{s-1} e^{-omega u} prod_j (1 - sigma_j e^{-a_j u})^{-1} / Gamma(s)`.
///
/// Only real s is supported (every use in the combination identities has
/// integer s); the parameter struct carries a complex slot for fidelity with
/// the series definition.
pub fn barnes_zeta(params: &BarnesParams, ctx: &PrecisionContext) -> Result<Cplx> {
    if !params.s.im.is_zero() {
        return Err(Error::Domain(
            "barnes_zeta evaluates real s only (integral representation)".into(),
        ));
    }
    let prec = ctx.prec_bits();
    let eps = ctx.target_eps();
    let s_re = Float::with_val(prec, &params.s.re);
    let gamma_s = Float::with_val(prec, s_re.gamma_ref());
    let exp_minus_one = Float::with_val(prec, &s_re - 1u32);

    let f = |u: &Float| -> Cplx {
        let mut v = Cplx::from_float(Float::with_val(prec, u.pow(&exp_minus_one)));
        v = &v * &(-&params.omega.scale(u)).exp();
        for (aj, sj) in params.a.iter().zip(params.sigma.iter()) {
            let factor = one_minus_sigma_exp(aj, *sj, u, prec, &eps);
            v = &v / &factor;
        }
        v
    };

    let cutoff = integral_cutoff(&params.omega.re, ctx);
    let total = integrate_panels(&f, cutoff, ctx)?;
    Ok(total.scale(&Float::with_val(prec, gamma_s.recip_ref())))
}

/// Direct truncated lattice sum of the defining series, with every index
/// below `n_cut`. Converges polynomially in the all-plus directions, so this
/// is a low-precision sanity oracle only (roughly 1e-6 at n_cut = 30 for the
/// fixed a_4); the integral representation is the precision route.
pub fn barnes_zeta_lattice_sum(
    params: &BarnesParams,
    n_cut: u32,
    ctx: &PrecisionContext,
) -> Result<Cplx> {
    if !params.s.im.is_zero() || !params.s.re.is_integer() {
        return Err(Error::Domain("lattice sum needs integer s".into()));
    }
    let s = params.s.re.to_f64() as u32;
    let prec = ctx.prec_bits();
    let n = params.order();
    let mut idx = vec![0u32; n];
    let mut sum = Cplx::zero(prec);
    loop {
        let mut w = params.omega.clone();
        let mut sign = 1i8;
        for (j, &nj) in idx.iter().enumerate() {
            w = &w + &params.a[j].scale(&Float::with_val(prec, nj));
            if params.sigma[j] == -1 && nj % 2 == 1 {
                sign = -sign;
            }
        }
        let term = w.pow_u32(s).recip();
        sum = if sign == 1 { &sum + &term } else { &sum - &term };

        // odometer over the lattice block [0, n_cut)^N
        let mut j = 0;
        loop {
            if j == n {
                return Ok(sum);
            }
            idx[j] += 1;
            if idx[j] < n_cut {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// Numerator of the combined integrand: `sum_j w_j e^{-omega_j u}`, summed
/// through the exact moment series `sum_k (-u)^k/k! M_k` for small u, where
/// M_k = sum_j w_j omega_j^k are exact Gaussian integers with
/// M_0 = M_1 = M_2 = 0.
struct CombinedNumerator {
    weights: Vec<Cplx>,
    shifts: Vec<Cplx>,
    prec: u32,
}

impl CombinedNumerator {
    fn new(spec: &BarnesComboSpec, prec: u32) -> Self {
        let pairs = spec.weights_and_shifts();
        let weights = pairs
            .iter()
            .map(|((wr, wi), _)| Cplx::from_ints(prec, *wr, *wi))
            .collect::<Vec<_>>();
        let shifts = pairs
            .iter()
            .map(|(_, (or, oi))| Cplx::from_ints(prec, *or, *oi))
            .collect::<Vec<_>>();
        let me = CombinedNumerator {
            weights,
            shifts,
            prec,
        };
        // the zeroth moment (the weight sum) vanishes identically; this is
        // what makes the combined integrand regular enough at u = 0
        let m0 = me.moment(0);
        assert!(
            m0.re.is_zero() && m0.im.is_zero(),
            "combination weights must sum to zero"
        );
        me
    }

    fn moment(&self, k: u32) -> Cplx {
        let mut acc = Cplx::zero(self.prec);
        for (w, om) in self.weights.iter().zip(self.shifts.iter()) {
            acc = &acc + &(w * &om.pow_u32(k));
        }
        acc
    }

    fn eval(&self, u: &Float, eps: &Float) -> Cplx {
        let prec = self.prec;
        if *u > 0.5f32 {
            let mut acc = Cplx::zero(prec);
            for (w, om) in self.weights.iter().zip(self.shifts.iter()) {
                acc = &acc + &(w * &(-&om.scale(u)).exp());
            }
            return acc;
        }
        // moment series sum_{k>=1} (-u)^k/k! M_k, omega-powers advanced
        // incrementally (M_0 = 0 drops the k = 0 term)
        let mut pows: Vec<Cplx> = self.shifts.iter().map(|s| s.clone()).collect();
        let mut u_term = -Float::with_val(prec, u); // (-u)^1 / 1!
        let mut acc = Cplx::zero(prec);
        let mut k = 1u32;
        loop {
            let mut mk = Cplx::zero(prec);
            for (w, p) in self.weights.iter().zip(pows.iter()) {
                mk = &mk + &(w * p);
            }
            acc = &acc + &mk.scale(&u_term);
            // |M_k| <= 4 sqrt(10)^k; stop once the term bound is below eps
            let bound = u_term.clone().abs() * mk.abs().max(&Float::with_val(prec, 1));
            if bound < *eps && k > 6 {
                return acc;
            }
            k += 1;
            u_term = -(u_term * u) / k;
            for (p, s) in pows.iter_mut().zip(self.shifts.iter()) {
                *p = &*p * s;
            }
        }
    }
}

fn integral_cutoff(re_omega_min: &Float, ctx: &PrecisionContext) -> u32 {
    let digits = ctx.working_digits() as f64;
    let rw = re_omega_min.to_f64().max(0.5);
    ((2.0 * digits * std::f64::consts::LN_10 / rw).ceil() as u32).max(40)
}

fn integrate_panels(
    f: &dyn Fn(&Float) -> Cplx,
    cutoff: u32,
    ctx: &PrecisionContext,
) -> Result<Cplx> {
    let prec = ctx.prec_bits();
    let mut total = Cplx::zero(prec);
    let mut lo = 0u32;
    let mut hi = 1u32;
    while lo < cutoff {
        let a = Float::with_val(prec, lo);
        let b = Float::with_val(prec, hi.min(cutoff));
        total = &total + &tanh_sinh(f, &a, &b, ctx)?;
        lo = hi.min(cutoff);
        hi *= 2;
    }
    Ok(total)
}

/// Evaluates the four-term weighted zeta combination through the single
/// combined integrand
/// `(1/Gamma(s)) int u^{s-1} [sum_j w_j e^{-omega_j u}]
///  prod_k (1 - sigma_k e^{-a_k u})^{-1} du`.
///
/// The vanishing moments make the integrand regular at u = 0 even for
/// s = 4m - 1, where the individual zeta values sit outside Re(s) > 4.
pub fn barnes_combination_numeric(spec: &BarnesComboSpec, ctx: &PrecisionContext) -> Result<Cplx> {
    let prec = ctx.prec_bits();
    let eps = ctx.target_eps();
    let s = spec.zeta_s();
    let numerator = CombinedNumerator::new(spec, prec);
    let a4: Vec<Cplx> = crate::integrals::BARNES_A4
        .iter()
        .map(|(re, im)| Cplx::from_ints(prec, *re, *im))
        .collect();
    let sigma = spec.sigma4();

    let f = |u: &Float| -> Cplx {
        let mut v = Cplx::from_float(Float::with_val(prec, u.pow(s - 1)));
        v = &v * &numerator.eval(u, &eps);
        for (aj, sj) in a4.iter().zip(sigma.iter()) {
            v = &v / &one_minus_sigma_exp(aj, *sj, u, prec, &eps);
        }
        v
    };

    // minimal Re(omega_j) is 2
    let cutoff = integral_cutoff(&Float::with_val(prec, 2), ctx);
    let total = integrate_panels(&f, cutoff, ctx)?;
    let fact = Float::with_val(prec, factorial(s - 1));
    Ok(total.scale(&fact.recip()))
}
