//! Independent arbitrary-precision numerical engine: series summation,
//! tanh-sinh quadrature of the improper integrals, generalized Barnes
//! multiple zeta evaluation, and exact-vs-numeric verification reports.
//!
//! All evaluations are pure given an explicit [`PrecisionContext`]; precision
//! travels with the context, never through global state.

mod barnes;
mod complex;
mod quadrature;
mod series;

pub use barnes::{
    barnes_combination_numeric, barnes_zeta, barnes_zeta_lattice_sum, BarnesParams,
};
pub use complex::Cplx;
pub use quadrature::{integrate_berndt, tanh_sinh};
pub use series::sum_hyperbolic;

use crate::error::{Error, Result};
use crate::exact::GammaPiExpr;
use crate::integrals::{closed_form, Family, IntegralSpec};
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Bits per decimal digit, rounded up generously.
const LOG2_10: f64 = 3.321928094887362;

/// Requested decimal precision plus guard digits; fixes the working MPFR
/// precision and the truncation thresholds of every oracle routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    decimal_digits: u32,
    guard_digits: u32,
}

impl PrecisionContext {
    /// Standard context with 10 guard digits. Requires >= 15 digits.
    pub fn new(decimal_digits: u32) -> Result<Self> {
        Self::with_guard(decimal_digits, 10)
    }

    pub fn with_guard(decimal_digits: u32, guard_digits: u32) -> Result<Self> {
        if decimal_digits < 15 {
            return Err(Error::Domain(format!(
                "precision context needs >= 15 decimal digits, got {decimal_digits}"
            )));
        }
        if guard_digits < 10 {
            return Err(Error::Domain(format!(
                "precision context needs >= 10 guard digits, got {guard_digits}"
            )));
        }
        Ok(PrecisionContext {
            decimal_digits,
            guard_digits,
        })
    }

    pub fn decimal_digits(&self) -> u32 {
        self.decimal_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.decimal_digits + self.guard_digits
    }

    /// MPFR working precision in bits.
    pub fn prec_bits(&self) -> u32 {
        (self.working_digits() as f64 * LOG2_10).ceil() as u32 + 16
    }

    /// Truncation threshold 10^-(digits + guard).
    pub fn target_eps(&self) -> Float {
        Float::with_val(self.prec_bits(), 10u32).pow(-(self.working_digits() as i32))
    }

    /// Pass/fail threshold of verification reports: 10^-(digits * 3/5).
    pub fn pass_eps(&self) -> Float {
        Float::with_val(self.prec_bits(), 10u32).pow(-((self.decimal_digits * 3 / 5) as i32))
    }
}

fn const_cache() -> &'static Mutex<HashMap<(u32, bool), Float>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, bool), Float>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// pi at the context's working precision (cached per precision).
pub fn pi(ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec_bits();
    let mut cache = const_cache().lock().expect("const cache poisoned");
    cache
        .entry((prec, false))
        .or_insert_with(|| Float::with_val(prec, Constant::Pi))
        .clone()
}

/// Gamma(1/4) at working precision, via the MPFR gamma routine (cached).
pub fn gamma_quarter(ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec_bits();
    let mut cache = const_cache().lock().expect("const cache poisoned");
    cache
        .entry((prec, true))
        .or_insert_with(|| Float::with_val(prec, 0.25f32).gamma())
        .clone()
}

/// Evaluates an exact Gamma(1/4)/pi polynomial to a working-precision real.
pub fn eval_gamma_pi(e: &GammaPiExpr, ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec_bits();
    let g = gamma_quarter(ctx);
    let sqrt_pi = pi(ctx).sqrt();
    let mut acc = Float::new(prec);
    for (&(ge, h2), c) in e.terms() {
        let mut term = Float::with_val(prec, c.as_rug());
        term *= Float::with_val(prec, (&g).pow(ge as i32));
        term *= Float::with_val(prec, (&sqrt_pi).pow(h2 as i32));
        acc += term;
    }
    acc
}

/// How a verification report obtained its oracle value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMethod {
    Series,
    Quadrature,
    Barnes,
}

impl fmt::Display for OracleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OracleMethod::Series => "series",
            OracleMethod::Quadrature => "quadrature",
            OracleMethod::Barnes => "barnes",
        };
        write!(f, "{s}")
    }
}

/// An exact value paired with an independent numeric computation and the
/// comparison outcome.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub exact: GammaPiExpr,
    pub exact_numeric: Float,
    pub oracle_numeric: Float,
    pub abs_error: Float,
    pub rel_error: Float,
    pub digits_used: u32,
    pub passed: bool,
    pub method: OracleMethod,
    /// Failure diagnostic when a component errored instead of producing values.
    pub diagnostic: Option<String>,
}

impl VerificationReport {
    fn failed(diagnostic: String, ctx: &PrecisionContext, method: OracleMethod) -> Self {
        let prec = ctx.prec_bits();
        let nan = Float::with_val(prec, rug::float::Special::Nan);
        VerificationReport {
            exact: GammaPiExpr::zero(),
            exact_numeric: nan.clone(),
            oracle_numeric: nan.clone(),
            abs_error: nan.clone(),
            rel_error: nan,
            digits_used: ctx.decimal_digits,
            passed: false,
            method,
            diagnostic: Some(diagnostic),
        }
    }
}

/// Runs the full certification of one integral: exact closed form,
/// evaluation, independent quadrature, and the error comparison.
pub fn verify(spec: &IntegralSpec, ctx: &PrecisionContext) -> VerificationReport {
    let exact = match closed_form(spec) {
        Ok(e) => e,
        Err(err) => {
            return VerificationReport::failed(err.to_string(), ctx, OracleMethod::Quadrature)
        }
    };
    let exact_numeric = eval_gamma_pi(&exact, ctx);
    let oracle_numeric = match integrate_berndt(spec, ctx) {
        Ok(v) => v,
        Err(err) => {
            return VerificationReport::failed(err.to_string(), ctx, OracleMethod::Quadrature)
        }
    };
    let prec = ctx.prec_bits();
    let abs_error = Float::with_val(prec, &exact_numeric - &oracle_numeric).abs();
    let scale = oracle_numeric.clone().abs().max(&Float::with_val(prec, 1));
    let rel_error = Float::with_val(prec, &abs_error / &scale);
    let passed = abs_error < ctx.pass_eps();
    VerificationReport {
        exact,
        exact_numeric,
        oracle_numeric,
        abs_error,
        rel_error,
        digits_used: ctx.decimal_digits,
        passed,
        method: OracleMethod::Quadrature,
    diagnostic: None,
    }
}

/// Like [`verify`] but accepts unvalidated (family, exponent) input, turning
/// invalid specs into failed reports with a diagnostic.
pub fn verify_family(family: Family, exponent: u32, ctx: &PrecisionContext) -> VerificationReport {
    match IntegralSpec::new(family, exponent) {
        Ok(spec) => verify(&spec, ctx),
        Err(err) => VerificationReport::failed(err.to_string(), ctx, OracleMethod::Quadrature),
    }
}
