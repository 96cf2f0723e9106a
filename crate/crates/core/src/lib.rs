//! Exact closed forms — canonical rational polynomials in Gamma(1/4) and
//! 1/pi — for the four families of mixed Berndt-type integrals and the
//! Ramanujan-type reciprocal hyperbolic series behind them, certified
//! against an independent arbitrary-precision numeric oracle.
//!
//! The crate is organized as:
//!
//! - [`exact`]: big rationals, Q[sqrt(2)], the Gamma/pi normal form;
//! - [`poly`]: dense polynomials over exact rings and sqrt(1-x) factors;
//! - [`jacobi`]: Maclaurin coefficient polynomials of sn(u) and sn^2(u);
//! - [`hyperbolic`]: closed forms of Cbar_{2p,2} and Sbar_{2p,2}, general
//!   and at y = pi/2 via the duplication transform;
//! - [`integrals`]: the four integral families, coefficient tables, the
//!   vanishing conjecture checker, exact Barnes-zeta combinations;
//! - [`oracle`]: series summation, tanh-sinh quadrature, generalized Barnes
//!   zeta evaluation, verification reports.

pub mod error;
pub mod exact;
pub mod hyperbolic;
pub mod integrals;
pub mod jacobi;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use exact::{BigRational, GammaPiExpr, PiMultiple, RamanujanPoint, Sqrt2Number};
pub use hyperbolic::{
    cbar_at_quarter, cbar_general, sbar_at_quarter, sbar_general, SumFamily, SumKind, ZExpr,
};
pub use integrals::{
    barnes_combination_exact, check_conjecture, closed_form, coefficient_table, BarnesComboSpec,
    CoefficientRow, ConjectureRow, Family, IntegralSpec,
};
pub use oracle::{
    barnes_combination_numeric, barnes_zeta, eval_gamma_pi, integrate_berndt, sum_hyperbolic,
    verify, verify_family, BarnesParams, Cplx, PrecisionContext, VerificationReport,
};

/// Re-export of the underlying multiprecision crate for downstream float
/// handling (the CLI renders reports from these types).
pub use rug;
