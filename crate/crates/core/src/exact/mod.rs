//! Exact arithmetic foundations: arbitrary-precision rationals, the quadratic
//! extension Q[sqrt(2)], and the canonical Gamma(1/4)/pi polynomial form used
//! for every closed-form answer.

mod gamma_pi;
mod rational;
mod sqrt2;

pub use gamma_pi::{GammaPiExpr, PiMultiple, RamanujanPoint};
pub use rational::{binomial, factorial, BigRational};
pub use sqrt2::Sqrt2Number;
