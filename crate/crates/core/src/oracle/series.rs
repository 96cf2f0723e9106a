//! Direct high-precision summation of the six reciprocal hyperbolic series
//! families. Terms decay like e^{-m n y}, so sums are truncated once the
//! term bound falls below the context threshold past the term-size peak.

use super::PrecisionContext;
use crate::error::{Error, Result};
use crate::hyperbolic::{SumFamily, SumKind};
use rug::ops::Pow;
use rug::Float;

/// Sums the series `kind` at the point y > 0.
pub fn sum_hyperbolic(kind: &SumKind, y: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if !y.is_finite() || y.cmp0() != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Domain(format!("series point must be y > 0, got {y}")));
    }
    let prec = ctx.prec_bits();
    let eps = ctx.target_eps();
    let y = Float::with_val(prec, y);

    // index n runs over 1, 2, ... ; odd-index families use k = 2n - 1 and
    // halve the argument.
    let odd_index = matches!(kind.family, SumFamily::SPrime | SumFamily::DsPrime);
    let alternating = matches!(kind.family, SumFamily::SBar | SumFamily::CBar);
    let uses_cosh_base = matches!(kind.family, SumFamily::CBar);
    let cosh_weighted = matches!(kind.family, SumFamily::Ds | SumFamily::DsPrime);

    // sinh^m(k y) ~ e^{-m k y} decay, minus one power of decay for the
    // cosh-weighted families
    let m = kind.m;
    let decay = if cosh_weighted { m as i64 - 1 } else { m as i64 };
    if decay <= 0 {
        return Err(Error::Domain(format!(
            "series {kind} does not converge (cosh weight cancels the sinh^m decay)"
        )));
    }

    let mut sum = Float::new(prec);
    // terms are unimodal in n; stop on the first sub-threshold term after
    // the sequence has started decreasing
    let mut decreasing = false;
    let mut prev_mag: Option<Float> = None;
    let max_terms = 2_000_000u64;
    for n in 1..=max_terms {
        let k: u64 = if odd_index { 2 * n - 1 } else { n };
        let arg = if odd_index {
            Float::with_val(prec, &y * k) / 2u32
        } else {
            Float::with_val(prec, &y * k)
        };
        let base = if uses_cosh_base {
            arg.clone().cosh()
        } else {
            arg.clone().sinh()
        };
        let mut term = Float::with_val(prec, k).pow(kind.p as i32)
            / Float::with_val(prec, (&base).pow(m));
        if cosh_weighted {
            term *= arg.cosh();
        }
        let mag = term.clone().abs();
        if alternating && n % 2 == 0 {
            term = -term;
        }
        sum += term;

        if let Some(prev) = &prev_mag {
            if mag < *prev {
                decreasing = true;
            }
        }
        if decreasing && mag < eps {
            return Ok(sum);
        }
        prev_mag = Some(mag);
    }
    Err(Error::NoConvergence(format!(
        "series {kind} at y = {y} did not fall below threshold in {max_terms} terms"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::SumFamily;
    use crate::oracle::pi;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    #[test]
    fn rejects_bad_y() {
        let c = ctx();
        let kind = SumKind::new(SumFamily::S, 1, 1).unwrap();
        let zero = Float::new(c.prec_bits());
        assert!(sum_hyperbolic(&kind, &zero, &c).is_err());
        let neg = Float::with_val(c.prec_bits(), -1);
        assert!(sum_hyperbolic(&kind, &neg, &c).is_err());
    }

    #[test]
    fn s11_at_20_two_term_dominant() {
        // S_{1,1}(20) = 2 e^{-20} + ... = 4.1223072618...e-9
        let c = ctx();
        let kind = SumKind::new(SumFamily::S, 1, 1).unwrap();
        let y = Float::with_val(c.prec_bits(), 20);
        let v = sum_hyperbolic(&kind, &y, &c).unwrap();
        let expected = Float::parse("4.12230726187053274715032298759e-9").unwrap();
        let expected = Float::with_val(c.prec_bits(), expected);
        let diff = Float::with_val(c.prec_bits(), &v - &expected).abs();
        assert!(diff < 1e-24, "S_1,1(20) = {v}");
    }

    #[test]
    fn ds_with_m1_diverges_cleanly() {
        let c = ctx();
        let kind = SumKind::new(SumFamily::Ds, 2, 1).unwrap();
        let y = pi(&c);
        assert!(matches!(
            sum_hyperbolic(&kind, &y, &c),
            Err(Error::Domain(_))
        ));
    }
}
