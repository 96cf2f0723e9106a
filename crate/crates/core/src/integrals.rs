//! Exact closed forms of the four mixed Berndt-type integral families,
//! coefficient tables, the conjecture checker, and the exact side of the
//! generalized Barnes zeta combination identities.

use crate::error::{Error, Result};
use crate::exact::{factorial, BigRational, GammaPiExpr};
use crate::hyperbolic::{cbar_at_quarter, sbar_at_quarter};
use std::fmt;

/// The four integrand families, named by the signs in
/// `(sinh x +/- sin x) / [(sinh^2 x + sin^2 x)(cosh x +/- cos x)]`:
/// the first letter is the sinh/sin sign, the second the cosh/cos sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Family {
    /// (sinh + sin) / (cosh + cos), exponents s = 4m - 2
    Pp,
    /// (sinh - sin) / (cosh + cos), exponents s = 4m (including s = 0)
    Mp,
    /// (sinh + sin) / (cosh - cos), exponents s = 4m
    Pm,
    /// (sinh - sin) / (cosh - cos), exponents s = 4m - 2 (including s = 2)
    Mm,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pp" => Ok(Family::Pp),
            "mp" => Ok(Family::Mp),
            "pm" => Ok(Family::Pm),
            "mm" => Ok(Family::Mm),
            other => Err(Error::InvalidSpec(format!(
                "unknown family '{other}' (expected pp, mp, pm or mm)"
            ))),
        }
    }

    /// Sign of the sin term in the numerator.
    pub fn sin_sign(&self) -> i32 {
        match self {
            Family::Pp | Family::Pm => 1,
            Family::Mp | Family::Mm => -1,
        }
    }

    /// Sign of the cos term in the denominator.
    pub fn cos_sign(&self) -> i32 {
        match self {
            Family::Pp | Family::Mp => 1,
            Family::Pm | Family::Mm => -1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Pp => "pp",
            Family::Mp => "mp",
            Family::Pm => "pm",
            Family::Mm => "mm",
        };
        write!(f, "{s}")
    }
}

/// A validated mixed Berndt-type integral
/// `B(family, s) = int_0^inf x^s (sinh x +/- sin x) /
///  [(sinh^2 x + sin^2 x)(cosh x +/- cos x)] dx`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IntegralSpec {
    family: Family,
    exponent: u32,
}

impl IntegralSpec {
    /// Checks the parity/range rules: MP and PM need s = 0 mod 4 (PM with
    /// s >= 4), PP and MM need s = 2 mod 4.
    pub fn new(family: Family, exponent: u32) -> Result<Self> {
        let ok = match family {
            Family::Mp => exponent % 4 == 0,
            Family::Pm => exponent % 4 == 0 && exponent >= 4,
            Family::Pp | Family::Mm => exponent % 4 == 2,
        };
        if !ok {
            return Err(Error::InvalidSpec(format!(
                "family {family} does not admit exponent s = {exponent}"
            )));
        }
        Ok(IntegralSpec { family, exponent })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The theorem index m for this member (None for the stored low-order
    /// special cases MP s=0 and MM s=2).
    pub fn m_index(&self) -> Option<u32> {
        match self.family {
            Family::Mp | Family::Pm => (self.exponent >= 4).then(|| self.exponent / 4),
            Family::Pp => Some((self.exponent + 2) / 4),
            Family::Mm => (self.exponent >= 6).then(|| (self.exponent + 2) / 4),
        }
    }

    /// All valid members with exponent <= s_max, in increasing exponent order.
    pub fn all_up_to(s_max: u32) -> Vec<IntegralSpec> {
        let mut out = Vec::new();
        for s in 0..=s_max {
            for family in [Family::Pp, Family::Mp, Family::Pm, Family::Mm] {
                if let Ok(spec) = IntegralSpec::new(family, s) {
                    out.push(spec);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntegralSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B[{}](s={})", self.family, self.exponent)
    }
}

/// Exact closed form of the integral as a Gamma(1/4)/pi polynomial.
///
/// General members reduce to Cbar/Sbar at pi/2 with the prefactor
/// (-1)^{m-1} pi^{4m +/- 1} / (2 4^m or 4^m); MP s=0 and MM s=2 are the
/// stored low-order evaluations.
pub fn closed_form(spec: &IntegralSpec) -> Result<GammaPiExpr> {
    match (spec.family, spec.exponent) {
        // Gamma^4/(32 pi^2) - pi/8
        (Family::Mp, 0) => Ok(&GammaPiExpr::monomial(BigRational::new(1, 32), 4, -4)
            - &GammaPiExpr::monomial(BigRational::new(1, 8), 0, 2)),
        // Gamma^4/(2^6 pi) - pi/8
        (Family::Mm, 2) => Ok(&GammaPiExpr::monomial(BigRational::new(1, 64), 4, -2)
            - &GammaPiExpr::monomial(BigRational::new(1, 8), 0, 2)),
        _ => {
            let m = spec
                .m_index()
                .expect("validated general member has an m index");
            let sign = if m % 2 == 1 { 1 } else { -1 }; // (-1)^{m-1}
            let (series_value, pi_power, denom_pow2) = match spec.family {
                // s = 4m: pi^{4m+1} / (2 * 4^m) * Cbar/Sbar_{4m,2}(pi/2)
                Family::Mp => (cbar_at_quarter(2 * m)?, 4 * m + 1, 2 * m + 1),
                Family::Pm => (sbar_at_quarter(2 * m)?, 4 * m + 1, 2 * m + 1),
                // s = 4m-2: pi^{4m-1} / 4^m * Cbar/Sbar_{4m-2,2}(pi/2)
                Family::Pp => (cbar_at_quarter(2 * m - 1)?, 4 * m - 1, 2 * m),
                Family::Mm => (sbar_at_quarter(2 * m - 1)?, 4 * m - 1, 2 * m),
            };
            let scale = BigRational::from_int(sign) * BigRational::inv_pow2(denom_pow2);
            Ok(series_value
                .shift(0, 2 * pi_power as i64)
                .scale(&scale))
        }
    }
}

/// One row of the rational coefficient tables: the structure constants of
/// the four families at index m, in the fixed basis of the structure
/// theorems (first entry multiplies the lower Gamma power).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientRow {
    pub m: u32,
    /// MP s=4m: c1 Gamma^{8m}/pi^{2m} + c2 Gamma^{8m+4}/pi^{2m+2}
    pub c1: BigRational,
    pub c2: BigRational,
    /// PP s=4m-2: d1 Gamma^{8m-4}/pi^{2m-1} + d2 Gamma^{8m}/pi^{2m+1}
    pub d1: BigRational,
    pub d2: BigRational,
    /// PM s=4m: e1 Gamma^{8m}/pi^{2m} + e2 Gamma^{8m+4}/pi^{2m+2}
    pub e1: BigRational,
    pub e2: BigRational,
    /// MM s=4m-2 (m >= 2): f1 Gamma^{8m-4}/pi^{2m-1} + f2 Gamma^{8m}/pi^{2m+1}
    pub f1: Option<BigRational>,
    pub f2: Option<BigRational>,
}

/// Extracts the two coefficients of an exactly-two-term closed form in the
/// expected monomial basis.
fn two_term_coeffs(
    e: &GammaPiExpr,
    low: (i64, i64),
    high: (i64, i64),
    what: &str,
) -> Result<(BigRational, BigRational)> {
    if e.num_terms() != 2 {
        return Err(Error::NonRational(format!(
            "{what}: expected exactly two monomials, got {} in {e}",
            e.num_terms()
        )));
    }
    match (e.coeff(low.0, low.1), e.coeff(high.0, high.1)) {
        (Some(a), Some(b)) => Ok((a.clone(), b.clone())),
        _ => Err(Error::NonRational(format!(
            "{what}: monomials of {e} do not match the structure theorem basis"
        ))),
    }
}

/// Computes the coefficient rows for m = 1..=m_max.
pub fn coefficient_table(m_max: u32) -> Result<Vec<CoefficientRow>> {
    if m_max < 1 {
        return Err(Error::InvalidSpec("coefficient table needs m_max >= 1".into()));
    }
    let mut rows = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let mi = m as i64;
        let mp = closed_form(&IntegralSpec::new(Family::Mp, 4 * m)?)?;
        let (c1, c2) = two_term_coeffs(
            &mp,
            (8 * mi, -4 * mi),
            (8 * mi + 4, -4 * mi - 4),
            "MP coefficients",
        )?;
        let pp = closed_form(&IntegralSpec::new(Family::Pp, 4 * m - 2)?)?;
        let (d1, d2) = two_term_coeffs(
            &pp,
            (8 * mi - 4, -4 * mi + 2),
            (8 * mi, -4 * mi - 2),
            "PP coefficients",
        )?;
        let pm = closed_form(&IntegralSpec::new(Family::Pm, 4 * m)?)?;
        let (e1, e2) = two_term_coeffs(
            &pm,
            (8 * mi, -4 * mi),
            (8 * mi + 4, -4 * mi - 4),
            "PM coefficients",
        )?;
        let (f1, f2) = if m >= 2 {
            let mm = closed_form(&IntegralSpec::new(Family::Mm, 4 * m - 2)?)?;
            let (f1, f2) = two_term_coeffs(
                &mm,
                (8 * mi - 4, -4 * mi + 2),
                (8 * mi, -4 * mi - 2),
                "MM coefficients",
            )?;
            (Some(f1), Some(f2))
        } else {
            (None, None)
        };
        rows.push(CoefficientRow {
            m,
            c1,
            c2,
            d1,
            d2,
            e1,
            e2,
            f1,
            f2,
        });
    }
    Ok(rows)
}

/// One line of conjecture evidence: the exact sums c_{2,m} + e_{2,m} and
/// (for m >= 2) d_{1,m} + f_{1,m}, which the conjecture asserts vanish.
#[derive(Clone, Debug)]
pub struct ConjectureRow {
    pub m: u32,
    pub c2_plus_e2: BigRational,
    pub d1_plus_f1: Option<BigRational>,
    pub holds: bool,
}

/// Exact evidence for the vanishing conjecture up to m_max. This is
/// evidence, not proof: rows report the exact sums and flag any nonzero one.
pub fn check_conjecture(m_max: u32) -> Result<Vec<ConjectureRow>> {
    let rows = coefficient_table(m_max)?;
    Ok(rows
        .into_iter()
        .map(|row| {
            let c2_plus_e2 = &row.c2 + &row.e2;
            let d1_plus_f1 = row.f1.as_ref().map(|f1| &row.d1 + f1);
            let holds = c2_plus_e2.is_zero()
                && d1_plus_f1.as_ref().map_or(true, |v| v.is_zero());
            ConjectureRow {
                m: row.m,
                c2_plus_e2,
                d1_plus_f1,
                holds,
            }
        })
        .collect())
}

/// A four-term combination of generalized Barnes zeta values
/// `sum_j w_j zeta_4(s, 3 + i^j | a_4; sigma_4)` tied to one integral family.
///
/// The fixed data: a_4 = (2-2i, 2+2i, 1-i, 1+i); the cosh+cos families
/// (PP, MP) use sigma_4 = (1, 1, -1, -1), the cosh-cos families (PM, MM)
/// the plain all-ones sigma; MP and MM carry weights i^{j-2}, PP and PM
/// weights (-i)^{j-2}; s = 4m+1 for the x^{4m} families and 4m-1 for the
/// x^{4m-2} ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BarnesComboSpec {
    family: Family,
    m: u32,
}

/// Gaussian integers as (re, im) pairs; exact weight/shift data.
pub type GaussInt = (i64, i64);

/// The fixed length-4 parameter vector a_4 = (2-2i, 2+2i, 1-i, 1+i).
pub const BARNES_A4: [GaussInt; 4] = [(2, -2), (2, 2), (1, -1), (1, 1)];

impl BarnesComboSpec {
    pub fn new(family: Family, m: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidSpec("combination index m must be >= 1".into()));
        }
        // the underlying integral must exist
        let _ = Self::integral_of(family, m)?;
        Ok(BarnesComboSpec { family, m })
    }

    fn integral_of(family: Family, m: u32) -> Result<IntegralSpec> {
        let s = match family {
            Family::Mp | Family::Pm => 4 * m,
            Family::Pp | Family::Mm => 4 * m - 2,
        };
        IntegralSpec::new(family, s)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn integral(&self) -> IntegralSpec {
        Self::integral_of(self.family, self.m).expect("validated at construction")
    }

    /// First argument of the zeta values: s = integral exponent + 1.
    pub fn zeta_s(&self) -> u32 {
        self.integral().exponent() + 1
    }

    /// The four (weight, shift) pairs (w_j, 3 + i^j), j = 1..4, as exact
    /// Gaussian integers. Weights are i^{j-2} for MP/MM and (-i)^{j-2} for
    /// PP/PM; they sum to zero.
    pub fn weights_and_shifts(&self) -> [(GaussInt, GaussInt); 4] {
        let base: GaussInt = match self.family {
            Family::Mp | Family::Mm => (0, 1),  // i
            Family::Pp | Family::Pm => (0, -1), // -i
        };
        let mut out = [((0, 0), (0, 0)); 4];
        // w_j = base^{j-2}; i^4 = 1 so j-2 is taken mod 4
        let mut pow = [(1, 0); 5]; // base^0..base^4
        for k in 1..5 {
            let (a, b) = pow[k - 1];
            let (c, d) = base;
            pow[k] = (a * c - b * d, a * d + b * c);
        }
        let i_pows = [(1, 0), (0, 1), (-1, 0), (0, -1)]; // i^0..i^3
        for j in 1..=4usize {
            let w = pow[(j + 2) % 4]; // base^{j-2} = base^{j+2 mod 4}
            let ij = i_pows[j % 4];
            out[j - 1] = (w, (3 + ij.0, ij.1));
        }
        let sum = out
            .iter()
            .fold((0, 0), |acc, ((re, im), _)| (acc.0 + re, acc.1 + im));
        assert_eq!(sum, (0, 0), "combination weights must sum to zero");
        out
    }

    /// The sign vector sigma_4: (1, 1, -1, -1) for the cosh+cos families,
    /// all ones for the cosh-cos ones.
    pub fn sigma4(&self) -> [i8; 4] {
        match self.family {
            Family::Pp | Family::Mp => [1, 1, -1, -1],
            Family::Pm | Family::Mm => [1, 1, 1, 1],
        }
    }
}

impl fmt::Display for BarnesComboSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta4-combo[{} m={}]", self.family, self.m)
    }
}

/// Exact value of the four-term zeta combination: the integral identity
/// gives `combination = B(family, s-1) / (4 (s-1)!)`.
pub fn barnes_combination_exact(spec: &BarnesComboSpec) -> Result<GammaPiExpr> {
    let integral = closed_form(&spec.integral())?;
    let s = spec.zeta_s();
    let denom = BigRational::from_integer(factorial(s - 1) * 4u32);
    Ok(integral.scale(&denom.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n, d)
    }

    #[test]
    fn spec_validation() {
        assert!(IntegralSpec::new(Family::Pp, 2).is_ok());
        assert!(IntegralSpec::new(Family::Pp, 3).is_err());
        assert!(IntegralSpec::new(Family::Pp, 4).is_err());
        assert!(IntegralSpec::new(Family::Mp, 0).is_ok());
        assert!(IntegralSpec::new(Family::Pm, 0).is_err());
        assert!(IntegralSpec::new(Family::Pm, 4).is_ok());
        assert!(IntegralSpec::new(Family::Mm, 2).is_ok());
        assert!(IntegralSpec::new(Family::Mm, 4).is_err());
    }

    #[test]
    fn enumerate_members() {
        let all = IntegralSpec::all_up_to(10);
        assert_eq!(all.len(), 11);
        assert_eq!(all[0], IntegralSpec::new(Family::Mp, 0).unwrap());
    }

    #[test]
    fn stored_special_cases() {
        let mp0 = closed_form(&IntegralSpec::new(Family::Mp, 0).unwrap()).unwrap();
        assert_eq!(
            mp0,
            &GammaPiExpr::monomial(r(1, 32), 4, -4) - &GammaPiExpr::monomial(r(1, 8), 0, 2)
        );
        let mm2 = closed_form(&IntegralSpec::new(Family::Mm, 2).unwrap()).unwrap();
        assert_eq!(
            mm2,
            &GammaPiExpr::monomial(r(1, 64), 4, -2) - &GammaPiExpr::monomial(r(1, 8), 0, 2)
        );
    }

    #[test]
    fn pp2_is_first_table_row() {
        // Gamma^8/(2^9 pi^3) - Gamma^4/(2^6 pi)
        let v = closed_form(&IntegralSpec::new(Family::Pp, 2).unwrap()).unwrap();
        let expected =
            &GammaPiExpr::monomial(r(1, 512), 8, -6) - &GammaPiExpr::monomial(r(1, 64), 4, -2);
        assert_eq!(v, expected);
    }

    #[test]
    fn m1_coefficient_row() {
        let rows = coefficient_table(1).unwrap();
        assert_eq!(rows[0].d1, r(-1, 64));
        assert_eq!(rows[0].d2, r(1, 512));
        assert_eq!(rows[0].c1, r(3, 1024));
        assert_eq!(rows[0].c2, r(-1, 8192));
        assert_eq!(rows[0].e1, r(-1, 1024));
        assert_eq!(rows[0].e2, r(1, 8192));
        assert!(rows[0].f1.is_none());
    }

    #[test]
    fn conjecture_first_rows() {
        let rows = check_conjecture(2).unwrap();
        assert!(rows.iter().all(|r| r.holds));
        assert!(rows[0].d1_plus_f1.is_none());
        assert_eq!(rows[1].d1_plus_f1, Some(BigRational::zero()));
    }

    #[test]
    fn combo_weights_sum_zero_and_match_pattern() {
        let spec = BarnesComboSpec::new(Family::Mp, 1).unwrap();
        assert_eq!(spec.zeta_s(), 5);
        let ws = spec.weights_and_shifts();
        // j=1: w = i^{-1} = -i, shift 3+i
        assert_eq!(ws[0], ((0, -1), (3, 1)));
        // j=2: w = 1, shift 2
        assert_eq!(ws[1], ((1, 0), (2, 0)));
        // j=3: w = i, shift 3-i
        assert_eq!(ws[2], ((0, 1), (3, -1)));
        // j=4: w = -1, shift 4
        assert_eq!(ws[3], ((-1, 0), (4, 0)));
        assert_eq!(spec.sigma4(), [1, 1, -1, -1]);
        assert_eq!(
            BarnesComboSpec::new(Family::Pm, 1).unwrap().sigma4(),
            [1, 1, 1, 1]
        );
    }

    #[test]
    fn combo_exact_pp_m1() {
        // Gamma^8/(2^12 pi^3) - Gamma^4/(2^9 pi)
        let spec = BarnesComboSpec::new(Family::Pp, 1).unwrap();
        let v = barnes_combination_exact(&spec).unwrap();
        let expected =
            &GammaPiExpr::monomial(r(1, 4096), 8, -6) - &GammaPiExpr::monomial(r(1, 512), 4, -2);
        assert_eq!(v, expected);
    }
}
