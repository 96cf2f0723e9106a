//! Exact closed forms of the reciprocal hyperbolic series
//! Cbar_{2p,2} and Sbar_{2p,2}: general-x expressions in the Ramanujan
//! parameters (z, z'), and exact Gamma(1/4)/pi values at y = pi/2 obtained
//! through the duplication transform at x0 = 1/2.

use crate::error::{Error, Result};
use crate::exact::{BigRational, GammaPiExpr, RamanujanPoint, Sqrt2Number};
use crate::jacobi::{sn_squared_coeffs, with_q_polys};
use crate::poly::{Poly, SqrtFactorExpr};
use std::collections::BTreeMap;
use std::fmt;

/// The six Ramanujan-type series families of the summation engine.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SumFamily {
    /// sum n^p / sinh^m(n y)
    S,
    /// sum (-1)^{n-1} n^p / sinh^m(n y)
    SBar,
    /// sum (-1)^{n-1} n^p / cosh^m(n y)
    CBar,
    /// sum (2n-1)^p / sinh^m((2n-1) y / 2)
    SPrime,
    /// sum n^p cosh(n y) / sinh^m(n y)
    Ds,
    /// sum (2n-1)^p cosh((2n-1) y / 2) / sinh^m((2n-1) y / 2)
    DsPrime,
}

impl SumFamily {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(SumFamily::S),
            "sbar" => Ok(SumFamily::SBar),
            "cbar" => Ok(SumFamily::CBar),
            "sprime" => Ok(SumFamily::SPrime),
            "ds" => Ok(SumFamily::Ds),
            "dsprime" => Ok(SumFamily::DsPrime),
            other => Err(Error::InvalidSpec(format!("unknown series kind '{other}'"))),
        }
    }
}

impl fmt::Display for SumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SumFamily::S => "S",
            SumFamily::SBar => "Sbar",
            SumFamily::CBar => "Cbar",
            SumFamily::SPrime => "S'",
            SumFamily::Ds => "DS",
            SumFamily::DsPrime => "DS'",
        };
        write!(f, "{s}")
    }
}

/// A specific series: family plus the (p, m) indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SumKind {
    pub family: SumFamily,
    pub p: i64,
    pub m: u32,
}

impl SumKind {
    pub fn new(family: SumFamily, p: i64, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpec("series order m must be >= 1".into()));
        }
        Ok(SumKind { family, p, m })
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.family, self.p, self.m)
    }
}

/// A sum of terms `coeff(x) * z^{z_exp} * (z')^{zprime_exp}` with
/// sqrt(1-x)-weighted polynomial coefficients.
///
/// Every stored expression is homogeneous: z_exp + zprime_exp is the same
/// for all terms. The z' exponent exceeds 1 only in the stored p = 1 case of
/// Sbar, which carries (z')^2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZExpr {
    terms: BTreeMap<(u32, u8), SqrtFactorExpr>,
}

impl ZExpr {
    pub fn from_terms(terms: Vec<(u32, u8, SqrtFactorExpr)>) -> Self {
        let mut map = BTreeMap::new();
        let mut weight: Option<u32> = None;
        for (ze, zpe, coeff) in terms {
            let coeff = coeff.normalized();
            if coeff.poly_part().is_zero() {
                continue;
            }
            let w = ze + zpe as u32;
            assert!(
                weight.map_or(true, |prev| prev == w),
                "ZExpr terms must share total z-degree"
            );
            weight = Some(w);
            let dup = map.insert((ze, zpe), coeff);
            assert!(dup.is_none(), "duplicate ZExpr term");
        }
        ZExpr { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u8), &SqrtFactorExpr)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn get(&self, z_exp: u32, zprime_exp: u8) -> Option<&SqrtFactorExpr> {
        self.terms.get(&(z_exp, zprime_exp))
    }
}

/// The fixed data of the duplication transform at x0 = 1/2: with
/// t = sqrt(x0) = sqrt(2)/2, the half-period parameters are
/// x = 4t/(1+t)^2, z = z0 (1+t), z' = t (1+t)^5 z0' + (1+t)^4 z0 / 2,
/// and sqrt(1-x) = (1-t)/(1+t) = (sqrt(2)-1)^2.
struct HalfLemniscatic {
    t: Sqrt2Number,
    one_plus_t: Sqrt2Number,
    one_minus_t: Sqrt2Number,
    x_star: Sqrt2Number,
    w: Sqrt2Number,
    sqrt_w: Sqrt2Number,
}

impl HalfLemniscatic {
    fn new() -> Self {
        let t = Sqrt2Number::new(BigRational::zero(), BigRational::new(1, 2));
        let one = Sqrt2Number::one();
        let one_plus_t = &one + &t;
        let one_minus_t = &one - &t;
        let sqrt_w = &one_minus_t / &one_plus_t;
        let w = &sqrt_w * &sqrt_w;
        let x_star = &one - &w;
        HalfLemniscatic {
            t,
            one_plus_t,
            one_minus_t,
            x_star,
            w,
            sqrt_w,
        }
    }
}

/// General-x closed form of Cbar_{2p,2}(y) for p >= 1: the two-term
/// expression in z^{2p+1} z' and z^{2p+2} built from q_{2p-1}(1-x) sqrt(1-x)
/// and its x-derivative.
pub fn cbar_general(p: u32) -> Result<ZExpr> {
    if p < 1 {
        return Err(Error::Domain(
            "cbar_general requires p >= 1 (p = 0 is handled by cbar_at_quarter)".into(),
        ));
    }
    let sign = if p % 2 == 0 { 1 } else { -1 };
    let q_composed = with_q_polys(p as usize - 1, |qs| qs[p as usize - 1].compose_one_minus_x());
    let x_poly = Poly::<BigRational>::x();
    let x_one_minus_x = x_poly.mul(&Poly::from_i64(&[1, -1]));

    // p x(1-x)/2^{2p-1} * q_{2p-1}(1-x) sqrt(1-x)
    let c1 = BigRational::from_int(sign * p as i64) * BigRational::inv_pow2(2 * p - 1);
    let term1 = SqrtFactorExpr::new(q_composed.clone(), 1)
        .mul_poly(&x_one_minus_x)
        .scale(&c1);

    // x(1-x)/2^{2p} * d/dx [ q_{2p-1}(1-x) sqrt(1-x) ]
    let c2 = BigRational::from_int(sign) * BigRational::inv_pow2(2 * p);
    let term2 = SqrtFactorExpr::new(q_composed, 1)
        .derivative_of_poly_times_sqrt()?
        .mul_poly(&x_one_minus_x)
        .scale(&c2);

    Ok(ZExpr::from_terms(vec![
        (2 * p + 1, 1, term1),
        (2 * p + 2, 0, term2),
    ]))
}

/// General-x closed form of Sbar_{2p,2}(y): for p >= 2 the two-term
/// expression built from Q_{2p-2}(1-x); for p = 1 the stored three-term
/// expression carrying (z')^2.
pub fn sbar_general(p: u32) -> Result<ZExpr> {
    if p < 1 {
        return Err(Error::Domain("sbar_general requires p >= 1".into()));
    }
    if p == 1 {
        // (1/8) x(1-x) z^2 [ 4x(1-x) (z')^2 + 4(1-x) z' z - z^2 ]
        let x_one_minus_x = Poly::<BigRational>::x().mul(&Poly::from_i64(&[1, -1]));
        let eighth = BigRational::new(1, 8);
        let half = BigRational::new(1, 2);
        let t22 = SqrtFactorExpr::new(x_one_minus_x.mul(&x_one_minus_x), 0).scale(&half);
        let t31 = SqrtFactorExpr::new(
            Poly::<BigRational>::x().mul(&Poly::from_i64(&[1, -2, 1])),
            0,
        )
        .scale(&half);
        let t40 = SqrtFactorExpr::new(x_one_minus_x, 0).scale(&-eighth);
        return Ok(ZExpr::from_terms(vec![
            (2, 2, t22),
            (3, 1, t31),
            (4, 0, t40),
        ]));
    }
    let sign = if p % 2 == 0 { -1 } else { 1 }; // (-1)^{p-1}
    let qq_composed = sn_squared_coeffs(p as usize)?.compose_one_minus_x();
    let one_minus_x = Poly::from_i64(&[1, -1]);
    let x_one_minus_x = Poly::<BigRational>::x().mul(&one_minus_x);

    // x(1-x) z^{2p+2}/2^{2p} * d/dx{ (1-x) Q_{2p-2}(1-x) }
    let g = one_minus_x.mul(&qq_composed);
    let c1 = BigRational::from_int(sign) * BigRational::inv_pow2(2 * p);
    let term_z = SqrtFactorExpr::new(g.derivative().mul(&x_one_minus_x), 0).scale(&c1);

    // 2p (1-x)^2 x z^{2p+1} z'/2^{2p} * Q_{2p-2}(1-x)
    let c2 = BigRational::from_int(sign * 2 * p as i64) * BigRational::inv_pow2(2 * p);
    let term_zp = SqrtFactorExpr::new(
        qq_composed
            .mul(&one_minus_x)
            .mul(&x_one_minus_x),
        0,
    )
    .scale(&c2);

    Ok(ZExpr::from_terms(vec![
        (2 * p + 1, 1, term_zp),
        (2 * p + 2, 0, term_z),
    ]))
}

/// Asserts the final-answer exponent structure: Gamma exponents multiples of
/// four and integral pi exponents.
fn check_final_form(e: &GammaPiExpr, what: &str) -> Result<()> {
    for (&(g, h2), _) in e.terms() {
        if g % 4 != 0 || h2 % 2 != 0 {
            return Err(Error::NonRational(format!(
                "{what}: unexpected exponent pattern (Gamma^{g}, doubled pi exp {h2})"
            )));
        }
    }
    Ok(())
}

/// Exact value of Cbar_{2p,2}(pi/2) as a Gamma(1/4)/pi polynomial.
///
/// For p >= 1 the two rational coefficients of z0^{2p+1} z0' and z0^{2p+2}
/// are assembled in Q[sqrt(2)] from the duplication transform at x0 = 1/2;
/// the sqrt(2) parts must cancel exactly. p = 0 is the stored lemniscatic
/// value 1/2 - Gamma^4/(16 pi^3).
pub fn cbar_at_quarter(p: u32) -> Result<GammaPiExpr> {
    if p == 0 {
        let e = &GammaPiExpr::constant(BigRational::new(1, 2))
            - &GammaPiExpr::monomial(BigRational::new(1, 16), 4, -6);
        return Ok(e);
    }
    let d = HalfLemniscatic::new();
    let point = RamanujanPoint::lemniscatic();
    let sign = BigRational::from_int(if p % 2 == 0 { 1 } else { -1 });
    let x0 = BigRational::new(1, 2);

    let (qval, sval) = with_q_polys(p as usize - 1, |qs| {
        let q = &qs[p as usize - 1];
        let mut qval = Sqrt2Number::zero();
        let mut sval = Sqrt2Number::zero();
        let mut wj = Sqrt2Number::one();
        for j in 0..=(p as usize - 1) {
            let aj = q.coeff(j);
            let a = Sqrt2Number::from_rational(aj.clone()).times(&wj);
            qval = &qval + &a;
            sval = &sval + &a.scale(&BigRational::new(2 * j as i64 + 1, 2));
            wj = &wj * &d.w;
        }
        (qval, sval)
    });

    let one_minus_t_sq = &d.one_minus_t * &d.one_minus_t;
    // coefficient of z0^{2p+1} z0':  sign * p * x0 * (1-t)^2 (1+t)^{2p} * qval / 2^{2p-2}
    let a_coeff = one_minus_t_sq
        .times(&d.one_plus_t.pow_u32(2 * p))
        .times(&qval)
        .scale(&(&sign * &x0 * BigRational::from_int(p as i64) * BigRational::inv_pow2(2 * p - 2)));

    // coefficient of z0^{2p+2}:
    //   sign * p t (1-t)^2 (1+t)^{2p-1} qval / 2^{2p-1}
    // - sign * t (1-t) (1+t)^{2p-1} sval / 2^{2p-2}
    let b1 = d
        .t
        .times(&one_minus_t_sq)
        .times(&d.one_plus_t.pow_u32(2 * p - 1))
        .times(&qval)
        .scale(&(&sign * BigRational::from_int(p as i64) * BigRational::inv_pow2(2 * p - 1)));
    let b2 = d
        .t
        .times(&d.one_minus_t)
        .times(&d.one_plus_t.pow_u32(2 * p - 1))
        .times(&sval)
        .scale(&(&sign * BigRational::inv_pow2(2 * p - 2)));
    let b_coeff = &b1 - &b2;

    let a_rat = a_coeff.rational_part()?;
    let b_rat = b_coeff.rational_part()?;

    let result = point.z_monomial(2 * p + 1, 1).scale(&a_rat)
        + point.z_monomial(2 * p + 2, 0).scale(&b_rat);
    check_final_form(&result, &format!("Cbar_{{{},2}}(pi/2)", 2 * p))?;
    Ok(result)
}

/// Exact value of Sbar_{2p,2}(pi/2) for p >= 1.
///
/// p >= 2 runs the same sqrt(2)-cancellation pipeline on the Q_{2p-2}
/// coefficients; p = 1 evaluates the stored three-term (z')^2 expression
/// through the duplication transform.
pub fn sbar_at_quarter(p: u32) -> Result<GammaPiExpr> {
    if p < 1 {
        return Err(Error::Domain("sbar_at_quarter requires p >= 1".into()));
    }
    if p == 1 {
        return eval_at_half_lemniscatic(&sbar_general(1)?);
    }
    let d = HalfLemniscatic::new();
    let point = RamanujanPoint::lemniscatic();
    let sign = BigRational::from_int(if p % 2 == 0 { -1 } else { 1 }); // (-1)^{p-1}

    let qq = sn_squared_coeffs(p as usize)?;
    let mut qval = Sqrt2Number::zero();
    let mut dval = Sqrt2Number::zero();
    let mut wj = Sqrt2Number::one();
    for j in 0..=(p as usize - 2) {
        let bj = Sqrt2Number::from_rational(qq.coeff(j));
        qval = &qval + &bj.times(&wj);
        let wj1 = &wj * &d.w;
        dval = &dval + &bj.times(&wj1).scale(&BigRational::from_int(j as i64 + 1));
        wj = wj1;
    }

    let w_sq = &d.w * &d.w;
    // coefficient of z0^{2p+1} z0':  sign * p t x* w^2 (1+t)^{2p+6} qval / 2^{2p-1}
    let e1 = d
        .t
        .times(&d.x_star)
        .times(&w_sq)
        .times(&d.one_plus_t.pow_u32(2 * p + 6))
        .times(&qval)
        .scale(&(&sign * BigRational::from_int(p as i64) * BigRational::inv_pow2(2 * p - 1)));

    // coefficient of z0^{2p+2}:
    //   -sign * x* (1+t)^{2p+2} dval / 2^{2p}
    // +  sign * p x* w^2 (1+t)^{2p+5} qval / 2^{2p}
    let e2a = d
        .x_star
        .times(&d.one_plus_t.pow_u32(2 * p + 2))
        .times(&dval)
        .scale(&(-&sign * BigRational::inv_pow2(2 * p)));
    let e2b = d
        .x_star
        .times(&w_sq)
        .times(&d.one_plus_t.pow_u32(2 * p + 5))
        .times(&qval)
        .scale(&(&sign * BigRational::from_int(p as i64) * BigRational::inv_pow2(2 * p)));
    let e2 = &e2a + &e2b;

    let e1_rat = e1.rational_part()?;
    let e2_rat = e2.rational_part()?;

    let result = point.z_monomial(2 * p + 1, 1).scale(&e1_rat)
        + point.z_monomial(2 * p + 2, 0).scale(&e2_rat);
    check_final_form(&result, &format!("Sbar_{{{},2}}(pi/2)", 2 * p))?;
    Ok(result)
}

/// Evaluates a general-x ZExpr at y = pi/2 through the inverse duplication
/// map at x0 = 1/2: substitutes x -> 4 sqrt(x0)/(1+sqrt(x0))^2,
/// z -> z0 (1+t), z' -> t (1+t)^5 z0' + (1+t)^4 z0 / 2, cancels sqrt(2) and
/// lands on the Gamma(1/4)/pi normal form.
pub fn eval_at_half_lemniscatic(expr: &ZExpr) -> Result<GammaPiExpr> {
    let d = HalfLemniscatic::new();
    let point = RamanujanPoint::lemniscatic();
    // z' image decomposed over (z0', z0)
    let zp_alpha = d.t.times(&d.one_plus_t.pow_u32(5));
    let zp_beta = d.one_plus_t.pow_u32(4).scale(&BigRational::new(1, 2));

    // accumulate coefficients per (z0 power, z0' power)
    let mut acc: BTreeMap<(u32, u32), Sqrt2Number> = BTreeMap::new();
    for (&(ze, zpe), coeff) in expr.terms() {
        let base = coeff
            .eval_sqrt2(&d.x_star, &d.sqrt_w)
            .times(&d.one_plus_t.pow_u32(ze));
        // (alpha z0' + beta z0)^k expanded binomially, k = zpe
        for i in 0..=(zpe as u32) {
            let choose = BigRational::from_integer(crate::exact::binomial(zpe as u32, i));
            let part = zp_alpha
                .pow_u32(i)
                .times(&zp_beta.pow_u32(zpe as u32 - i))
                .times(&base)
                .scale(&choose);
            let key = (ze + (zpe as u32 - i), i);
            let slot = acc.entry(key).or_insert_with(Sqrt2Number::zero);
            *slot = &*slot + &part;
        }
    }

    let mut result = GammaPiExpr::zero();
    for ((z0_pow, z0p_pow), v) in acc {
        let r = v.rational_part()?;
        if r.is_zero() {
            continue;
        }
        result = result + point.z_monomial(z0_pow, z0p_pow).scale(&r);
    }
    check_final_form(&result, "duplication-transform value")?;
    Ok(result)
}
