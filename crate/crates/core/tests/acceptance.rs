//! Acceptance suite: every criterion runs at its stated tolerance and prints
//! one pass/fail line. `cargo test --test acceptance -- --nocapture` shows
//! the lines as they run; on failure the line is printed before the panic.

use berndt_core::exact::{BigRational, GammaPiExpr};
use berndt_core::hyperbolic::{
    cbar_at_quarter, cbar_general, sbar_at_quarter, sbar_general, SumFamily, SumKind, ZExpr,
};
use berndt_core::integrals::{
    barnes_combination_exact, check_conjecture, closed_form, BarnesComboSpec, Family, IntegralSpec,
};
use berndt_core::oracle::{
    barnes_combination_numeric, barnes_zeta, eval_gamma_pi, integrate_berndt, pi, sum_hyperbolic,
    BarnesParams, Cplx, PrecisionContext,
};
use berndt_core::poly::{Poly, SqrtFactorExpr};
use berndt_core::Sqrt2Number;
use rug::ops::Pow;
use rug::Float;
use std::time::{Duration, Instant};

fn criterion(number: u32, name: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!(
        "[acceptance] criterion {number} ({name}): {status} in {:.2}s (budget {:.0}s)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    if let Err(panic) = outcome {
        std::panic::resume_unwind(panic);
    }
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its runtime budget: {:.2}s > {:.0}s",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n, d)
}

fn mono(n: i64, d: i64, g: i64, h2: i64) -> GammaPiExpr {
    GammaPiExpr::monomial(r(n, d), g, h2)
}

fn spec(family: Family, s: u32) -> IntegralSpec {
    IntegralSpec::new(family, s).unwrap()
}

/// The eleven golden values: nine table rows plus the two low-order
/// evaluations, as (family, s, exact expression).
fn golden_closed_forms() -> Vec<(IntegralSpec, GammaPiExpr)> {
    vec![
        (spec(Family::Pp, 2), mono(1, 512, 8, -6) + mono(-1, 64, 4, -2)),
        (
            spec(Family::Pp, 6),
            mono(9, 16384, 12, -6) + mono(-3, 131072, 16, -10),
        ),
        (
            spec(Family::Pp, 10),
            mono(459, 33554432, 24, -14) + mono(-945, 4194304, 20, -10),
        ),
        (
            spec(Family::Mp, 4),
            mono(3, 1024, 8, -4) + mono(-1, 8192, 12, -8),
        ),
        (
            spec(Family::Mp, 8),
            mono(33, 2097152, 20, -12) + mono(-63, 262144, 16, -8),
        ),
        (
            spec(Family::Pm, 4),
            mono(1, 8192, 12, -8) + mono(-1, 1024, 8, -4),
        ),
        (
            spec(Family::Pm, 8),
            mono(81, 262144, 16, -8) + mono(-33, 2097152, 20, -12),
        ),
        (
            spec(Family::Mm, 6),
            mono(5, 131072, 16, -10) + mono(-9, 16384, 12, -6),
        ),
        (
            spec(Family::Mm, 10),
            mono(945, 4194304, 20, -10) + mono(-405, 33554432, 24, -14),
        ),
        (spec(Family::Mp, 0), mono(1, 32, 4, -4) + mono(-1, 8, 0, 2)),
        (spec(Family::Mm, 2), mono(1, 64, 4, -2) + mono(-1, 8, 0, 2)),
    ]
}

#[test]
fn criterion_1_golden_closed_forms() {
    criterion(1, "golden closed forms", Duration::from_secs(5), || {
        for (s, expected) in golden_closed_forms() {
            let got = closed_form(&s).unwrap();
            assert_eq!(got, expected, "{s} closed form");
        }
    });
}

/// One table row: scale times a product of polynomial factors, carrying a
/// sqrt(1-x) iff `sq`.
fn row_term(scale: BigRational, factors: &[&[i64]], sq: bool) -> SqrtFactorExpr {
    let poly = factors
        .iter()
        .fold(Poly::constant(scale), |acc, f| acc.mul(&Poly::from_i64(f)));
    SqrtFactorExpr::new(poly, if sq { 1 } else { 0 })
}

fn cbar_rows() -> Vec<ZExpr> {
    let x: &[i64] = &[0, 1];
    vec![
        // (1/8) sqrt(1-x) x z^3 [4(x-1) z' + z]
        ZExpr::from_terms(vec![
            (3, 1, row_term(r(1, 8), &[x, &[-4, 4]], true)),
            (4, 0, row_term(r(1, 8), &[x], true)),
        ]),
        // (1/32) sqrt(1-x) x z^5 [8(x^2-3x+2) z' + (3x-4) z]
        ZExpr::from_terms(vec![
            (5, 1, row_term(r(1, 32), &[x, &[16, -24, 8]], true)),
            (6, 0, row_term(r(1, 32), &[x, &[-4, 3]], true)),
        ]),
        // (1/128) sqrt(1-x) x z^7 [12(x^3-17x^2+32x-16) z' + (5x^2-52x+48) z]
        ZExpr::from_terms(vec![
            (7, 1, row_term(r(1, 128), &[x, &[-192, 384, -204, 12]], true)),
            (8, 0, row_term(r(1, 128), &[x, &[48, -52, 5]], true)),
        ]),
        // (1/512) sqrt(1-x) x z^9 {16(x^4-139x^3+546x^2-680x+272) z'
        //                          + (7x^3-696x^2+1776x-1088) z}
        ZExpr::from_terms(vec![
            (
                9,
                1,
                row_term(r(1, 512), &[x, &[4352, -10880, 8736, -2224, 16]], true),
            ),
            (10, 0, row_term(r(1, 512), &[x, &[-1088, 1776, -696, 7]], true)),
        ]),
        // (1/2048) sqrt(1-x) x z^11 {20(x^5-1233x^4+10400x^3-25040x^2+23808x-7936) z'
        //                            + (9x^4-8632x^3+53232x^2-84288x+39680) z}
        ZExpr::from_terms(vec![
            (
                11,
                1,
                row_term(
                    r(1, 2048),
                    &[x, &[-158720, 476160, -500800, 208000, -24660, 20]],
                    true,
                ),
            ),
            (
                12,
                0,
                row_term(r(1, 2048), &[x, &[39680, -84288, 53232, -8632, 9]], true),
            ),
        ]),
    ]
}

fn sbar_rows() -> Vec<ZExpr> {
    let x: &[i64] = &[0, 1];
    let omx: &[i64] = &[1, -1];
    vec![
        // (1/8) x(1-x) z^2 {4x(1-x) (z')^2 + 4(1-x) z' z - z^2}
        ZExpr::from_terms(vec![
            (2, 2, row_term(r(1, 8), &[x, omx, &[0, 4, -4]], false)),
            (3, 1, row_term(r(1, 8), &[x, omx, &[4, -4]], false)),
            (4, 0, row_term(r(-1, 8), &[x, omx], false)),
        ]),
        // (1/8) x(1-x) z^5 [z - 4(1-x) z']
        ZExpr::from_terms(vec![
            (5, 1, row_term(r(1, 8), &[x, omx, &[-4, 4]], false)),
            (6, 0, row_term(r(1, 8), &[x, omx], false)),
        ]),
        // (1/8) x(1-x) z^7 [6(1-x)(2-x) z' + (2x-3) z]
        ZExpr::from_terms(vec![
            (7, 1, row_term(r(1, 8), &[x, omx, &[12, -18, 6]], false)),
            (8, 0, row_term(r(1, 8), &[x, omx, &[-3, 2]], false)),
        ]),
        // (1/8) x(1-x) z^9 [4(2x^3-19x^2+34x-17) z' + (3x^2-19x+17) z]
        ZExpr::from_terms(vec![
            (9, 1, row_term(r(1, 8), &[x, omx, &[-68, 136, -76, 8]], false)),
            (10, 0, row_term(r(1, 8), &[x, omx, &[17, -19, 3]], false)),
        ]),
        // (1/8) x(1-x) z^11 {10(x^4-34x^3+126x^2-155x+62) z'
        //                    + (4x^3-102x^2+252x-155) z}
        ZExpr::from_terms(vec![
            (
                11,
                1,
                row_term(r(1, 8), &[x, omx, &[620, -1550, 1260, -340, 10]], false),
            ),
            (
                12,
                0,
                row_term(r(1, 8), &[x, omx, &[-155, 252, -102, 4]], false),
            ),
        ]),
    ]
}

#[test]
fn criterion_2_corollary_tables() {
    criterion(2, "corollary tables", Duration::from_secs(1), || {
        for (i, expected) in cbar_rows().iter().enumerate() {
            let p = i as u32 + 1;
            assert_eq!(&cbar_general(p).unwrap(), expected, "Cbar_{{{},2}}", 2 * p);
        }
        for (i, expected) in sbar_rows().iter().enumerate() {
            let p = i as u32 + 1;
            assert_eq!(&sbar_general(p).unwrap(), expected, "Sbar_{{{},2}}", 2 * p);
        }
    });
}

fn abs_diff(a: &Float, b: &Float) -> Float {
    Float::with_val(a.prec(), a - b).abs()
}

fn certify_all_members(ctx: &PrecisionContext, tol: f64) {
    for s in IntegralSpec::all_up_to(10) {
        let exact = eval_gamma_pi(&closed_form(&s).unwrap(), ctx);
        let quad = integrate_berndt(&s, ctx).unwrap();
        let err = abs_diff(&exact, &quad);
        assert!(err < tol, "{s}: quadrature error {err}");
    }
}

fn certify_series(ctx: &PrecisionContext, tol: f64) {
    let half_pi = pi(ctx) / 2u32;
    for p in 0..=6u32 {
        let exact = eval_gamma_pi(&cbar_at_quarter(p).unwrap(), ctx);
        let kind = SumKind::new(SumFamily::CBar, 2 * p as i64, 2).unwrap();
        let series = sum_hyperbolic(&kind, &half_pi, ctx).unwrap();
        let err = abs_diff(&exact, &series);
        assert!(err < tol, "Cbar p = {p}: series error {err}");
    }
    for p in 1..=6u32 {
        let exact = eval_gamma_pi(&sbar_at_quarter(p).unwrap(), ctx);
        let kind = SumKind::new(SumFamily::SBar, 2 * p as i64, 2).unwrap();
        let series = sum_hyperbolic(&kind, &half_pi, ctx).unwrap();
        let err = abs_diff(&exact, &series);
        assert!(err < tol, "Sbar p = {p}: series error {err}");
    }
}

#[test]
fn criterion_3_numeric_certification() {
    criterion(3, "numeric certification", Duration::from_secs(120), || {
        let ctx40 = PrecisionContext::new(40).unwrap();
        certify_all_members(&ctx40, 1e-25);
        let ctx50 = PrecisionContext::new(50).unwrap();
        certify_series(&ctx50, 1e-30);
    });
}

#[test]
fn criterion_4_structure_theorems() {
    criterion(4, "structure theorems", Duration::from_secs(30), || {
        for m in 1..=8u32 {
            let mi = m as i64;
            let x4m = [(8 * mi, -4 * mi), (8 * mi + 4, -4 * mi - 4)];
            let x4m2 = [(8 * mi - 4, -4 * mi + 2), (8 * mi, -4 * mi - 2)];
            let expect = |s: IntegralSpec, pattern: &[(i64, i64); 2]| {
                // sqrt(2)-cancellation assertions live inside closed_form;
                // an Err here would mean one failed
                let e = closed_form(&s).unwrap();
                let keys: Vec<(i64, i64)> = e.terms().map(|(k, _)| *k).collect();
                assert_eq!(keys, pattern.to_vec(), "{s} monomial pattern");
            };
            expect(spec(Family::Mp, 4 * m), &x4m);
            expect(spec(Family::Pm, 4 * m), &x4m);
            expect(spec(Family::Pp, 4 * m - 2), &x4m2);
            if m >= 2 {
                expect(spec(Family::Mm, 4 * m - 2), &x4m2);
            }
        }
    });
}

#[test]
fn criterion_5_conjecture_evidence() {
    criterion(5, "conjecture evidence", Duration::from_secs(30), || {
        let rows = check_conjecture(10).unwrap();
        assert_eq!(rows.len(), 10);
        for row in rows {
            assert!(
                row.c2_plus_e2.is_zero(),
                "c2 + e2 nonzero at m = {}: {} (conjecture evidence, not proof)",
                row.m,
                row.c2_plus_e2
            );
            if row.m >= 2 {
                let d = row.d1_plus_f1.unwrap();
                assert!(
                    d.is_zero(),
                    "d1 + f1 nonzero at m = {}: {d} (conjecture evidence, not proof)",
                    row.m
                );
            }
        }
    });
}

/// The seven combination values displayed in the final tables.
fn golden_combinations() -> Vec<(BarnesComboSpec, GammaPiExpr)> {
    vec![
        (
            BarnesComboSpec::new(Family::Mp, 1).unwrap(),
            mono(1, 32768, 8, -4) + mono(-1, 786432, 12, -8),
        ),
        (
            BarnesComboSpec::new(Family::Mp, 2).unwrap(),
            mono(11, 112742891520, 20, -12) + mono(-1, 671088640, 16, -8),
        ),
        (
            BarnesComboSpec::new(Family::Pp, 1).unwrap(),
            mono(1, 4096, 8, -6) + mono(-1, 512, 4, -2),
        ),
        (
            BarnesComboSpec::new(Family::Pp, 2).unwrap(),
            mono(1, 5242880, 12, -6) + mono(-1, 125829120, 16, -10),
        ),
        (
            BarnesComboSpec::new(Family::Pm, 1).unwrap(),
            mono(1, 786432, 12, -8) + mono(-1, 98304, 8, -4),
        ),
        (
            BarnesComboSpec::new(Family::Pm, 2).unwrap(),
            mono(9, 4697620480, 16, -8) + mono(-11, 112742891520, 20, -12),
        ),
        (
            BarnesComboSpec::new(Family::Mm, 2).unwrap(),
            mono(1, 75497472, 16, -10) + mono(-1, 5242880, 12, -6),
        ),
    ]
}

#[test]
fn criterion_6_barnes_combinations() {
    criterion(6, "Barnes zeta combinations", Duration::from_secs(120), || {
        let ctx = PrecisionContext::new(40).unwrap();
        for (combo, expected) in golden_combinations() {
            let exact = barnes_combination_exact(&combo).unwrap();
            assert_eq!(exact, expected, "{combo} exact value");
            let numeric = barnes_combination_numeric(&combo, &ctx).unwrap();
            let exact_num = eval_gamma_pi(&exact, &ctx);
            let re_err = abs_diff(&numeric.re, &exact_num);
            assert!(re_err < 1e-25, "{combo}: numeric mismatch {re_err}");
            let im = numeric.im.clone().abs();
            assert!(im < 1e-25, "{combo}: imaginary residue {im}");
        }
    });
}

#[test]
fn criterion_7_oracle_sanity() {
    criterion(7, "oracle sanity", Duration::from_secs(60), || {
        // Barnes reductions at N = 1: zeta(2) and the alternating value
        let ctx = PrecisionContext::new(40).unwrap();
        let prec = ctx.prec_bits();
        let one = Cplx::one(prec);
        let plain = BarnesParams::new(
            Cplx::from_ints(prec, 2, 0),
            one.clone(),
            vec![one.clone()],
            vec![1],
        )
        .unwrap();
        let v = barnes_zeta(&plain, &ctx).unwrap();
        let zeta2 = Float::with_val(prec, pi(&ctx).pow(2)) / 6u32;
        assert!(abs_diff(&v.re, &zeta2) < 1e-40, "zeta(2) reduction");
        assert!(v.im.clone().abs() < 1e-40);
        let alternating = BarnesParams::new(
            Cplx::from_ints(prec, 2, 0),
            one.clone(),
            vec![one.clone()],
            vec![-1],
        )
        .unwrap();
        let v = barnes_zeta(&alternating, &ctx).unwrap();
        let eta2 = Float::with_val(prec, pi(&ctx).pow(2)) / 12u32;
        assert!(abs_diff(&v.re, &eta2) < 1e-40, "alternating reduction");

        // integrality lemma to k = 50
        let plus = Sqrt2Number::new(r(1, 1), r(1, 1));
        let minus = Sqrt2Number::new(r(-1, 1), r(1, 1));
        let sqrt2 = Sqrt2Number::sqrt2();
        for k in 1u32..=50 {
            let p = plus.pow_u32(k);
            let m = minus.pow_u32(k);
            let (a, b) = if k % 2 == 0 {
                (&p + &m, sqrt2.times(&(&p - &m)))
            } else {
                (&p - &m, sqrt2.times(&(&p + &m)))
            };
            assert!(a.rational_part().unwrap().is_integer());
            assert!(b.rational_part().unwrap().is_integer());
        }

        // Fourier <-> Maclaurin bridge at 50 digits:
        // S'_{2n+1,1}(pi) = z0^{2n+2} sqrt(1/2) q_{2n+1}(1/2) / 2
        let ctx50 = PrecisionContext::new(50).unwrap();
        let prec = ctx50.prec_bits();
        let table = berndt_core::jacobi::sn_maclaurin(5);
        let point = berndt_core::RamanujanPoint::lemniscatic();
        let y = pi(&ctx50);
        let half = r(1, 2);
        let sqrt_half = Float::with_val(prec, 0.5f64).sqrt();
        for n in 0..=5u32 {
            let kind = SumKind::new(SumFamily::SPrime, 2 * n as i64 + 1, 1).unwrap();
            let lhs = sum_hyperbolic(&kind, &y, &ctx50).unwrap();
            let z_pow = eval_gamma_pi(&point.z_monomial(2 * n + 2, 0), &ctx50);
            let qv = Float::with_val(prec, table.q(n as usize).eval(&half).as_rug());
            let rhs = z_pow * &sqrt_half * qv / 2u32;
            assert!(
                abs_diff(&lhs, &rhs) < 1e-30,
                "Fourier/Maclaurin bridge at n = {n}"
            );
        }

        // two-series relations at (alpha, beta) = (pi/2, 2 pi), p = 1..4
        let alpha = Float::with_val(prec, pi(&ctx50)) / 2u32;
        let beta = Float::with_val(prec, pi(&ctx50)) * 2u32;
        let pival = pi(&ctx50);
        for p in 1..=4i64 {
            let sgn = if p % 2 == 0 { 1 } else { -1 };
            let cbar = sum_hyperbolic(&SumKind::new(SumFamily::CBar, 2 * p, 2).unwrap(), &alpha, &ctx50).unwrap();
            let sp = sum_hyperbolic(&SumKind::new(SumFamily::SPrime, 2 * p - 1, 1).unwrap(), &beta, &ctx50).unwrap();
            let dsp = sum_hyperbolic(&SumKind::new(SumFamily::DsPrime, 2 * p, 2).unwrap(), &beta, &ctx50).unwrap();
            let pi2p = Float::with_val(prec, (&pival).pow(2 * p as u32));
            let id1 = Float::with_val(prec, (&alpha).pow(2 * p as u32 + 1)) * &cbar
                - Float::with_val(prec, &pi2p * sgn) * Float::with_val(prec, p) * &sp
                    / Float::with_val(prec, 2u32).pow(2 * p as u32 - 2)
                + Float::with_val(prec, &pi2p * sgn) * &beta * &dsp
                    / Float::with_val(prec, 2u32).pow(2 * p as u32);
            assert!(
                id1.clone().abs() < 1e-30,
                "alpha-beta identity (Cbar) at p = {p}: {id1}"
            );

            let sbar = sum_hyperbolic(&SumKind::new(SumFamily::SBar, 2 * p, 2).unwrap(), &alpha, &ctx50).unwrap();
            let s = sum_hyperbolic(&SumKind::new(SumFamily::S, 2 * p - 1, 1).unwrap(), &beta, &ctx50).unwrap();
            let ds = sum_hyperbolic(&SumKind::new(SumFamily::Ds, 2 * p, 2).unwrap(), &beta, &ctx50).unwrap();
            let pi2p2 = Float::with_val(prec, (&pival).pow(2 * p as u32 - 2));
            let delta = if p == 1 {
                Float::with_val(prec, 0.5f64)
            } else {
                Float::new(prec)
            };
            let id2 = Float::with_val(prec, (&alpha).pow(2 * p as u32)) * &sbar
                + Float::with_val(prec, &pi2p2 * sgn) * Float::with_val(prec, 2 * p) * &beta * &s
                - Float::with_val(prec, &pi2p2 * sgn) * Float::with_val(prec, (&beta).pow(2)) * &ds
                - delta;
            assert!(
                id2.clone().abs() < 1e-30,
                "alpha-beta identity (Sbar) at p = {p}: {id2}"
            );
        }
    });
}

#[test]
fn criterion_8_stability_under_precision_doubling() {
    criterion(8, "40 vs 80 digit stability", Duration::from_secs(240), || {
        let ctx40 = PrecisionContext::new(40).unwrap();
        let ctx80 = PrecisionContext::new(80).unwrap();
        let prec80 = ctx80.prec_bits();
        for s in IntegralSpec::all_up_to(10) {
            let q40 = integrate_berndt(&s, &ctx40).unwrap();
            let q80 = integrate_berndt(&s, &ctx80).unwrap();
            let diff = Float::with_val(prec80, &q80 - &q40).abs();
            let scale = q80.clone().abs().max(&Float::with_val(prec80, 1));
            // any change below 1e-40 relative leaves all 40 certified digits intact
            assert!(
                diff < Float::with_val(prec80, &scale * &Float::with_val(prec80, 1e-40f64)),
                "{s}: 40-digit value moved by {diff} at 80 digits"
            );
        }
    });
}
