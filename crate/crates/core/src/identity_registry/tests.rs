use std::collections::HashSet;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::*;
use crate::exact_values::{bernoulli_star, factorial};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30, 1e-18).unwrap()
}

#[test]
fn catalog_is_complete_and_unique() {
    let all = list_identities();
    assert!(all.len() >= 18);
    let ids: HashSet<_> = all.iter().map(|r| r.id.clone()).collect();
    assert_eq!(ids.len(), all.len());
    for id in ["thm11-cos", "thm21-eta-odd", "eq59", "cor5-beta", "example1", "example2", "thm16"] {
        assert!(ids.contains(id), "{id}");
    }
}

#[test]
fn thm11_cos_has_degree_2r() {
    for r in 1..=5 {
        assert_eq!(get_identity("thm11-cos", r, None).unwrap().closed.poly.degree(), Some(2 * r as usize));
    }
}

#[test]
fn eta_odd_residual_uses_bernoulli_star() {
    for r in 1..=3u32 {
        let rec = get_identity("thm21-eta-odd", r, None).unwrap();
        let res = rec.closed.residual.clone().unwrap();
        for n in 1..=8u32 {
            let b = bernoulli_star(n).unwrap();
            let four = BigRational::from_integer(BigInt::from(4).pow(n));
            let want = (four - BigRational::from_integer(1.into())) * b
                / BigRational::from_integer(BigInt::from(2 * n) * factorial(2 * r + 2 * n));
            let want = if r % 2 == 1 { want } else { -want };
            assert_eq!(res.coeff(n), want, "r={r} n={n}");
        }
    }
}

#[test]
fn residual_numeric_matches_exact_coefficients() {
    let res = Residual { r: 1, kind: ResidualKind::HalfPeriod, sign: -1 };
    let u = 2.0f64;
    let exact: f64 = (1..=30).map(|k| res.coeff(k).to_f64().unwrap() * u.powi(2 + 2 * k as i32)).sum();
    let n = res.eval_f64(u, 1e-16);
    assert!((n.value - exact).abs() < 1e-14, "{} {}", n.value, exact);
}

#[test]
fn closed_form_examples() {
    let z = closed_form_eval("thm11-sin", 1, None, 1.0, 1.0, &ctx()).unwrap();
    assert!(z.to_f64().abs() < 1e-17, "{}", z.to_f64());
    let e = closed_form_eval("thm18-cos", 1, None, 1.0, 0.0, &ctx()).unwrap();
    assert!((e.to_f64() - PI * PI / 12.0).abs() < 1e-15);
    let s = closed_form_eval("eq59", 1, Some(&q(1, 4)), 1.0, 0.5, &ctx()).unwrap();
    assert!(s.to_f64().abs() < 1e-17);
}

#[test]
fn closed_form_rejects_points_outside() {
    let err = closed_form_eval("cor5-beta", 1, None, 1.0, 0.6, &ctx()).unwrap_err();
    assert!(matches!(err, RegistryError::OutsideInterval { .. }));
    let err = closed_form_eval("example1", 0, None, PI, 0.0, &ctx()).unwrap_err();
    assert!(matches!(err, RegistryError::OutsideInterval { .. }));
}

#[test]
fn partial_sum_examples() {
    for n in [1, 7, 100] {
        assert!(partial_sum_eval("example1", 0, None, PI, PI / 2.0, n).unwrap().abs() < 1e-15);
    }
    let s = partial_sum_eval("thm11-cos", 1, None, 1.0, 1.0, 200_000).unwrap();
    assert!((s + PI * PI / 12.0).abs() < 1e-10);
    let b = partial_sum_eval("cor5-beta", 1, None, 1.0, 0.0, 100_000).unwrap();
    assert!((b - PI.powi(3) / 32.0).abs() < 1e-9);
}

#[test]
fn documented_examples_verify() {
    let ex1 = get_identity("example1", 0, None).unwrap();
    let r = ex1.verify(PI, 50, 2000, 1e-8);
    assert!(r.pass, "{r:?}");
    let ex2 = get_identity("example2", 0, None).unwrap();
    let r = ex2.verify(PI / 3.0, 50, 100_000, 1e-3);
    assert!(r.pass, "{r:?}");
    let t16 = get_identity("thm16", 1, None).unwrap();
    let r = t16.verify(1.0, 50, 10_000, 1e-5);
    assert!(r.pass, "{r:?}");
}

#[test]
fn log_sine_integral_form() {
    let rec = get_identity("thm14", 1, None).unwrap();
    let r = rec.verify_documented();
    assert!(r.pass, "{r:?}");
}

#[test]
fn open_endpoint_fails() {
    let rec = get_identity("example1", 0, None).unwrap();
    let ends = rec.endpoint_errors(rec.terms);
    assert!(ends[0].2 > 10.0 * rec.tol);
}

#[test]
fn exact_special_values() {
    for c in special_value_checks(6) {
        assert!(c.holds, "{} {}", c.name, c.detail);
    }
    for c in structural_checks(5).unwrap() {
        assert!(c.holds, "{} {}", c.name, c.detail);
    }
}

#[test]
fn structural_errors() {
    let cor6 = get_identity("cor6-lambda", 1, None).unwrap();
    assert!(matches!(corollary2_integrate(&cor6), Err(RegistryError::NoSuccessor(_))));
    assert!(matches!(theorem23_shift(&cor6, &q(1, 2)), Err(RegistryError::ShiftRange { .. })));
    let t16 = get_identity("thm16", 1, None).unwrap();
    assert!(matches!(theorem23_shift(&t16, &q(1, 4)), Err(RegistryError::NotPolynomial(_))));
}

#[test]
fn report_json_round_trip() {
    let r = get_identity("cor7", 1, None).unwrap().verify_documented();
    let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back.id, r.id);
    assert_eq!(back.terms, r.terms);
    assert_eq!(back.pass, r.pass);
    assert!(r.to_json().contains("\"N\""));
}

