use std::collections::HashMap;
use std::f64::consts::PI;

use proptest::prelude::*;

use trigsum_core::expr::{parse, Expr};
use trigsum_core::series_mapping::{integral_step, map_cospow, map_fourier, SeriesKind, TrigSeriesResult};

fn partial(kind: SeriesKind, coeff: &dyn Fn(u64) -> f64, x: f64, c: f64, terms: u64) -> f64 {
    (0..=terms).map(|n| coeff(n) * kind.term(n, x, c)).sum()
}

fn fact(n: u64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn check(r: &TrigSeriesResult, coeff: &dyn Fn(u64) -> f64, c: f64, lo: f64, hi: f64, terms: u64, tol: f64) {
    let p = HashMap::new();
    for i in 0..50 {
        let x = lo + (i as f64 + 0.5) * (hi - lo) / 50.0;
        let want = partial(r.kind, coeff, x, c, terms);
        let got = r.eval(x, &p).unwrap();
        assert!((got - want).abs() <= tol, "{} {}: x={x} closed {got} series {want}", r.kind.name(), r.closed_form);
    }
}

#[test]
fn geometric_fourier_series() {
    let half = |n: u64| 0.5f64.powi(n as i32 + 1);
    let exp = |n: u64| 1.0 / fact(n);
    let log = |n: u64| if n == 0 { 0.0 } else { 0.5f64.powi(n as i32) / n as f64 };
    for (src, coeff) in [("1/(2 - t)", &half as &dyn Fn(u64) -> f64), ("exp(t)", &exp), ("-ln(1 - t/2)", &log)] {
        let p = map_fourier(&parse(src).unwrap(), "t", "x", &Expr::pi()).unwrap();
        check(&p.cos, coeff, PI, -PI, PI, 80, 1e-8);
        check(&p.sin, coeff, PI, -PI, PI, 80, 1e-8);
    }
}

#[test]
fn geometric_cospow_series() {
    let exp = |n: u64| 1.0 / fact(n);
    let p = map_cospow(&parse("exp(t)").unwrap(), "t", "x").unwrap();
    check(&p.cos, &exp, PI, -PI, PI, 40, 1e-8);
    check(&p.sin, &exp, PI, -PI, PI, 40, 1e-8);
    let inv = |n: u64| if n == 0 { 0.0 } else { 1.0 / n as f64 };
    let p = map_cospow(&parse("-ln(1-t)").unwrap(), "t", "x").unwrap();
    check(&p.sin, &inv, PI, 0.1, PI - 0.1, 2000, 1e-8);
}

#[test]
fn slow_series() {
    let inv = |n: u64| if n == 0 { 0.0 } else { 1.0 / n as f64 };
    let p = map_fourier(&parse("-ln(1-t)").unwrap(), "t", "x", &Expr::pi()).unwrap();
    check(&p.sin, &inv, PI, 0.1, 2.0 * PI - 0.1, 100_000, 1e-3);
    check(&p.cos, &inv, PI, 0.1, 2.0 * PI - 0.1, 100_000, 1e-3);
}

#[test]
fn series_differs_at_singular_point() {
    let r = map_cospow(&parse("-ln(1-t)").unwrap(), "t", "x").unwrap().sin;
    let inv = |n: u64| if n == 0 { 0.0 } else { 1.0 / n as f64 };
    let limit = r.eval(1e-9, &HashMap::new()).unwrap();
    let at_zero = partial(r.kind, &inv, 0.0, PI, 2000);
    assert!((limit - PI / 2.0).abs() < 1e-8);
    assert!(at_zero.abs() < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn integral_route_agrees(i in 0usize..3, x in 0.05f64..3.0) {
        let (src, s0) = [("exp(t)", 1.0), ("-ln(1 - t/2)", 0.0), ("t/(3 - t)", 0.0)][i];
        let s = parse(src).unwrap();
        let direct = map_fourier(&s, "t", "x", &Expr::pi()).unwrap();
        let step = integral_step(&s.derivative("t"), "t", "x", &Expr::pi()).unwrap();
        let p = HashMap::new();
        // the integral route maps int_0^t S' = S - S(0)
        let cos_gap = step.eval_cosine(x, &p).unwrap() - (direct.cos.eval(x, &p).unwrap() - s0);
        let sin_gap = step.eval_sine(x, &p).unwrap() - direct.sin.eval(x, &p).unwrap();
        prop_assert!(cos_gap.abs() < 1e-9, "{src} cos gap {cos_gap:e}");
        prop_assert!(sin_gap.abs() < 1e-9, "{src} sin gap {sin_gap:e}");
    }
}
