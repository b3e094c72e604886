use std::collections::HashMap;

use proptest::prelude::*;

use trigsum_core::abstract_ops::{apply_operator, simplify_guarded};
use trigsum_core::expr::{self, eval_f64, eval_real, parse, Expr};
use trigsum_core::real::Real;

const BASES: [&str; 8] = ["exp(x)", "sin(x)", "cos(2*x)", "x^2 + 1", "sinh(x)", "ln(3 + x)", "1/(2 + x)", "cosh(x)*x"];

fn parts(src: &str, x: f64, h: f64) -> (f64, f64) {
    let e = parse(src).unwrap();
    parts_of(&e, x, h)
}

fn parts_of(e: &Expr, x: f64, h: f64) -> (f64, f64) {
    let p = apply_operator(e, "x", &Expr::sym("x"), &Expr::sym("h")).unwrap();
    let b = HashMap::from([("x".to_string(), Real::from_f64(x, 128)), ("h".to_string(), Real::from_f64(h, 128))]);
    (eval_real(&p.cos_part, &b, 25).unwrap().to_f64(), eval_real(&p.sin_part, &b, 25).unwrap().to_f64())
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linearity(i in 0usize..8, j in 0usize..8, al in -3i64..4, be in -3i64..4, x in -0.9f64..0.9, h in -0.8f64..0.8) {
        let (f, g) = (parse(BASES[i]).unwrap(), parse(BASES[j]).unwrap());
        let comb = expr::add(&expr::mul(&Expr::int(al), &f), &expr::mul(&Expr::int(be), &g));
        let (c, s) = parts_of(&comb, x, h);
        let (fc, fs) = parts(BASES[i], x, h);
        let (gc, gs) = parts(BASES[j], x, h);
        prop_assert!(close(c, al as f64 * fc + be as f64 * gc));
        prop_assert!(close(s, al as f64 * fs + be as f64 * gs));
    }

    #[test]
    fn product_quotient_coherence(i in 0usize..8, j in 0usize..3, x in -0.9f64..0.9, h in -0.8f64..0.8) {
        let u = parse(BASES[i]).unwrap();
        let v = parse(["exp(x)", "2 + cos(x)", "x^2 + 3"][j]).unwrap();
        let back = Expr::new(expr::Node::Quotient(expr::mul(&u, &v), v.clone()));
        let (c, s) = parts_of(&back, x, h);
        let (uc, us) = parts_of(&u, x, h);
        prop_assert!(close(c, uc), "{c} {uc}");
        prop_assert!(close(s, us), "{s} {us}");
    }

    #[test]
    fn zero_shift(i in 0usize..8, x in -0.9f64..0.9) {
        let e = parse(BASES[i]).unwrap();
        let p = apply_operator(&e, "x", &Expr::sym("x"), &Expr::zero()).unwrap();
        prop_assert_eq!(&p.cos_part, &e.substitute("x", &Expr::sym("x")));
        prop_assert!(p.sin_part.is_zero());
        let b = HashMap::from([("x".to_string(), x)]);
        prop_assert!(close(eval_f64(&p.cos_part, &b).unwrap(), eval_f64(&e, &b).unwrap()));
    }
}

#[test]
fn simplify_preserves_value() {
    let cases = [
        ("arccot(tan(x))", 0.0, std::f64::consts::FRAC_PI_2),
        ("arccot(cot(x))", 0.0, std::f64::consts::PI),
        ("arccot(sin(x)^2/(sin(x)*cos(x)))", 0.0, std::f64::consts::FRAC_PI_2),
        ("ln(1 - cos(x)) + ln(1 + cos(x))", 0.0, std::f64::consts::PI),
        ("arccot((1 - cos(x))/(-sin(x)))", 0.0, 2.0 * std::f64::consts::PI),
    ];
    let params = HashMap::new();
    for (src, lo, hi) in cases {
        let e = parse(src).unwrap();
        let g = simplify_guarded(&e, "x", lo, hi, &params).unwrap();
        for k in 1..=200 {
            let x = lo + (hi - lo) * k as f64 / 201.0;
            let b = HashMap::from([("x".to_string(), x)]);
            let (a, s) = (eval_f64(&e, &b).unwrap(), eval_f64(&g.expr, &b).unwrap());
            assert!((a - s).abs() <= 1e-12 * (1.0 + a.abs()), "{src} at {x}: {a} vs {s} ({})", g.expr);
        }
    }
    assert!(simplify_guarded(&parse("x").unwrap(), "x", 1.0, 1.0, &params).is_err());
}
