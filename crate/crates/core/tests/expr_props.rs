use std::collections::HashMap;

use num_rational::BigRational;
use proptest::prelude::*;

use trigsum_core::expr::{eval_complex, eval_real, parse, ComplexReal, Expr, Func, Node};
use trigsum_core::real::Real;

const FUNCS: [Func; 10] = [
    Func::Exp,
    Func::Ln,
    Func::Sqrt,
    Func::Sin,
    Func::Cos,
    Func::Tan,
    Func::Sinh,
    Func::Cosh,
    Func::Arctan,
    Func::Arccot,
];

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (-9i64..10, 1i64..5).prop_map(|(n, d)| Expr::rational(BigRational::new(n.into(), d.into()))),
        Just(Expr::pi()),
        prop::sample::select(vec!["x", "a"]).prop_map(Expr::sym),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::new(Node::Neg(e))),
            prop::collection::vec(inner.clone(), 2..4).prop_map(|v| Expr::new(Node::Sum(v))),
            prop::collection::vec(inner.clone(), 2..4).prop_map(|v| Expr::new(Node::Product(v))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::new(Node::Quotient(a, b))),
            (inner.clone(), -3i64..5).prop_map(|(a, n)| Expr::new(Node::Pow(a, n))),
            (prop::sample::select(FUNCS.to_vec()), inner).prop_map(|(f, a)| Expr::new(Node::Apply(f, a))),
        ]
    })
}

fn bind(x: f64, a: f64, prec: u32) -> HashMap<String, Real> {
    HashMap::from([("x".to_string(), Real::from_f64(x, prec)), ("a".to_string(), Real::from_f64(a, prec))])
}

proptest! {
    #[test]
    fn print_parse_round_trip(e in expr()) {
        let text = e.to_string();
        let back = parse(&text);
        prop_assert!(back.is_ok(), "{text}: {:?}", back.err());
        prop_assert_eq!(back.unwrap(), e, "{}", text);
    }

    #[test]
    fn precision_monotone(e in expr(), x in 0.1f64..2.0, a in 0.1f64..2.0) {
        let reference = eval_real(&e, &bind(x, a, 600), 120);
        prop_assume!(reference.is_ok());
        let reference = reference.unwrap();
        prop_assume!(reference.to_f64().abs() < 1e6);
        let err = |d: u32| eval_real(&e, &bind(x, a, 600), d).map(|v| (&v - &reference).abs().to_f64());
        if let (Ok(e15), Ok(e30)) = (err(15), err(30)) {
            prop_assert!(e30 <= e15.max(1e-29), "{e15:e} then {e30:e}");
        }
    }

    #[test]
    fn complex_matches_real(e in expr(), x in 0.1f64..2.0, a in 0.1f64..2.0) {
        let prec = 200;
        let r = eval_real(&e, &bind(x, a, prec), 30);
        prop_assume!(r.is_ok());
        let r = r.unwrap();
        prop_assume!(r.to_f64().abs() < 1e6);
        let cb: HashMap<String, ComplexReal> =
            bind(x, a, prec).into_iter().map(|(k, v)| (k, ComplexReal::real(v))).collect();
        let c = eval_complex(&e, &cb, 30);
        prop_assume!(c.is_ok());
        let c = c.unwrap();
        let scale = 1.0 + r.to_f64().abs();
        prop_assert!((&c.re - &r).abs().to_f64() <= 1e-26 * scale, "{} vs {}", c.re.to_decimal(30), r.to_decimal(30));
        prop_assert!(c.im.abs().to_f64() <= 1e-26 * scale);
    }
}
