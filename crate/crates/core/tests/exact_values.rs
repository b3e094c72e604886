use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use trigsum_core::exact_values::*;
use trigsum_core::odd_zeta::{dirichlet_oracle, DirichletSeries, PrecisionContext};
use trigsum_core::quad;

fn rat() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = PiPolynomial> {
    prop::collection::vec((rat(), 0u32..6), 0..4).prop_map(|terms| {
        terms.into_iter().fold(PiPolynomial::zero(), |p, (q, k)| p.add(&PiPolynomial::monomial(q, k)))
    })
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.neg().neg(), a.clone());
    }

    #[test]
    fn json_round_trip(a in poly()) {
        prop_assert_eq!(PiPolynomial::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(), b in poly()) {
        let lhs = a.mul(&b).eval_f64();
        let rhs = a.eval_f64() * b.eval_f64();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + rhs.abs()));
    }

    #[test]
    fn lambda_and_eta_follow_zeta(r in 1u32..=15) {
        let z = zeta_even(r).unwrap();
        let p = BigRational::from_integer(BigInt::from(2).pow(2 * r));
        let one = BigRational::from_integer(1.into());
        prop_assert_eq!(lambda_even(r).unwrap(), z.scale(&(&one - &one / &p)));
        prop_assert_eq!(eta_even(r).unwrap(), z.scale(&(&one - BigRational::from_integer(2.into()) / &p)));
    }
}

#[test]
fn recurrences_hold_to_r12() {
    for r in 1..=12 {
        assert_eq!(frak_d_by(r, FrakDPath::Lambda).unwrap(), frak_d_by(r, FrakDPath::Zeta).unwrap(), "r={r}");
        assert_eq!(cal_d_by(r, CalDPath::Direct).unwrap(), cal_d_by(r, CalDPath::Beta).unwrap(), "r={r}");
        assert!(cal_d_lambda_residual(r).unwrap().is_zero(), "r={r}");
        assert!(beta_recurrence_residual(r).unwrap().is_zero(), "r={r}");
        assert!(lambda_recurrence_residual(r).unwrap().is_zero(), "r={r}");
    }
    for r in 1..=20 {
        assert!(euler_recurrence_residual(r).unwrap().is_zero(), "r={r}");
    }
}

#[test]
fn euler_numbers() {
    let known = [1i64, -1, 5, -61, 1385, -50521, 2702765];
    for (k, e) in known.iter().enumerate() {
        assert_eq!(euler_number(2 * k as u32).unwrap(), BigInt::from(*e));
    }
    assert!(euler_number(3).is_err());
}

#[test]
fn exact_values_match_dirichlet_oracle() {
    let ctx = PrecisionContext::new(50, 1e-32).unwrap();
    let prec = ctx.prec();
    let check = |p: PiPolynomial, s: DirichletSeries, n: u32| {
        let o = dirichlet_oracle(&s, n, &ctx).unwrap();
        let d = (&p.eval_real(prec) - &o.value).abs().to_f64();
        assert!(d <= 1e-30 + o.tail_bound, "{} s={n}: {d:e}", s.name());
    };
    for r in 1..=6 {
        check(zeta_even(r).unwrap(), DirichletSeries::Zeta, 2 * r);
        check(eta_even(r).unwrap(), DirichletSeries::Eta, 2 * r);
        check(lambda_even(r).unwrap(), DirichletSeries::Lambda, 2 * r);
        check(frak_d(r).unwrap(), DirichletSeries::FrakD, 2 * r);
    }
    for k in 0..=5 {
        check(beta_odd(k).unwrap(), DirichletSeries::Beta, 2 * k + 1);
        check(cal_d(k).unwrap(), DirichletSeries::CalD, 2 * k + 1);
    }
}

#[test]
fn iterated_log_integral_matches_quadrature() {
    for m in 1..=5u32 {
        for x in [0.5, 1.0, 2.0] {
            let fact: f64 = (1..m).map(|i| i as f64).product();
            // t = x s^2
            let f = |s: f64| {
                if s == 0.0 {
                    return 0.0;
                }
                let t = x * s * s;
                (x - t).powi(m as i32 - 1) * t.ln() * 2.0 * x * s
            };
            let q = quad::integrate(&f, 0.0, 1.0, 1e-15, 1e-15).unwrap().value / fact;
            let v = iterated_log_integral(m, x).unwrap();
            assert!((q - v).abs() < 1e-12, "m={m} x={x}: {q} vs {v}");
        }
    }
}

#[test]
fn domain_errors() {
    assert!(zeta_even(0).is_err());
    assert!(harmonic(0).is_err());
    assert!(frak_d(0).is_err());
}
