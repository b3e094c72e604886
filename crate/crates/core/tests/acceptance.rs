//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use trigsum_core::abstract_ops::{apply_operator, complex_shift_oracle, verify_inverse_system};
use trigsum_core::exact_values::*;
use trigsum_core::expr::{eval_real, parse, Expr};
use trigsum_core::identity_registry::{
    closed_form_eval, get_identity, partial_sum_eval, special_value_checks, structural_checks, verify_all, CATALOG,
};
use trigsum_core::odd_zeta::{
    dirichlet_oracle, identity_checks, zeta_odd, CheckGroup, DirichletSeries, PrecisionContext, ZetaMethod,
};
use trigsum_core::quad;
use trigsum_core::real::Real;
use trigsum_core::series_mapping::{map_cospow, map_fourier};

struct Outcome {
    pass: bool,
    detail: String,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn mono(n: i64, d: i64, k: u32) -> PiPolynomial {
    PiPolynomial::monomial(q(n, d), k)
}

fn within(t: Duration, limit: f64) -> bool {
    t.as_secs_f64() < limit
}

fn golden() -> Outcome {
    let t = Instant::now();
    let cases: Vec<(&str, Result<PiPolynomial, ExactError>, PiPolynomial)> = vec![
        ("frakD(2)", frak_d(1), mono(1, 16, 2)),
        ("frakD(4)", frak_d(2), mono(11, 1536, 4)),
        ("frakD(6)", frak_d(3), mono(361, 491520, 6)),
        ("calD(1)", cal_d(0), mono(1, 4, 1)),
        ("calD(3)", cal_d(1), mono(3, 128, 3)),
        ("calD(5)", cal_d(2), mono(57, 24576, 5)),
        ("calD(7)", cal_d(3), mono(307, 1310720, 7)),
        ("lambda(2)", lambda_even(1), mono(1, 8, 2)),
    ];
    let bad: Vec<&str> = cases.iter().filter(|(_, got, want)| got.as_ref().ok() != Some(want)).map(|c| c.0).collect();
    let el = t.elapsed();
    Outcome {
        pass: bad.is_empty() && within(el, 1.0),
        detail: format!("{} values exact, mismatches {:?}, {:.3}s", cases.len() - bad.len(), bad, el.as_secs_f64()),
    }
}

fn cross_recurrence() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for r in 1..=15u32 {
        let z = zeta_even_by(r, ZetaPath::Bernoulli).unwrap();
        for p in [ZetaPath::HalfPeriod, ZetaPath::FullPeriod] {
            if zeta_even_by(r, p).unwrap() != z {
                bad.push(format!("zeta {p:?} r={r}"));
            }
        }
        if frak_d_by(r, FrakDPath::Lambda).unwrap() != frak_d_by(r, FrakDPath::Zeta).unwrap() {
            bad.push(format!("frakD r={r}"));
        }
        if cal_d_by(r, CalDPath::Direct).unwrap() != cal_d_by(r, CalDPath::Beta).unwrap() {
            bad.push(format!("calD r={r}"));
        }
        if !beta_recurrence_residual(r).unwrap().is_zero() {
            bad.push(format!("beta recurrence r={r}"));
        }
        if !euler_recurrence_residual(r).unwrap().is_zero() {
            bad.push(format!("euler recurrence r={r}"));
        }
        let k = BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(2).pow(2 * r - 1));
        if eta_even(r).unwrap() != z.scale(&k) {
            bad.push(format!("eta r={r}"));
        }
        if lambda_even_recurrence(r).unwrap() != lambda_even(r).unwrap() {
            bad.push(format!("lambda r={r}"));
        }
    }
    let el = t.elapsed();
    Outcome {
        pass: bad.is_empty() && within(el, 1.0),
        detail: format!("r <= 15, mismatches {:?}, {:.3}s", bad, el.as_secs_f64()),
    }
}

fn odd_zeta_series() -> Outcome {
    let t = Instant::now();
    let ctx = PrecisionContext::new(40, 1e-30).unwrap();
    let mut ok = true;
    let mut worst_oracle = 0.0f64;
    let mut worst_pair = 0.0f64;
    for r in 1..=3u32 {
        let oracle = dirichlet_oracle(&DirichletSeries::Zeta, 2 * r + 1, &ctx).unwrap();
        let vals: Vec<_> = ZetaMethod::ALL.iter().map(|&m| zeta_odd(r, m, &ctx).unwrap()).collect();
        for (i, a) in vals.iter().enumerate() {
            let d = (&a.value - &oracle.value).abs().to_f64();
            worst_oracle = worst_oracle.max(d);
            ok &= d <= 1e-25;
            for b in &vals[i + 1..] {
                let d = (&a.value - &b.value).abs().to_f64();
                let allowed = a.tail_bound + b.tail_bound + 1e-38;
                worst_pair = worst_pair.max(d / allowed);
                ok &= d <= allowed;
            }
        }
    }
    let terms: Vec<(&str, usize)> =
        ZetaMethod::ALL.iter().map(|&m| (m.name(), zeta_odd(1, m, &ctx).unwrap().terms_used)).collect();
    let fast = terms.iter().map(|t| t.1).min().unwrap_or(usize::MAX);
    ok &= fast <= 30;
    let el = t.elapsed();
    Outcome {
        pass: ok && within(el, 5.0),
        detail: format!(
            "max |method - oracle| {worst_oracle:.1e}, max pair diff / bound {worst_pair:.2}, zeta(3) terms {terms:?}, {:.2}s",
            el.as_secs_f64()
        ),
    }
}

struct Rule {
    expr: &'static str,
    x: (f64, f64),
    h: (f64, f64),
}

const RULES: &[Rule] = &[
    Rule { expr: "exp(x)", x: (-2.0, 2.0), h: (-2.0, 2.0) },
    Rule { expr: "exp(3*x)", x: (-1.0, 1.0), h: (-1.0, 1.0) },
    Rule { expr: "sin(x)", x: (-3.0, 3.0), h: (-2.0, 2.0) },
    Rule { expr: "cos(2*x)", x: (-3.0, 3.0), h: (-1.0, 1.0) },
    Rule { expr: "tan(x)", x: (0.2, 1.3), h: (-1.0, 1.0) },
    Rule { expr: "cot(x)", x: (0.2, 2.9), h: (-1.0, 1.0) },
    Rule { expr: "sec(x)", x: (-1.3, 1.3), h: (-1.0, 1.0) },
    Rule { expr: "csc(x)", x: (0.2, 2.9), h: (-1.0, 1.0) },
    Rule { expr: "ln(x)", x: (0.1, 3.0), h: (-2.0, 2.0) },
    Rule { expr: "arctan(x)", x: (-0.6, 0.6), h: (-0.6, 0.6) },
    Rule { expr: "arccot(x)", x: (1.1, 2.5), h: (-0.4, 0.4) },
    Rule { expr: "sinh(x)", x: (-2.0, 2.0), h: (-2.0, 2.0) },
    Rule { expr: "cosh(x)", x: (-2.0, 2.0), h: (-2.0, 2.0) },
    Rule { expr: "sqrt(x)", x: (0.1, 3.0), h: (0.05, 2.0) },
    Rule { expr: "sin(x)/(2 + cos(x))", x: (-3.0, 3.0), h: (-1.0, 1.0) },
    Rule { expr: "(x^2 + 1)/(x - 4)", x: (-2.0, 2.0), h: (-2.0, 2.0) },
    Rule { expr: "exp(x)*sin(x)", x: (-2.0, 2.0), h: (-2.0, 2.0) },
    Rule { expr: "x^3*cos(x)", x: (-2.0, 2.0), h: (-1.0, 1.0) },
    Rule { expr: "exp(sin(x))", x: (-2.0, 2.0), h: (-1.0, 1.0) },
    Rule { expr: "ln(2 + cos(x))", x: (-2.0, 2.0), h: (-0.5, 0.5) },
];

fn sample(rng: &mut StdRng, r: (f64, f64)) -> f64 {
    loop {
        let v = rng.random_range(r.0..r.1);
        if v.abs() > 1e-3 {
            return v;
        }
    }
}

fn operator_suite() -> Outcome {
    let t = Instant::now();
    const DIGITS: u32 = 20;
    let prec = trigsum_core::real::bits_for_digits(DIGITS) + 16;
    let mut rng = StdRng::seed_from_u64(20240611);
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for rule in RULES {
        let e = parse(rule.expr).unwrap();
        let p = apply_operator(&e, "x", &Expr::sym("x"), &Expr::sym("h")).unwrap();
        let mut rule_worst = 0.0f64;
        for _ in 0..100 {
            let (x, h) = (sample(&mut rng, rule.x), sample(&mut rng, rule.h));
            let (xr, hr) = (Real::from_f64(x, prec), Real::from_f64(h, prec));
            let b = HashMap::from([("x".to_string(), xr.clone()), ("h".to_string(), hr.clone())]);
            let err = match (
                eval_real(&p.cos_part, &b, DIGITS),
                eval_real(&p.sin_part, &b, DIGITS),
                complex_shift_oracle(&e, "x", &xr, &hr, &HashMap::new(), DIGITS),
            ) {
                (Ok(c), Ok(s), Ok((oc, os))) => (&c - &oc).abs().to_f64().max((&s - &os).abs().to_f64()),
                _ => f64::INFINITY,
            };
            rule_worst = rule_worst.max(err);
        }
        if !(rule_worst <= 1e-12) {
            failures.push(format!("{} ({rule_worst:.1e})", rule.expr));
        }
        worst = worst.max(rule_worst);
    }

    let inverse = [
        ("ln(x)", "exp(y)", (0.1, 3.0), (-2.0, 2.0)),
        ("arctan(x)", "tan(y)", (-0.6, 0.6), (-0.6, 0.6)),
        ("sqrt(x)", "y^2", (0.1, 3.0), (0.05, 2.0)),
        ("arccot(x)", "cot(y)", (1.1, 2.5), (-0.4, 0.4)),
    ];
    let mut worst_inv = 0.0f64;
    for (f, g, xr, hr) in inverse {
        let p = apply_operator(&parse(f).unwrap(), "x", &Expr::sym("x"), &Expr::sym("h")).unwrap();
        let samples: Vec<_> = (0..100)
            .map(|_| {
                HashMap::from([
                    ("x".to_string(), Real::from_f64(sample(&mut rng, xr), prec)),
                    ("h".to_string(), Real::from_f64(sample(&mut rng, hr), prec)),
                ])
            })
            .collect();
        let r = verify_inverse_system(&parse(g).unwrap(), "y", &p, &samples, DIGITS).unwrap_or(f64::INFINITY);
        if !(r < 1e-12) {
            failures.push(format!("inverse system {f} ({r:.1e})"));
        }
        worst_inv = worst_inv.max(r);
    }
    let el = t.elapsed();
    Outcome {
        pass: failures.is_empty() && within(el, 10.0),
        detail: format!(
            "{} expressions x 100 samples, max error {worst:.1e}; inverse systems max residual {worst_inv:.1e}; failures {failures:?}; {:.2}s",
            RULES.len(),
            el.as_secs_f64()
        ),
    }
}

const EXAMPLE2_S: &str = "(t/12 - 1/(12*t))*ln(t^2 - t + 1) - (t/6 - 1/(6*t))*ln(1 + t) \
    + (t/4 + 1/(4*t))*(2/sqrt(3))*(arctan((2*t - 1)/sqrt(3)) + pi/6) - 1/2";

fn open_grid_error(id: &str, c: f64, lo: f64, hi: f64, terms: u64) -> f64 {
    let ctx = PrecisionContext::for_target(1e-18);
    (0..50)
        .map(|i| {
            let x = lo + (i as f64 + 0.5) * (hi - lo) / 50.0;
            let closed = closed_form_eval(id, 0, None, c, x, &ctx).map(|v| v.to_f64()).unwrap_or(f64::NAN);
            let partial = partial_sum_eval(id, 0, None, c, x, terms).unwrap_or(f64::NAN);
            (closed - partial).abs()
        })
        .fold(0.0, |a, b| if b.is_nan() { f64::INFINITY } else { a.max(b) })
}

fn same_points(got: &[f64], want: &[f64]) -> bool {
    got.len() == want.len() && got.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-9)
}

fn worked_examples() -> Outcome {
    let t = Instant::now();
    let e1 = open_grid_error("example1", PI, 0.1, PI - 0.1, 2000);
    let e2 = open_grid_error("example2", PI / 3.0, -PI / 3.0 + 0.1, PI / 3.0 - 0.1, 100_000);
    let s1 = map_cospow(&parse("-ln(1-t)").unwrap(), "t", "x").unwrap().sin;
    let p1: Vec<f64> = s1.singular.points_in(0.0, PI).into_iter().map(|p| p.1).collect();
    let s2 = map_fourier(&parse(EXAMPLE2_S).unwrap(), "t", "x", &Expr::pi()).unwrap().cos;
    let p2: Vec<f64> = s2.singular.points_in(-PI, PI).into_iter().map(|p| p.1).collect();
    let sing_ok = same_points(&p1, &[0.0, PI]) && same_points(&p2, &[-PI, -PI / 3.0, PI / 3.0, PI]);
    let el = t.elapsed();
    Outcome {
        pass: e1 <= 1e-8 && e2 <= 1e-3 && sing_ok,
        detail: format!(
            "example 1 max error {e1:.1e} (tol 1e-8), example 2 max error {e2:.1e} (tol 1e-3), singular sets {p1:.4?} and {p2:.4?}, {:.2}s",
            el.as_secs_f64()
        ),
    }
}

fn registry_sweep() -> Outcome {
    let t = Instant::now();
    let reports = verify_all();
    let ids: HashSet<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    let failed: Vec<String> = reports.iter().filter(|r| !r.pass).map(|r| format!("{} r={}", r.id, r.r)).collect();
    let mut endpoint_fail = Vec::new();
    let mut closed_checked = 0;
    for e in CATALOG.iter() {
        for &r in e.sweep {
            let rec = e.build(r, None).unwrap();
            for (y, closed, err) in rec.endpoint_errors(rec.terms) {
                if closed {
                    closed_checked += 1;
                    if err > rec.tol {
                        endpoint_fail.push(format!("{} r={r} x/c={y}", rec.id));
                    }
                }
            }
        }
    }
    let ex1 = get_identity("example1", 0, None).unwrap();
    let at_zero = ex1.endpoint_errors(ex1.terms)[0].2;
    let el = t.elapsed();
    Outcome {
        pass: ids.len() >= 18
            && failed.is_empty()
            && endpoint_fail.is_empty()
            && at_zero > 10.0 * ex1.tol
            && within(el, 120.0),
        detail: format!(
            "{} records over {} identities, failures {failed:?}; {closed_checked} closed endpoints, failures {endpoint_fail:?}; example 1 error at x=0 is {at_zero:.3} vs 10*tol = {:.0e}; {:.1}s",
            reports.len(),
            ids.len(),
            10.0 * ex1.tol,
            el.as_secs_f64()
        ),
    }
}

fn structural() -> Outcome {
    let t = Instant::now();
    let mut checks = special_value_checks(6);
    let structural = structural_checks(5);
    let ok_struct = structural.is_ok();
    checks.extend(structural.unwrap_or_default());
    let bad: Vec<&str> = checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    Outcome {
        pass: ok_struct && bad.is_empty() && !checks.is_empty(),
        detail: format!("{} exact checks, failures {bad:?}, {:.2}s", checks.len(), t.elapsed().as_secs_f64()),
    }
}

fn lemma5_quadrature(m: u32, x: f64) -> f64 {
    // t = x s^2 removes the log singularity at t = 0
    let fact: f64 = (1..m).map(|i| i as f64).product();
    let f = |s: f64| {
        if s == 0.0 {
            return 0.0;
        }
        let t = x * s * s;
        (x - t).powi(m as i32 - 1) * t.ln() * 2.0 * x * s
    };
    quad::integrate(&f, 0.0, 1.0, 1e-15, 1e-15).map(|q| q.value / fact).unwrap_or(f64::NAN)
}

fn auxiliary() -> Outcome {
    let t = Instant::now();
    let ctx = PrecisionContext::new(30, 1e-18).unwrap();
    let mut worst = 0.0f64;
    let mut count = 0;
    let mut failures = Vec::new();
    for g in CheckGroup::ALL {
        match identity_checks(g, &ctx) {
            Ok(res) => {
                for r in res {
                    count += 1;
                    worst = worst.max(r.residual);
                    if !(r.residual < 1e-15) {
                        failures.push(r.name);
                    }
                }
            }
            Err(e) => failures.push(format!("{}: {e}", g.name())),
        }
    }
    let mut worst_l5 = 0.0f64;
    for m in 1..=5u32 {
        for x in [0.25, 0.5, 1.0, 2.0, PI] {
            let d = (iterated_log_integral(m, x).unwrap() - lemma5_quadrature(m, x)).abs();
            if !(d <= 1e-12) {
                failures.push(format!("iterated log m={m} x={x}"));
            }
            worst_l5 = worst_l5.max(d);
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "{count} identity residuals, max {worst:.1e}; iterated log integral m <= 5 max error {worst_l5:.1e}; failures {failures:?}; {:.2}s",
            t.elapsed().as_secs_f64()
        ),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("exact golden values", golden),
        ("cross-recurrence exactness", cross_recurrence),
        ("odd zeta series representations", odd_zeta_series),
        ("operator calculus oracle suite", operator_suite),
        ("worked examples", worked_examples),
        ("identity registry sweep", registry_sweep),
        ("structural exact checks", structural),
        ("hurwitz and auxiliary identities", auxiliary),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        all &= o.pass;
        println!("criterion {} {name}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
