//! Series whose power-series sum is an integral of S.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::singular::{detect_singularities, rationalize, BoundaryMap, Interval, SingularSet};
use super::{unit_params, MappingError, Z_VAR};
use crate::abstract_ops::{apply_operator, simplify_guarded};
use crate::expr::{self, eval_f64, Expr, Func, Node};
use crate::quad::integrate;

/// cosine form f(x) = C - (pi/c) int_0^x sin_integrand,
/// sine form g(x) = (pi/c) int_0^x cos_integrand, with C = int_0^1 S.
#[derive(Clone, Debug)]
pub struct IntegralStep {
    pub x_var: String,
    pub c: Expr,
    pub constant: f64,
    pub constant_error: f64,
    /// Exact form of C when it is recognised as q pi^k.
    pub constant_expr: Option<Expr>,
    pub sin_integrand: Expr,
    pub cos_integrand: Expr,
    pub singular: SingularSet,
    pub validity: Interval,
}

fn var_free(e: &Expr, var: &str) -> bool {
    !e.contains_symbol(var)
}

/// Coefficients (low to high) of `e` as a polynomial in `var`.
pub fn poly_coeffs(e: &Expr, var: &str) -> Option<Vec<Expr>> {
    fn add_into(acc: &mut Vec<Expr>, o: Vec<Expr>) {
        if acc.len() < o.len() {
            acc.resize(o.len(), Expr::zero());
        }
        for (i, c) in o.into_iter().enumerate() {
            acc[i] = expr::add(&acc[i], &c);
        }
    }
    fn mul_polys(a: &[Expr], b: &[Expr]) -> Vec<Expr> {
        let mut v = vec![Expr::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                v[i + j] = expr::add(&v[i + j], &expr::mul(x, y));
            }
        }
        v
    }
    if var_free(e, var) {
        return Some(vec![e.clone()]);
    }
    match e.node() {
        Node::Symbol(_) => Some(vec![Expr::zero(), Expr::one()]),
        Node::Neg(a) => Some(poly_coeffs(a, var)?.iter().map(expr::neg).collect()),
        Node::Sum(v) => {
            let mut acc = vec![];
            for t in v {
                add_into(&mut acc, poly_coeffs(t, var)?);
            }
            Some(acc)
        }
        Node::Product(v) => {
            let mut acc = vec![Expr::one()];
            for f in v {
                acc = mul_polys(&acc, &poly_coeffs(f, var)?);
            }
            Some(acc)
        }
        Node::Quotient(n, d) if var_free(d, var) => Some(
            poly_coeffs(n, var)?
                .iter()
                .map(|c| expr::div(c, d))
                .collect(),
        ),
        Node::Pow(a, k) if *k >= 0 && *k <= 32 => {
            let p = poly_coeffs(a, var)?;
            let mut acc = vec![Expr::one()];
            for _ in 0..*k {
                acc = mul_polys(&acc, &p);
            }
            Some(acc)
        }
        _ => None,
    }
}

/// int_0^x of a polynomial given by its coefficients.
fn antiderivative(coeffs: &[Expr], var: &str) -> Expr {
    let x = Expr::sym(var);
    expr::sum(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                expr::mul(
                    &expr::mul(&Expr::frac(1, i as i64 + 1), c),
                    &expr::pow(&x, i as i64 + 1),
                )
            })
            .collect(),
    )
}

/// q pi^k with small q when `v` is numerically such a value.
pub fn recognize_constant(v: f64) -> Option<Expr> {
    let pi = std::f64::consts::PI;
    for k in 0..=4 {
        let r = v / pi.powi(k);
        if let Some(q) = rationalize(r, 720, 1e-13 * r.abs().max(1.0)) {
            if q.numer().abs() > BigInt::from(100_000) {
                continue;
            }
            let back = q.to_f64().unwrap_or(f64::NAN) * pi.powi(k);
            if (back - v).abs() <= 1e-13 * v.abs().max(1.0) {
                return Some(expr::mul(
                    &Expr::rational(q),
                    &expr::pow(&Expr::pi(), k as i64),
                ));
            }
        }
    }
    None
}

fn cancel_t(e: &Expr, t_var: &str) -> Expr {
    let t = Expr::sym(t_var);
    e.map_bottom_up(&mut |n| match n.node() {
        Node::Product(v) => {
            let qi = v
                .iter()
                .position(|f| matches!(f.node(), Node::Quotient(_, d) if *d == t));
            let ti = v.iter().position(|f| *f == t);
            match (qi, ti) {
                (Some(qi), Some(ti)) => {
                    let Node::Quotient(num, _) = v[qi].node() else {
                        unreachable!()
                    };
                    let rest: Vec<Expr> = v
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != qi && *i != ti)
                        .map(|(_, f)| f.clone())
                        .collect();
                    expr::mul(num, &expr::product(rest))
                }
                _ => n,
            }
        }
        _ => n,
    })
}

fn integrable_constant(
    s: &Expr,
    t_var: &str,
    params: &HashMap<String, f64>,
) -> Result<(f64, f64), MappingError> {
    let f = |t: f64| {
        let mut b = params.clone();
        b.insert(t_var.to_string(), t);
        eval_f64(s, &b).unwrap_or(f64::NAN)
    };
    let run = |eps: f64| {
        integrate(&f, eps, 1.0 - eps, 1e-13, 1e-12)
            .map_err(|e| MappingError::NotIntegrable(e.to_string()))
    };
    let a = run(1e-6)?;
    let b = run(1e-12)?;
    if (a.value - b.value).abs() > 1e-3 {
        return Err(MappingError::NotIntegrable(format!(
            "truncated integrals {} and {} do not settle",
            a.value, b.value
        )));
    }
    let full = integrate(&f, 0.0, 1.0, 1e-13, 1e-12)
        .map_err(|e| MappingError::Quadrature(e.to_string()))?;
    Ok((full.value, full.error.max((full.value - b.value).abs())))
}

/// Cosine and sine series whose power-series sum is int_0^t S.
pub fn integral_step(
    s: &Expr,
    t_var: &str,
    x_var: &str,
    c: &Expr,
) -> Result<IntegralStep, MappingError> {
    let mut params = unit_params(c);
    for p in s.free_symbols() {
        if p != t_var {
            params.entry(p).or_insert(1.0);
        }
    }
    let (constant, constant_error) = integrable_constant(s, t_var, &params)?;
    let st = cancel_t(&expr::mul(s, &Expr::sym(t_var)), t_var);
    let sz = st.substitute(t_var, &expr::apply(Func::Exp, &Expr::sym(Z_VAR)));
    let shift = expr::mul(&Expr::pi(), &expr::div(&Expr::sym(x_var), c));
    let pair = apply_operator(&sz, Z_VAR, &Expr::zero(), &shift)?;
    let period = expr::mul(&Expr::int(2), c);
    let period_value = eval_f64(&period, &params)?;
    let mut singular = detect_singularities(
        &st,
        t_var,
        BoundaryMap::Fourier,
        &period,
        period_value,
        &[],
        x_var,
        &params,
    );
    let validity = singular.validity_around_zero();
    let (lo, hi) = match (&validity.lo, &validity.hi) {
        (None, None) => (-period_value, period_value),
        _ => (validity.lo_value(), validity.hi_value()),
    };
    if !(hi > lo) {
        return Err(MappingError::NoNeighbourhood(lo, hi));
    }
    let gs = simplify_guarded(&pair.sin_part, x_var, lo, hi, &params)?;
    let gc = simplify_guarded(&pair.cos_part, x_var, lo, hi, &params)?;
    singular.add_guard_zeros(&gs.guards, x_var, &params);
    singular.add_guard_zeros(&gc.guards, x_var, &params);
    Ok(IntegralStep {
        x_var: x_var.to_string(),
        c: c.clone(),
        constant,
        constant_error,
        constant_expr: recognize_constant(constant),
        sin_integrand: gs.expr,
        cos_integrand: gc.expr,
        singular,
        validity,
    })
}

impl IntegralStep {
    fn pi_over_c(&self) -> Expr {
        expr::div(&Expr::pi(), &self.c)
    }

    /// Symbolic cosine form, when the constant is recognised and the
    /// integrand is a polynomial in x.
    pub fn cosine_form(&self) -> Option<Expr> {
        let k = self.constant_expr.as_ref()?;
        let p = poly_coeffs(&self.sin_integrand, &self.x_var)?;
        Some(expr::sub(
            k,
            &expr::mul(&self.pi_over_c(), &antiderivative(&p, &self.x_var)),
        ))
    }

    pub fn sine_form(&self) -> Option<Expr> {
        let p = poly_coeffs(&self.cos_integrand, &self.x_var)?;
        Some(expr::mul(
            &self.pi_over_c(),
            &antiderivative(&p, &self.x_var),
        ))
    }

    fn integral(
        &self,
        e: &Expr,
        x: f64,
        params: &HashMap<String, f64>,
    ) -> Result<f64, MappingError> {
        let f = |u: f64| {
            let mut b = params.clone();
            b.insert(self.x_var.clone(), u);
            eval_f64(e, &b).unwrap_or(f64::NAN)
        };
        let q = integrate(&f, 0.0, x, 1e-13, 1e-12)
            .map_err(|e| MappingError::Quadrature(e.to_string()))?;
        let c = eval_f64(&self.c, params)?;
        Ok(std::f64::consts::PI / c * q.value)
    }

    pub fn eval_cosine(&self, x: f64, params: &HashMap<String, f64>) -> Result<f64, MappingError> {
        Ok(self.constant - self.integral(&self.sin_integrand, x, params)?)
    }

    pub fn eval_sine(&self, x: f64, params: &HashMap<String, f64>) -> Result<f64, MappingError> {
        self.integral(&self.cos_integrand, x, params)
    }
}
