//! The shift operators cos(h d/dx) and sin(h d/dx).
//!
//! For an analytic f, cos(h d/dx) f(x) = Re f(x + ih) and
//! sin(h d/dx) f(x) = Im f(x + ih). `apply_operator` produces both parts
//! structurally from the rule table; `complex_shift_oracle` evaluates them
//! independently through complex arithmetic.

mod simplify;
pub mod trigpoly;

use std::collections::HashMap;

use thiserror::Error;

use crate::expr::{
    self, add, apply, div, eval_complex, eval_real, mul, neg, sub, ComplexReal, EvalError, Expr,
    Func, Node,
};
use crate::real::Real;

pub(crate) use simplify::golden_min;
pub use simplify::{simplify_guarded, Guard, Guarded, SimplifyError};

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorPair {
    pub cos_part: Expr,
    pub sin_part: Expr,
    pub argument: Expr,
    pub shift: Expr,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error("no operator rule for '{0}'")]
    Unsupported(&'static str),
}

type Pair = (Expr, Expr);

fn two() -> Expr {
    Expr::int(2)
}

fn half(e: &Expr) -> Expr {
    mul(&Expr::frac(1, 2), e)
}

fn f(func: Func, e: &Expr) -> Expr {
    apply(func, e)
}

/// The rule table: operator pair of func(u) given the pair (x, y) of u.
fn rule(func: Func, x: &Expr, y: &Expr) -> Result<Pair, OperatorError> {
    if y.is_zero() {
        return match func {
            Func::Tanh | Func::Artanh | Func::Arcoth => {
                Err(OperatorError::Unsupported(func.name()))
            }
            _ => Ok((f(func, x), Expr::zero())),
        };
    }
    let x2 = mul(&two(), x);
    let y2 = mul(&two(), y);
    let rho2 = add(&expr::pow(x, 2), &expr::pow(y, 2));
    Ok(match func {
        Func::Exp => {
            let ex = f(Func::Exp, x);
            (mul(&f(Func::Cos, y), &ex), mul(&f(Func::Sin, y), &ex))
        }
        Func::Sin => (
            mul(&f(Func::Cosh, y), &f(Func::Sin, x)),
            mul(&f(Func::Sinh, y), &f(Func::Cos, x)),
        ),
        Func::Cos => (
            mul(&f(Func::Cosh, y), &f(Func::Cos, x)),
            neg(&mul(&f(Func::Sinh, y), &f(Func::Sin, x))),
        ),
        Func::Sinh => (
            mul(&f(Func::Cos, y), &f(Func::Sinh, x)),
            mul(&f(Func::Sin, y), &f(Func::Cosh, x)),
        ),
        Func::Cosh => (
            mul(&f(Func::Cos, y), &f(Func::Cosh, x)),
            mul(&f(Func::Sin, y), &f(Func::Sinh, x)),
        ),
        Func::Tan => {
            let d = add(&f(Func::Cosh, &y2), &f(Func::Cos, &x2));
            (div(&f(Func::Sin, &x2), &d), div(&f(Func::Sinh, &y2), &d))
        }
        Func::Cot => {
            let d = sub(&f(Func::Cosh, &y2), &f(Func::Cos, &x2));
            (
                div(&f(Func::Sin, &x2), &d),
                neg(&div(&f(Func::Sinh, &y2), &d)),
            )
        }
        Func::Sec => {
            let d = add(&f(Func::Cosh, &y2), &f(Func::Cos, &x2));
            (
                div(
                    &expr::product(vec![two(), f(Func::Cosh, y), f(Func::Cos, x)]),
                    &d,
                ),
                div(
                    &expr::product(vec![two(), f(Func::Sinh, y), f(Func::Sin, x)]),
                    &d,
                ),
            )
        }
        Func::Csc => {
            let d = sub(&f(Func::Cosh, &y2), &f(Func::Cos, &x2));
            (
                div(
                    &expr::product(vec![two(), f(Func::Cosh, y), f(Func::Sin, x)]),
                    &d,
                ),
                neg(&div(
                    &expr::product(vec![two(), f(Func::Sinh, y), f(Func::Cos, x)]),
                    &d,
                )),
            )
        }
        Func::Ln => (half(&f(Func::Ln, &rho2)), f(Func::Arccot, &div(x, y))),
        Func::Arctan => (
            half(&f(Func::Arctan, &div(&x2, &sub(&Expr::one(), &rho2)))),
            half(&f(Func::Artanh, &div(&y2, &add(&Expr::one(), &rho2)))),
        ),
        Func::Arccot => (
            half(&f(Func::Arccot, &div(&sub(&rho2, &Expr::one()), &x2))),
            neg(&half(&f(
                Func::Arcoth,
                &div(&add(&Expr::one(), &rho2), &y2),
            ))),
        ),
        Func::Sqrt => {
            let rho = f(Func::Sqrt, &rho2);
            (
                f(Func::Sqrt, &half(&add(&rho, x))),
                f(Func::Sqrt, &half(&sub(&rho, x))),
            )
        }
        Func::Tanh | Func::Artanh | Func::Arcoth => {
            return Err(OperatorError::Unsupported(func.name()))
        }
    })
}

fn pair_mul(u: &Pair, v: &Pair) -> Pair {
    (
        sub(&mul(&u.0, &v.0), &mul(&u.1, &v.1)),
        add(&mul(&u.0, &v.1), &mul(&u.1, &v.0)),
    )
}

fn pair_div(u: &Pair, v: &Pair) -> Pair {
    if v.1.is_zero() {
        return (div(&u.0, &v.0), div(&u.1, &v.0));
    }
    let d = add(&expr::pow(&v.0, 2), &expr::pow(&v.1, 2));
    (
        div(&add(&mul(&v.0, &u.0), &mul(&v.1, &u.1)), &d),
        div(&sub(&mul(&v.0, &u.1), &mul(&v.1, &u.0)), &d),
    )
}

struct Walker<'a> {
    var: &'a str,
    arg: &'a Expr,
    shift: &'a Expr,
    memo: HashMap<usize, Pair>,
}

impl Walker<'_> {
    fn pair(&mut self, e: &Expr) -> Result<Pair, OperatorError> {
        if !e.contains_symbol(self.var) {
            return Ok((e.clone(), Expr::zero()));
        }
        if let Some(p) = self.memo.get(&e.key()) {
            return Ok(p.clone());
        }
        let p = match e.node() {
            Node::Symbol(_) => (self.arg.clone(), self.shift.clone()),
            Node::Neg(a) => {
                let (x, y) = self.pair(a)?;
                (neg(&x), neg(&y))
            }
            Node::Sum(v) => {
                let mut xs = Vec::new();
                let mut ys = Vec::new();
                for c in v {
                    let (x, y) = self.pair(c)?;
                    xs.push(x);
                    ys.push(y);
                }
                (expr::sum(xs), expr::sum(ys))
            }
            Node::Product(v) => {
                let mut acc = self.pair(&v[0])?;
                for c in &v[1..] {
                    let q = self.pair(c)?;
                    acc = pair_mul(&acc, &q);
                }
                acc
            }
            Node::Quotient(u, v) => {
                let pu = self.pair(u)?;
                let pv = self.pair(v)?;
                pair_div(&pu, &pv)
            }
            Node::Pow(a, n) => {
                let base = self.pair(a)?;
                let mut acc: Pair = (Expr::one(), Expr::zero());
                let mut b = base;
                let mut k = n.unsigned_abs();
                while k > 0 {
                    if k & 1 == 1 {
                        acc = pair_mul(&acc, &b);
                    }
                    k >>= 1;
                    if k > 0 {
                        b = pair_mul(&b, &b);
                    }
                }
                if *n < 0 {
                    pair_div(&(Expr::one(), Expr::zero()), &acc)
                } else {
                    acc
                }
            }
            Node::Apply(func, a) => {
                let (x, y) = self.pair(a)?;
                rule(*func, &x, &y)?
            }
            Node::Rational(_) | Node::Pi => unreachable!(),
        };
        self.memo.insert(e.key(), p.clone());
        Ok(p)
    }
}

/// cos(shift d/dvar) e and sin(shift d/dvar) e, both taken at var = arg.
pub fn apply_operator(
    e: &Expr,
    var: &str,
    arg: &Expr,
    shift: &Expr,
) -> Result<OperatorPair, OperatorError> {
    let (cos_part, sin_part) = if shift.is_zero() {
        (e.substitute(var, arg), Expr::zero())
    } else {
        let mut w = Walker {
            var,
            arg,
            shift,
            memo: HashMap::new(),
        };
        w.pair(e)?
    };
    Ok(OperatorPair {
        cos_part,
        sin_part,
        argument: arg.clone(),
        shift: shift.clone(),
    })
}

/// (Re, Im) of e(x + ih), with every other symbol bound to a real value.
pub fn complex_shift_oracle(
    e: &Expr,
    var: &str,
    x: &Real,
    h: &Real,
    params: &HashMap<String, Real>,
    digits: u32,
) -> Result<(Real, Real), EvalError> {
    let mut b: HashMap<String, ComplexReal> = params
        .iter()
        .map(|(k, v)| (k.clone(), ComplexReal::real(v.clone())))
        .collect();
    b.insert(var.to_string(), ComplexReal::new(x.clone(), h.clone()));
    let z = eval_complex(e, &b, digits)?;
    Ok((z.re, z.im))
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InverseSystemError {
    #[error("sample {index}: {source}")]
    Sample { index: usize, source: EvalError },
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

/// Check cos(Y d/dX) g(X) = argument and sin(Y d/dX) g(X) = shift, where
/// (X, Y) is `pair` and g is the inverse function written in `g_var`.
/// Returns the largest residual over the samples.
pub fn verify_inverse_system(
    g: &Expr,
    g_var: &str,
    pair: &OperatorPair,
    samples: &[HashMap<String, Real>],
    digits: u32,
) -> Result<f64, InverseSystemError> {
    let back = apply_operator(g, g_var, &pair.cos_part, &pair.sin_part)?;
    let mut worst = 0.0f64;
    for (index, s) in samples.iter().enumerate() {
        let ev = |e: &Expr| {
            eval_real(e, s, digits).map_err(|source| InverseSystemError::Sample { index, source })
        };
        let rc = &ev(&back.cos_part)? - &ev(&pair.argument)?;
        let rs = &ev(&back.sin_part)? - &ev(&pair.shift)?;
        worst = worst.max(rc.abs().to_f64()).max(rs.abs().to_f64());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn r(v: f64) -> Real {
        Real::from_f64(v, 128)
    }

    fn check(src: &str, x: f64, h: f64) {
        let e = parse(src).unwrap();
        let p = apply_operator(&e, "x", &Expr::sym("x"), &Expr::sym("h")).unwrap();
        let b = HashMap::from([("x".to_string(), r(x)), ("h".to_string(), r(h))]);
        let c = eval_real(&p.cos_part, &b, 30).unwrap();
        let s = eval_real(&p.sin_part, &b, 30).unwrap();
        let (oc, os) = complex_shift_oracle(&e, "x", &r(x), &r(h), &HashMap::new(), 30).unwrap();
        assert!((&c - &oc).abs().to_f64() < 1e-25, "{src} cos part");
        assert!((&s - &os).abs().to_f64() < 1e-25, "{src} sin part");
    }

    #[test]
    fn table_rules_match_oracle() {
        check("exp(x)", 0.4, 0.7);
        check("sin(x)", 0.4, 0.7);
        check("cos(x)", -1.1, 0.3);
        check("tan(x)", 0.4, 0.7);
        check("cot(x)", 0.4, -0.7);
        check("sec(x)", 0.9, 0.2);
        check("csc(x)", 0.9, 0.2);
        check("ln(x)", 0.9, -1.3);
        check("arctan(x)", 0.3, 0.5);
        check("arccot(x)", 1.3, 0.5);
        check("sinh(x)", 0.3, 0.5);
        check("cosh(x)", 0.3, 0.5);
        check("sqrt(x)", -0.3, 0.5);
    }

    #[test]
    fn algebraic_rules_match_oracle() {
        check("x^3 - 2*x + 1/(x^2 + 1)", 0.3, 0.8);
        check("exp(x)*sin(x)/(2 + cos(x))", 0.3, 0.8);
        check("ln(1 + x^2)*x^-2", 0.6, 0.3);
    }

    #[test]
    fn zero_shift_substitutes() {
        let e = parse("sin(x)*x").unwrap();
        let p = apply_operator(&e, "x", &Expr::sym("a"), &Expr::zero()).unwrap();
        assert_eq!(p.cos_part.to_string(), "sin(a)*a");
        assert!(p.sin_part.is_zero());
    }

    #[test]
    fn unsupported_functions_rejected() {
        for s in ["tanh(x)", "artanh(x)", "arcoth(x)", "1 + tanh(2*x)"] {
            let e = parse(s).unwrap();
            assert!(
                apply_operator(&e, "x", &Expr::sym("x"), &Expr::sym("h")).is_err(),
                "{s}"
            );
        }
    }

    #[test]
    fn log_exp_inverse_pair() {
        let e = parse("ln(x)").unwrap();
        let p = apply_operator(&e, "x", &Expr::sym("x"), &Expr::sym("h")).unwrap();
        let samples: Vec<_> = [(0.5, 0.3), (2.0, -1.0), (1.2, 0.9)]
            .iter()
            .map(|&(x, h)| HashMap::from([("x".to_string(), r(x)), ("h".to_string(), r(h))]))
            .collect();
        let g = parse("exp(y)").unwrap();
        let worst = verify_inverse_system(&g, "y", &p, &samples, 30).unwrap();
        assert!(worst < 1e-25);
    }
}
