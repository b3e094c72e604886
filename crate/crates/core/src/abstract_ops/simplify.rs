//! Guarded simplification on an interval of the variable.
//!
//! Every rewrite that is not a pure algebraic identity carries a guard
//! expression that must be non-zero on the open interval. A rewrite whose
//! guard cannot be confirmed numerically is skipped, and so is any rewrite
//! whose result disagrees numerically with its input.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::trigpoly::{extract, find_base, split_coeff, Poly, TrigPoly};
use crate::expr::{self, apply, eval_f64, mul, neg, Expr, Func, Node};

#[derive(Clone, Debug, PartialEq)]
pub struct Guard {
    pub rule: &'static str,
    /// Must be non-zero on the interval for the rewrite to hold.
    pub nonzero: Expr,
}

#[derive(Clone, Debug)]
pub struct Guarded {
    pub expr: Expr,
    pub guards: Vec<Guard>,
    /// Rules that matched but whose guard could not be verified.
    pub skipped: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimplifyError {
    #[error("empty interval ({0}, {1})")]
    EmptyInterval(f64, f64),
}

struct Ctx<'a> {
    var: &'a str,
    lo: f64,
    hi: f64,
    params: &'a HashMap<String, f64>,
    guards: Vec<Guard>,
    skipped: Vec<&'static str>,
}

/// Simplify `e` assuming `var` ranges over the open interval (lo, hi).
/// Other symbols are bound through `params` for the numeric guard checks.
pub fn simplify_guarded(
    e: &Expr,
    var: &str,
    lo: f64,
    hi: f64,
    params: &HashMap<String, f64>,
) -> Result<Guarded, SimplifyError> {
    if !(lo < hi) {
        return Err(SimplifyError::EmptyInterval(lo, hi));
    }
    let mut ctx = Ctx {
        var,
        lo,
        hi,
        params,
        guards: vec![],
        skipped: vec![],
    };
    let mut cur = e.clone();
    for _ in 0..8 {
        let next = cur.map_bottom_up(&mut |n| ctx.rewrite(n));
        if next == cur {
            break;
        }
        cur = next;
    }
    ctx.skipped.sort();
    ctx.skipped.dedup();
    Ok(Guarded {
        expr: cur,
        guards: ctx.guards,
        skipped: ctx.skipped,
    })
}

impl Ctx<'_> {
    fn finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    fn eval(&self, e: &Expr, x: f64) -> Option<f64> {
        let mut b = self.params.clone();
        b.insert(self.var.to_string(), x);
        eval_f64(e, &b).ok().filter(|v| v.is_finite())
    }

    fn sample_points(&self, n: usize) -> Vec<f64> {
        let (a, b) = if self.finite() {
            (self.lo, self.hi)
        } else {
            (self.lo.max(-4.0), self.hi.min(4.0))
        };
        (1..=n)
            .map(|i| a + (b - a) * i as f64 / (n + 1) as f64)
            .collect()
    }

    /// True when g has no zero strictly inside the interval.
    fn guard_holds(&self, g: &Expr) -> bool {
        if !g.contains_symbol(self.var) {
            return self.eval(g, 0.0).is_some_and(|v| v != 0.0);
        }
        if !self.finite() {
            return false;
        }
        let n = 600;
        let w = self.hi - self.lo;
        let pad = w * 1e-9;
        let xs: Vec<f64> = (0..=n)
            .map(|i| self.lo + pad + (w - 2.0 * pad) * i as f64 / n as f64)
            .collect();
        let mut vals = Vec::with_capacity(xs.len());
        for &x in &xs {
            match self.eval(g, x) {
                Some(v) => vals.push(v),
                None => return false,
            }
        }
        let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-300);
        let mut mags: Vec<f64> = vals.iter().map(|v| v.abs()).collect();
        mags.sort_by(|a, b| a.total_cmp(b));
        let typical = mags[mags.len() / 2].max(1e-300);
        for i in 0..n {
            if vals[i] == 0.0 {
                return false;
            }
            if vals[i].signum() != vals[i + 1].signum() {
                // a sign flip is either a zero or a pole; only zeros break the guard
                let (mut a, mut b) = (xs[i], xs[i + 1]);
                let sa = vals[i].signum();
                for _ in 0..80 {
                    let m = 0.5 * (a + b);
                    match self.eval(g, m) {
                        Some(v) if v.signum() == sa => a = m,
                        Some(_) => b = m,
                        None => return false,
                    }
                }
                let ends = [self.eval(g, a), self.eval(g, b)];
                let smallest = ends
                    .iter()
                    .flatten()
                    .fold(f64::INFINITY, |m, v| m.min(v.abs()));
                if smallest < 1e3 * typical {
                    return false;
                }
            }
        }
        // interior local minima of |g| that might touch zero between samples
        for i in 1..n {
            let (a, b, c) = (vals[i - 1].abs(), vals[i].abs(), vals[i + 1].abs());
            if b <= a && b <= c {
                let m = golden_min(
                    |x| self.eval(g, x).map(f64::abs).unwrap_or(0.0),
                    xs[i - 1],
                    xs[i + 1],
                );
                let inner = m.0 > self.lo + w * 1e-6 && m.0 < self.hi - w * 1e-6;
                if inner && m.1 <= 1e-10 * scale {
                    return false;
                }
            }
        }
        true
    }

    fn agrees(&self, old: &Expr, new: &Expr) -> bool {
        let mut compared = 0;
        for x in self.sample_points(11) {
            if let (Some(a), Some(b)) = (self.eval(old, x), self.eval(new, x)) {
                if (a - b).abs() > 1e-8 * (1.0 + a.abs()) {
                    return false;
                }
                compared += 1;
            }
        }
        compared >= 3
    }

    fn guarded(&mut self, rule: &'static str, old: &Expr, new: Expr, guards: Vec<Expr>) -> Expr {
        if guards.iter().all(|g| self.guard_holds(g)) && self.agrees(old, &new) {
            for g in guards {
                if g.contains_symbol(self.var) {
                    self.guards.push(Guard { rule, nonzero: g });
                }
            }
            new
        } else {
            self.skipped.push(rule);
            old.clone()
        }
    }

    fn rewrite(&mut self, e: Expr) -> Expr {
        match e.node() {
            Node::Sum(_) => {
                let c = collect_like_terms(&e);
                self.collapse_constant(c)
            }
            Node::Product(_) => self.collapse_constant(e),
            Node::Quotient(..) => self.trig_quotient(e),
            Node::Apply(Func::Arctan | Func::Arccot, _) => self.inverse_trig(e),
            _ => e,
        }
    }

    fn collapse_constant(&mut self, e: Expr) -> Expr {
        if let Some(base) = find_base(&e, self.var) {
            if let Some(tp) = extract(&e, self.var, &base) {
                if let Some(q) = tp.as_constant() {
                    return Expr::rational(q);
                }
            }
        }
        e
    }

    fn trig_quotient(&mut self, e: Expr) -> Expr {
        let Node::Quotient(p, q) = e.node() else {
            return e;
        };
        if q.is_zero() {
            return e;
        }
        let Some(base) = find_base(&e, self.var) else {
            return e;
        };
        let (Some(tp), Some(tq)) = (extract(p, self.var, &base), extract(q, self.var, &base))
        else {
            return e;
        };
        if tq.as_constant().is_some() {
            return e;
        }
        // multiply through by the conjugate A2 - S B2 of the denominator
        let conj = TrigPoly {
            a: tq.a.clone(),
            b: tq.b.neg(),
        };
        let d = tq.mul(&conj).a;
        if d.is_zero() {
            return e;
        }
        let n = tp.mul(&conj);
        let g = Poly::gcd(&Poly::gcd(&n.a, &n.b), &d);
        let (na, nb, mut dd) = (n.a.divrem(&g).0, n.b.divrem(&g).0, d.divrem(&g).0);
        let lead = dd.lead();
        let (na, nb) = (na.scale(&lead.recip()), nb.scale(&lead.recip()));
        dd = dd.monic();
        let phi = base.phi();
        let (cc, ss) = (apply(Func::Cos, &phi), apply(Func::Sin, &phi));
        let half = BigRational::new(1.into(), 2.into());
        let one = BigRational::one();
        let recognised = if na.is_zero() {
            match (nb.as_constant(), dd.0.as_slice()) {
                (Some(b), [z, o]) if z.is_zero() && o.is_one() => {
                    Some(mul(&Expr::rational(b), &apply(Func::Tan, &phi)))
                }
                (Some(b), [z, o]) if z.is_one() && o.is_one() => Some(mul(
                    &Expr::rational(b),
                    &apply(Func::Tan, &base.scaled(half.clone())),
                )),
                (Some(b), [z, o]) if *z == -&one && o.is_one() => Some(mul(
                    &Expr::rational(-b),
                    &apply(Func::Cot, &base.scaled(half.clone())),
                )),
                (None, [z0, z1, o]) if *z0 == -&one && z1.is_zero() && o.is_one() => {
                    match nb.0.as_slice() {
                        [z, b] if z.is_zero() => {
                            Some(mul(&Expr::rational(-b), &apply(Func::Cot, &phi)))
                        }
                        _ => None,
                    }
                }
                _ => None,
            }
        } else {
            None
        };
        let out = match recognised {
            Some(r) => r,
            None => {
                let num = TrigPoly { a: na, b: nb }.to_expr(&cc, &ss);
                let den = dd.to_expr(&cc);
                let r = expr::div(&num, &den);
                if r.size() >= e.size() {
                    return e;
                }
                r
            }
        };
        let guard = expr::add(&expr::pow(p, 2), &expr::pow(q, 2));
        self.guarded("trig-quotient", &e, out, vec![guard])
    }

    fn inverse_trig(&mut self, e: Expr) -> Expr {
        let Node::Apply(f, w) = e.node() else {
            return e;
        };
        let f = *f;
        let pi = Expr::pi();
        match w.node() {
            Node::Neg(u) if f == Func::Arccot => {
                let out = neg(&apply(Func::Arccot, u));
                self.guarded("arccot-odd", &e, out, vec![u.clone()])
            }
            Node::Quotient(p, q) if q.is_zero() => {
                let Some(sign) = self.sample_points(5).iter().find_map(|&x| self.eval(p, x)) else {
                    return e;
                };
                let out = if f == Func::Arccot {
                    Expr::zero()
                } else {
                    mul(&Expr::frac(if sign > 0.0 { 1 } else { -1 }, 2), &pi)
                };
                if self.guard_holds(p) {
                    if p.contains_symbol(self.var) {
                        self.guards.push(Guard {
                            rule: "zero-denominator",
                            nonzero: p.clone(),
                        });
                    }
                    out
                } else {
                    self.skipped.push("zero-denominator");
                    e
                }
            }
            Node::Apply(g @ (Func::Tan | Func::Cot), u) => {
                let Some(mid) = self.eval(u, self.mid()) else {
                    return e;
                };
                let pi_f = std::f64::consts::PI;
                // arccot(tan u) = arctan(cot u) = pi/2 - u + k pi for u in (k pi, (k+1) pi);
                // arccot(cot u) = arctan(tan u) = u - k pi for u in (k pi - pi/2, k pi + pi/2)
                let complementary = (f == Func::Arccot) == (*g == Func::Tan);
                let (out, guard) = if complementary {
                    let k = (mid / pi_f).floor() as i64;
                    let c = BigRational::new((2 * k + 1).into(), 2.into());
                    (
                        expr::sub(&mul(&Expr::rational(c), &pi), u),
                        apply(Func::Sin, u),
                    )
                } else {
                    let k = (mid / pi_f).round() as i64;
                    (expr::sub(u, &mul(&Expr::int(k), &pi)), apply(Func::Cos, u))
                };
                self.guarded("inverse-of-tangent", &e, out, vec![guard])
            }
            _ => e,
        }
    }

    fn mid(&self) -> f64 {
        if self.finite() {
            0.5 * (self.lo + self.hi)
        } else if self.lo.is_finite() {
            self.lo + 1.0
        } else if self.hi.is_finite() {
            self.hi - 1.0
        } else {
            0.0
        }
    }
}

fn collect_like_terms(e: &Expr) -> Expr {
    let Node::Sum(v) = e.node() else {
        return e.clone();
    };
    let mut groups: Vec<(Expr, BigRational)> = Vec::new();
    for t in v {
        let (q, core) = split_coeff(t);
        match groups.iter_mut().find(|(c, _)| *c == core) {
            Some(g) => g.1 += q,
            None => groups.push((core, q)),
        }
    }
    if groups.len() == v.len() {
        return e.clone();
    }
    expr::sum(
        groups
            .into_iter()
            .filter(|(_, q)| !q.is_zero())
            .map(|(c, q)| mul(&Expr::rational(q), &c))
            .collect(),
    )
}

/// Golden-section search for the minimum of f on [a, b]; returns (x, f(x)).
pub(crate) fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() < 1e-15 * (1.0 + a.abs()) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn params() -> HashMap<String, f64> {
        HashMap::from([("c".to_string(), 1.0)])
    }

    fn simp(src: &str, lo: f64, hi: f64) -> Guarded {
        simplify_guarded(&parse(src).unwrap(), "x", lo, hi, &params()).unwrap()
    }

    fn same(a: &Expr, b: &str, xs: &[f64]) {
        let b = parse(b).unwrap();
        for &x in xs {
            let m = HashMap::from([("x".to_string(), x), ("c".to_string(), 1.0)]);
            let (u, v) = (eval_f64(a, &m).unwrap(), eval_f64(&b, &m).unwrap());
            assert!((u - v).abs() < 1e-12, "{a} vs {b} at {x}");
        }
    }

    #[test]
    fn arccot_of_cot_half_angle() {
        let g = simp("arccot(cot(pi*x/(2*c)))", -1.0, 1.0);
        assert!(!g.expr.to_string().contains("arccot"), "{}", g.expr);
        same(&g.expr, "pi*x/(2*c)", &[-0.9, -0.3, 0.2, 0.8]);
    }

    #[test]
    fn arccot_of_negative_tan() {
        let g = simp("arccot(-tan(pi*x/(2*c)))", 0.0, 2.0);
        assert!(!g.expr.to_string().contains("tan"), "{}", g.expr);
        same(&g.expr, "-(pi/2 - pi*x/(2*c))", &[0.1, 0.7, 1.3, 1.9]);
        assert!(g.guards.len() >= 2);
    }

    #[test]
    fn zero_denominator_arctan() {
        let g = simp(
            "1/2*arctan(2*cos(pi*x/c)/(1 - cos(pi*x/c)^2 - sin(pi*x/c)^2))",
            -0.5,
            0.5,
        );
        same(&g.expr, "pi/4", &[0.0]);
        assert!(g.expr.free_symbols().is_empty());
    }

    #[test]
    fn half_angle_from_quotient() {
        let g = simp("(1 - cos(x))/(-sin(x))", 0.0, 6.2);
        assert_eq!(g.expr.to_string(), "-tan(1/2*x)");
    }

    #[test]
    fn guard_failure_skips_rewrite() {
        // the branch of arccot(cot u) jumps at u = pi/2 inside (0, 4)
        let g = simp("arccot(cot(x))", 0.0, 4.0);
        assert_eq!(g.expr.to_string(), "arccot(cot(x))");
        assert_eq!(g.skipped, vec!["inverse-of-tangent"]);
    }

    #[test]
    fn empty_interval_is_an_error() {
        assert!(simplify_guarded(&parse("x").unwrap(), "x", 1.0, 1.0, &params()).is_err());
    }
}
