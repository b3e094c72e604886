//! Singular points of the produced closed forms.
//!
//! The closed forms are boundary values of S along a closed curve: t = e^{i theta}
//! for Fourier series, t = cos x e^{ix} for the cos^n family. A point is singular
//! when, along that curve, a denominator of S vanishes, a branch point is hit or
//! a branch cut is crossed.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::abstract_ops::Guard;
use crate::expr::{self, eval_c64, eval_f64, Expr, Func, Node};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryMap {
    /// t = e^{i theta}, theta = 2 pi s
    Fourier,
    /// t = cos x e^{ix}, x = pi s
    CosPow,
}

impl BoundaryMap {
    pub fn point(self, s: f64) -> Complex64 {
        match self {
            BoundaryMap::Fourier => Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * s),
            BoundaryMap::CosPow => {
                let x = std::f64::consts::PI * s;
                Complex64::from_polar(x.cos(), x)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularKind {
    Pole,
    BranchPoint,
    BranchCut,
    Guard,
}

impl SingularKind {
    pub fn name(self) -> &'static str {
        match self {
            SingularKind::Pole => "pole",
            SingularKind::BranchPoint => "branch-point",
            SingularKind::BranchCut => "branch-cut",
            SingularKind::Guard => "guard",
        }
    }
}

/// A singular point as a fraction of the period, in [0, 1).
#[derive(Clone, Debug, PartialEq)]
pub struct Singularity {
    pub fraction: f64,
    pub exact: Option<BigRational>,
    pub kind: SingularKind,
}

#[derive(Clone, Debug)]
pub struct Endpoint {
    pub expr: Expr,
    pub value: f64,
}

/// Open interval; `None` marks an infinite end.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: Option<Endpoint>,
    pub hi: Option<Endpoint>,
}

impl Interval {
    pub fn lo_value(&self) -> f64 {
        self.lo.as_ref().map_or(f64::NEG_INFINITY, |e| e.value)
    }

    pub fn hi_value(&self) -> f64 {
        self.hi.as_ref().map_or(f64::INFINITY, |e| e.value)
    }

    pub fn contains(&self, x: f64) -> bool {
        x > self.lo_value() && x < self.hi_value()
    }
}

/// Singular points modulo the period.
#[derive(Clone, Debug)]
pub struct SingularSet {
    pub period: Expr,
    pub period_value: f64,
    pub points: Vec<Singularity>,
    /// Zeros of simplification guards. Outside the validity interval these
    /// mark where the simplified form stops matching the raw image, not
    /// where the series itself is singular.
    pub guard_zeros: Vec<Singularity>,
}

impl SingularSet {
    fn at(&self, fraction: &Option<BigRational>, f: f64, k: i64) -> (Expr, f64) {
        let value = (f + k as f64) * self.period_value;
        let e = match fraction {
            Some(q) => {
                let m = q + BigRational::from_integer(BigInt::from(k));
                expr::mul(&Expr::rational(m), &self.period)
            }
            None => expr::mul(&Expr::rational(float_rational(f + k as f64)), &self.period),
        };
        (e, value)
    }

    /// All translates of the singular points in [lo, hi], sorted.
    pub fn points_in(&self, lo: f64, hi: f64) -> Vec<(Expr, f64)> {
        let p = self.period_value;
        let tol = 1e-9 * p.abs().max(1.0);
        let mut out = Vec::new();
        for s in &self.points {
            let k0 = ((lo - tol) / p - s.fraction).ceil() as i64;
            let k1 = ((hi + tol) / p - s.fraction).floor() as i64;
            for k in k0..=k1 {
                out.push(self.at(&s.exact, s.fraction, k));
            }
        }
        out.sort_by(|a, b| a.1.total_cmp(&b.1));
        out.dedup_by(|a, b| (a.1 - b.1).abs() < tol);
        out
    }

    /// The component of 0+ between adjacent singular points.
    pub fn validity_around_zero(&self) -> Interval {
        if self.points.is_empty() {
            return Interval { lo: None, hi: None };
        }
        let eps = 1e-12;
        let mut best_lo: Option<(f64, &Singularity, i64)> = None;
        let mut best_hi: Option<(f64, &Singularity, i64)> = None;
        for s in &self.points {
            // largest translate <= 0 and smallest translate > 0
            let (lo_k, hi_k) = if s.fraction < eps { (0, 1) } else { (-1, 0) };
            let lo_v = s.fraction + lo_k as f64;
            let hi_v = s.fraction + hi_k as f64;
            if best_lo.is_none_or(|b| lo_v > b.0) {
                best_lo = Some((lo_v, s, lo_k));
            }
            if best_hi.is_none_or(|b| hi_v < b.0) {
                best_hi = Some((hi_v, s, hi_k));
            }
        }
        let mk = |b: Option<(f64, &Singularity, i64)>| {
            b.map(|(_, s, k)| {
                let (expr, value) = self.at(&s.exact, s.fraction, k);
                Endpoint { expr, value }
            })
        };
        Interval {
            lo: mk(best_lo),
            hi: mk(best_hi),
        }
    }

    /// Add the zeros in one period of each guard, as functions of `x_var`.
    pub fn add_guard_zeros(
        &mut self,
        guards: &[Guard],
        x_var: &str,
        params: &HashMap<String, f64>,
    ) {
        for g in guards {
            for f in real_zeros(&g.nonzero, x_var, self.period_value, params) {
                insert_into(&mut self.guard_zeros, f, SingularKind::Guard);
            }
        }
    }

    fn insert(&mut self, fraction: f64, kind: SingularKind) {
        insert_into(&mut self.points, fraction, kind);
    }
}

fn insert_into(points: &mut Vec<Singularity>, fraction: f64, kind: SingularKind) {
    let f = fraction.rem_euclid(1.0);
    let f = if f > 1.0 - 1e-10 { 0.0 } else { f };
    if points.iter().any(|s| {
        let d = (s.fraction - f).abs();
        d.min(1.0 - d) < 1e-8
    }) {
        return;
    }
    let exact = rationalize(f, 360, 1e-9);
    let fraction = exact.as_ref().and_then(|q| q.to_f64()).unwrap_or(f);
    points.push(Singularity {
        fraction,
        exact,
        kind,
    });
    points.sort_by(|a, b| a.fraction.total_cmp(&b.fraction));
}

fn float_rational(v: f64) -> BigRational {
    BigRational::from_float(v).unwrap_or_else(BigRational::zero)
}

/// Best rational approximation with denominator <= max_den within tol.
pub fn rationalize(v: f64, max_den: i64, tol: f64) -> Option<BigRational> {
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut x = v;
    for _ in 0..40 {
        let a = x.floor();
        let ai = a as i64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        if (h2 as f64 / k2 as f64 - v).abs() <= tol {
            return Some(BigRational::new(h2.into(), k2.into()));
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = x - a;
        if frac.abs() < 1e-15 {
            break;
        }
        x = 1.0 / frac;
    }
    None
}

const GRID: usize = 2048;

enum Probe {
    /// zero of F(w) along the curve
    Zero(Expr, fn(Complex64) -> Complex64, SingularKind),
    /// sign change of Re w (re = true) or Im w with a condition on w
    Cross(Expr, bool, fn(Complex64) -> bool),
}

fn probes(s: &Expr) -> Vec<Probe> {
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    fn walk(e: &Expr, out: &mut Vec<Probe>, seen: &mut std::collections::HashSet<usize>) {
        if !seen.insert(e.key()) {
            return;
        }
        use SingularKind::*;
        let id: fn(Complex64) -> Complex64 = |w| w;
        match e.node() {
            Node::Quotient(_, d) => out.push(Probe::Zero(d.clone(), id, Pole)),
            Node::Pow(a, n) if *n < 0 => out.push(Probe::Zero(a.clone(), id, Pole)),
            Node::Apply(f, w) => {
                let w = w.clone();
                match f {
                    Func::Ln | Func::Sqrt => {
                        out.push(Probe::Zero(w.clone(), id, BranchPoint));
                        out.push(Probe::Cross(w, false, |z| z.re < 0.0));
                    }
                    Func::Arctan => {
                        out.push(Probe::Zero(w.clone(), |z| z - Complex64::i(), BranchPoint));
                        out.push(Probe::Zero(w.clone(), |z| z + Complex64::i(), BranchPoint));
                        out.push(Probe::Cross(w, true, |z| z.im.abs() > 1.0));
                    }
                    Func::Arccot => {
                        out.push(Probe::Zero(w.clone(), id, BranchPoint));
                        out.push(Probe::Zero(w.clone(), |z| z - Complex64::i(), BranchPoint));
                        out.push(Probe::Zero(w.clone(), |z| z + Complex64::i(), BranchPoint));
                        out.push(Probe::Cross(w, true, |z| z.im.abs() < 1.0));
                    }
                    Func::Artanh => {
                        out.push(Probe::Zero(w.clone(), |z| z - 1.0, BranchPoint));
                        out.push(Probe::Zero(w.clone(), |z| z + 1.0, BranchPoint));
                        out.push(Probe::Cross(w, false, |z| z.re.abs() > 1.0));
                    }
                    Func::Arcoth => {
                        out.push(Probe::Zero(w.clone(), |z| z - 1.0, BranchPoint));
                        out.push(Probe::Zero(w.clone(), |z| z + 1.0, BranchPoint));
                        out.push(Probe::Cross(w, false, |z| z.re.abs() < 1.0));
                    }
                    Func::Tan | Func::Sec => out.push(Probe::Zero(w, |z| z.cos(), Pole)),
                    Func::Cot | Func::Csc => out.push(Probe::Zero(w, |z| z.sin(), Pole)),
                    Func::Tanh => out.push(Probe::Zero(w, |z| z.cosh(), Pole)),
                    _ => {}
                }
            }
            _ => {}
        }
        for c in e.children() {
            walk(c, out, seen);
        }
    }
    walk(s, &mut out, &mut seen);
    out
}

fn golden(f: impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    crate::abstract_ops::golden_min(f, a, b)
}

/// Singular points of the closed forms generated from S (in `t_var`) along
/// the boundary curve, plus zeros of recorded guards (in `x_var`).
pub fn detect_singularities(
    s: &Expr,
    t_var: &str,
    map: BoundaryMap,
    period: &Expr,
    period_value: f64,
    guards: &[Guard],
    x_var: &str,
    params: &HashMap<String, f64>,
) -> SingularSet {
    let mut set = SingularSet {
        period: period.clone(),
        period_value,
        points: vec![],
        guard_zeros: vec![],
    };
    let cparams: HashMap<String, Complex64> = params
        .iter()
        .map(|(k, v)| (k.clone(), Complex64::new(*v, 0.0)))
        .collect();
    let sub_at = |e: &Expr, s: f64| -> Complex64 {
        let mut b = cparams.clone();
        b.insert(t_var.to_string(), map.point(s));
        eval_c64(e, &b).unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    };
    let grid: Vec<f64> = (0..=GRID).map(|i| i as f64 / GRID as f64).collect();
    for probe in probes(s) {
        match probe {
            Probe::Zero(w, f, kind) => {
                let g = |s: f64| {
                    let v = f(sub_at(&w, s)).norm();
                    if v.is_finite() {
                        v
                    } else {
                        f64::MAX
                    }
                };
                let vals: Vec<f64> = grid.iter().map(|&s| g(s)).collect();
                let mut sorted = vals.clone();
                sorted.sort_by(|a, b| a.total_cmp(b));
                let typical = sorted[GRID / 2].clamp(1e-3, 1e3);
                for i in 0..GRID {
                    let prev = if i == 0 { vals[GRID - 1] } else { vals[i - 1] };
                    let next = vals[i + 1];
                    if vals[i] <= prev && vals[i] <= next {
                        let a = grid[i] - 1.0 / GRID as f64;
                        let b = grid[i] + 1.0 / GRID as f64;
                        let (sm, vm) = golden(g, a, b);
                        if vm < 1e-7 * typical {
                            set.insert(sm, kind);
                        }
                    }
                }
            }
            Probe::Cross(w, re, cond) => {
                let q = |s: f64| {
                    let z = sub_at(&w, s);
                    if re {
                        z.re
                    } else {
                        z.im
                    }
                };
                let vals: Vec<f64> = grid.iter().map(|&s| q(s)).collect();
                let scale = vals
                    .iter()
                    .filter(|v| v.is_finite())
                    .fold(0.0f64, |m, v| m.max(v.abs()));
                if scale < 1e-12 {
                    continue;
                }
                for i in 0..GRID {
                    let (va, vb) = (vals[i], vals[i + 1]);
                    if !(va.is_finite() && vb.is_finite()) || va.signum() == vb.signum() {
                        continue;
                    }
                    let (mut a, mut b) = (grid[i], grid[i + 1]);
                    for _ in 0..60 {
                        let m = 0.5 * (a + b);
                        if q(m).signum() == va.signum() {
                            a = m;
                        } else {
                            b = m;
                        }
                    }
                    let sm = 0.5 * (a + b);
                    let z = sub_at(&w, sm);
                    if z.is_finite() && cond(z) {
                        set.insert(sm, SingularKind::BranchCut);
                    }
                }
            }
        }
    }
    set.add_guard_zeros(guards, x_var, params);
    set
}

/// Zeros of a real function of x over one period, as fractions of the period.
fn real_zeros(g: &Expr, x_var: &str, period: f64, params: &HashMap<String, f64>) -> Vec<f64> {
    let eval = |x: f64| {
        let mut b = params.clone();
        b.insert(x_var.to_string(), x);
        eval_f64(g, &b).ok().filter(|v| v.is_finite())
    };
    let n = GRID;
    let xs: Vec<f64> = (0..=n).map(|i| period * i as f64 / n as f64).collect();
    let vals: Vec<Option<f64>> = xs.iter().map(|&x| eval(x)).collect();
    let mags: Vec<f64> = vals.iter().flatten().map(|v| v.abs()).collect();
    let scale = mags.iter().fold(0.0f64, |m, v| m.max(*v)).max(1e-300);
    let mut out = Vec::new();
    for i in 0..n {
        let Some(v) = vals[i] else {
            // not evaluable exactly on a grid point: treat as a zero of the guard
            out.push(xs[i] / period);
            continue;
        };
        if v == 0.0 {
            out.push(xs[i] / period);
            continue;
        }
        let prev = if i == 0 { vals[n - 1] } else { vals[i - 1] };
        if let (Some(p), Some(nx)) = (prev, vals[i + 1]) {
            if v.abs() <= p.abs() && v.abs() <= nx.abs() {
                let step = period / n as f64;
                let (xm, vm) = golden(
                    |x| eval(x).map_or(0.0, f64::abs),
                    xs[i] - step,
                    xs[i] + step,
                );
                if vm < 1e-9 * scale {
                    out.push(xm / period);
                }
            }
        }
    }
    out
}
