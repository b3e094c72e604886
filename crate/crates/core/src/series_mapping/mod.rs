//! Closed forms of trigonometric series from the sum function of a power series.
//!
//! For S(t) = sum a_n t^n the cosine and sine series sum a_n cos(n pi x/c),
//! sum a_n sin(n pi x/c) are the operator images of S(e^z) at z = 0, and the
//! cos(nx) cos^n x family is the image of S at X = cos^2 x, Y = sin x cos x.

mod integral;
mod singular;

use std::collections::HashMap;

use thiserror::Error;

use crate::abstract_ops::{apply_operator, simplify_guarded, Guard, OperatorError, SimplifyError};
use crate::expr::{self, eval_f64, EvalError, Expr};

pub use integral::{integral_step, poly_coeffs, recognize_constant, IntegralStep};
pub use singular::{
    detect_singularities, rationalize, BoundaryMap, Endpoint, Interval, SingularKind, SingularSet,
    Singularity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Cosine,
    Sine,
    CosCospow,
    SinCospow,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Cosine => "cosine",
            SeriesKind::Sine => "sine",
            SeriesKind::CosCospow => "cos-cospow",
            SeriesKind::SinCospow => "sin-cospow",
        }
    }

    pub fn from_name(s: &str) -> Option<SeriesKind> {
        match s {
            "cosine" | "cos" => Some(SeriesKind::Cosine),
            "sine" | "sin" => Some(SeriesKind::Sine),
            "cos-cospow" => Some(SeriesKind::CosCospow),
            "sin-cospow" => Some(SeriesKind::SinCospow),
            _ => None,
        }
    }

    /// Term n of the series given the power-series coefficient a_n.
    pub fn term(self, n: u64, x: f64, c: f64) -> f64 {
        let nf = n as f64;
        match self {
            SeriesKind::Cosine => (nf * std::f64::consts::PI * x / c).cos(),
            SeriesKind::Sine => (nf * std::f64::consts::PI * x / c).sin(),
            SeriesKind::CosCospow => (nf * x).cos() * x.cos().powi(n as i32),
            SeriesKind::SinCospow => (nf * x).sin() * x.cos().powi(n as i32),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MappingError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Simplify(#[from] SimplifyError),
    #[error("no singularity-free neighbourhood of 0+ (interval {0}, {1})")]
    NoNeighbourhood(f64, f64),
    #[error("S is not integrable on [0, 1]: {0}")]
    NotIntegrable(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("quadrature failed: {0}")]
    Quadrature(String),
}

#[derive(Clone, Debug)]
pub struct TrigSeriesResult {
    pub kind: SeriesKind,
    pub var: String,
    pub closed_form: Expr,
    /// Operator image before simplification.
    pub raw: Expr,
    pub guards: Vec<Guard>,
    pub singular: SingularSet,
    pub validity: Interval,
}

impl TrigSeriesResult {
    pub fn eval(&self, x: f64, params: &HashMap<String, f64>) -> Result<f64, EvalError> {
        let mut b = params.clone();
        b.insert(self.var.clone(), x);
        eval_f64(&self.closed_form, &b)
    }
}

/// Both members of a mapped pair.
#[derive(Clone, Debug)]
pub struct SeriesPair {
    pub cos: TrigSeriesResult,
    pub sin: TrigSeriesResult,
}

impl SeriesPair {
    pub fn get(&self, kind: SeriesKind) -> &TrigSeriesResult {
        match kind {
            SeriesKind::Cosine | SeriesKind::CosCospow => &self.cos,
            SeriesKind::Sine | SeriesKind::SinCospow => &self.sin,
        }
    }

    pub fn into_kind(self, kind: SeriesKind) -> TrigSeriesResult {
        match kind {
            SeriesKind::Cosine | SeriesKind::CosCospow => self.cos,
            SeriesKind::Sine | SeriesKind::SinCospow => self.sin,
        }
    }
}

pub(crate) const Z_VAR: &str = "_z";

/// Default numeric values for the symbols of `c` (each bound to 1).
pub fn unit_params(e: &Expr) -> HashMap<String, f64> {
    e.free_symbols().into_iter().map(|s| (s, 1.0)).collect()
}

struct Setup<'a> {
    s: &'a Expr,
    t_var: &'a str,
    x_var: &'a str,
    map: BoundaryMap,
    period: Expr,
    params: HashMap<String, f64>,
    kinds: (SeriesKind, SeriesKind),
}

fn finish(setup: Setup, cos_raw: Expr, sin_raw: Expr) -> Result<SeriesPair, MappingError> {
    let period_value = eval_f64(&setup.period, &setup.params)?;
    let base = detect_singularities(
        setup.s,
        setup.t_var,
        setup.map,
        &setup.period,
        period_value,
        &[],
        setup.x_var,
        &setup.params,
    );
    let validity = base.validity_around_zero();
    let (lo, hi) = match (&validity.lo, &validity.hi) {
        (None, None) => (-period_value, period_value),
        _ => (validity.lo_value(), validity.hi_value()),
    };
    if !(hi > lo) {
        return Err(MappingError::NoNeighbourhood(lo, hi));
    }
    let one = |raw: Expr, kind: SeriesKind| -> Result<TrigSeriesResult, MappingError> {
        let g = simplify_guarded(&raw, setup.x_var, lo, hi, &setup.params)?;
        let mut singular = base.clone();
        singular.add_guard_zeros(&g.guards, setup.x_var, &setup.params);
        Ok(TrigSeriesResult {
            kind,
            var: setup.x_var.to_string(),
            closed_form: g.expr,
            raw,
            guards: g.guards,
            singular,
            validity: validity.clone(),
        })
    };
    Ok(SeriesPair {
        cos: one(cos_raw, setup.kinds.0)?,
        sin: one(sin_raw, setup.kinds.1)?,
    })
}

/// Cosine and sine series sum a_n cos(n pi x/c), sum a_n sin(n pi x/c) for
/// S(t) = sum a_n t^n written in `t_var`.
pub fn map_fourier(
    s: &Expr,
    t_var: &str,
    x_var: &str,
    c: &Expr,
) -> Result<SeriesPair, MappingError> {
    let sz = s.substitute(
        t_var,
        &expr::apply(crate::expr::Func::Exp, &Expr::sym(Z_VAR)),
    );
    let shift = expr::mul(&Expr::pi(), &expr::div(&Expr::sym(x_var), c));
    let pair = apply_operator(&sz, Z_VAR, &Expr::zero(), &shift)?;
    let mut params = unit_params(c);
    for p in s.free_symbols() {
        if p != t_var {
            params.entry(p).or_insert(1.0);
        }
    }
    let setup = Setup {
        s,
        t_var,
        x_var,
        map: BoundaryMap::Fourier,
        period: expr::mul(&Expr::int(2), c),
        params,
        kinds: (SeriesKind::Cosine, SeriesKind::Sine),
    };
    finish(setup, pair.cos_part, pair.sin_part)
}

/// sum a_n cos(nx) cos^n x and sum a_n sin(nx) cos^n x.
pub fn map_cospow(s: &Expr, t_var: &str, x_var: &str) -> Result<SeriesPair, MappingError> {
    let x = Expr::sym(x_var);
    let cx = expr::apply(crate::expr::Func::Cos, &x);
    let sx = expr::apply(crate::expr::Func::Sin, &x);
    let pair = apply_operator(s, t_var, &expr::pow(&cx, 2), &expr::mul(&sx, &cx))?;
    let params = s
        .free_symbols()
        .into_iter()
        .filter(|p| p != t_var)
        .map(|p| (p, 1.0))
        .collect();
    let setup = Setup {
        s,
        t_var,
        x_var,
        map: BoundaryMap::CosPow,
        period: Expr::pi(),
        params,
        kinds: (SeriesKind::CosCospow, SeriesKind::SinCospow),
    };
    finish(setup, pair.cos_part, pair.sin_part)
}

/// One member of the Fourier pair.
pub fn map_fourier_kind(
    s: &Expr,
    t_var: &str,
    x_var: &str,
    c: &Expr,
    kind: SeriesKind,
) -> Result<TrigSeriesResult, MappingError> {
    match kind {
        SeriesKind::Cosine | SeriesKind::Sine => {
            Ok(map_fourier(s, t_var, x_var, c)?.into_kind(kind))
        }
        _ => Ok(map_cospow(s, t_var, x_var)?.into_kind(kind)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn pts(r: &TrigSeriesResult, lo: f64, hi: f64) -> Vec<f64> {
        r.singular
            .points_in(lo, hi)
            .into_iter()
            .map(|p| p.1)
            .collect()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    fn c_params(c: f64) -> HashMap<String, f64> {
        HashMap::from([("c".to_string(), c)])
    }

    #[test]
    fn lemma4_log_one_minus_t() {
        let c = Expr::sym("c");
        let r = map_fourier(&parse("-ln(1-t)").unwrap(), "t", "x", &c)
            .unwrap()
            .sin;
        assert!(
            close(&pts(&r, 0.0, 2.0), &[0.0, 2.0]),
            "{:?}",
            pts(&r, 0.0, 2.0)
        );
        assert!(
            (r.validity.lo_value() - 0.0).abs() < 1e-12
                && (r.validity.hi_value() - 2.0).abs() < 1e-12
        );
        assert_eq!(r.validity.hi.as_ref().unwrap().expr.to_string(), "2*c");
        let p = c_params(1.7);
        for i in 1..40 {
            let x = 2.0 * 1.7 * i as f64 / 40.0;
            let want = std::f64::consts::FRAC_PI_2 - std::f64::consts::PI * x / (2.0 * 1.7);
            assert!((r.eval(x, &p).unwrap() - want).abs() < 1e-12);
        }
        assert!(r.closed_form.size() < r.raw.size());
    }

    #[test]
    fn lemma4_log_one_plus_t() {
        let c = Expr::sym("c");
        let r = map_fourier(&parse("ln(1+t)").unwrap(), "t", "x", &c)
            .unwrap()
            .sin;
        assert!(
            (r.validity.lo_value() + 1.0).abs() < 1e-12
                && (r.validity.hi_value() - 1.0).abs() < 1e-12
        );
        let p = c_params(1.0);
        for x in [-0.9, -0.3, 0.2, 0.8] {
            assert!((r.eval(x, &p).unwrap() - std::f64::consts::PI * x / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn lemma4_arctan() {
        let c = Expr::sym("c");
        let r = map_fourier(&parse("arctan(t)").unwrap(), "t", "x", &c)
            .unwrap()
            .cos;
        assert!(
            (r.validity.lo_value() + 0.5).abs() < 1e-12
                && (r.validity.hi_value() - 0.5).abs() < 1e-12
        );
        for x in [-0.45, -0.1, 0.0, 0.3] {
            assert!(
                (r.eval(x, &c_params(1.0)).unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-12
            );
        }
    }

    #[test]
    fn single_term() {
        let c = Expr::sym("c");
        let r = map_fourier(&parse("t").unwrap(), "t", "x", &c).unwrap().cos;
        assert!(r.singular.points.is_empty());
        assert!(r.validity.lo.is_none() && r.validity.hi.is_none());
        assert_eq!(r.closed_form.to_string(), "cos(pi*(x/c))");
        assert!(
            (r.eval(0.4, &c_params(2.0)).unwrap() - (std::f64::consts::PI * 0.2).cos()).abs()
                < 1e-15
        );
    }

    #[test]
    fn example1_cospow() {
        let r = map_cospow(&parse("-ln(1-t)").unwrap(), "t", "x")
            .unwrap()
            .sin;
        let pi = std::f64::consts::PI;
        assert!(close(&pts(&r, 0.0, pi), &[0.0, pi]));
        for x in [0.1, 0.7, 1.5, 2.9] {
            assert!((r.eval(x, &HashMap::new()).unwrap() - (pi / 2.0 - x)).abs() < 1e-12);
        }
    }

    #[test]
    fn cospow_single_term() {
        let p = map_cospow(&parse("t").unwrap(), "t", "x").unwrap();
        for x in [0.3, 1.2] {
            let b = HashMap::new();
            assert!((p.cos.eval(x, &b).unwrap() - x.cos() * x.cos()).abs() < 1e-15);
            assert!((p.sin.eval(x, &b).unwrap() - x.sin() * x.cos()).abs() < 1e-15);
        }
    }

    pub(crate) const EXAMPLE2_S: &str =
        "(t/12 - 1/(12*t))*ln(t^2 - t + 1) - (t/6 - 1/(6*t))*ln(1 + t) \
        + (t/4 + 1/(4*t))*(2/sqrt(3))*(arctan((2*t - 1)/sqrt(3)) + pi/6) - 1/2";

    #[test]
    fn example2_fourier() {
        let pi = std::f64::consts::PI;
        let r = map_fourier(&parse(EXAMPLE2_S).unwrap(), "t", "x", &Expr::pi())
            .unwrap()
            .cos;
        assert!(
            close(&pts(&r, -pi, pi), &[-pi, -pi / 3.0, pi / 3.0, pi]),
            "{:?} {:?}",
            r.singular.points,
            r.guards
        );
        assert!(
            (r.validity.lo_value() + pi / 3.0).abs() < 1e-12
                && (r.validity.hi_value() - pi / 3.0).abs() < 1e-12
        );
        for x in [-1.0f64, -0.5, 0.1, 0.9] {
            let want = 3f64.sqrt() * pi / 9.0 * x.cos() - 0.5;
            assert!((r.eval(x, &HashMap::new()).unwrap() - want).abs() < 1e-12);
        }
    }

    #[test]
    fn example2_through_derivative() {
        let pi = std::f64::consts::PI;
        let s = parse(EXAMPLE2_S).unwrap().derivative("t");
        let st = integral_step(&s, "t", "x", &Expr::pi()).unwrap();
        assert!((st.validity.hi_value() - pi / 3.0).abs() < 1e-12);
        for x in [-0.8f64, 0.3, 1.0] {
            let want = 3f64.sqrt() * pi / 9.0 * x.cos() - 0.5;
            assert!(
                (st.eval_cosine(x, &HashMap::new()).unwrap() - want).abs() < 1e-9,
                "x={x}"
            );
        }
    }
}
