//! Catalog of closed-form Fourier identities, with grid verification against
//! partial sums and the exact structural operations on them.

mod catalog;
pub mod closed;
pub mod series;
mod special;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::odd_zeta::{PrecisionContext, ZetaError};
use crate::real::Real;

pub use catalog::{CatalogEntry, CATALOG};
pub use closed::{ClosedForm, Coef, Constant, ConstantValues, Extra, LogTerm, Radical, Residual, ResidualKind, UPoly};
pub use series::{Denom, SeriesTerm, Trig, TrigTerm};
pub use special::{special_value_checks, structural_checks, ExactCheck};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegistryError {
    #[error("unknown identity {0:?}")]
    UnknownId(String),
    #[error("{0}")]
    Parameter(String),
    #[error("x = {x} lies outside the validity interval {interval}")]
    OutsideInterval { x: f64, interval: String },
    #[error("x = {0} is a singular point")]
    SingularPoint(f64),
    #[error("{0} has no successor under termwise integration")]
    NoSuccessor(String),
    #[error("x0/c = {x0} outside [0, {limit})")]
    ShiftRange { x0: String, limit: String },
    #[error("{0} does not have a purely polynomial closed form")]
    NotPolynomial(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("numeric evaluation failed: {0}")]
    Numeric(String),
}

/// Interval in units of c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validity {
    pub lo: BigRational,
    pub hi: BigRational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Validity {
    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }

    /// Whether y = x/c lies in the interval, allowing a relative slack of 1e-12 at closed ends.
    pub fn contains(&self, y: f64) -> bool {
        let (lo, hi) = (self.lo_f64(), self.hi_f64());
        let eps = 1e-12 * (1.0 + lo.abs().max(hi.abs()));
        let above = if self.lo_closed { y >= lo - eps } else { y > lo };
        let below = if self.hi_closed { y <= hi + eps } else { y < hi };
        above && below
    }
}

impl std::fmt::Display for Validity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{} c, {} c{r}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityRecord {
    pub id: String,
    pub r: u32,
    /// shift x0/c, when the record is a shifted family
    pub x0: Option<BigRational>,
    /// c used when the caller does not pick one
    pub default_c: f64,
    pub series: SeriesTerm,
    pub closed: ClosedForm,
    pub interval: Validity,
    /// in units of c
    pub singular_points: Vec<BigRational>,
    /// documented partial-sum length
    pub terms: u64,
    /// documented tolerance
    pub tol: f64,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub r: u32,
    pub c: f64,
    #[serde(rename = "N")]
    pub terms: u64,
    pub tol: f64,
    pub max_error: f64,
    pub pass: bool,
    #[serde(skip)]
    pub grid: usize,
    #[serde(skip)]
    pub worst_x: f64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub const CSV_HEADER: &'static str = "id,r,c,N,tol,max_error,pass";

    pub fn to_csv(&self) -> String {
        format!("{},{},{},{},{:e},{:e},{}", self.id, self.r, self.c, self.terms, self.tol, self.max_error, self.pass)
    }
}

/// Grid margin around singular endpoints, in units of c at the default c.
const MARGIN: f64 = 0.1;

fn verify_ctx() -> PrecisionContext {
    PrecisionContext::for_target(1e-18)
}

pub fn catalog_entry(id: &str) -> Result<&'static CatalogEntry, RegistryError> {
    CATALOG.iter().find(|e| e.id == id).ok_or_else(|| RegistryError::UnknownId(id.into()))
}

/// Every catalog identity at the first r of its sweep.
pub fn list_identities() -> Vec<IdentityRecord> {
    CATALOG.iter().map(|e| e.build(e.sweep[0], None).expect("sweep values are in range")).collect()
}

pub fn get_identity(id: &str, r: u32, x0: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    catalog_entry(id)?.build(r, x0)
}

impl IdentityRecord {
    fn y_of(&self, c: f64, x: f64) -> f64 {
        x / c
    }

    fn check_point(&self, y: f64, x: f64) -> Result<(), RegistryError> {
        if !self.interval.contains(y) {
            return Err(RegistryError::OutsideInterval { x, interval: self.interval.to_string() });
        }
        for s in &self.singular_points {
            let sv = s.to_f64().unwrap_or(f64::NAN);
            let at_closed_end = (self.interval.lo_closed && *s == self.interval.lo)
                || (self.interval.hi_closed && *s == self.interval.hi);
            if (y - sv).abs() < 1e-14 && !at_closed_end {
                return Err(RegistryError::SingularPoint(x));
            }
        }
        Ok(())
    }

    /// Closed form at x with the validity check.
    pub fn closed_form_eval(&self, c: f64, x: f64, ctx: &PrecisionContext) -> Result<Real, RegistryError> {
        let y = self.y_of(c, x);
        self.check_point(y, x)?;
        self.closed_form_unchecked(y, &mut ConstantValues::new(*ctx), ctx.target).map(|v| v.0)
    }

    /// Closed form at x/c = y, anywhere it can be evaluated; also returns the numeric error bound.
    pub fn closed_form_unchecked(
        &self,
        y: f64,
        consts: &mut ConstantValues,
        target: f64,
    ) -> Result<(Real, f64), RegistryError> {
        self.closed.eval(y, consts, target).map_err(RegistryError::Numeric)
    }

    /// First `terms` terms of the series at x.
    pub fn partial_sum_eval(&self, c: f64, x: f64, terms: u64) -> f64 {
        self.series.partial_sum(self.y_of(c, x), terms)
    }

    /// Grid points in units of c: cell midpoints of the interval, shrunk by the
    /// margin at singular ends, then the closed endpoints themselves.
    pub fn grid(&self, points: usize) -> Vec<f64> {
        let margin = MARGIN / self.default_c;
        let is_singular = |e: &BigRational| self.singular_points.iter().any(|s| s == e);
        let lo = self.interval.lo_f64() + if is_singular(&self.interval.lo) { margin } else { 0.0 };
        let hi = self.interval.hi_f64() - if is_singular(&self.interval.hi) { margin } else { 0.0 };
        let n = points.max(1);
        let h = (hi - lo) / n as f64;
        let mut g: Vec<f64> = (0..n).map(|i| lo + (i as f64 + 0.5) * h).collect();
        if self.interval.lo_closed {
            g.push(self.interval.lo_f64());
        }
        if self.interval.hi_closed {
            g.push(self.interval.hi_f64());
        }
        g
    }

    pub fn verify(&self, c: f64, points: usize, terms: u64, tol: f64) -> VerificationReport {
        let ctx = verify_ctx();
        let mut consts = ConstantValues::new(ctx);
        let mut max_error = 0.0f64;
        let mut worst = f64::NAN;
        for y in self.grid(points) {
            let err = match self.closed_form_unchecked(y, &mut consts, tol * 1e-3) {
                Ok((v, _)) => (v.to_f64() - self.series.partial_sum(y, terms)).abs(),
                Err(_) => f64::INFINITY,
            };
            if !(err <= max_error) {
                max_error = err;
                worst = y * c;
            }
        }
        VerificationReport {
            id: self.id.clone(),
            r: self.r,
            c,
            terms,
            tol,
            max_error,
            pass: max_error <= tol,
            grid: points,
            worst_x: worst,
        }
    }

    /// verify at the documented (N, tol) on a 50-point grid.
    pub fn verify_documented(&self) -> VerificationReport {
        self.verify(self.default_c, 50, self.terms, self.tol)
    }

    /// |closed - partial sum| at both interval ends, with the closedness flag.
    pub fn endpoint_errors(&self, terms: u64) -> Vec<(f64, bool, f64)> {
        let mut consts = ConstantValues::new(verify_ctx());
        [(self.interval.lo_f64(), self.interval.lo_closed), (self.interval.hi_f64(), self.interval.hi_closed)]
            .into_iter()
            .map(|(y, closed)| {
                let err = match self.closed_form_unchecked(y, &mut consts, 1e-15) {
                    Ok((v, _)) => (v.to_f64() - self.series.partial_sum(y, terms)).abs(),
                    Err(_) => f64::INFINITY,
                };
                (y, closed, err)
            })
            .collect()
    }
}

pub fn closed_form_eval(
    id: &str,
    r: u32,
    x0: Option<&BigRational>,
    c: f64,
    x: f64,
    ctx: &PrecisionContext,
) -> Result<Real, RegistryError> {
    get_identity(id, r, x0)?.closed_form_eval(c, x, ctx)
}

pub fn partial_sum_eval(id: &str, r: u32, x0: Option<&BigRational>, c: f64, x: f64, terms: u64) -> Result<f64, RegistryError> {
    Ok(get_identity(id, r, x0)?.partial_sum_eval(c, x, terms))
}

/// Every catalog identity at every r of its sweep, in catalog order.
pub fn verify_all() -> Vec<VerificationReport> {
    let jobs: Vec<(&CatalogEntry, u32)> = CATALOG.iter().flat_map(|e| e.sweep.iter().map(move |&r| (e, r))).collect();
    jobs.par_iter()
        .map(|(e, r)| e.build(*r, None).expect("sweep values are in range").verify_documented())
        .collect()
}

fn successor(id: &str) -> Option<&'static str> {
    match id {
        "thm11-cos" => Some("thm11-sin"),
        "thm18-cos" => Some("thm18-sin"),
        _ => None,
    }
}

/// Integrate both sides termwise from 0: cos(m u)/m^s becomes sin(m u)/m^(s+1)
/// and the polynomial is integrated exactly in u.
pub fn corollary2_integrate(rec: &IdentityRecord) -> Result<IdentityRecord, RegistryError> {
    let next = successor(&rec.id).ok_or_else(|| RegistryError::NoSuccessor(rec.id.clone()))?;
    if !rec.closed.is_polynomial() {
        return Err(RegistryError::NotPolynomial(rec.id.clone()));
    }
    let SeriesTerm::Trig(t) = &rec.series else {
        return Err(RegistryError::NoSuccessor(rec.id.clone()));
    };
    let Denom::Power(s) = t.denom else {
        return Err(RegistryError::NoSuccessor(rec.id.clone()));
    };
    if t.trig != Trig::Cos {
        return Err(RegistryError::NoSuccessor(rec.id.clone()));
    }
    let mut term = t.clone();
    term.trig = Trig::Sin;
    term.denom = Denom::Power(s + 1);
    let mut interval = rec.interval.clone();
    interval.lo_closed = true;
    interval.hi_closed = true;
    let template = get_identity(next, rec.r, None)?;
    Ok(IdentityRecord {
        id: next.into(),
        series: SeriesTerm::Trig(term),
        closed: ClosedForm { poly: rec.closed.poly.antiderivative(), ..rec.closed.clone() },
        interval,
        terms: template.terms,
        tol: template.tol,
        description: template.description,
        ..rec.clone()
    })
}

/// Multiply every term by cos(m pi x0/c); the closed form becomes the average of
/// its values at x - x0 and x + x0 and the interval shrinks by x0 on each side.
pub fn theorem23_shift(rec: &IdentityRecord, x0: &BigRational) -> Result<IdentityRecord, RegistryError> {
    let width = &rec.interval.hi - &rec.interval.lo;
    let limit = &width / BigRational::from_integer(2.into());
    if x0 < &BigRational::zero() || x0 >= &limit {
        return Err(RegistryError::ShiftRange { x0: x0.to_string(), limit: limit.to_string() });
    }
    if x0.is_zero() {
        return Ok(rec.clone());
    }
    if !rec.closed.is_polynomial() {
        return Err(RegistryError::NotPolynomial(rec.id.clone()));
    }
    let SeriesTerm::Trig(t) = &rec.series else {
        return Err(RegistryError::NotPolynomial(rec.id.clone()));
    };
    let mut term = t.clone();
    term.shifts.push(x0.clone());
    let interval = Validity {
        lo: &rec.interval.lo + x0,
        hi: &rec.interval.hi - x0,
        lo_closed: rec.interval.lo_closed,
        hi_closed: rec.interval.hi_closed,
    };
    let mut singular: Vec<BigRational> = Vec::new();
    for s in &rec.singular_points {
        for p in [s - x0, s + x0] {
            if !singular.contains(&p) {
                singular.push(p);
            }
        }
    }
    singular.sort();
    let mut out = IdentityRecord {
        id: format!("{}@x0={}", rec.id, x0),
        x0: Some(x0.clone()),
        series: SeriesTerm::Trig(term),
        closed: ClosedForm { poly: rec.closed.poly.shift(x0), ..rec.closed.clone() },
        interval,
        singular_points: singular,
        ..rec.clone()
    };
    out.description = format!("{} shifted by x0 = {} c", rec.description, x0);
    Ok(out)
}

#[cfg(test)]
mod tests;
