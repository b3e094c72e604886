//! The built-in identities.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::closed::{ClosedForm, Coef, Constant, Extra, LogTerm, Radical, Residual, ResidualKind, UPoly};
use super::series::{Denom, SeriesTerm, Trig, TrigTerm};
use super::{theorem23_shift, IdentityRecord, RegistryError, Validity};
use crate::exact_values::{
    beta_odd, cal_d, eta_even, factorial, frak_d, harmonic, lambda_even, zeta_even, PiPolynomial,
};

type Builder = fn(u32, Option<&BigRational>) -> Result<IdentityRecord, RegistryError>;

pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub r_min: u32,
    pub r_max: Option<u32>,
    /// r values exercised by the full sweep
    pub sweep: &'static [u32],
    pub takes_x0: bool,
    build: Builder,
}

impl CatalogEntry {
    pub fn build(&self, r: u32, x0: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
        if r < self.r_min || self.r_max.is_some_and(|m| r > m) {
            return Err(RegistryError::Parameter(format!(
                "{}: r = {r} outside [{}, {}]",
                self.id,
                self.r_min,
                self.r_max.map(|m| m.to_string()).unwrap_or_else(|| "inf".into())
            )));
        }
        if x0.is_some() && !self.takes_x0 {
            return Err(RegistryError::Parameter(format!("{} takes no x0", self.id)));
        }
        (self.build)(r, x0)
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn inv_fact(n: u32) -> BigRational {
    BigRational::new(BigInt::one(), factorial(n))
}

fn sgn(k: u32) -> BigRational {
    if k % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn pi_coef(p: PiPolynomial) -> Coef {
    Coef::pi_poly(p)
}

fn rat(v: BigRational) -> Coef {
    Coef::rational(v)
}

/// a * pi^k as a coefficient
fn pi_mono(a: BigRational, k: u32) -> Coef {
    Coef::pi_poly(PiPolynomial::monomial(a, k))
}

/// eta(2m+1) as a coefficient
fn eta_odd_coef(m: u32) -> Coef {
    if m == 0 {
        return Coef::of(Constant::Ln2, PiPolynomial::constant(BigRational::one()));
    }
    let f = BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(4).pow(m));
    Coef::of(Constant::Zeta(2 * m + 1), PiPolynomial::constant(f))
}

fn zeta_odd_coef(m: u32) -> Coef {
    Coef::of(Constant::Zeta(2 * m + 1), PiPolynomial::constant(BigRational::one()))
}

fn cos_term(start: u64, mul: u64, add: i64, signs: &[i8], s: u32) -> TrigTerm {
    TrigTerm::new(start, mul, add, signs, Denom::Power(s), Trig::Cos)
}

fn sin_term(start: u64, mul: u64, add: i64, signs: &[i8], s: u32) -> TrigTerm {
    TrigTerm::new(start, mul, add, signs, Denom::Power(s), Trig::Sin)
}

fn closed_iv(lo: BigRational, hi: BigRational) -> Validity {
    Validity { lo, hi, lo_closed: true, hi_closed: true }
}

fn open_iv(lo: BigRational, hi: BigRational) -> Validity {
    Validity { lo, hi, lo_closed: false, hi_closed: false }
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&n| q(n, 1)).collect()
}

/// Documented partial-sum length and tolerance for a power-law series.
fn documented(t: &TrigTerm) -> (u64, f64) {
    let s = match t.denom {
        Denom::Power(s) => s,
        Denom::ThirdsProduct => 2,
    };
    let terms = match s {
        0 | 1 => return (100_000, 1e-3),
        2 => 100_000,
        3 => 20_000,
        _ => 10_000,
    };
    let tail = t.abs_tail(terms);
    (terms, (2.0 * tail).max(1e-10))
}

fn record(
    id: &str,
    r: u32,
    term: TrigTerm,
    closed: ClosedForm,
    interval: Validity,
    singular: Vec<BigRational>,
    description: &str,
) -> IdentityRecord {
    let (terms, tol) = documented(&term);
    IdentityRecord {
        id: id.into(),
        r,
        x0: None,
        default_c: 1.0,
        series: SeriesTerm::Trig(term),
        closed,
        interval,
        singular_points: singular,
        terms,
        tol,
        description: description.into(),
    }
}

/// Closed for r >= 1, open for r = 0.
fn endpoint_iv(lo: BigRational, hi: BigRational, r: u32) -> Validity {
    if r >= 1 {
        closed_iv(lo, hi)
    } else {
        open_iv(lo, hi)
    }
}

pub(super) fn thm11_cos_poly(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 0..r {
        let z = zeta_even(r - k).expect("r - k >= 1");
        p.add_term(2 * k as usize, &pi_coef(z.scale(&(sgn(k) * inv_fact(2 * k)))));
    }
    let s = sgn(r);
    p.add_term(2 * r as usize - 1, &pi_mono(&s * q(1, 2) * inv_fact(2 * r - 1), 1));
    p.add_term(2 * r as usize, &rat(-&s * q(1, 2) * inv_fact(2 * r)));
    p
}

pub(super) fn thm11_sin_poly(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 1..=r {
        let z = zeta_even(r + 1 - k).expect("r + 1 - k >= 1");
        p.add_term(2 * k as usize - 1, &pi_coef(z.scale(&(sgn(k - 1) * inv_fact(2 * k - 1)))));
    }
    let s = sgn(r);
    p.add_term(2 * r as usize, &pi_mono(&s * q(1, 2) * inv_fact(2 * r), 1));
    p.add_term(2 * r as usize + 1, &rat(-&s * q(1, 2) * inv_fact(2 * r + 1)));
    p
}

fn thm11_cos(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "thm11-cos",
        r,
        cos_term(1, 1, 0, &[1], 2 * r),
        ClosedForm::polynomial(thm11_cos_poly(r)),
        endpoint_iv(q(0, 1), q(2, 1), r),
        ints(&[0, 2]),
        "sum cos(n u)/n^2r, polynomial in u on [0, 2c]",
    ))
}

fn thm11_sin(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "thm11-sin",
        r,
        sin_term(1, 1, 0, &[1], 2 * r + 1),
        ClosedForm::polynomial(thm11_sin_poly(r)),
        endpoint_iv(q(0, 1), q(2, 1), r),
        ints(&[0, 2]),
        "sum sin(n u)/n^(2r+1), polynomial in u on [0, 2c]",
    ))
}

/// Leading terms shared by the two zeta(2r+1) cosine forms.
fn odd_zeta_head(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 0..r {
        p.add_term(2 * k as usize, &zeta_odd_coef(r - k).scale(&(sgn(k) * inv_fact(2 * k))));
    }
    p
}

fn thm14(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let closed = ClosedForm {
        extra: Some(Extra::LogSinIntegral { m: 2 * r, sign: if r % 2 == 1 { 1 } else { -1 } }),
        ..ClosedForm::polynomial(odd_zeta_head(r))
    };
    let mut rec = record(
        "thm14",
        r,
        cos_term(1, 1, 0, &[1], 2 * r + 1),
        closed,
        closed_iv(q(0, 1), q(2, 1)),
        ints(&[0, 2]),
        "sum cos(n u)/n^(2r+1) through the 2r-fold integral of ln(2 sin(u/2))",
    );
    rec.tol = rec.tol.max(1e-8);
    Ok(rec)
}

fn thm16(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let mut poly = odd_zeta_head(r);
    let h = harmonic(2 * r).expect("2r >= 1");
    poly.add_term(2 * r as usize, &rat(sgn(r) * h * inv_fact(2 * r)));
    let closed = ClosedForm {
        log: Some(LogTerm { coef: sgn(r + 1) * inv_fact(2 * r), power: 2 * r }),
        residual: Some(Residual { r, kind: ResidualKind::HalfPeriod, sign: if r % 2 == 0 { 1 } else { -1 } }),
        ..ClosedForm::polynomial(poly)
    };
    let mut rec = record(
        "thm16",
        r,
        cos_term(1, 1, 0, &[1], 2 * r + 1),
        closed,
        closed_iv(q(0, 1), q(2, 1)),
        ints(&[0, 2]),
        "sum cos(n u)/n^(2r+1) with a log term and a zeta(2k) residual series on [0, 2c]",
    );
    rec.terms = 10_000;
    rec.tol = 1e-5;
    Ok(rec)
}

pub(super) fn thm18_cos_poly(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 0..r {
        let e = eta_even(r - k).expect("r - k >= 1");
        p.add_term(2 * k as usize, &pi_coef(e.scale(&(sgn(k) * inv_fact(2 * k)))));
    }
    p.add_term(2 * r as usize, &rat(sgn(r) * q(1, 2) * inv_fact(2 * r)));
    p
}

pub(super) fn thm18_sin_poly(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 1..=r {
        let e = eta_even(r + 1 - k).expect("r + 1 - k >= 1");
        p.add_term(2 * k as usize - 1, &pi_coef(e.scale(&(sgn(k - 1) * inv_fact(2 * k - 1)))));
    }
    p.add_term(2 * r as usize + 1, &rat(sgn(r) * q(1, 2) * inv_fact(2 * r + 1)));
    p
}

fn thm18_cos(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "thm18-cos",
        r,
        cos_term(1, 1, 0, &[1, -1], 2 * r),
        ClosedForm::polynomial(thm18_cos_poly(r)),
        closed_iv(q(-1, 1), q(1, 1)),
        ints(&[-1, 1]),
        "sum (-1)^(n-1) cos(n u)/n^2r on [-c, c]",
    ))
}

fn thm18_sin(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "thm18-sin",
        r,
        sin_term(1, 1, 0, &[1, -1], 2 * r + 1),
        ClosedForm::polynomial(thm18_sin_poly(r)),
        closed_iv(q(-1, 1), q(1, 1)),
        ints(&[-1, 1]),
        "sum (-1)^(n-1) sin(n u)/n^(2r+1) on [-c, c]",
    ))
}

fn thm21(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let mut poly = UPoly::zero();
    for k in 0..=r {
        poly.add_term(2 * k as usize, &eta_odd_coef(r - k).scale(&(sgn(k) * inv_fact(2 * k))));
    }
    let closed = ClosedForm {
        residual: Some(Residual { r, kind: ResidualKind::EtaOdd, sign: if r % 2 == 1 { 1 } else { -1 } }),
        ..ClosedForm::polynomial(poly)
    };
    Ok(record(
        "thm21-eta-odd",
        r,
        cos_term(1, 1, 0, &[1, -1], 2 * r + 1),
        closed,
        closed_iv(q(-1, 1), q(1, 1)),
        ints(&[-1, 1]),
        "sum (-1)^(n-1) cos(n u)/n^(2r+1) with a (4^k - 1) B*_k residual series on [-c, c]",
    ))
}

pub(super) fn cor5_poly(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 0..r {
        let b = beta_odd(r - k).expect("beta index");
        p.add_term(2 * k as usize, &pi_coef(b.scale(&(sgn(k) * inv_fact(2 * k)))));
    }
    p.add_term(2 * r as usize, &pi_mono(sgn(r) * q(1, 4) * inv_fact(2 * r), 1));
    p
}

fn cor5(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "cor5-beta",
        r,
        cos_term(0, 2, 1, &[1, -1], 2 * r + 1),
        ClosedForm::polynomial(cor5_poly(r)),
        closed_iv(q(-1, 2), q(1, 2)),
        vec![q(-1, 2), q(1, 2)],
        "sum_{n>=0} (-1)^n cos((2n+1) u)/(2n+1)^(2r+1) on [-c/2, c/2]",
    ))
}

pub(super) fn cor6_poly(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 0..r {
        let l = lambda_even(r - k).expect("r - k >= 1");
        p.add_term(2 * k as usize, &pi_coef(l.scale(&(sgn(k) * inv_fact(2 * k)))));
    }
    p.add_term(2 * r as usize - 1, &pi_mono(sgn(r) * q(1, 4) * inv_fact(2 * r - 1), 1));
    p
}

fn cor6(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "cor6-lambda",
        r,
        cos_term(1, 2, -1, &[1], 2 * r),
        ClosedForm::polynomial(cor6_poly(r)),
        closed_iv(q(0, 1), q(1, 1)),
        ints(&[0, 1]),
        "sum cos((2n-1) u)/(2n-1)^2r on [0, c]",
    ))
}

fn eq56(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let quarter = q(1, 4);
    let mut c = Coef::zero();
    for k in 0..r {
        let l = lambda_even(r - k).expect("r - k >= 1");
        let t = l.mul(&PiPolynomial::monomial(quarter.pow(2 * k as i32), 2 * k)).scale(&(sgn(k) * inv_fact(2 * k)));
        c = c.add(&pi_coef(t));
    }
    c = c.add(&pi_mono(sgn(r) * inv_fact(2 * r - 1) * quarter.pow(2 * r as i32), 2 * r));
    let closed = ClosedForm { scale: Radical::Sqrt2, ..ClosedForm::polynomial(UPoly::from_coeffs(vec![c])) };
    Ok(record(
        "eq56",
        r,
        TrigTerm::new(1, 2, -1, &[1, -1, -1, 1], Denom::Power(2 * r), Trig::One),
        closed,
        closed_iv(q(0, 1), q(1, 1)),
        Vec::new(),
        "sum (-1)^[n/2]/(2n-1)^2r as sqrt 2 times a polynomial in pi and lambda values",
    ))
}

fn eq59(r: u32, x0: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let x0 = x0.cloned().unwrap_or_else(|| q(1, 4));
    let mut rec = theorem23_shift(&cor6(r, None)?, &x0)?;
    rec.id = "eq59".into();
    rec.description = "shifted lambda family: sum cos((2n-1) pi x0/c) cos((2n-1) u)/(2n-1)^2r".into();
    Ok(rec)
}

fn eq69(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let poly = UPoly::from_coeffs(vec![pi_mono(q(5, 768), 4), pi_mono(q(1, 128), 3), pi_mono(q(-1, 16), 2), pi_mono(q(1, 24), 1)]);
    Ok(record(
        "eq69",
        r,
        cos_term(1, 2, -1, &[1, -1, -1, 1], 4).with_scale(Radical::InvSqrt2),
        ClosedForm::polynomial(poly),
        closed_iv(q(1, 4), q(3, 4)),
        vec![q(1, 4), q(3, 4)],
        "(1/sqrt 2) sum (-1)^[n/2] cos((2n-1) u)/(2n-1)^4 as a cubic on [c/4, 3c/4]",
    ))
}

fn eq70(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let poly = UPoly::from_coeffs(vec![pi_mono(q(11, 1536), 4), Coef::zero(), pi_mono(q(-1, 32), 2)]);
    Ok(record(
        "eq70",
        r,
        cos_term(1, 2, -1, &[1, -1, -1, 1], 4).with_scale(Radical::InvSqrt2),
        ClosedForm::polynomial(poly),
        closed_iv(q(0, 1), q(1, 4)),
        vec![q(1, 4)],
        "(1/sqrt 2) sum (-1)^[n/2] cos((2n-1) u)/(2n-1)^4 as a quadratic on [0, c/4]",
    ))
}

pub(super) fn cor7_poly(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 0..r {
        let d = frak_d(r - k).expect("r - k >= 1");
        p.add_term(2 * k as usize, &pi_coef(d.scale(&(sgn(k) * inv_fact(2 * k)))));
    }
    p
}

fn cor7(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "cor7",
        r,
        cos_term(1, 2, -1, &[1, -1, -1, 1], 2 * r).with_scale(Radical::InvSqrt2),
        ClosedForm::polynomial(cor7_poly(r)),
        closed_iv(q(-1, 4), q(1, 4)),
        vec![q(-1, 4), q(1, 4)],
        "(1/sqrt 2) sum (-1)^[n/2] cos((2n-1) u)/(2n-1)^2r through frakD values on [-c/4, c/4]",
    ))
}

pub(super) fn cor8_poly(r: u32) -> UPoly {
    let mut p = UPoly::zero();
    for k in 0..=r {
        let d = cal_d(r - k).expect("calD index");
        p.add_term(2 * k as usize, &pi_coef(d.scale(&(sgn(k) * inv_fact(2 * k)))));
    }
    p
}

fn cor8(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "cor8",
        r,
        cos_term(0, 2, 1, &[1, 1, -1, -1], 2 * r + 1).with_scale(Radical::InvSqrt2),
        ClosedForm::polynomial(cor8_poly(r)),
        closed_iv(q(-1, 4), q(1, 4)),
        vec![q(-1, 4), q(1, 4)],
        "(1/sqrt 2) sum_{n>=0} (-1)^[n/2] cos((2n+1) u)/(2n+1)^(2r+1) through calD values on [-c/4, c/4]",
    ))
}

fn example1(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let poly = UPoly::from_coeffs(vec![pi_mono(q(1, 2), 1), rat(q(-1, 1))]);
    Ok(IdentityRecord {
        id: "example1".into(),
        r,
        x0: None,
        default_c: PI,
        series: SeriesTerm::CosPower,
        closed: ClosedForm::polynomial(poly),
        interval: open_iv(q(0, 1), q(1, 1)),
        singular_points: ints(&[0, 1]),
        terms: 2000,
        tol: 1e-8,
        description: "sum sin(n x) cos^n(x)/n = pi/2 - x on (0, pi)".into(),
    })
}

fn example2(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    let closed = ClosedForm {
        extra: Some(Extra::ThirdCosine),
        ..ClosedForm::polynomial(UPoly::from_coeffs(vec![rat(q(-1, 2))]))
    };
    Ok(IdentityRecord {
        id: "example2".into(),
        r,
        x0: None,
        default_c: PI / 3.0,
        series: SeriesTerm::Trig(TrigTerm::new(1, 1, 0, &[1, -1], Denom::ThirdsProduct, Trig::Cos)),
        closed,
        interval: closed_iv(q(-1, 1), q(1, 1)),
        singular_points: ints(&[-3, -1, 1, 3]),
        terms: 100_000,
        tol: 1e-3,
        description: "sum (-1)^(n-1) cos(3n x)/((3n-1)(3n+1)) = sqrt(3) pi cos(x)/9 - 1/2 on [-pi/3, pi/3]".into(),
    })
}

fn lemma4_zeta(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "lemma4-zeta",
        r,
        sin_term(1, 1, 0, &[1], 1),
        ClosedForm::polynomial(UPoly::from_coeffs(vec![pi_mono(q(1, 2), 1), rat(q(-1, 2))])),
        open_iv(q(0, 1), q(2, 1)),
        ints(&[0, 2]),
        "sum sin(n u)/n = pi/2 - u/2 on (0, 2c)",
    ))
}

fn lemma4_eta(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "lemma4-eta",
        r,
        sin_term(1, 1, 0, &[1, -1], 1),
        ClosedForm::polynomial(UPoly::from_coeffs(vec![Coef::zero(), rat(q(1, 2))])),
        open_iv(q(-1, 1), q(1, 1)),
        ints(&[-1, 1]),
        "sum (-1)^(n-1) sin(n u)/n = u/2 on (-c, c)",
    ))
}

fn lemma4_arctan(r: u32, _: Option<&BigRational>) -> Result<IdentityRecord, RegistryError> {
    Ok(record(
        "lemma4-arctan",
        r,
        cos_term(0, 2, 1, &[1, -1], 1),
        ClosedForm::polynomial(UPoly::from_coeffs(vec![pi_mono(q(1, 4), 1)])),
        open_iv(q(-1, 2), q(1, 2)),
        vec![q(-1, 2), q(1, 2)],
        "sum_{n>=0} (-1)^n cos((2n+1) u)/(2n+1) = pi/4 on (-c/2, c/2)",
    ))
}

macro_rules! entry {
    ($id:expr, $desc:expr, $rmin:expr, $rmax:expr, $sweep:expr, $x0:expr, $f:expr) => {
        CatalogEntry { id: $id, description: $desc, r_min: $rmin, r_max: $rmax, sweep: $sweep, takes_x0: $x0, build: $f }
    };
}

pub static CATALOG: &[CatalogEntry] = &[
    entry!("thm11-cos", "cosine series of 1/n^2r", 1, None, &[1, 2, 3], false, thm11_cos),
    entry!("thm11-sin", "sine series of 1/n^(2r+1)", 0, None, &[1, 2, 3], false, thm11_sin),
    entry!("thm14", "cosine series of 1/n^(2r+1), log-sine integral form", 1, None, &[1], false, thm14),
    entry!("thm16", "cosine series of 1/n^(2r+1), expanded form", 1, None, &[1, 2, 3], false, thm16),
    entry!("thm18-cos", "alternating cosine series of 1/n^2r", 1, None, &[1, 2, 3], false, thm18_cos),
    entry!("thm18-sin", "alternating sine series of 1/n^(2r+1)", 1, None, &[1, 2, 3], false, thm18_sin),
    entry!("thm21-eta-odd", "alternating cosine series of 1/n^(2r+1)", 1, None, &[1, 2, 3], false, thm21),
    entry!("cor5-beta", "odd alternating cosine series of 1/(2n+1)^(2r+1)", 1, None, &[1, 2, 3], false, cor5),
    entry!("cor6-lambda", "odd cosine series of 1/(2n-1)^2r", 1, None, &[1, 2, 3], false, cor6),
    entry!("eq56", "frakD sums from the lambda family at x = c/4", 1, None, &[1, 2, 3], false, eq56),
    entry!("eq59", "shifted lambda family", 1, None, &[1, 2], true, eq59),
    entry!("eq69", "frakD cosine series at r = 2 on [c/4, 3c/4]", 2, Some(2), &[2], false, eq69),
    entry!("eq70", "frakD cosine series at r = 2 on [0, c/4]", 2, Some(2), &[2], false, eq70),
    entry!("cor7", "frakD cosine series", 1, None, &[1, 2, 3], false, cor7),
    entry!("cor8", "calD cosine series", 1, None, &[1, 2, 3], false, cor8),
    entry!("example1", "cos-power sine series", 0, Some(0), &[0], false, example1),
    entry!("example2", "cosine series with (3n-1)(3n+1) denominators", 0, Some(0), &[0], false, example2),
    entry!("lemma4-zeta", "sum sin(n u)/n", 0, Some(0), &[0], false, lemma4_zeta),
    entry!("lemma4-eta", "sum (-1)^(n-1) sin(n u)/n", 0, Some(0), &[0], false, lemma4_eta),
    entry!("lemma4-arctan", "sum (-1)^n cos((2n+1) u)/(2n+1)", 0, Some(0), &[0], false, lemma4_arctan),
];
