//! Right-hand sides as polynomials in u = pi x / c with exact coefficients,
//! plus the few non-polynomial pieces some identities need.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact_values::{binomial, factorial, zeta_even, PiPolynomial};
use crate::odd_zeta::{zeta_odd, PrecisionContext, ZetaError, ZetaMethod};
use crate::quad;
use crate::real::Real;

/// Transcendental constants a coefficient may carry besides powers of pi.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constant {
    One,
    /// zeta(m) for odd m >= 3
    Zeta(u32),
    Ln2,
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constant::One => write!(f, "1"),
            Constant::Zeta(m) => write!(f, "zeta({m})"),
            Constant::Ln2 => write!(f, "ln2"),
        }
    }
}

/// Sum of PiPolynomial * Constant.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coef {
    terms: BTreeMap<Constant, PiPolynomial>,
}

impl Coef {
    pub fn zero() -> Coef {
        Coef::default()
    }

    pub fn pi_poly(p: PiPolynomial) -> Coef {
        Coef::of(Constant::One, p)
    }

    pub fn rational(q: BigRational) -> Coef {
        Coef::pi_poly(PiPolynomial::constant(q))
    }

    pub fn of(c: Constant, p: PiPolynomial) -> Coef {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(c, p);
        }
        Coef { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, c: Constant) -> PiPolynomial {
        self.terms.get(&c).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Constant, &PiPolynomial)> {
        self.terms.iter().map(|(c, p)| (*c, p))
    }

    /// The coefficient as a pure PiPolynomial, if it has no other constants.
    pub fn as_pi_poly(&self) -> Option<PiPolynomial> {
        match self.terms.len() {
            0 => Some(PiPolynomial::zero()),
            1 => self.terms.get(&Constant::One).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, o: &Coef) -> Coef {
        let mut terms = self.terms.clone();
        for (c, p) in &o.terms {
            let s = terms.get(c).map(|q| q.add(p)).unwrap_or_else(|| p.clone());
            if s.is_zero() {
                terms.remove(c);
            } else {
                terms.insert(*c, s);
            }
        }
        Coef { terms }
    }

    pub fn neg(&self) -> Coef {
        Coef { terms: self.terms.iter().map(|(c, p)| (*c, p.neg())).collect() }
    }

    pub fn sub(&self, o: &Coef) -> Coef {
        self.add(&o.neg())
    }

    pub fn scale(&self, q: &BigRational) -> Coef {
        if q.is_zero() {
            return Coef::zero();
        }
        Coef { terms: self.terms.iter().map(|(c, p)| (*c, p.scale(q))).collect() }
    }

    pub fn mul_pi(&self, o: &PiPolynomial) -> Coef {
        let mut out = Coef::zero();
        for (c, p) in &self.terms {
            out = out.add(&Coef::of(*c, p.mul(o)));
        }
        out
    }

    pub fn eval_real(&self, consts: &mut ConstantValues) -> Result<Real, ZetaError> {
        let prec = consts.prec();
        let mut acc = Real::zero(prec);
        for (c, p) in &self.terms {
            let v = &p.eval_real(prec) * &consts.value(*c)?;
            acc = &acc + &v;
        }
        Ok(acc)
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match c {
                Constant::One => write!(f, "{p}")?,
                _ => write!(f, "({p})*{c}")?,
            }
        }
        Ok(())
    }
}

/// Memoised high-precision values of the constants.
pub struct ConstantValues {
    ctx: PrecisionContext,
    cache: BTreeMap<Constant, Real>,
}

impl ConstantValues {
    pub fn new(ctx: PrecisionContext) -> ConstantValues {
        ConstantValues { ctx, cache: BTreeMap::new() }
    }

    pub fn prec(&self) -> u32 {
        self.ctx.prec()
    }

    pub fn value(&mut self, c: Constant) -> Result<Real, ZetaError> {
        if let Some(v) = self.cache.get(&c) {
            return Ok(v.clone());
        }
        let prec = self.prec();
        let v = match c {
            Constant::One => Real::from_i64(1, prec),
            Constant::Ln2 => Real::ln2(prec),
            Constant::Zeta(m) => {
                if m < 3 || m % 2 == 0 {
                    return Err(ZetaError::Index(m));
                }
                zeta_odd((m - 1) / 2, ZetaMethod::Thm15Zeta, &self.ctx)?.value
            }
        };
        self.cache.insert(c, v.clone());
        Ok(v)
    }
}

/// Polynomial sum_j a_j u^j with Coef coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Coef>,
}

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly::default()
    }

    pub fn from_coeffs(coeffs: Vec<Coef>) -> UPoly {
        let mut p = UPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeff(&self, j: usize) -> Coef {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Add c u^j.
    pub fn add_term(&mut self, j: usize, c: &Coef) {
        if self.coeffs.len() <= j {
            self.coeffs.resize(j + 1, Coef::zero());
        }
        self.coeffs[j] = self.coeffs[j].add(c);
        self.trim();
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (j, c) in o.coeffs.iter().enumerate() {
            out.add_term(j, c);
        }
        out
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c.scale(q)).collect())
    }

    /// int_0^u p(v) dv.
    pub fn antiderivative(&self) -> UPoly {
        let mut coeffs = vec![Coef::zero()];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&BigRational::new(BigInt::one(), BigInt::from(j + 1))));
        }
        UPoly::from_coeffs(coeffs)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(j, c)| c.scale(&BigRational::from_integer(j.into()))).collect(),
        )
    }

    /// cosh(x0 d/dx) p, i.e. (p(u - u0) + p(u + u0))/2 with u0 = q pi.
    pub fn shift(&self, q: &BigRational) -> UPoly {
        let mut out = UPoly::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            for i in (0..=j).step_by(2) {
                let k = BigRational::from_integer(binomial(j as u32, i as u32)) * q.pow(i as i32);
                out.add_term(j - i, &c.mul_pi(&PiPolynomial::monomial(k, i as u32)));
            }
        }
        out
    }

    /// Exact value at u = q pi.
    pub fn at_pi_multiple(&self, q: &BigRational) -> Coef {
        let mut acc = Coef::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.mul_pi(&PiPolynomial::monomial(q.pow(j as i32), j as u32)));
        }
        acc
    }

    pub fn eval_real(&self, u: &Real, consts: &mut ConstantValues) -> Result<Real, ZetaError> {
        let mut acc = Real::zero(consts.prec());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * u) + &c.eval_real(consts)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Radical {
    One,
    Sqrt2,
    InvSqrt2,
}

impl Radical {
    pub fn value(self, prec: u32) -> Real {
        let two = Real::from_i64(2, prec);
        match self {
            Radical::One => Real::from_i64(1, prec),
            Radical::Sqrt2 => two.sqrt(),
            Radical::InvSqrt2 => &Real::from_i64(1, prec) / &two.sqrt(),
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Radical::One => 1.0,
            Radical::Sqrt2 => std::f64::consts::SQRT_2,
            Radical::InvSqrt2 => std::f64::consts::FRAC_1_SQRT_2,
        }
    }
}

/// coef * u^power * ln u, extended by 0 at u = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogTerm {
    pub coef: BigRational,
    pub power: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualKind {
    /// 2 (2k-1)! zeta(2k)/(2r+2k)! (u/2pi)^2k u^2r
    HalfPeriod,
    /// 2 (1 - 4^-k) (2k-1)! zeta(2k)/(2r+2k)! (u/pi)^2k u^2r
    EtaOdd,
}

/// sign * sum_{k>=1} t_k(u), numerically summed with a tail bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub r: u32,
    pub kind: ResidualKind,
    pub sign: i8,
}

const ZETA_TABLE: usize = 24;
const RESIDUAL_MAX_TERMS: u64 = 20_000_000;

fn zeta_even_f64(k: u64, table: &[f64]) -> f64 {
    if (k as usize) < table.len() {
        return table[k as usize];
    }
    let s = 2.0 * k as f64;
    1.0 + 2f64.powf(-s) + 3f64.powf(-s) + 4f64.powf(-s) + 5f64.powf(-s)
}

#[derive(Clone, Copy, Debug)]
pub struct NumericPart {
    pub value: f64,
    pub bound: f64,
    pub terms: u64,
}

impl Residual {
    /// Exact coefficient of u^(2r+2k), sign included.
    pub fn coeff(&self, k: u32) -> BigRational {
        let q = zeta_even(k).expect("k >= 1").coeff(2 * k);
        let base = BigRational::new(BigInt::from(2) * factorial(2 * k - 1), factorial(2 * self.r + 2 * k)) * q;
        let four_k = BigRational::from_integer(BigInt::from(4).pow(k));
        let c = match self.kind {
            ResidualKind::HalfPeriod => base / four_k,
            ResidualKind::EtaOdd => base * (BigRational::one() - BigRational::one() / four_k),
        };
        if self.sign < 0 {
            -c
        } else {
            c
        }
    }

    pub fn eval_f64(&self, u: f64, target: f64) -> NumericPart {
        let table: Vec<f64> =
            (0..ZETA_TABLE as u32).map(|k| if k == 0 { 0.0 } else { zeta_even(k).expect("k >= 1").eval_f64() }).collect();
        let r = self.r as f64;
        let rho2 = match self.kind {
            ResidualKind::HalfPeriod => (u / (2.0 * std::f64::consts::PI)).powi(2),
            ResidualKind::EtaOdd => (u / std::f64::consts::PI).powi(2),
        };
        let u2r = u.abs().powi(2 * self.r as i32);
        // a_k = (2k-1)!/(2r+2k)!
        let mut a = 1.0 / (1..=(2 * self.r + 2)).map(|i| i as f64).product::<f64>();
        let mut pw = rho2;
        let mut sum = 0.0;
        let mut comp = 0.0;
        let mut k = 1u64;
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        loop {
            let z = zeta_even_f64(k, &table);
            let w = match self.kind {
                ResidualKind::HalfPeriod => 1.0,
                ResidualKind::EtaOdd => 1.0 - 4f64.powi(-(k.min(600) as i32)),
            };
            let t = 2.0 * w * a * z * pw * u2r;
            let y = t - comp;
            let s = sum + y;
            comp = (s - sum) - y;
            sum = s;
            let kf = k as f64;
            let geometric = if rho2 < 1.0 { rho2.powf(kf + 1.0) / (1.0 - rho2) } else { f64::INFINITY };
            let algebraic = (2.0 * kf).powf(-2.0 * r) / (4.0 * r.max(0.5));
            let bound = 2.0 * zeta2 * u2r * geometric.min(algebraic);
            if bound < target || k >= RESIDUAL_MAX_TERMS || pw == 0.0 {
                let v = if self.sign < 0 { -sum } else { sum };
                return NumericPart { value: v, bound: bound + 1e-16 * sum.abs() * (kf.sqrt() + 1.0), terms: k };
            }
            a *= (2.0 * kf) * (2.0 * kf + 1.0) / ((2.0 * r + 2.0 * kf + 1.0) * (2.0 * r + 2.0 * kf + 2.0));
            pw *= rho2;
            k += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extra {
    /// (sqrt 3 pi / 9) cos(u/3)
    ThirdCosine,
    /// sign * m-fold integral from 0 of ln(2 sin(v/2)) dv
    LogSinIntegral { m: u32, sign: i8 },
}

impl Extra {
    pub fn eval(&self, ur: &Real, prec: u32) -> Result<(Real, f64), String> {
        let u = ur.to_f64();
        match self {
            Extra::ThirdCosine => {
                let k = &(&Real::from_i64(3, prec).sqrt() * &Real::pi(prec)) / &Real::from_i64(9, prec);
                let v = &k * &(ur / &Real::from_i64(3, prec)).cos();
                Ok((v, 0.0))
            }
            Extra::LogSinIntegral { m, sign } => {
                if !(0.0..=2.0 * std::f64::consts::PI).contains(&u) {
                    return Err(format!("log-sine integral needs 0 <= u <= 2 pi, got {u}"));
                }
                let m = *m;
                let fact: f64 = (1..m).map(|i| i as f64).product();
                let f = |t: f64| (u - t).powi(m as i32 - 1) * (2.0 * (t / 2.0).sin()).ln();
                let q = quad::integrate(&f, 0.0, u, 1e-13, 1e-13).map_err(|e| e.to_string())?;
                let v = q.value / fact * *sign as f64;
                Ok((Real::from_f64(v, prec), q.error / fact + 1e-15 * v.abs()))
            }
        }
    }
}

/// Full right-hand side: scale * (poly + log + residual + extra).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub scale: Radical,
    pub poly: UPoly,
    pub log: Option<LogTerm>,
    pub residual: Option<Residual>,
    pub extra: Option<Extra>,
}

impl ClosedForm {
    pub fn polynomial(poly: UPoly) -> ClosedForm {
        ClosedForm { scale: Radical::One, poly, log: None, residual: None, extra: None }
    }

    pub fn is_polynomial(&self) -> bool {
        self.log.is_none() && self.residual.is_none() && self.extra.is_none()
    }

    /// Value at u = pi y together with an absolute error bound of the numeric parts.
    pub fn eval(&self, y: f64, consts: &mut ConstantValues, target: f64) -> Result<(Real, f64), String> {
        let prec = consts.prec();
        let ur = &Real::pi(prec) * &Real::from_f64(y, prec);
        let u = ur.to_f64();
        let mut v = self.poly.eval_real(&ur, consts).map_err(|e| e.to_string())?;
        let mut bound = 0.0;
        if let Some(l) = &self.log {
            if u < 0.0 {
                return Err(format!("log term needs u >= 0, got {u}"));
            }
            if u > 0.0 {
                let t = &(&Real::from_rational(&l.coef, prec) * &ur.powi(l.power as i64)) * &ur.ln();
                v = &v + &t;
            }
        }
        if let Some(r) = &self.residual {
            let n = r.eval_f64(u, target);
            v = &v + &Real::from_f64(n.value, prec);
            bound += n.bound;
        }
        if let Some(e) = &self.extra {
            let (t, b) = e.eval(&ur, prec)?;
            v = &v + &t;
            bound += b;
        }
        let s = self.scale.value(prec);
        Ok((&s * &v, bound * self.scale.to_f64()))
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scale {
            Radical::One => {}
            Radical::Sqrt2 => write!(f, "sqrt(2)*")?,
            Radical::InvSqrt2 => write!(f, "(1/sqrt(2))*")?,
        }
        write!(f, "[{}", self.poly)?;
        if let Some(l) = &self.log {
            write!(f, " + ({})*u^{}*ln(u)", l.coef, l.power)?;
        }
        if let Some(r) = &self.residual {
            let sign = if r.sign < 0 { "-" } else { "+" };
            match r.kind {
                ResidualKind::HalfPeriod => write!(f, " {sign} sum_k 2(2k-1)! zeta(2k)/(2r+2k)! (u/2pi)^2k u^2r")?,
                ResidualKind::EtaOdd => write!(f, " {sign} sum_k 2(1-4^-k)(2k-1)! zeta(2k)/(2r+2k)! (u/pi)^2k u^2r")?,
            }
        }
        match &self.extra {
            Some(Extra::ThirdCosine) => write!(f, " + sqrt(3)*pi/9*cos(u/3)")?,
            Some(Extra::LogSinIntegral { m, sign }) => {
                let s = if *sign < 0 { "-" } else { "+" };
                write!(f, " {s} I_{m}[ln(2 sin(u/2))]")?
            }
            None => {}
        }
        write!(f, "]")
    }
}
