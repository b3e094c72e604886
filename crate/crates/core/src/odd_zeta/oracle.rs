//! Brute-force Dirichlet sums with an Euler-Maclaurin tail.
//!
//! Every series here has the form scale * sum_{n>=0} c_(n mod P) / (n + b)^s.
//! Terms are grouped in blocks of one period, g(m) = sum_j c_j f(Pm + j + b),
//! the first M blocks are summed directly and the rest is replaced by the
//! Euler-Maclaurin expansion of sum_{m>=M} g(m). The reported bound is the
//! magnitude of the first omitted correction plus a rounding allowance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{PrecisionContext, SeriesApprox, ZetaError};
use crate::exact_values::bernoulli_star;
use crate::real::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicSeries {
    pub coeffs: Vec<BigRational>,
    pub offset: BigRational,
    /// Constant factor applied to the whole sum.
    pub scale: Scale,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    One,
    InvSqrt2,
    HalfSqrt3,
}

impl Scale {
    fn value(self, prec: u32) -> Real {
        match self {
            Scale::One => Real::from_i64(1, prec),
            Scale::InvSqrt2 => &Real::from_i64(1, prec) / &Real::from_i64(2, prec).sqrt(),
            Scale::HalfSqrt3 => Real::from_i64(3, prec).sqrt().mul_pow2(-1),
        }
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&n| q(n)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum DirichletSeries {
    /// sum 1/n^s
    Zeta,
    /// sum (-1)^(n-1)/n^s
    Eta,
    /// sum 1/(2n+1)^s
    Lambda,
    /// sum (-1)^n/(2n+1)^s
    Beta,
    /// (1/sqrt 2) sum_{n>=1} (-1)^[n/2]/(2n-1)^s
    FrakD,
    /// (1/sqrt 2) sum_{n>=0} (-1)^[n/2]/(2n+1)^s
    CalD,
    /// sum 1/(n+a)^s
    Hurwitz(BigRational),
    /// sum (-1)^n/(n+a)^s
    AlternatingHurwitz(BigRational),
    Custom(PeriodicSeries),
}

impl DirichletSeries {
    pub fn name(&self) -> String {
        match self {
            DirichletSeries::Zeta => "zeta".into(),
            DirichletSeries::Eta => "eta".into(),
            DirichletSeries::Lambda => "lambda".into(),
            DirichletSeries::Beta => "beta".into(),
            DirichletSeries::FrakD => "frakD".into(),
            DirichletSeries::CalD => "calD".into(),
            DirichletSeries::Hurwitz(a) => format!("hurwitz({a})"),
            DirichletSeries::AlternatingHurwitz(a) => format!("alt-hurwitz({a})"),
            DirichletSeries::Custom(_) => "custom".into(),
        }
    }

    pub fn periodic(&self) -> PeriodicSeries {
        let (coeffs, offset, scale) = match self {
            DirichletSeries::Zeta => (ints(&[1]), q(1), Scale::One),
            DirichletSeries::Eta => (ints(&[1, -1]), q(1), Scale::One),
            DirichletSeries::Lambda => (ints(&[1, 0]), q(1), Scale::One),
            DirichletSeries::Beta => (ints(&[1, 0, -1, 0]), q(1), Scale::One),
            DirichletSeries::FrakD => (ints(&[1, 0, -1, 0, -1, 0, 1, 0]), q(1), Scale::InvSqrt2),
            DirichletSeries::CalD => (ints(&[1, 0, 1, 0, -1, 0, -1, 0]), q(1), Scale::InvSqrt2),
            DirichletSeries::Hurwitz(a) => (ints(&[1]), a.clone(), Scale::One),
            DirichletSeries::AlternatingHurwitz(a) => (ints(&[1, -1]), a.clone(), Scale::One),
            DirichletSeries::Custom(p) => return p.clone(),
        };
        PeriodicSeries { coeffs, offset, scale }
    }
}

/// Rising factorial s (s+1) ... (s+k-1).
fn rising(s: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (s + i))
}

fn rat_real(v: &BigRational, prec: u32) -> Real {
    Real::from_rational(v, prec)
}

/// Evaluate the series at integer s with an Euler-Maclaurin tail.
pub fn dirichlet_oracle(series: &DirichletSeries, s: u32, ctx: &PrecisionContext) -> Result<SeriesApprox, ZetaError> {
    ctx.check()?;
    let p = series.periodic();
    let period = p.coeffs.len() as u32;
    if period == 0 {
        return Err(ZetaError::Divergent("empty coefficient pattern".into()));
    }
    if !p.offset.is_positive() {
        return Err(ZetaError::Divergent(format!("offset {} must be positive", p.offset)));
    }
    let csum: BigRational = p.coeffs.iter().sum();
    if s == 0 || (s == 1 && !csum.is_zero()) {
        return Err(ZetaError::Divergent(format!("{} at s = {s}", series.name())));
    }
    let prec = ctx.prec();
    let target = ctx.target;
    let offs: Vec<BigRational> = (0..period).map(|j| &p.offset + q(j as i64)).collect();
    let cs: Vec<Real> = p.coeffs.iter().map(|c| rat_real(c, prec)).collect();
    let pr = Real::from_i64(period as i64, prec);

    // number of leading blocks; grows until the correction terms fall below target
    let mut blocks = (ctx.digits as u64 / period as u64).max(8) + 8;
    loop {
        let m_real = Real::from_i64(blocks as i64, prec);
        // y_j = P M + j + b
        let ys: Vec<Real> =
            offs.iter().map(|o| &(&pr * &m_real) + &rat_real(o, prec)).collect();
        let mut tail = Real::zero(prec);
        // integral of g over [M, inf)
        if s == 1 {
            for (c, y) in cs.iter().zip(&ys) {
                if !c.is_zero() {
                    tail = &tail - &(&(c * &y.ln()) / &pr);
                }
            }
        } else {
            let sm1 = Real::from_i64(s as i64 - 1, prec);
            for (c, y) in cs.iter().zip(&ys) {
                if !c.is_zero() {
                    tail = &tail + &(&(c * &y.powi(1 - s as i64)) / &(&pr * &sm1));
                }
            }
        }
        // g(M)/2
        let mut gm = Real::zero(prec);
        for (c, y) in cs.iter().zip(&ys) {
            if !c.is_zero() {
                gm = &gm + &(c * &y.powi(-(s as i64)));
            }
        }
        tail = &tail + &gm.mul_pow2(-1);
        // sum_i (-1)^(i+1) B*_i/(2i)! * (-g^(2i-1)(M)) with g^(k) = sum c_j P^k (-1)^k (s)_k y^(-s-k)
        let mut bound = f64::INFINITY;
        let mut prev = f64::INFINITY;
        let mut converged = false;
        for i in 1..200u32 {
            let k = 2 * i - 1;
            let b = bernoulli_star(i).expect("i >= 1");
            let coef = &b * BigRational::new(rising(s, k), crate::exact_values::factorial(2 * i));
            let mut d = Real::zero(prec);
            for (c, y) in cs.iter().zip(&ys) {
                if !c.is_zero() {
                    d = &d + &(c * &y.powi(-(s as i64) - k as i64));
                }
            }
            // -g^(2i-1) = P^(2i-1) (s)_(2i-1) sum c_j y_j^(-s-2i+1)
            let pk = Real::from_bigint(&BigInt::from(period).pow(k), prec);
            let term = &(&rat_real(&coef, prec) * &pk) * &d;
            let term = if i % 2 == 1 { term } else { -term };
            let mag = term.abs().to_f64();
            if mag > prev {
                break;
            }
            if mag < target * 1e-3 || d.is_zero() {
                tail = &tail + &term;
                // the next correction is smaller still; bound it by this one
                bound = mag;
                converged = true;
                break;
            }
            tail = &tail + &term;
            prev = mag;
        }
        if !converged {
            blocks *= 2;
            if blocks > 1 << 22 {
                return Err(ZetaError::NoConvergence(series.name()));
            }
            continue;
        }
        let mut head = Real::zero(prec);
        let total = blocks * period as u64;
        for n in 0..total {
            let c = &cs[(n % period as u64) as usize];
            if c.is_zero() {
                continue;
            }
            let y = &rat_real(&p.offset, prec) + &Real::from_i64(n as i64, prec);
            head = &head + &(c * &y.powi(-(s as i64)));
        }
        let scale = p.scale.value(prec);
        let value = &scale * &(&head + &tail);
        let rounding = (total as f64 + 50.0) * 2f64.powi(-(prec as i32 - 4)) * value.abs().to_f64().max(1.0);
        let sc = scale.to_f64();
        return Ok(SeriesApprox { value, tail_bound: sc * bound + rounding, terms_used: total as usize });
    }
}

/// zeta(s, a) = sum_{n>=0} 1/(n+a)^s.
pub fn hurwitz_zeta(s: u32, a: &BigRational, ctx: &PrecisionContext) -> Result<SeriesApprox, ZetaError> {
    if s < 2 {
        return Err(ZetaError::Divergent(format!("hurwitz zeta at s = {s}")));
    }
    dirichlet_oracle(&DirichletSeries::Hurwitz(a.clone()), s, ctx)
}
