//! zeta(2r+1) from fast-converging series in zeta(2k) or B*_k, plus the
//! Hurwitz zeta function and a brute-force Dirichlet oracle.

mod checks;
mod oracle;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::exact_values::{bernoulli_star, factorial, harmonic, zeta_even};
use crate::real::{bits_for_digits, Real};

pub use checks::{identity_checks, CheckGroup, IdentityResidual};
pub use oracle::{dirichlet_oracle, hurwitz_zeta, DirichletSeries, PeriodicSeries, Scale};

pub const GUARD_DIGITS: u32 = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("precision context too small: {digits} digits cannot reach {target:e} (need {need})")]
    Precision { digits: u32, target: f64, need: u32 },
    #[error("index {0} out of range")]
    Index(u32),
    #[error("divergent series: {0}")]
    Divergent(String),
    #[error("tail correction does not converge for {0}")]
    NoConvergence(String),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionContext {
    pub digits: u32,
    pub target: f64,
}

impl PrecisionContext {
    pub fn new(digits: u32, target: f64) -> Result<PrecisionContext, ZetaError> {
        let c = PrecisionContext { digits, target };
        c.check()?;
        Ok(c)
    }

    /// Smallest context that reaches `target`.
    pub fn for_target(target: f64) -> PrecisionContext {
        let need = (-target.log10()).ceil().max(1.0) as u32 + GUARD_DIGITS;
        PrecisionContext { digits: need, target }
    }

    pub fn check(&self) -> Result<(), ZetaError> {
        if !(self.target > 0.0) || !self.target.is_finite() {
            return Err(ZetaError::Precision { digits: self.digits, target: self.target, need: u32::MAX });
        }
        let need = (-self.target.log10()).ceil().max(0.0) as u32 + GUARD_DIGITS;
        if self.digits < need {
            return Err(ZetaError::Precision { digits: self.digits, target: self.target, need });
        }
        Ok(())
    }

    pub fn prec(&self) -> u32 {
        bits_for_digits(self.digits) + 16
    }
}

#[derive(Clone, Debug)]
pub struct SeriesApprox {
    pub value: Real,
    pub tail_bound: f64,
    pub terms_used: usize,
}

impl SeriesApprox {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZetaMethod {
    /// x = c/2 evaluation, k-series in B*_k
    Thm15,
    /// x = c/2 evaluation, k-series in zeta(2k)
    Thm15Zeta,
    /// x = c/3 evaluation, k-series in B*_k
    Thm17,
    /// x = c/3 evaluation, k-series in zeta(2k)
    Thm17Zeta,
}

impl ZetaMethod {
    pub const ALL: [ZetaMethod; 4] = [ZetaMethod::Thm15, ZetaMethod::Thm15Zeta, ZetaMethod::Thm17, ZetaMethod::Thm17Zeta];

    pub fn name(self) -> &'static str {
        match self {
            ZetaMethod::Thm15 => "thm15",
            ZetaMethod::Thm15Zeta => "thm15-zeta",
            ZetaMethod::Thm17 => "thm17",
            ZetaMethod::Thm17Zeta => "thm17-zeta",
        }
    }

    pub fn from_name(s: &str) -> Option<ZetaMethod> {
        ZetaMethod::ALL.into_iter().find(|m| m.name() == s)
    }

    /// Evaluation point pi/d with d = 2 or 3.
    fn d(self) -> u32 {
        match self {
            ZetaMethod::Thm15 | ZetaMethod::Thm15Zeta => 2,
            ZetaMethod::Thm17 | ZetaMethod::Thm17Zeta => 3,
        }
    }

    fn uses_bernoulli(self) -> bool {
        matches!(self, ZetaMethod::Thm15 | ZetaMethod::Thm17)
    }
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// Denominator 2^(4r+1) + 2^2r - 1 (d = 2) or 3^2r (2^2r + 1) + 2^2r - 1 (d = 3).
fn denominator(r: u32, d: u32) -> BigInt {
    let p2 = big(1) << (2 * r);
    match d {
        2 => (big(1) << (4 * r + 1)) + &p2 - 1,
        _ => big(3).pow(2 * r) * (&p2 + 1) + &p2 - 1,
    }
}

/// Upper bound for sum_{k>K} B*_k (pi/d)^2k / (k (2r+2k)!).
///
/// With B*_k <= 2 zeta(2) (2k)!/(2 pi)^2k the summand is at most
/// m_k = 2 zeta(2) (2k)!/(k (2r+2k)!) (2d)^-2k, and m_(k+1)/m_k < (2d)^-2.
fn k_tail_bound(r: u32, d: u32, kk: u32) -> f64 {
    let k = kk + 1;
    let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
    let mut ln_m = (2.0 * zeta2).ln() - (k as f64).ln() - 2.0 * k as f64 * (2.0 * d as f64).ln();
    for i in 2 * k + 1..=2 * r + 2 * k {
        ln_m -= (i as f64).ln();
    }
    let q = (2.0 * d as f64).powi(-2);
    ln_m.exp() / (1.0 - q)
}

/// One level: zeta(2r+1) given the lower odd values.
fn zeta_odd_level(
    r: u32,
    method: ZetaMethod,
    lower: &[SeriesApprox],
    ctx: &PrecisionContext,
) -> Result<SeriesApprox, ZetaError> {
    let prec = ctx.prec();
    let d = method.d();
    let pi = Real::pi(prec);
    let a = &pi / &Real::from_i64(d as i64, prec);
    let a2 = &a * &a;
    let den = denominator(r, d);
    let den_r = Real::from_bigint(&den, prec);
    let sign = if r % 2 == 1 { 1 } else { -1 };

    // A * sum_{k=1}^{r-1} (-1)^(k-1) a^2k/(2k)! zeta(2r+1-2k)
    let lead_num = match d {
        2 => big(1) << (4 * r + 1),
        _ => (big(1) << (2 * r + 1)) * big(3).pow(2 * r),
    };
    let lead = &Real::from_bigint(&lead_num, prec) / &den_r;
    let mut acc = Real::zero(prec);
    let mut inherited = 0.0;
    let mut apow = Real::from_i64(1, prec);
    for k in 1..r {
        apow = &apow * &a2;
        let z = &lower[(r - k - 1) as usize];
        let c = &apow / &Real::from_bigint(&factorial(2 * k), prec);
        let t = &c * &z.value;
        acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
        inherited += c.to_f64().abs() * z.tail_bound;
    }
    let mut total = &lead * &acc;
    inherited *= lead.to_f64().abs();

    // (-1)^(r-1) 2^(2r+1) pi^2r / (den (2r)!) (H_2r - ln a)
    let pi2r = pi.powi(2 * r as i64);
    let h = Real::from_rational(&harmonic(2 * r).expect("r >= 1"), prec);
    let logpart = &(&(&Real::from_bigint(&(big(1) << (2 * r + 1)), prec) * &pi2r)
        / &(&den_r * &Real::from_bigint(&factorial(2 * r), prec)))
        * &(&h - &a.ln());
    total = if sign > 0 { &total + &logpart } else { &total - &logpart };

    // (-1)^(r-1) (2 pi)^2r / den * sum_k B*_k a^2k / (k (2r+2k)!)
    let pre = &Real::from_bigint(&(big(1) << (2 * r)), prec) * &(&pi2r / &den_r);
    let pre_f = pre.to_f64().abs();
    let mut kk = 0u32;
    while pre_f * k_tail_bound(r, d, kk) > ctx.target / 4.0 {
        kk += 1;
        if kk > 100_000 {
            return Err(ZetaError::NoConvergence(method.name().into()));
        }
    }
    let mut ksum = Real::zero(prec);
    let mut apow = Real::from_i64(1, prec);
    let mut zeta_pi_pow = Real::from_i64(1, prec);
    for k in 1..=kk {
        apow = &apow * &a2;
        zeta_pi_pow = &zeta_pi_pow * &(&pi * &pi);
        let t = if method.uses_bernoulli() {
            let b = bernoulli_star(k).expect("k >= 1");
            let q = b / BigRational::from_integer(big(k as u64) * factorial(2 * r + 2 * k));
            &Real::from_rational(&q, prec) * &apow
        } else {
            // zeta(2k) (2k-1)! / ((2r+2k)! (2d)^2k) * 4, which equals the B* term above
            let (zc, _) = zeta_even(k).expect("k >= 1").as_monomial().expect("monomial");
            let q = zc
                * rat(factorial(2 * k - 1) * 4, factorial(2 * r + 2 * k) * big(2 * d as u64).pow(2 * k));
            &Real::from_rational(&q, prec) * &zeta_pi_pow
        };
        ksum = &ksum + &t;
    }
    let tail = &pre * &ksum;
    total = if sign > 0 { &total + &tail } else { &total - &tail };

    let own = pre_f * k_tail_bound(r, d, kk);
    let rounding = 2f64.powi(-(prec as i32 - 8)) * (kk as f64 + 10.0 * r as f64);
    Ok(SeriesApprox { value: total, tail_bound: own + inherited + rounding, terms_used: kk as usize })
}

/// zeta(2r+1) by `method`; the lower odd values come from the same method.
pub fn zeta_odd(r: u32, method: ZetaMethod, ctx: &PrecisionContext) -> Result<SeriesApprox, ZetaError> {
    Ok(zeta_odd_all(r, method, ctx)?.pop().expect("r >= 1"))
}

/// zeta(3), zeta(5), ..., zeta(2r+1).
pub fn zeta_odd_all(r: u32, method: ZetaMethod, ctx: &PrecisionContext) -> Result<Vec<SeriesApprox>, ZetaError> {
    if r == 0 {
        return Err(ZetaError::Index(r));
    }
    ctx.check()?;
    let mut out: Vec<SeriesApprox> = Vec::with_capacity(r as usize);
    for level in 1..=r {
        let v = zeta_odd_level(level, method, &out, ctx)?;
        out.push(v);
    }
    Ok(out)
}

/// eta(2r+1) = (2^2r - 1)/2^2r zeta(2r+1).
pub fn eta_odd(r: u32, method: ZetaMethod, ctx: &PrecisionContext) -> Result<SeriesApprox, ZetaError> {
    let z = zeta_odd(r, method, ctx)?;
    let prec = ctx.prec();
    let f = Real::from_rational(&rat((big(1) << (2 * r)) - 1, big(1) << (2 * r)), prec);
    Ok(SeriesApprox { value: &f * &z.value, tail_bound: f.to_f64() * z.tail_bound, terms_used: z.terms_used })
}

/// zeta(3) = 6pi^2/35 - 4pi^2/35 ln(pi/2) + pi^2/35 sum B*_k pi^2k / (k 4^(k-1) (2k+2)!).
pub fn zeta3_closed_series(ctx: &PrecisionContext) -> Result<SeriesApprox, ZetaError> {
    ctx.check()?;
    let prec = ctx.prec();
    let pi = Real::pi(prec);
    let pi2 = &pi * &pi;
    let c35 = Real::from_i64(35, prec);
    let base = &(&pi2 / &c35) * &(&Real::from_i64(6, prec) - &(&Real::from_i64(4, prec) * &pi.mul_pow2(-1).ln()));
    let pre_f = (pi2.to_f64() / 35.0) * 4.0;
    let mut kk = 0;
    // B*_k pi^2k/(k 4^(k-1) (2k+2)!) = 4 B*_k (pi/2)^2k/(k (2k+2)!)
    while pre_f * k_tail_bound(1, 2, kk) > ctx.target / 4.0 {
        kk += 1;
    }
    let mut sum = Real::zero(prec);
    let mut pk = Real::from_i64(1, prec);
    for k in 1..=kk {
        pk = &pk * &pi2;
        let q = bernoulli_star(k).expect("k >= 1")
            / BigRational::from_integer(big(k as u64) * (big(1) << (2 * k - 2)) * factorial(2 * k + 2));
        sum = &sum + &(&Real::from_rational(&q, prec) * &pk);
    }
    let value = &base + &(&(&pi2 / &c35) * &sum);
    Ok(SeriesApprox { value, tail_bound: pre_f * k_tail_bound(1, 2, kk), terms_used: kk as usize })
}
