//! Exact rational values: B*, Euler numbers, harmonic numbers and the
//! even/odd Dirichlet series that are rational multiples of a power of pi.
//!
//! `bernoulli_star(k)` is |B_2k| in the classical signed convention, so
//! zeta(2k) = 2^(2k-1) B*_k pi^(2k) / (2k)!.

mod pipoly;

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use pipoly::{PiPolyParseError, PiPolynomial};

pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("{func}: index {index} is out of range (needs {need})")]
    Index { func: &'static str, index: i64, need: &'static str },
}

fn need(func: &'static str, index: u32, min: u32, what: &'static str) -> Result<(), ExactError> {
    if index < min {
        Err(ExactError::Index { func, index: index as i64, need: what })
    } else {
        Ok(())
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn inv_fact(n: u32) -> BigRational {
    BigRational::new(BigInt::one(), factorial(n))
}

fn sign(k: u32) -> BigRational {
    if k % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// 1/2^bits
fn inv_pow2(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Write-once sequence cache, filled in index order under a lock.
struct Memo(Mutex<Vec<BigRational>>);

impl Memo {
    const fn new() -> Memo {
        Memo(Mutex::new(Vec::new()))
    }

    fn get(&self, n: usize, next: impl Fn(&[BigRational], usize) -> BigRational) -> BigRational {
        let mut v = self.0.lock().unwrap_or_else(|p| p.into_inner());
        while v.len() <= n {
            let i = v.len();
            let x = next(&v, i);
            v.push(x);
        }
        v[n].clone()
    }
}

static BSTAR: Memo = Memo::new();
static EULER: Memo = Memo::new();
static ZETA34: Memo = Memo::new();
static ZETA35: Memo = Memo::new();
static ETA: Memo = Memo::new();
static LAMBDA_REC: Memo = Memo::new();
static FRAKD_LAMBDA: Memo = Memo::new();
static FRAKD_ZETA: Memo = Memo::new();
static CALD_BETA: Memo = Memo::new();

/// B*_k from sum_{j<r} (-1)^j C(2r+1, 2j+1) B*_{j+1} = 1/2.
pub fn bernoulli_star(k: u32) -> Result<ExactRational, ExactError> {
    need("bernoulli_star", k, 1, "k >= 1")?;
    Ok(BSTAR.get(k as usize, |b, r| {
        if r == 0 {
            return BigRational::zero();
        }
        let r = r as u32;
        let mut rhs = BigRational::new(1.into(), 2.into());
        for j in 0..r - 1 {
            rhs -= sign(j) * int(binomial(2 * r + 1, 2 * j + 1)) * &b[j as usize + 1];
        }
        rhs / (sign(r - 1) * int(binomial(2 * r + 1, 2 * r - 1)))
    }))
}

/// E_n for even n, with E_0 = 1 and sum_{k<r} C(2r, 2k) E_{2r-2k} = -1.
pub fn euler_number(n: u32) -> Result<BigInt, ExactError> {
    if n % 2 == 1 {
        return Err(ExactError::Index { func: "euler_number", index: n as i64, need: "even n" });
    }
    let e = EULER.get(n as usize / 2, |e, r| {
        if r == 0 {
            return BigRational::one();
        }
        let r = r as u32;
        let mut acc = -BigRational::one();
        for k in 1..r {
            acc -= int(binomial(2 * r, 2 * k)) * &e[(r - k) as usize];
        }
        acc
    });
    Ok(e.to_integer())
}

pub fn harmonic(m: u32) -> Result<ExactRational, ExactError> {
    need("harmonic", m, 1, "m >= 1")?;
    Ok((1..=m).map(|k| BigRational::new(1.into(), k.into())).sum())
}

/// Value of the m-fold integral of ln over [0, x]: x^m/m! (ln x - H_m).
pub fn iterated_log_integral(m: u32, x: f64) -> Result<f64, ExactError> {
    use num_traits::ToPrimitive;
    let h = harmonic(m)?.to_f64().unwrap_or(f64::NAN);
    let f = factorial(m).to_f64().unwrap_or(f64::INFINITY);
    Ok(x.powi(m as i32) / f * (x.ln() - h))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaPath {
    /// 2^(2r-1) B*_r / (2r)!
    Bernoulli,
    /// recurrence from the cosine series of 1/n^2r at x = c
    HalfPeriod,
    /// recurrence at x = 2c
    FullPeriod,
}

fn zeta_coeff(r: u32) -> BigRational {
    let b = bernoulli_star(r).expect("r >= 1");
    int(BigInt::one() << (2 * r - 1)) * b * inv_fact(2 * r)
}

fn zeta_coeff_by(r: u32, path: ZetaPath) -> BigRational {
    match path {
        ZetaPath::Bernoulli => zeta_coeff(r),
        ZetaPath::HalfPeriod => ZETA34.get(r as usize, |a, r| {
            if r == 0 {
                return BigRational::zero();
            }
            let r = r as u32;
            let mut acc = sign(r - 1) * int(r) * inv_fact(2 * r + 1);
            for k in 1..r {
                acc -= sign(k) * inv_fact(2 * k + 1) * &a[(r - k) as usize];
            }
            acc
        }),
        ZetaPath::FullPeriod => ZETA35.get(r as usize, |a, r| {
            if r == 0 {
                return BigRational::zero();
            }
            let r = r as u32;
            let mut acc = sign(r - 1) * int(BigInt::one() << (2 * r)) * int(2 * r - 1) * inv_fact(2 * r + 1)
                / int(4);
            for k in 1..r {
                acc -= sign(k) * int(BigInt::one() << (2 * k)) * inv_fact(2 * k + 1) * &a[(r - k) as usize];
            }
            acc
        }),
    }
}

pub fn zeta_even(r: u32) -> Result<PiPolynomial, ExactError> {
    zeta_even_by(r, ZetaPath::Bernoulli)
}

pub fn zeta_even_by(r: u32, path: ZetaPath) -> Result<PiPolynomial, ExactError> {
    need("zeta_even", r, 1, "r >= 1")?;
    Ok(PiPolynomial::monomial(zeta_coeff_by(r, path), 2 * r))
}

/// eta(2r) from sum (-1)^k pi^2k/(2k+1)! eta(2r-2k) = (-1)^(r-1) pi^2r / (2 (2r+1)!).
pub fn eta_even(r: u32) -> Result<PiPolynomial, ExactError> {
    need("eta_even", r, 1, "r >= 1")?;
    let a = ETA.get(r as usize, |e, r| {
        if r == 0 {
            return BigRational::zero();
        }
        let r = r as u32;
        let mut acc = sign(r - 1) * inv_fact(2 * r + 1) / int(2);
        for k in 1..r {
            acc -= sign(k) * inv_fact(2 * k + 1) * &e[(r - k) as usize];
        }
        acc
    });
    Ok(PiPolynomial::monomial(a, 2 * r))
}

fn lambda_coeff(r: u32) -> BigRational {
    (BigRational::one() - inv_pow2(2 * r)) * zeta_coeff(r)
}

/// lambda(2r) = (1 - 2^-2r) zeta(2r).
pub fn lambda_even(r: u32) -> Result<PiPolynomial, ExactError> {
    need("lambda_even", r, 1, "r >= 1")?;
    Ok(PiPolynomial::monomial(lambda_coeff(r), 2 * r))
}

/// lambda(2r) solved from its own recurrence at x = c/2.
pub fn lambda_even_recurrence(r: u32) -> Result<PiPolynomial, ExactError> {
    need("lambda_even_recurrence", r, 1, "r >= 1")?;
    let a = LAMBDA_REC.get(r as usize, |l, r| {
        if r == 0 {
            return BigRational::zero();
        }
        let r = r as u32;
        let mut acc = sign(r - 1) * inv_fact(2 * r - 1) * inv_pow2(2 * r) / int(2);
        for k in 1..r {
            acc -= sign(k) * inv_pow2(2 * k) * inv_fact(2 * k) * &l[(r - k) as usize];
        }
        acc
    });
    Ok(PiPolynomial::monomial(a, 2 * r))
}

fn beta_coeff(k: u32) -> BigRational {
    let e = euler_number(2 * k).expect("even");
    sign(k) * int(e) * inv_pow2(2 * k + 2) * inv_fact(2 * k)
}

/// beta(2k+1) = (-1)^k E_2k pi^(2k+1) / (4^(k+1) (2k)!).
pub fn beta_odd(k: u32) -> Result<PiPolynomial, ExactError> {
    Ok(PiPolynomial::monomial(beta_coeff(k), 2 * k + 1))
}

/// Residual of the beta recurrence at x = c/2, for r >= 1.
pub fn beta_recurrence_residual(r: u32) -> Result<ExactRational, ExactError> {
    need("beta_recurrence_residual", r, 1, "r >= 1")?;
    let mut lhs = BigRational::zero();
    for k in 0..r {
        lhs += sign(k) * inv_pow2(2 * k) * inv_fact(2 * k) * beta_coeff(r - k);
    }
    let rhs = sign(r - 1) * inv_fact(2 * r) * inv_pow2(2 * r) / int(4);
    Ok(lhs - rhs)
}

/// Residual of sum_{k<r} C(2r, 2k) E_{2r-2k} = -1.
pub fn euler_recurrence_residual(r: u32) -> Result<BigInt, ExactError> {
    need("euler_recurrence_residual", r, 1, "r >= 1")?;
    let mut acc = BigInt::zero();
    for k in 0..r {
        acc += binomial(2 * r, 2 * k) * euler_number(2 * r - 2 * k)?;
    }
    Ok(acc + 1)
}

/// Residual of the lambda recurrence at x = c/2 using lambda = (1 - 2^-2r) zeta.
pub fn lambda_recurrence_residual(r: u32) -> Result<ExactRational, ExactError> {
    need("lambda_recurrence_residual", r, 1, "r >= 1")?;
    let mut lhs = BigRational::zero();
    for k in 0..r {
        lhs += sign(k) * inv_pow2(2 * k) * inv_fact(2 * k) * lambda_coeff(r - k);
    }
    let rhs = sign(r - 1) * inv_fact(2 * r - 1) * inv_pow2(2 * r) / int(2);
    Ok(lhs - rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrakDPath {
    /// right-hand side lambda(2r)/2
    Lambda,
    /// right-hand side (2^2r - 1)/2^(2r+1) zeta(2r)
    Zeta,
}

/// frakD(2r) = (1/sqrt 2) sum (-1)^[n/2] / (2n-1)^2r.
pub fn frak_d(r: u32) -> Result<PiPolynomial, ExactError> {
    frak_d_by(r, FrakDPath::Lambda)
}

pub fn frak_d_by(r: u32, path: FrakDPath) -> Result<PiPolynomial, ExactError> {
    need("frak_d", r, 1, "r >= 1")?;
    let next = |d: &[BigRational], r: usize, rhs: BigRational| {
        if r == 0 {
            return BigRational::zero();
        }
        let r = r as u32;
        let mut acc = rhs;
        for k in 1..r {
            acc -= sign(k) * inv_pow2(4 * k) * inv_fact(2 * k) * &d[(r - k) as usize];
        }
        acc
    };
    let a = match path {
        FrakDPath::Lambda => FRAKD_LAMBDA.get(r as usize, |d, i| {
            let rhs = if i == 0 { BigRational::zero() } else { lambda_coeff(i as u32) / int(2) };
            next(d, i, rhs)
        }),
        FrakDPath::Zeta => FRAKD_ZETA.get(r as usize, |d, i| {
            let rhs = if i == 0 {
                BigRational::zero()
            } else {
                let i = i as u32;
                int((BigInt::one() << (2 * i)) - 1) * inv_pow2(2 * i + 1) * zeta_coeff(i)
            };
            next(d, i, rhs)
        }),
    };
    Ok(PiPolynomial::monomial(a, 2 * r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CalDPath {
    /// finite sum over lambda(2r-2k)
    Direct,
    /// recurrence with beta(2r+1)/2 on the right
    Beta,
}

fn cal_d_direct(r: u32) -> BigRational {
    let mut acc = sign(r) * inv_fact(2 * r) * inv_pow2(4 * r + 2);
    for k in 0..r {
        acc += sign(k) * inv_fact(2 * k + 1) * inv_pow2(4 * k + 2) * lambda_coeff(r - k);
    }
    acc
}

/// calD(2r+1) = (1/sqrt 2) sum_{n>=0} (-1)^[n/2] / (2n+1)^(2r+1).
pub fn cal_d(r: u32) -> Result<PiPolynomial, ExactError> {
    cal_d_by(r, CalDPath::Direct)
}

pub fn cal_d_by(r: u32, path: CalDPath) -> Result<PiPolynomial, ExactError> {
    let a = match path {
        CalDPath::Direct => cal_d_direct(r),
        CalDPath::Beta => CALD_BETA.get(r as usize, |d, r| {
            if r == 0 {
                return BigRational::new(1.into(), 4.into());
            }
            let r = r as u32;
            let mut acc = beta_coeff(r) / int(2);
            for k in 1..=r {
                acc -= sign(k) * inv_pow2(4 * k) * inv_fact(2 * k) * &d[(r - k) as usize];
            }
            acc
        }),
    };
    Ok(PiPolynomial::monomial(a, 2 * r + 1))
}

/// Residual of lambda(2r)/2 = sum (-1)^k (pi/4)^(2k+1)/(2k+1)! calD(2r-1-2k).
pub fn cal_d_lambda_residual(r: u32) -> Result<ExactRational, ExactError> {
    need("cal_d_lambda_residual", r, 1, "r >= 1")?;
    let mut acc = BigRational::zero();
    for k in 0..r {
        acc += sign(k) * inv_fact(2 * k + 1) * inv_pow2(4 * k + 2) * cal_d_direct(r - 1 - k);
    }
    Ok(acc - lambda_coeff(r) / int(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn mono(n: i64, d: i64, k: u32) -> PiPolynomial {
        PiPolynomial::monomial(q(n, d), k)
    }

    #[test]
    fn bernoulli_small() {
        assert_eq!(bernoulli_star(1).unwrap(), q(1, 6));
        assert_eq!(bernoulli_star(2).unwrap(), q(1, 30));
        assert_eq!(bernoulli_star(3).unwrap(), q(1, 42));
        assert_eq!(bernoulli_star(6).unwrap(), q(691, 2730));
        assert!(bernoulli_star(0).is_err());
    }

    #[test]
    fn euler_small() {
        assert_eq!(euler_number(0).unwrap(), 1.into());
        assert_eq!(euler_number(2).unwrap(), (-1).into());
        assert_eq!(euler_number(4).unwrap(), 5.into());
        assert_eq!(euler_number(10).unwrap(), (-50521).into());
        assert!(euler_number(3).is_err());
    }

    #[test]
    fn zeta_eta_lambda_beta() {
        assert_eq!(zeta_even(1).unwrap(), mono(1, 6, 2));
        assert_eq!(zeta_even(2).unwrap(), mono(1, 90, 4));
        assert_eq!(zeta_even(3).unwrap(), mono(1, 945, 6));
        assert_eq!(eta_even(1).unwrap(), mono(1, 12, 2));
        assert_eq!(eta_even(2).unwrap(), mono(7, 720, 4));
        assert_eq!(lambda_even(1).unwrap(), mono(1, 8, 2));
        assert_eq!(lambda_even(2).unwrap(), mono(1, 96, 4));
        assert_eq!(lambda_even(3).unwrap(), mono(1, 960, 6));
        assert_eq!(beta_odd(0).unwrap(), mono(1, 4, 1));
        assert_eq!(beta_odd(1).unwrap(), mono(1, 32, 3));
        assert_eq!(beta_odd(2).unwrap(), mono(5, 1536, 5));
    }

    #[test]
    fn frak_and_cal_d() {
        assert_eq!(frak_d(1).unwrap(), mono(1, 16, 2));
        assert_eq!(frak_d(2).unwrap(), mono(11, 1536, 4));
        assert_eq!(frak_d(3).unwrap(), mono(361, 491520, 6));
        assert_eq!(cal_d(0).unwrap(), mono(1, 4, 1));
        assert_eq!(cal_d(1).unwrap(), mono(3, 128, 3));
        assert_eq!(cal_d(2).unwrap(), mono(57, 24576, 5));
        assert_eq!(cal_d(3).unwrap(), mono(307, 1310720, 7));
    }

    #[test]
    fn harmonic_small() {
        assert_eq!(harmonic(1).unwrap(), q(1, 1));
        assert_eq!(harmonic(2).unwrap(), q(3, 2));
        assert_eq!(harmonic(4).unwrap(), q(25, 12));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), 120.into());
        assert_eq!(binomial(3, 5), 0.into());
    }

    #[test]
    fn json_roundtrip() {
        let p = zeta_even(4).unwrap().add(&PiPolynomial::constant(q(-3, 7)));
        let s = p.to_json();
        assert_eq!(PiPolynomial::from_json(&s).unwrap(), p);
        assert_eq!(zeta_even(1).unwrap().to_json(), r#"{"terms":[{"power":2,"num":"1","den":"6"}]}"#);
        assert_eq!(p.to_string(), "1/9450*pi^8 - 3/7");
    }
}
