use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::real::Real;

/// Finite sum of a_K pi^K with rational a_K.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PiPolynomial {
    terms: BTreeMap<u32, BigRational>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    power: u32,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

#[derive(Debug, Error)]
pub enum PiPolyParseError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("bad integer {0:?}")]
    Integer(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

impl PiPolynomial {
    pub fn zero() -> PiPolynomial {
        PiPolynomial::default()
    }

    pub fn constant(q: BigRational) -> PiPolynomial {
        PiPolynomial::monomial(q, 0)
    }

    pub fn monomial(q: BigRational, power: u32) -> PiPolynomial {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(power, q);
        }
        PiPolynomial { terms }
    }

    pub fn pi() -> PiPolynomial {
        PiPolynomial::monomial(BigRational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, power: u32) -> BigRational {
        self.terms.get(&power).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    /// (a, K) when the polynomial is the single term a pi^K.
    pub fn as_monomial(&self) -> Option<(BigRational, u32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, v)| (v.clone(), *k))
        } else {
            None
        }
    }

    pub fn add(&self, o: &PiPolynomial) -> PiPolynomial {
        let mut terms = self.terms.clone();
        for (k, v) in &o.terms {
            let e = terms.entry(*k).or_insert_with(BigRational::zero);
            *e += v;
            if e.is_zero() {
                terms.remove(k);
            }
        }
        PiPolynomial { terms }
    }

    pub fn neg(&self) -> PiPolynomial {
        PiPolynomial { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    pub fn sub(&self, o: &PiPolynomial) -> PiPolynomial {
        self.add(&o.neg())
    }

    pub fn scale(&self, q: &BigRational) -> PiPolynomial {
        if q.is_zero() {
            return PiPolynomial::zero();
        }
        PiPolynomial { terms: self.terms.iter().map(|(k, v)| (*k, v * q)).collect() }
    }

    pub fn mul(&self, o: &PiPolynomial) -> PiPolynomial {
        let mut acc = PiPolynomial::zero();
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                acc = acc.add(&PiPolynomial::monomial(a * b, i + j));
            }
        }
        acc
    }

    pub fn eval_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(k, v)| v.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(*k as i32))
            .sum()
    }

    pub fn eval_real(&self, prec: u32) -> Real {
        let pi = Real::pi(prec);
        let mut acc = Real::zero(prec);
        for (k, v) in &self.terms {
            acc = &acc + &(&Real::from_rational(v, prec) * &pi.powi(*k as i64));
        }
        acc
    }

    pub fn to_json(&self) -> String {
        let p = PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| TermJson { power: *k, num: v.numer().to_string(), den: v.denom().to_string() })
                .collect(),
        };
        serde_json::to_string(&p).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<PiPolynomial, PiPolyParseError> {
        let p: PolyJson = serde_json::from_str(s)?;
        let int = |s: &str| s.parse::<BigInt>().map_err(|_| PiPolyParseError::Integer(s.to_string()));
        let mut acc = PiPolynomial::zero();
        for t in p.terms {
            let d = int(&t.den)?;
            if d.is_zero() {
                return Err(PiPolyParseError::ZeroDenominator);
            }
            acc = acc.add(&PiPolynomial::monomial(BigRational::new(int(&t.num)?, d), t.power));
        }
        Ok(acc)
    }
}

impl fmt::Display for PiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().rev().enumerate() {
            let sign = if v.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = v.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*pi")?,
                _ => write!(f, "{a}*pi^{k}")?,
            }
        }
        Ok(())
    }
}
