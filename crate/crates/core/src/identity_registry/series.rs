//! Series side of an identity: term rules and compensated partial sums.

use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::closed::Radical;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trig {
    Cos,
    Sin,
    /// no x dependence
    One,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Denom {
    /// m^s with m the frequency
    Power(u32),
    /// (3n - 1)(3n + 1)
    ThirdsProduct,
}

/// scale * sum_{n>=start} sign(n) / denom * trig(m u) * prod_i cos(m pi q_i),
/// with frequency m = mul * n + add.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigTerm {
    pub start: u64,
    pub mul: u64,
    pub add: i64,
    /// periodic in n - start
    pub signs: Vec<i8>,
    pub denom: Denom,
    pub trig: Trig,
    pub scale: Radical,
    /// x0/c of every shift applied so far
    pub shifts: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesTerm {
    Trig(TrigTerm),
    /// sum_{n>=1} sin(n u) cos^n(u) / n
    CosPower,
}

impl TrigTerm {
    pub fn new(start: u64, mul: u64, add: i64, signs: &[i8], denom: Denom, trig: Trig) -> TrigTerm {
        TrigTerm { start, mul, add, signs: signs.to_vec(), denom, trig, scale: Radical::One, shifts: Vec::new() }
    }

    pub fn with_scale(mut self, s: Radical) -> TrigTerm {
        self.scale = s;
        self
    }

    fn freq(&self, n: u64) -> f64 {
        (self.mul as i64 * n as i64 + self.add) as f64
    }

    fn sign(&self, n: u64) -> f64 {
        self.signs[((n - self.start) % self.signs.len() as u64) as usize] as f64
    }

    /// cos(pi t) for t reduced mod 2 before scaling by pi.
    fn cos_pi(t: f64) -> f64 {
        (PI * t.rem_euclid(2.0)).cos()
    }

    fn sin_pi(t: f64) -> f64 {
        (PI * t.rem_euclid(2.0)).sin()
    }

    /// Term n at x/c = y.
    pub fn term(&self, n: u64, y: f64) -> f64 {
        let s = self.sign(n);
        if s == 0.0 {
            return 0.0;
        }
        let m = self.freq(n);
        let d = match self.denom {
            Denom::Power(p) => m.powi(p as i32),
            Denom::ThirdsProduct => (3.0 * n as f64 - 1.0) * (3.0 * n as f64 + 1.0),
        };
        let t = match self.trig {
            Trig::Cos => Self::cos_pi(m * y),
            Trig::Sin => Self::sin_pi(m * y),
            Trig::One => 1.0,
        };
        let mut shift = 1.0;
        for q in &self.shifts {
            shift *= Self::cos_pi(m * q.to_f64().unwrap_or(f64::NAN));
        }
        s * t * shift / d
    }

    /// Integral bound on the sum of |coefficient| over the terms after the first `terms`.
    pub fn abs_tail(&self, terms: u64) -> f64 {
        let n = (self.start + terms) as f64;
        let scale = self.scale.to_f64();
        match self.denom {
            Denom::Power(s) if s >= 2 => {
                let m = (self.mul as f64 * (n - 1.0) + self.add as f64).max(1.0);
                scale * m.powi(1 - s as i32) / (self.mul as f64 * (s as f64 - 1.0))
            }
            Denom::ThirdsProduct => scale / (8.0 * (n - 1.0).max(1.0)),
            _ => f64::INFINITY,
        }
    }
}

impl SeriesTerm {
    /// Partial sum of the first `terms` terms at x/c = y, Neumaier-compensated.
    pub fn partial_sum(&self, y: f64, terms: u64) -> f64 {
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut push = |t: f64| {
            let s = sum + t;
            if sum.abs() >= t.abs() {
                comp += (sum - s) + t;
            } else {
                comp += (t - s) + sum;
            }
            sum = s;
        };
        match self {
            SeriesTerm::Trig(t) => {
                for n in t.start..t.start + terms {
                    push(t.term(n, y));
                }
                (sum + comp) * t.scale.to_f64()
            }
            SeriesTerm::CosPower => {
                let u = PI * y;
                let cu = u.cos();
                let mut p = 1.0;
                for n in 1..=terms {
                    p *= cu;
                    push(TrigTerm::sin_pi(n as f64 * y) * p / n as f64);
                    if p == 0.0 {
                        break;
                    }
                }
                sum + comp
            }
        }
    }
}
