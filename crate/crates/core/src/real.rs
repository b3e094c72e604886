//! Arbitrary-precision binary floating point on top of `num-bigint`.
//!
//! A `Real` is `mant * 2^exp` with `|mant| < 2^prec`. Transcendental functions
//! work in fixed point with guard bits and round once at the end.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

const GUARD: u32 = 32;

#[derive(Clone, Debug)]
pub struct Real {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

/// Bits needed for `digits` decimal digits, plus a little slack.
pub fn bits_for_digits(digits: u32) -> u32 {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as u32 + 8
}

fn round_shr(m: &BigInt, shift: u64) -> BigInt {
    if shift == 0 {
        return m.clone();
    }
    let half = BigInt::one() << (shift - 1);
    if m.is_negative() {
        -((-m + half) >> shift)
    } else {
        (m + half) >> shift
    }
}

fn bitlen(m: &BigInt) -> u64 {
    m.bits()
}

impl Real {
    fn make(mant: BigInt, exp: i64, prec: u32) -> Real {
        let b = bitlen(&mant);
        if b > prec as u64 {
            let shift = b - prec as u64;
            let mut m = round_shr(&mant, shift);
            let mut e = exp + shift as i64;
            if bitlen(&m) > prec as u64 {
                m >>= 1;
                e += 1;
            }
            Real {
                mant: m,
                exp: e,
                prec,
            }
        } else if mant.is_zero() {
            Real { mant, exp: 0, prec }
        } else {
            Real { mant, exp, prec }
        }
    }

    pub fn zero(prec: u32) -> Real {
        Real {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn from_i64(v: i64, prec: u32) -> Real {
        Real::make(BigInt::from(v), 0, prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Real {
        Real::make(v.clone(), 0, prec)
    }

    pub fn from_f64(v: f64, prec: u32) -> Real {
        assert!(v.is_finite(), "non-finite f64");
        if v == 0.0 {
            return Real::zero(prec);
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, ex) = if e == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), e - 1075)
        };
        Real::make(BigInt::from(m) * sign, ex, prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Real {
        let n = q.numer();
        let d = q.denom();
        if n.is_zero() {
            return Real::zero(prec);
        }
        let shift = (prec as i64 + 2 + bitlen(d) as i64 - bitlen(n) as i64).max(0) as u64;
        let quot = (n << shift) / d;
        Real::make(quot, -(shift as i64), prec)
    }

    /// Parse a plain decimal such as "-1.2020569"; None on malformed input.
    pub fn from_decimal_str(s: &str, prec: u32) -> Option<Real> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
        if ip.is_empty() && fp.is_empty() {
            return None;
        }
        if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("0{ip}{fp}").parse().ok()?;
        let q = BigRational::new(digits, BigInt::from(10).pow(fp.len() as u32));
        let r = Real::from_rational(&q, prec);
        Some(if neg { -r } else { r })
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Real {
        Real::make(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Real {
        Real {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// floor(log2 |x|); None for zero.
    pub fn ilog2(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(bitlen(&self.mant) as i64 - 1 + self.exp)
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Real {
        if self.is_zero() {
            return self.clone();
        }
        Real {
            mant: self.mant.clone(),
            exp: self.exp + k,
            prec: self.prec,
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = bitlen(&self.mant) as i64;
        let shift = (b - 60).max(0);
        let m = round_shr(&self.mant, shift as u64).to_f64().unwrap_or(0.0);
        let e = self.exp + shift;
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        m * 2f64.powi(e as i32)
    }

    /// round(self * 2^w) as an integer.
    pub fn to_fixed(&self, w: i64) -> BigInt {
        let e = self.exp + w;
        if e >= 0 {
            &self.mant << e as u64
        } else {
            round_shr(&self.mant, (-e) as u64)
        }
    }

    pub fn from_fixed(v: BigInt, w: i64, prec: u32) -> Real {
        Real::make(v, -w, prec)
    }

    /// Nearest integer.
    pub fn round_int(&self) -> BigInt {
        self.to_fixed(0)
    }

    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            self.mant.div_floor(&(BigInt::one() << (-self.exp) as u64))
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn powi(&self, n: i64) -> Real {
        let mut result = Real::from_i64(1, self.prec);
        let mut base = self.with_prec(self.prec + GUARD);
        let mut k = n.unsigned_abs();
        let mut acc = result.with_prec(self.prec + GUARD);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        if n < 0 {
            acc = &Real::from_i64(1, acc.prec) / &acc;
        }
        result = acc.with_prec(self.prec);
        result
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "sqrt of negative Real");
        if self.is_zero() {
            return self.clone();
        }
        let p = self.prec as i64;
        // want mant' with ~2p+4 bits and even exponent
        let mut e = self.exp;
        let mut m = self.mant.clone();
        let target = 2 * p + 4 - bitlen(&m) as i64;
        let mut shift = target.max(0);
        if (e - shift) % 2 != 0 {
            shift += 1;
        }
        m <<= shift as u64;
        e -= shift;
        Real::make(m.sqrt(), e / 2, self.prec)
    }

    pub fn pi(prec: u32) -> Real {
        cached_const(&PI_CACHE, prec, pi_fixed)
    }

    pub fn ln2(prec: u32) -> Real {
        cached_const(&LN2_CACHE, prec, ln2_fixed)
    }

    pub fn exp(&self) -> Real {
        let prec = self.prec;
        if self.is_zero() {
            return Real::from_i64(1, prec);
        }
        let mag = self.ilog2().unwrap().max(0) as u32;
        let wp = prec + GUARD + mag;
        let ln2 = Real::ln2(wp + 64);
        let k = (&self.with_prec(wp + 64) / &ln2).round_int();
        let kr = Real::from_bigint(&k, wp + 64);
        let r = &self.with_prec(wp + 64) - &(&kr * &ln2);
        let halvings = ((prec as f64).sqrt() / 2.0) as u32 + 4;
        let w = (wp + halvings + 16) as i64;
        let x = r.to_fixed(w - halvings as i64);
        let one = BigInt::one() << w as u64;
        let mut sum = one.clone();
        let mut term = one.clone();
        let mut n = 1u64;
        loop {
            term = (&term * &x >> w as u64) / n;
            if term.is_zero() {
                break;
            }
            sum += &term;
            n += 1;
        }
        for _ in 0..halvings {
            sum = &sum * &sum >> w as u64;
        }
        let kk = k.to_i64().expect("exp overflow");
        Real::make(sum, kk - w, prec)
    }

    pub fn ln(&self) -> Real {
        assert!(self.signum() > 0, "ln of non-positive Real");
        let prec = self.prec;
        let mut e0 = self.ilog2().unwrap();
        let wp = prec + GUARD;
        // m = x / 2^e0 in [1,2); move to [1/sqrt2, sqrt2)
        let mut m = self.mul_pow2(-e0).with_prec(wp + 16);
        if m.to_f64() > std::f64::consts::SQRT_2 {
            m = m.mul_pow2(-1);
            e0 += 1;
        }
        let one = Real::from_i64(1, wp + 16);
        let t = &(&m - &one) / &(&m + &one);
        let w = (wp + 16) as i64;
        let s = atanh_fixed(&t.to_fixed(w), w);
        let lnm = Real::from_fixed(s << 1u32, w, wp + 16);
        let res = &lnm + &(&Real::from_i64(e0, wp + 16) * &Real::ln2(wp + 16 + 64));
        res.with_prec(prec)
    }

    /// (sin x, cos x)
    pub fn sin_cos(&self) -> (Real, Real) {
        let prec = self.prec;
        if self.is_zero() {
            return (Real::zero(prec), Real::from_i64(1, prec));
        }
        let mag = self.ilog2().unwrap().max(0) as u32;
        let wp = prec + GUARD + mag;
        let half_pi = Real::pi(wp + 64).mul_pow2(-1);
        let xw = self.with_prec(wp + 64);
        let k = (&xw / &half_pi).round_int();
        let r = &xw - &(&Real::from_bigint(&k, wp + 64) * &half_pi);
        let w = (wp + 16) as i64;
        let x = r.to_fixed(w);
        let one = BigInt::one() << w as u64;
        let x2 = &x * &x >> w as u64;
        // sin
        let mut s = x.clone();
        let mut term = x.clone();
        let mut n = 1u64;
        loop {
            term = -(&term * &x2 >> w as u64) / ((n + 1) * (n + 2));
            if term.is_zero() {
                break;
            }
            s += &term;
            n += 2;
        }
        let mut c = one.clone();
        let mut term = one;
        let mut n = 0u64;
        loop {
            term = -(&term * &x2 >> w as u64) / ((n + 1) * (n + 2));
            if term.is_zero() {
                break;
            }
            c += &term;
            n += 2;
        }
        let q = k.mod_floor(&BigInt::from(4)).to_u32().unwrap();
        let (sv, cv) = match q {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        };
        (Real::from_fixed(sv, w, prec), Real::from_fixed(cv, w, prec))
    }

    pub fn sin(&self) -> Real {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Real {
        self.sin_cos().1
    }

    pub fn atan(&self) -> Real {
        let prec = self.prec;
        if self.is_zero() {
            return self.clone();
        }
        let wp = prec + GUARD;
        let neg = self.is_negative();
        let mut y = self.abs().with_prec(wp + 16);
        let one = Real::from_i64(1, wp + 16);
        let invert = y > one;
        if invert {
            y = &one / &y;
        }
        // two angle halvings: y -> y / (1 + sqrt(1+y^2))
        for _ in 0..2 {
            let d = &one + &(&one + &(&y * &y)).sqrt();
            y = &y / &d;
        }
        let w = (wp + 16) as i64;
        let x = y.to_fixed(w);
        let x2 = &x * &x >> w as u64;
        let mut sum = x.clone();
        let mut pw = x;
        let mut n = 1u64;
        loop {
            pw = -(&pw * &x2 >> w as u64);
            n += 2;
            let t = &pw / n;
            if t.is_zero() {
                break;
            }
            sum += t;
        }
        let mut r = Real::from_fixed(sum << 2u32, w, wp + 16);
        if invert {
            r = &Real::pi(wp + 16).mul_pow2(-1) - &r;
        }
        if neg {
            r = -r;
        }
        r.with_prec(prec)
    }

    /// Principal atan2 in (-pi, pi].
    pub fn atan2(y: &Real, x: &Real) -> Real {
        let prec = y.prec.max(x.prec);
        let pi = Real::pi(prec);
        match (x.signum(), y.signum()) {
            (0, 0) => Real::zero(prec),
            (0, s) => {
                let h = pi.mul_pow2(-1);
                if s > 0 {
                    h
                } else {
                    -h
                }
            }
            (1, _) => (y / x).atan(),
            (_, s) => {
                let a = (y / x).atan();
                if s >= 0 {
                    &a + &pi
                } else {
                    &a - &pi
                }
            }
        }
    }

    pub fn sinh(&self) -> Real {
        let wp = self.prec + GUARD;
        if self.abs().to_f64() < 0.5 {
            // series avoids cancellation
            let w = (wp + 16) as i64;
            let x = self.with_prec(wp + 16).to_fixed(w);
            let x2 = &x * &x >> w as u64;
            let mut s = x.clone();
            let mut term = x;
            let mut n = 1u64;
            loop {
                term = (&term * &x2 >> w as u64) / ((n + 1) * (n + 2));
                if term.is_zero() {
                    break;
                }
                s += &term;
                n += 2;
            }
            return Real::from_fixed(s, w, self.prec);
        }
        let e = self.with_prec(wp).exp();
        let r = &(&e - &(&Real::from_i64(1, wp) / &e)).mul_pow2(-1);
        r.with_prec(self.prec)
    }

    pub fn cosh(&self) -> Real {
        let wp = self.prec + GUARD;
        let e = self.with_prec(wp).exp();
        let r = (&e + &(&Real::from_i64(1, wp) / &e)).mul_pow2(-1);
        r.with_prec(self.prec)
    }

    /// ln(1+x) accurate for small x.
    pub fn ln1p(&self) -> Real {
        let wp = self.prec + GUARD;
        let x = self.with_prec(wp);
        if x.abs().to_f64() < 0.25 {
            let two = Real::from_i64(2, wp);
            let t = &x / &(&two + &x);
            let w = (wp + 16) as i64;
            let s = atanh_fixed(&t.to_fixed(w), w);
            return Real::from_fixed(s << 1u32, w, self.prec);
        }
        (&Real::from_i64(1, wp) + &x).ln().with_prec(self.prec)
    }

    /// artanh(x) for |x| < 1.
    pub fn atanh(&self) -> Real {
        let wp = self.prec + GUARD;
        let x = self.with_prec(wp);
        if x.abs().to_f64() < 0.25 {
            let w = (wp + 16) as i64;
            return Real::from_fixed(atanh_fixed(&x.to_fixed(w), w), w, self.prec);
        }
        let one = Real::from_i64(1, wp);
        (&(&one + &x) / &(&one - &x))
            .ln()
            .mul_pow2(-1)
            .with_prec(self.prec)
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let digits = digits.max(1);
        let neg = self.is_negative();
        let a = self.abs();
        let wp = a.prec.max(bits_for_digits(digits)) + 16;
        let a = a.with_prec(wp);
        let est = a.ilog2().unwrap() as f64 * std::f64::consts::LOG10_2;
        let mut e10 = est.floor() as i64;
        let mut n;
        loop {
            let k = digits as i64 - 1 - e10;
            let scaled = if k >= 0 {
                &a * &Real::from_bigint(&BigInt::from(10).pow(k as u32), wp)
            } else {
                &a / &Real::from_bigint(&BigInt::from(10).pow((-k) as u32), wp)
            };
            n = scaled.round_int();
            let len = n.to_string().len() as i64;
            if len > digits as i64 {
                e10 += 1;
            } else if len < digits as i64 {
                e10 -= 1;
            } else {
                break;
            }
        }
        let s = n.to_string();
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if (-5..digits as i64).contains(&e10) {
            if e10 >= 0 {
                let ip = (e10 + 1) as usize;
                out.push_str(&s[..ip]);
                if ip < s.len() {
                    out.push('.');
                    out.push_str(&s[ip..]);
                }
            } else {
                out.push_str("0.");
                for _ in 0..(-e10 - 1) {
                    out.push('0');
                }
                out.push_str(&s);
            }
        } else {
            out.push_str(&s[..1]);
            if s.len() > 1 {
                out.push('.');
                out.push_str(&s[1..]);
            }
            out.push_str(&format!("e{}", e10));
        }
        out
    }
}

fn atanh_fixed(t: &BigInt, w: i64) -> BigInt {
    let t2 = t * t >> w as u64;
    let mut sum = t.clone();
    let mut pw = t.clone();
    let mut n = 1u64;
    loop {
        pw = &pw * &t2 >> w as u64;
        n += 2;
        let term = &pw / n;
        if term.is_zero() {
            break;
        }
        sum += term;
    }
    sum
}

fn atan_inv_fixed(n: u64, w: i64) -> BigInt {
    let one = BigInt::one() << w as u64;
    let n2 = BigInt::from(n * n);
    let mut pw = one / n;
    let mut sum = pw.clone();
    let mut k = 1u64;
    let mut sign = -1;
    loop {
        pw = &pw / &n2;
        k += 2;
        let t = &pw / k;
        if t.is_zero() {
            break;
        }
        if sign < 0 {
            sum -= t;
        } else {
            sum += t;
        }
        sign = -sign;
    }
    sum
}

fn pi_fixed(w: i64) -> BigInt {
    (atan_inv_fixed(5, w) << 4u32) - (atan_inv_fixed(239, w) << 2u32)
}

fn ln2_fixed(w: i64) -> BigInt {
    let third = (BigInt::one() << w as u64) / 3;
    atanh_fixed(&third, w) << 1u32
}

type ConstCache = Mutex<Option<HashMap<u32, Real>>>;
static PI_CACHE: ConstCache = Mutex::new(None);
static LN2_CACHE: ConstCache = Mutex::new(None);

fn cached_const(cache: &ConstCache, prec: u32, f: fn(i64) -> BigInt) -> Real {
    let mut guard = cache.lock().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    if let Some(v) = map.get(&prec) {
        return v.clone();
    }
    let w = prec as i64 + 32;
    let v = Real::from_fixed(f(w), w, prec);
    map.insert(prec, v.clone());
    v
}

impl PartialEq for Real {
    fn eq(&self, other: &Real) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Real {}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Real) -> Ordering {
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

fn add_impl(a: &Real, b: &Real, negate_b: bool) -> Real {
    let prec = a.prec.max(b.prec);
    let bm = if negate_b { -&b.mant } else { b.mant.clone() };
    if a.is_zero() {
        return Real::make(bm, b.exp, prec);
    }
    if b.is_zero() {
        return Real::make(a.mant.clone(), a.exp, prec);
    }
    let top_a = bitlen(&a.mant) as i64 + a.exp;
    let top_b = bitlen(&b.mant) as i64 + b.exp;
    let limit = prec as i64 + 8;
    if top_a - top_b > limit + 2 && b.exp < a.exp {
        // b is below the rounding position of the result
        let sticky = if bm.is_negative() { -1 } else { 1 };
        let shift = (limit + 4 - bitlen(&a.mant) as i64).max(0) as u64;
        return Real::make((&a.mant << shift) + sticky, a.exp - shift as i64, prec);
    }
    if top_b - top_a > limit + 2 && a.exp < b.exp {
        let sticky = if a.mant.is_negative() { -1 } else { 1 };
        let shift = (limit + 4 - bitlen(&bm) as i64).max(0) as u64;
        return Real::make((&bm << shift) + sticky, b.exp - shift as i64, prec);
    }
    let e = a.exp.min(b.exp);
    let m = (&a.mant << (a.exp - e) as u64) + (bm << (b.exp - e) as u64);
    Real::make(m, e, prec)
}

impl<'a> Add<&'a Real> for &'a Real {
    type Output = Real;
    fn add(self, o: &Real) -> Real {
        add_impl(self, o, false)
    }
}

impl<'a> Sub<&'a Real> for &'a Real {
    type Output = Real;
    fn sub(self, o: &Real) -> Real {
        add_impl(self, o, true)
    }
}

impl<'a> Mul<&'a Real> for &'a Real {
    type Output = Real;
    fn mul(self, o: &Real) -> Real {
        Real::make(
            &self.mant * &o.mant,
            self.exp + o.exp,
            self.prec.max(o.prec),
        )
    }
}

impl<'a> Div<&'a Real> for &'a Real {
    type Output = Real;
    fn div(self, o: &Real) -> Real {
        assert!(!o.is_zero(), "Real division by zero");
        let prec = self.prec.max(o.prec);
        if self.is_zero() {
            return Real::zero(prec);
        }
        let shift = (prec as i64 + 4 + bitlen(&o.mant) as i64 - bitlen(&self.mant) as i64).max(0);
        let q = (&self.mant << shift as u64) / &o.mant;
        Real::make(q, self.exp - shift - o.exp, prec)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            mant: -self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2)
            .floor()
            .max(1.0) as u32;
        write!(f, "{}", self.to_decimal(digits.min(40)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 200;

    fn close(a: &Real, b: &Real, tol: f64) -> bool {
        (a - b).abs().to_f64() <= tol
    }

    #[test]
    fn pi_digits() {
        let s = Real::pi(P).to_decimal(50);
        assert_eq!(s, "3.1415926535897932384626433832795028841971693993751");
    }

    #[test]
    fn ln2_digits() {
        assert_eq!(
            Real::ln2(P).to_decimal(30),
            "0.693147180559945309417232121458"
        );
    }

    #[test]
    fn exp_of_one() {
        let e = Real::from_i64(1, P).exp();
        assert_eq!(
            e.to_decimal(40),
            "2.718281828459045235360287471352662497757"
        );
    }

    #[test]
    fn exp_ln_roundtrip() {
        for v in [0.001, 0.5, 1.0, 3.7, 100.0, 1e-30] {
            let x = Real::from_f64(v, P);
            let y = x.ln().exp();
            assert!(close(&x, &y, v * 1e-55), "{v}");
        }
    }

    #[test]
    fn sin_cos_identities() {
        for v in [-7.0, -1.0, 0.3, 1.57, 2.0, 10.0, 1000.0] {
            let x = Real::from_f64(v, P);
            let (s, c) = x.sin_cos();
            let one = &(&s * &s) + &(&c * &c);
            assert!(close(&one, &Real::from_i64(1, P), 1e-55));
            assert!((s.to_f64() - v.sin()).abs() < 1e-12);
            assert!((c.to_f64() - v.cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn atan_matches_f64_and_pi() {
        let one = Real::from_i64(1, P);
        assert!(close(&one.atan().mul_pow2(2), &Real::pi(P), 1e-55));
        for v in [-50.0, -1.2, 0.1, 0.9, 3.0] {
            assert!((Real::from_f64(v, P).atan().to_f64() - f64::atan(v)).abs() < 1e-15);
        }
    }

    #[test]
    fn sqrt_two() {
        let r = Real::from_i64(2, P).sqrt();
        assert_eq!(r.to_decimal(30), "1.41421356237309504880168872421");
    }

    #[test]
    fn decimal_formats() {
        assert_eq!(Real::from_f64(0.00125, 64).to_decimal(3), "0.00125");
        assert_eq!(Real::from_f64(-12.5, 64).to_decimal(4), "-12.50");
        assert_eq!(Real::from_f64(1.5e-9, 64).to_decimal(2), "1.5e-9");
    }

    #[test]
    fn hyperbolic() {
        let x = Real::from_f64(0.3, P);
        let c = x.cosh();
        let s = x.sinh();
        assert!(close(
            &(&(&c * &c) - &(&s * &s)),
            &Real::from_i64(1, P),
            1e-55
        ));
        assert!((x.atanh().to_f64() - 0.3f64.atanh()).abs() < 1e-16);
    }
}
