//! Numeric evaluation: arbitrary precision real and complex, plus fast f64
//! paths used for scanning and partial sums.
//!
//! `eval_complex` takes the real code path whenever an argument has an exactly
//! zero imaginary part and lies in the real domain, so on the real axis it
//! agrees bit for bit with `eval_real`.

use std::collections::HashMap;

use num_complex::Complex64;
use thiserror::Error;

use super::{Expr, Func, Node};
use crate::real::{bits_for_digits, Real};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unbound symbol '{0}'")]
    UnboundSymbol(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{func}: argument outside the real domain")]
    Domain { func: &'static str },
    #[error("{func}: argument on a branch cut")]
    BranchCut { func: &'static str },
    #[error("{func}: pole")]
    Pole { func: &'static str },
}

fn working_bits(digits: u32) -> u32 {
    bits_for_digits(digits) + 32
}

// ---------------------------------------------------------------- real

fn real_func(f: Func, x: &Real) -> Result<Real, EvalError> {
    let p = x.prec();
    let one = Real::from_i64(1, p);
    let name = f.name();
    Ok(match f {
        Func::Exp => x.exp(),
        Func::Ln => {
            if x.signum() <= 0 {
                return Err(EvalError::Domain { func: name });
            }
            x.ln()
        }
        Func::Sqrt => {
            if x.is_negative() {
                return Err(EvalError::Domain { func: name });
            }
            x.sqrt()
        }
        Func::Sin => x.sin(),
        Func::Cos => x.cos(),
        Func::Tan | Func::Cot | Func::Sec | Func::Csc => {
            let (s, c) = x.sin_cos();
            let (n, d) = match f {
                Func::Tan => (s, c),
                Func::Cot => (c, s),
                Func::Sec => (one, c),
                _ => (one, s),
            };
            if d.is_zero() {
                return Err(EvalError::Pole { func: name });
            }
            &n / &d
        }
        Func::Sinh => x.sinh(),
        Func::Cosh => x.cosh(),
        Func::Tanh => &x.sinh() / &x.cosh(),
        Func::Arctan => x.atan(),
        Func::Arccot => {
            if x.is_zero() {
                Real::pi(p).mul_pow2(-1)
            } else {
                (&one / x).atan()
            }
        }
        Func::Artanh => match x.abs().cmp(&one) {
            std::cmp::Ordering::Less => x.atanh(),
            std::cmp::Ordering::Equal => return Err(EvalError::Pole { func: name }),
            _ => return Err(EvalError::Domain { func: name }),
        },
        Func::Arcoth => match x.abs().cmp(&one) {
            std::cmp::Ordering::Greater => (&one / x).atanh(),
            std::cmp::Ordering::Equal => return Err(EvalError::Pole { func: name }),
            _ => return Err(EvalError::Domain { func: name }),
        },
    })
}

fn real_in_domain(f: Func, x: &Real) -> bool {
    let one = Real::from_i64(1, x.prec());
    match f {
        Func::Ln => x.signum() > 0,
        Func::Sqrt => !x.is_negative(),
        Func::Artanh => x.abs() < one,
        Func::Arcoth => x.abs() > one,
        _ => true,
    }
}

/// Evaluate with real semantics. Bindings are rounded to the working precision.
pub fn eval_real(
    e: &Expr,
    bindings: &HashMap<String, Real>,
    digits: u32,
) -> Result<Real, EvalError> {
    let prec = working_bits(digits);
    let mut memo = HashMap::new();
    real_rec(e, bindings, prec, &mut memo)
}

fn real_rec(
    e: &Expr,
    b: &HashMap<String, Real>,
    prec: u32,
    memo: &mut HashMap<usize, Real>,
) -> Result<Real, EvalError> {
    if let Some(v) = memo.get(&e.key()) {
        return Ok(v.clone());
    }
    let v = match e.node() {
        Node::Rational(q) => Real::from_rational(q, prec),
        Node::Pi => Real::pi(prec),
        Node::Symbol(s) => b
            .get(s)
            .ok_or_else(|| EvalError::UnboundSymbol(s.clone()))?
            .with_prec(prec),
        Node::Neg(a) => -real_rec(a, b, prec, memo)?,
        Node::Sum(v) => {
            let mut acc = real_rec(&v[0], b, prec, memo)?;
            for c in &v[1..] {
                acc = &acc + &real_rec(c, b, prec, memo)?;
            }
            acc
        }
        Node::Product(v) => {
            let mut acc = real_rec(&v[0], b, prec, memo)?;
            for c in &v[1..] {
                acc = &acc * &real_rec(c, b, prec, memo)?;
            }
            acc
        }
        Node::Quotient(n, d) => {
            let nv = real_rec(n, b, prec, memo)?;
            let dv = real_rec(d, b, prec, memo)?;
            if dv.is_zero() {
                return Err(EvalError::DivisionByZero);
            }
            &nv / &dv
        }
        Node::Pow(a, n) => {
            let av = real_rec(a, b, prec, memo)?;
            if av.is_zero() && *n < 0 {
                return Err(EvalError::DivisionByZero);
            }
            av.powi(*n)
        }
        Node::Apply(f, a) => real_func(*f, &real_rec(a, b, prec, memo)?)?,
    };
    memo.insert(e.key(), v.clone());
    Ok(v)
}

// ---------------------------------------------------------------- complex

#[derive(Clone, Debug)]
pub struct ComplexReal {
    pub re: Real,
    pub im: Real,
}

impl ComplexReal {
    pub fn new(re: Real, im: Real) -> ComplexReal {
        ComplexReal { re, im }
    }

    pub fn real(re: Real) -> ComplexReal {
        let p = re.prec();
        ComplexReal {
            re,
            im: Real::zero(p),
        }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> ComplexReal {
        ComplexReal {
            re: Real::from_f64(re, prec),
            im: Real::from_f64(im, prec),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, p: u32) -> ComplexReal {
        ComplexReal {
            re: self.re.with_prec(p),
            im: self.im.with_prec(p),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &ComplexReal) -> ComplexReal {
        ComplexReal {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &ComplexReal) -> ComplexReal {
        ComplexReal {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn neg(&self) -> ComplexReal {
        ComplexReal {
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn mul(&self, o: &ComplexReal) -> ComplexReal {
        if self.is_real() && o.is_real() {
            return ComplexReal::real(&self.re * &o.re);
        }
        ComplexReal {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    pub fn div(&self, o: &ComplexReal) -> Result<ComplexReal, EvalError> {
        if o.is_zero() {
            return Err(EvalError::DivisionByZero);
        }
        if o.is_real() {
            if self.is_real() {
                return Ok(ComplexReal::real(&self.re / &o.re));
            }
            return Ok(ComplexReal {
                re: &self.re / &o.re,
                im: &self.im / &o.re,
            });
        }
        let d = &(&o.re * &o.re) + &(&o.im * &o.im);
        Ok(ComplexReal {
            re: &(&(&self.re * &o.re) + &(&self.im * &o.im)) / &d,
            im: &(&(&self.im * &o.re) - &(&self.re * &o.im)) / &d,
        })
    }

    pub fn abs2(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    fn powi(&self, n: i64) -> Result<ComplexReal, EvalError> {
        if self.is_real() {
            if self.re.is_zero() && n < 0 {
                return Err(EvalError::DivisionByZero);
            }
            return Ok(ComplexReal::real(self.re.powi(n)));
        }
        let p = self.prec();
        let mut acc = ComplexReal::real(Real::from_i64(1, p));
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        if n < 0 {
            acc = ComplexReal::real(Real::from_i64(1, p)).div(&acc)?;
        }
        Ok(acc)
    }
}

fn complex_func(f: Func, z: &ComplexReal) -> Result<ComplexReal, EvalError> {
    if z.is_real() && real_in_domain(f, &z.re) {
        return real_func(f, &z.re).map(ComplexReal::real);
    }
    let p = z.prec();
    let name = f.name();
    let (a, b) = (&z.re, &z.im);
    let one = Real::from_i64(1, p);
    let pole = || EvalError::Pole { func: name };
    let cut = || EvalError::BranchCut { func: name };
    Ok(match f {
        Func::Exp => {
            let m = a.exp();
            let (s, c) = b.sin_cos();
            ComplexReal::new(&m * &c, &m * &s)
        }
        Func::Ln => {
            if z.is_zero() {
                return Err(pole());
            }
            ComplexReal::new(z.abs2().ln().mul_pow2(-1), Real::atan2(b, a))
        }
        Func::Sqrt => {
            if z.is_real() {
                return Ok(ComplexReal::new(Real::zero(p), (-a).sqrt()));
            }
            let r = z.abs2().sqrt();
            if !a.is_negative() {
                let t = (&r + a).mul_pow2(-1).sqrt();
                ComplexReal::new(t.clone(), &b.mul_pow2(-1) / &t)
            } else {
                let t = (&r - a).mul_pow2(-1).sqrt();
                let re = &b.abs().mul_pow2(-1) / &t;
                ComplexReal::new(re, if b.is_negative() { -t } else { t })
            }
        }
        Func::Sin => {
            let (s, c) = a.sin_cos();
            ComplexReal::new(&s * &b.cosh(), &c * &b.sinh())
        }
        Func::Cos => {
            let (s, c) = a.sin_cos();
            ComplexReal::new(&c * &b.cosh(), -(&s * &b.sinh()))
        }
        Func::Tan | Func::Cot => {
            let (s2, c2) = a.mul_pow2(1).sin_cos();
            let b2 = b.mul_pow2(1);
            let (sh, ch) = (b2.sinh(), b2.cosh());
            let (re, im, d) = if f == Func::Tan {
                (s2, sh, &c2 + &ch)
            } else {
                (s2, -sh, &ch - &c2)
            };
            if d.is_zero() {
                return Err(pole());
            }
            ComplexReal::new(&re / &d, &im / &d)
        }
        Func::Sec | Func::Csc => {
            let inner = complex_func(if f == Func::Sec { Func::Cos } else { Func::Sin }, z)?;
            ComplexReal::real(one).div(&inner).map_err(|_| pole())?
        }
        Func::Sinh => {
            let (s, c) = b.sin_cos();
            ComplexReal::new(&a.sinh() * &c, &a.cosh() * &s)
        }
        Func::Cosh => {
            let (s, c) = b.sin_cos();
            ComplexReal::new(&a.cosh() * &c, &a.sinh() * &s)
        }
        Func::Tanh => {
            let a2 = a.mul_pow2(1);
            let (s2, c2) = b.mul_pow2(1).sin_cos();
            let d = &a2.cosh() + &c2;
            if d.is_zero() {
                return Err(pole());
            }
            ComplexReal::new(&a2.sinh() / &d, &s2 / &d)
        }
        Func::Arctan => {
            if a.is_zero() {
                match b.abs().cmp(&one) {
                    std::cmp::Ordering::Equal => return Err(pole()),
                    std::cmp::Ordering::Greater => return Err(cut()),
                    _ => {}
                }
            }
            let a2 = a * a;
            let re = Real::atan2(&a.mul_pow2(1), &(&(&one - &a2) - &(b * b))).mul_pow2(-1);
            let bp = &one + b;
            let bm = &one - b;
            let num = &a2 + &(&bp * &bp);
            let den = &a2 + &(&bm * &bm);
            let im = (&num / &den).ln().mul_pow2(-2);
            ComplexReal::new(re, im)
        }
        Func::Arccot => {
            if z.is_zero() {
                return Err(pole());
            }
            let w = ComplexReal::real(one).div(z)?;
            complex_func(Func::Arctan, &w).map_err(|e| match e {
                EvalError::BranchCut { .. } => cut(),
                EvalError::Pole { .. } => pole(),
                other => other,
            })?
        }
        Func::Artanh => {
            if b.is_zero() {
                return Err(if a.abs() == one { pole() } else { cut() });
            }
            let a2 = a * a;
            let b2 = b * b;
            let ap = &one + a;
            let am = &one - a;
            let re = (&(&(&ap * &ap) + &b2) / &(&(&am * &am) + &b2))
                .ln()
                .mul_pow2(-2);
            let im = Real::atan2(&b.mul_pow2(1), &(&(&one - &a2) - &b2)).mul_pow2(-1);
            ComplexReal::new(re, im)
        }
        Func::Arcoth => {
            if b.is_zero() {
                return Err(if a.abs() == one { pole() } else { cut() });
            }
            let w = ComplexReal::real(one).div(z)?;
            complex_func(Func::Artanh, &w).map_err(|e| match e {
                EvalError::BranchCut { .. } => cut(),
                EvalError::Pole { .. } => pole(),
                other => other,
            })?
        }
    })
}

/// Evaluate with complex semantics (principal branches).
pub fn eval_complex(
    e: &Expr,
    bindings: &HashMap<String, ComplexReal>,
    digits: u32,
) -> Result<ComplexReal, EvalError> {
    let prec = working_bits(digits);
    let mut memo = HashMap::new();
    complex_rec(e, bindings, prec, &mut memo)
}

fn complex_rec(
    e: &Expr,
    b: &HashMap<String, ComplexReal>,
    prec: u32,
    memo: &mut HashMap<usize, ComplexReal>,
) -> Result<ComplexReal, EvalError> {
    if let Some(v) = memo.get(&e.key()) {
        return Ok(v.clone());
    }
    let v = match e.node() {
        Node::Rational(q) => ComplexReal::real(Real::from_rational(q, prec)),
        Node::Pi => ComplexReal::real(Real::pi(prec)),
        Node::Symbol(s) => b
            .get(s)
            .ok_or_else(|| EvalError::UnboundSymbol(s.clone()))?
            .with_prec(prec),
        Node::Neg(a) => complex_rec(a, b, prec, memo)?.neg(),
        Node::Sum(v) => {
            let mut acc = complex_rec(&v[0], b, prec, memo)?;
            for c in &v[1..] {
                acc = acc.add(&complex_rec(c, b, prec, memo)?);
            }
            acc
        }
        Node::Product(v) => {
            let mut acc = complex_rec(&v[0], b, prec, memo)?;
            for c in &v[1..] {
                acc = acc.mul(&complex_rec(c, b, prec, memo)?);
            }
            acc
        }
        Node::Quotient(n, d) => {
            let nv = complex_rec(n, b, prec, memo)?;
            nv.div(&complex_rec(d, b, prec, memo)?)?
        }
        Node::Pow(a, n) => complex_rec(a, b, prec, memo)?.powi(*n)?,
        Node::Apply(f, a) => complex_func(*f, &complex_rec(a, b, prec, memo)?)?,
    };
    memo.insert(e.key(), v.clone());
    Ok(v)
}

// ---------------------------------------------------------------- f64

fn f64_func(f: Func, x: f64) -> Result<f64, EvalError> {
    let name = f.name();
    Ok(match f {
        Func::Exp => x.exp(),
        Func::Ln => {
            if x <= 0.0 {
                return Err(EvalError::Domain { func: name });
            }
            x.ln()
        }
        Func::Sqrt => {
            if x < 0.0 {
                return Err(EvalError::Domain { func: name });
            }
            x.sqrt()
        }
        Func::Sin => x.sin(),
        Func::Cos => x.cos(),
        Func::Tan => x.tan(),
        Func::Cot => 1.0 / x.tan(),
        Func::Sec => 1.0 / x.cos(),
        Func::Csc => 1.0 / x.sin(),
        Func::Sinh => x.sinh(),
        Func::Cosh => x.cosh(),
        Func::Tanh => x.tanh(),
        Func::Arctan => x.atan(),
        Func::Arccot => {
            if x == 0.0 {
                std::f64::consts::FRAC_PI_2
            } else {
                (1.0 / x).atan()
            }
        }
        Func::Artanh => {
            if x.abs() >= 1.0 {
                return Err(EvalError::Domain { func: name });
            }
            x.atanh()
        }
        Func::Arcoth => {
            if x.abs() <= 1.0 {
                return Err(EvalError::Domain { func: name });
            }
            (1.0 / x).atanh()
        }
    })
}

pub fn eval_f64(e: &Expr, bindings: &HashMap<String, f64>) -> Result<f64, EvalError> {
    let mut memo = HashMap::new();
    f64_rec(e, bindings, &mut memo)
}

fn f64_rec(
    e: &Expr,
    b: &HashMap<String, f64>,
    memo: &mut HashMap<usize, f64>,
) -> Result<f64, EvalError> {
    if let Some(v) = memo.get(&e.key()) {
        return Ok(*v);
    }
    let v = match e.node() {
        Node::Rational(q) => {
            let n: f64 = num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN);
            n
        }
        Node::Pi => std::f64::consts::PI,
        Node::Symbol(s) => *b
            .get(s)
            .ok_or_else(|| EvalError::UnboundSymbol(s.clone()))?,
        Node::Neg(a) => -f64_rec(a, b, memo)?,
        Node::Sum(v) => {
            let mut acc = 0.0;
            for c in v {
                acc += f64_rec(c, b, memo)?;
            }
            acc
        }
        Node::Product(v) => {
            let mut acc = 1.0;
            for c in v {
                acc *= f64_rec(c, b, memo)?;
            }
            acc
        }
        Node::Quotient(n, d) => {
            let dv = f64_rec(d, b, memo)?;
            if dv == 0.0 {
                return Err(EvalError::DivisionByZero);
            }
            f64_rec(n, b, memo)? / dv
        }
        Node::Pow(a, n) => {
            let av = f64_rec(a, b, memo)?;
            if av == 0.0 && *n < 0 {
                return Err(EvalError::DivisionByZero);
            }
            av.powi(*n as i32)
        }
        Node::Apply(f, a) => f64_func(*f, f64_rec(a, b, memo)?)?,
    };
    memo.insert(e.key(), v);
    Ok(v)
}

fn c64_func(f: Func, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    match f {
        Func::Exp => z.exp(),
        Func::Ln => z.ln(),
        Func::Sqrt => z.sqrt(),
        Func::Sin => z.sin(),
        Func::Cos => z.cos(),
        Func::Tan => z.tan(),
        Func::Cot => one / z.tan(),
        Func::Sec => one / z.cos(),
        Func::Csc => one / z.sin(),
        Func::Sinh => z.sinh(),
        Func::Cosh => z.cosh(),
        Func::Tanh => z.tanh(),
        Func::Arctan => z.atan(),
        Func::Arccot => {
            if z == Complex64::new(0.0, 0.0) {
                Complex64::new(std::f64::consts::FRAC_PI_2, 0.0)
            } else {
                (one / z).atan()
            }
        }
        Func::Artanh => z.atanh(),
        Func::Arcoth => (one / z).atanh(),
    }
}

/// Fast principal-branch complex evaluation; singular points give inf/NaN.
pub fn eval_c64(e: &Expr, bindings: &HashMap<String, Complex64>) -> Result<Complex64, EvalError> {
    let mut memo = HashMap::new();
    c64_rec(e, bindings, &mut memo)
}

fn c64_rec(
    e: &Expr,
    b: &HashMap<String, Complex64>,
    memo: &mut HashMap<usize, Complex64>,
) -> Result<Complex64, EvalError> {
    if let Some(v) = memo.get(&e.key()) {
        return Ok(*v);
    }
    let v = match e.node() {
        Node::Rational(q) => {
            Complex64::new(num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN), 0.0)
        }
        Node::Pi => Complex64::new(std::f64::consts::PI, 0.0),
        Node::Symbol(s) => *b
            .get(s)
            .ok_or_else(|| EvalError::UnboundSymbol(s.clone()))?,
        Node::Neg(a) => -c64_rec(a, b, memo)?,
        Node::Sum(v) => {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in v {
                acc += c64_rec(c, b, memo)?;
            }
            acc
        }
        Node::Product(v) => {
            let mut acc = Complex64::new(1.0, 0.0);
            for c in v {
                acc *= c64_rec(c, b, memo)?;
            }
            acc
        }
        Node::Quotient(n, d) => c64_rec(n, b, memo)? / c64_rec(d, b, memo)?,
        Node::Pow(a, n) => c64_rec(a, b, memo)?.powi(*n as i32),
        Node::Apply(f, a) => c64_func(*f, c64_rec(a, b, memo)?),
    };
    memo.insert(e.key(), v);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn creal(re: f64, im: f64) -> ComplexReal {
        ComplexReal::from_f64(re, im, 128)
    }

    fn cbind(x: ComplexReal) -> HashMap<String, ComplexReal> {
        HashMap::from([("z".to_string(), x)])
    }

    #[test]
    fn complex_matches_c64() {
        let srcs = [
            "exp(z)",
            "ln(z)",
            "sqrt(z)",
            "sin(z)",
            "cos(z)",
            "tan(z)",
            "cot(z)",
            "sec(z)",
            "csc(z)",
            "sinh(z)",
            "cosh(z)",
            "tanh(z)",
            "arctan(z)",
            "arccot(z)",
            "artanh(z)",
            "arcoth(z)",
        ];
        for s in srcs {
            let e = parse(s).unwrap();
            for (re, im) in [(0.3, 0.4), (-0.7, 0.2), (1.3, -0.9), (-2.1, -0.5)] {
                let a = eval_complex(&e, &cbind(creal(re, im)), 30).unwrap();
                let b = eval_c64(
                    &e,
                    &HashMap::from([("z".to_string(), Complex64::new(re, im))]),
                )
                .unwrap();
                assert!((a.re.to_f64() - b.re).abs() < 1e-12, "{s} re at {re},{im}");
                assert!((a.im.to_f64() - b.im).abs() < 1e-12, "{s} im at {re},{im}");
            }
        }
    }

    #[test]
    fn real_axis_agrees_exactly() {
        let e = parse("ln(x^2 + 1)*arctan(x) - sqrt(x)/cosh(x) + arccot(x)").unwrap();
        let x = Real::from_f64(0.625, 128);
        let r = eval_real(&e, &HashMap::from([("x".to_string(), x.clone())]), 30).unwrap();
        let c = eval_complex(
            &e,
            &HashMap::from([("x".to_string(), ComplexReal::real(x))]),
            30,
        )
        .unwrap();
        assert_eq!(r, c.re);
        assert!(c.im.is_zero());
    }

    #[test]
    fn principal_ln_and_cut_errors() {
        let ln = parse("ln(z)").unwrap();
        let v = eval_complex(&ln, &cbind(creal(-2.0, 0.0)), 30).unwrap();
        assert!((v.im.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        let at = parse("arctan(z)").unwrap();
        assert!(matches!(
            eval_complex(&at, &cbind(creal(0.0, 2.0)), 30),
            Err(EvalError::BranchCut { .. })
        ));
        assert!(matches!(
            eval_complex(&at, &cbind(creal(0.0, 1.0)), 30),
            Err(EvalError::Pole { .. })
        ));
        let ath = parse("artanh(z)").unwrap();
        assert!(matches!(
            eval_complex(&ath, &cbind(creal(3.0, 0.0)), 30),
            Err(EvalError::BranchCut { .. })
        ));
    }

    #[test]
    fn real_domain_errors() {
        let b = HashMap::from([("x".to_string(), Real::from_i64(-1, 64))]);
        assert!(matches!(
            eval_real(&parse("ln(x)").unwrap(), &b, 20),
            Err(EvalError::Domain { .. })
        ));
        assert!(matches!(
            eval_real(&parse("1/(x+1)").unwrap(), &b, 20),
            Err(EvalError::DivisionByZero)
        ));
        assert!(matches!(
            eval_real(&parse("y").unwrap(), &b, 20),
            Err(EvalError::UnboundSymbol(_))
        ));
    }

    #[test]
    fn arccot_is_odd() {
        let e = parse("arccot(x) + arccot(-x)").unwrap();
        let v = eval_f64(&e, &HashMap::from([("x".to_string(), 0.4)])).unwrap();
        assert!(v.abs() < 1e-15);
    }
}
