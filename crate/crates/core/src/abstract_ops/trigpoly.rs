//! Polynomials in C = cos(phi), S = sin(phi) reduced by S^2 = 1 - C^2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::expr::{self, Expr, Func, Node};

/// Univariate polynomial, coefficients low to high, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<BigRational>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(vec![])
    }

    pub fn constant(q: BigRational) -> Poly {
        Poly(vec![q]).trimmed()
    }

    pub fn c() -> Poly {
        Poly(vec![BigRational::zero(), BigRational::one()])
    }

    fn trimmed(mut self) -> Poly {
        while self.0.last().is_some_and(|q| q.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.0.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, q) in self.0.iter().enumerate() {
            v[i] += q;
        }
        for (i, q) in o.0.iter().enumerate() {
            v[i] += q;
        }
        Poly(v).trimmed()
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|q| -q).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &BigRational) -> Poly {
        Poly(self.0.iter().map(|q| q * k).collect()).trimmed()
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly(v).trimmed()
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let dd = d.0.len() - 1;
        let mut q = vec![BigRational::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let k = r.lead() / d.lead();
            let shift = rd - dd;
            q[shift] = k.clone();
            let mut t = vec![BigRational::zero(); shift];
            t.extend(d.0.iter().map(|c| c * &k));
            r = r.sub(&Poly(t));
        }
        (Poly(q).trimmed(), r)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        self.scale(&l.recip())
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.divrem(&y).1;
            x = y;
            y = r;
        }
        x.monic()
    }

    pub fn to_expr(&self, c: &Expr) -> Expr {
        let terms = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(i, q)| expr::mul(&Expr::rational(q.clone()), &expr::pow(c, i as i64)))
            .collect();
        expr::sum(terms)
    }
}

/// A(C) + S * B(C)
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPoly {
    pub a: Poly,
    pub b: Poly,
}

fn one_minus_c2() -> Poly {
    Poly(vec![
        BigRational::one(),
        BigRational::zero(),
        -BigRational::one(),
    ])
}

impl TrigPoly {
    pub fn constant(q: BigRational) -> TrigPoly {
        TrigPoly {
            a: Poly::constant(q),
            b: Poly::zero(),
        }
    }

    pub fn add(&self, o: &TrigPoly) -> TrigPoly {
        TrigPoly {
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
        }
    }

    pub fn neg(&self) -> TrigPoly {
        TrigPoly {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    pub fn mul(&self, o: &TrigPoly) -> TrigPoly {
        let a = self.a.mul(&o.a).add(&one_minus_c2().mul(&self.b.mul(&o.b)));
        let b = self.a.mul(&o.b).add(&o.a.mul(&self.b));
        TrigPoly { a, b }
    }

    pub fn pow(&self, n: u32) -> TrigPoly {
        let mut acc = TrigPoly::constant(BigRational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.b.is_zero() {
            self.a.as_constant()
        } else {
            None
        }
    }

    /// cos(m phi) and sin(m phi) for integer m.
    pub fn cos_multiple(m: i64) -> TrigPoly {
        TrigPoly {
            a: chebyshev_t(m.unsigned_abs()),
            b: Poly::zero(),
        }
    }

    pub fn sin_multiple(m: i64) -> TrigPoly {
        if m == 0 {
            return TrigPoly::constant(BigRational::zero());
        }
        let u = chebyshev_u(m.unsigned_abs() - 1);
        TrigPoly {
            a: Poly::zero(),
            b: if m < 0 { u.neg() } else { u },
        }
    }

    pub fn to_expr(&self, c: &Expr, s: &Expr) -> Expr {
        expr::add(&self.a.to_expr(c), &expr::mul(s, &self.b.to_expr(c)))
    }
}

fn chebyshev_t(n: u64) -> Poly {
    let (mut t0, mut t1) = (Poly::constant(BigRational::one()), Poly::c());
    if n == 0 {
        return t0;
    }
    let two_c = Poly::c().scale(&BigRational::from_integer(2.into()));
    for _ in 1..n {
        let t2 = two_c.mul(&t1).sub(&t0);
        t0 = t1;
        t1 = t2;
    }
    t1
}

fn chebyshev_u(n: u64) -> Poly {
    let two_c = Poly::c().scale(&BigRational::from_integer(2.into()));
    let (mut u0, mut u1) = (Poly::constant(BigRational::one()), two_c.clone());
    if n == 0 {
        return u0;
    }
    for _ in 1..n {
        let u2 = two_c.mul(&u1).sub(&u0);
        u0 = u1;
        u1 = u2;
    }
    u1
}

/// Split `e` as q * core with q rational.
pub fn split_coeff(e: &Expr) -> (BigRational, Expr) {
    match e.node() {
        Node::Rational(q) => (q.clone(), Expr::one()),
        Node::Neg(a) => {
            let (q, c) = split_coeff(a);
            (-q, c)
        }
        Node::Product(v) => {
            let mut q = BigRational::one();
            let mut rest = Vec::new();
            for f in v {
                match f.as_rational() {
                    Some(r) => q *= r,
                    None => rest.push(f.clone()),
                }
            }
            (q, expr::product(rest))
        }
        _ => (BigRational::one(), e.clone()),
    }
}

/// Angle phi = g * core shared by every sin/cos argument that depends on `var`.
#[derive(Clone, Debug)]
pub struct AngleBase {
    pub g: BigRational,
    pub core: Expr,
}

impl AngleBase {
    pub fn phi(&self) -> Expr {
        expr::mul(&Expr::rational(self.g.clone()), &self.core)
    }

    pub fn scaled(&self, k: BigRational) -> Expr {
        expr::mul(&Expr::rational(&self.g * k), &self.core)
    }
}

fn rat_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    let n = a.numer().gcd(b.numer());
    let d = a.denom().lcm(b.denom());
    BigRational::new(n, d)
}

/// Find the common angle of all trig arguments that contain `var`.
pub fn find_base(e: &Expr, var: &str) -> Option<AngleBase> {
    let mut found: Option<AngleBase> = None;
    let mut ok = true;
    fn walk(e: &Expr, var: &str, found: &mut Option<AngleBase>, ok: &mut bool) {
        if let Node::Apply(Func::Sin | Func::Cos, a) = e.node() {
            if a.contains_symbol(var) {
                let (q, core) = split_coeff(a);
                match found {
                    None => *found = Some(AngleBase { g: q.abs(), core }),
                    Some(b) => {
                        if b.core != core {
                            *ok = false;
                        } else {
                            b.g = rat_gcd(&b.g, &q);
                        }
                    }
                }
            }
        }
        for c in e.children() {
            walk(c, var, found, ok);
        }
    }
    walk(e, var, &mut found, &mut ok);
    if ok {
        found
    } else {
        None
    }
}

/// Express `e` as a trig polynomial over `base`; None if it is not one.
pub fn extract(e: &Expr, var: &str, base: &AngleBase) -> Option<TrigPoly> {
    match e.node() {
        Node::Rational(q) => Some(TrigPoly::constant(q.clone())),
        Node::Neg(a) => extract(a, var, base).map(|t| t.neg()),
        Node::Sum(v) => {
            let mut acc = TrigPoly::constant(BigRational::zero());
            for c in v {
                acc = acc.add(&extract(c, var, base)?);
            }
            Some(acc)
        }
        Node::Product(v) => {
            let mut acc = TrigPoly::constant(BigRational::one());
            for c in v {
                acc = acc.mul(&extract(c, var, base)?);
            }
            Some(acc)
        }
        Node::Pow(a, n) if *n >= 0 && *n <= 64 => extract(a, var, base).map(|t| t.pow(*n as u32)),
        Node::Apply(f @ (Func::Sin | Func::Cos), a) if a.contains_symbol(var) => {
            let (q, core) = split_coeff(a);
            if core != base.core {
                return None;
            }
            let m = &q / &base.g;
            if !m.is_integer() {
                return None;
            }
            let m: i64 = m.to_integer().try_into().ok()?;
            Some(if *f == Func::Cos {
                TrigPoly::cos_multiple(m)
            } else {
                TrigPoly::sin_multiple(m)
            })
        }
        _ => None,
    }
}

pub fn bigrat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn pythagoras_collapses() {
        let e = parse("1 - cos(t)^2 - sin(t)^2").unwrap();
        let b = find_base(&e, "t").unwrap();
        assert!(extract(&e, "t", &b).unwrap().is_zero());
    }

    #[test]
    fn multiple_angles() {
        let e = parse("cos(2*t) - 2*cos(t)^2 + sin(3*t) - 3*sin(t) + 4*sin(t)^3").unwrap();
        let b = find_base(&e, "t").unwrap();
        assert!(extract(&e, "t", &b).unwrap().as_constant().unwrap() == bigrat(-1));
    }

    #[test]
    fn gcd_of_polys() {
        let a = Poly(vec![bigrat(-1), bigrat(0), bigrat(1)]);
        let b = Poly(vec![bigrat(1), bigrat(1)]);
        assert_eq!(Poly::gcd(&a, &b), b);
    }
}
