//! Folding constructors. They keep n-ary nodes at two or more children and
//! merge rational constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Expr, Func, Node};

pub fn neg(a: &Expr) -> Expr {
    match a.node() {
        Node::Rational(q) => Expr::rational(-q),
        Node::Neg(b) => b.clone(),
        _ => Expr::new(Node::Neg(a.clone())),
    }
}

pub fn add(a: &Expr, b: &Expr) -> Expr {
    sum(vec![a.clone(), b.clone()])
}

pub fn sub(a: &Expr, b: &Expr) -> Expr {
    sum(vec![a.clone(), neg(b)])
}

pub fn sum(items: Vec<Expr>) -> Expr {
    let mut terms = Vec::with_capacity(items.len());
    let mut k = BigRational::zero();
    fn push(e: Expr, terms: &mut Vec<Expr>, k: &mut BigRational) {
        match e.node() {
            Node::Rational(q) => *k += q,
            Node::Sum(v) => {
                for c in v {
                    push(c.clone(), terms, k);
                }
            }
            _ => terms.push(e),
        }
    }
    for e in items {
        push(e, &mut terms, &mut k);
    }
    if !k.is_zero() {
        terms.push(Expr::rational(k));
    }
    match terms.len() {
        0 => Expr::zero(),
        1 => terms.pop().unwrap(),
        _ => Expr::new(Node::Sum(terms)),
    }
}

pub fn mul(a: &Expr, b: &Expr) -> Expr {
    product(vec![a.clone(), b.clone()])
}

pub fn product(items: Vec<Expr>) -> Expr {
    let mut factors = Vec::with_capacity(items.len());
    let mut k = BigRational::one();
    fn push(e: Expr, factors: &mut Vec<Expr>, k: &mut BigRational) {
        match e.node() {
            Node::Rational(q) => *k *= q,
            Node::Neg(b) => {
                *k = -k.clone();
                push(b.clone(), factors, k);
            }
            Node::Product(v) => {
                for c in v {
                    push(c.clone(), factors, k);
                }
            }
            _ => factors.push(e),
        }
    }
    for e in items {
        push(e, &mut factors, &mut k);
    }
    if k.is_zero() {
        return Expr::zero();
    }
    let body = match factors.len() {
        0 => return Expr::rational(k),
        1 => factors.pop().unwrap(),
        _ => Expr::new(Node::Product(factors)),
    };
    if k.is_one() {
        body
    } else if k == -BigRational::one() {
        neg(&body)
    } else {
        match body.node() {
            Node::Product(v) => {
                let mut all = vec![Expr::rational(k)];
                all.extend(v.iter().cloned());
                Expr::new(Node::Product(all))
            }
            _ => Expr::new(Node::Product(vec![Expr::rational(k), body])),
        }
    }
}

pub fn div(a: &Expr, b: &Expr) -> Expr {
    if let Some(q) = b.as_rational() {
        if q.is_one() {
            return a.clone();
        }
        if !q.is_zero() {
            if let Some(p) = a.as_rational() {
                return Expr::rational(p / q);
            }
            return mul(&Expr::rational(q.recip()), a);
        }
    }
    if a.is_zero() {
        return Expr::zero();
    }
    Expr::new(Node::Quotient(a.clone(), b.clone()))
}

pub fn pow(a: &Expr, n: i64) -> Expr {
    if n == 0 {
        return Expr::one();
    }
    if n == 1 {
        return a.clone();
    }
    match a.node() {
        Node::Rational(q) if !(q.is_zero() && n < 0) => {
            let r = if n > 0 { q.clone() } else { q.recip() };
            let mut acc = BigRational::one();
            for _ in 0..n.unsigned_abs() {
                acc *= &r;
            }
            Expr::rational(acc)
        }
        Node::Pow(b, m) => pow(b, m * n),
        Node::Apply(Func::Sqrt, b) if n % 2 == 0 => {
            if let Some(q) = b.as_rational() {
                if !q.is_negative() {
                    return pow(b, n / 2);
                }
            }
            Expr::new(Node::Pow(a.clone(), n))
        }
        Node::Neg(b) => {
            let p = pow(b, n);
            if n % 2 == 0 {
                p
            } else {
                neg(&p)
            }
        }
        _ => Expr::new(Node::Pow(a.clone(), n)),
    }
}

fn exact_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let sn = q.numer().sqrt();
    let sd = q.denom().sqrt();
    if &(&sn * &sn) == q.numer() && &(&sd * &sd) == q.denom() {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

pub fn apply(f: Func, a: &Expr) -> Expr {
    if let Some(q) = a.as_rational() {
        if q.is_zero() {
            match f {
                Func::Sin
                | Func::Tan
                | Func::Sinh
                | Func::Tanh
                | Func::Arctan
                | Func::Artanh
                | Func::Sqrt => return Expr::zero(),
                Func::Cos | Func::Cosh | Func::Exp | Func::Sec => return Expr::one(),
                Func::Arccot => return div(&Expr::pi(), &Expr::int(2)),
                _ => {}
            }
        }
        if q.is_one() {
            match f {
                Func::Ln => return Expr::zero(),
                Func::Arctan | Func::Arccot => return div(&Expr::pi(), &Expr::int(4)),
                _ => {}
            }
        }
        if f == Func::Sqrt {
            if let Some(r) = exact_sqrt(q) {
                return Expr::rational(r);
            }
        }
    }
    if let Node::Neg(b) = a.node() {
        match f {
            Func::Sin
            | Func::Tan
            | Func::Sinh
            | Func::Tanh
            | Func::Arctan
            | Func::Artanh
            | Func::Cot
            | Func::Csc => return neg(&apply(f, b)),
            Func::Cos | Func::Cosh | Func::Sec => return apply(f, b),
            _ => {}
        }
    }
    if let (Func::Exp, Node::Apply(Func::Ln, b)) = (f, a.node()) {
        return b.clone();
    }
    Expr::new(Node::Apply(f, a.clone()))
}

impl From<i64> for Expr {
    fn from(n: i64) -> Expr {
        Expr::rational(BigRational::from_integer(BigInt::from(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn constants_merge() {
        let e = sum(vec![Expr::int(2), Expr::sym("x"), Expr::frac(1, 2)]);
        assert_eq!(e.to_string(), "x + 5/2");
        let p = product(vec![Expr::int(2), neg(&Expr::sym("x")), Expr::frac(1, 2)]);
        assert_eq!(p.to_string(), "-x");
    }

    #[test]
    fn sqrt_squared() {
        let s = apply(Func::Sqrt, &Expr::int(3));
        assert_eq!(pow(&s, 2), Expr::int(3));
        assert_eq!(apply(Func::Sqrt, &Expr::frac(9, 4)), Expr::frac(3, 2));
    }

    #[test]
    fn odd_even_functions() {
        let x = parse("x").unwrap();
        assert_eq!(apply(Func::Sin, &neg(&x)), neg(&apply(Func::Sin, &x)));
        assert_eq!(apply(Func::Cos, &neg(&x)), apply(Func::Cos, &x));
    }
}
