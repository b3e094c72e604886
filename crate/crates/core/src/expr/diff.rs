use super::build::*;
use super::{Expr, Func, Node};

pub fn derivative(e: &Expr, var: &str) -> Expr {
    if !e.contains_symbol(var) {
        return Expr::zero();
    }
    match e.node() {
        Node::Rational(_) | Node::Pi => Expr::zero(),
        Node::Symbol(s) => {
            if s == var {
                Expr::one()
            } else {
                Expr::zero()
            }
        }
        Node::Neg(a) => neg(&derivative(a, var)),
        Node::Sum(v) => sum(v.iter().map(|c| derivative(c, var)).collect()),
        Node::Product(v) => {
            let mut terms = Vec::new();
            for i in 0..v.len() {
                let d = derivative(&v[i], var);
                if d.is_zero() {
                    continue;
                }
                let mut fs: Vec<Expr> = v.clone();
                fs[i] = d;
                terms.push(product(fs));
            }
            sum(terms)
        }
        Node::Quotient(a, b) => {
            let da = derivative(a, var);
            let db = derivative(b, var);
            let num = sub(&mul(&da, b), &mul(a, &db));
            div(&num, &pow(b, 2))
        }
        Node::Pow(a, n) => product(vec![Expr::int(*n), pow(a, n - 1), derivative(a, var)]),
        Node::Apply(f, a) => {
            let da = derivative(a, var);
            let outer = match f {
                Func::Exp => e.clone(),
                Func::Ln => div(&Expr::one(), a),
                Func::Sqrt => div(&Expr::one(), &mul(&Expr::int(2), e)),
                Func::Sin => apply(Func::Cos, a),
                Func::Cos => neg(&apply(Func::Sin, a)),
                Func::Tan => pow(&apply(Func::Sec, a), 2),
                Func::Cot => neg(&pow(&apply(Func::Csc, a), 2)),
                Func::Sec => mul(e, &apply(Func::Tan, a)),
                Func::Csc => neg(&mul(e, &apply(Func::Cot, a))),
                Func::Sinh => apply(Func::Cosh, a),
                Func::Cosh => apply(Func::Sinh, a),
                Func::Tanh => sub(&Expr::one(), &pow(e, 2)),
                Func::Arctan => div(&Expr::one(), &add(&Expr::one(), &pow(a, 2))),
                Func::Arccot => neg(&div(&Expr::one(), &add(&Expr::one(), &pow(a, 2)))),
                Func::Artanh | Func::Arcoth => div(&Expr::one(), &sub(&Expr::one(), &pow(a, 2))),
            };
            mul(&outer, &da)
        }
    }
}
