//! Symbolic expression trees.
//!
//! Children are reference counted, so clones are cheap and large results
//! share structure. Equality is structural.

mod build;
mod diff;
mod eval;
mod parse;
mod print;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use build::{add, apply, div, mul, neg, pow, product, sub, sum};
pub use eval::{eval_c64, eval_complex, eval_f64, eval_real, ComplexReal, EvalError};
pub use parse::{parse, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Func {
    Exp,
    Ln,
    Sqrt,
    Sin,
    Cos,
    Tan,
    Cot,
    Sec,
    Csc,
    Sinh,
    Cosh,
    Tanh,
    Arctan,
    Arccot,
    Artanh,
    Arcoth,
}

impl Func {
    pub const ALL: [Func; 16] = [
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Cot,
        Func::Sec,
        Func::Csc,
        Func::Sinh,
        Func::Cosh,
        Func::Tanh,
        Func::Arctan,
        Func::Arccot,
        Func::Artanh,
        Func::Arcoth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Cot => "cot",
            Func::Sec => "sec",
            Func::Csc => "csc",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Arctan => "arctan",
            Func::Arccot => "arccot",
            Func::Artanh => "artanh",
            Func::Arcoth => "arcoth",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        Func::ALL.iter().copied().find(|f| f.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Rational(BigRational),
    Pi,
    /// A variable or a named parameter; the caller decides which.
    Symbol(String),
    Neg(Expr),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Quotient(Expr, Expr),
    Pow(Expr, i64),
    Apply(Func, Expr),
}

#[derive(Clone, PartialEq)]
pub struct Expr(Arc<Node>);

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({})", self)
    }
}

impl Expr {
    pub fn new(node: Node) -> Expr {
        Expr(Arc::new(node))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub(crate) fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn rational(q: BigRational) -> Expr {
        Expr::new(Node::Rational(q))
    }

    pub fn int(n: i64) -> Expr {
        Expr::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Expr {
        Expr::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero() -> Expr {
        Expr::int(0)
    }

    pub fn one() -> Expr {
        Expr::int(1)
    }

    pub fn pi() -> Expr {
        Expr::new(Node::Pi)
    }

    pub fn sym(name: &str) -> Expr {
        Expr::new(Node::Symbol(name.to_string()))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self.node() {
            Node::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    pub fn children(&self) -> Vec<&Expr> {
        match self.node() {
            Node::Rational(_) | Node::Pi | Node::Symbol(_) => vec![],
            Node::Neg(a) | Node::Pow(a, _) | Node::Apply(_, a) => vec![a],
            Node::Quotient(a, b) => vec![a, b],
            Node::Sum(v) | Node::Product(v) => v.iter().collect(),
        }
    }

    pub fn contains_symbol(&self, name: &str) -> bool {
        match self.node() {
            Node::Symbol(s) => s == name,
            _ => self.children().into_iter().any(|c| c.contains_symbol(name)),
        }
    }

    pub fn free_symbols(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<String>) {
        if let Node::Symbol(s) = self.node() {
            out.insert(s.clone());
        }
        for c in self.children() {
            c.collect_symbols(out);
        }
    }

    /// Number of nodes counted as a tree.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(|c| c.size()).sum::<usize>()
    }

    /// Rebuild bottom-up with `f` applied to every rebuilt node.
    pub fn map_bottom_up(&self, f: &mut dyn FnMut(Expr) -> Expr) -> Expr {
        let rebuilt = match self.node() {
            Node::Rational(_) | Node::Pi | Node::Symbol(_) => self.clone(),
            Node::Neg(a) => neg(&a.map_bottom_up(f)),
            Node::Sum(v) => sum(v.iter().map(|c| c.map_bottom_up(f)).collect()),
            Node::Product(v) => product(v.iter().map(|c| c.map_bottom_up(f)).collect()),
            Node::Quotient(a, b) => div(&a.map_bottom_up(f), &b.map_bottom_up(f)),
            Node::Pow(a, n) => pow(&a.map_bottom_up(f), *n),
            Node::Apply(func, a) => apply(*func, &a.map_bottom_up(f)),
        };
        f(rebuilt)
    }

    /// e[name := value], folding constants on the way up.
    pub fn substitute(&self, name: &str, value: &Expr) -> Expr {
        if !self.contains_symbol(name) {
            return self.clone();
        }
        self.map_bottom_up(&mut |e| match e.node() {
            Node::Symbol(s) if s == name => value.clone(),
            _ => e,
        })
    }

    pub fn derivative(&self, var: &str) -> Expr {
        diff::derivative(self, var)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::to_text(self))
    }
}

impl std::str::FromStr for Expr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Expr, ParseError> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitute_folds() {
        let e = parse("sin(x) + x*y").unwrap();
        let r = e.substitute("x", &Expr::zero());
        assert_eq!(r.to_string(), "0");
    }

    #[test]
    fn free_symbols_listed() {
        let e = parse("a*x + cos(pi*b)").unwrap();
        let s: Vec<_> = e.free_symbols().into_iter().collect();
        assert_eq!(s, vec!["a", "b", "x"]);
    }
}
