//! Text syntax.
//!
//! Precedence from tightest: `^` (integer exponent), unary `-`, `* /`, `+ -`.
//! `3/4` written as two integer literals is a single rational token, and a
//! `-` directly in front of a number literal (not raised to a power) folds
//! into a negative rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::{Expr, Func, Node};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("unexpected character '{ch}' at {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token '{tok}' at {pos}")]
    UnexpectedToken { tok: String, pos: usize },
    #[error("unknown function '{0}'")]
    UnknownFunction(String),
    #[error("reserved name '{0}' used as a symbol")]
    ReservedName(String),
    #[error("exponent must be an integer literal at {0}")]
    BadExponent(usize),
    #[error("zero denominator in literal at {0}")]
    ZeroDenominator(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let pos = i;
            let n = read_int(&mut i);
            let num = BigInt::parse_bytes(n.as_bytes(), 10).unwrap();
            // integer '/' integer is a rational literal
            let mut j = i;
            while j < chars.len() && chars[j].is_whitespace() {
                j += 1;
            }
            let mut value = BigRational::from_integer(num.clone());
            let after_caret = matches!(out.last(), Some((Tok::Op('^'), _)))
                || (matches!(out.last(), Some((Tok::Op('-'), _)))
                    && out.len() >= 2
                    && matches!(out[out.len() - 2], (Tok::Op('^'), _)));
            if !after_caret && j < chars.len() && chars[j] == '/' {
                let mut k = j + 1;
                while k < chars.len() && chars[k].is_whitespace() {
                    k += 1;
                }
                if k < chars.len() && chars[k].is_ascii_digit() {
                    let mut kk = k;
                    let d = read_int(&mut kk);
                    let den = BigInt::parse_bytes(d.as_bytes(), 10).unwrap();
                    if den == BigInt::from(0) {
                        return Err(ParseError::ZeroDenominator(pos));
                    }
                    value = BigRational::new(num, den);
                    i = kk;
                }
            }
            out.push((Tok::Num(value), pos));
        } else if c.is_alphabetic() || c == '_' || c == 'π' {
            let pos = i;
            if c == 'π' {
                i += 1;
                out.push((Tok::Ident("pi".into()), pos));
                continue;
            }
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if "+-*/^".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else if c == '(' {
            out.push((Tok::LParen, i));
            i += 1;
        } else if c == ')' {
            out.push((Tok::RParen, i));
            i += 1;
        } else {
            return Err(ParseError::UnexpectedChar { ch: c, pos: i });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.i + k).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.1).unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|t| t.0.clone());
        self.i += 1;
        t
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.i) {
            None => ParseError::UnexpectedEnd,
            Some((t, pos)) => ParseError::UnexpectedToken {
                tok: tok_text(t),
                pos: *pos,
            },
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.i += 1;
            let t = self.term()?;
            terms.push(if op == '-' {
                Expr::new(Node::Neg(t))
            } else {
                t
            });
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::new(Node::Sum(terms))
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        // factors collected into an open product until a '/' closes it
        let mut open: Option<Vec<Expr>> = None;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.i += 1;
                    let f = self.unary()?;
                    match open.as_mut() {
                        Some(v) => v.push(f),
                        None => open = Some(vec![acc.clone(), f]),
                    }
                }
                Some(Tok::Op('/')) => {
                    self.i += 1;
                    if let Some(v) = open.take() {
                        acc = Expr::new(Node::Product(v));
                    }
                    let d = self.unary()?;
                    acc = Expr::new(Node::Quotient(acc, d));
                }
                _ => break,
            }
        }
        if let Some(v) = open {
            acc = Expr::new(Node::Product(v));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let Some(Tok::Op('-')) = self.peek() {
            if let Some(Tok::Num(q)) = self.peek_at(1).cloned() {
                if self.peek_at(2) != Some(&Tok::Op('^')) {
                    self.i += 2;
                    return Ok(Expr::rational(-q));
                }
            }
            self.i += 1;
            let inner = self.unary()?;
            return Ok(Expr::new(Node::Neg(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.i += 1;
            let pos = self.pos();
            let sign = if let Some(Tok::Op('-')) = self.peek() {
                self.i += 1;
                -1
            } else {
                1
            };
            match self.next() {
                Some(Tok::Num(q)) if q.is_integer() => {
                    let n: i64 = q
                        .to_integer()
                        .try_into()
                        .map_err(|_| ParseError::BadExponent(pos))?;
                    return Ok(Expr::new(Node::Pow(base, sign * n)));
                }
                _ => return Err(ParseError::BadExponent(pos)),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Num(q)) => Ok(Expr::rational(q)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => {
                        self.i -= 1;
                        Err(self.unexpected())
                    }
                }
            }
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::LParen) {
                    let f =
                        Func::from_name(&name).ok_or(ParseError::UnknownFunction(name.clone()))?;
                    self.i += 1;
                    let arg = self.expr()?;
                    match self.next() {
                        Some(Tok::RParen) => Ok(Expr::new(Node::Apply(f, arg))),
                        _ => {
                            self.i -= 1;
                            Err(self.unexpected())
                        }
                    }
                } else if name == "pi" {
                    Ok(Expr::pi())
                } else if Func::from_name(&name).is_some() {
                    Err(ParseError::ReservedName(name))
                } else {
                    Ok(Expr::sym(&name))
                }
            }
            Some(t) => Err(ParseError::UnexpectedToken {
                tok: tok_text(&t),
                pos,
            }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Num(q) => q.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Op(c) => c.to_string(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0 };
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}
