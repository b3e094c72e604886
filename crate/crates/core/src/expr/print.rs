use num_traits::Signed;

use super::{Expr, Node};

fn is_plain_atom(e: &Expr) -> bool {
    match e.node() {
        Node::Symbol(_) | Node::Pi | Node::Apply(..) => true,
        Node::Rational(q) => q.is_integer() && !q.is_negative(),
        _ => false,
    }
}

fn rational_text(e: &Expr) -> Option<String> {
    let q = e.as_rational()?;
    Some(if q.is_negative() {
        format!("({})", q)
    } else {
        q.to_string()
    })
}

fn wrap(s: String) -> String {
    format!("({})", s)
}

pub fn to_text(e: &Expr) -> String {
    if let Some(s) = rational_text(e) {
        return s;
    }
    match e.node() {
        Node::Rational(_) => unreachable!(),
        Node::Pi => "pi".into(),
        Node::Symbol(s) => s.clone(),
        Node::Apply(f, a) => format!("{}({})", f.name(), to_text(a)),
        Node::Neg(a) => {
            let inner = to_text(a);
            match a.node() {
                Node::Sum(_) | Node::Product(_) | Node::Quotient(..) => format!("-{}", wrap(inner)),
                Node::Rational(q) if !q.is_negative() => format!("-{}", wrap(inner)),
                _ => format!("-{}", inner),
            }
        }
        Node::Pow(a, n) => {
            let base = if is_plain_atom(a) {
                to_text(a)
            } else {
                wrap(to_text(a))
            };
            format!("{}^{}", base, n)
        }
        Node::Sum(v) => {
            let mut out = String::new();
            for (i, c) in v.iter().enumerate() {
                if i == 0 {
                    out.push_str(&match c.node() {
                        Node::Sum(_) => wrap(to_text(c)),
                        _ => to_text(c),
                    });
                    continue;
                }
                match c.node() {
                    Node::Neg(a) => {
                        out.push_str(" - ");
                        out.push_str(&match a.node() {
                            Node::Sum(_) => wrap(to_text(a)),
                            _ => to_text(a),
                        });
                    }
                    Node::Sum(_) => {
                        out.push_str(" + ");
                        out.push_str(&wrap(to_text(c)));
                    }
                    _ => {
                        out.push_str(" + ");
                        out.push_str(&to_text(c));
                    }
                }
            }
            out
        }
        Node::Product(v) => {
            let parts: Vec<String> = v
                .iter()
                .enumerate()
                .map(|(i, c)| match c.node() {
                    Node::Sum(_) | Node::Product(_) => wrap(to_text(c)),
                    Node::Quotient(..) if i > 0 => wrap(to_text(c)),
                    _ => to_text(c),
                })
                .collect();
            parts.join("*")
        }
        Node::Quotient(n, d) => {
            let num = match n.node() {
                Node::Sum(_) => wrap(to_text(n)),
                _ => to_text(n),
            };
            let den = match d.node() {
                Node::Sum(_) | Node::Product(_) | Node::Quotient(..) | Node::Neg(_) => {
                    wrap(to_text(d))
                }
                Node::Rational(q) if !q.is_negative() => wrap(to_text(d)),
                _ => to_text(d),
            };
            format!("{}/{}", num, den)
        }
    }
}
