//! Exact consequences of the catalog: special values and structural maps,
//! all checked in rational arithmetic.

use num_rational::BigRational;

use super::catalog::{cor5_poly, cor6_poly, cor7_poly, cor8_poly, thm11_cos_poly, thm11_sin_poly, thm18_sin_poly};
use super::closed::{Coef, UPoly};
use super::series::SeriesTerm;
use super::{corollary2_integrate, get_identity, theorem23_shift, RegistryError};
use crate::exact_values::{beta_odd, eta_even, frak_d, lambda_even, PiPolynomial};

#[derive(Clone, Debug)]
pub struct ExactCheck {
    pub name: String,
    pub holds: bool,
    /// lhs - rhs, or a note when the check is structural
    pub detail: String,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn check(name: String, residual: Coef) -> ExactCheck {
    ExactCheck { name, holds: residual.is_zero(), detail: residual.to_string() }
}

fn pi(p: PiPolynomial) -> Coef {
    Coef::pi_poly(p)
}

/// Series-side values at the points where the trigonometric factor is periodic.
pub fn special_value_checks(r_max: u32) -> Vec<ExactCheck> {
    let mut out = Vec::new();
    let half = q(1, 2);
    let quarter = q(1, 4);
    for r in 1..=r_max {
        let lam_half = pi(lambda_even(r).expect("r >= 1").scale(&half));
        // sin(n pi) = 0
        out.push(check(format!("thm11-sin r={r} at x=c vanishes"), thm11_sin_poly(r).at_pi_multiple(&q(1, 1))));
        out.push(check(format!("thm11-sin r={r} at x=2c vanishes"), thm11_sin_poly(r).at_pi_multiple(&q(2, 1))));
        out.push(check(format!("thm18-sin r={r} at x=c vanishes"), thm18_sin_poly(r).at_pi_multiple(&q(1, 1))));
        // sum (-1)^n / n^2r = -eta(2r)
        let eta = pi(eta_even(r).expect("r >= 1"));
        out.push(check(format!("thm11-cos r={r} at x=c is -eta(2r)"), thm11_cos_poly(r).at_pi_multiple(&q(1, 1)).add(&eta)));
        // cos((2n+1) pi/2) = 0
        out.push(check(format!("cor5-beta r={r} at x=c/2 vanishes"), cor5_poly(r).at_pi_multiple(&half)));
        out.push(check(format!("cor6-lambda r={r} at x=c/2 vanishes"), cor6_poly(r).at_pi_multiple(&half)));
        // cos((2n-1) pi/4) = (-1)^[n/2]/sqrt 2
        let fd = pi(frak_d(r).expect("r >= 1"));
        out.push(check(format!("cor6-lambda r={r} at x=c/4 is frakD(2r)"), cor6_poly(r).at_pi_multiple(&quarter).sub(&fd)));
        out.push(check(format!("cor7 r={r} at x=c/4 is lambda(2r)/2"), cor7_poly(r).at_pi_multiple(&quarter).sub(&lam_half)));
        let beta_half = pi(beta_odd(r).expect("beta index").scale(&half));
        out.push(check(format!("cor8 r={r} at x=c/4 is beta(2r+1)/2"), cor8_poly(r).at_pi_multiple(&quarter).sub(&beta_half)));
        // d/du of the calD series at pi/4 is -lambda(2r)/2
        out.push(check(
            format!("cor8 derivative r={r} at x=c/4 is -lambda(2r)/2"),
            cor8_poly(r).derivative().at_pi_multiple(&quarter).add(&lam_half),
        ));
        match get_identity("cor6-lambda", r, None).and_then(|rec| theorem23_shift(&rec, &quarter)) {
            Ok(s) => out.push(check(
                format!("cor6-lambda r={r} shifted by c/4 at x=c/4 is lambda(2r)/2"),
                s.closed.poly.at_pi_multiple(&quarter).sub(&lam_half),
            )),
            Err(e) => out.push(ExactCheck { name: format!("cor6 shift r={r}"), holds: false, detail: e.to_string() }),
        }
    }
    out
}

fn same_poly(name: String, a: &UPoly, b: &UPoly) -> ExactCheck {
    check(name, Coef::zero()).with_poly_diff(a, b)
}

impl ExactCheck {
    fn with_poly_diff(mut self, a: &UPoly, b: &UPoly) -> ExactCheck {
        let d = a.sub(b);
        self.holds = d.is_zero();
        self.detail = d.to_string();
        self
    }
}

fn integrate_check(from: &str, to: &str, r: u32) -> Result<ExactCheck, RegistryError> {
    let src = get_identity(from, r, None)?;
    let got = corollary2_integrate(&src)?;
    let want = get_identity(to, r, None)?;
    let mut c = same_poly(format!("integrating {from} r={r} gives {to}"), &got.closed.poly, &want.closed.poly);
    if got.series != want.series {
        c.holds = false;
        c.detail = format!("series terms differ: {:?} vs {:?}", got.series, want.series);
    }
    Ok(c)
}

/// Termwise integration, shifts and the displayed frakD polynomials.
pub fn structural_checks(r_max: u32) -> Result<Vec<ExactCheck>, RegistryError> {
    let mut out = Vec::new();
    let quarter = q(1, 4);
    for r in 1..=r_max {
        out.push(integrate_check("thm11-cos", "thm11-sin", r)?);
        out.push(integrate_check("thm18-cos", "thm18-sin", r)?);
        let p = get_identity("thm11-cos", r, None)?.closed.poly;
        out.push(same_poly(format!("thm11-cos r={r} integrate then differentiate"), &p.antiderivative().derivative(), &p));
        let rec = get_identity("cor6-lambda", r, None)?;
        let zero = theorem23_shift(&rec, &q(0, 1))?;
        out.push(ExactCheck {
            name: format!("cor6-lambda r={r} shifted by 0 is unchanged"),
            holds: zero == rec,
            detail: String::new(),
        });
    }
    // lambda(2) - pi u/4
    let cor6_1 = theorem23_shift(&get_identity("cor6-lambda", 1, None)?, &quarter)?;
    let want = UPoly::from_coeffs(vec![pi(lambda_even(1).expect("r = 1")), pi(PiPolynomial::monomial(q(-1, 4), 1))]);
    out.push(same_poly("cor6-lambda r=1 shifted by c/4 is lambda(2) - pi u/4".into(), &cor6_1.closed.poly, &want));
    let cor6_2 = theorem23_shift(&get_identity("cor6-lambda", 2, None)?, &quarter)?;
    let eq69 = get_identity("eq69", 2, None)?;
    out.push(same_poly("cor6-lambda r=2 shifted by c/4 is the displayed cubic".into(), &cor6_2.closed.poly, &eq69.closed.poly));
    let mut series_match = ExactCheck {
        name: "cor6-lambda r=2 shifted by c/4 has the (-1)^[n/2]/sqrt 2 series".into(),
        holds: true,
        detail: String::new(),
    };
    if let (SeriesTerm::Trig(a), SeriesTerm::Trig(b)) = (&cor6_2.series, &eq69.series) {
        for n in 1..=64u64 {
            for y in [0.3, 0.41, 0.6] {
                let d = (a.term(n, y) - b.term(n, y) * b.scale.to_f64()).abs();
                if d > 1e-15 {
                    series_match.holds = false;
                    series_match.detail = format!("term {n} at y={y} differs by {d:e}");
                }
            }
        }
    }
    out.push(series_match);
    let eq70 = get_identity("eq70", 2, None)?;
    out.push(same_poly("displayed quadratic is the r=2 frakD polynomial".into(), &eq70.closed.poly, &cor7_poly(2)));
    Ok(out)
}
