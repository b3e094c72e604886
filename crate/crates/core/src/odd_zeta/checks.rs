//! Hurwitz and trigonometric Dirichlet-series identities, both sides
//! computed independently.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::oracle::{dirichlet_oracle, hurwitz_zeta, DirichletSeries, PeriodicSeries, Scale};
use super::{PrecisionContext, SeriesApprox, ZetaError};
use crate::exact_values::{factorial, zeta_even};
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckGroup {
    /// multiplication theorems for zeta(s, a)
    Multiplication,
    /// sums of cos(n pi/3), cos(2n pi/3), sin(2n pi/3), cos(n pi/2) over n^s
    Connon,
    /// zeta(2r+1, 1/3) against even zeta values
    Corollary3,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 3] = [CheckGroup::Multiplication, CheckGroup::Connon, CheckGroup::Corollary3];

    pub fn name(self) -> &'static str {
        match self {
            CheckGroup::Multiplication => "multiplication",
            CheckGroup::Connon => "connon",
            CheckGroup::Corollary3 => "corollary3",
        }
    }

    pub fn from_name(s: &str) -> Option<CheckGroup> {
        CheckGroup::ALL.into_iter().find(|g| g.name() == s)
    }
}

#[derive(Clone, Debug)]
pub struct IdentityResidual {
    pub name: String,
    pub residual: f64,
    /// Combined truncation bound of both sides.
    pub bound: f64,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn real_q(v: &BigRational, ctx: &PrecisionContext) -> Real {
    Real::from_rational(v, ctx.prec())
}

struct Acc {
    value: Real,
    bound: f64,
}

impl Acc {
    fn zero(ctx: &PrecisionContext) -> Acc {
        Acc { value: Real::zero(ctx.prec()), bound: 0.0 }
    }

    fn add(mut self, k: &Real, s: &SeriesApprox) -> Acc {
        self.value = &self.value + &(k * &s.value);
        self.bound += k.abs().to_f64() * s.tail_bound;
        self
    }

    fn add_exact(mut self, v: &Real) -> Acc {
        self.value = &self.value + v;
        self
    }
}

fn residual(name: String, lhs: Acc, rhs: Acc) -> IdentityResidual {
    IdentityResidual { name, residual: (&lhs.value - &rhs.value).abs().to_f64(), bound: lhs.bound + rhs.bound }
}

fn one(ctx: &PrecisionContext) -> Real {
    Real::from_i64(1, ctx.prec())
}

fn multiplication(ctx: &PrecisionContext) -> Result<Vec<IdentityResidual>, ZetaError> {
    let mut out = Vec::new();
    let h = |s: u32, a: BigRational| hurwitz_zeta(s, &a, ctx);
    for s in 2..=5u32 {
        let zeta = h(s, q(1, 1))?;
        for m in 2..=3i64 {
            // m^s zeta(s) = sum_{k=1}^m zeta(s, k/m)
            let lhs = Acc::zero(ctx).add(&Real::from_i64(m.pow(s), ctx.prec()), &zeta);
            let mut rhs = Acc::zero(ctx);
            for k in 1..=m {
                rhs = rhs.add(&one(ctx), &h(s, q(k, m))?);
            }
            out.push(residual(format!("multiplication m={m} s={s}"), lhs, rhs));

            // sum_{k<m} zeta(s, a + k/m) = m^s zeta(s, m a) at a = 1/5
            let a = q(1, 5);
            let mut lhs = Acc::zero(ctx);
            for k in 0..m {
                lhs = lhs.add(&one(ctx), &h(s, &a + q(k, m))?);
            }
            let rhs = Acc::zero(ctx).add(&Real::from_i64(m.pow(s), ctx.prec()), &h(s, &a * q(m, 1))?);
            out.push(residual(format!("shifted multiplication m={m} s={s} a=1/5"), lhs, rhs));
        }
        // zeta(s, 1/3) + zeta(s, 2/3) = (3^s - 1) zeta(s)
        let lhs = Acc::zero(ctx).add(&one(ctx), &h(s, q(1, 3))?).add(&one(ctx), &h(s, q(2, 3))?);
        let rhs = Acc::zero(ctx).add(&Real::from_i64(3i64.pow(s) - 1, ctx.prec()), &zeta);
        out.push(residual(format!("thirds s={s}"), lhs, rhs));
        // zeta(s, 2/3) + zeta(s, 4/3) = 3^s zeta(s, 2) - zeta(s)
        let lhs = Acc::zero(ctx).add(&one(ctx), &h(s, q(2, 3))?).add(&one(ctx), &h(s, q(4, 3))?);
        let rhs = Acc::zero(ctx).add(&Real::from_i64(3i64.pow(s), ctx.prec()), &h(s, q(2, 1))?).add(&-one(ctx), &zeta);
        out.push(residual(format!("shifted thirds s={s}"), lhs, rhs));
        // zeta(s, 2) = zeta(s) - 1
        let lhs = Acc::zero(ctx).add(&one(ctx), &h(s, q(2, 1))?);
        let rhs = Acc::zero(ctx).add(&one(ctx), &zeta).add_exact(&-one(ctx));
        out.push(residual(format!("unit shift s={s}"), lhs, rhs));
        // zeta(s, a) + Phi(-1, s, a) = 2^(1-s) zeta(s, a/2) at a = 1/3
        let a = q(1, 3);
        let alt = dirichlet_oracle(&DirichletSeries::AlternatingHurwitz(a.clone()), s, ctx)?;
        let lhs = Acc::zero(ctx).add(&one(ctx), &h(s, a.clone())?).add(&one(ctx), &alt);
        let rhs = Acc::zero(ctx).add(&one(ctx).mul_pow2(1 - s as i64), &h(s, &a * q(1, 2))?);
        out.push(residual(format!("lerch halving s={s} a=1/3"), lhs, rhs));
    }
    Ok(out)
}

fn trig_series(coeffs: &[BigRational], scale: Scale, s: u32, ctx: &PrecisionContext) -> Result<SeriesApprox, ZetaError> {
    let p = PeriodicSeries { coeffs: coeffs.to_vec(), offset: q(1, 1), scale };
    dirichlet_oracle(&DirichletSeries::Custom(p), s, ctx)
}

fn connon(ctx: &PrecisionContext) -> Result<Vec<IdentityResidual>, ZetaError> {
    let mut out = Vec::new();
    let prec = ctx.prec();
    let half = q(1, 2);
    // pattern index j is n - 1
    let cos_pi3 = [half.clone(), -&half, q(-1, 1), -&half, half.clone(), q(1, 1)];
    let cos_2pi3 = [-&half, -&half, q(1, 1)];
    let sin_2pi3 = [q(1, 1), q(-1, 1), q(0, 1)];
    let cos_pi2 = [q(0, 1), q(-1, 1), q(0, 1), q(1, 1)];
    let pw = |b: i64, e: i64| Real::from_i64(b, prec).powi(e);
    let sqrt3 = Real::from_i64(3, prec).sqrt();
    for s in 2..=5u32 {
        let si = s as i64;
        let zeta = hurwitz_zeta(s, &q(1, 1), ctx)?;

        let lhs = Acc::zero(ctx).add(&one(ctx), &trig_series(&cos_pi3, Scale::One, s, ctx)?);
        let k = &(&(&(&pw(6, 1 - si) - &pw(3, 1 - si)) - &pw(2, 1 - si)) + &one(ctx)).mul_pow2(-1);
        out.push(residual(format!("cos(n pi/3) s={s}"), lhs, Acc::zero(ctx).add(&k, &zeta)));

        let lhs = Acc::zero(ctx).add(&one(ctx), &trig_series(&cos_2pi3, Scale::One, s, ctx)?);
        let k = (&pw(3, 1 - si) - &one(ctx)).mul_pow2(-1);
        out.push(residual(format!("cos(2n pi/3) s={s}"), lhs, Acc::zero(ctx).add(&k, &zeta)));

        let lhs = Acc::zero(ctx).add(&one(ctx), &trig_series(&sin_2pi3, Scale::HalfSqrt3, s, ctx)?);
        let k1 = &sqrt3 * &(&pw(3, -si) - &one(ctx)).mul_pow2(-1);
        let k2 = &sqrt3 * &pw(3, -si);
        let rhs = Acc::zero(ctx).add(&k1, &zeta).add(&k2, &hurwitz_zeta(s, &q(1, 3), ctx)?);
        out.push(residual(format!("sin(2n pi/3) s={s}"), lhs, rhs));

        let lhs = Acc::zero(ctx).add(&one(ctx), &trig_series(&cos_pi2, Scale::One, s, ctx)?);
        let k = &pw(2, -si) * &(&pw(2, 1 - si) - &one(ctx));
        out.push(residual(format!("cos(n pi/2) s={s}"), lhs, Acc::zero(ctx).add(&k, &zeta)));
    }
    Ok(out)
}

fn corollary3(ctx: &PrecisionContext) -> Result<Vec<IdentityResidual>, ZetaError> {
    let prec = ctx.prec();
    let pi = Real::pi(prec);
    let sqrt3 = Real::from_i64(3, prec).sqrt();
    let mut out = Vec::new();
    for r in 1..=3u32 {
        let s = 2 * r + 1;
        // sqrt 3 [zeta(2r+1, 1/3) + (1 - 3^(2r+1))/2 zeta(2r+1)]
        let k = BigRational::new(BigInt::from(1) - BigInt::from(3).pow(s), BigInt::from(2));
        let lhs = Acc::zero(ctx)
            .add(&sqrt3, &hurwitz_zeta(s, &q(1, 3), ctx)?)
            .add(&(&sqrt3 * &real_q(&k, ctx)), &hurwitz_zeta(s, &q(1, 1), ctx)?);
        // sum_{k<r} (-1)^k (2 pi)^(2k+1)/(2k+1)! 3^(2r-2k) zeta(2r-2k) + (-1)^r 2^(2r-1) pi^(2r+1) (6r+1)/(2r+1)!
        let two_pi = pi.mul_pow2(1);
        let mut rhs = Real::zero(prec);
        for k in 0..r {
            let z = zeta_even(r - k).expect("r - k >= 1").eval_real(prec);
            let c = &(&two_pi.powi(2 * k as i64 + 1) / &Real::from_bigint(&factorial(2 * k + 1), prec))
                * &Real::from_bigint(&BigInt::from(3).pow(2 * r - 2 * k), prec);
            let t = &c * &z;
            rhs = if k % 2 == 0 { &rhs + &t } else { &rhs - &t };
        }
        let last = &(&pi.powi(s as i64).mul_pow2(2 * r as i64 - 1) * &Real::from_i64(6 * r as i64 + 1, prec))
            / &Real::from_bigint(&factorial(s), prec);
        rhs = if r % 2 == 0 { &rhs + &last } else { &rhs - &last };
        out.push(residual(format!("hurwitz third r={r}"), lhs, Acc::zero(ctx).add_exact(&rhs)));
    }
    Ok(out)
}

/// Residuals |LHS - RHS| for one identity group.
pub fn identity_checks(group: CheckGroup, ctx: &PrecisionContext) -> Result<Vec<IdentityResidual>, ZetaError> {
    ctx.check()?;
    match group {
        CheckGroup::Multiplication => multiplication(ctx),
        CheckGroup::Connon => connon(ctx),
        CheckGroup::Corollary3 => corollary3(ctx),
    }
}
