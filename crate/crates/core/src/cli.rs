//! Command-line front end. `run` returns the exit code and both streams so the
//! binary only has to print them.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use crate::abstract_ops::apply_operator;
use crate::exact_values::{
    bernoulli_star, beta_odd, cal_d, eta_even, euler_number, frak_d, harmonic, lambda_even, zeta_even, PiPolynomial,
};
use crate::expr::{parse, Expr};
use crate::identity_registry::{
    get_identity, special_value_checks, structural_checks, verify_all, VerificationReport, CATALOG,
};
use crate::odd_zeta::{dirichlet_oracle, zeta_odd, DirichletSeries, PrecisionContext, SeriesApprox, ZetaMethod};
use crate::series_mapping::{map_fourier_kind, SeriesKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "trigsum", version, about = "Closed forms of trigonometric series, exact zeta-family values and odd zeta series")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// significant digits for numeric output
    #[arg(long, global = true, default_value_t = 30)]
    pub digits: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact rational multiples of powers of pi
    Exact {
        #[arg(value_enum)]
        which: ExactKind,
        #[arg(long)]
        n: u32,
    },
    /// Operator calculus
    Operator {
        #[command(subcommand)]
        action: OperatorAction,
    },
    /// Map a power series to the sum of its trigonometric series
    Map {
        #[arg(value_enum)]
        map: MapKind,
        #[command(flatten)]
        args: MapArgs,
    },
    /// zeta(2r+1) from the fast series
    ZetaOdd {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value = "thm15-zeta")]
        method: String,
    },
    /// Reference value of a Dirichlet series
    Oracle {
        /// zeta, eta, lambda, beta, frakd, cald, hurwitz:<a>, alt-hurwitz:<a>
        #[arg(long)]
        series: String,
        #[arg(long)]
        s: u32,
    },
    /// Compare an identity against its partial sums
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExactKind {
    ZetaEven,
    EtaEven,
    LambdaEven,
    BetaOdd,
    Frakd,
    Cald,
    BernoulliStar,
    EulerNumber,
    Harmonic,
}

#[derive(Debug, Subcommand)]
pub enum OperatorAction {
    /// cos(h d/dx) f or sin(h d/dx) f at x = arg
    Apply {
        #[arg(long, value_enum)]
        kind: TrigKind,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        arg: String,
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
        #[arg(long, default_value = "x")]
        var: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TrigKind {
    Cos,
    Sin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    Fourier,
    Cospow,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// S(t) as an expression in t
    #[arg(long, allow_hyphen_values = true)]
    sum: String,
    #[arg(long, value_enum)]
    kind: TrigKind,
    /// half period of the Fourier series
    #[arg(long, default_value = "pi", allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value = "t")]
    t: String,
    #[arg(long, default_value = "x")]
    x: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "all")]
    id: Option<String>,
    #[arg(long, required_unless_present = "all")]
    r: Option<u32>,
    #[arg(long)]
    x0: Option<String>,
    #[arg(long, default_value_t = 50)]
    grid: usize,
    #[arg(long)]
    terms: Option<u64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, conflicts_with_all = ["id", "r", "x0", "terms", "tol", "c"])]
    all: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(&cfg)
}

pub fn execute(cfg: &CliConfig) -> Outcome {
    match &cfg.command {
        Command::Exact { which, n } => exact(cfg, *which, *n),
        Command::Operator { action: OperatorAction::Apply { kind, expr, arg, shift, var } } => {
            operator(cfg, *kind, expr, arg, shift, var)
        }
        Command::Map { map, args } => map_series(cfg, *map, args),
        Command::ZetaOdd { r, method } => zeta(cfg, *r, method),
        Command::Oracle { series, s } => oracle(cfg, series, *s),
        Command::Verify(v) => verify(cfg, v),
    }
}

fn poly_out(cfg: &CliConfig, p: &PiPolynomial, text: String) -> String {
    match cfg.format {
        Format::Text => text + "\n",
        Format::Json => p.to_json() + "\n",
        Format::Csv => {
            let mut s = String::from("power,num,den\n");
            for (k, v) in p.terms() {
                let _ = writeln!(s, "{k},{},{}", v.numer(), v.denom());
            }
            s
        }
    }
}

fn exact(cfg: &CliConfig, which: ExactKind, n: u32) -> Outcome {
    let res = match which {
        ExactKind::ZetaEven => zeta_even(n),
        ExactKind::EtaEven => eta_even(n),
        ExactKind::LambdaEven => lambda_even(n),
        ExactKind::BetaOdd => beta_odd(n),
        ExactKind::Frakd => frak_d(n),
        ExactKind::Cald => cal_d(n),
        ExactKind::BernoulliStar => bernoulli_star(n).map(PiPolynomial::constant),
        ExactKind::Harmonic => harmonic(n).map(PiPolynomial::constant),
        ExactKind::EulerNumber => euler_number(n).map(|e| PiPolynomial::constant(BigRational::from_integer(e))),
    };
    match res {
        Ok(p) => {
            let text = match p.as_monomial() {
                Some((q, 0)) => q.to_string(),
                _ if p.is_zero() => "0".into(),
                _ => p.to_string(),
            };
            Outcome::ok(poly_out(cfg, &p, text))
        }
        Err(e) => Outcome::usage(e),
    }
}

fn expr_arg(name: &str, src: &str) -> Result<Expr, Outcome> {
    parse(src).map_err(|e| Outcome::usage(format!("--{name}: {e}")))
}

fn operator(cfg: &CliConfig, kind: TrigKind, e: &str, arg: &str, shift: &str, var: &str) -> Outcome {
    let parsed = expr_arg("expr", e).and_then(|e| Ok((e, expr_arg("arg", arg)?, expr_arg("shift", shift)?)));
    let (e, a, h) = match parsed {
        Ok(t) => t,
        Err(o) => return o,
    };
    let pair = match apply_operator(&e, var, &a, &h) {
        Ok(p) => p,
        Err(err) => return Outcome::usage(err),
    };
    let (name, part) = match kind {
        TrigKind::Cos => ("cos", &pair.cos_part),
        TrigKind::Sin => ("sin", &pair.sin_part),
    };
    let out = match cfg.format {
        Format::Text => format!("{part}\n"),
        Format::Json => {
            json!({"kind": name, "expr": e.to_string(), "arg": a.to_string(), "shift": h.to_string(), "result": part.to_string()})
                .to_string()
                + "\n"
        }
        Format::Csv => format!("kind,result\n{name},\"{part}\"\n"),
    };
    Outcome::ok(out)
}

fn map_series(cfg: &CliConfig, map: MapKind, a: &MapArgs) -> Outcome {
    let s = match expr_arg("sum", &a.sum) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let (c, kind) = match map {
        MapKind::Fourier => match expr_arg("c", &a.c) {
            Ok(c) => (c, if a.kind == TrigKind::Cos { SeriesKind::Cosine } else { SeriesKind::Sine }),
            Err(o) => return o,
        },
        MapKind::Cospow => {
            (Expr::pi(), if a.kind == TrigKind::Cos { SeriesKind::CosCospow } else { SeriesKind::SinCospow })
        }
    };
    let res = match map_fourier_kind(&s, &a.t, &a.x, &c, kind) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let end = |e: &Option<crate::series_mapping::Endpoint>, inf: &str| {
        e.as_ref().map_or(inf.to_string(), |p| p.expr.to_string())
    };
    let lo = end(&res.validity.lo, "-inf");
    let hi = end(&res.validity.hi, "inf");
    let p = res.singular.period_value;
    let sing: Vec<String> = res.singular.points_in(-p, p).into_iter().map(|(e, _)| e.to_string()).collect();
    let out = match cfg.format {
        Format::Text => format!(
            "{} = {}\nvalid on ({lo}, {hi})\nsingular points in [-{}, {}]: {}\n",
            kind.name(),
            res.closed_form,
            res.singular.period,
            res.singular.period,
            sing.join(", ")
        ),
        Format::Json => {
            json!({
                "kind": kind.name(),
                "closed_form": res.closed_form.to_string(),
                "validity": [lo, hi],
                "period": res.singular.period.to_string(),
                "singular_points": sing,
                "guards": res.guards.iter().map(|g| g.nonzero.to_string()).collect::<Vec<_>>(),
            })
            .to_string()
                + "\n"
        }
        Format::Csv => format!("kind,closed_form,lo,hi\n{},\"{}\",{lo},{hi}\n", kind.name(), res.closed_form),
    };
    Outcome::ok(out)
}

fn context(digits: u32) -> Result<PrecisionContext, Outcome> {
    if digits == 0 || digits > 2000 {
        return Err(Outcome::usage(format!("--digits must be in 1..=2000, got {digits}")));
    }
    Ok(PrecisionContext::for_target(10f64.powi(-(digits as i32))))
}

fn approx_out(cfg: &CliConfig, label: &[(&str, String)], a: &SeriesApprox) -> String {
    let value = a.value.to_decimal(cfg.digits);
    match cfg.format {
        Format::Text => format!("{value} ± {:.3e}\n", a.tail_bound),
        Format::Json => {
            let mut m = serde_json::Map::new();
            for (k, v) in label {
                m.insert((*k).into(), v.clone().into());
            }
            m.insert("digits".into(), cfg.digits.into());
            m.insert("value".into(), value.into());
            m.insert("bound".into(), a.tail_bound.into());
            m.insert("terms".into(), a.terms_used.into());
            serde_json::Value::Object(m).to_string() + "\n"
        }
        Format::Csv => {
            let head: Vec<&str> = label.iter().map(|l| l.0).collect();
            let vals: Vec<&str> = label.iter().map(|l| l.1.as_str()).collect();
            format!(
                "{},digits,value,bound,terms\n{},{},{value},{:e},{}\n",
                head.join(","),
                vals.join(","),
                cfg.digits,
                a.tail_bound,
                a.terms_used
            )
        }
    }
}

fn zeta(cfg: &CliConfig, r: u32, method: &str) -> Outcome {
    let Some(m) = ZetaMethod::from_name(method) else {
        let names: Vec<_> = ZetaMethod::ALL.iter().map(|m| m.name()).collect();
        return Outcome::usage(format!("unknown method '{method}' (expected one of {})", names.join(", ")));
    };
    let ctx = match context(cfg.digits) {
        Ok(c) => c,
        Err(o) => return o,
    };
    match zeta_odd(r, m, &ctx) {
        Ok(a) => Outcome::ok(approx_out(cfg, &[("r", r.to_string()), ("method", m.name().into())], &a)),
        Err(e) => Outcome::usage(e),
    }
}

/// Parse a Dirichlet series name.
pub fn parse_series(name: &str) -> Result<DirichletSeries, String> {
    let rat = |a: &str| BigRational::from_str(a).map_err(|e| format!("bad rational '{a}': {e}"));
    Ok(match name {
        "zeta" => DirichletSeries::Zeta,
        "eta" => DirichletSeries::Eta,
        "lambda" => DirichletSeries::Lambda,
        "beta" => DirichletSeries::Beta,
        "frakd" => DirichletSeries::FrakD,
        "cald" => DirichletSeries::CalD,
        _ => match name.split_once(':') {
            Some(("hurwitz", a)) => DirichletSeries::Hurwitz(rat(a)?),
            Some(("alt-hurwitz", a)) => DirichletSeries::AlternatingHurwitz(rat(a)?),
            _ => return Err(format!("unknown series '{name}'")),
        },
    })
}

fn oracle(cfg: &CliConfig, series: &str, s: u32) -> Outcome {
    let ser = match parse_series(series) {
        Ok(d) => d,
        Err(e) => return Outcome::usage(e),
    };
    let ctx = match context(cfg.digits) {
        Ok(c) => c,
        Err(o) => return o,
    };
    match dirichlet_oracle(&ser, s, &ctx) {
        Ok(a) => Outcome::ok(approx_out(cfg, &[("series", ser.name()), ("s", s.to_string())], &a)),
        Err(e) => Outcome::usage(e),
    }
}

fn report_text(r: &VerificationReport) -> String {
    format!(
        "{} r={} c={} N={} tol={:e} max_error={:e} {}\n",
        r.id,
        r.r,
        r.c,
        r.terms,
        r.tol,
        r.max_error,
        if r.pass { "PASS" } else { "FAIL" }
    )
}

fn reports_out(cfg: &CliConfig, reports: &[VerificationReport]) -> String {
    match cfg.format {
        Format::Text => reports.iter().map(report_text).collect(),
        Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => serde_json::to_string(reports).expect("reports serialise") + "\n",
        Format::Csv => {
            let mut s = format!("{}\n", VerificationReport::CSV_HEADER);
            for r in reports {
                s += &r.to_csv();
                s.push('\n');
            }
            s
        }
    }
}

fn verify(cfg: &CliConfig, v: &VerifyArgs) -> Outcome {
    if v.all {
        return verify_everything(cfg);
    }
    let (Some(id), Some(r)) = (&v.id, v.r) else {
        return Outcome::usage("--id and --r are required without --all");
    };
    let x0 = match v.x0.as_deref().map(BigRational::from_str).transpose() {
        Ok(x) => x,
        Err(e) => return Outcome::usage(format!("--x0: {e}")),
    };
    let rec = match get_identity(id, r, x0.as_ref()) {
        Ok(rec) => rec,
        Err(e) => return Outcome::usage(e),
    };
    if v.grid == 0 {
        return Outcome::usage("--grid must be positive");
    }
    let rep = rec.verify(v.c.unwrap_or(rec.default_c), v.grid, v.terms.unwrap_or(rec.terms), v.tol.unwrap_or(rec.tol));
    Outcome { code: if rep.pass { EXIT_OK } else { EXIT_FAIL }, stdout: reports_out(cfg, &[rep]), stderr: String::new() }
}

fn verify_everything(cfg: &CliConfig) -> Outcome {
    let reports = verify_all();
    let mut pass = reports.iter().all(|r| r.pass);
    let mut extra = String::new();
    for e in CATALOG.iter() {
        for &r in e.sweep {
            let rec = e.build(r, None).expect("sweep values are in range");
            for (y, closed, err) in rec.endpoint_errors(rec.terms) {
                let ok = if closed { err <= rec.tol } else { err > 10.0 * rec.tol };
                if closed || r == 0 {
                    pass &= ok;
                    let kind = if closed { "closed" } else { "open" };
                    let _ = writeln!(
                        extra,
                        "endpoint {} r={r} x/c={y} {kind} error={err:e} {}",
                        rec.id,
                        if ok { "PASS" } else { "FAIL" }
                    );
                }
            }
        }
    }
    let mut checks = special_value_checks(6);
    match structural_checks(5) {
        Ok(c) => checks.extend(c),
        Err(e) => return Outcome { code: EXIT_FAIL, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
    for c in &checks {
        pass &= c.holds;
        let _ = writeln!(extra, "exact {} {}", c.name, if c.holds { "PASS" } else { "FAIL" });
    }
    let mut stdout = reports_out(cfg, &reports);
    if cfg.format == Format::Text {
        stdout += &extra;
    }
    Outcome { code: if pass { EXIT_OK } else { EXIT_FAIL }, stdout, stderr: String::new() }
}
