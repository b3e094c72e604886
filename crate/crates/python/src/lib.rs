//! Python bindings for trigsum-core.

use std::str::FromStr;

use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use trigsum_core::abstract_ops;
use trigsum_core::cli;
use trigsum_core::exact_values::{self as ev, PiPolynomial};
use trigsum_core::expr::{parse, Expr};
use trigsum_core::identity_registry::{self as reg, IdentityRecord, VerificationReport};
use trigsum_core::odd_zeta::{self as oz, PrecisionContext, SeriesApprox, ZetaMethod};
use trigsum_core::series_mapping::{map_fourier_kind, SeriesKind};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn expr(src: &str) -> PyResult<Expr> {
    parse(src).map_err(err)
}

fn rational(src: &str) -> PyResult<BigRational> {
    BigRational::from_str(src).map_err(|e| err(format!("bad rational '{src}': {e}")))
}

/// Exact rational polynomial in pi.
#[pyclass(name = "PiPolynomial", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPiPolynomial(PiPolynomial);

#[pymethods]
impl PyPiPolynomial {
    /// (power, numerator, denominator) triples with integers as strings.
    fn terms(&self) -> Vec<(u32, String, String)> {
        self.0.terms().map(|(k, q)| (k, q.numer().to_string(), q.denom().to_string())).collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        PiPolynomial::from_json(s).map(PyPiPolynomial).map_err(err)
    }

    /// Decimal value with `digits` significant digits.
    #[pyo3(signature = (digits = 30))]
    fn value(&self, digits: u32) -> String {
        let prec = trigsum_core::real::bits_for_digits(digits) + 16;
        self.0.eval_real(prec).to_decimal(digits)
    }

    fn __float__(&self) -> f64 {
        self.0.eval_f64()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PiPolynomial({})", self.0)
    }
}

/// Exact value by name: zeta_even, eta_even, lambda_even, beta_odd, frakd,
/// cald, bernoulli_star, euler_number or harmonic.
#[pyfunction]
fn exact(name: &str, n: u32) -> PyResult<PyPiPolynomial> {
    let c = |q: BigRational| PiPolynomial::constant(q);
    let p = match name {
        "zeta_even" => ev::zeta_even(n),
        "eta_even" => ev::eta_even(n),
        "lambda_even" => ev::lambda_even(n),
        "beta_odd" => ev::beta_odd(n),
        "frakd" => ev::frak_d(n),
        "cald" => ev::cal_d(n),
        "bernoulli_star" => ev::bernoulli_star(n).map(c),
        "harmonic" => ev::harmonic(n).map(c),
        "euler_number" => ev::euler_number(n).map(|e| c(BigRational::from_integer(e))),
        _ => return Err(err(format!("unknown exact value '{name}'"))),
    };
    p.map(PyPiPolynomial).map_err(err)
}

fn approx<'py>(py: Python<'py>, a: &SeriesApprox, digits: u32) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("value", a.value.to_decimal(digits))?;
    d.set_item("bound", a.tail_bound)?;
    d.set_item("terms", a.terms_used)?;
    Ok(d)
}

fn context(digits: u32) -> PyResult<PrecisionContext> {
    if digits == 0 || digits > 2000 {
        return Err(err(format!("digits must be in 1..=2000, got {digits}")));
    }
    Ok(PrecisionContext::for_target(10f64.powi(-(digits as i32))))
}

/// zeta(2r+1) as {"value", "bound", "terms"}.
#[pyfunction]
#[pyo3(signature = (r, method = "thm15-zeta", digits = 30))]
fn zeta_odd<'py>(py: Python<'py>, r: u32, method: &str, digits: u32) -> PyResult<Bound<'py, PyDict>> {
    let m = ZetaMethod::from_name(method).ok_or_else(|| err(format!("unknown method '{method}'")))?;
    let a = oz::zeta_odd(r, m, &context(digits)?).map_err(err)?;
    approx(py, &a, digits)
}

/// Reference value of a named Dirichlet series at s.
#[pyfunction]
#[pyo3(signature = (series, s, digits = 30))]
fn dirichlet_oracle<'py>(py: Python<'py>, series: &str, s: u32, digits: u32) -> PyResult<Bound<'py, PyDict>> {
    let ser = cli::parse_series(series).map_err(err)?;
    let a = oz::dirichlet_oracle(&ser, s, &context(digits)?).map_err(err)?;
    approx(py, &a, digits)
}

/// (cos part, sin part) of cos(shift d/dvar) e and sin(shift d/dvar) e at var = arg.
#[pyfunction]
#[pyo3(signature = (e, arg, shift, var = "x"))]
fn apply_operator(e: &str, arg: &str, shift: &str, var: &str) -> PyResult<(String, String)> {
    let p = abstract_ops::apply_operator(&expr(e)?, var, &expr(arg)?, &expr(shift)?).map_err(err)?;
    Ok((p.cos_part.to_string(), p.sin_part.to_string()))
}

/// Closed form of a trigonometric series built from the power series `s` in t.
#[pyfunction]
#[pyo3(signature = (s, kind, c = "pi"))]
fn map_series<'py>(py: Python<'py>, s: &str, kind: &str, c: &str) -> PyResult<Bound<'py, PyDict>> {
    let k = SeriesKind::from_name(kind).ok_or_else(|| err(format!("unknown series kind '{kind}'")))?;
    let r = map_fourier_kind(&expr(s)?, "t", "x", &expr(c)?, k).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("kind", k.name())?;
    d.set_item("closed_form", r.closed_form.to_string())?;
    d.set_item("validity", (r.validity.lo_value(), r.validity.hi_value()))?;
    let p = r.singular.period_value;
    let pts: Vec<f64> = r.singular.points_in(-p, p).into_iter().map(|x| x.1).collect();
    d.set_item("singular_points", pts)?;
    Ok(d)
}

fn report<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("id", &r.id)?;
    d.set_item("r", r.r)?;
    d.set_item("c", r.c)?;
    d.set_item("N", r.terms)?;
    d.set_item("tol", r.tol)?;
    d.set_item("max_error", r.max_error)?;
    d.set_item("pass", r.pass)?;
    Ok(d)
}

/// One identity of the registry at a fixed r.
#[pyclass(name = "Identity", frozen)]
pub struct PyIdentity(IdentityRecord);

#[pymethods]
impl PyIdentity {
    #[new]
    #[pyo3(signature = (id, r, x0 = None))]
    fn new(id: &str, r: u32, x0: Option<&str>) -> PyResult<Self> {
        let x0 = x0.map(rational).transpose()?;
        reg::get_identity(id, r, x0.as_ref()).map(PyIdentity).map_err(err)
    }

    #[getter]
    fn id(&self) -> &str {
        &self.0.id
    }

    #[getter]
    fn r(&self) -> u32 {
        self.0.r
    }

    #[getter]
    fn description(&self) -> &str {
        &self.0.description
    }

    #[getter]
    fn closed_form(&self) -> String {
        self.0.closed.to_string()
    }

    #[getter]
    fn interval(&self) -> String {
        self.0.interval.to_string()
    }

    #[pyo3(signature = (x, c = None, digits = 30))]
    fn closed_form_eval(&self, x: f64, c: Option<f64>, digits: u32) -> PyResult<f64> {
        let c = c.unwrap_or(self.0.default_c);
        self.0.closed_form_eval(c, x, &context(digits)?).map(|v| v.to_f64()).map_err(err)
    }

    #[pyo3(signature = (x, terms, c = None))]
    fn partial_sum(&self, x: f64, terms: u64, c: Option<f64>) -> f64 {
        self.0.partial_sum_eval(c.unwrap_or(self.0.default_c), x, terms)
    }

    #[pyo3(signature = (grid = 50, terms = None, tol = None, c = None))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        grid: usize,
        terms: Option<u64>,
        tol: Option<f64>,
        c: Option<f64>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let rep = self.0.verify(
            c.unwrap_or(self.0.default_c),
            grid,
            terms.unwrap_or(self.0.terms),
            tol.unwrap_or(self.0.tol),
        );
        report(py, &rep)
    }

    /// Shift by x0 (in units of c).
    fn shift(&self, x0: &str) -> PyResult<Self> {
        reg::theorem23_shift(&self.0, &rational(x0)?).map(PyIdentity).map_err(err)
    }

    /// Termwise integration from 0.
    fn integrate(&self) -> PyResult<Self> {
        reg::corollary2_integrate(&self.0).map(PyIdentity).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Identity({}, r={})", self.0.id, self.0.r)
    }
}

#[pyfunction]
fn list_identities() -> Vec<String> {
    reg::CATALOG.iter().map(|e| e.id.to_string()).collect()
}

/// Every catalog identity at its documented (N, tol).
#[pyfunction]
fn verify_all<'py>(py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let reports = py.detach(reg::verify_all);
    reports.iter().map(|r| report(py, r)).collect()
}

/// Run the command-line interface; returns (exit code, stdout, stderr).
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let o = cli::run(std::iter::once("trigsum".to_string()).chain(args));
    (o.code, o.stdout, o.stderr)
}

#[pymodule]
fn trigsum(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPiPolynomial>()?;
    m.add_class::<PyIdentity>()?;
    m.add_function(wrap_pyfunction!(exact, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_odd, m)?)?;
    m.add_function(wrap_pyfunction!(dirichlet_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(apply_operator, m)?)?;
    m.add_function(wrap_pyfunction!(map_series, m)?)?;
    m.add_function(wrap_pyfunction!(list_identities, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
