//! Python bindings: special functions, both quadrature routes, the catalog and the verifier.

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use lerchlab::catalog::{self, IntegralParams as CoreParams};
use lerchlab::quadrature::{self, QuadConfig};
use lerchlab::specfun::{self, LerchStrategy};
use lerchlab::verify::{self, OutputFormat, RunConfig};

create_exception!(lerchlab_py, LerchlabError, PyValueError);

fn to_py(err: lerchlab::Error) -> PyErr {
    match err {
        lerchlab::Error::Pole(msg) => PyZeroDivisionError::new_err(msg),
        other => LerchlabError::new_err(other.to_string()),
    }
}

fn strategy(name: Option<&str>) -> PyResult<Option<LerchStrategy>> {
    let Some(name) = name else { return Ok(None) };
    LerchStrategy::DISPATCH_ORDER
        .into_iter()
        .find(|s| s.to_string() == name)
        .map(Some)
        .ok_or_else(|| PyValueError::new_err(format!("unknown strategy {name:?}")))
}

/// Parameters `(m, k, a, p, q)` of the double-integral family.
#[pyclass(name = "IntegralParams", from_py_object)]
#[derive(Clone, Copy)]
struct IntegralParams {
    inner: CoreParams,
}

#[pymethods]
impl IntegralParams {
    #[new]
    #[pyo3(signature = (m, k, a=Complex64::new(1.0, 0.0), p=Complex64::new(1.0, 0.0), q=Complex64::new(0.25, 0.0)))]
    fn new(m: Complex64, k: Complex64, a: Complex64, p: Complex64, q: Complex64) -> Self {
        Self { inner: CoreParams::new(m, k, a, p, q) }
    }

    #[getter]
    fn m(&self) -> Complex64 {
        self.inner.m
    }
    #[getter]
    fn k(&self) -> Complex64 {
        self.inner.k
    }
    #[getter]
    fn a(&self) -> Complex64 {
        self.inner.a
    }
    #[getter]
    fn p(&self) -> Complex64 {
        self.inner.p
    }
    #[getter]
    fn q(&self) -> Complex64 {
        self.inner.q
    }

    /// "paper_strict" or "analytic_extension".
    fn domain(&self) -> String {
        self.inner.domain().as_str().to_string()
    }

    fn __repr__(&self) -> String {
        let p = &self.inner;
        format!("IntegralParams(m={}, k={}, a={}, p={}, q={})", p.m, p.k, p.a, p.p, p.q)
    }
}

#[pyclass(name = "QuadratureResult", frozen, get_all)]
struct QuadratureResult {
    value: Complex64,
    err_estimate: f64,
    evaluations: usize,
    converged: bool,
}

impl From<quadrature::QuadratureResult> for QuadratureResult {
    fn from(r: quadrature::QuadratureResult) -> Self {
        Self { value: r.value, err_estimate: r.err_estimate, evaluations: r.evaluations, converged: r.converged }
    }
}

#[pymethods]
impl QuadratureResult {
    fn __repr__(&self) -> String {
        format!(
            "QuadratureResult(value={}, err_estimate={:e}, evaluations={}, converged={})",
            self.value, self.err_estimate, self.evaluations, self.converged
        )
    }
}

fn quad_config(rel_tol: f64) -> QuadConfig {
    QuadConfig { rel_tol, ..QuadConfig::default() }
}

#[pyfunction]
#[pyo3(signature = (z, s, v, strategy_name=None))]
fn lerch_phi(z: Complex64, s: Complex64, v: Complex64, strategy_name: Option<&str>) -> PyResult<Complex64> {
    specfun::lerch_phi(z, s, v, strategy(strategy_name)?).map_err(to_py)
}

#[pyfunction]
fn hurwitz_zeta(s: Complex64, v: Complex64) -> PyResult<Complex64> {
    specfun::hurwitz_zeta(s, v).map_err(to_py)
}

#[pyfunction]
fn hurwitz_zeta_sderiv(s: Complex64, v: Complex64) -> PyResult<Complex64> {
    specfun::hurwitz_zeta_sderiv(s, v).map_err(to_py)
}

#[pyfunction]
fn riemann_zeta(s: Complex64) -> PyResult<Complex64> {
    specfun::riemann_zeta(s).map_err(to_py)
}

#[pyfunction]
fn glaisher_constant() -> f64 {
    specfun::glaisher_constant().re
}

#[pyfunction]
fn bessel_k(nu: Complex64, z: Complex64) -> PyResult<Complex64> {
    specfun::bessel_k(nu, z).map_err(to_py)
}

#[pyfunction]
fn gauss_2f1_a1(a: Complex64, z: Complex64) -> PyResult<Complex64> {
    specfun::gauss_2f1_a1(a, z).map_err(to_py)
}

#[pyfunction]
fn rhs_main_theorem(params: IntegralParams) -> PyResult<Complex64> {
    catalog::rhs_main_theorem(&params.inner).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (params, rel_tol=1e-10))]
fn integrate_reduced_1d(params: IntegralParams, rel_tol: f64) -> PyResult<QuadratureResult> {
    quadrature::integrate_reduced_1d(&params.inner, &quad_config(rel_tol)).map(Into::into).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (params, rel_tol=1e-10))]
fn integrate_2d_paper(py: Python<'_>, params: IntegralParams, rel_tol: f64) -> PyResult<QuadratureResult> {
    let cfg = quad_config(rel_tol);
    py.detach(|| quadrature::integrate_2d_paper(&params.inner, &cfg)).map(Into::into).map_err(to_py)
}

/// A catalog entry at its default parameters.
#[pyclass(name = "CatalogEntry", frozen)]
struct CatalogEntry {
    inner: catalog::CatalogEntry,
}

#[pymethods]
impl CatalogEntry {
    #[getter]
    fn id(&self) -> &str {
        &self.inner.id
    }
    #[getter]
    fn integrand(&self) -> &str {
        self.inner.integrand_text
    }
    #[getter]
    fn formula(&self) -> &str {
        self.inner.closed_form_text
    }
    #[getter]
    fn domain(&self) -> String {
        self.inner.domain.as_str().to_string()
    }
    #[getter]
    fn notes(&self) -> Vec<String> {
        self.inner.notes.clone()
    }

    fn closed_form(&self) -> PyResult<Complex64> {
        self.inner.evaluate_closed_form().map_err(to_py)
    }

    #[pyo3(signature = (rel_tol=1e-10))]
    fn integrate_reduced(&self, rel_tol: f64) -> PyResult<QuadratureResult> {
        quadrature::integrate_reduced(&self.inner.integrand, &quad_config(rel_tol)).map(Into::into).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("CatalogEntry({:?})", self.inner.id)
    }
}

#[pyfunction]
fn build_catalog() -> Vec<CatalogEntry> {
    catalog::build_catalog().into_iter().map(|inner| CatalogEntry { inner }).collect()
}

#[pyfunction]
fn catalog_json() -> String {
    catalog::catalog_to_json(&catalog::build_catalog())
}

/// Runs the verifier and returns the report rendered as `markdown`, `json` or `csv`.
#[pyfunction]
#[pyo3(signature = (entry="*", rel_tol=1e-6, seed=0, workers=None, format="json"))]
fn run_verification(
    py: Python<'_>,
    entry: &str,
    rel_tol: f64,
    seed: u64,
    workers: Option<usize>,
    format: &str,
) -> PyResult<(String, i32)> {
    let output_format: OutputFormat = format.parse().map_err(PyValueError::new_err)?;
    let mut cfg = RunConfig { rel_tol, entry_filter: entry.to_string(), output_format, seed, ..RunConfig::default() };
    if let Some(w) = workers {
        cfg.workers = w;
    }
    let entries = catalog::build_catalog();
    let report = py.detach(|| verify::run_catalog(&entries, &cfg)).map_err(to_py)?;
    Ok((verify::render(&report, output_format), report.exit_code()))
}

#[pymodule]
fn lerchlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("LerchlabError", m.py().get_type::<LerchlabError>())?;
    m.add_class::<IntegralParams>()?;
    m.add_class::<QuadratureResult>()?;
    m.add_class::<CatalogEntry>()?;
    m.add_function(wrap_pyfunction!(lerch_phi, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_zeta_sderiv, m)?)?;
    m.add_function(wrap_pyfunction!(riemann_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(glaisher_constant, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_k, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_2f1_a1, m)?)?;
    m.add_function(wrap_pyfunction!(rhs_main_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_reduced_1d, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_2d_paper, m)?)?;
    m.add_function(wrap_pyfunction!(build_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_json, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    Ok(())
}
