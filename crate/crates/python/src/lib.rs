//! Python module `hexwp`.

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use hexwp::analysis::{self, RootTarget};
use hexwp::identities::{self, NEWTON_MAX_ITER};
use hexwp::{constants, fermat, Complex, Error};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Overflow { .. } | Error::NonConvergence { .. } | Error::NoConvergence { .. } => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn target(name: &str) -> PyResult<RootTarget> {
    name.parse::<RootTarget>().map_err(to_py)
}

/// Evaluator with its own options.
#[pyclass(name = "Evaluator", frozen)]
struct PyEvaluator(hexwp::Evaluator);

#[pymethods]
impl PyEvaluator {
    #[new]
    #[pyo3(signature = (series_order=None, halving_threshold=None, pole_margin=None))]
    fn new(series_order: Option<usize>, halving_threshold: Option<f64>, pole_margin: Option<f64>) -> PyResult<Self> {
        let d = hexwp::EvalOptions::default();
        let opts = hexwp::EvalOptions {
            series_order: series_order.unwrap_or(d.series_order),
            halving_threshold: halving_threshold.unwrap_or(d.halving_threshold),
            pole_margin: pole_margin.unwrap_or(d.pole_margin),
            ..d
        };
        hexwp::Evaluator::new(opts).map(Self).map_err(to_py)
    }

    fn p(&self, z: Complex) -> PyResult<Complex> {
        self.0.p(z).map_err(to_py)
    }

    fn p_prime(&self, z: Complex) -> PyResult<Complex> {
        self.0.p_prime(z).map_err(to_py)
    }

    fn p_doubleprime(&self, z: Complex) -> PyResult<Complex> {
        self.0.p_doubleprime(z).map_err(to_py)
    }

    fn sigma(&self, z: Complex) -> PyResult<Complex> {
        self.0.sigma(z).map_err(to_py)
    }

    fn zeta(&self, z: Complex) -> PyResult<Complex> {
        self.0.zeta(z).map_err(to_py)
    }

    fn f(&self, z: Complex) -> PyResult<Complex> {
        self.0.f(z).map_err(to_py)
    }

    fn dist_to_lattice(&self, z: Complex) -> f64 {
        self.0.dist_to_lattice(z)
    }
}

/// Truncated lattice sums, an independent slow evaluator.
#[pyclass(name = "LatticeSums", frozen)]
struct PyLatticeSums(hexwp::LatticeSums);

#[pymethods]
impl PyLatticeSums {
    #[new]
    fn new(radius: f64) -> PyResult<Self> {
        hexwp::LatticeSums::new(radius).map(Self).map_err(to_py)
    }

    fn p(&self, z: Complex) -> PyResult<Complex> {
        self.0.p(z).map_err(to_py)
    }

    fn p_prime(&self, z: Complex) -> PyResult<Complex> {
        self.0.p_prime(z).map_err(to_py)
    }

    fn zeta(&self, z: Complex) -> PyResult<Complex> {
        self.0.zeta(z).map_err(to_py)
    }

    fn sigma(&self, z: Complex) -> PyResult<Complex> {
        self.0.sigma(z).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyfunction]
fn p(z: Complex) -> PyResult<Complex> {
    hexwp::wfun::p(z).map_err(to_py)
}

#[pyfunction]
fn p_prime(z: Complex) -> PyResult<Complex> {
    hexwp::wfun::p_prime(z).map_err(to_py)
}

#[pyfunction]
fn p_doubleprime(z: Complex) -> PyResult<Complex> {
    hexwp::wfun::p_doubleprime(z).map_err(to_py)
}

#[pyfunction]
fn sigma(z: Complex) -> PyResult<Complex> {
    hexwp::wfun::sigma(z).map_err(to_py)
}

#[pyfunction]
fn zeta(z: Complex) -> PyResult<Complex> {
    hexwp::wfun::zeta(z).map_err(to_py)
}

#[pyfunction]
fn f(z: Complex) -> PyResult<Complex> {
    fermat::f(z).map_err(to_py)
}

#[pyfunction]
fn f_prime(z: Complex) -> PyResult<Complex> {
    fermat::f_prime(z).map_err(to_py)
}

/// `(f(z), f(-z))` on `x³ + y³ = 1`.
#[pyfunction]
fn uniformize(z: Complex) -> PyResult<(Complex, Complex)> {
    fermat::uniformize(z).map(|c| (c.x, c.y)).map_err(to_py)
}

#[pyfunction]
fn baker_pair(z: Complex) -> PyResult<(Complex, Complex)> {
    fermat::baker_pair(z).map(|c| (c.x, c.y)).map_err(to_py)
}

/// Dict of ϖ, η₁, η₂, e₁, e₂, e₃, r, g2, g3.
#[pyfunction]
fn constants_dict(py: Python<'_>) -> PyResult<Bound<'_, pyo3::types::PyDict>> {
    let c = hexwp::Constants::get();
    let d = pyo3::types::PyDict::new(py);
    d.set_item("varpi", c.varpi)?;
    d.set_item("eta1", c.eta1)?;
    d.set_item("eta2", c.eta2)?;
    d.set_item("e1", c.e1)?;
    d.set_item("e2", c.e2)?;
    d.set_item("e3", c.e3)?;
    d.set_item("r", c.r)?;
    d.set_item("g2", c.g2)?;
    d.set_item("g3", c.g3)?;
    Ok(d)
}

#[pyfunction]
fn varpi_from_gamma() -> f64 {
    constants::varpi_from_gamma()
}

/// `(value, error_estimate)`.
#[pyfunction]
#[pyo3(signature = (tol=1e-10))]
fn varpi_from_quadrature(tol: f64) -> PyResult<(f64, f64)> {
    constants::varpi_from_quadrature(tol)
        .map(|e| (e.value, e.error))
        .map_err(to_py)
}

/// `(value, error_estimate)` of the integral `which` ("B4" or "C22").
#[pyfunction]
#[pyo3(signature = (which, tol=1e-10))]
fn integral(which: &str, tol: f64) -> PyResult<(f64, f64)> {
    let e = match which {
        "B4" => constants::varpi_from_improper_integral(tol),
        "C22" => analysis::integral_c22(tol),
        _ => return Err(PyValueError::new_err(format!("unknown integral {which:?}"))),
    };
    e.map(|e| (e.value, e.error)).map_err(to_py)
}

/// Closed-form zeros of `target` ("p", "dp-plus", "dp-minus").
#[pyfunction]
fn closed_form_zeros(target_name: &str) -> PyResult<Vec<Complex>> {
    Ok(target(target_name)?.closed_forms())
}

/// `(refined, iterations)`; raises if Newton does not converge.
#[pyfunction]
#[pyo3(signature = (target_name, seed, tol=1e-13, max_iter=NEWTON_MAX_ITER))]
fn newton_refine(target_name: &str, seed: Complex, tol: f64, max_iter: usize) -> PyResult<(Complex, usize)> {
    analysis::newton_refine(target(target_name)?, seed, tol, max_iter)
        .map(|r| (r.refined, r.iterations))
        .map_err(to_py)
}

/// `(partial_sum, target, abs_error)` for the complete-shell Eisenstein sum.
#[pyfunction]
fn lattice_sum(radius: f64) -> PyResult<(Complex, f64, f64)> {
    analysis::lattice_sum_bz6(radius)
        .map(|s| (s.partial_sum, s.target.re, s.abs_error))
        .map_err(to_py)
}

/// The eight candidate values of ℘(z/2).
#[pyfunction]
fn half_argument_candidates(z: Complex) -> PyResult<Vec<Complex>> {
    analysis::half_argument_candidates(z).map(|c| c.to_vec()).map_err(to_py)
}

/// Runs a verification suite and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite="all", seed=42, tol=1e-8, samples=1000))]
fn run_suite(py: Python<'_>, suite: &str, seed: u64, tol: f64, samples: usize) -> PyResult<String> {
    py.detach(|| identities::run_suite(suite, seed, tol, samples))
        .map(|r| r.to_json())
        .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "hexwp")]
fn hexwp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyEvaluator>()?;
    m.add_class::<PyLatticeSums>()?;
    m.add_function(wrap_pyfunction!(p, m)?)?;
    m.add_function(wrap_pyfunction!(p_prime, m)?)?;
    m.add_function(wrap_pyfunction!(p_doubleprime, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(f, m)?)?;
    m.add_function(wrap_pyfunction!(f_prime, m)?)?;
    m.add_function(wrap_pyfunction!(uniformize, m)?)?;
    m.add_function(wrap_pyfunction!(baker_pair, m)?)?;
    m.add_function(wrap_pyfunction!(constants_dict, m)?)?;
    m.add_function(wrap_pyfunction!(varpi_from_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(varpi_from_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(integral, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(newton_refine, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_sum, m)?)?;
    m.add_function(wrap_pyfunction!(half_argument_candidates, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
