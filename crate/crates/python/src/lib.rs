use std::collections::HashMap;

use lemniscate::class::{self, GnOutcome};
use lemniscate::cli::{funcspec, verify};
use lemniscate::{booth, radii, subord, Complex64, GridSpec};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: lemniscate::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn grid(spec: Option<&str>) -> PyResult<GridSpec> {
    spec.map_or_else(|| Ok(GridSpec::default()), |s| s.parse().map_err(err))
}

#[pyclass(name = "BoothRegion", module = "lemniscate_py")]
struct PyBoothRegion(booth::BoothRegion);

#[pymethods]
impl PyBoothRegion {
    #[new]
    fn new(alpha: f64) -> PyResult<Self> {
        booth::BoothRegion::new(alpha).map(Self).map_err(err)
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.0.alpha()
    }

    fn contains(&self, w: Complex64) -> bool {
        self.0.contains(w)
    }

    fn quartic(&self, w: Complex64) -> f64 {
        self.0.quartic(w)
    }

    fn boundary(&self, samples: usize) -> Vec<(f64, Complex64)> {
        self.0.boundary_polyline(samples)
    }

    fn real_crossing(&self) -> f64 {
        self.0.real_crossing()
    }

    fn imaginary_crossing(&self) -> f64 {
        self.0.imaginary_crossing()
    }

    fn __repr__(&self) -> String {
        format!("BoothRegion(alpha={})", self.0.alpha())
    }
}

#[pyclass(name = "PowerSeries", module = "lemniscate_py")]
struct PyPowerSeries(lemniscate::PowerSeries);

#[pymethods]
impl PyPowerSeries {
    #[new]
    #[pyo3(signature = (coeffs, order=None))]
    fn new(coeffs: Vec<Complex64>, order: Option<usize>) -> Self {
        let order = order.unwrap_or(coeffs.len().saturating_sub(1));
        Self(lemniscate::PowerSeries::from_coeffs(&coeffs, order))
    }

    #[staticmethod]
    fn f_alpha(alpha: f64, order: usize) -> Self {
        Self(lemniscate::PowerSeries::f_alpha(alpha, order))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("series always serializes")
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn coeffs(&self) -> Vec<Complex64> {
        self.0.coeffs().to_vec()
    }

    fn __call__(&self, z: Complex64) -> Complex64 {
        self.0.evaluate(z)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> Self {
        Self(self.0.mul(&other.0))
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> Self {
        Self(self.0.add(&other.0))
    }

    fn __sub__(&self, other: PyRef<'_, Self>) -> Self {
        Self(self.0.sub(&other.0))
    }

    fn __truediv__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.div(&other.0).map(Self).map_err(err)
    }

    fn exp(&self) -> PyResult<Self> {
        self.0.exp().map(Self).map_err(err)
    }

    fn hadamard(&self, other: PyRef<'_, Self>) -> Self {
        Self(self.0.hadamard(&other.0))
    }

    fn derivative(&self) -> Self {
        Self(self.0.derivative())
    }

    fn __repr__(&self) -> String {
        format!("PowerSeries(order={})", self.0.order())
    }
}

#[pyclass(name = "Verdict", module = "lemniscate_py")]
struct PyVerdict(lemniscate::Verdict);

#[pymethods]
impl PyVerdict {
    #[getter]
    fn status(&self) -> &'static str {
        match self.0.status {
            lemniscate::Status::HoldsOnGrid => "HoldsOnGrid",
            lemniscate::Status::ViolatedAt => "ViolatedAt",
        }
    }

    fn holds(&self) -> bool {
        self.0.holds()
    }

    #[getter]
    fn witness_z(&self) -> Option<Complex64> {
        self.0.witness.as_ref().map(|w| w.z)
    }

    #[getter]
    fn witness_value(&self) -> Option<Complex64> {
        self.0.witness.as_ref().map(|w| w.value)
    }

    #[getter]
    fn reason(&self) -> Option<String> {
        self.0.witness.as_ref().map(|w| w.reason.clone())
    }

    #[getter]
    fn points(&self) -> usize {
        self.0.points
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Verdict({}, points={})", self.status(), self.0.points)
    }
}

#[pyfunction]
fn eval_f_alpha(alpha: f64, z: Complex64) -> PyResult<Complex64> {
    booth::eval_f_alpha(alpha, z).map_err(err)
}

#[pyfunction]
fn evaluate_tilde_f(alpha: f64, z: Complex64) -> PyResult<Complex64> {
    class::evaluate_tilde_f(alpha, z).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (alpha, gamma=0.0))]
fn radius_starlike(alpha: f64, gamma: f64) -> PyResult<HashMap<&'static str, f64>> {
    let r = radii::radius_starlike(alpha, gamma).map_err(err)?;
    Ok(HashMap::from([
        ("alpha", r.alpha),
        ("gamma", r.gamma),
        ("r_closed", r.r_closed),
        ("r_bisect", r.r_bisect),
        ("agreement", r.agreement),
        ("paper_formula_value", r.paper_formula_value),
    ]))
}

#[pyfunction]
fn alpha_for_radius(r: f64) -> PyResult<f64> {
    radii::alpha_for_radius(r).map_err(err)
}

/// `("NotInClass", "i" | "ii" | "iii" | "iv")` or `("Inconclusive", None)`.
#[pyfunction]
fn gn_nonmembership(n: u32, c: Complex64, alpha: f64) -> PyResult<(&'static str, Option<String>)> {
    Ok(match class::gn_nonmembership(n, c, alpha).map_err(err)? {
        GnOutcome::NotInClass(cond) => ("NotInClass", Some(cond.to_string())),
        GnOutcome::Inconclusive => ("Inconclusive", None),
    })
}

#[pyfunction]
fn re_f_over_z_bounds(alpha: f64, r: f64) -> PyResult<HashMap<&'static str, f64>> {
    let b = subord::bounds_unchecked(alpha, r).map_err(err)?;
    Ok(HashMap::from([
        ("lower", b.lower),
        ("upper", b.upper),
        ("paper_printed_lower", b.paper_printed_lower),
        ("within_hypothesis", if b.within_hypothesis { 1.0 } else { 0.0 }),
    ]))
}

/// Grid membership test for a function spec such as `"tilde:alpha=0.2"`.
#[pyfunction]
#[pyo3(signature = (func, alpha, grid=None, terms=64))]
fn membership_test(py: Python<'_>, func: &str, alpha: f64, grid: Option<&str>, terms: usize) -> PyResult<PyVerdict> {
    let f = funcspec::parse_function(func, terms).map_err(err)?;
    let g = self::grid(grid)?;
    py.detach(|| class::membership_test(&f, alpha, &g))
        .map(PyVerdict)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (alpha, samples=720))]
fn convexity_check_p(alpha: f64, samples: usize) -> PyResult<HashMap<&'static str, f64>> {
    let r = class::convexity_check_p(alpha, samples).map_err(err)?;
    Ok(HashMap::from([("grid_min", r.grid_min), ("k_alpha", r.k_alpha)]))
}

#[pyfunction]
#[pyo3(signature = (alpha, samples=4096))]
fn curvature_min(alpha: f64, samples: usize) -> PyResult<f64> {
    booth::curvature_min(alpha, samples).map_err(err)
}

/// Runs a property suite; returns `(id, passed, detail)` per check.
#[pyfunction]
#[pyo3(signature = (suite="all", seed=0))]
fn run_suite(py: Python<'_>, suite: &str, seed: u64) -> PyResult<Vec<(&'static str, bool, String)>> {
    let suite: verify::Suite = suite.parse().map_err(err)?;
    Ok(py
        .detach(|| verify::run_suite(suite, seed))
        .into_iter()
        .map(|r| (r.id, r.passed, r.detail))
        .collect())
}

#[pymodule]
fn lemniscate_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBoothRegion>()?;
    m.add_class::<PyPowerSeries>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(eval_f_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_tilde_f, m)?)?;
    m.add_function(wrap_pyfunction!(radius_starlike, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_for_radius, m)?)?;
    m.add_function(wrap_pyfunction!(gn_nonmembership, m)?)?;
    m.add_function(wrap_pyfunction!(re_f_over_z_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(membership_test, m)?)?;
    m.add_function(wrap_pyfunction!(convexity_check_p, m)?)?;
    m.add_function(wrap_pyfunction!(curvature_min, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("CONVEXITY_THRESHOLD", lemniscate::CONVEXITY_THRESHOLD)?;
    Ok(())
}
