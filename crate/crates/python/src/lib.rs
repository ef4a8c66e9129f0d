//! Python bindings. Build with `maturin develop` from this directory.

use std::collections::HashMap;

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use quadratize::coloring::default_bits;
use quadratize::{
    AuxAllocator, ColoringEncoding, Error, Graph, ReductionCoefficients, SymmRedOptions, VarId,
};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Overflow => PyOverflowError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

#[pyclass(name = "Polynomial", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPolynomial(quadratize::Polynomial);

#[pymethods]
impl PyPolynomial {
    /// Parses the line-oriented text format (`<coeff> <var>...`).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        quadratize::parse_polynomial(text)
            .map(PyPolynomial)
            .map_err(to_py)
    }

    fn to_text(&self) -> String {
        quadratize::write_polynomial(&self.0)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// List of `(coefficient, [variable names])` in canonical order.
    fn terms(&self) -> Vec<(i64, Vec<String>)> {
        self.0
            .terms()
            .map(|(m, c)| (c, m.vars().iter().map(|v| v.to_string()).collect()))
            .collect()
    }

    fn variables(&self) -> Vec<String> {
        self.0.variables().iter().map(|v| v.to_string()).collect()
    }

    /// Evaluates at `{"x1": 1, "w2": 0, ...}`; every variable must be set.
    fn evaluate(&self, values: HashMap<String, u8>) -> PyResult<i64> {
        let mut a = quadratize::Assignment::new();
        for (name, value) in values {
            let v: VarId = name.parse().map_err(PyValueError::new_err)?;
            a.set(v, value != 0);
        }
        self.0.evaluate(&a).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.0.to_string())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "Reduction", frozen)]
struct PyReduction(quadratize::ReductionOutcome);

#[pymethods]
impl PyReduction {
    #[getter]
    fn quadratic(&self) -> PyPolynomial {
        PyPolynomial(self.0.quadratic.clone())
    }

    #[getter]
    fn aux_vars(&self) -> Vec<String> {
        self.0.aux_vars.iter().map(|v| v.to_string()).collect()
    }

    #[getter]
    fn aux_count(&self) -> usize {
        self.0.aux_count()
    }

    #[getter]
    fn total_vars(&self) -> usize {
        self.0.total_vars()
    }

    fn to_text(&self) -> String {
        quadratize::cli::render_outcome(&self.0)
    }
}

#[pyfunction]
#[pyo3(signature = (p, consolidate = true))]
fn symm_red(p: &PyPolynomial, consolidate: bool) -> PyResult<PyReduction> {
    let report = quadratize::symm_red_with(
        &p.0,
        &mut AuxAllocator::new(),
        SymmRedOptions { consolidate },
    )
    .map_err(to_py)?;
    report.outcome.renumbered().map(PyReduction).map_err(to_py)
}

#[pyfunction]
fn mono_red(p: &PyPolynomial) -> PyResult<PyReduction> {
    quadratize::mono_red(&p.0, &mut AuxAllocator::new())
        .and_then(|o| o.renumbered())
        .map(PyReduction)
        .map_err(to_py)
}

/// Returns `(equivalent, counterexample)`; the counterexample is a string
/// such as `"x1=1 x2=0"` or `None`.
#[pyfunction]
fn check_equivalence(p: &PyPolynomial, r: &PyReduction) -> PyResult<(bool, Option<String>)> {
    let report = quadratize::check_equivalence(&p.0, &r.0).map_err(to_py)?;
    Ok((
        report.equivalent,
        report.counterexample.map(|c| c.assignment.to_string()),
    ))
}

/// Coloring polynomial for a graph on `vertices` with 0-based `edges`.
#[pyfunction]
#[pyo3(signature = (vertices, edges, bits = None))]
fn utility_polynomial(
    vertices: usize,
    edges: Vec<(usize, usize)>,
    bits: Option<usize>,
) -> PyResult<PyPolynomial> {
    let mut g = Graph::new(vertices);
    for (u, v) in edges {
        g.add_edge(u, v).map_err(to_py)?;
    }
    let bits = match bits {
        Some(b) => b,
        None => default_bits(vertices).map_err(to_py)?,
    };
    let enc = ColoringEncoding::new(bits).map_err(to_py)?;
    quadratize::utility_polynomial(&g, &enc)
        .map(PyPolynomial)
        .map_err(to_py)
}

/// Gadget progressions `([a_1..a_d], [b_1..b_d])` for `sign` in `{+1, -1}`.
#[pyfunction]
fn reduction_coefficients(sign: i32, n: usize, m: usize) -> PyResult<(Vec<i64>, Vec<i64>)> {
    let c = match sign {
        1 => ReductionCoefficients::positive(n, m),
        -1 => ReductionCoefficients::negative(n, m),
        _ => return Err(PyValueError::new_err("sign must be +1 or -1")),
    }
    .map_err(to_py)?;
    Ok((c.constants, c.slopes))
}

#[pymodule]
fn pyquadratize(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(symm_red, m)?)?;
    m.add_function(wrap_pyfunction!(mono_red, m)?)?;
    m.add_function(wrap_pyfunction!(check_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(utility_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_coefficients, m)?)?;
    Ok(())
}
