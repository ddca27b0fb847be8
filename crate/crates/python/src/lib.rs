//! Python bindings. Integers cross as Python `int`, rationals as `fractions.Fraction`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use kerovkit_core::characters;
use kerovkit_core::cumulants::FreeCumulants;
use kerovkit_core::factorization::{self, DEFAULT_ENUMERATION_CAP};
use kerovkit_core::geometry::{self, SMoments};
use kerovkit_core::kerov::{self, KerovConfig, DEFAULT_KEROV_CAP};
use kerovkit_core::partition::parse_partition;
use kerovkit_core::permutation::parse_permutation;
use kerovkit_core::shuffle::{self, DEFAULT_DEGREE_CAP};
use kerovkit_core::Error;

fn to_py(err: Error) -> PyErr {
    if err.is_internal() {
        PyRuntimeError::new_err(err.to_string())
    } else {
        PyValueError::new_err(err.to_string())
    }
}

/// A Young diagram in English/French row notation, parts weakly decreasing.
#[pyclass(name = "YoungDiagram", skip_from_py_object, frozen, eq, hash, ord)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyYoungDiagram(kerovkit_core::YoungDiagram);

#[pymethods]
impl PyYoungDiagram {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        kerovkit_core::YoungDiagram::new(parts).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_partition(text).map(Self).map_err(to_py)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    fn hook_length(&self, row: usize, col: usize) -> PyResult<usize> {
        if !self.0.contains_cell(row, col) {
            return Err(PyValueError::new_err(format!("no cell at ({row}, {col})")));
        }
        Ok(self.0.hook_length(row, col))
    }

    fn dimension(&self) -> BigInt {
        characters::dimension(&self.0)
    }

    fn scale(&self, s: usize) -> Self {
        Self(geometry::scale(&self.0, s))
    }

    /// Profile breakpoints `(u, v)` in Russian coordinates.
    fn profile(&self) -> Vec<(i64, i64)> {
        geometry::profile(&self.0).breakpoints().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.row_count()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("YoungDiagram({:?})", self.0.parts())
    }
}

/// A permutation of {1, ..., k}.
#[pyclass(name = "Permutation", skip_from_py_object, frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(kerovkit_core::Permutation);

#[pymethods]
impl PyPermutation {
    /// One-line notation, 1-based.
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        kerovkit_core::Permutation::from_one_line(&images).map(Self).map_err(to_py)
    }

    /// Cycle notation like "(1,2)(3,4)" or one-line notation like "2,1,3".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_permutation(text).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn long_cycle(k: usize) -> Self {
        Self(kerovkit_core::Permutation::long_cycle(k))
    }

    #[staticmethod]
    fn identity(k: usize) -> Self {
        Self(kerovkit_core::Permutation::identity(k))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn one_line(&self) -> Vec<usize> {
        self.0.images().iter().map(|i| i + 1).collect()
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.0
            .cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|i| i + 1).collect())
            .collect()
    }

    fn cycle_type(&self) -> PyYoungDiagram {
        PyYoungDiagram(self.0.cycle_type())
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// `(self * other)(i) = self(other(i))`.
    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation.parse({:?})", self.0.to_string())
    }
}

/// A Kerov polynomial K_k in the free cumulants R_2, R_3, ...
#[pyclass(name = "KerovPolynomial", frozen)]
struct PyKerovPolynomial(kerov::KerovPolynomial);

#[pymethods]
impl PyKerovPolynomial {
    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    /// Terms as `(factors, coefficient)`, e.g. `([3, 2], 35)` for 35*R3*R2.
    fn terms(&self) -> Vec<(Vec<usize>, BigInt)> {
        self.0
            .terms()
            .iter()
            .map(|(m, c)| (m.factors(), c.clone()))
            .collect()
    }

    /// Evaluates at explicit cumulant values `{j: R_j}`.
    fn eval(&self, cumulants: BTreeMap<usize, BigRational>) -> BigRational {
        self.0.eval(&cumulants)
    }

    /// Evaluates at the free cumulants of a diagram.
    fn eval_diagram(&self, lambda: &PyYoungDiagram) -> PyResult<BigRational> {
        kerov::evaluate_kerov(&self.0, &lambda.0).map_err(to_py)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("KerovPolynomial(k={}, {})", self.0.k(), self.0)
    }
}

#[pyfunction]
fn character(lambda: &PyYoungDiagram, cycle_type: &PyYoungDiagram) -> PyResult<BigInt> {
    characters::mn_character(&lambda.0, &cycle_type.0).map_err(to_py)
}

#[pyfunction]
fn dimension(lambda: &PyYoungDiagram) -> BigInt {
    characters::dimension(&lambda.0)
}

#[pyfunction]
fn normalized_character(lambda: &PyYoungDiagram, pi: &PyPermutation) -> BigRational {
    characters::normalized_character(&lambda.0, &pi.0)
}

#[pyfunction]
#[pyo3(signature = (lambda, pi, cap = DEFAULT_ENUMERATION_CAP))]
fn stanley_feray_character(lambda: &PyYoungDiagram, pi: &PyPermutation, cap: usize) -> PyResult<BigRational> {
    characters::stanley_feray_character(&lambda.0, &pi.0, cap).map_err(to_py)
}

#[pyfunction]
fn coloring_count(lambda: &PyYoungDiagram, sigma1: &PyPermutation, sigma2: &PyPermutation) -> PyResult<BigInt> {
    characters::coloring_count(&lambda.0, &sigma1.0, &sigma2.0).map_err(to_py)
}

#[pyfunction]
fn s_moments(lambda: &PyYoungDiagram, max: usize) -> PyResult<BTreeMap<usize, BigRational>> {
    SMoments::compute(&lambda.0, max)
        .map(|m| m.values().clone())
        .map_err(to_py)
}

#[pyfunction]
fn free_cumulants(lambda: &PyYoungDiagram, max: usize) -> PyResult<BTreeMap<usize, BigRational>> {
    FreeCumulants::compute(&lambda.0, max)
        .map(|c| c.values().clone())
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (k, cap = DEFAULT_KEROV_CAP))]
fn kerov_polynomial(py: Python<'_>, k: usize, cap: usize) -> PyResult<PyKerovPolynomial> {
    let mut config = KerovConfig::default_for(k);
    config.cap = cap;
    py.detach(|| kerov::kerov_polynomial_with(k, &config))
        .map(PyKerovPolynomial)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (k, minimal = true, cap = DEFAULT_ENUMERATION_CAP))]
fn factorizations(k: usize, minimal: bool, cap: usize) -> PyResult<Vec<(PyPermutation, PyPermutation)>> {
    let pi = kerovkit_core::Permutation::long_cycle(k);
    let pairs = factorization::enumerate_factorizations(&pi, cap).map_err(to_py)?;
    Ok(pairs
        .into_iter()
        .filter(|p| !minimal || factorization::is_minimal_factorization(p, k))
        .map(|p| (PyPermutation(p.sigma1), PyPermutation(p.sigma2)))
        .collect())
}

/// `[(k, tv, bound)]` for the random-transposition walk on S_n.
#[pyfunction]
#[pyo3(signature = (n, steps, cap = DEFAULT_DEGREE_CAP))]
fn transposition_mixing(n: usize, steps: usize, cap: usize) -> PyResult<Vec<(usize, BigRational, BigRational)>> {
    let mu = shuffle::random_transposition_measure(n).map_err(to_py)?;
    let rows = shuffle::mixing_profile(&mu, steps, cap).map_err(to_py)?;
    Ok(rows.into_iter().map(|r| (r.step, r.tv, r.bound)).collect())
}

#[pymodule]
fn kerovkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyYoungDiagram>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyKerovPolynomial>()?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(dimension, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_character, m)?)?;
    m.add_function(wrap_pyfunction!(stanley_feray_character, m)?)?;
    m.add_function(wrap_pyfunction!(coloring_count, m)?)?;
    m.add_function(wrap_pyfunction!(s_moments, m)?)?;
    m.add_function(wrap_pyfunction!(free_cumulants, m)?)?;
    m.add_function(wrap_pyfunction!(kerov_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(factorizations, m)?)?;
    m.add_function(wrap_pyfunction!(transposition_mixing, m)?)?;
    Ok(())
}
