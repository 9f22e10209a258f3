//! Python bindings. Signatures and families cross the boundary as plain
//! lists of integers.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use soclique_core::clique::SearchOptions;
use soclique_core::cliquesearch::{self, CliqueFamily, Membership};
use soclique_core::constructions;
use soclique_core::rootsys::{self, Family, Root};
use soclique_core::sos::{self, Signature};
use soclique_core::Certificate;

fn value_error(e: soclique_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn signature(v: &[i32], k: usize) -> PyResult<Signature> {
    Signature::from_i32(v, k).map_err(value_error)
}

fn family(rows: Vec<Vec<i32>>, k: usize, ell: usize) -> PyResult<CliqueFamily> {
    CliqueFamily::from_rows(k, ell, &rows).map_err(value_error)
}

fn membership(strict: bool) -> Membership {
    if strict {
        Membership::Strict
    } else {
        Membership::Graph
    }
}

#[pyclass(name = "RootSystem", frozen)]
struct PyRootSystem {
    inner: rootsys::RootSystem,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(family: &str, rank: usize) -> PyResult<Self> {
        let fam: Family = family.parse().map_err(value_error)?;
        let inner = rootsys::RootSystem::build(fam, rank).map_err(value_error)?;
        Ok(PyRootSystem { inner })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    #[getter]
    fn scale(&self) -> i32 {
        self.inner.scale()
    }

    /// Roots in lexicographic order, in stored (possibly scaled) coordinates.
    #[getter]
    fn roots(&self) -> Vec<Vec<i32>> {
        self.inner
            .roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "RootSystem({}, {} roots)",
            self.inner.label(),
            self.inner.len()
        )
    }

    fn is_root(&self, v: Vec<i32>) -> PyResult<bool> {
        self.inner.is_root(&v).map_err(value_error)
    }

    fn strongly_orthogonal(&self, a: Vec<i32>, b: Vec<i32>) -> PyResult<bool> {
        sos::strongly_orthogonal(&self.inner, &Root::new(a), &Root::new(b)).map_err(value_error)
    }

    fn max_sos_size(&self, py: Python<'_>) -> PyResult<usize> {
        py.detach(|| sos::max_sos_size(&self.inner))
            .map_err(value_error)
    }

    fn published_max_sos_size(&self) -> Option<usize> {
        sos::published_max_sos_size(self.inner.family(), self.inner.rank())
    }

    /// Human-readable axiom violations; empty when all axioms hold.
    fn verify_axioms(&self) -> Vec<String> {
        self.inner
            .verify_axioms()
            .violations
            .iter()
            .map(ToString::to_string)
            .collect()
    }
}

#[pyfunction]
fn is_valid_signature(v: Vec<i32>, k: usize) -> bool {
    cliquesearch::is_valid_signature(&v, k)
}

#[pyfunction]
fn is_edge(s: Vec<i32>, t: Vec<i32>, k: usize) -> PyResult<bool> {
    cliquesearch::is_edge(&signature(&s, k)?, &signature(&t, k)?).map_err(value_error)
}

#[pyfunction]
fn agreement_set(s: Vec<i32>, t: Vec<i32>, k: usize) -> PyResult<Vec<usize>> {
    cliquesearch::agreement_set(&signature(&s, k)?, &signature(&t, k)?).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (rows, k, ell, strict_membership = false))]
fn is_sos_clique(
    rows: Vec<Vec<i32>>,
    k: usize,
    ell: usize,
    strict_membership: bool,
) -> PyResult<bool> {
    let f = family(rows, k, ell)?;
    Ok(cliquesearch::is_sos_clique(&f, membership(strict_membership)).is_valid())
}

#[pyfunction]
fn is_sunflower(rows: Vec<Vec<i32>>, k: usize, ell: usize) -> PyResult<bool> {
    cliquesearch::is_sunflower(&family(rows, k, ell)?).map_err(value_error)
}

/// Returns a dict with `value`, `witness`, `exact` and `nodes`.
#[pyfunction]
#[pyo3(signature = (k, ell, budget = None, workers = None, strict_membership = false))]
fn mu_exact<'py>(
    py: Python<'py>,
    k: usize,
    ell: usize,
    budget: Option<u64>,
    workers: Option<usize>,
    strict_membership: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let mut opts = SearchOptions::default();
    if let Some(b) = budget {
        opts.budget = b;
    }
    if let Some(w) = workers {
        opts.workers = w.max(1);
    }
    let r = py
        .detach(|| {
            if strict_membership {
                cliquesearch::mu_exact_strict(k, ell, opts.budget)
            } else {
                cliquesearch::mu_exact(k, ell, &opts)
            }
        })
        .map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("value", r.value)?;
    d.set_item("witness", r.witness.rows())?;
    d.set_item("exact", r.exact)?;
    d.set_item("nodes", r.nodes)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (k, ell, s = None, k1 = None, k2 = None))]
fn bounds<'py>(
    py: Python<'py>,
    k: usize,
    ell: usize,
    s: Option<usize>,
    k1: Option<usize>,
    k2: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let k1k2 = match (k1, k2) {
        (Some(a), Some(b)) => Some((a, b)),
        (None, None) => None,
        _ => return Err(PyValueError::new_err("k1 and k2 must be given together")),
    };
    let b = cliquesearch::bounds(k, ell, s, k1k2).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("k", b.k)?;
    d.set_item("ell", b.ell)?;
    d.set_item("general_upper", b.general_upper)?;
    d.set_item("sunflower_value", b.sunflower_value)?;
    d.set_item("regime_threshold", b.regime_threshold)?;
    d.set_item("sunflower_lemma_upper", b.sunflower_lemma_upper)?;
    d.set_item("distinct_intersection_upper", b.distinct_intersection_upper)?;
    d.set_item("rcw", b.rcw)?;
    d.set_item("ekr", b.ekr)?;
    d.set_item("bollobas", b.bollobas)?;
    Ok(d)
}

#[pyfunction]
fn smalla_predicted(ell: usize) -> PyResult<usize> {
    cliquesearch::smalla_predicted(ell).map_err(value_error)
}

/// Incidence matrix of PG(2, q), rows are lines.
#[pyfunction]
fn projective_plane(q: u32) -> PyResult<Vec<Vec<u8>>> {
    Ok(constructions::projective_plane(q)
        .map_err(value_error)?
        .matrix()
        .to_vec())
}

/// Plane axioms and `N N^T = qI + J` on an arbitrary 0/1 matrix.
#[pyfunction]
fn verify_plane(q: usize, matrix: Vec<Vec<u8>>) -> Vec<String> {
    let p = constructions::IncidenceStructure::from_matrix(q, matrix);
    constructions::verify_plane(&p)
        .violations
        .iter()
        .map(ToString::to_string)
        .collect()
}

#[pyfunction]
fn plane_clique(q: u32) -> PyResult<Vec<Vec<i32>>> {
    Ok(constructions::plane_clique(q).map_err(value_error)?.rows())
}

#[pyfunction]
fn sunflower_clique(k: usize, ell: usize) -> PyResult<Vec<Vec<i32>>> {
    Ok(constructions::sunflower_clique(k, ell)
        .map_err(value_error)?
        .rows())
}

#[pyfunction]
fn fano_fixture() -> Vec<Vec<i32>> {
    constructions::fano_fixture().rows()
}

#[pyfunction]
fn eight_column_fixture() -> Vec<Vec<i32>> {
    constructions::eight_column_fixture().rows()
}

#[pyfunction]
fn hadamard7_fixture() -> Vec<Vec<u8>> {
    constructions::hadamard7_fixture()
}

#[pyfunction]
fn sign_search(matrix: Vec<Vec<u8>>, k: usize) -> PyResult<Option<Vec<Vec<i8>>>> {
    constructions::sign_search(&matrix, k).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (rows, k, ell, provenance, exact = false))]
fn write_certificate(
    rows: Vec<Vec<i32>>,
    k: usize,
    ell: usize,
    provenance: String,
    exact: bool,
) -> PyResult<String> {
    Ok(Certificate::new(family(rows, k, ell)?, provenance, exact).to_json())
}

/// Parses and validates a certificate; returns a dict of its fields.
#[pyfunction]
fn read_certificate<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyDict>> {
    let c = Certificate::from_json(text).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("ell", c.family().ell())?;
    d.set_item("k", c.family().k())?;
    d.set_item("signatures", c.family().rows())?;
    d.set_item("provenance", &c.provenance)?;
    d.set_item("exact", c.exact)?;
    Ok(d)
}

#[pymodule]
fn soclique(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_function(wrap_pyfunction!(is_valid_signature, m)?)?;
    m.add_function(wrap_pyfunction!(is_edge, m)?)?;
    m.add_function(wrap_pyfunction!(agreement_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_sos_clique, m)?)?;
    m.add_function(wrap_pyfunction!(is_sunflower, m)?)?;
    m.add_function(wrap_pyfunction!(mu_exact, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(smalla_predicted, m)?)?;
    m.add_function(wrap_pyfunction!(projective_plane, m)?)?;
    m.add_function(wrap_pyfunction!(verify_plane, m)?)?;
    m.add_function(wrap_pyfunction!(plane_clique, m)?)?;
    m.add_function(wrap_pyfunction!(sunflower_clique, m)?)?;
    m.add_function(wrap_pyfunction!(fano_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(eight_column_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(hadamard7_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(sign_search, m)?)?;
    m.add_function(wrap_pyfunction!(write_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(read_certificate, m)?)?;
    Ok(())
}
