use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use urmatch_core::decomposition::gallai_edmonds as ge_core;
use urmatch_core::oracle::{self, OracleGuard};
use urmatch_core::recognition::{self as rec, Options, RecognitionReport};
use urmatch_core::{Error, Matching};

create_exception!(urmatch, OracleLimitError, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::OracleLimit { .. } => OracleLimitError::new_err(e.to_string()),
        Error::Inconsistent(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(frozen, eq, skip_from_py_object, module = "urmatch")]
#[derive(Clone, PartialEq)]
pub struct Graph {
    inner: urmatch_core::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = urmatch_core::Graph::new(n, edges).map_err(to_py)?;
        Ok(Graph { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().iter().map(|e| e.endpoints()).collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(to_py)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

#[pyclass(frozen, get_all, module = "urmatch")]
pub struct Report {
    property: String,
    answer: bool,
    witness: Option<Vec<(usize, usize)>>,
    failure: Option<String>,
    failures: Vec<String>,
}

impl From<RecognitionReport> for Report {
    fn from(r: RecognitionReport) -> Self {
        Report {
            property: r.property.as_str().to_string(),
            answer: r.answer,
            witness: r.witness.map(|w| w.pairs()),
            failure: r.failure.map(|t| t.as_str().to_string()),
            failures: r.failures.iter().map(|t| t.as_str().to_string()).collect(),
        }
    }
}

#[pymethods]
impl Report {
    fn __bool__(&self) -> bool {
        self.answer
    }

    fn __repr__(&self) -> String {
        match &self.failure {
            Some(f) => format!("Report({}={}, failure={f})", self.property, self.answer),
            None => format!("Report({}={})", self.property, self.answer),
        }
    }
}

#[pyclass(frozen, get_all, module = "urmatch")]
pub struct Decomposition {
    nu: usize,
    d: Vec<usize>,
    a: Vec<usize>,
    c: Vec<usize>,
    d_components: Vec<Vec<usize>>,
    c_components: Vec<Vec<usize>>,
    /// `G_B` with `A(G)` as vertices `0..len(a)` and one vertex per D-component after them.
    gb: Graph,
}

#[pymethods]
impl Decomposition {
    fn __repr__(&self) -> String {
        format!(
            "Decomposition(|D|={}, |A|={}, |C|={})",
            self.d.len(),
            self.a.len(),
            self.c.len()
        )
    }
}

#[pyfunction]
fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    urmatch_core::maximum_matching(&g.inner).pairs()
}

#[pyfunction]
fn is_uniquely_restricted(g: &Graph, matching: Vec<(usize, usize)>) -> PyResult<bool> {
    let m = Matching::new(&g.inner, matching).map_err(to_py)?;
    urmatch_core::is_uniquely_restricted(&g.inner, &m).map_err(to_py)
}

#[pyfunction]
fn gallai_edmonds(g: &Graph) -> Decomposition {
    let ge = ge_core(&g.inner);
    Decomposition {
        nu: ge.matching.len(),
        d: ge.d_set,
        a: ge.a_set,
        c: ge.c_set,
        d_components: ge.d_components,
        c_components: ge.c_components,
        gb: Graph { inner: ge.gb },
    }
}

/// Whether some maximum matching is uniquely restricted.
#[pyfunction]
#[pyo3(signature = (g, all_failures=false))]
fn some_ur(g: &Graph, all_failures: bool) -> Report {
    let opts = Options {
        all_failures,
        verify_blocks: false,
    };
    rec::some_ur_with(&g.inner, &ge_core(&g.inner), &opts).into()
}

/// Whether every maximum matching is uniquely restricted.
#[pyfunction]
#[pyo3(signature = (g, all_failures=false, verify=false))]
fn every_ur(g: &Graph, all_failures: bool, verify: bool) -> PyResult<Report> {
    let opts = Options {
        all_failures,
        verify_blocks: verify,
    };
    rec::every_ur_with(&g.inner, &ge_core(&g.inner), &opts)
        .map(Report::from)
        .map_err(to_py)
}

fn guard(max_vertices: Option<usize>) -> OracleGuard {
    max_vertices.map_or_else(OracleGuard::from_env, OracleGuard::with_max_vertices)
}

#[pyfunction]
#[pyo3(signature = (g, max_vertices=None))]
fn oracle_some_ur(g: &Graph, max_vertices: Option<usize>) -> PyResult<bool> {
    oracle::oracle_some_ur(&g.inner, &guard(max_vertices)).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (g, max_vertices=None))]
fn oracle_every_ur(g: &Graph, max_vertices: Option<usize>) -> PyResult<bool> {
    oracle::oracle_every_ur(&g.inner, &guard(max_vertices)).map_err(to_py)
}

/// Problems found comparing the algorithms with the oracle; empty when they agree.
#[pyfunction]
#[pyo3(signature = (g, max_vertices=None))]
fn cross_validate(g: &Graph, max_vertices: Option<usize>) -> PyResult<Vec<String>> {
    oracle::cross_validate(&g.inner, &guard(max_vertices))
        .map(|cc| cc.problems)
        .map_err(to_py)
}

#[pymodule]
fn urmatch(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Report>()?;
    m.add_class::<Decomposition>()?;
    m.add("OracleLimitError", m.py().get_type::<OracleLimitError>())?;
    m.add_function(wrap_pyfunction!(maximum_matching, m)?)?;
    m.add_function(wrap_pyfunction!(is_uniquely_restricted, m)?)?;
    m.add_function(wrap_pyfunction!(gallai_edmonds, m)?)?;
    m.add_function(wrap_pyfunction!(some_ur, m)?)?;
    m.add_function(wrap_pyfunction!(every_ur, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_some_ur, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_every_ur, m)?)?;
    m.add_function(wrap_pyfunction!(cross_validate, m)?)?;
    Ok(())
}
