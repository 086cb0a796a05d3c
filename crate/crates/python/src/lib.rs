//! Python bindings: chains of loops, rectangular tableaux, lattice paths and
//! divisors, with the maps between them.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use chipchain::cli::{self, DivisorPayload, Document, Payload, Template, VerifyOptions};
use chipchain::{
    alpha as core_alpha, enumerate as core_enumerate, hook_count as core_hook_count, phi as core_phi, ChainOfLoops,
    DivisorSeq, Error, LatticePath, Rational, RectTableau, StepKind, UnderlineSeq,
};

create_exception!(chipchain_py, ChipchainError, PyValueError, "Base class for chipchain errors.");
create_exception!(chipchain_py, InvalidInput, ChipchainError);
create_exception!(chipchain_py, ShapeMismatch, ChipchainError);
create_exception!(chipchain_py, NonGenericGraph, ChipchainError);
create_exception!(chipchain_py, InvariantViolation, ChipchainError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Invalid(_) => InvalidInput::new_err(msg),
        Error::Shape(_) => ShapeMismatch::new_err(msg),
        Error::NonGeneric(_) => NonGenericGraph::new_err(msg),
        Error::Invariant(_) => InvariantViolation::new_err(msg),
    }
}

trait IntoPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for chipchain::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

/// Accepts `int`, `str` (`"a/b"`) or `fractions.Fraction`.
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_cow()?.parse().py_err()
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

#[pyclass(module = "chipchain_py", name = "Graph", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyGraph(ChainOfLoops);

#[pymethods]
impl PyGraph {
    /// `loops` is a sequence of `(ell, m)` pairs.
    #[new]
    fn new(loops: Vec<(Bound<'_, PyAny>, Bound<'_, PyAny>)>) -> PyResult<Self> {
        let lengths = loops.iter().map(|(l, m)| Ok((rational(l)?, rational(m)?))).collect::<PyResult<Vec<_>>>()?;
        ChainOfLoops::new(lengths).py_err().map(PyGraph)
    }

    #[staticmethod]
    fn uniform(genus: usize, ell: &Bound<'_, PyAny>, m: &Bound<'_, PyAny>) -> PyResult<Self> {
        ChainOfLoops::uniform(genus, rational(ell)?, rational(m)?).py_err().map(PyGraph)
    }

    /// `ell = 2g`, `m = 1` on every loop.
    #[staticmethod]
    fn default(genus: usize) -> PyResult<Self> {
        ChainOfLoops::default_for_genus(genus).py_err().map(PyGraph)
    }

    #[getter]
    fn genus(&self) -> usize {
        self.0.genus()
    }

    #[getter]
    fn loops<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
        self.0.loops().iter().map(|lp| Ok((fraction(py, &lp.ell)?, fraction(py, &lp.m)?))).collect()
    }

    fn is_generic(&self) -> bool {
        self.0.is_generic()
    }

    fn reflect(&self) -> Self {
        PyGraph(self.0.reflect())
    }

    fn to_json(&self) -> String {
        Document::from(Payload::Graph(self.0.clone())).to_json()
    }

    fn __repr__(&self) -> String {
        let loops: Vec<String> = self.0.loops().iter().map(|lp| format!("('{}', '{}')", lp.ell, lp.m)).collect();
        format!("Graph([{}])", loops.join(", "))
    }
}

#[pyclass(module = "chipchain_py", name = "Tableau", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTableau(RectTableau);

#[pymethods]
impl PyTableau {
    #[new]
    fn new(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        RectTableau::from_rows(rows).py_err().map(PyTableau)
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.to_rows()
    }

    /// `(rows, columns)`.
    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.num_rows(), self.0.num_cols())
    }

    fn evacuate(&self) -> Self {
        PyTableau(self.0.evacuate())
    }

    fn transpose(&self) -> Self {
        PyTableau(self.0.transpose())
    }

    fn path(&self) -> PyPath {
        PyPath(LatticePath::from_tableau(&self.0))
    }

    /// Image divisor; `graph` defaults to `Graph.default(size)`.
    #[pyo3(signature = (graph = None))]
    fn divisor(&self, graph: Option<&PyGraph>) -> PyResult<PyDivisor> {
        let graph = match graph {
            Some(g) => g.0.clone(),
            None => ChainOfLoops::default_for_genus(self.0.size()).py_err()?,
        };
        core_phi(&self.0, &graph).py_err().map(PyDivisor::from_underline)
    }

    fn to_json(&self) -> String {
        Document::from(Payload::Tableau(self.0.clone())).to_json()
    }

    fn __repr__(&self) -> String {
        format!("Tableau({:?})", self.0.to_rows())
    }
}

#[pyclass(module = "chipchain_py", name = "Path", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPath(LatticePath);

#[pymethods]
impl PyPath {
    #[new]
    fn new(r: usize, points: Vec<Vec<i64>>) -> PyResult<Self> {
        LatticePath::new(r, points).py_err().map(PyPath)
    }

    #[getter]
    fn r(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn points(&self) -> Vec<Vec<i64>> {
        self.0.points().to_vec()
    }

    /// Steps as `j` for `+e_j`, `-1` for all-`(-1)` and `0` for a zero step.
    #[getter]
    fn steps(&self) -> Vec<i64> {
        self.0
            .steps()
            .iter()
            .map(|s| match *s {
                StepKind::Up(j) => j as i64,
                StepKind::DownAll => -1,
                StepKind::Linger => 0,
            })
            .collect()
    }

    /// Coordinate `j` (1-based) at every point.
    fn trace(&self, j: usize) -> PyResult<Vec<i64>> {
        if j == 0 || j > self.0.dim() {
            return Err(InvalidInput::new_err(format!("coordinate {j} outside 1..={}", self.0.dim())));
        }
        Ok(self.0.coordinate_trace(j))
    }

    fn is_lingering(&self) -> bool {
        self.0.is_lingering()
    }

    fn is_non_lingering(&self) -> bool {
        self.0.is_non_lingering()
    }

    fn tableau(&self) -> PyResult<PyTableau> {
        self.0.to_tableau().py_err().map(PyTableau)
    }

    #[pyo3(signature = (graph = None))]
    fn divisor(&self, graph: Option<&PyGraph>) -> PyResult<PyDivisor> {
        let graph = match graph {
            Some(g) => g.0.clone(),
            None => ChainOfLoops::default_for_genus(self.0.len()).py_err()?,
        };
        core_alpha(&self.0, &graph).py_err().map(PyDivisor::from_underline)
    }

    fn svg(&self) -> String {
        cli::render_lattice_path(&self.0)
    }

    fn to_json(&self) -> String {
        Document::from(Payload::Path(self.0.clone())).to_json()
    }

    fn __repr__(&self) -> String {
        format!("Path({}, {:?})", self.0.dim(), self.0.points())
    }
}

/// A `v_0`-reduced divisor. Built from underline distances, or from raw positions
/// with [`Divisor.from_raw`].
#[pyclass(module = "chipchain_py", name = "Divisor", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyDivisor(DivisorPayload);

impl PyDivisor {
    fn from_underline(c: UnderlineSeq) -> Self {
        PyDivisor(DivisorPayload::from_underline(c))
    }

    fn underline_seq(&self) -> PyResult<&UnderlineSeq> {
        self.0.require_underline().py_err()
    }

    fn tableau_image(&self) -> PyResult<&UnderlineSeq> {
        cli::require_tableau_image(&self.0).py_err()
    }
}

#[pymethods]
impl PyDivisor {
    #[new]
    fn new(graph: &PyGraph, head: i64, underline: Vec<u64>) -> PyResult<Self> {
        UnderlineSeq::new(graph.0.clone(), head, underline).py_err().map(Self::from_underline)
    }

    #[staticmethod]
    fn from_raw(graph: &PyGraph, d0: i64, positions: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let positions = positions.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        let raw = DivisorSeq::new(graph.0.clone(), d0, positions).py_err()?;
        Ok(PyDivisor(DivisorPayload::from_raw(raw)))
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph(self.0.raw.graph().clone())
    }

    #[getter]
    fn head(&self) -> i64 {
        self.0.raw.d0()
    }

    #[getter]
    fn underline(&self) -> Option<Vec<u64>> {
        self.0.underline.as_ref().map(|u| u.distances().to_vec())
    }

    #[getter]
    fn raw<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.0.raw.positions().iter().map(|x| fraction(py, x)).collect()
    }

    #[getter]
    fn degree(&self) -> i64 {
        self.0.raw.degree()
    }

    fn rank(&self) -> PyResult<i64> {
        chipchain::rank(&self.0.raw).py_err()
    }

    /// `(rank, witness)` where `witness` is the maximal lingering path or `None`.
    fn rank_with_witness(&self) -> PyResult<(i64, Option<PyPath>)> {
        let (r, witness) = chipchain::rank_with_witness(&self.0.raw).py_err()?;
        Ok((r, witness.map(PyPath)))
    }

    /// Output of the lattice-path algorithm in dimension `r`.
    fn path(&self, r: usize) -> PyResult<PyPath> {
        chipchain::rho(&self.0.raw, r).py_err().map(PyPath)
    }

    /// The tableau this divisor is the image of.
    fn tableau(&self) -> PyResult<PyTableau> {
        chipchain::phi_preimage(self.underline_seq()?).py_err().map(PyTableau)
    }

    /// `(divisor on the reflected graph, chips on v_i while recentering)`.
    fn reflect(&self) -> PyResult<(PyDivisor, Vec<i64>)> {
        let out = chipchain::reflect_divisor(self.tableau_image()?).py_err()?;
        Ok((Self::from_underline(out.divisor), out.trace))
    }

    fn dual(&self) -> PyResult<PyDivisor> {
        chipchain::dual_reduce(self.tableau_image()?).py_err().map(Self::from_underline)
    }

    fn svg(&self) -> String {
        cli::render_chip_config(&self.0.raw)
    }

    fn to_json(&self) -> String {
        Document::from(Payload::Divisor(self.0.clone())).to_json()
    }

    fn __repr__(&self) -> String {
        match &self.0.underline {
            Some(u) => format!("Divisor(head={}, underline={:?})", u.head(), u.distances()),
            None => {
                let raw: Vec<String> = self.0.raw.positions().iter().map(|x| x.to_string()).collect();
                format!("Divisor(d0={}, raw=[{}])", self.0.raw.d0(), raw.join(", "))
            }
        }
    }
}

/// All standard tableaux of shape `m x n` in lexicographic reading-word order.
#[pyfunction]
#[pyo3(signature = (m, n, ceiling = 16))]
fn enumerate(m: usize, n: usize, ceiling: usize) -> PyResult<Vec<PyTableau>> {
    Ok(core_enumerate(m, n, ceiling).py_err()?.map(PyTableau).collect())
}

#[pyfunction]
fn hook_count(py: Python<'_>, m: usize, n: usize) -> PyResult<Bound<'_, PyAny>> {
    py.get_type::<pyo3::types::PyInt>().call1((core_hook_count(m, n).to_string(),))
}

/// Parses a JSON document into a `Tableau`, `Path`, `Divisor` or `Graph`.
#[pyfunction]
fn load(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    let doc = Document::parse(text).py_err()?;
    let obj = match doc.payload {
        Payload::Tableau(t) => Py::new(py, PyTableau(t))?.into_any(),
        Payload::Path(p) => Py::new(py, PyPath(p))?.into_any(),
        Payload::Divisor(d) => Py::new(py, PyDivisor(d))?.into_any(),
        Payload::Graph(g) => Py::new(py, PyGraph(g))?.into_any(),
    };
    Ok(obj)
}

/// Runs the exhaustive check and returns one dict per shape.
#[pyfunction]
#[pyo3(signature = (ceiling = 12, template = "2g:1"))]
fn verify<'py>(py: Python<'py>, ceiling: usize, template: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let template: Template = template.parse().py_err()?;
    let report = py.detach(|| cli::verify(&VerifyOptions { ceiling, template, shape: None })).py_err()?;
    report
        .shapes
        .iter()
        .map(|s| {
            let d = PyDict::new(py);
            d.set_item("shape", (s.rows, s.cols))?;
            d.set_item("tableaux", s.tableaux)?;
            d.set_item("failures", s.failures.clone())?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
pub fn chipchain_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTableau>()?;
    m.add_class::<PyPath>()?;
    m.add_class::<PyDivisor>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(hook_count, m)?)?;
    m.add_function(wrap_pyfunction!(load, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("ChipchainError", py.get_type::<ChipchainError>())?;
    m.add("InvalidInput", py.get_type::<InvalidInput>())?;
    m.add("ShapeMismatch", py.get_type::<ShapeMismatch>())?;
    m.add("NonGenericGraph", py.get_type::<NonGenericGraph>())?;
    m.add("InvariantViolation", py.get_type::<InvariantViolation>())?;
    Ok(())
}
