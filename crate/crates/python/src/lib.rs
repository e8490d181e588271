//! Python bindings. Matrices cross the boundary as lists of rows of Python
//! ints; every library error becomes `latcoh_py.LatcohError`.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use latcoh::cohomology::{
    self, h1_cocycle, h1_cyclic, invariants_h0, obstruction_scan, CohomologyConfig, GroupSpec,
    DEFAULT_ORDER_BOUND,
};
use latcoh::linalg::{self, IntMatrix};
use latcoh::picard::{self, TableCase, WeylSearchConfig, DEFAULT_SEED};
use latcoh::{Error, FinAbGroup};

create_exception!(latcoh_py, LatcohError, PyValueError);

fn err(e: Error) -> PyErr {
    LatcohError::new_err(e.to_string())
}

type Rows = Vec<Vec<BigInt>>;

fn matrix(rows: Rows) -> PyResult<IntMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    IntMatrix::from_rows(cols, &rows).map_err(err)
}

/// Finitely generated abelian group `Z/d1 + ... + Z/dk + Z^r`.
#[pyclass(
    name = "AbelianGroup",
    module = "latcoh_py",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyAbelianGroup(FinAbGroup);

#[pymethods]
impl PyAbelianGroup {
    #[new]
    #[pyo3(signature = (orders, free_rank = 0))]
    fn new(orders: Vec<BigInt>, free_rank: usize) -> Self {
        PyAbelianGroup(FinAbGroup::from_orders(&orders, free_rank))
    }

    #[getter]
    fn invariant_factors(&self) -> Vec<BigInt> {
        self.0.invariant_factors().to_vec()
    }

    #[getter]
    fn free_rank(&self) -> usize {
        self.0.free_rank()
    }

    /// `None` when the group is infinite.
    #[getter]
    fn order(&self) -> Option<BigInt> {
        self.0.order()
    }

    fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AbelianGroup({})", self.0)
    }
}

#[pyclass(name = "CohomologyResult", module = "latcoh_py", frozen, get_all)]
pub struct PyCohomologyResult {
    group_order: usize,
    h0_rank: usize,
    h1: PyAbelianGroup,
    method: &'static str,
}

#[pymethods]
impl PyCohomologyResult {
    fn __repr__(&self) -> String {
        format!(
            "CohomologyResult(group_order={}, h0_rank={}, h1={}, method={:?})",
            self.group_order, self.h0_rank, self.h1.0, self.method
        )
    }
}

impl From<cohomology::CohomologyResult> for PyCohomologyResult {
    fn from(r: cohomology::CohomologyResult) -> Self {
        PyCohomologyResult {
            group_order: r.group_order,
            h0_rank: r.h0_rank,
            h1: PyAbelianGroup(r.h1),
            method: r.method.as_str(),
        }
    }
}

/// A lattice `Z^rank` with a finite group of integer matrices acting on
/// column vectors.
#[pyclass(name = "GLattice", module = "latcoh_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGLattice(cohomology::GLattice);

#[pymethods]
impl PyGLattice {
    /// `kind` is "cyclic" (one generator), "list" (all elements) or
    /// "generated".
    #[new]
    #[pyo3(signature = (matrices, gram = None, kind = "generated", bound = DEFAULT_ORDER_BOUND))]
    fn new(matrices: Vec<Rows>, gram: Option<Rows>, kind: &str, bound: usize) -> PyResult<Self> {
        let ms = matrices
            .into_iter()
            .map(matrix)
            .collect::<PyResult<Vec<_>>>()?;
        let rank = match ms.first() {
            Some(m) => m.rows(),
            None => return Err(LatcohError::new_err("at least one matrix is required")),
        };
        let spec = match kind {
            "cyclic" if ms.len() == 1 => GroupSpec::Cyclic {
                generator: ms.into_iter().next().unwrap(),
            },
            "cyclic" => {
                return Err(LatcohError::new_err(
                    "cyclic groups take exactly one generator",
                ))
            }
            "list" => GroupSpec::Explicit { elements: ms },
            "generated" => GroupSpec::Generated {
                generators: ms,
                closure_bound: bound,
            },
            other => {
                return Err(LatcohError::new_err(format!(
                    "unknown group kind `{}`",
                    other
                )))
            }
        };
        let gram = gram.map(matrix).transpose()?;
        cohomology::GLattice::with_order_bound(rank, spec, gram, bound)
            .map(PyGLattice)
            .map_err(err)
    }

    /// Parses the CLI's JSON input document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = latcoh::parse_input(text).map_err(err)?;
        doc.to_glattice().map(PyGLattice).map_err(err)
    }

    /// Lattice `Z^n` permuted by the given permutations of `0..n`.
    #[staticmethod]
    fn permutation(perms: Vec<Vec<usize>>) -> PyResult<Self> {
        cohomology::permutation_module(
            &perms,
            cohomology::GroupShape::Generated {
                closure_bound: DEFAULT_ORDER_BOUND,
            },
        )
        .map(PyGLattice)
        .map_err(err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn gram(&self) -> Option<Rows> {
        self.0.form().map(IntMatrix::to_rows)
    }

    fn generators(&self) -> Vec<Rows> {
        self.0.generators().iter().map(IntMatrix::to_rows).collect()
    }

    fn elements(&self) -> Vec<Rows> {
        self.0.elements().iter().map(IntMatrix::to_rows).collect()
    }

    /// Basis (rows) of the invariant sublattice.
    fn h0(&self) -> Rows {
        invariants_h0(&self.0).to_rows()
    }

    /// `H^1(G, M)`; `method` forces "cyclic" or "cocycle".
    #[pyo3(signature = (method = None))]
    fn h1(&self, py: Python<'_>, method: Option<&str>) -> PyResult<PyCohomologyResult> {
        let cfg = CohomologyConfig::default();
        let m = &self.0;
        let r = py.detach(|| match method {
            None => cohomology::h1(m, &cfg),
            Some("cyclic") => h1_cyclic(m, &cfg),
            Some("cocycle") => h1_cocycle(m, &cfg),
            Some(other) => Err(Error::InvalidGroup(format!("unknown method `{}`", other))),
        });
        r.map(Into::into).map_err(err)
    }

    /// `H^1` of the group and of each cyclic subgroup.
    fn scan<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let m = &self.0;
        let s = py
            .detach(|| obstruction_scan(m, &CohomologyConfig::default()))
            .map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("h1", PyAbelianGroup(s.full.h1.clone()))?;
        d.set_item("h0_rank", s.full.h0_rank)?;
        let subs = s
            .subgroups
            .iter()
            .map(|r| (r.generator_index, r.order, PyAbelianGroup(r.h1.clone())))
            .collect::<Vec<_>>();
        d.set_item("subgroups", subs)?;
        d.set_item("obstructed", s.obstructed)?;
        d.set_item("verdict", s.verdict())?;
        Ok(d)
    }

    /// The action on the sublattice spanned by the rows of `basis`.
    fn sublattice(&self, basis: Rows) -> PyResult<Self> {
        self.0
            .sublattice(&matrix(basis)?)
            .map(PyGLattice)
            .map_err(err)
    }

    fn direct_sum(&self, other: &PyGLattice) -> PyResult<Self> {
        cohomology::direct_sum(&self.0, &other.0)
            .map(PyGLattice)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "GLattice(rank={}, order={}, kind={:?})",
            self.0.rank(),
            self.0.order(),
            self.0.group().kind()
        )
    }
}

#[pyfunction]
fn geiser() -> PyResult<PyGLattice> {
    picard::geiser_involution()
        .map(|(_, m)| PyGLattice(m))
        .map_err(err)
}

#[pyfunction]
fn bertini() -> PyResult<PyGLattice> {
    picard::bertini_involution()
        .map(|(_, m)| PyGLattice(m))
        .map_err(err)
}

/// Involution on the Picard lattice of a conic bundle with `2g + 2`
/// degenerate fibers.
#[pyfunction]
#[pyo3(signature = (genus, section_square = -1))]
fn dejonquieres(genus: i64, section_square: i64) -> PyResult<PyGLattice> {
    picard::dejonquieres_with_section(genus, section_square)
        .and_then(|cb| cb.to_glattice())
        .map(PyGLattice)
        .map_err(err)
}

/// Returns `(lattice, trial)` for the first hit.
#[pyfunction]
#[pyo3(signature = (degree, prime, seed = DEFAULT_SEED, max_trials = 1_000_000, parallel = false))]
fn weyl_search(
    py: Python<'_>,
    degree: i64,
    prime: u64,
    seed: u64,
    max_trials: u64,
    parallel: bool,
) -> PyResult<(PyGLattice, u64)> {
    let cfg = WeylSearchConfig {
        seed,
        max_trials,
        parallel,
        ..Default::default()
    };
    let hit = py
        .detach(|| picard::weyl_search(degree, prime, &cfg))
        .map_err(err)?;
    Ok((PyGLattice(hit.lattice), hit.trial))
}

/// One row of the classification table, e.g. "geiser" or "dejonquieres-3".
#[pyfunction]
fn verify_row<'py>(py: Python<'py>, case: &str) -> PyResult<Bound<'py, PyDict>> {
    let case: TableCase = case.parse().map_err(err)?;
    let r = py.detach(|| picard::verify_row(case)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("case", case.to_string())?;
    d.set_item("p", case.prime())?;
    d.set_item("g", case.genus())?;
    d.set_item("h1", PyAbelianGroup(r.h1.clone()))?;
    d.set_item("h1_q", PyAbelianGroup(r.h1_q.clone()))?;
    d.set_item("expected", PyAbelianGroup(r.expected.clone()))?;
    d.set_item("fixed_rank", r.fixed_rank)?;
    d.set_item("charpoly_order", r.charpoly_order.clone())?;
    let checks: Vec<(String, bool, String)> = r
        .checks
        .iter()
        .map(|c| (c.name.clone(), c.passed, c.detail.clone()))
        .collect();
    d.set_item("checks", checks)?;
    d.set_item("passed", r.passed())?;
    Ok(d)
}

/// `(U, D, V, invariant_factors)` with `U A V = D`.
#[pyfunction]
fn smith_form(a: Rows) -> PyResult<(Rows, Rows, Rows, Vec<BigInt>)> {
    let s = linalg::smith_form(&matrix(a)?);
    Ok((
        s.u.to_rows(),
        s.d.to_rows(),
        s.v.to_rows(),
        s.invariant_factors,
    ))
}

/// `(H, U)` with `U A = H` in row Hermite form.
#[pyfunction]
fn hermite_form(a: Rows) -> PyResult<(Rows, Rows)> {
    let (h, u) = linalg::hermite_form(&matrix(a)?);
    Ok((h.to_rows(), u.to_rows()))
}

/// Saturated basis (rows) of `{x : A x = 0}`.
#[pyfunction]
fn kernel_basis(a: Rows) -> PyResult<Rows> {
    Ok(linalg::kernel_basis(&matrix(a)?).to_rows())
}

/// Coefficients of `det(tI - A)`, constant term first.
#[pyfunction]
fn char_poly(a: Rows) -> PyResult<Vec<BigInt>> {
    linalg::char_poly(&matrix(a)?)
        .map(|p| p.coeffs().to_vec())
        .map_err(err)
}

#[pymodule]
fn latcoh_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("LatcohError", m.py().get_type::<LatcohError>())?;
    m.add_class::<PyAbelianGroup>()?;
    m.add_class::<PyCohomologyResult>()?;
    m.add_class::<PyGLattice>()?;
    m.add_function(wrap_pyfunction!(geiser, m)?)?;
    m.add_function(wrap_pyfunction!(bertini, m)?)?;
    m.add_function(wrap_pyfunction!(dejonquieres, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_search, m)?)?;
    m.add_function(wrap_pyfunction!(verify_row, m)?)?;
    m.add_function(wrap_pyfunction!(smith_form, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_form, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_basis, m)?)?;
    m.add_function(wrap_pyfunction!(char_poly, m)?)?;
    Ok(())
}
