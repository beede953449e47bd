use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use mullreg::render::{render, Annotation, RenderOptions};
use mullreg::verify::{census, reports_to_json, run_suite, CheckConfig, Suite};
use mullreg::{Error, HookProfile, Node, Partition, RimData};

fn to_py(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn check_e(e: usize) -> PyResult<usize> {
    if e < 2 {
        Err(to_py(Error::InvalidE(e)))
    } else {
        Ok(e)
    }
}

fn node_pairs(nodes: &[Node]) -> Vec<(usize, usize)> {
    nodes.iter().map(|n| (n.row, n.col)).collect()
}

#[pyclass(
    name = "Partition",
    module = "mullreg",
    frozen,
    eq,
    hash,
    ord,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PyPartition {
    inner: Partition,
}

impl From<Partition> for PyPartition {
    fn from(inner: Partition) -> Self {
        PyPartition { inner }
    }
}

#[pymethods]
impl PyPartition {
    #[new]
    #[pyo3(signature = (parts = Vec::new()))]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        Partition::new(parts).map(Into::into).map_err(to_py)
    }

    /// Parse exponent notation such as "4,3^3,1^5"; "()" is the empty partition.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        mullreg::parse_partition(text)
            .map(Into::into)
            .map_err(to_py)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn num_parts(&self) -> usize {
        self.inner.num_parts()
    }

    fn __len__(&self) -> usize {
        self.inner.num_parts()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn conjugate(&self) -> Self {
        self.inner.conjugate().into()
    }

    fn remove_first_row(&self) -> Self {
        self.inner.remove_first_row().into()
    }

    fn remove_first_column(&self) -> Self {
        self.inner.remove_first_column().into()
    }

    fn add_column(&self, length: usize) -> PyResult<Self> {
        self.inner.add_column(length).map(Into::into).map_err(to_py)
    }

    fn is_e_regular(&self, e: usize) -> PyResult<bool> {
        Ok(self.inner.is_e_regular(check_e(e)?))
    }

    fn is_e_restricted(&self, e: usize) -> PyResult<bool> {
        Ok(self.inner.is_e_restricted(check_e(e)?))
    }

    fn regularise(&self, e: usize) -> PyResult<Self> {
        Ok(mullreg::regularise(&self.inner, check_e(e)?).into())
    }

    fn ladder_counts(&self, e: usize) -> PyResult<Vec<(usize, usize)>> {
        Ok(mullreg::ladder_counts(&self.inner, check_e(e)?)
            .iter()
            .collect())
    }

    fn e_rim(&self, e: usize) -> PyResult<PyRimData> {
        mullreg::e_rim(&self.inner, check_e(e)?)
            .map(|inner| PyRimData { inner })
            .map_err(to_py)
    }

    fn strip_i(&self, e: usize) -> PyResult<Self> {
        mullreg::strip_i(&self.inner, check_e(e)?)
            .map(Into::into)
            .map_err(to_py)
    }

    fn strip_j(&self, e: usize) -> PyResult<Self> {
        mullreg::strip_j(&self.inner, check_e(e)?)
            .map(Into::into)
            .map_err(to_py)
    }

    fn mullineux(&self, e: usize) -> PyResult<Self> {
        mullreg::mullineux(&self.inner, check_e(e)?)
            .map(Into::into)
            .map_err(to_py)
    }

    fn hook_profile(&self, e: usize) -> PyResult<PyHookProfile> {
        Ok(PyHookProfile {
            inner: mullreg::hook_profile(&self.inner, check_e(e)?),
        })
    }

    fn e_weight(&self, e: usize) -> PyResult<usize> {
        Ok(mullreg::e_weight(&self.inner, check_e(e)?))
    }

    fn z_value(&self, e: usize) -> PyResult<usize> {
        Ok(mullreg::z_value(&self.inner, check_e(e)?))
    }

    fn is_l_partition(&self, e: usize) -> PyResult<bool> {
        Ok(mullreg::is_l_partition(&self.inner, check_e(e)?))
    }

    fn s_value(&self, e: usize) -> PyResult<usize> {
        Ok(mullreg::s_value(&self.inner, check_e(e)?))
    }

    fn t_value(&self, e: usize) -> PyResult<usize> {
        Ok(mullreg::t_value(&self.inner, check_e(e)?))
    }

    fn s_operator(&self, e: usize) -> PyResult<Self> {
        mullreg::s_operator(&self.inner, check_e(e)?)
            .map(Into::into)
            .map_err(to_py)
    }

    /// Draw the Young diagram; annotation is one of none, ladders, e-rim,
    /// truncated-rim, hook-classes.
    #[pyo3(signature = (annotation = "none", e = None))]
    fn render(&self, annotation: &str, e: Option<usize>) -> PyResult<String> {
        let annotation: Annotation = annotation.parse().map_err(to_py)?;
        render(&self.inner, RenderOptions { annotation, e }).map_err(to_py)
    }
}

#[pyclass(name = "RimData", module = "mullreg", frozen)]
pub struct PyRimData {
    inner: RimData,
}

#[pymethods]
impl PyRimData {
    #[getter]
    fn e(&self) -> usize {
        self.inner.e
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m
    }

    #[getter]
    fn l_prime(&self) -> usize {
        self.inner.l_prime
    }

    #[getter]
    fn rim_nodes(&self) -> Vec<(usize, usize)> {
        node_pairs(&self.inner.rim_nodes)
    }

    #[getter]
    fn truncated_rim(&self) -> Vec<(usize, usize)> {
        node_pairs(&self.inner.truncated_rim)
    }

    fn __repr__(&self) -> String {
        format!(
            "RimData(e={}, r={}, m={}, l_prime={})",
            self.inner.e, self.inner.r, self.inner.m, self.inner.l_prime
        )
    }
}

#[pyclass(name = "HookProfile", module = "mullreg", frozen)]
pub struct PyHookProfile {
    inner: HookProfile,
}

#[pymethods]
impl PyHookProfile {
    #[getter]
    fn e(&self) -> usize {
        self.inner.e
    }

    #[getter]
    fn w(&self) -> usize {
        self.inner.w
    }

    #[getter]
    fn z(&self) -> usize {
        self.inner.z
    }

    #[getter]
    fn z_conj(&self) -> usize {
        self.inner.z_conj
    }

    /// `(row, col, arm, leg, length, divisible, class)` per node, row-major.
    #[getter]
    fn records(&self) -> Vec<(usize, usize, usize, usize, usize, bool, String)> {
        self.inner
            .records
            .iter()
            .map(|r| {
                (
                    r.node.row,
                    r.node.col,
                    r.arm,
                    r.leg,
                    r.length,
                    r.divisible,
                    r.class.to_string(),
                )
            })
            .collect()
    }

    fn is_l_partition(&self) -> bool {
        self.inner.is_l_partition()
    }
}

#[pyfunction]
fn parse_partition(text: &str) -> PyResult<PyPartition> {
    PyPartition::parse(text)
}

#[pyfunction]
fn enumerate_partitions(n: usize) -> Vec<PyPartition> {
    mullreg::enumerate_partitions(n).map(Into::into).collect()
}

fn config(n_max: usize, e_values: Vec<usize>, workers: Option<usize>) -> PyResult<CheckConfig> {
    let mut cfg = CheckConfig::new(n_max, e_values);
    cfg.workers = workers;
    cfg.validate().map_err(to_py)?;
    Ok(cfg)
}

/// Run a check suite and return the reports as a JSON string.
#[pyfunction]
#[pyo3(signature = (suite = "all", n_max = 12, e_values = vec![2, 3, 4, 5, 6], workers = None))]
fn check(
    py: Python<'_>,
    suite: &str,
    n_max: usize,
    e_values: Vec<usize>,
    workers: Option<usize>,
) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(to_py)?;
    let cfg = config(n_max, e_values, workers)?;
    let reports = py.detach(|| run_suite(suite, &cfg)).map_err(to_py)?;
    Ok(reports_to_json(&reports))
}

/// `(n, e, partitions, l_partitions, mg_equals_gt)`.
type CensusTuple = (usize, usize, usize, usize, usize);

#[pyfunction]
#[pyo3(signature = (n_max = 12, e_values = vec![2, 3, 4, 5, 6]))]
fn census_counts(py: Python<'_>, n_max: usize, e_values: Vec<usize>) -> PyResult<Vec<CensusTuple>> {
    let cfg = config(n_max, e_values, None)?;
    let rows = py.detach(|| census(&cfg));
    Ok(rows
        .into_iter()
        .map(|r| (r.n, r.e, r.partitions, r.l_partitions, r.mg_equals_gt))
        .collect())
}

#[pymodule]
#[pyo3(name = "mullreg")]
fn mullreg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyRimData>()?;
    m.add_class::<PyHookProfile>()?;
    m.add_function(wrap_pyfunction!(parse_partition, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(census_counts, m)?)?;
    Ok(())
}
