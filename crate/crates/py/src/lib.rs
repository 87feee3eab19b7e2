//! Python bindings: graphs, structure extraction, partition search,
//! probability kernel and the digraph reductions.

use std::collections::{BTreeMap, BTreeSet};

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ecdecomp::generators;
use ecdecomp::graph::{Digraph, Edge, EdgeColoredGraph, PartitionTargets};
use ecdecomp::io;
use ecdecomp::partition::{self, CheckOutcome, GoodVector};
use ecdecomp::reductions;
use ecdecomp::structures::{self, MinimalStructure};
use ecdecomp::Search;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

/// An immutable edge-colored graph.
#[pyclass(name = "EcGraph", skip_from_py_object)]
#[derive(Clone)]
struct PyEcGraph {
    inner: EdgeColoredGraph,
}

#[pymethods]
impl PyEcGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize, usize)>) -> PyResult<Self> {
        let edges = edges.into_iter().map(|(u, v, c)| Edge::new(u, v, c));
        Ok(PyEcGraph { inner: EdgeColoredGraph::new(n, edges).map_err(value_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.inner.edges().iter().map(|e| (e.u, e.v, e.color)).collect()
    }

    fn colors(&self) -> Vec<usize> {
        self.inner.colors().into_iter().collect()
    }

    fn edge_color(&self, u: usize, v: usize) -> Option<usize> {
        self.inner.edge_color(u, v)
    }

    fn color_degree(&self, v: usize) -> PyResult<usize> {
        self.inner.color_degree(v).map_err(value_err)
    }

    fn min_color_degree(&self) -> PyResult<usize> {
        self.inner.min_color_degree().map_err(value_err)
    }

    fn two_color_core(&self) -> Vec<usize> {
        self.inner.two_color_core().into_iter().collect()
    }

    fn has_pc_cycle(&self) -> bool {
        structures::has_pc_cycle(&self.inner)
    }

    fn find_rainbow_triangle(&self) -> Option<(usize, usize, usize)> {
        structures::find_rainbow_triangle(&self.inner)
    }

    fn to_ecg(&self) -> String {
        io::write_ecg(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("EcGraph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &PyEcGraph) -> bool {
        self.inner == other.inner
    }
}

/// A directed graph; `oriented` forbids 2-cycles.
#[pyclass(name = "Digraph", skip_from_py_object)]
#[derive(Clone)]
struct PyDigraph {
    inner: Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    #[pyo3(signature = (n, arcs, oriented = true))]
    fn new(n: usize, arcs: Vec<(usize, usize)>, oriented: bool) -> PyResult<Self> {
        Ok(PyDigraph { inner: Digraph::new(n, arcs, oriented).map_err(value_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().to_vec()
    }

    fn min_out_degree(&self) -> PyResult<usize> {
        self.inner.min_out_degree().map_err(value_err)
    }

    fn to_dg(&self) -> String {
        io::write_dg(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.vertex_count(), self.inner.arcs().len())
    }
}

fn structure_to_py(py: Python<'_>, s: &MinimalStructure) -> PyResult<Py<PyAny>> {
    let dict = pyo3::types::PyDict::new(py);
    match s {
        MinimalStructure::PcCycle(c) => {
            dict.set_item("kind", "pc_cycle")?;
            dict.set_item("vertices", c.vertices.clone())?;
            dict.set_item("colors", c.colors.clone())?;
        }
        MinimalStructure::GBowtie(b) => {
            dict.set_item("kind", "g_bowtie")?;
            dict.set_item("cycle1", b.cycle1.clone())?;
            dict.set_item("cycle2", b.cycle2.clone())?;
            dict.set_item("path", b.path.clone())?;
        }
    }
    Ok(dict.into_any().unbind())
}

fn search_to_py<T>(
    py: Python<'_>,
    s: Search<T>,
    f: impl FnOnce(Python<'_>, T) -> PyResult<Py<PyAny>>,
) -> PyResult<(String, Option<Py<PyAny>>)> {
    Ok(match s {
        Search::Found(t) => ("found".into(), Some(f(py, t)?)),
        Search::Absent => ("absent".into(), None),
        Search::Exhausted => ("exhausted".into(), None),
    })
}

fn cert_to_py(py: Python<'_>, g: &EdgeColoredGraph, cert: &partition::PartitionCertificate) -> PyResult<Py<PyAny>> {
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("parts", cert.parts.clone())?;
    dict.set_item("targets", cert.targets.as_slice().to_vec())?;
    dict.set_item("document", io::write_certificate(&io::certificate_document(g, cert)))?;
    Ok(dict.into_any().unbind())
}

#[pyfunction]
fn parse_ecg(text: &str) -> PyResult<PyEcGraph> {
    Ok(PyEcGraph { inner: io::parse_ecg(text).map_err(value_err)? })
}

#[pyfunction]
fn parse_dg(text: &str) -> PyResult<PyDigraph> {
    Ok(PyDigraph { inner: io::parse_dg(text).map_err(value_err)? })
}

#[pyfunction]
fn rainbow_complete(n: usize) -> PyResult<PyEcGraph> {
    Ok(PyEcGraph { inner: generators::rainbow_complete(n).map_err(value_err)? })
}

#[pyfunction]
fn pc_cycle_graph(n: usize) -> PyResult<PyEcGraph> {
    Ok(PyEcGraph { inner: generators::pc_cycle_graph(n).map_err(value_err)? })
}

#[pyfunction]
fn g_bowtie_graph(p: usize, q: usize, ell: usize) -> PyResult<PyEcGraph> {
    Ok(PyEcGraph { inner: generators::g_bowtie_graph(p, q, ell).map_err(value_err)? })
}

#[pyfunction]
fn random_ecg(n: usize, edge_prob: f64, colors: usize, seed: u64) -> PyResult<PyEcGraph> {
    Ok(PyEcGraph { inner: generators::random_ecg(n, edge_prob, colors, seed).map_err(value_err)? })
}

#[pyfunction]
#[pyo3(signature = (n, delta_c, edge_prob, colors, seed, max_attempts = 10_000))]
fn random_ecg_min_cdeg(
    n: usize,
    delta_c: usize,
    edge_prob: f64,
    colors: usize,
    seed: u64,
    max_attempts: usize,
) -> PyResult<PyEcGraph> {
    Ok(PyEcGraph {
        inner: generators::random_ecg_min_cdeg(n, delta_c, edge_prob, colors, seed, max_attempts)
            .map_err(value_err)?,
    })
}

#[pyfunction]
fn random_tournament(n: usize, seed: u64) -> PyDigraph {
    PyDigraph { inner: generators::random_tournament(n, seed) }
}

#[pyfunction]
fn random_oriented(n: usize, min_outdeg: usize, seed: u64) -> PyResult<PyDigraph> {
    Ok(PyDigraph { inner: generators::random_oriented(n, min_outdeg, seed).map_err(value_err)? })
}

#[pyfunction]
#[pyo3(signature = (g, budget = 1_000_000))]
fn find_pc_cycle(
    py: Python<'_>,
    g: &PyEcGraph,
    budget: u64,
) -> PyResult<(String, Option<Py<PyAny>>)> {
    search_to_py(py, structures::find_pc_cycle(&g.inner, budget), |py, c| {
        structure_to_py(py, &MinimalStructure::PcCycle(c))
    })
}

#[pyfunction]
fn minimalize(py: Python<'_>, g: &PyEcGraph) -> PyResult<Py<PyAny>> {
    let s = structures::minimalize_two_colored(&g.inner).map_err(value_err)?;
    structure_to_py(py, &s)
}

#[pyfunction]
#[pyo3(signature = (g, k, budget = 1_000_000, seed = 0))]
fn find_k_disjoint_structures(
    py: Python<'_>,
    g: &PyEcGraph,
    k: usize,
    budget: u64,
    seed: u64,
) -> PyResult<(String, Option<Py<PyAny>>)> {
    search_to_py(
        py,
        structures::find_k_disjoint_structures(&g.inner, k, budget, seed),
        |py, set| {
            let items: Vec<Py<PyAny>> = set
                .iter()
                .map(|s| structure_to_py(py, s))
                .collect::<PyResult<_>>()?;
            Ok(pyo3::types::PyList::new(py, items)?.into_any().unbind())
        },
    )
}

#[pyfunction]
#[pyo3(signature = (g, targets, budget = 1_000_000))]
fn exact_partition(
    py: Python<'_>,
    g: &PyEcGraph,
    targets: Vec<usize>,
    budget: u64,
) -> PyResult<(String, Option<Py<PyAny>>)> {
    let targets = PartitionTargets::new(targets).map_err(value_err)?;
    search_to_py(
        py,
        partition::exact_partition_search(&g.inner, &targets, budget),
        |py, cert| cert_to_py(py, &g.inner, &cert),
    )
}

#[pyfunction]
#[pyo3(signature = (g, k, budget = 1_000_000, seed = 0))]
fn partition_2k(
    py: Python<'_>,
    g: &PyEcGraph,
    k: usize,
    budget: u64,
    seed: u64,
) -> PyResult<(String, Option<Py<PyAny>>)> {
    search_to_py(
        py,
        partition::partition_2k_pipeline(&g.inner, k, budget, seed),
        |py, cert| cert_to_py(py, &g.inner, &cert),
    )
}

#[pyfunction]
#[pyo3(signature = (g, a, b, seed = 0, max_tries = 100))]
fn random_partition(
    py: Python<'_>,
    g: &PyEcGraph,
    a: usize,
    b: usize,
    seed: u64,
    max_tries: usize,
) -> PyResult<Option<Py<PyAny>>> {
    match partition::random_partition(&g.inner, a, b, seed, max_tries) {
        Ok((cert, _tries)) => Ok(Some(cert_to_py(py, &g.inner, &cert)?)),
        Err(partition::PartitionError::TriesExhausted { .. }) => Ok(None),
        Err(e) => Err(value_err(e)),
    }
}

#[pyfunction]
fn partition_complete_a2(py: Python<'_>, g: &PyEcGraph, a: usize) -> PyResult<Py<PyAny>> {
    let cert = partition::partition_complete_a2(&g.inner, a).map_err(value_err)?;
    cert_to_py(py, &g.inner, &cert)
}

#[pyfunction]
fn check_partition(g: &PyEcGraph, parts: Vec<Vec<usize>>, targets: Vec<usize>) -> PyResult<bool> {
    let targets = PartitionTargets::new(targets).map_err(value_err)?;
    match partition::check_partition(&g.inner, &parts, &targets).map_err(value_err)? {
        CheckOutcome::Valid(_) => Ok(true),
        CheckOutcome::Deficient(_) => Ok(false),
    }
}

#[pyfunction]
fn verify_certificate(g: &PyEcGraph, document: &str) -> PyResult<bool> {
    let doc = io::parse_certificate(document).map_err(value_err)?;
    match io::verify_certificate(&doc, &g.inner) {
        Ok(_) => Ok(true),
        Err(io::IoError::Invalid(_)) | Err(io::IoError::HashMismatch) => Ok(false),
        Err(e) => Err(value_err(e)),
    }
}

/// Exact lower-tail probability as a `num/den` decimal string pair.
#[pyfunction]
fn p_s_exact(x0: usize, xs: Vec<usize>) -> PyResult<String> {
    let gv = GoodVector::new(x0, xs).map_err(value_err)?;
    Ok(partition::p_s_exact(&gv).to_string())
}

#[pyfunction]
fn p_s_bound(x0: usize, k: usize) -> PyResult<String> {
    Ok(partition::p_s_bound(x0, k).map_err(value_err)?.to_string())
}

#[pyfunction]
fn g_threshold(k: usize, f_oracle: BTreeMap<usize, u64>) -> PyResult<u64> {
    partition::g_threshold(k, &f_oracle).map_err(value_err)
}

#[pyfunction]
fn bound_chain(t: u64, k: u64) -> PyResult<u64> {
    reductions::bound_chain(t, k).map_err(value_err)
}

#[pyfunction]
fn digraph_to_ecg(d: &PyDigraph) -> PyResult<PyEcGraph> {
    Ok(PyEcGraph { inner: reductions::digraph_to_ecg(&d.inner).map_err(value_err)? })
}

#[pyfunction]
fn ecg_to_complete(g: &PyEcGraph) -> PyEcGraph {
    PyEcGraph { inner: reductions::ecg_to_complete(&g.inner) }
}

#[pyfunction]
#[pyo3(signature = (d, k, budget = 1_000_000))]
fn find_k_disjoint_dicycles(
    py: Python<'_>,
    d: &PyDigraph,
    k: usize,
    budget: u64,
) -> PyResult<(String, Option<Py<PyAny>>)> {
    search_to_py(
        py,
        reductions::find_k_disjoint_dicycles(&d.inner, k, budget),
        |py, set| {
            Ok(pyo3::types::PyList::new(py, set.cycles)?.into_any().unbind())
        },
    )
}

#[pyfunction]
fn gallai_partition(g: &PyEcGraph) -> PyResult<(Vec<Vec<usize>>, Vec<usize>)> {
    let gp = partition::gallai_partition(&g.inner).map_err(runtime_err)?;
    let crossing: Vec<usize> = gp.crossing_colors.iter().copied().collect();
    Ok((gp.parts, crossing))
}

#[pyfunction]
fn partition_bipartite_a2(
    py: Python<'_>,
    g: &PyEcGraph,
    x_side: Vec<usize>,
    a: usize,
) -> PyResult<Py<PyAny>> {
    let x: BTreeSet<usize> = x_side.into_iter().collect();
    let y: BTreeSet<usize> = (0..g.inner.vertex_count()).filter(|v| !x.contains(v)).collect();
    let cert = partition::partition_bipartite_a2(&g.inner, &x, &y, a).map_err(value_err)?;
    cert_to_py(py, &g.inner, &cert)
}

#[pymodule]
fn ecdecomp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyEcGraph>()?;
    m.add_class::<PyDigraph>()?;
    m.add_function(wrap_pyfunction!(parse_ecg, m)?)?;
    m.add_function(wrap_pyfunction!(parse_dg, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_complete, m)?)?;
    m.add_function(wrap_pyfunction!(pc_cycle_graph, m)?)?;
    m.add_function(wrap_pyfunction!(g_bowtie_graph, m)?)?;
    m.add_function(wrap_pyfunction!(random_ecg, m)?)?;
    m.add_function(wrap_pyfunction!(random_ecg_min_cdeg, m)?)?;
    m.add_function(wrap_pyfunction!(random_tournament, m)?)?;
    m.add_function(wrap_pyfunction!(random_oriented, m)?)?;
    m.add_function(wrap_pyfunction!(find_pc_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(minimalize, m)?)?;
    m.add_function(wrap_pyfunction!(find_k_disjoint_structures, m)?)?;
    m.add_function(wrap_pyfunction!(exact_partition, m)?)?;
    m.add_function(wrap_pyfunction!(partition_2k, m)?)?;
    m.add_function(wrap_pyfunction!(random_partition, m)?)?;
    m.add_function(wrap_pyfunction!(partition_complete_a2, m)?)?;
    m.add_function(wrap_pyfunction!(partition_bipartite_a2, m)?)?;
    m.add_function(wrap_pyfunction!(check_partition, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(p_s_exact, m)?)?;
    m.add_function(wrap_pyfunction!(p_s_bound, m)?)?;
    m.add_function(wrap_pyfunction!(g_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(bound_chain, m)?)?;
    m.add_function(wrap_pyfunction!(digraph_to_ecg, m)?)?;
    m.add_function(wrap_pyfunction!(ecg_to_complete, m)?)?;
    m.add_function(wrap_pyfunction!(find_k_disjoint_dicycles, m)?)?;
    m.add_function(wrap_pyfunction!(gallai_partition, m)?)?;
    Ok(())
}
