//! Python bindings: the graph type, the above-budget solvers, the annotated
//! engines, the brute-force oracles, and certificate round-tripping.

use clique_above::aecc::{AeccEngine, AnnotatedInstance};
use clique_above::certificate::{
    check_certificate, parse_certificate, serialize_certificate, CertKind,
};
use clique_above::ecc_alpha::{solve_ecc_alpha as ecc_alpha_rs, ClassHint};
use clique_above::ecp_alpha::{ecp_exact as ecp_exact_rs, solve_ecp_alpha as ecp_alpha_rs};
use clique_above::graph::{parse_graph, serialize_graph, VertexSet};
use clique_above::{alpha, generators, oracle, simplicial};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple undirected graph with vertices 0..n-1.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: clique_above::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: clique_above::Graph::from_edges(n, &edges).map_err(err)?,
        })
    }

    /// Parses the `p <n> <m>` / `e <u> <v>` edge-list format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_graph(text).map_err(err)?,
        })
    }

    fn to_text(&self) -> String {
        serialize_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.inner.n() && (v as usize) < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn degeneracy(&self) -> (usize, Vec<u32>) {
        clique_above::graph::degeneracy(&self.inner)
    }

    fn maximal_cliques(&self) -> Vec<Vec<u32>> {
        clique_above::graph::maximal_cliques(&self.inner)
            .iter()
            .map(|c| c.iter().collect())
            .collect()
    }

    fn is_clique(&self, vertices: Vec<u32>) -> PyResult<bool> {
        self.inner
            .is_clique(&VertexSet::from_unsorted(vertices))
            .map_err(err)
    }

    fn simplicial_vertices(&self) -> Vec<u32> {
        simplicial::simplicial_report(&self.inner)
            .simplicial_vertices
            .iter()
            .collect()
    }

    fn pendant_expand(&self) -> PyGraph {
        PyGraph {
            inner: generators::pendant_expand(&self.inner),
        }
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// A verifiable YES-witness: clique family, independence witness, budget.
#[pyclass(name = "Certificate", frozen)]
struct PyCertificate {
    inner: clique_above::Certificate,
}

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyCertificate {
            inner: parse_certificate(text).map_err(err)?,
        })
    }

    fn to_text(&self) -> String {
        serialize_certificate(&self.inner)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        match self.inner.kind {
            CertKind::Cover => "cover",
            CertKind::Partition => "partition",
        }
    }

    #[getter]
    fn alpha(&self) -> usize {
        self.inner.declared_alpha
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k
    }

    #[getter]
    fn witness(&self) -> Vec<u32> {
        self.inner.alpha_witness.iter().collect()
    }

    #[getter]
    fn cliques(&self) -> Vec<Vec<u32>> {
        self.inner.cliques.iter().map(|c| c.iter().collect()).collect()
    }

    fn verify(&self, g: &PyGraph) -> bool {
        check_certificate(&g.inner, &self.inner).is_ok()
    }

    fn __repr__(&self) -> String {
        format!(
            "Certificate(kind={}, alpha={}, k={}, cliques={})",
            self.kind(),
            self.inner.declared_alpha,
            self.inner.k,
            self.inner.cliques.len()
        )
    }
}

/// Partition all edges into at most alpha + k cliques; returns a
/// Certificate or None.
#[pyfunction]
fn solve_ecp_alpha(g: &PyGraph, k: usize) -> PyResult<Option<PyCertificate>> {
    Ok(ecp_alpha_rs(&g.inner, k)
        .map_err(err)?
        .map(|inner| PyCertificate { inner }))
}

/// Cover all edges with at most alpha + k cliques; returns a Certificate or
/// None. Engines: auto, k2, bounded-omega, degenerate, treewidth,
/// minor-free, brute, plus the class-* hints.
#[pyfunction]
#[pyo3(signature = (g, k, engine = "auto"))]
fn solve_ecc_alpha(g: &PyGraph, k: usize, engine: &str) -> PyResult<Option<PyCertificate>> {
    let result = if let Some(hint) = ClassHint::parse(engine) {
        clique_above::ecc_alpha::solve_ecc_alpha_class(&g.inner, k, hint).map_err(err)?
    } else {
        let engine = AeccEngine::parse(engine).map_err(err)?;
        ecc_alpha_rs(&g.inner, k, engine).map_err(err)?
    };
    Ok(result.map(|inner| PyCertificate { inner }))
}

/// Cover the given edge subset with at most k cliques; returns the clique
/// list or None.
#[pyfunction]
#[pyo3(signature = (g, b_edges, k, engine = "auto"))]
fn solve_aecc(
    g: &PyGraph,
    b_edges: Vec<(u32, u32)>,
    k: usize,
    engine: &str,
) -> PyResult<Option<Vec<Vec<u32>>>> {
    let inst = AnnotatedInstance::new(
        g.inner.clone(),
        clique_above::EdgeSet::from_unsorted(b_edges),
        k,
    )
    .map_err(err)?;
    let engine = AeccEngine::parse(engine).map_err(err)?;
    let out = engine.run(&inst).map_err(err)?;
    Ok(out.map(|f| f.iter().map(|c| c.iter().collect()).collect()))
}

/// An edge clique partition of size at most k, or None.
#[pyfunction]
fn solve_ecp(g: &PyGraph, k: usize) -> Option<Vec<Vec<u32>>> {
    ecp_exact_rs(&g.inner, k).map(|f| f.iter().map(|c| c.iter().collect()).collect())
}

/// Exact independence number with a witness (brute force, n <= 26).
#[pyfunction]
fn alpha_exact(g: &PyGraph) -> PyResult<(usize, Vec<u32>)> {
    let (a, w) = alpha::alpha_bruteforce(&g.inner).map_err(err)?;
    Ok((a, w.iter().collect()))
}

/// Minimum edge clique cover size with a witness family (m <= 20).
#[pyfunction]
fn ecc_oracle(g: &PyGraph) -> PyResult<(usize, Vec<Vec<u32>>)> {
    let (size, f) = oracle::ecc_bruteforce(&g.inner).map_err(err)?;
    Ok((size, f.iter().map(|c| c.iter().collect()).collect()))
}

/// Minimum edge clique partition size with a witness family (m <= 20).
#[pyfunction]
fn ecp_oracle(g: &PyGraph) -> PyResult<(usize, Vec<Vec<u32>>)> {
    let (size, f) = oracle::ecp_bruteforce(&g.inner).map_err(err)?;
    Ok((size, f.iter().map(|c| c.iter().collect()).collect()))
}

/// Seeded uniform random graph with exactly m edges.
#[pyfunction]
fn random_graph(n: usize, m: usize, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: generators::random_graph(n, m, seed).map_err(err)?,
    })
}

#[pymodule]
fn clique_above_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(solve_ecp_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(solve_ecc_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(solve_aecc, m)?)?;
    m.add_function(wrap_pyfunction!(solve_ecp, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_exact, m)?)?;
    m.add_function(wrap_pyfunction!(ecc_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(ecp_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    Ok(())
}
