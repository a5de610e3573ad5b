//! Simplicial vertices, simplicial cliques, and critical cliques (classes of
//! true twins). These are the structural handles every solver leans on: a
//! vertex is simplicial when its closed neighborhood is a clique, and that
//! clique is then forced into any sufficiently small cover or partition.

use crate::graph::{CliqueFamily, Graph, VertexSet};
use std::collections::BTreeMap;

/// Simplicial vertices of a graph together with the distinct simplicial
/// cliques and one representative simplicial vertex per clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialReport {
    pub simplicial_vertices: VertexSet,
    pub simplicial_cliques: CliqueFamily,
    /// For each clique (by index) the lowest-id simplicial vertex in it.
    pub representative: Vec<u32>,
}

/// Partition of the vertex set into classes of true twins. Each class is a
/// clique, and two vertices share a class exactly when their closed
/// neighborhoods are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalCliquePartition {
    pub classes: Vec<VertexSet>,
}

impl CriticalCliquePartition {
    /// Index of the class containing `v`.
    pub fn class_of(&self, v: u32) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(v))
            .expect("classes partition the vertex set")
    }
}

/// Detects all simplicial vertices by a direct per-vertex clique check and
/// groups them by their (deduplicated) simplicial cliques.
pub fn simplicial_report(g: &Graph) -> SimplicialReport {
    let mut vertices = Vec::new();
    let mut by_clique: BTreeMap<VertexSet, u32> = BTreeMap::new();
    for v in g.vertices() {
        let closed = g.closed_neighborhood(v);
        if g.is_clique(&closed).expect("in range") {
            vertices.push(v);
            by_clique.entry(closed).or_insert(v);
        }
    }
    let mut simplicial_cliques = CliqueFamily::new();
    let mut representative = Vec::new();
    for (clique, rep) in by_clique {
        simplicial_cliques.push(clique);
        representative.push(rep);
    }
    SimplicialReport {
        simplicial_vertices: VertexSet::from_sorted(vertices),
        simplicial_cliques,
        representative,
    }
}

/// The set S': exactly one simplicial vertex (lowest id) per class of true
/// twins among the simplicial vertices.
///
/// Two simplicial vertices are true twins exactly when they share their
/// simplicial clique, so this is the representative set of the report.
pub fn twin_free_simplicial_set(g: &Graph) -> VertexSet {
    let report = simplicial_report(g);
    VertexSet::from_unsorted(report.representative)
}

/// The true-twin partition, computed by grouping sorted closed
/// neighborhoods; groups are compared exactly, never by hash.
pub fn critical_cliques(g: &Graph) -> CriticalCliquePartition {
    let mut groups: BTreeMap<VertexSet, Vec<u32>> = BTreeMap::new();
    for v in g.vertices() {
        groups.entry(g.closed_neighborhood(v)).or_default().push(v);
    }
    let mut classes: Vec<VertexSet> = groups
        .into_values()
        .map(VertexSet::from_unsorted)
        .collect();
    classes.sort_by_key(|c| c.as_slice().first().copied());
    CriticalCliquePartition { classes }
}
