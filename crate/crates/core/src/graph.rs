//! Simple undirected graphs with dense integer vertex ids, the edge-list
//! text format, and the elementary structural queries every solver builds on.
//!
//! All types here are immutable after construction and keep their contents
//! in canonical sorted order so that identical inputs produce byte-identical
//! outputs everywhere downstream.

use std::fmt;
use thiserror::Error;

/// Errors raised while parsing or constructing graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed input: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: u32 },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: u32, n: usize },
}

/// A sorted set of distinct vertex ids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary input, sorting and deduplicating.
    pub fn from_unsorted(mut v: Vec<u32>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Builds a set from input that is already strictly ascending.
    pub fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]), "not strictly ascending");
        VertexSet(v)
    }

    pub fn singleton(v: u32) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn insert(&mut self, v: u32) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        VertexSet::from_unsorted(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Number of vertices shared with `other`.
    pub fn intersection_size(&self, other: &VertexSet) -> usize {
        self.0.iter().filter(|&&v| other.contains(v)).count()
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A sorted set of undirected edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSet(Vec<(u32, u32)>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    /// Normalizes endpoint order, sorts and deduplicates.
    pub fn from_unsorted(edges: Vec<(u32, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: u32, v: u32) -> bool {
        let e = if u <= v { (u, v) } else { (v, u) };
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[(u32, u32)] {
        &self.0
    }
}

impl FromIterator<(u32, u32)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        EdgeSet::from_unsorted(iter.into_iter().collect())
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// An ordered list of vertex sets, each intended to be a clique of some host
/// graph. Validation against a host graph is a separate operation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CliqueFamily(Vec<VertexSet>);

impl CliqueFamily {
    pub fn new() -> Self {
        CliqueFamily(Vec::new())
    }

    pub fn from_vec(v: Vec<VertexSet>) -> Self {
        CliqueFamily(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: VertexSet) {
        self.0.push(s);
    }

    pub fn get(&self, i: usize) -> &VertexSet {
        &self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.0.iter()
    }

    pub fn contains_set(&self, s: &VertexSet) -> bool {
        self.0.iter().any(|c| c == s)
    }

    /// Sorts members lexicographically and drops duplicates.
    pub fn canonicalize(&mut self) {
        self.0.sort();
        self.0.dedup();
    }

    pub fn extend_from(&mut self, other: &CliqueFamily) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.0
    }
}

impl FromIterator<VertexSet> for CliqueFamily {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        CliqueFamily(iter.into_iter().collect())
    }
}

impl fmt::Debug for CliqueFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A simple undirected graph on vertices `0..n-1` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u as u32, w[0]);
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.n() as u32
    }

    /// All edges in canonical order: `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges())
    }

    pub fn closed_neighborhood(&self, v: u32) -> VertexSet {
        let mut s = self.adj[v as usize].clone();
        s.push(v);
        VertexSet::from_unsorted(s)
    }

    pub fn common_neighbors(&self, u: u32, v: u32) -> Vec<u32> {
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_sorted(self.vertices().filter(|&v| self.degree(v) == 0).collect())
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| self.common_neighbors(u, v).is_empty())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Subgraph induced on `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let mut old_to_new = vec![u32::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            old_to_new[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        for (i, v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = old_to_new[w as usize];
                if j != u32::MAX && (i as u32) < j {
                    edges.push((i as u32, j));
                }
            }
        }
        Graph::from_edges(keep.len(), &edges).expect("induced subgraph is valid")
    }

    /// Two-coloring of the graph, one `(side0, side1)` pair if bipartite.
    /// The lowest vertex of each connected component goes to side 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::from([s as u32]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - color[v as usize];
                        queue.push_back(w);
                    } else if color[w as usize] == color[v as usize] {
                        return None;
                    }
                }
            }
        }
        let side0 = (0..n as u32).filter(|&v| color[v as usize] == 0).collect();
        let side1 = (0..n as u32).filter(|&v| color[v as usize] == 1).collect();
        Some((side0, side1))
    }

    /// True iff all pairs of `s` are adjacent; vacuously true for |s| <= 1.
    pub fn is_clique(&self, s: &VertexSet) -> Result<bool, GraphError> {
        for v in s.iter() {
            if v as usize >= self.n() {
                return Err(GraphError::VertexOutOfRange { v, n: self.n() });
            }
        }
        let vs = s.as_slice();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !self.has_edge(vs[i], vs[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Adjacency as bitsets, one `Vec<u64>` row per vertex.
    pub(crate) fn adjacency_bitsets(&self) -> Vec<Vec<u64>> {
        let n = self.n();
        let words = n.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; n];
        for (u, row) in rows.iter_mut().enumerate() {
            for &v in &self.adj[u] {
                row[v as usize / 64] |= 1u64 << (v % 64);
            }
        }
        rows
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m, self.edges())
    }
}

/// Parses the edge-list format: `p <n> <m>` first, then `m` lines
/// `e <u> <v>` with `0 <= u < v < n`. Lines starting with `#` are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tok = line.split_ascii_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(GraphError::Malformed {
                        line: line_no,
                        msg: "repeated p line".into(),
                    });
                }
                let n = parse_field(tok.next(), line_no, "n")?;
                let m = parse_field(tok.next(), line_no, "m")?;
                if tok.next().is_some() {
                    return Err(GraphError::Malformed {
                        line: line_no,
                        msg: "trailing tokens after p line".into(),
                    });
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or(GraphError::Malformed {
                    line: line_no,
                    msg: "edge before p line".into(),
                })?;
                let u: u32 = parse_field(tok.next(), line_no, "u")? as u32;
                let v: u32 = parse_field(tok.next(), line_no, "v")? as u32;
                if tok.next().is_some() {
                    return Err(GraphError::Malformed {
                        line: line_no,
                        msg: "trailing tokens after e line".into(),
                    });
                }
                if u == v {
                    return Err(GraphError::SelfLoop { v: u });
                }
                if u > v {
                    return Err(GraphError::Malformed {
                        line: line_no,
                        msg: format!("edge endpoints not ascending: {u} {v}"),
                    });
                }
                if v as usize >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
                if edges.contains(&(u, v)) {
                    return Err(GraphError::DuplicateEdge { u, v });
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(GraphError::Malformed {
                    line: line_no,
                    msg: format!("unknown directive {other:?}"),
                });
            }
            None => unreachable!("non-empty line"),
        }
    }
    let (n, m) = header.ok_or(GraphError::Malformed {
        line: 0,
        msg: "missing p line".into(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Malformed {
            line: 0,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    tok.ok_or_else(|| GraphError::Malformed {
        line,
        msg: format!("missing field {what}"),
    })?
    .parse()
    .map_err(|_| GraphError::Malformed {
        line,
        msg: format!("field {what} is not a number"),
    })
}

/// Serializes a graph to the canonical edge-list form; `parse_graph` of the
/// output reproduces the graph exactly.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Degeneracy and a witnessing min-degree elimination order.
///
/// Repeatedly removes a lowest-id vertex of minimum remaining degree; the
/// returned value is the largest degree seen at removal time.
pub fn degeneracy(g: &Graph) -> (usize, Vec<u32>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v as u32)).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex remains");
        d = d.max(deg[v]);
        alive[v] = false;
        order.push(v as u32);
        for &w in g.neighbors(v as u32) {
            if alive[w as usize] {
                deg[w as usize] -= 1;
            }
        }
    }
    (d, order)
}

/// All inclusion-maximal cliques, enumerated with pivoting, returned in
/// lexicographic order. The pivot is a vertex maximizing the number of
/// remaining candidates it dominates, ties broken by lowest id.
pub fn maximal_cliques(g: &Graph) -> CliqueFamily {
    let n = g.n();
    if n == 0 {
        return CliqueFamily::new();
    }
    let adj = g.adjacency_bitsets();
    let words = n.div_ceil(64);
    let mut p = vec![u64::MAX; words];
    let tail = n % 64;
    if tail != 0 {
        p[words - 1] = (1u64 << tail) - 1;
    }
    let x = vec![0u64; words];
    let mut r: Vec<u32> = Vec::new();
    let mut out: Vec<VertexSet> = Vec::new();
    bron_kerbosch(&adj, &mut r, p, x, &mut out);
    out.sort();
    CliqueFamily(out)
}

fn bits_iter(row: &[u64]) -> impl Iterator<Item = u32> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some(w as u32 * 64 + b)
            }
        })
    })
}

fn bits_count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

fn bron_kerbosch(
    adj: &[Vec<u64>],
    r: &mut Vec<u32>,
    p: Vec<u64>,
    x: Vec<u64>,
    out: &mut Vec<VertexSet>,
) {
    if bits_count(&p) == 0 && bits_count(&x) == 0 {
        out.push(VertexSet::from_unsorted(r.clone()));
        return;
    }
    let pivot = bits_iter(&p)
        .chain(bits_iter(&x))
        .min_by_key(|&u| {
            let dominated: usize = p
                .iter()
                .zip(&adj[u as usize])
                .map(|(pw, aw)| (pw & aw).count_ones() as usize)
                .sum();
            (usize::MAX - dominated, u)
        })
        .expect("pivot exists");
    let candidates: Vec<u32> = bits_iter(&p)
        .filter(|&v| adj[pivot as usize][v as usize / 64] & (1u64 << (v % 64)) == 0)
        .collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let nv = &adj[v as usize];
        let new_p: Vec<u64> = p.iter().zip(nv).map(|(a, b)| a & b).collect();
        let new_x: Vec<u64> = x.iter().zip(nv).map(|(a, b)| a & b).collect();
        r.push(v);
        bron_kerbosch(adj, r, new_p, new_x, out);
        r.pop();
        p[v as usize / 64] &= !(1u64 << (v % 64));
        x[v as usize / 64] |= 1u64 << (v % 64);
    }
}

/// A named violation found while checking a clique family against a graph.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    #[error("member {index} is empty")]
    EmptyMember { index: usize },
    #[error("member {index} is not a clique: {u}-{v} missing")]
    NotAClique { index: usize, u: u32, v: u32 },
    #[error("member {index} has out-of-range vertex {v}")]
    OutOfRange { index: usize, v: u32 },
    #[error("edge {u}-{v} is not covered")]
    EdgeUncovered { u: u32, v: u32 },
    #[error("members {i} and {j} share two vertices {u} and {v}")]
    SharesTwoVertices { i: usize, j: usize, u: u32, v: u32 },
}

/// Checks that `f` is an edge clique cover of `g`: every member is a
/// non-empty clique and every edge lies in at least one member.
pub fn check_cover(g: &Graph, f: &CliqueFamily) -> Result<(), CoverViolation> {
    for (index, c) in f.iter().enumerate() {
        if c.is_empty() {
            return Err(CoverViolation::EmptyMember { index });
        }
        if let Some(v) = c.iter().find(|&v| v as usize >= g.n()) {
            return Err(CoverViolation::OutOfRange { index, v });
        }
        let vs = c.as_slice();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !g.has_edge(vs[i], vs[j]) {
                    return Err(CoverViolation::NotAClique {
                        index,
                        u: vs[i],
                        v: vs[j],
                    });
                }
            }
        }
    }
    for (u, v) in g.edges() {
        if !f.iter().any(|c| c.contains(u) && c.contains(v)) {
            return Err(CoverViolation::EdgeUncovered { u, v });
        }
    }
    Ok(())
}

/// Checks that `f` is an edge clique partition: a cover in which any two
/// distinct members share at most one vertex.
pub fn check_partition(g: &Graph, f: &CliqueFamily) -> Result<(), CoverViolation> {
    check_cover(g, f)?;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let shared = f.get(i).intersection(f.get(j));
            if shared.len() >= 2 {
                let s = shared.as_slice();
                return Err(CoverViolation::SharesTwoVertices {
                    i,
                    j,
                    u: s[0],
                    v: s[1],
                });
            }
        }
    }
    Ok(())
}

pub fn verify_cover(g: &Graph, f: &CliqueFamily) -> bool {
    check_cover(g, f).is_ok()
}

pub fn verify_partition(g: &Graph, f: &CliqueFamily) -> bool {
    check_partition(g, f).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{all_graphs, complete_graph, cycle_graph, path_graph};

    #[test]
    fn parse_p3_and_triangle() {
        let g = parse_graph("p 3 2\ne 0 1\ne 1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let k3 = parse_graph("p 3 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!(k3.m(), 3);
        assert!(k3.has_edge(0, 2));
    }

    #[test]
    fn parse_rejects_self_loop() {
        assert_eq!(
            parse_graph("p 2 1\ne 0 0\n").unwrap_err(),
            GraphError::SelfLoop { v: 0 }
        );
    }

    #[test]
    fn parse_rejects_duplicate_and_range_and_garbage() {
        assert!(matches!(
            parse_graph("p 3 2\ne 0 1\ne 0 1\n").unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1 }
        ));
        assert!(matches!(
            parse_graph("p 2 1\ne 0 5\n").unwrap_err(),
            GraphError::VertexOutOfRange { v: 5, n: 2 }
        ));
        assert!(matches!(
            parse_graph("p 2 1\nq 0 1\n").unwrap_err(),
            GraphError::Malformed { .. }
        ));
        assert!(matches!(
            parse_graph("p 3 1\ne 1 0\n").unwrap_err(),
            GraphError::Malformed { .. }
        ));
    }

    #[test]
    fn parse_ignores_comments_and_counts_edges() {
        let g = parse_graph("# a comment\np 3 1\n# another\ne 0 2\n").unwrap();
        assert_eq!(g.m(), 1);
        assert!(matches!(
            parse_graph("p 3 2\ne 0 1\n").unwrap_err(),
            GraphError::Malformed { .. }
        ));
    }

    #[test]
    fn serialize_round_trip_on_samples() {
        for n in 0..=5 {
            for g in all_graphs(n) {
                let text = serialize_graph(&g);
                let back = parse_graph(&text).unwrap();
                assert_eq!(g, back);
            }
        }
    }

    #[test]
    fn is_clique_basics() {
        let k3 = complete_graph(3);
        assert!(k3.is_clique(&VertexSet::from_sorted(vec![0, 1, 2])).unwrap());
        let p3 = path_graph(3);
        assert!(!p3.is_clique(&VertexSet::from_sorted(vec![0, 1, 2])).unwrap());
        assert!(p3.is_clique(&VertexSet::new()).unwrap());
        assert!(matches!(
            p3.is_clique(&VertexSet::singleton(7)),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn degeneracy_known_values() {
        assert_eq!(degeneracy(&cycle_graph(5)).0, 2);
        assert_eq!(degeneracy(&path_graph(6)).0, 1);
        assert_eq!(degeneracy(&complete_graph(5)).0, 4);
        assert_eq!(degeneracy(&Graph::empty(0)).0, 0);
        assert_eq!(degeneracy(&Graph::empty(3)).0, 0);
    }

    #[test]
    fn degeneracy_bounded_by_max_degree_and_monotone() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.random_range(1..10usize);
            let g = crate::generators::random_graph(n, rng.random_range(0..=n * (n - 1) / 2), rng.random())
                .unwrap();
            let (d, order) = degeneracy(&g);
            assert_eq!(order.len(), n);
            assert!(d <= g.max_degree());
            if n > 1 {
                let keep: VertexSet = (0..n as u32 - 1).collect();
                let (d_sub, _) = degeneracy(&g.induced(&keep));
                assert!(d_sub <= d);
            }
        }
    }

    #[test]
    fn maximal_cliques_examples() {
        let three_isolated = Graph::empty(3);
        let f = maximal_cliques(&three_isolated);
        assert_eq!(f.len(), 3);
        assert_eq!(f.get(0), &VertexSet::singleton(0));

        assert_eq!(maximal_cliques(&complete_graph(3)).len(), 1);

        let p3 = path_graph(3);
        let f = maximal_cliques(&p3);
        assert_eq!(f.len(), 2);
        assert_eq!(f.get(0), &VertexSet::from_sorted(vec![0, 1]));
        assert_eq!(f.get(1), &VertexSet::from_sorted(vec![1, 2]));
    }

    /// Largest possible number of maximal cliques on p vertices.
    fn moon_moser(p: usize) -> usize {
        match p {
            0 => 1,
            1 => 1,
            2 => 2,
            _ => match p % 3 {
                0 => 3usize.pow(p as u32 / 3),
                1 => 4 * 3usize.pow((p as u32 - 4) / 3),
                _ => 2 * 3usize.pow((p as u32 - 2) / 3),
            },
        }
    }

    #[test]
    fn maximal_clique_count_within_bound_up_to_seven() {
        for n in 0..=7 {
            let bound = moon_moser(n);
            for g in all_graphs(n) {
                let f = maximal_cliques(&g);
                assert!(f.len() <= bound, "n={n} bound={bound} got={}", f.len());
                // enumerated cliques are maximal and pairwise distinct
                for i in 1..f.len() {
                    assert!(f.get(i - 1) < f.get(i));
                }
            }
        }
    }

    #[test]
    fn cover_and_partition_checks() {
        let k4 = complete_graph(4);
        let full = CliqueFamily::from_vec(vec![(0..4).collect()]);
        assert!(verify_cover(&k4, &full));
        assert!(verify_partition(&k4, &full));

        // K4 minus edge 2-3, covered by two triangles sharing edge 0-1
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let two = CliqueFamily::from_vec(vec![
            VertexSet::from_sorted(vec![0, 1, 2]),
            VertexSet::from_sorted(vec![0, 1, 3]),
        ]);
        assert!(verify_cover(&g, &two));
        assert_eq!(
            check_partition(&g, &two).unwrap_err(),
            CoverViolation::SharesTwoVertices {
                i: 0,
                j: 1,
                u: 0,
                v: 1
            }
        );

        let c4 = cycle_graph(4);
        let singles: CliqueFamily = c4
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::from_sorted(vec![u, v]))
            .collect();
        assert!(verify_partition(&c4, &singles));
    }

    #[test]
    fn partition_implies_cover_on_random_families() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.random_range(1..8usize);
            let g = crate::generators::random_graph(n, rng.random_range(0..=n * (n - 1) / 2), rng.random())
                .unwrap();
            // a family of single edges plus maximal cliques, arbitrary mix
            let mut f = CliqueFamily::new();
            for (u, v) in g.edges() {
                if rng.random_bool(0.5) {
                    f.push(VertexSet::from_sorted(vec![u, v]));
                }
            }
            if verify_partition(&g, &f) {
                assert!(verify_cover(&g, &f));
            }
        }
    }

    #[test]
    fn bipartition_deterministic() {
        let c4 = cycle_graph(4);
        let (s0, s1) = c4.bipartition().unwrap();
        assert_eq!(s0, VertexSet::from_sorted(vec![0, 2]));
        assert_eq!(s1, VertexSet::from_sorted(vec![1, 3]));
        assert!(cycle_graph(5).bipartition().is_none());
    }
}
