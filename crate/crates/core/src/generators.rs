//! Instance generators: named graph families, seeded random graphs, and the
//! gadget constructions that translate between vertex clique cover, annotated
//! edge clique cover, and the above-independence-number problems.
//!
//! Each gadget returns a provenance record describing the source instance and
//! the equivalence it claims, so test harnesses can derive expected answers
//! from oracles on the source side.

use crate::aecc::AnnotatedInstance;
use crate::graph::{EdgeSet, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("source graph is not bipartite")]
    NotBipartite,
    #[error("source graph is not co-bipartite")]
    NotCoBipartite,
    #[error("annotated edges are not a perfect matching")]
    NotPerfectMatching,
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
}

/// Where a generated instance came from and what it is claimed to preserve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub gadget: &'static str,
    pub source: String,
    pub equivalence: String,
}

/// A generated instance together with its provenance record.
#[derive(Debug, Clone)]
pub struct Generated<T> {
    pub instance: T,
    pub provenance: Provenance,
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
    edges.push((0, n as u32 - 1));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with center 0 and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves as u32).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// Two triangles 0-1-4 and 2-3-4 sharing vertex 4.
pub fn bowtie_graph() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
}

/// K4 minus the edge 2-3.
pub fn diamond_graph() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// Triangle 0-1-2 with a pendant attached to each corner.
pub fn net_graph() -> Graph {
    pendant_expand(&complete_graph(3))
}

/// Rows x cols grid; vertex (r, c) has id r*cols + c.
pub fn grid_graph(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| (r * cols + c) as u32;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges).unwrap()
}

pub fn petersen_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    Graph::from_edges(10, &edges.iter().map(|&(a, b)| if a < b { (a, b) } else { (b, a) }).collect::<Vec<_>>())
        .unwrap()
}

/// Iterates every labeled graph on `n` vertices (2^(n choose 2) graphs).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(u32, u32)> = {
        let mut p = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                p.push((u, v));
            }
        }
        p
    };
    let total: u64 = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

// ---------------------------------------------------------------------------
// Random generators (deterministic per seed)
// ---------------------------------------------------------------------------

/// Uniform graph with exactly `m` edges.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph, GadgetError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GadgetError::Infeasible(format!(
            "m = {m} exceeds {max} possible edges on n = {n}"
        )));
    }
    let mut pairs = Vec::with_capacity(max);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            pairs.push((u, v));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    pairs.truncate(m);
    Ok(Graph::from_edges(n, &pairs).unwrap())
}

/// Random graph built by inserting vertices one at a time, each choosing at
/// most `d` earlier neighbors; the result is always d-degenerate.
pub fn random_degenerate(n: usize, d: usize, seed: u64) -> Result<Graph, GadgetError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n as u32 {
        let cap = (v as usize).min(d);
        let t = rng.random_range(0..=cap);
        let mut earlier: Vec<u32> = (0..v).collect();
        earlier.shuffle(&mut rng);
        for &u in earlier.iter().take(t) {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges).unwrap())
}

// ---------------------------------------------------------------------------
// Gadgets
// ---------------------------------------------------------------------------

/// Reduces vertex clique cover on `g` to annotated edge clique cover.
///
/// Two clique copies of V(g) are joined by the edges of g (crossed both
/// ways), and the annotated set is the perfect matching between the copies.
/// Covering the matching with at most k cliques is possible iff g has a
/// vertex clique cover of size at most k.
pub fn gadget_vcc_to_aecc(g: &Graph, k: usize) -> Generated<AnnotatedInstance> {
    let n = g.n() as u32;
    let mut edges = Vec::new();
    for side in [0, n] {
        for u in 0..n {
            for v in u + 1..n {
                edges.push((side + u, side + v));
            }
        }
    }
    let mut b = Vec::new();
    for i in 0..n {
        edges.push((i, n + i));
        b.push((i, n + i));
    }
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    let g2 = Graph::from_edges(2 * n as usize, &edges).unwrap();
    let instance = AnnotatedInstance::new(g2, EdgeSet::from_unsorted(b), k).unwrap();
    Generated {
        instance,
        provenance: Provenance {
            gadget: "vcc-to-aecc",
            source: format!("graph n={} m={} k={k}", g.n(), g.m()),
            equivalence: format!("yes iff source has a vertex clique cover of size <= {k}"),
        },
    }
}

/// Lifts a co-bipartite annotated instance whose annotated set is a perfect
/// matching to an instance of edge clique cover above the independence
/// number, with parameter k-1.
///
/// A universal vertex, one pendant per original vertex, and one degree-two
/// vertex per non-annotated edge are added; the independence number of the
/// result is |R| + n + 1 where R is the set of non-annotated edges.
pub fn gadget_aecc_to_eccalpha(
    inst: &AnnotatedInstance,
) -> Result<Generated<(Graph, usize)>, GadgetError> {
    let g = &inst.g;
    let n = g.n();
    if n < 2 {
        return Err(GadgetError::Infeasible("need at least two vertices".into()));
    }
    if inst.k < 1 {
        return Err(GadgetError::Infeasible("need k >= 1".into()));
    }
    // co-bipartite <=> complement is bipartite
    let mut comp_edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if !g.has_edge(u, v) {
                comp_edges.push((u, v));
            }
        }
    }
    let complement = Graph::from_edges(n, &comp_edges).unwrap();
    if complement.bipartition().is_none() {
        return Err(GadgetError::NotCoBipartite);
    }
    let mut matched = vec![0usize; n];
    for (u, v) in inst.b.iter() {
        matched[u as usize] += 1;
        matched[v as usize] += 1;
    }
    if matched.iter().any(|&c| c != 1) {
        return Err(GadgetError::NotPerfectMatching);
    }

    let r: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !inst.b.contains(u, v))
        .collect();
    let mut edges = g.edges();
    let universal = n as u32;
    for x in 0..n as u32 {
        edges.push((x, universal));
    }
    // pendants u_x
    for x in 0..n as u32 {
        edges.push((x, universal + 1 + x));
    }
    // degree-two guards w_e for each non-annotated edge
    let mut next = universal + 1 + n as u32;
    for &(x, y) in &r {
        edges.push((x, next));
        edges.push((y, next));
        next += 1;
    }
    let edges: Vec<(u32, u32)> = edges
        .into_iter()
        .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    let g2 = Graph::from_edges(next as usize, &edges).unwrap();
    let alpha = r.len() + n + 1;
    Ok(Generated {
        instance: (g2, inst.k - 1),
        provenance: Provenance {
            gadget: "aecc-to-eccalpha",
            source: format!("annotated n={n} |b|={} k={}", inst.b.len(), inst.k),
            equivalence: format!(
                "alpha of output is exactly {alpha}; yes at k'={} iff source is yes",
                inst.k - 1
            ),
        },
    })
}

/// Reduces biclique cover of a bipartite graph to edge clique cover above
/// the independence number: both sides become cliques and each side gains a
/// private neighbor, pinning the independence number at 2.
pub fn gadget_biclique_to_eccalpha(
    g: &Graph,
    k: usize,
) -> Result<Generated<(Graph, usize)>, GadgetError> {
    let (side0, side1) = g.bipartition().ok_or(GadgetError::NotBipartite)?;
    if side0.is_empty() || side1.is_empty() {
        return Err(GadgetError::Infeasible(
            "both bipartition sides must be non-empty".into(),
        ));
    }
    let n = g.n() as u32;
    let mut edges = g.edges();
    for side in [&side0, &side1] {
        let vs = side.as_slice();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                edges.push((vs[i], vs[j]));
            }
        }
    }
    for v in side0.iter() {
        edges.push((v, n));
    }
    for v in side1.iter() {
        edges.push((v, n + 1));
    }
    let edges: Vec<(u32, u32)> = edges
        .into_iter()
        .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    let g2 = Graph::from_edges(n as usize + 2, &edges).unwrap();
    Ok(Generated {
        instance: (g2, k),
        provenance: Provenance {
            gadget: "biclique-to-eccalpha",
            source: format!("bipartite n={} m={} k={k}", g.n(), g.m()),
            equivalence: format!(
                "alpha of output is exactly 2; yes at k={k} iff source edges have a biclique cover of size <= {k}"
            ),
        },
    })
}

/// Adds one pendant neighbor to every vertex; pendant i of vertex v gets id
/// n + v. The independence number of the result equals n.
pub fn pendant_expand(g: &Graph) -> Graph {
    let n = g.n() as u32;
    let mut edges = g.edges();
    for v in 0..n {
        edges.push((v, n + v));
    }
    Graph::from_edges(2 * n as usize, &edges).unwrap()
}

/// Minimum number of bicliques covering all edges of a bipartite graph.
/// Exhaustive micro-oracle, guarded at m <= 12.
pub fn biclique_cover_bruteforce(g: &Graph) -> Result<usize, GadgetError> {
    if g.m() > 12 {
        return Err(GadgetError::SizeGuard(format!("m = {} > 12", g.m())));
    }
    let (_side0, side1) = g.bipartition().ok_or(GadgetError::NotBipartite)?;
    let edges = g.edges();
    if edges.is_empty() {
        return Ok(0);
    }
    let full: u32 = (1u32 << edges.len()) - 1;
    let mut best = edges.len();
    biclique_search(g, &edges, &side1, 0, 0, full, &mut best);
    Ok(best)
}

fn biclique_search(
    g: &Graph,
    edges: &[(u32, u32)],
    side1: &VertexSet,
    covered: u32,
    used: usize,
    full: u32,
    best: &mut usize,
) {
    if used >= *best {
        return;
    }
    if covered == full {
        *best = used;
        return;
    }
    let next = (0..edges.len()).find(|&i| covered >> i & 1 == 0).unwrap();
    let (x, y) = edges[next];
    let (a, b) = if side1.contains(y) { (x, y) } else { (y, x) };
    // Candidate bicliques containing edge (a, b): any right side S ⊆ N(a)
    // with b ∈ S, paired with all common neighbors of S. Taking the maximal
    // left side is safe for covering.
    let others: Vec<u32> = g.neighbors(a).iter().copied().filter(|&w| w != b).collect();
    for mask in 0..(1u32 << others.len()) {
        let mut right = vec![b];
        for (i, &w) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                right.push(w);
            }
        }
        let left: Vec<u32> = right
            .iter()
            .map(|&v| g.neighbors(v).to_vec())
            .reduce(|acc, nb| acc.into_iter().filter(|x| nb.contains(x)).collect())
            .unwrap_or_default();
        if !left.contains(&a) {
            continue;
        }
        let mut new_cov = covered;
        for &l in &left {
            for &r in &right {
                let e = (l.min(r), l.max(r));
                new_cov |= 1u32 << edges.iter().position(|&x| x == e).unwrap();
            }
        }
        biclique_search(g, edges, side1, new_cov, used + 1, full, best);
    }
}
