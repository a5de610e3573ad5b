//! Independence-number engines.
//!
//! The workhorse is a subset dynamic program over a given edge clique cover:
//! two vertices are nonadjacent exactly when their clique-incidence vectors
//! are orthogonal, so independent sets correspond to unions of pairwise
//! disjoint incidence masks. The other engines are a constructive
//! Ramsey-style clique-or-independent-set search, a (1,2)-branching for
//! 2-degenerate graphs, a tree-decomposition DP, and a brute-force fallback
//! that anchors every oracle test.

use crate::decomposition::{self, DecompositionError, TreeDecomposition};
use crate::graph::{check_cover, CliqueFamily, CoverViolation, Graph, VertexSet};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphaError {
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("invalid clique cover: {0}")]
    InvalidCover(#[from] CoverViolation),
    #[error("cover has {0} cliques, beyond the subset-DP range")]
    CoverTooLarge(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// 0-1 incidence vector of a vertex against a clique family: bit i records
/// membership in clique i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharVector {
    pub bits: Vec<bool>,
}

impl CharVector {
    pub fn dot_is_zero(&self, other: &CharVector) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| !(*a && *b))
    }
}

/// Incidence vector of `v` against `family`.
pub fn char_vector(family: &CliqueFamily, v: u32) -> CharVector {
    CharVector {
        bits: family.iter().map(|c| c.contains(v)).collect(),
    }
}

/// Either a clique of the requested size or an independent set of the
/// requested size, as found by the Ramsey-style search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueOrIS {
    Clique(VertexSet),
    Independent(VertexSet),
}

/// Exact independence number of a graph given a valid edge clique cover,
/// with a witnessing independent set.
///
/// Runs the Boolean subset DP over clique-incidence masks; reachable masks
/// are kept per layer and a back-pointer per state reconstructs a
/// deterministic witness. Isolated vertices are stripped up-front and added
/// to the witness afterwards.
pub fn alpha_from_cover(g: &Graph, cover: &CliqueFamily) -> Result<(usize, VertexSet), AlphaError> {
    check_cover(g, cover)?;
    let k = cover.len();
    if k > 60 {
        return Err(AlphaError::CoverTooLarge(k));
    }
    let isolated = g.isolated_vertices();
    let active: Vec<u32> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let masks: Vec<u64> = active
        .iter()
        .map(|&v| {
            let mut m = 0u64;
            for (i, c) in cover.iter().enumerate() {
                if c.contains(v) {
                    m |= 1 << i;
                }
            }
            m
        })
        .collect();

    // layers[i]: reachable masks for independent sets of size i, each with
    // the (vertex, previous mask) that first produced it
    let mut layers: Vec<BTreeMap<u64, (u32, u64)>> = vec![BTreeMap::new()];
    layers[0].insert(0, (u32::MAX, 0));
    loop {
        let last = layers.last().unwrap();
        let mut next: BTreeMap<u64, (u32, u64)> = BTreeMap::new();
        for &mask in last.keys() {
            for (idx, &v) in active.iter().enumerate() {
                let xv = masks[idx];
                if xv & mask == 0 {
                    next.entry(mask | xv).or_insert((v, mask));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }

    let core = layers.len() - 1;
    let mut witness = Vec::new();
    if core > 0 {
        let (&mask, _) = layers[core].iter().next().unwrap();
        let mut cur = mask;
        for i in (1..=core).rev() {
            let &(v, prev) = layers[i].get(&cur).expect("back-pointer exists");
            witness.push(v);
            cur = prev;
        }
    }
    witness.extend(isolated.iter());
    Ok((core + isolated.len(), VertexSet::from_unsorted(witness)))
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Finds a clique of size `p` or an independent set of size `q`, given that
/// the graph has at least `binom(p+q-2, p-1)` vertices.
///
/// Recursion on the lowest-id vertex: descend into its neighborhood with
/// (p-1, q) when the neighborhood is large enough, otherwise into the
/// non-neighborhood with (p, q-1). When both sides qualify the neighborhood
/// side is taken.
pub fn ramsey_clique_or_is(g: &Graph, p: usize, q: usize) -> Result<CliqueOrIS, AlphaError> {
    if p < 1 || q < 1 {
        return Err(AlphaError::Precondition("need p, q >= 1".into()));
    }
    if (g.n() as u128) < binom(p + q - 2, p - 1) {
        return Err(AlphaError::Precondition(format!(
            "need n >= binom({}, {}) = {}",
            p + q - 2,
            p - 1,
            binom(p + q - 2, p - 1)
        )));
    }
    let active: Vec<u32> = g.vertices().collect();
    Ok(ramsey_rec(g, &active, p, q))
}

fn ramsey_rec(g: &Graph, active: &[u32], p: usize, q: usize) -> CliqueOrIS {
    debug_assert!(active.len() as u128 >= binom(p + q - 2, p - 1));
    if p == 1 {
        return CliqueOrIS::Clique(VertexSet::singleton(active[0]));
    }
    if q == 1 {
        return CliqueOrIS::Independent(VertexSet::singleton(active[0]));
    }
    let v = active[0];
    let nbrs: Vec<u32> = active[1..]
        .iter()
        .copied()
        .filter(|&w| g.has_edge(v, w))
        .collect();
    let rest: Vec<u32> = active[1..]
        .iter()
        .copied()
        .filter(|&w| !g.has_edge(v, w))
        .collect();
    if nbrs.len() as u128 >= binom(p + q - 3, p - 2) {
        match ramsey_rec(g, &nbrs, p - 1, q) {
            CliqueOrIS::Clique(mut c) => {
                c.insert(v);
                CliqueOrIS::Clique(c)
            }
            ind => ind,
        }
    } else {
        debug_assert!(rest.len() as u128 >= binom(p + q - 3, p - 1));
        match ramsey_rec(g, &rest, p, q - 1) {
            CliqueOrIS::Independent(mut i) => {
                i.insert(v);
                CliqueOrIS::Independent(i)
            }
            clique => clique,
        }
    }
}

/// Decides whether a 2-degenerate graph has an independent set of size `k`,
/// returning a witness when it does.
///
/// A vertex of degree at most 1 is always taken greedily; a degree-2 vertex
/// with adjacent neighbors is taken greedily as well; otherwise the search
/// branches between taking the vertex and taking both of its neighbors.
pub fn alpha_2degenerate(g: &Graph, k: usize) -> Result<Option<VertexSet>, AlphaError> {
    let (d, _) = crate::graph::degeneracy(g);
    if d > 2 {
        return Err(AlphaError::Precondition(format!(
            "graph has degeneracy {d} > 2"
        )));
    }
    Ok(two_degenerate_rec(g.clone(), k))
}

fn two_degenerate_rec(g: Graph, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::new());
    }
    if g.n() == 0 {
        return None;
    }
    let v = g
        .vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .expect("non-empty");
    let take = |sel: &[u32], drop: &VertexSet, k: usize| -> Option<VertexSet> {
        let keep: VertexSet = g.vertices().filter(|&w| !drop.contains(w)).collect();
        let sub = g.induced(&keep);
        let ids = keep;
        two_degenerate_rec(sub, k).map(|w| {
            let mut out: Vec<u32> = w.iter().map(|i| ids.as_slice()[i as usize]).collect();
            out.extend_from_slice(sel);
            VertexSet::from_unsorted(out)
        })
    };
    match g.degree(v) {
        0 | 1 => take(&[v], &g.closed_neighborhood(v), k - 1),
        2 => {
            let (x, y) = (g.neighbors(v)[0], g.neighbors(v)[1]);
            if g.has_edge(x, y) {
                take(&[v], &g.closed_neighborhood(v), k - 1)
            } else {
                take(&[v], &g.closed_neighborhood(v), k - 1).or_else(|| {
                    if k < 2 {
                        return None;
                    }
                    let drop = g.closed_neighborhood(x).union(&g.closed_neighborhood(y));
                    take(&[x, y], &drop, k - 2)
                })
            }
        }
        _ => unreachable!("2-degenerate graph has a vertex of degree <= 2"),
    }
}

/// Decides alpha(g) >= k by the standard independent-set DP over a (nice
/// form of the) given tree decomposition.
pub fn alpha_treewidth_dp(
    g: &Graph,
    decomp: &TreeDecomposition,
    k: usize,
) -> Result<bool, DecompositionError> {
    decomposition::validate(g, decomp)?;
    let nice = decomposition::to_nice(decomp);
    let mut tables: Vec<BTreeMap<VertexSet, usize>> = Vec::with_capacity(nice.nodes.len());
    for (i, node) in nice.nodes.iter().enumerate() {
        use decomposition::NiceNode::*;
        let table = match node {
            Leaf => {
                let mut t = BTreeMap::new();
                t.insert(VertexSet::new(), 0);
                t
            }
            Introduce { v, child } => {
                let mut t: BTreeMap<VertexSet, usize> = BTreeMap::new();
                for (set, &best) in &tables[*child] {
                    t.entry(set.clone())
                        .and_modify(|b| *b = (*b).max(best))
                        .or_insert(best);
                    if set.iter().all(|w| !g.has_edge(*v, w)) {
                        let mut with = set.clone();
                        with.insert(*v);
                        t.entry(with)
                            .and_modify(|b| *b = (*b).max(best + 1))
                            .or_insert(best + 1);
                    }
                }
                t
            }
            Forget { v, child } => {
                let mut t: BTreeMap<VertexSet, usize> = BTreeMap::new();
                for (set, &best) in &tables[*child] {
                    let reduced = set.difference(&VertexSet::singleton(*v));
                    t.entry(reduced)
                        .and_modify(|b| *b = (*b).max(best))
                        .or_insert(best);
                }
                t
            }
            Join { left, right } => {
                let mut t: BTreeMap<VertexSet, usize> = BTreeMap::new();
                for (set, &bl) in &tables[*left] {
                    if let Some(&br) = tables[*right].get(set) {
                        t.insert(set.clone(), bl + br - set.len());
                    }
                }
                t
            }
        };
        debug_assert_eq!(i, tables.len());
        tables.push(table);
    }
    let best = tables[nice.root]
        .get(&VertexSet::new())
        .copied()
        .unwrap_or(0);
    Ok(best >= k)
}

/// Exact independence number by subset enumeration, guarded at n <= 26.
/// This is the oracle the other engines are tested against.
pub fn alpha_bruteforce(g: &Graph) -> Result<(usize, VertexSet), AlphaError> {
    let n = g.n();
    if n > 26 {
        return Err(AlphaError::SizeGuard(format!("n = {n} > 26")));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for &w in g.neighbors(v as u32) {
                m |= 1 << w;
            }
            m
        })
        .collect();
    let mut best = 0usize;
    let mut best_set = 0u32;
    enumerate_is(&adj, n, 0, 0, 0, &mut best, &mut best_set);
    let witness = (0..n as u32).filter(|&v| best_set >> v & 1 == 1).collect();
    Ok((best, witness))
}

fn enumerate_is(
    adj: &[u32],
    n: usize,
    pos: usize,
    chosen: u32,
    count: usize,
    best: &mut usize,
    best_set: &mut u32,
) {
    if count > *best {
        *best = count;
        *best_set = chosen;
    }
    if pos == n || count + (n - pos) <= *best {
        return;
    }
    if adj[pos] & chosen == 0 {
        enumerate_is(adj, n, pos + 1, chosen | 1 << pos, count + 1, best, best_set);
    }
    enumerate_is(adj, n, pos + 1, chosen, count, best, best_set);
}

/// Extracts an independent set of size `k` from any sound decision procedure
/// for "alpha >= k" by self-reduction on induced subgraphs.
///
/// `decide` receives an induced subgraph and a target size. Vertices are
/// probed in ascending id order, so the result is deterministic.
pub fn witness_from_decision<F>(g: &Graph, k: usize, mut decide: F) -> Option<VertexSet>
where
    F: FnMut(&Graph, usize) -> bool,
{
    if !decide(g, k) {
        return None;
    }
    let mut chosen: Vec<u32> = Vec::new();
    let mut current = g.clone();
    let mut ids: Vec<u32> = g.vertices().collect();
    let mut remaining = k;
    while remaining > 0 {
        let mut progressed = false;
        for v in current.vertices() {
            let keep: VertexSet = {
                let closed = current.closed_neighborhood(v);
                current.vertices().filter(|&w| !closed.contains(w)).collect()
            };
            let sub = current.induced(&keep);
            if remaining == 1 || decide(&sub, remaining - 1) {
                chosen.push(ids[v as usize]);
                ids = keep.iter().map(|w| ids[w as usize]).collect();
                current = sub;
                remaining -= 1;
                progressed = true;
                break;
            }
        }
        if !progressed {
            return None; // decision procedure is not self-consistent
        }
    }
    Some(VertexSet::from_unsorted(chosen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::min_fill_decomposition;
    use crate::generators::{
        all_graphs, complete_graph, cycle_graph, path_graph, random_graph, star_graph,
    };
    use crate::graph::maximal_cliques;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn alpha_from_cover_examples() {
        let k3 = complete_graph(3);
        let cover = CliqueFamily::from_vec(vec![(0..3).collect()]);
        let (a, w) = alpha_from_cover(&k3, &cover).unwrap();
        assert_eq!((a, w), (1, VertexSet::singleton(0)));

        let c5 = cycle_graph(5);
        let cover: CliqueFamily = c5
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::from_sorted(vec![u, v]))
            .collect();
        let (a, w) = alpha_from_cover(&c5, &cover).unwrap();
        assert_eq!(a, 2);
        assert!(w.len() == 2 && !c5.has_edge(w.as_slice()[0], w.as_slice()[1]));

        let star = star_graph(3);
        let cover: CliqueFamily = star
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::from_sorted(vec![u, v]))
            .collect();
        let (a, w) = alpha_from_cover(&star, &cover).unwrap();
        assert_eq!(a, 3);
        assert_eq!(w, VertexSet::from_sorted(vec![1, 2, 3]));
    }

    #[test]
    fn alpha_from_cover_rejects_invalid_cover() {
        let c5 = cycle_graph(5);
        let bad = CliqueFamily::from_vec(vec![VertexSet::from_sorted(vec![0, 1])]);
        assert!(matches!(
            alpha_from_cover(&c5, &bad),
            Err(AlphaError::InvalidCover(CoverViolation::EdgeUncovered { .. }))
        ));
        let non_clique = CliqueFamily::from_vec(vec![(0..5).collect()]);
        assert!(matches!(
            alpha_from_cover(&c5, &non_clique),
            Err(AlphaError::InvalidCover(CoverViolation::NotAClique { .. }))
        ));
    }

    #[test]
    fn alpha_from_cover_handles_isolated_vertices() {
        // one edge plus three isolated vertices
        let g = Graph::from_edges(5, &[(0, 1)]).unwrap();
        let cover = CliqueFamily::from_vec(vec![VertexSet::from_sorted(vec![0, 1])]);
        let (a, w) = alpha_from_cover(&g, &cover).unwrap();
        assert_eq!(a, 4);
        assert_eq!(w, VertexSet::from_sorted(vec![0, 2, 3, 4]));
    }

    #[test]
    fn alpha_from_cover_agrees_with_bruteforce_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut done = 0;
        while done < 500 {
            let n = rng.random_range(2..=12usize);
            let m = rng.random_range(0..=n * (n - 1) / 2);
            let g = random_graph(n, m, rng.random()).unwrap();
            let cover = maximal_cliques(&g);
            if cover.len() > 14 {
                continue;
            }
            let (a, w) = alpha_from_cover(&g, &cover).unwrap();
            let (expect, _) = alpha_bruteforce(&g).unwrap();
            assert_eq!(a, expect, "graph {:?}", g);
            // witness really is independent and of the right size
            assert_eq!(w.len(), a);
            let ws = w.as_slice();
            for i in 0..ws.len() {
                for j in i + 1..ws.len() {
                    assert!(!g.has_edge(ws[i], ws[j]));
                }
            }
            done += 1;
        }
    }

    #[test]
    fn orthogonality_characterizes_adjacency() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.random_range(2..=9usize);
            let m = rng.random_range(0..=n * (n - 1) / 2);
            let g = random_graph(n, m, rng.random()).unwrap();
            let cover = maximal_cliques(&g);
            for u in g.vertices() {
                if g.degree(u) == 0 {
                    continue;
                }
                for v in g.vertices() {
                    if v <= u || g.degree(v) == 0 {
                        continue;
                    }
                    let xu = char_vector(&cover, u);
                    let xv = char_vector(&cover, v);
                    assert_eq!(
                        xu.dot_is_zero(&xv),
                        !g.has_edge(u, v),
                        "graph {:?} pair {u},{v}",
                        g
                    );
                }
            }
        }
    }

    #[test]
    fn ramsey_examples() {
        let k6 = complete_graph(6);
        match ramsey_clique_or_is(&k6, 3, 3).unwrap() {
            CliqueOrIS::Clique(c) => assert_eq!(c.len(), 3),
            _ => panic!("expected clique"),
        }
        let e6 = Graph::empty(6);
        match ramsey_clique_or_is(&e6, 3, 3).unwrap() {
            CliqueOrIS::Independent(i) => assert_eq!(i.len(), 3),
            _ => panic!("expected independent set"),
        }
        // C5 plus an isolated vertex is triangle-free with alpha = 3
        let mut edges = cycle_graph(5).edges();
        edges.sort_unstable();
        let g = Graph::from_edges(6, &edges).unwrap();
        match ramsey_clique_or_is(&g, 3, 3).unwrap() {
            CliqueOrIS::Independent(i) => assert_eq!(i.len(), 3),
            _ => panic!("triangle-free graph cannot yield a triangle"),
        }
        assert!(ramsey_clique_or_is(&Graph::empty(2), 3, 3).is_err());
    }

    #[test]
    fn ramsey_outputs_verify_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut done = 0;
        while done < 1000 {
            let p = rng.random_range(1..=4usize);
            let q = rng.random_range(1..=4usize);
            let need = binom(p + q - 2, p - 1) as usize;
            let n = need + rng.random_range(0..4usize);
            let m = rng.random_range(0..=n * (n - 1) / 2);
            let g = random_graph(n, m, rng.random()).unwrap();
            match ramsey_clique_or_is(&g, p, q).unwrap() {
                CliqueOrIS::Clique(c) => {
                    assert!(c.len() >= p);
                    assert!(g.is_clique(&c).unwrap());
                }
                CliqueOrIS::Independent(i) => {
                    assert!(i.len() >= q);
                    let vs = i.as_slice();
                    for a in 0..vs.len() {
                        for b in a + 1..vs.len() {
                            assert!(!g.has_edge(vs[a], vs[b]));
                        }
                    }
                }
            }
            done += 1;
        }
    }

    #[test]
    fn binomial_product_bound() {
        // binom(a+b, b) <= 2^(ab/2) for 3 <= a <= b <= 12; compared via
        // squaring to keep everything integral
        for a in 3..=12usize {
            for b in a..=12usize {
                let c = binom(a + b, b);
                let lhs = c.saturating_mul(c);
                if a * b >= 44 {
                    assert!(c < (1u128 << 22));
                } else {
                    assert!(lhs <= 1u128 << (a * b), "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn two_degenerate_examples() {
        let c5 = cycle_graph(5);
        assert!(alpha_2degenerate(&c5, 2).unwrap().is_some());
        assert!(alpha_2degenerate(&c5, 3).unwrap().is_none());

        let tree = path_graph(7);
        assert!(alpha_2degenerate(&tree, 4).unwrap().is_some());

        let k3 = complete_graph(3);
        assert!(alpha_2degenerate(&k3, 2).unwrap().is_none());

        assert!(alpha_2degenerate(&complete_graph(4), 1).is_err());
    }

    #[test]
    fn two_degenerate_agrees_with_bruteforce() {
        for seed in 0..150u64 {
            let g = crate::generators::random_degenerate(9, 2, seed).unwrap();
            let (alpha, _) = alpha_bruteforce(&g).unwrap();
            for k in 0..=alpha + 1 {
                let got = alpha_2degenerate(&g, k).unwrap();
                assert_eq!(got.is_some(), k <= alpha, "seed {seed} k {k}");
                if let Some(w) = got {
                    assert!(w.len() >= k);
                    let vs = w.as_slice();
                    for i in 0..vs.len() {
                        for j in i + 1..vs.len() {
                            assert!(!g.has_edge(vs[i], vs[j]));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn treewidth_dp_examples() {
        let p4 = path_graph(4);
        let td = min_fill_decomposition(&p4);
        assert!(alpha_treewidth_dp(&p4, &td, 2).unwrap());

        let c6 = cycle_graph(6);
        let td = min_fill_decomposition(&c6);
        assert!(alpha_treewidth_dp(&c6, &td, 3).unwrap());
        assert!(!alpha_treewidth_dp(&c6, &td, 4).unwrap());

        let k4 = complete_graph(4);
        let single_bag = crate::decomposition::TreeDecomposition {
            bags: vec![(0..4).collect()],
            tree_edges: vec![],
            width: 3,
            nice: false,
        };
        assert!(alpha_treewidth_dp(&k4, &single_bag, 1).unwrap());
        assert!(!alpha_treewidth_dp(&k4, &single_bag, 2).unwrap());
    }

    #[test]
    fn treewidth_dp_agrees_with_bruteforce() {
        for n in 1..=6usize {
            for (i, g) in all_graphs(n).enumerate() {
                if n == 6 && i % 7 != 0 {
                    continue; // thin out the largest size
                }
                let td = min_fill_decomposition(&g);
                let (alpha, _) = alpha_bruteforce(&g).unwrap();
                for k in 0..=n + 1 {
                    assert_eq!(
                        alpha_treewidth_dp(&g, &td, k).unwrap(),
                        k <= alpha,
                        "graph {:?} k={k}",
                        g
                    );
                }
            }
        }
    }

    #[test]
    fn bruteforce_guard() {
        assert!(alpha_bruteforce(&Graph::empty(27)).is_err());
        assert_eq!(alpha_bruteforce(&Graph::empty(0)).unwrap().0, 0);
    }

    #[test]
    fn witness_from_decision_recovers_sets() {
        let g = cycle_graph(6);
        let w = witness_from_decision(&g, 3, |h, k| {
            let (a, _) = alpha_bruteforce(h).unwrap();
            a >= k
        })
        .unwrap();
        assert_eq!(w.len(), 3);
        let vs = w.as_slice();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                assert!(!g.has_edge(vs[i], vs[j]));
            }
        }
    }
}
