//! Annotated edge clique cover: cover a designated edge subset B with at
//! most k cliques of the host graph.
//!
//! Engines:
//! - a polynomial conflict-graph coloring for k <= 2,
//! - a bounded-clique-number pipeline (triangle-free shortcut, Ramsey stage,
//!   exact clique number, then exact set cover),
//! - a branching algorithm effective on low-degeneracy graphs,
//! - a dynamic program over a tree decomposition,
//! - a pipeline for minor-closed classes (degeneracy pruning + the DP),
//! - a brute-force oracle, and an auto dispatcher.

use crate::alpha::{ramsey_clique_or_is, CliqueOrIS};
use crate::decomposition::{self, DecompositionError, NiceNode, TreeDecomposition};
use crate::graph::{maximal_cliques, CliqueFamily, EdgeSet, Graph, GraphError, VertexSet};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AeccError {
    #[error("annotated edge {0}-{1} is not an edge of the graph")]
    EdgeNotInGraph(u32, u32),
    #[error("k = {0} is too large for the coloring solver (k <= 2)")]
    KTooLarge(usize),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error("line {line}: malformed annotated instance: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("unknown engine {0:?}")]
    UnknownEngine(String),
}

/// An instance (G, B, k): cover every edge of B with at most k cliques of G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedInstance {
    pub g: Graph,
    pub b: EdgeSet,
    pub k: usize,
}

impl AnnotatedInstance {
    pub fn new(g: Graph, b: EdgeSet, k: usize) -> Result<Self, AeccError> {
        for (u, v) in b.iter() {
            if v as usize >= g.n() || !g.has_edge(u, v) {
                return Err(AeccError::EdgeNotInGraph(u, v));
            }
        }
        Ok(AnnotatedInstance { g, b, k })
    }

    pub fn with_k(&self, k: usize) -> AnnotatedInstance {
        AnnotatedInstance {
            g: self.g.clone(),
            b: self.b.clone(),
            k,
        }
    }
}

/// Conflict graph H on the annotated edges: two edges are adjacent exactly
/// when no single clique of the host graph can contain both.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    pub h: Graph,
    /// Vertex i of `h` stands for the annotated edge `index_map[i]`.
    pub index_map: Vec<(u32, u32)>,
}

/// Builds the conflict graph: edges sharing an endpoint conflict when the
/// remaining endpoints are nonadjacent; disjoint edges conflict when any of
/// the four cross pairs is a non-edge.
pub fn conflict_graph(inst: &AnnotatedInstance) -> ConflictGraph {
    let g = &inst.g;
    let edges: Vec<(u32, u32)> = inst.b.iter().collect();
    let mut h_edges = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (u, v) = edges[i];
            let (x, y) = edges[j];
            let shared: Vec<u32> = [u, v].iter().copied().filter(|&a| a == x || a == y).collect();
            let conflict = match shared.len() {
                1 => {
                    let a = if u == shared[0] { v } else { u };
                    let b = if x == shared[0] { y } else { x };
                    !g.has_edge(a, b)
                }
                0 => {
                    !(g.has_edge(u, x) && g.has_edge(u, y) && g.has_edge(v, x) && g.has_edge(v, y))
                }
                _ => unreachable!("distinct edges share at most one endpoint"),
            };
            if conflict {
                h_edges.push((i as u32, j as u32));
            }
        }
    }
    ConflictGraph {
        h: Graph::from_edges(edges.len(), &h_edges).unwrap(),
        index_map: edges,
    }
}

fn endpoints_union(edges: &[(u32, u32)]) -> VertexSet {
    VertexSet::from_unsorted(edges.iter().flat_map(|&(u, v)| [u, v]).collect())
}

/// Polynomial solver for k <= 2 via coloring of the conflict graph:
/// k = 0 needs B empty, k = 1 needs H edgeless, k = 2 needs H bipartite.
/// Color classes turn back into cliques by taking endpoint unions.
pub fn solve_k_le_2(inst: &AnnotatedInstance) -> Result<Option<CliqueFamily>, AeccError> {
    if inst.k > 2 {
        return Err(AeccError::KTooLarge(inst.k));
    }
    if inst.b.is_empty() {
        return Ok(Some(CliqueFamily::new()));
    }
    if inst.k == 0 {
        return Ok(None);
    }
    let cg = conflict_graph(inst);
    let family = if inst.k == 1 {
        if cg.h.m() > 0 {
            return Ok(None);
        }
        CliqueFamily::from_vec(vec![endpoints_union(&cg.index_map)])
    } else {
        let Some((side0, side1)) = cg.h.bipartition() else {
            return Ok(None);
        };
        let mut family = CliqueFamily::new();
        for side in [side0, side1] {
            let members: Vec<(u32, u32)> =
                side.iter().map(|i| cg.index_map[i as usize]).collect();
            if !members.is_empty() {
                family.push(endpoints_union(&members));
            }
        }
        family
    };
    debug_assert!(family_covers(&inst.g, &inst.b, &family));
    Ok(Some(family))
}

fn family_covers(g: &Graph, b: &EdgeSet, family: &CliqueFamily) -> bool {
    family.iter().all(|c| g.is_clique(c).unwrap_or(false))
        && b.iter()
            .all(|(u, v)| family.iter().any(|c| c.contains(u) && c.contains(v)))
}

/// Does the graph contain a clique of `size` vertices?
fn has_clique_of_size(g: &Graph, size: usize) -> bool {
    fn extend(g: &Graph, candidates: &[u32], need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if candidates.len() < need {
            return false;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<u32> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            if extend(g, &next, need - 1) {
                return true;
            }
        }
        false
    }
    let all: Vec<u32> = g.vertices().collect();
    extend(g, &all, size)
}

fn binom_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc.min(usize::MAX as u128) as usize
}

/// Solver pipelined for graphs of bounded clique number.
///
/// After delegating small k and the triangle-free case, vertices without
/// annotated edges are removed, a Ramsey search either certifies a
/// no-instance via a large independent set or produces a clique, the clique
/// number is computed exactly by growing subgraph checks, a counting bound
/// prunes oversized B, and the remainder is an exact set cover over the
/// annotated edges solved by the subset DP.
pub fn solve_bounded_omega(inst: &AnnotatedInstance) -> Option<CliqueFamily> {
    if inst.b.is_empty() {
        return Some(CliqueFamily::new());
    }
    if inst.k <= 2 {
        return solve_k_le_2(inst).expect("k <= 2");
    }
    let g = &inst.g;
    let k = inst.k;
    if g.is_triangle_free() {
        if inst.b.len() <= k {
            let family: CliqueFamily = inst
                .b
                .iter()
                .map(|(u, v)| VertexSet::from_sorted(vec![u, v]))
                .collect();
            return Some(family);
        }
        return None;
    }
    // prune vertices without annotated edges; cliques never need them
    let active = endpoints_union(&inst.b.iter().collect::<Vec<_>>());
    let gp = g.induced(&active);
    let ids: Vec<u32> = active.iter().collect();
    let mut old_to_new = HashMap::new();
    for (i, &v) in ids.iter().enumerate() {
        old_to_new.insert(v, i as u32);
    }
    let bp: EdgeSet = inst
        .b
        .iter()
        .map(|(u, v)| (old_to_new[&u], old_to_new[&v]))
        .collect();

    // Ramsey stage: an independent set of k+1 vertices, each demanding its
    // own clique, certifies a no-instance; otherwise we learn omega >= r.
    let n = gp.n();
    let mut r = 1usize;
    while binom_usize(k + r, k) <= n {
        r += 1;
    }
    let omega_lb = match ramsey_clique_or_is(&gp, r, k + 1).expect("precondition holds by choice of r") {
        CliqueOrIS::Independent(_) => return None,
        CliqueOrIS::Clique(_) => r,
    };

    let mut p = 4.max(omega_lb + 1);
    while has_clique_of_size(&gp, p) {
        p += 1;
    }
    let omega = p - 1;

    if bp.len() > binom_usize(omega, 2) * k {
        return None;
    }

    let family = set_cover_over_cliques(&gp, &bp, k)?;
    let mapped: CliqueFamily = family
        .iter()
        .map(|c| c.iter().map(|v| ids[v as usize]).collect())
        .collect();
    debug_assert!(family_covers(g, &inst.b, &mapped));
    Some(mapped)
}

/// Exact minimum set cover of the annotated edges by maximal cliques,
/// reported only when the minimum is at most `k`. Memoized subset DP keyed
/// by the set of still-uncovered annotated edges.
fn set_cover_over_cliques(g: &Graph, b: &EdgeSet, k: usize) -> Option<CliqueFamily> {
    let edges: Vec<(u32, u32)> = b.iter().collect();
    assert!(
        edges.len() <= 28,
        "annotated set of {} edges is beyond the subset-DP desk scale",
        edges.len()
    );
    let cliques = maximal_cliques(g);
    let covers: Vec<u32> = cliques
        .iter()
        .map(|c| {
            let mut mask = 0u32;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if c.contains(u) && c.contains(v) {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    let full: u32 = (1u32 << edges.len()) - 1;
    let mut memo: HashMap<u32, (usize, usize)> = HashMap::new(); // mask -> (cost, clique)

    fn solve(
        mask: u32,
        covers: &[u32],
        memo: &mut HashMap<u32, (usize, usize)>,
    ) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&(c, _)) = memo.get(&mask) {
            return c;
        }
        let e = mask.trailing_zeros();
        let mut best = usize::MAX;
        let mut best_choice = usize::MAX;
        for (i, &cov) in covers.iter().enumerate() {
            if cov >> e & 1 == 0 {
                continue;
            }
            let sub = solve(mask & !cov, covers, memo);
            if sub != usize::MAX && sub + 1 < best {
                best = sub + 1;
                best_choice = i;
            }
        }
        memo.insert(mask, (best, best_choice));
        best
    }

    let best = solve(full, &covers, &mut memo);
    if best > k {
        return None;
    }
    let mut family = CliqueFamily::new();
    let mut mask = full;
    while mask != 0 {
        let &(_, choice) = memo.get(&mask).expect("computed");
        family.push(cliques.get(choice).clone());
        mask &= !covers[choice];
    }
    Some(family)
}

/// Recursive branching solver: remove vertices without annotated edges, then
/// fix a minimum-degree vertex v and an annotated neighbor u; some optimal
/// solution covers uv by C ∪ {u, v} for a maximal clique C of the common
/// neighborhood, so branch over those cliques with budget k - 1.
pub fn solve_degenerate(inst: &AnnotatedInstance) -> Option<CliqueFamily> {
    fn rec(g: &Graph, b: &EdgeSet, k: usize) -> Option<Vec<VertexSet>> {
        if b.is_empty() {
            return Some(Vec::new());
        }
        if k == 0 {
            return None;
        }
        let active = endpoints_union(&b.iter().collect::<Vec<_>>());
        let ids: Vec<u32> = active.iter().collect();
        let ga = g.induced(&active);
        let v = ga
            .vertices()
            .min_by_key(|&v| (ga.degree(v), v))
            .expect("b non-empty");
        let u = ga
            .neighbors(v)
            .iter()
            .copied()
            .find(|&u| b.contains(ids[u as usize], ids[v as usize]))
            .expect("v has an annotated edge");
        let common: VertexSet = ga.common_neighbors(u, v).into_iter().collect();
        let sub = ga.induced(&common);
        let sub_ids: Vec<u32> = common.iter().collect();
        let mut branches: Vec<VertexSet> = Vec::new();
        if common.is_empty() {
            branches.push(VertexSet::from_unsorted(vec![
                ids[u as usize],
                ids[v as usize],
            ]));
        } else {
            for c in maximal_cliques(&sub).iter() {
                let mut k_orig: Vec<u32> = c
                    .iter()
                    .map(|w| ids[sub_ids[w as usize] as usize])
                    .collect();
                k_orig.push(ids[u as usize]);
                k_orig.push(ids[v as usize]);
                branches.push(VertexSet::from_unsorted(k_orig));
            }
        }
        for clique in branches {
            let rest: EdgeSet = b
                .iter()
                .filter(|&(x, y)| !(clique.contains(x) && clique.contains(y)))
                .collect();
            if let Some(mut tail) = rec(g, &rest, k - 1) {
                tail.insert(0, clique);
                return Some(tail);
            }
        }
        None
    }
    let out = rec(&inst.g, &inst.b, inst.k).map(CliqueFamily::from_vec);
    if let Some(f) = &out {
        debug_assert!(family_covers(&inst.g, &inst.b, f));
    }
    out
}

type Covered = BTreeSet<(u32, u32)>;

#[derive(Clone, Debug)]
struct DpVal {
    cost: usize,
    family: Vec<VertexSet>,
}

/// Minimum-clique-count DP over a (nice form of the) tree decomposition,
/// reported as YES exactly when the minimum is at most k.
///
/// A state is the set of currently visible annotated edges already covered.
/// Any solution clique lies inside some bag, so at every node the DP may pay
/// for a maximal clique of the bag's induced subgraph; forgetting a vertex
/// demands that all its visible annotated edges are covered.
pub fn solve_treewidth_dp(
    inst: &AnnotatedInstance,
    decomp: &TreeDecomposition,
) -> Result<Option<CliqueFamily>, DecompositionError> {
    decomposition::validate(&inst.g, decomp)?;
    let nice = decomposition::to_nice(decomp);
    let g = &inst.g;
    let b = &inst.b;
    let cap = inst.k;

    let visible = |bag: &VertexSet| -> Vec<(u32, u32)> {
        b.iter()
            .filter(|&(u, v)| bag.contains(u) && bag.contains(v))
            .collect()
    };

    let mut tables: Vec<BTreeMap<Covered, DpVal>> = Vec::with_capacity(nice.nodes.len());
    for (i, node) in nice.nodes.iter().enumerate() {
        let bag = &nice.bags[i];
        let mut table: BTreeMap<Covered, DpVal> = match node {
            NiceNode::Leaf => {
                let mut t = BTreeMap::new();
                t.insert(Covered::new(), DpVal { cost: 0, family: Vec::new() });
                t
            }
            NiceNode::Introduce { child, .. } => tables[*child].clone(),
            NiceNode::Forget { v, child } => {
                let child_bag = &nice.bags[*child];
                let child_visible = visible(child_bag);
                let now_visible = visible(bag);
                let mut t: BTreeMap<Covered, DpVal> = BTreeMap::new();
                for (covered, val) in &tables[*child] {
                    let incident_ok = child_visible
                        .iter()
                        .filter(|&&(x, y)| x == *v || y == *v)
                        .all(|e| covered.contains(e));
                    if !incident_ok {
                        continue;
                    }
                    let projected: Covered = covered
                        .iter()
                        .copied()
                        .filter(|e| now_visible.contains(e))
                        .collect();
                    match t.get(&projected) {
                        Some(old) if old.cost <= val.cost => {}
                        _ => {
                            t.insert(projected, val.clone());
                        }
                    }
                }
                t
            }
            NiceNode::Join { left, right } => {
                let mut t: BTreeMap<Covered, DpVal> = BTreeMap::new();
                for (s1, v1) in &tables[*left] {
                    for (s2, v2) in &tables[*right] {
                        let cost = v1.cost + v2.cost;
                        if cost > cap {
                            continue;
                        }
                        let merged: Covered = s1.union(s2).copied().collect();
                        match t.get(&merged) {
                            Some(old) if old.cost <= cost => {}
                            _ => {
                                let mut family = v1.family.clone();
                                family.extend(v2.family.iter().cloned());
                                t.insert(merged, DpVal { cost, family });
                            }
                        }
                    }
                }
                t
            }
        };

        // closure: pay for maximal cliques of the bag subgraph
        let vis = visible(bag);
        if !vis.is_empty() {
            let sub = g.induced(bag);
            let bag_ids: Vec<u32> = bag.iter().collect();
            let candidates: Vec<(Covered, VertexSet)> = maximal_cliques(&sub)
                .iter()
                .map(|c| {
                    let orig: VertexSet = c.iter().map(|w| bag_ids[w as usize]).collect();
                    let cov: Covered = vis
                        .iter()
                        .copied()
                        .filter(|&(x, y)| orig.contains(x) && orig.contains(y))
                        .collect();
                    (cov, orig)
                })
                .filter(|(cov, _)| !cov.is_empty())
                .collect();
            loop {
                let mut additions: Vec<(Covered, DpVal)> = Vec::new();
                for (covered, val) in &table {
                    if val.cost == cap {
                        continue;
                    }
                    for (cov, clique) in &candidates {
                        if cov.is_subset(covered) {
                            continue;
                        }
                        let merged: Covered = covered.union(cov).copied().collect();
                        let cost = val.cost + 1;
                        let better = match table.get(&merged) {
                            Some(old) => cost < old.cost,
                            None => true,
                        };
                        let pending = additions
                            .iter()
                            .any(|(m, v)| *m == merged && v.cost <= cost);
                        if better && !pending {
                            additions.retain(|(m, _)| *m != merged);
                            let mut family = val.family.clone();
                            family.push(clique.clone());
                            additions.push((merged, DpVal { cost, family }));
                        }
                    }
                }
                if additions.is_empty() {
                    break;
                }
                for (mask, val) in additions {
                    match table.get(&mask) {
                        Some(old) if old.cost <= val.cost => {}
                        _ => {
                            table.insert(mask, val);
                        }
                    }
                }
            }
        }
        tables.push(table);
    }

    let answer = tables[nice.root].get(&Covered::new()).cloned();
    Ok(answer.map(|val| {
        let mut family = CliqueFamily::from_vec(val.family);
        family.canonicalize();
        debug_assert!(family_covers(g, b, &family));
        family
    }))
}

/// Pipeline for minor-closed classes: prune vertices without annotated
/// edges, compute the degeneracy d, reject when more than (d+1)*k vertices
/// remain (k cliques of at most d+1 vertices each cannot touch them all),
/// and otherwise run the decomposition DP on a min-fill decomposition.
pub fn solve_minor_free(inst: &AnnotatedInstance) -> Option<CliqueFamily> {
    if inst.b.is_empty() {
        return Some(CliqueFamily::new());
    }
    let active = endpoints_union(&inst.b.iter().collect::<Vec<_>>());
    let ids: Vec<u32> = active.iter().collect();
    let gp = inst.g.induced(&active);
    let mut old_to_new = HashMap::new();
    for (i, &v) in ids.iter().enumerate() {
        old_to_new.insert(v, i as u32);
    }
    let bp: EdgeSet = inst
        .b
        .iter()
        .map(|(u, v)| (old_to_new[&u], old_to_new[&v]))
        .collect();
    let (d, _) = crate::graph::degeneracy(&gp);
    if gp.n() > (d + 1) * inst.k {
        return None;
    }
    let decomp = decomposition::min_fill_decomposition(&gp);
    let pruned = AnnotatedInstance::new(gp, bp, inst.k).expect("edges preserved");
    let family = solve_treewidth_dp(&pruned, &decomp).expect("fresh decomposition is valid")?;
    let mapped: CliqueFamily = family
        .iter()
        .map(|c| c.iter().map(|v| ids[v as usize]).collect())
        .collect();
    debug_assert!(family_covers(&inst.g, &inst.b, &mapped));
    Some(mapped)
}

/// Minimum number of cliques covering the annotated edges, by exhaustive
/// branch and bound over maximal cliques. Guarded at |B| <= 20 and n <= 12.
pub fn aecc_min(g: &Graph, b: &EdgeSet) -> Result<(usize, CliqueFamily), AeccError> {
    if b.len() > 20 {
        return Err(AeccError::SizeGuard(format!("|B| = {} > 20", b.len())));
    }
    if g.n() > 12 {
        return Err(AeccError::SizeGuard(format!("n = {} > 12", g.n())));
    }
    let edges: Vec<(u32, u32)> = b.iter().collect();
    if edges.is_empty() {
        return Ok((0, CliqueFamily::new()));
    }
    let cliques = maximal_cliques(g);
    let covers: Vec<u32> = cliques
        .iter()
        .map(|c| {
            let mut mask = 0u32;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if c.contains(u) && c.contains(v) {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    let full: u32 = (1u32 << edges.len()) - 1;
    // covering each annotated edge by one maximal clique always works, so
    // the sentinel one beyond |B| is never the final answer
    let mut best = edges.len() + 1;
    let mut best_pick: Vec<usize> = Vec::new();
    fn branch(
        covered: u32,
        full: u32,
        picked: &mut Vec<usize>,
        covers: &[u32],
        best: &mut usize,
        best_pick: &mut Vec<usize>,
    ) {
        if covered == full {
            if picked.len() < *best {
                *best = picked.len();
                *best_pick = picked.clone();
            }
            return;
        }
        if picked.len() + 1 >= *best {
            return;
        }
        let e = (!covered & full).trailing_zeros();
        for (i, &cov) in covers.iter().enumerate() {
            if cov >> e & 1 == 1 {
                picked.push(i);
                branch(covered | cov, full, picked, covers, best, best_pick);
                picked.pop();
            }
        }
    }
    let mut picked = Vec::new();
    branch(0, full, &mut picked, &covers, &mut best, &mut best_pick);
    debug_assert!(best <= edges.len());
    let family: CliqueFamily = best_pick.iter().map(|&i| cliques.get(i).clone()).collect();
    Ok((best, family))
}

/// Brute-force decision oracle: YES with a witness iff `aecc_min` is at most
/// the instance budget.
pub fn aecc_bruteforce(inst: &AnnotatedInstance) -> Result<Option<CliqueFamily>, AeccError> {
    let (size, family) = aecc_min(&inst.g, &inst.b)?;
    Ok((size <= inst.k).then_some(family))
}

/// Engine selector exposed on the command line and in the agreement tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AeccEngine {
    Auto,
    KTwo,
    BoundedOmega,
    Degenerate,
    Treewidth,
    MinorFree,
    Brute,
}

impl AeccEngine {
    pub fn parse(name: &str) -> Result<Self, AeccError> {
        Ok(match name {
            "auto" => AeccEngine::Auto,
            "k2" => AeccEngine::KTwo,
            "bounded-omega" => AeccEngine::BoundedOmega,
            "degenerate" => AeccEngine::Degenerate,
            "treewidth" => AeccEngine::Treewidth,
            "minor-free" => AeccEngine::MinorFree,
            "brute" => AeccEngine::Brute,
            other => return Err(AeccError::UnknownEngine(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            AeccEngine::Auto => "auto",
            AeccEngine::KTwo => "k2",
            AeccEngine::BoundedOmega => "bounded-omega",
            AeccEngine::Degenerate => "degenerate",
            AeccEngine::Treewidth => "treewidth",
            AeccEngine::MinorFree => "minor-free",
            AeccEngine::Brute => "brute",
        }
    }

    pub fn run(&self, inst: &AnnotatedInstance) -> Result<Option<CliqueFamily>, AeccError> {
        match self {
            AeccEngine::Auto => Ok(solve_auto(inst)),
            AeccEngine::KTwo => solve_k_le_2(inst),
            AeccEngine::BoundedOmega => Ok(solve_bounded_omega(inst)),
            AeccEngine::Degenerate => Ok(solve_degenerate(inst)),
            AeccEngine::Treewidth => {
                let decomp = decomposition::min_fill_decomposition(&inst.g);
                Ok(solve_treewidth_dp(inst, &decomp)?)
            }
            AeccEngine::MinorFree => Ok(solve_minor_free(inst)),
            AeccEngine::Brute => aecc_bruteforce(inst),
        }
    }
}

/// Dispatcher: polynomial routes first, then the engine whose rough cost
/// estimate (in bits of search space) is smallest.
pub fn solve_auto(inst: &AnnotatedInstance) -> Option<CliqueFamily> {
    if inst.k <= 2 {
        return solve_k_le_2(inst).expect("k <= 2");
    }
    if inst.b.is_empty() {
        return Some(CliqueFamily::new());
    }
    if inst.g.is_triangle_free() {
        return solve_bounded_omega(inst);
    }
    let (d, _) = crate::graph::degeneracy(&inst.g);
    let width = decomposition::min_fill_decomposition(&inst.g).width;
    let k = inst.k as f64;
    let deg_bits = k * (d.saturating_sub(1) as f64) / 3.0 * 3f64.log2();
    let bw_bits = inst.b.len() as f64;
    let tw_bits = (binom_usize(width + 1, 2).min(inst.b.len())) as f64;
    let engine = if deg_bits <= bw_bits && deg_bits <= tw_bits {
        AeccEngine::Degenerate
    } else if bw_bits <= tw_bits {
        AeccEngine::BoundedOmega
    } else {
        AeccEngine::Treewidth
    };
    engine.run(inst).expect("selected engine is total")
}

/// Parses the annotated-instance format: a graph edge list, then `a <u> <v>`
/// lines marking annotated edges, then a final `k <int>` line.
pub fn parse_annotated(text: &str) -> Result<AnnotatedInstance, AeccError> {
    let mut graph_text = String::new();
    let mut b_edges: Vec<(u32, u32)> = Vec::new();
    let mut k: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tok = line.split_ascii_whitespace();
        match tok.next() {
            Some("p") | Some("e") => {
                if !b_edges.is_empty() || k.is_some() {
                    return Err(AeccError::Malformed {
                        line: line_no,
                        msg: "graph lines must precede annotation lines".into(),
                    });
                }
                graph_text.push_str(line);
                graph_text.push('\n');
            }
            Some("a") => {
                if k.is_some() {
                    return Err(AeccError::Malformed {
                        line: line_no,
                        msg: "annotation after k line".into(),
                    });
                }
                let parse = |t: Option<&str>| -> Result<u32, AeccError> {
                    t.ok_or(AeccError::Malformed {
                        line: line_no,
                        msg: "missing endpoint".into(),
                    })?
                    .parse()
                    .map_err(|_| AeccError::Malformed {
                        line: line_no,
                        msg: "endpoint is not a number".into(),
                    })
                };
                let u = parse(tok.next())?;
                let v = parse(tok.next())?;
                b_edges.push((u, v));
            }
            Some("k") => {
                let val = tok
                    .next()
                    .ok_or(AeccError::Malformed {
                        line: line_no,
                        msg: "missing k value".into(),
                    })?
                    .parse()
                    .map_err(|_| AeccError::Malformed {
                        line: line_no,
                        msg: "k is not a number".into(),
                    })?;
                k = Some(val);
            }
            Some(other) => {
                return Err(AeccError::Malformed {
                    line: line_no,
                    msg: format!("unknown directive {other:?}"),
                });
            }
            None => unreachable!(),
        }
    }
    let g = crate::graph::parse_graph(&graph_text)?;
    let k = k.ok_or(AeccError::Malformed {
        line: 0,
        msg: "missing k line".into(),
    })?;
    AnnotatedInstance::new(g, EdgeSet::from_unsorted(b_edges), k)
}

pub fn serialize_annotated(inst: &AnnotatedInstance) -> String {
    let mut out = crate::graph::serialize_graph(&inst.g);
    for (u, v) in inst.b.iter() {
        out.push_str(&format!("a {u} {v}\n"));
    }
    out.push_str(&format!("k {}\n", inst.k));
    out
}
