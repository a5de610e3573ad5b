//! Edge clique partition above the independence number: partition all edges
//! of a graph into at most alpha(G) + k cliques.
//!
//! The solver composes four pieces. An exact bounded-size partition search
//! either computes alpha or rejects (a small partition of the non-simplicial
//! core must exist in any yes-instance). A polynomial pass extracts the
//! mandatory cliques that every small partition must contain. The simplicial
//! cliques that overlap in two vertices force a vertex-cover-style choice of
//! "broken" cliques, enumerated through minimal vertex covers. The recursive
//! extension step then partitions whatever the kept cliques leave uncovered.

use crate::alpha::alpha_from_cover;
use crate::certificate::{check_certificate, CertKind, Certificate};
use crate::graph::{check_partition, CliqueFamily, Graph, VertexSet};
use crate::simplicial::{critical_cliques, simplicial_report};
use crate::SolveError;
use std::collections::{BTreeSet, HashMap};

/// Cliques that belong to every edge clique partition within the budget.
/// Members are pairwise intersecting in at most one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MandatorySet {
    pub cliques: CliqueFamily,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MandatoryOutcome {
    Mandatory(MandatorySet),
    NoInstance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaOrReject {
    Alpha { alpha: usize, witness: VertexSet },
    NoInstance,
}

/// State of the extension recursion: free simplicial cliques still assumed
/// intact, broken simplicial cliques, and the fixed mandatory cliques.
#[derive(Debug, Clone)]
pub struct ExtendState {
    pub free: CliqueFamily,
    pub broken: CliqueFamily,
    pub mandatory: MandatorySet,
    pub alpha: usize,
    pub k: usize,
}

// ---------------------------------------------------------------------------
// Exact bounded-size partition search
// ---------------------------------------------------------------------------

fn edge_key(u: u32, v: u32) -> (u32, u32) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// All cliques containing both endpoints of `edges[next]` whose edges are
/// entirely uncovered, in lexicographic order of their vertex lists.
fn uncovered_cliques_at(
    g: &Graph,
    edges: &[(u32, u32)],
    edge_idx: &HashMap<(u32, u32), usize>,
    covered: &[bool],
    next: usize,
) -> Vec<VertexSet> {
    let (u, v) = edges[next];
    let pool: Vec<u32> = g
        .common_neighbors(u, v)
        .into_iter()
        .filter(|&w| {
            !covered[edge_idx[&edge_key(u, w)]] && !covered[edge_idx[&edge_key(v, w)]]
        })
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn grow(
        g: &Graph,
        edge_idx: &HashMap<(u32, u32), usize>,
        covered: &[bool],
        pool: &[u32],
        current: &mut Vec<u32>,
        base: (u32, u32),
        out: &mut Vec<VertexSet>,
    ) {
        let mut clique = vec![base.0, base.1];
        clique.extend_from_slice(current);
        out.push(VertexSet::from_unsorted(clique));
        for (i, &w) in pool.iter().enumerate() {
            let compatible = current
                .iter()
                .all(|&x| g.has_edge(x, w) && !covered[edge_idx[&edge_key(x, w)]]);
            if compatible {
                current.push(w);
                grow(g, edge_idx, covered, &pool[i + 1..], current, base, out);
                current.pop();
            }
        }
    }
    grow(g, edge_idx, covered, &pool, &mut current, (u, v), &mut out);
    out
}

/// Finds an edge clique partition of size at most `k` if one exists.
///
/// Branches on the lowest uncovered edge over every clique containing it
/// whose edges are all still uncovered; chosen cliques may never reuse a
/// covered edge, which is exactly the partition constraint.
pub fn ecp_exact(g: &Graph, k: usize) -> Option<CliqueFamily> {
    let edges = g.edges();
    let edge_idx: HashMap<(u32, u32), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut covered = vec![false; edges.len()];
    let mut chosen: Vec<VertexSet> = Vec::new();
    fn dfs(
        g: &Graph,
        edges: &[(u32, u32)],
        edge_idx: &HashMap<(u32, u32), usize>,
        covered: &mut Vec<bool>,
        budget: usize,
        chosen: &mut Vec<VertexSet>,
    ) -> bool {
        let Some(next) = covered.iter().position(|&c| !c) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        for clique in uncovered_cliques_at(g, edges, edge_idx, covered, next) {
            let vs = clique.as_slice();
            let mut marked = Vec::new();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let idx = edge_idx[&edge_key(vs[i], vs[j])];
                    covered[idx] = true;
                    marked.push(idx);
                }
            }
            chosen.push(clique);
            if dfs(g, edges, edge_idx, covered, budget - 1, chosen) {
                return true;
            }
            chosen.pop();
            for idx in marked {
                covered[idx] = false;
            }
        }
        false
    }
    if dfs(g, &edges, &edge_idx, &mut covered, k, &mut chosen) {
        let family = CliqueFamily::from_vec(chosen);
        debug_assert!(check_partition(g, &family).is_ok());
        Some(family)
    } else {
        None
    }
}

/// Minimum-size partition of size at most `cap`, by iterative deepening on
/// the exact search; the first budget that succeeds is the minimum.
pub fn ecp_min_upto(g: &Graph, cap: usize) -> Option<(usize, CliqueFamily)> {
    for t in 0..=cap {
        if let Some(f) = ecp_exact(g, t) {
            return Some((f.len(), f));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Partition oracle (independent search path from ecp_exact)
// ---------------------------------------------------------------------------

/// Minimum edge clique partition by exhaustive branch and bound, the oracle
/// for every partition test. Guarded at m <= 20. `max_clique_size` caps the
/// allowed clique size (used by the complete-graph splitting checks); pass
/// `usize::MAX` for no cap.
pub fn ecp_bruteforce_restricted(
    g: &Graph,
    max_clique_size: usize,
) -> Result<(usize, CliqueFamily), crate::oracle::OracleError> {
    if g.m() > 20 {
        return Err(crate::oracle::OracleError::SizeGuard(format!(
            "m = {} > 20",
            g.m()
        )));
    }
    let edges = g.edges();
    let edge_idx: HashMap<(u32, u32), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut covered = vec![false; edges.len()];
    let mut best = edges.len() + 1;
    let mut best_family: Vec<VertexSet> = Vec::new();
    let mut current: Vec<VertexSet> = Vec::new();
    fn search(
        g: &Graph,
        edges: &[(u32, u32)],
        edge_idx: &HashMap<(u32, u32), usize>,
        covered: &mut Vec<bool>,
        cap: usize,
        current: &mut Vec<VertexSet>,
        best: &mut usize,
        best_family: &mut Vec<VertexSet>,
    ) {
        let Some(next) = covered.iter().position(|&c| !c) else {
            if current.len() < *best {
                *best = current.len();
                *best_family = current.clone();
            }
            return;
        };
        if current.len() + 1 >= *best {
            return;
        }
        for clique in uncovered_cliques_at(g, edges, edge_idx, covered, next) {
            if clique.len() > cap {
                continue;
            }
            let vs = clique.as_slice();
            let mut marked = Vec::new();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let idx = edge_idx[&edge_key(vs[i], vs[j])];
                    covered[idx] = true;
                    marked.push(idx);
                }
            }
            current.push(clique);
            search(g, edges, edge_idx, covered, cap, current, best, best_family);
            current.pop();
            for idx in marked {
                covered[idx] = false;
            }
        }
    }
    search(
        g,
        &edges,
        &edge_idx,
        &mut covered,
        max_clique_size,
        &mut current,
        &mut best,
        &mut best_family,
    );
    debug_assert!(max_clique_size < 2 || best <= edges.len());
    Ok((best, CliqueFamily::from_vec(best_family)))
}

pub fn ecp_bruteforce(g: &Graph) -> Result<(usize, CliqueFamily), crate::oracle::OracleError> {
    ecp_bruteforce_restricted(g, usize::MAX)
}

/// Every edge clique partition of size at most `cap`, each reported once
/// (the clique covering the lowest uncovered edge is unique per partition,
/// so the branching enumerates without repetition). Test helper.
pub fn ecp_enumerate_all_upto(g: &Graph, cap: usize) -> Vec<CliqueFamily> {
    let edges = g.edges();
    let edge_idx: HashMap<(u32, u32), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut covered = vec![false; edges.len()];
    let mut current: Vec<VertexSet> = Vec::new();
    let mut out: Vec<CliqueFamily> = Vec::new();
    fn walk(
        g: &Graph,
        edges: &[(u32, u32)],
        edge_idx: &HashMap<(u32, u32), usize>,
        covered: &mut Vec<bool>,
        cap: usize,
        current: &mut Vec<VertexSet>,
        out: &mut Vec<CliqueFamily>,
    ) {
        let Some(next) = covered.iter().position(|&c| !c) else {
            let mut fam = CliqueFamily::from_vec(current.clone());
            fam.canonicalize();
            out.push(fam);
            return;
        };
        if current.len() == cap {
            return;
        }
        for clique in uncovered_cliques_at(g, edges, edge_idx, covered, next) {
            let vs = clique.as_slice();
            let mut marked = Vec::new();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let idx = edge_idx[&edge_key(vs[i], vs[j])];
                    covered[idx] = true;
                    marked.push(idx);
                }
            }
            current.push(clique);
            walk(g, edges, edge_idx, covered, cap, current, out);
            current.pop();
            for idx in marked {
                covered[idx] = false;
            }
        }
    }
    walk(g, &edges, &edge_idx, &mut covered, cap, &mut current, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Alpha or reject
// ---------------------------------------------------------------------------

fn reject_isolated(g: &Graph) -> Result<(), SolveError> {
    match g.vertices().find(|&v| g.degree(v) == 0) {
        Some(v) => Err(SolveError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Either computes the exact independence number (with a witness) or
/// certifies that no partition of size alpha + k exists.
///
/// The core outside all simplicial cliques can only be covered by
/// non-simplicial cliques, of which a yes-instance admits at most 2k, so it
/// must have a partition of size at most 2k; when one exists, alpha follows
/// from the cover DP plus one representative per simplicial clique.
pub fn alpha_or_reject(g: &Graph, k: usize) -> Result<AlphaOrReject, SolveError> {
    reject_isolated(g)?;
    if k < 1 {
        return Err(SolveError::Parameter("alpha_or_reject needs k >= 1".into()));
    }
    let report = simplicial_report(g);
    let mut covered_vertices = VertexSet::new();
    for c in report.simplicial_cliques.iter() {
        covered_vertices = covered_vertices.union(c);
    }
    let core: VertexSet = g
        .vertices()
        .filter(|&v| !covered_vertices.contains(v))
        .collect();
    let h = g.induced(&core);
    let ids: Vec<u32> = core.iter().collect();
    let Some(partition) = ecp_exact(&h, 2 * k) else {
        return Ok(AlphaOrReject::NoInstance);
    };
    let (alpha_core, witness_core) =
        alpha_from_cover(&h, &partition).expect("partition is a valid cover of the core");
    let mut witness: Vec<u32> = witness_core.iter().map(|v| ids[v as usize]).collect();
    witness.extend_from_slice(&report.representative);
    let witness = VertexSet::from_unsorted(witness);
    let alpha = alpha_core + report.simplicial_cliques.len();
    debug_assert_eq!(witness.len(), alpha);
    debug_assert!(crate::oracle::is_independent(g, &witness));
    Ok(AlphaOrReject::Alpha { alpha, witness })
}

// ---------------------------------------------------------------------------
// Mandatory cliques
// ---------------------------------------------------------------------------

/// Extracts the cliques forced into every partition of size alpha + k, or
/// certifies a no-instance.
///
/// For each simplicial vertex v an auxiliary graph on N[v] connects pairs
/// not shared by any other simplicial clique; large critical cliques there
/// pin down forced cliques. A global auxiliary graph on the edges lying in
/// no simplicial clique handles cliques without simplicial vertices; its
/// candidates must be cliques of g, otherwise the instance is infeasible.
pub fn mandatory_cliques(g: &Graph, k: usize) -> Result<MandatoryOutcome, SolveError> {
    reject_isolated(g)?;
    if k < 1 {
        return Err(SolveError::Parameter("mandatory_cliques needs k >= 1".into()));
    }
    let report = simplicial_report(g);
    let scliques = &report.simplicial_cliques;
    let mut out: BTreeSet<VertexSet> = BTreeSet::new();

    let in_other_simplicial = |x: u32, y: u32, own: &VertexSet| {
        scliques
            .iter()
            .any(|c| c != own && c.contains(x) && c.contains(y))
    };

    for &v in report.simplicial_vertices.as_slice() {
        let own = g.closed_neighborhood(v);
        let members: Vec<u32> = own.iter().collect();
        let mut h_edges = Vec::new();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if !in_other_simplicial(members[i], members[j], &own) {
                    h_edges.push((i as u32, j as u32));
                }
            }
        }
        let h_v = Graph::from_edges(members.len(), &h_edges).unwrap();
        let classes = critical_cliques(&h_v);
        let local_v = members.iter().position(|&x| x == v).unwrap() as u32;
        let v_class = &classes.classes[classes.class_of(local_v)];
        if v_class.len() >= 2 * k + 1 {
            out.insert(own.clone());
        } else {
            for class in &classes.classes {
                if class.len() >= 2 * k && !class.contains(local_v) {
                    let mut closed: BTreeSet<u32> = class.iter().collect();
                    for w in class.iter() {
                        closed.extend(h_v.neighbors(w));
                    }
                    let candidate: VertexSet =
                        closed.into_iter().map(|i| members[i as usize]).collect();
                    // subsets of a simplicial clique are always cliques of g
                    out.insert(candidate);
                }
            }
        }
    }

    // global stage: edges covered by no simplicial clique
    let mut h_edges = Vec::new();
    for (x, y) in g.edges() {
        if !scliques.iter().any(|c| c.contains(x) && c.contains(y)) {
            h_edges.push((x, y));
        }
    }
    let h = Graph::from_edges(g.n(), &h_edges).unwrap();
    for class in &critical_cliques(&h).classes {
        if class.len() < 2 * k + 1 {
            continue;
        }
        let mut closed: BTreeSet<u32> = class.iter().collect();
        for w in class.iter() {
            closed.extend(h.neighbors(w));
        }
        let candidate: VertexSet = closed.into_iter().collect();
        if !g.is_clique(&candidate).expect("in range") {
            return Ok(MandatoryOutcome::NoInstance);
        }
        out.insert(candidate);
    }

    let cliques: Vec<VertexSet> = out.into_iter().collect();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            if cliques[i].intersection_size(&cliques[j]) >= 2 {
                return Ok(MandatoryOutcome::NoInstance);
            }
        }
    }
    Ok(MandatoryOutcome::Mandatory(MandatorySet {
        cliques: CliqueFamily::from_vec(cliques),
    }))
}

// ---------------------------------------------------------------------------
// Broken-clique machinery
// ---------------------------------------------------------------------------

/// Graph on clique indices where two cliques are adjacent when they share
/// at least two vertices (and hence an edge, so one must be broken).
pub fn broken_conflict_graph(simplicial_cliques: &CliqueFamily) -> Graph {
    let n = simplicial_cliques.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if simplicial_cliques
                .get(i)
                .intersection_size(simplicial_cliques.get(j))
                >= 2
            {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// All inclusion-minimal vertex covers of size at most `k`, deduplicated and
/// sorted. Empty exactly when every vertex cover is larger than `k`.
pub fn minimal_vertex_covers_upto(h: &Graph, k: usize) -> Vec<VertexSet> {
    let edges = h.edges();
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    fn branch(
        edges: &[(u32, u32)],
        chosen: &mut Vec<u32>,
        k: usize,
        found: &mut BTreeSet<VertexSet>,
    ) {
        let uncovered = edges
            .iter()
            .find(|&&(u, v)| !chosen.contains(&u) && !chosen.contains(&v));
        match uncovered {
            None => {
                found.insert(VertexSet::from_unsorted(chosen.clone()));
            }
            Some(&(u, v)) => {
                if chosen.len() == k {
                    return;
                }
                for pick in [u, v] {
                    chosen.push(pick);
                    branch(edges, chosen, k, found);
                    chosen.pop();
                }
            }
        }
    }
    let mut chosen = Vec::new();
    branch(&edges, &mut chosen, k, &mut found);
    let is_cover = |set: &VertexSet| edges.iter().all(|&(u, v)| set.contains(u) || set.contains(v));
    found
        .into_iter()
        .filter(|c| {
            c.iter().all(|v| {
                let without = c.difference(&VertexSet::singleton(v));
                !is_cover(&without)
            })
        })
        .collect()
}

/// One extension attempt: partition whatever the free and mandatory cliques
/// leave uncovered, and on failure recurse with one more free clique broken.
pub fn extend(g: &Graph, state: &ExtendState) -> Option<CliqueFamily> {
    if state.broken.len() > state.k {
        return None;
    }
    let covered_by_fixed = |u: u32, v: u32| {
        state
            .free
            .iter()
            .chain(state.mandatory.cliques.iter())
            .any(|c| c.contains(u) && c.contains(v))
    };
    let uncovered: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !covered_by_fixed(u, v))
        .collect();
    let q_vertices: VertexSet = uncovered.iter().flat_map(|&(u, v)| [u, v]).collect();
    if q_vertices.len() > 12 * state.k * state.k {
        return None;
    }
    let ids: Vec<u32> = q_vertices.iter().collect();
    let mut to_new = HashMap::new();
    for (i, &v) in ids.iter().enumerate() {
        to_new.insert(v, i as u32);
    }
    let q_edges: Vec<(u32, u32)> = uncovered
        .iter()
        .map(|&(u, v)| (to_new[&u], to_new[&v]))
        .collect();
    let q = Graph::from_edges(ids.len(), &q_edges).unwrap();

    if let Some((size, partition)) = ecp_min_upto(&q, 2 * state.k) {
        let total = size + state.free.len() + state.mandatory.cliques.len();
        if total <= state.alpha + state.k {
            let mut family = CliqueFamily::new();
            for c in partition.iter() {
                family.push(c.iter().map(|v| ids[v as usize]).collect());
            }
            family.extend_from(&state.free);
            family.extend_from(&state.mandatory.cliques);
            return Some(family);
        }
    }

    for (idx, f) in state.free.iter().enumerate() {
        if f.intersection_size(&q_vertices) < 2 {
            continue;
        }
        let free: CliqueFamily = state
            .free
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, c)| c.clone())
            .collect();
        let mut broken = state.broken.clone();
        broken.push(f.clone());
        let next = ExtendState {
            free,
            broken,
            mandatory: state.mandatory.clone(),
            alpha: state.alpha,
            k: state.k,
        };
        if let Some(solution) = extend(g, &next) {
            return Some(solution);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Full solver
// ---------------------------------------------------------------------------

/// Decides whether the edges partition into at most alpha(G) + k cliques
/// and produces a verifiable certificate when they do.
pub fn solve_ecp_alpha(g: &Graph, k: usize) -> Result<Option<Certificate>, SolveError> {
    reject_isolated(g)?;
    if k == 0 {
        // a partition within budget alpha can only use simplicial cliques,
        // and then must use all of them
        let report = simplicial_report(g);
        let cliques = report.simplicial_cliques;
        if check_partition(g, &cliques).is_err() {
            return Ok(None);
        }
        let witness = VertexSet::from_unsorted(report.representative);
        let cert = Certificate {
            kind: CertKind::Partition,
            declared_alpha: cliques.len(),
            k,
            alpha_witness: witness,
            cliques,
        };
        check_certificate(g, &cert).expect("internal verification of a produced certificate");
        return Ok(Some(cert));
    }

    let (alpha, witness) = match alpha_or_reject(g, k)? {
        AlphaOrReject::NoInstance => return Ok(None),
        AlphaOrReject::Alpha { alpha, witness } => (alpha, witness),
    };
    let mandatory = match mandatory_cliques(g, k)? {
        MandatoryOutcome::NoInstance => return Ok(None),
        MandatoryOutcome::Mandatory(m) => m,
    };
    if mandatory.cliques.len() > alpha + k {
        return Ok(None);
    }
    let report = simplicial_report(g);
    let scliques = report.simplicial_cliques;
    let conflict = broken_conflict_graph(&scliques);
    let covers = minimal_vertex_covers_upto(&conflict, k);
    for cover in covers {
        let mut broken_set: BTreeSet<VertexSet> = cover
            .iter()
            .map(|i| scliques.get(i as usize).clone())
            .collect();
        for s in scliques.iter() {
            if broken_set.contains(s) || mandatory.cliques.contains_set(s) {
                continue;
            }
            if mandatory
                .cliques
                .iter()
                .any(|m| s.intersection_size(m) >= 2)
            {
                broken_set.insert(s.clone());
            }
        }
        if broken_set.len() > k + 1 {
            continue;
        }
        let free: CliqueFamily = scliques
            .iter()
            .filter(|s| !broken_set.contains(*s) && !mandatory.cliques.contains_set(s))
            .cloned()
            .collect();
        let state = ExtendState {
            free,
            broken: broken_set.iter().cloned().collect(),
            mandatory: mandatory.clone(),
            alpha,
            k,
        };
        if let Some(mut family) = extend(g, &state) {
            family.canonicalize();
            let cert = Certificate {
                kind: CertKind::Partition,
                cliques: family,
                alpha_witness: witness,
                declared_alpha: alpha,
                k,
            };
            check_certificate(g, &cert).expect("internal verification of a produced certificate");
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::alpha_bruteforce;
    use crate::generators::{
        all_graphs, bowtie_graph, complete_graph, cycle_graph, diamond_graph, net_graph,
        path_graph,
    };
    use crate::simplicial::simplicial_report;

    fn disjoint_triangles(count: usize) -> Graph {
        let mut edges = Vec::new();
        for t in 0..count as u32 {
            let b = 3 * t;
            edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
        }
        Graph::from_edges(3 * count, &edges).unwrap()
    }

    #[test]
    fn ecp_exact_examples() {
        let f = ecp_exact(&complete_graph(4), 1).unwrap();
        assert_eq!(f.len(), 1);
        assert!(ecp_exact(&cycle_graph(5), 4).is_none());
        assert_eq!(ecp_exact(&cycle_graph(5), 5).unwrap().len(), 5);
    }

    #[test]
    fn ecp_exact_finds_non_maximal_cliques() {
        // the partition through the bare edge 0-1 is strictly better here:
        // {0,2,4} and {1,2,5} pay for the wing triangles, 0-1 rides alone
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (0, 4), (2, 4), (1, 5), (2, 5)],
        )
        .unwrap();
        assert!(ecp_exact(&g, 3).is_some());
        assert_eq!(ecp_bruteforce(&g).unwrap().0, 3);
    }

    #[test]
    fn ecp_bruteforce_values() {
        assert_eq!(ecp_bruteforce(&complete_graph(3)).unwrap().0, 1);
        assert_eq!(ecp_bruteforce(&diamond_graph()).unwrap().0, 3);
        assert_eq!(ecp_bruteforce(&cycle_graph(4)).unwrap().0, 4);
    }

    #[test]
    fn splitting_complete_graphs_needs_n_cliques() {
        for n in 3..=5usize {
            let (size, _) = ecp_bruteforce_restricted(&complete_graph(n), n - 1).unwrap();
            assert!(size >= n, "K{n} split into size <= {} cliques gave {size}", n - 1);
        }
    }

    #[test]
    fn alpha_or_reject_examples() {
        let g = disjoint_triangles(3);
        assert_eq!(
            alpha_or_reject(&g, 1).unwrap(),
            AlphaOrReject::Alpha {
                alpha: 3,
                witness: VertexSet::from_sorted(vec![0, 3, 6])
            }
        );

        assert_eq!(
            alpha_or_reject(&cycle_graph(5), 1).unwrap(),
            AlphaOrReject::NoInstance
        );

        // triangle with one pendant: alpha = 2, core empty
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        match alpha_or_reject(&g, 1).unwrap() {
            AlphaOrReject::Alpha { alpha, witness } => {
                assert_eq!(alpha, 2);
                assert!(crate::oracle::is_independent(&g, &witness));
            }
            other => panic!("expected alpha, got {other:?}"),
        }
    }

    #[test]
    fn alpha_or_reject_matches_bruteforce_when_it_answers() {
        for n in 2..=6usize {
            for (i, g) in all_graphs(n).enumerate() {
                if n == 6 && i % 5 != 0 {
                    continue;
                }
                if g.min_degree() == 0 {
                    continue;
                }
                for k in 1..=2usize {
                    if let AlphaOrReject::Alpha { alpha, witness } =
                        alpha_or_reject(&g, k).unwrap()
                    {
                        let (expect, _) = alpha_bruteforce(&g).unwrap();
                        assert_eq!(alpha, expect, "graph {:?}", g);
                        assert_eq!(witness.len(), alpha);
                        assert!(crate::oracle::is_independent(&g, &witness));
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_or_reject_matches_bruteforce_up_to_twelve() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1212);
        let mut answered = 0;
        for _ in 0..400 {
            let n = rng.random_range(2..=12usize);
            let max_m = n * (n - 1) / 2;
            let m = rng.random_range((n - 1).min(max_m)..=max_m);
            let g = crate::generators::random_graph(n, m, rng.random()).unwrap();
            if g.min_degree() == 0 {
                continue;
            }
            let k = rng.random_range(1..=3usize);
            if let AlphaOrReject::Alpha { alpha, witness } = alpha_or_reject(&g, k).unwrap() {
                let (expect, _) = alpha_bruteforce(&g).unwrap();
                assert_eq!(alpha, expect, "graph {:?} k={k}", g);
                assert!(crate::oracle::is_independent(&g, &witness));
                answered += 1;
            }
        }
        assert!(answered > 50, "sample produced too few answered instances");
    }

    #[test]
    fn mandatory_examples() {
        match mandatory_cliques(&complete_graph(5), 1).unwrap() {
            MandatoryOutcome::Mandatory(m) => {
                assert_eq!(m.cliques.len(), 1);
                assert_eq!(m.cliques.get(0), &(0..5).collect());
            }
            other => panic!("expected mandatory set, got {other:?}"),
        }
        match mandatory_cliques(&cycle_graph(5), 1).unwrap() {
            MandatoryOutcome::Mandatory(m) => assert!(m.cliques.is_empty()),
            other => panic!("expected empty mandatory set, got {other:?}"),
        }
        match mandatory_cliques(&path_graph(3), 1).unwrap() {
            MandatoryOutcome::Mandatory(m) => assert!(m.cliques.is_empty()),
            other => panic!("expected empty mandatory set, got {other:?}"),
        }
    }

    #[test]
    fn mandatory_contains_huge_cliques() {
        // K7 at k = 1: the unique minimum partition is the whole graph, a
        // clique of size 6k+1, and the extractor must surface it
        match mandatory_cliques(&complete_graph(7), 1).unwrap() {
            MandatoryOutcome::Mandatory(m) => {
                assert!(m.cliques.contains_set(&(0..7).collect()));
            }
            other => panic!("expected mandatory set, got {other:?}"),
        }
    }

    #[test]
    fn mandatory_cliques_lie_in_every_small_partition() {
        for n in 2..=5usize {
            for g in all_graphs(n) {
                if g.min_degree() == 0 {
                    continue;
                }
                let (alpha, _) = alpha_bruteforce(&g).unwrap();
                for k in 1..=2usize {
                    let all = ecp_enumerate_all_upto(&g, alpha + k);
                    match mandatory_cliques(&g, k).unwrap() {
                        MandatoryOutcome::Mandatory(m) => {
                            for part in &all {
                                for c in m.cliques.iter() {
                                    assert!(
                                        part.contains_set(c),
                                        "graph {:?} k={k} clique {:?} partition {:?}",
                                        g,
                                        c,
                                        part
                                    );
                                }
                            }
                        }
                        MandatoryOutcome::NoInstance => {
                            assert!(all.is_empty(), "graph {:?} k={k}", g);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn broken_conflict_graph_examples() {
        let bowtie = simplicial_report(&bowtie_graph()).simplicial_cliques;
        assert_eq!(broken_conflict_graph(&bowtie).m(), 0);

        let k4 = simplicial_report(&complete_graph(4)).simplicial_cliques;
        let h = broken_conflict_graph(&k4);
        assert_eq!((h.n(), h.m()), (1, 0));

        let diamond = simplicial_report(&diamond_graph()).simplicial_cliques;
        let h = broken_conflict_graph(&diamond);
        assert_eq!((h.n(), h.m()), (2, 1));
    }

    #[test]
    fn minimal_vertex_cover_examples() {
        let single = path_graph(2);
        assert_eq!(
            minimal_vertex_covers_upto(&single, 1),
            vec![VertexSet::singleton(0), VertexSet::singleton(1)]
        );
        let k3 = complete_graph(3);
        assert!(minimal_vertex_covers_upto(&k3, 1).is_empty());
        assert_eq!(minimal_vertex_covers_upto(&k3, 2).len(), 3);
        let p3 = path_graph(3);
        assert_eq!(
            minimal_vertex_covers_upto(&p3, 1),
            vec![VertexSet::singleton(1)]
        );
        // edgeless graph: the empty set is the unique minimal cover
        assert_eq!(
            minimal_vertex_covers_upto(&Graph::empty(3), 2),
            vec![VertexSet::new()]
        );
    }

    #[test]
    fn extend_examples() {
        // two disjoint triangles, everything simplicial and free
        let g = disjoint_triangles(2);
        let report = simplicial_report(&g);
        let state = ExtendState {
            free: report.simplicial_cliques.clone(),
            broken: CliqueFamily::new(),
            mandatory: MandatorySet {
                cliques: CliqueFamily::new(),
            },
            alpha: 2,
            k: 1,
        };
        let f = extend(&g, &state).unwrap();
        assert_eq!(f.len(), 2);

        // C4 has no simplicial cliques; the core C4 needs 4 > 2k cliques
        let c4 = cycle_graph(4);
        let state = ExtendState {
            free: CliqueFamily::new(),
            broken: CliqueFamily::new(),
            mandatory: MandatorySet {
                cliques: CliqueFamily::new(),
            },
            alpha: 2,
            k: 1,
        };
        assert!(extend(&c4, &state).is_none());

        // net graph: three free pendant cliques leave the central triangle
        // uncovered; one extra clique lands exactly on the budget 3 + 1
        let net = net_graph();
        let free = simplicial_report(&net).simplicial_cliques;
        assert_eq!(free.len(), 3);
        let state = ExtendState {
            free,
            broken: CliqueFamily::new(),
            mandatory: MandatorySet {
                cliques: CliqueFamily::new(),
            },
            alpha: 3,
            k: 1,
        };
        let f = extend(&net, &state).unwrap();
        assert_eq!(f.len(), 4);
        assert!(crate::graph::verify_partition(&net, &f));
    }

    #[test]
    fn solve_examples() {
        // pendant-expanded triangle: partition = 3 pendant edges + triangle
        let net = net_graph();
        let cert = solve_ecp_alpha(&net, 1).unwrap().unwrap();
        assert_eq!(cert.declared_alpha, 3);
        assert_eq!(cert.cliques.len(), 4);
        assert!(solve_ecp_alpha(&net, 0).unwrap().is_none());

        assert!(solve_ecp_alpha(&disjoint_triangles(3), 0).unwrap().is_some());

        assert!(matches!(
            solve_ecp_alpha(&Graph::from_edges(2, &[]).unwrap(), 1),
            Err(SolveError::IsolatedVertex(0))
        ));
    }

    #[test]
    fn broken_set_augmentation_path() {
        // K6 on 0..5 plus vertex 6 adjacent to 0 and 1. The only simplicial
        // clique is {0,1,6}; the twin class {2,3,4,5} forces K6 into the
        // mandatory set at k = 1, which overlaps {0,1,6} in two vertices and
        // pushes it into the broken set. The partition K6 + {0,6} + {1,6}
        // has size 3 = alpha + 1.
        let mut edges = Vec::new();
        for u in 0..6u32 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        edges.push((0, 6));
        edges.push((1, 6));
        let g = Graph::from_edges(7, &edges).unwrap();

        match mandatory_cliques(&g, 1).unwrap() {
            MandatoryOutcome::Mandatory(m) => {
                assert!(m.cliques.contains_set(&(0..6).collect()));
            }
            other => panic!("expected mandatory K6, got {other:?}"),
        }
        assert!(solve_ecp_alpha(&g, 0).unwrap().is_none());
        let cert = solve_ecp_alpha(&g, 1).unwrap().unwrap();
        assert_eq!(cert.declared_alpha, 2);
        assert_eq!(cert.cliques.len(), 3);
        assert!(cert.cliques.contains_set(&(0..6).collect()));
    }

    #[test]
    fn solve_agrees_with_oracles_small() {
        for n in 2..=5usize {
            for g in all_graphs(n) {
                if g.min_degree() == 0 {
                    continue;
                }
                let (alpha, _) = alpha_bruteforce(&g).unwrap();
                let (ecp, _) = ecp_bruteforce(&g).unwrap();
                for k in 0..=2usize {
                    let got = solve_ecp_alpha(&g, k).unwrap();
                    let expect = ecp <= alpha + k;
                    assert_eq!(got.is_some(), expect, "graph {:?} k={k}", g);
                    if let Some(cert) = got {
                        assert_eq!(cert.declared_alpha, alpha);
                        assert!(crate::certificate::verify_certificate(&g, &cert));
                    }
                }
            }
        }
    }

    #[test]
    fn minimum_partitions_have_few_non_simplicial_cliques() {
        // in any cover or partition of size alpha + k, at most 2k members
        // are non-simplicial
        for n in 2..=5usize {
            for g in all_graphs(n) {
                if g.min_degree() == 0 {
                    continue;
                }
                let (alpha, _) = alpha_bruteforce(&g).unwrap();
                let (size, partition) = ecp_bruteforce(&g).unwrap();
                if size < alpha {
                    panic!("partition below the independence bound on {:?}", g);
                }
                let k = size - alpha;
                let scliques = simplicial_report(&g).simplicial_cliques;
                let non_simplicial = partition
                    .iter()
                    .filter(|c| !scliques.contains_set(c))
                    .count();
                assert!(non_simplicial <= 2 * k, "graph {:?}", g);
            }
        }
    }
}
