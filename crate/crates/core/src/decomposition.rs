//! Tree decompositions: validation, a min-fill heuristic constructor, and
//! conversion to nice form for the dynamic programs.

use crate::graph::{Graph, VertexSet};
use thiserror::Error;

/// A tree decomposition: one bag per node of a tree over bag indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
    pub width: usize,
    pub nice: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("decomposition has no bags")]
    NoBags,
    #[error("tree edge references missing bag {0}")]
    BadTreeEdge(usize),
    #[error("bag graph is not a tree")]
    NotATree,
    #[error("vertex {0} appears in no bag")]
    VertexMissing(u32),
    #[error("edge {0}-{1} is contained in no bag")]
    EdgeMissing(u32, u32),
    #[error("bags containing vertex {0} are not connected in the tree")]
    NotConnected(u32),
    #[error("declared width {declared} but bags give {actual}")]
    WidthMismatch { declared: usize, actual: usize },
    #[error("bag contains out-of-range vertex {0}")]
    OutOfRange(u32),
}

/// Checks the three decomposition axioms plus width consistency.
pub fn validate(g: &Graph, td: &TreeDecomposition) -> Result<(), DecompositionError> {
    let b = td.bags.len();
    if b == 0 {
        return Err(DecompositionError::NoBags);
    }
    for &(x, y) in &td.tree_edges {
        if x >= b || y >= b {
            return Err(DecompositionError::BadTreeEdge(x.max(y)));
        }
    }
    if td.tree_edges.len() != b - 1 || !tree_connected(b, &td.tree_edges, None).0 {
        return Err(DecompositionError::NotATree);
    }
    let actual = td.bags.iter().map(|bag| bag.len()).max().unwrap_or(0);
    let actual = actual.saturating_sub(1);
    if actual != td.width {
        return Err(DecompositionError::WidthMismatch {
            declared: td.width,
            actual,
        });
    }
    for bag in &td.bags {
        if let Some(v) = bag.iter().find(|&v| v as usize >= g.n()) {
            return Err(DecompositionError::OutOfRange(v));
        }
    }
    for v in g.vertices() {
        let holders: Vec<usize> = (0..b).filter(|&i| td.bags[i].contains(v)).collect();
        if holders.is_empty() {
            return Err(DecompositionError::VertexMissing(v));
        }
        let (_, reach) = tree_connected(b, &td.tree_edges, Some(&holders));
        if reach != holders.len() {
            return Err(DecompositionError::NotConnected(v));
        }
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|bag| bag.contains(u) && bag.contains(v)) {
            return Err(DecompositionError::EdgeMissing(u, v));
        }
    }
    Ok(())
}

/// Connectivity over all bags (restrict = None) or an induced subset.
/// Returns (whole-structure connected, reached count within restriction).
fn tree_connected(b: usize, edges: &[(usize, usize)], restrict: Option<&[usize]>) -> (bool, usize) {
    let allowed = |i: usize| restrict.is_none_or(|r| r.contains(&i));
    let start = match restrict {
        None => 0,
        Some(r) => match r.first() {
            Some(&s) => s,
            None => return (true, 0),
        },
    };
    let mut adj = vec![Vec::new(); b];
    for &(x, y) in edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut seen = vec![false; b];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] && allowed(j) {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    (count == b, count)
}

/// Builds a tree decomposition with the min-fill elimination heuristic:
/// repeatedly eliminate a vertex whose neighborhood needs the fewest fill
/// edges, ties broken by lowest id. Always valid; width is heuristic.
pub fn min_fill_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![VertexSet::new()],
            tree_edges: Vec::new(),
            width: 0,
            nice: false,
        };
    }
    let mut adj: Vec<std::collections::BTreeSet<u32>> = (0..n)
        .map(|v| g.neighbors(v as u32).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut bags: Vec<VertexSet> = Vec::with_capacity(n);
    let mut position = vec![usize::MAX; n];
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                let nb: Vec<u32> = adj[v].iter().copied().filter(|&w| alive[w as usize]).collect();
                let mut fill = 0usize;
                for i in 0..nb.len() {
                    for j in i + 1..nb.len() {
                        if !adj[nb[i] as usize].contains(&nb[j]) {
                            fill += 1;
                        }
                    }
                }
                (fill, v)
            })
            .expect("vertex remains");
        let nb: Vec<u32> = adj[v].iter().copied().filter(|&w| alive[w as usize]).collect();
        let mut bag: Vec<u32> = nb.clone();
        bag.push(v as u32);
        bags.push(VertexSet::from_unsorted(bag));
        position[v] = step;
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                adj[nb[i] as usize].insert(nb[j]);
                adj[nb[j] as usize].insert(nb[i]);
            }
        }
        alive[v] = false;
    }
    let order: Vec<u32> = {
        let mut o = vec![0u32; n];
        for v in 0..n {
            o[position[v]] = v as u32;
        }
        o
    };
    let mut tree_edges = Vec::new();
    for (i, _) in order.iter().enumerate() {
        let successor = bags[i]
            .iter()
            .filter(|&w| position[w as usize] > i)
            .min_by_key(|&w| position[w as usize]);
        match successor {
            Some(w) => tree_edges.push((i, position[w as usize])),
            None => {
                if i + 1 < n {
                    tree_edges.push((i, i + 1));
                }
            }
        }
    }
    let width = bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1);
    let td = TreeDecomposition {
        bags,
        tree_edges,
        width,
        nice: false,
    };
    debug_assert!(validate(g, &td).is_ok(), "min-fill output must validate");
    td
}

/// One node of a decomposition in nice form. Children always appear at
/// smaller indices, so a forward pass is a valid bottom-up order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NiceNode {
    Leaf,
    Introduce { v: u32, child: usize },
    Forget { v: u32, child: usize },
    Join { left: usize, right: usize },
}

#[derive(Debug, Clone)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
    pub bags: Vec<VertexSet>,
    pub root: usize,
}

/// Converts a valid decomposition to nice form with an empty root bag.
pub fn to_nice(td: &TreeDecomposition) -> NiceDecomposition {
    let b = td.bags.len();
    let mut adj = vec![Vec::new(); b];
    for &(x, y) in &td.tree_edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut nice = NiceDecomposition {
        nodes: Vec::new(),
        bags: Vec::new(),
        root: 0,
    };
    let top = build_nice(td, &adj, 0, usize::MAX, &mut nice);
    // forget everything left in the root bag
    let mut cur = top;
    let root_bag: Vec<u32> = nice.bags[cur].iter().collect();
    for v in root_bag {
        let mut bag = nice.bags[cur].clone();
        bag = bag.difference(&VertexSet::singleton(v));
        cur = push_node(&mut nice, NiceNode::Forget { v, child: cur }, bag);
    }
    nice.root = cur;
    nice
}

fn push_node(nice: &mut NiceDecomposition, node: NiceNode, bag: VertexSet) -> usize {
    nice.nodes.push(node);
    nice.bags.push(bag);
    nice.nodes.len() - 1
}

/// Builds a nice subtree whose top node carries exactly `td.bags[at]`.
fn build_nice(
    td: &TreeDecomposition,
    adj: &[Vec<usize>],
    at: usize,
    parent: usize,
    nice: &mut NiceDecomposition,
) -> usize {
    let target = &td.bags[at];
    let children: Vec<usize> = adj[at].iter().copied().filter(|&c| c != parent).collect();
    let mut tops: Vec<usize> = Vec::new();
    for c in children {
        let child_top = build_nice(td, adj, c, at, nice);
        tops.push(morph(nice, child_top, target));
    }
    match tops.len() {
        0 => {
            let mut cur = push_node(nice, NiceNode::Leaf, VertexSet::new());
            for v in target.iter() {
                let bag = nice.bags[cur].union(&VertexSet::singleton(v));
                cur = push_node(nice, NiceNode::Introduce { v, child: cur }, bag);
            }
            cur
        }
        1 => tops[0],
        _ => {
            let mut cur = tops[0];
            for &t in &tops[1..] {
                cur = push_node(
                    nice,
                    NiceNode::Join { left: cur, right: t },
                    target.clone(),
                );
            }
            cur
        }
    }
}

/// Chain of forgets then introduces taking the bag at `from` to `target`.
fn morph(nice: &mut NiceDecomposition, from: usize, target: &VertexSet) -> usize {
    let mut cur = from;
    let drop: Vec<u32> = nice.bags[cur].difference(target).iter().collect();
    for v in drop {
        let bag = nice.bags[cur].difference(&VertexSet::singleton(v));
        cur = push_node(nice, NiceNode::Forget { v, child: cur }, bag);
    }
    let add: Vec<u32> = target.difference(&nice.bags[cur]).iter().collect();
    for v in add {
        let bag = nice.bags[cur].union(&VertexSet::singleton(v));
        cur = push_node(nice, NiceNode::Introduce { v, child: cur }, bag);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{all_graphs, complete_graph, cycle_graph, grid_graph, path_graph};

    #[test]
    fn min_fill_validates_on_all_small_graphs() {
        for n in 0..=6 {
            for g in all_graphs(n) {
                let td = min_fill_decomposition(&g);
                validate(&g, &td).unwrap();
            }
        }
    }

    #[test]
    fn min_fill_width_on_known_families() {
        assert_eq!(min_fill_decomposition(&path_graph(6)).width, 1);
        assert_eq!(min_fill_decomposition(&cycle_graph(6)).width, 2);
        assert_eq!(min_fill_decomposition(&complete_graph(5)).width, 4);
        // 3x3 grid has treewidth 3; min-fill finds it here
        assert_eq!(min_fill_decomposition(&grid_graph(3, 3)).width, 3);
    }

    #[test]
    fn validate_rejects_broken_decompositions() {
        let g = path_graph(3);
        let ok = min_fill_decomposition(&g);
        validate(&g, &ok).unwrap();

        let mut bad = ok.clone();
        bad.width += 1;
        assert!(matches!(
            validate(&g, &bad),
            Err(DecompositionError::WidthMismatch { .. })
        ));

        // drop an edge's bag coverage
        let bags = vec![VertexSet::from_sorted(vec![0, 1]), VertexSet::singleton(2)];
        let td = TreeDecomposition {
            bags,
            tree_edges: vec![(0, 1)],
            width: 1,
            nice: false,
        };
        assert_eq!(
            validate(&g, &td).unwrap_err(),
            DecompositionError::EdgeMissing(1, 2)
        );

        // vertex in two bags that are not connected through its bags
        let bags = vec![
            VertexSet::from_sorted(vec![0, 1]),
            VertexSet::singleton(1),
            VertexSet::from_sorted(vec![0, 1, 2]),
        ];
        let td = TreeDecomposition {
            bags,
            tree_edges: vec![(0, 1), (1, 2)],
            width: 2,
            nice: false,
        };
        assert_eq!(
            validate(&g, &td).unwrap_err(),
            DecompositionError::NotConnected(0)
        );
    }

    #[test]
    fn nice_form_has_children_before_parents_and_empty_root() {
        for g in [path_graph(5), cycle_graph(6), grid_graph(2, 3), Graph::empty(0)] {
            let td = min_fill_decomposition(&g);
            let nice = to_nice(&td);
            assert!(nice.bags[nice.root].is_empty());
            for (i, node) in nice.nodes.iter().enumerate() {
                match node {
                    NiceNode::Leaf => {}
                    NiceNode::Introduce { child, .. } | NiceNode::Forget { child, .. } => {
                        assert!(*child < i)
                    }
                    NiceNode::Join { left, right } => {
                        assert!(*left < i && *right < i);
                        assert_eq!(nice.bags[*left], nice.bags[*right]);
                        assert_eq!(nice.bags[*left], nice.bags[i]);
                    }
                }
            }
        }
    }
}
