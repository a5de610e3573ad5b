//! Exhaustive reference solvers. These define ground truth for the property
//! suites and acceptance tests; everything else in the crate is measured
//! against them.
//!
//! For covers, restricting the search to maximal cliques is safe because
//! enlarging a clique never uncovers an edge. For partitions it is not, so
//! the partition oracle lives in `ecp_alpha` and enumerates all cliques.
//! The asymmetry is pinned by a test below (K4 minus an edge: cover 2,
//! partition 3).

use crate::graph::{maximal_cliques, CliqueFamily, Graph, VertexSet};
use thiserror::Error;

pub use crate::aecc::{aecc_bruteforce, aecc_min};
pub use crate::alpha::alpha_bruteforce;
pub use crate::ecp_alpha::ecp_bruteforce;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
}

/// Minimum edge clique cover via branch and bound over maximal cliques.
/// Guarded at m <= 20.
pub fn ecc_bruteforce(g: &Graph) -> Result<(usize, CliqueFamily), OracleError> {
    if g.m() > 20 {
        return Err(OracleError::SizeGuard(format!("m = {} > 20", g.m())));
    }
    let (size, family) = crate::aecc::aecc_min(g, &g.edge_set())
        .map_err(|e| OracleError::SizeGuard(e.to_string()))?;
    Ok((size, family))
}

/// Minimum vertex clique cover (cliques covering every vertex), by
/// exhaustive branching over maximal cliques; guarded at n <= 12.
pub fn vcc_bruteforce(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > 12 {
        return Err(OracleError::SizeGuard(format!("n = {n} > 12")));
    }
    if n == 0 {
        return Ok(0);
    }
    let cliques = maximal_cliques(g);
    let masks: Vec<u32> = cliques
        .iter()
        .map(|c| c.iter().fold(0u32, |m, v| m | 1 << v))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = n + 1;
    fn branch(covered: u32, full: u32, used: usize, masks: &[u32], best: &mut usize) {
        if covered == full {
            *best = (*best).min(used);
            return;
        }
        if used + 1 >= *best {
            return;
        }
        let v = (!covered & full).trailing_zeros();
        for &m in masks {
            if m >> v & 1 == 1 {
                branch(covered | m, full, used + 1, masks, best);
            }
        }
    }
    branch(0, full, 0, &masks, &mut best);
    Ok(best)
}

/// Second, dumber route for the cover oracle: enumerate subsets of the
/// maximal-clique family by increasing size. Test-only cross-check for the
/// branch-and-bound path; guarded at m <= 10.
pub fn ecc_exhaustive_subsets(g: &Graph) -> Result<usize, OracleError> {
    if g.m() > 10 {
        return Err(OracleError::SizeGuard(format!("m = {} > 10", g.m())));
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Ok(0);
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
    let covers: Vec<u32> = covers.into_iter().filter(|&c| c != 0).collect();
    let full = (1u32 << edges.len()) - 1;
    let mut best = usize::MAX;
    for mask in 0..(1u64 << covers.len()) {
        let mut union = 0u32;
        let mut size = 0usize;
        for (i, &cov) in covers.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union |= cov;
                size += 1;
            }
        }
        if union == full {
            best = best.min(size);
        }
    }
    Ok(best)
}

/// Helper for tests and the CLI: an independent-set check.
pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    let vs = s.as_slice();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}
