//! Exact solvers for covering and partitioning the edges of a graph with
//! cliques, budgeted above the independence number: at most alpha(G) + k
//! cliques, with k the parameter.
//!
//! The crate ships the two above-budget solvers (`ecp_alpha`, `ecc_alpha`),
//! the annotated-cover engines they reduce to (`aecc`), independence-number
//! machinery (`alpha`), structural helpers (`simplicial`, `decomposition`),
//! instance generators and gadget reductions (`generators`), brute-force
//! oracles (`oracle`), and verifiable certificates (`certificate`). Every
//! solver answer is checkable: YES comes with a clique family and an
//! independent set that witness the budget.

use thiserror::Error;

pub mod aecc;
pub mod alpha;
pub mod certificate;
pub mod decomposition;
pub mod ecc_alpha;
pub mod ecp_alpha;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod simplicial;

pub use certificate::{Certificate, CertKind};
pub use graph::{CliqueFamily, EdgeSet, Graph, VertexSet};

/// Errors shared by the above-budget solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The lower bound alpha <= ecc <= ecp needs every vertex to have an
    /// edge, so solvers refuse isolated vertices outright.
    #[error("isolated vertex {0}: strip isolated vertices before solving")]
    IsolatedVertex(u32),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("engine failure: {0}")]
    Engine(String),
}
