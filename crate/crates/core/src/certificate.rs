//! Machine-checkable YES-witnesses: a clique family, an independent set
//! establishing the declared independence number, and the budget parameter.
//! Certificates serialize to a canonical text document so byte equality is
//! meaningful.

use crate::graph::{
    check_cover, check_partition, CliqueFamily, CoverViolation, Graph, VertexSet,
};
use std::fmt;
use thiserror::Error;

pub const CERT_FORMAT: &str = "cliquecert 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertKind {
    Cover,
    Partition,
}

impl fmt::Display for CertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertKind::Cover => write!(f, "cover"),
            CertKind::Partition => write!(f, "partition"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertKind,
    pub cliques: CliqueFamily,
    pub alpha_witness: VertexSet,
    pub declared_alpha: usize,
    pub k: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("witness has {got} vertices but alpha is declared {declared}")]
    WitnessSizeMismatch { got: usize, declared: usize },
    #[error("witness vertices {u} and {v} are adjacent")]
    WitnessNotIndependent { u: u32, v: u32 },
    #[error("witness vertex {v} out of range (n = {n})")]
    WitnessOutOfRange { v: u32, n: usize },
    #[error("{count} cliques exceed the budget alpha + k = {budget}")]
    BudgetExceeded { count: usize, budget: usize },
    #[error("clique family invalid: {0}")]
    Family(#[from] CoverViolation),
    #[error("line {line}: malformed certificate: {msg}")]
    Malformed { line: usize, msg: String },
}

/// Checks every certificate invariant against a host graph.
pub fn check_certificate(g: &Graph, c: &Certificate) -> Result<(), CertificateError> {
    if c.alpha_witness.len() != c.declared_alpha {
        return Err(CertificateError::WitnessSizeMismatch {
            got: c.alpha_witness.len(),
            declared: c.declared_alpha,
        });
    }
    if let Some(v) = c.alpha_witness.iter().find(|&v| v as usize >= g.n()) {
        return Err(CertificateError::WitnessOutOfRange { v, n: g.n() });
    }
    let w = c.alpha_witness.as_slice();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if g.has_edge(w[i], w[j]) {
                return Err(CertificateError::WitnessNotIndependent { u: w[i], v: w[j] });
            }
        }
    }
    let budget = c.declared_alpha + c.k;
    if c.cliques.len() > budget {
        return Err(CertificateError::BudgetExceeded {
            count: c.cliques.len(),
            budget,
        });
    }
    match c.kind {
        CertKind::Cover => check_cover(g, &c.cliques)?,
        CertKind::Partition => check_partition(g, &c.cliques)?,
    }
    Ok(())
}

pub fn verify_certificate(g: &Graph, c: &Certificate) -> bool {
    check_certificate(g, c).is_ok()
}

/// Canonical text form: versioned header, key-value lines, then one `c`
/// line per clique. Cliques are sorted lexicographically.
pub fn serialize_certificate(c: &Certificate) -> String {
    let mut cliques = c.cliques.clone();
    cliques.canonicalize();
    let mut out = String::new();
    out.push_str(CERT_FORMAT);
    out.push('\n');
    out.push_str(&format!("kind {}\n", c.kind));
    out.push_str(&format!("alpha {}\n", c.declared_alpha));
    out.push_str(&format!("k {}\n", c.k));
    out.push_str("witness");
    for v in c.alpha_witness.iter() {
        out.push_str(&format!(" {v}"));
    }
    out.push('\n');
    out.push_str(&format!("cliques {}\n", cliques.len()));
    for clique in cliques.iter() {
        out.push('c');
        for v in clique.iter() {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<Certificate, CertificateError> {
    let mut lines = text.lines().enumerate();
    let mut next_content = |expect: &str| -> Result<(usize, Vec<String>), CertificateError> {
        for (idx, raw) in lines.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<String> = line.split_ascii_whitespace().map(String::from).collect();
            if toks[0] != expect {
                return Err(CertificateError::Malformed {
                    line: idx + 1,
                    msg: format!("expected {expect:?}, found {:?}", toks[0]),
                });
            }
            return Ok((idx + 1, toks));
        }
        Err(CertificateError::Malformed {
            line: 0,
            msg: format!("missing {expect:?} line"),
        })
    };

    let (line, toks) = next_content("cliquecert")?;
    if toks.len() != 2 || toks[1] != "1" {
        return Err(CertificateError::Malformed {
            line,
            msg: "unsupported certificate version".into(),
        });
    }
    let (line, toks) = next_content("kind")?;
    let kind = match toks.get(1).map(String::as_str) {
        Some("cover") => CertKind::Cover,
        Some("partition") => CertKind::Partition,
        other => {
            return Err(CertificateError::Malformed {
                line,
                msg: format!("unknown kind {other:?}"),
            })
        }
    };
    let parse_num = |line: usize, tok: Option<&String>| -> Result<usize, CertificateError> {
        tok.ok_or(CertificateError::Malformed {
            line,
            msg: "missing number".into(),
        })?
        .parse()
        .map_err(|_| CertificateError::Malformed {
            line,
            msg: "not a number".into(),
        })
    };
    let (line, toks) = next_content("alpha")?;
    let declared_alpha = parse_num(line, toks.get(1))?;
    let (line, toks) = next_content("k")?;
    let k = parse_num(line, toks.get(1))?;
    let (line, toks) = next_content("witness")?;
    let mut witness = Vec::new();
    for t in &toks[1..] {
        witness.push(parse_num(line, Some(t))? as u32);
    }
    let (line, toks) = next_content("cliques")?;
    let count = parse_num(line, toks.get(1))?;
    let mut cliques = CliqueFamily::new();
    for _ in 0..count {
        let (line, toks) = next_content("c")?;
        let mut vs = Vec::new();
        for t in &toks[1..] {
            vs.push(parse_num(line, Some(t))? as u32);
        }
        cliques.push(VertexSet::from_unsorted(vs));
    }
    Ok(Certificate {
        kind,
        cliques,
        alpha_witness: VertexSet::from_unsorted(witness),
        declared_alpha,
        k,
    })
}
