//! Command-line front end: solve, verify, generate, and oracle subcommands
//! with deterministic, certificate-producing output.
//!
//! Exit codes: 0 = YES (or success), 1 = NO, 2 = error or invalid input.

use clap::{Parser, Subcommand};
use clique_above::aecc::{self, AeccEngine, AnnotatedInstance};
use clique_above::alpha;
use clique_above::certificate::{
    check_certificate, parse_certificate, serialize_certificate, CertKind, Certificate,
};
use clique_above::decomposition::min_fill_decomposition;
use clique_above::ecc_alpha::{solve_ecc_alpha, solve_ecc_alpha_class, ClassHint};
use clique_above::ecp_alpha::{ecp_exact, solve_ecp_alpha};
use clique_above::generators;
use clique_above::graph::{check_partition, parse_graph, serialize_graph, VertexSet};
use clique_above::oracle;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "clique-above",
    about = "Exact edge clique cover/partition solvers budgeted above the independence number",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a problem on an instance file
    Solve {
        /// One of: ecc-alpha, ecp-alpha, aecc, ecp, ecc, alpha
        problem: String,
        instance: PathBuf,
        /// Budget parameter (above alpha for the *-alpha problems)
        #[arg(short)]
        k: Option<usize>,
        /// Engine for annotated subproblems; see README for the list
        #[arg(long, default_value = "auto")]
        engine: String,
        /// Write a verifiable certificate for YES answers
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Upper bound on worker threads (current engines are sequential)
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check a certificate against an instance; exit 0 iff valid
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
    },
    /// Produce an instance from a gadget or a random family
    Generate {
        /// One of: vcc-to-aecc, aecc-to-eccalpha, biclique-to-eccalpha,
        /// pendant-expand, random-graph, random-degenerate
        gadget: String,
        /// Source instance (not used by the random families)
        source: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        m: Option<usize>,
        #[arg(short)]
        d: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run a brute-force reference solver (size-guarded)
    Oracle {
        /// One of: ecc, ecp, alpha, aecc
        problem: String,
        instance: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, content: &str) -> Result<(), String> {
    std::fs::write(path, content).map_err(|e| format!("{}: {e}", path.display()))
}

fn require_k(k: Option<usize>) -> Result<usize, String> {
    k.ok_or_else(|| "this problem needs -k".to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Solve {
            problem,
            instance,
            k,
            engine,
            cert,
            threads,
        } => {
            if threads == 0 {
                return Err("--threads must be at least 1".into());
            }
            solve(&problem, &instance, k, &engine, cert.as_deref())
        }
        Cmd::Verify {
            instance,
            certificate,
        } => verify(&instance, &certificate),
        Cmd::Generate {
            gadget,
            source,
            seed,
            k,
            n,
            m,
            d,
            output,
        } => generate(&gadget, source.as_deref(), seed, k, n, m, d, &output),
        Cmd::Oracle { problem, instance } => run_oracle(&problem, &instance),
    }
}

fn emit_certificate(cert: &Certificate, path: Option<&Path>) -> Result<(), String> {
    if let Some(path) = path {
        write_file(path, &serialize_certificate(cert))?;
    }
    Ok(())
}

fn yes_no(found: bool) -> ExitCode {
    if found {
        println!("YES");
        ExitCode::SUCCESS
    } else {
        println!("NO");
        ExitCode::from(1)
    }
}

fn solve(
    problem: &str,
    instance: &Path,
    k: Option<usize>,
    engine: &str,
    cert_out: Option<&Path>,
) -> Result<ExitCode, String> {
    let text = read(instance)?;
    match problem {
        "ecc-alpha" => {
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            let k = require_k(k)?;
            let result = if let Some(hint) = ClassHint::parse(engine) {
                solve_ecc_alpha_class(&g, k, hint).map_err(|e| e.to_string())?
            } else {
                let engine = AeccEngine::parse(engine).map_err(|e| e.to_string())?;
                solve_ecc_alpha(&g, k, engine).map_err(|e| e.to_string())?
            };
            match result {
                Some(cert) => {
                    println!("YES");
                    println!("alpha {}", cert.declared_alpha);
                    println!("cliques {}", cert.cliques.len());
                    emit_certificate(&cert, cert_out)?;
                    Ok(ExitCode::SUCCESS)
                }
                None => Ok(yes_no(false)),
            }
        }
        "ecp-alpha" => {
            if engine != "auto" {
                return Err(format!("unknown engine {engine:?} for ecp-alpha"));
            }
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            let k = require_k(k)?;
            match solve_ecp_alpha(&g, k).map_err(|e| e.to_string())? {
                Some(cert) => {
                    println!("YES");
                    println!("alpha {}", cert.declared_alpha);
                    println!("cliques {}", cert.cliques.len());
                    emit_certificate(&cert, cert_out)?;
                    Ok(ExitCode::SUCCESS)
                }
                None => Ok(yes_no(false)),
            }
        }
        "aecc" => {
            let mut inst = aecc::parse_annotated(&text).map_err(|e| e.to_string())?;
            if let Some(k) = k {
                inst.k = k;
            }
            if cert_out.is_some() {
                return Err("certificates cover all edges; aecc does not emit one".into());
            }
            let engine = AeccEngine::parse(engine).map_err(|e| e.to_string())?;
            match engine.run(&inst).map_err(|e| e.to_string())? {
                Some(family) => {
                    assert!(
                        inst.b
                            .iter()
                            .all(|(u, v)| family.iter().any(|c| c.contains(u) && c.contains(v))),
                        "produced family fails to cover the annotated edges"
                    );
                    println!("YES");
                    println!("cliques {}", family.len());
                    Ok(ExitCode::SUCCESS)
                }
                None => Ok(yes_no(false)),
            }
        }
        "ecp" => {
            if engine != "auto" {
                return Err(format!("unknown engine {engine:?} for ecp"));
            }
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            let k = require_k(k)?;
            match ecp_exact(&g, k) {
                Some(family) => {
                    check_partition(&g, &family)
                        .expect("produced family fails partition verification");
                    println!("YES");
                    println!("cliques {}", family.len());
                    let cert = Certificate {
                        kind: CertKind::Partition,
                        cliques: family,
                        alpha_witness: VertexSet::new(),
                        declared_alpha: 0,
                        k,
                    };
                    check_certificate(&g, &cert).expect("certificate must verify");
                    emit_certificate(&cert, cert_out)?;
                    Ok(ExitCode::SUCCESS)
                }
                None => Ok(yes_no(false)),
            }
        }
        "ecc" => {
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            let k = require_k(k)?;
            let engine = AeccEngine::parse(engine).map_err(|e| e.to_string())?;
            let inst =
                AnnotatedInstance::new(g.clone(), g.edge_set(), k).map_err(|e| e.to_string())?;
            match engine.run(&inst).map_err(|e| e.to_string())? {
                Some(family) => {
                    println!("YES");
                    println!("cliques {}", family.len());
                    let cert = Certificate {
                        kind: CertKind::Cover,
                        cliques: family,
                        alpha_witness: VertexSet::new(),
                        declared_alpha: 0,
                        k,
                    };
                    check_certificate(&g, &cert).expect("certificate must verify");
                    emit_certificate(&cert, cert_out)?;
                    Ok(ExitCode::SUCCESS)
                }
                None => Ok(yes_no(false)),
            }
        }
        "alpha" => {
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            match k {
                None => {
                    if engine != "auto" && engine != "brute" {
                        return Err(
                            "exact alpha needs the brute engine (pass -k to decide)".into()
                        );
                    }
                    let (a, witness) = alpha::alpha_bruteforce(&g).map_err(|e| e.to_string())?;
                    println!("alpha {a}");
                    print!("witness");
                    for v in witness.iter() {
                        print!(" {v}");
                    }
                    println!();
                    Ok(ExitCode::SUCCESS)
                }
                Some(k) => {
                    let found = match engine {
                        "auto" | "brute" => {
                            let (a, _) = alpha::alpha_bruteforce(&g).map_err(|e| e.to_string())?;
                            a >= k
                        }
                        "two-degenerate" => alpha::alpha_2degenerate(&g, k)
                            .map_err(|e| e.to_string())?
                            .is_some(),
                        "treewidth" => {
                            let td = min_fill_decomposition(&g);
                            alpha::alpha_treewidth_dp(&g, &td, k).map_err(|e| e.to_string())?
                        }
                        other => return Err(format!("unknown engine {other:?} for alpha")),
                    };
                    Ok(yes_no(found))
                }
            }
        }
        other => Err(format!("unknown problem {other:?}")),
    }
}

fn verify(instance: &Path, certificate: &Path) -> Result<ExitCode, String> {
    let g = parse_graph(&read(instance)?).map_err(|e| e.to_string())?;
    let cert = parse_certificate(&read(certificate)?).map_err(|e| e.to_string())?;
    match check_certificate(&g, &cert) {
        Ok(()) => {
            println!("VALID");
            Ok(ExitCode::SUCCESS)
        }
        Err(violation) => {
            println!("INVALID: {violation}");
            Ok(ExitCode::from(2))
        }
    }
}

fn provenance_header(p: &generators::Provenance) -> String {
    format!(
        "# gadget: {}\n# source: {}\n# equivalence: {}\n",
        p.gadget, p.source, p.equivalence
    )
}

#[allow(clippy::too_many_arguments)]
fn generate(
    gadget: &str,
    source: Option<&Path>,
    seed: u64,
    k: Option<usize>,
    n: Option<usize>,
    m: Option<usize>,
    d: Option<usize>,
    output: &Path,
) -> Result<ExitCode, String> {
    let need_source = |what: &str| -> Result<String, String> {
        source
            .ok_or_else(|| format!("{what} needs a source instance"))
            .and_then(read)
    };
    match gadget {
        "vcc-to-aecc" => {
            let g = parse_graph(&need_source("vcc-to-aecc")?).map_err(|e| e.to_string())?;
            let k = require_k(k)?;
            let out = generators::gadget_vcc_to_aecc(&g, k);
            let body = aecc::serialize_annotated(&out.instance);
            write_file(
                output,
                &format!("{}{}", provenance_header(&out.provenance), body),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        "aecc-to-eccalpha" => {
            let inst = aecc::parse_annotated(&need_source("aecc-to-eccalpha")?)
                .map_err(|e| e.to_string())?;
            let out = generators::gadget_aecc_to_eccalpha(&inst).map_err(|e| e.to_string())?;
            let (g2, k2) = &out.instance;
            let body = serialize_graph(g2);
            write_file(
                output,
                &format!("{}# k: {k2}\n{body}", provenance_header(&out.provenance)),
            )?;
            println!("k {k2}");
            Ok(ExitCode::SUCCESS)
        }
        "biclique-to-eccalpha" => {
            let g =
                parse_graph(&need_source("biclique-to-eccalpha")?).map_err(|e| e.to_string())?;
            let k = require_k(k)?;
            let out = generators::gadget_biclique_to_eccalpha(&g, k).map_err(|e| e.to_string())?;
            let (g2, k2) = &out.instance;
            let body = serialize_graph(g2);
            write_file(
                output,
                &format!("{}# k: {k2}\n{body}", provenance_header(&out.provenance)),
            )?;
            println!("k {k2}");
            Ok(ExitCode::SUCCESS)
        }
        "pendant-expand" => {
            let g = parse_graph(&need_source("pendant-expand")?).map_err(|e| e.to_string())?;
            let out = generators::pendant_expand(&g);
            write_file(output, &serialize_graph(&out))?;
            Ok(ExitCode::SUCCESS)
        }
        "random-graph" => {
            let n = n.ok_or("random-graph needs -n")?;
            let m = m.ok_or("random-graph needs -m")?;
            let g = generators::random_graph(n, m, seed).map_err(|e| e.to_string())?;
            write_file(output, &serialize_graph(&g))?;
            Ok(ExitCode::SUCCESS)
        }
        "random-degenerate" => {
            let n = n.ok_or("random-degenerate needs -n")?;
            let d = d.ok_or("random-degenerate needs -d")?;
            let g = generators::random_degenerate(n, d, seed).map_err(|e| e.to_string())?;
            write_file(output, &serialize_graph(&g))?;
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown gadget {other:?}")),
    }
}

fn run_oracle(problem: &str, instance: &Path) -> Result<ExitCode, String> {
    let text = read(instance)?;
    let print_family = |family: &clique_above::CliqueFamily| {
        for c in family.iter() {
            print!("c");
            for v in c.iter() {
                print!(" {v}");
            }
            println!();
        }
    };
    match problem {
        "ecc" => {
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            let (size, family) = oracle::ecc_bruteforce(&g).map_err(|e| e.to_string())?;
            println!("ecc {size}");
            print_family(&family);
            Ok(ExitCode::SUCCESS)
        }
        "ecp" => {
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            let (size, family) = oracle::ecp_bruteforce(&g).map_err(|e| e.to_string())?;
            println!("ecp {size}");
            print_family(&family);
            Ok(ExitCode::SUCCESS)
        }
        "alpha" => {
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            let (a, witness) = oracle::alpha_bruteforce(&g).map_err(|e| e.to_string())?;
            println!("alpha {a}");
            print!("witness");
            for v in witness.iter() {
                print!(" {v}");
            }
            println!();
            Ok(ExitCode::SUCCESS)
        }
        "aecc" => {
            let inst = aecc::parse_annotated(&text).map_err(|e| e.to_string())?;
            let (size, family) = oracle::aecc_min(&inst.g, &inst.b).map_err(|e| e.to_string())?;
            println!("aecc {size}");
            print_family(&family);
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown oracle problem {other:?}")),
    }
}
