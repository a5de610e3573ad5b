//! End-to-end checks of the command-line interface: exit-code contract,
//! deterministic output bytes, certificate writing and verification, and
//! the generate/oracle round trips.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clique-above"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

const NET: &str = "p 6 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 4\ne 2 5\n";
const C4: &str = "p 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n";

#[test]
fn solve_ecp_alpha_yes_with_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "net.graph", NET);
    let cert = dir.path().join("net.cert");
    let out = run(&[
        "solve",
        "ecp-alpha",
        &net,
        "-k",
        "1",
        "--cert",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "YES\nalpha 3\ncliques 4\n");

    let verify = run(&["verify", &net, cert.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0));
    assert_eq!(stdout(&verify), "VALID\n");

    // k = 0 is a no-instance: exit code 1
    let out = run(&["solve", "ecp-alpha", &net, "-k", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NO\n");
}

#[test]
fn solve_ecc_alpha_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.graph", C4);
    let out = run(&["solve", "ecc-alpha", &c4, "-k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NO\n");
    let out = run(&["solve", "ecc-alpha", &c4, "-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "YES\nalpha 2\ncliques 4\n");
}

#[test]
fn every_engine_is_selectable() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(
        dir.path(),
        "diamond.aecc",
        "p 4 5\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\na 0 1\na 1 2\na 1 3\nk 2\n",
    );
    for engine in [
        "auto",
        "k2",
        "bounded-omega",
        "degenerate",
        "treewidth",
        "minor-free",
        "brute",
    ] {
        let out = run(&["solve", "aecc", &inst, "--engine", engine]);
        assert_eq!(out.status.code(), Some(0), "engine {engine}");
        assert!(stdout(&out).starts_with("YES\n"), "engine {engine}");
    }
    let out = run(&["solve", "aecc", &inst, "--engine", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tampered_certificate_is_named_and_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "net.graph", NET);
    let cert_path = dir.path().join("net.cert");
    let out = run(&[
        "solve",
        "ecp-alpha",
        &net,
        "-k",
        "1",
        "--cert",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let original = std::fs::read_to_string(&cert_path).unwrap();
    let tampered = original.replace("c 0 3\n", "c 0 2\n");
    assert_ne!(original, tampered);
    let tampered_path = write(dir.path(), "tampered.cert", &tampered);
    let out = run(&["verify", &net, &tampered_path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stdout(&out).contains("0-3"),
        "diagnostic names the broken pair: {}",
        stdout(&out)
    );
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "net.graph", NET);
    let c1 = dir.path().join("a.cert");
    let c2 = dir.path().join("b.cert");
    let out1 = run(&["solve", "ecp-alpha", &net, "-k", "1", "--cert", c1.to_str().unwrap()]);
    let out2 = run(&["solve", "ecp-alpha", &net, "-k", "1", "--cert", c2.to_str().unwrap()]);
    assert_eq!(out1.stdout, out2.stdout);
    assert_eq!(
        std::fs::read(&c1).unwrap(),
        std::fs::read(&c2).unwrap()
    );

    let g1 = dir.path().join("r1.graph");
    let g2 = dir.path().join("r2.graph");
    for g in [&g1, &g2] {
        let out = run(&[
            "generate",
            "random-graph",
            "-n",
            "12",
            "-m",
            "20",
            "--seed",
            "7",
            "-o",
            g.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&g1).unwrap(), std::fs::read(&g2).unwrap());
}

#[test]
fn oracle_subcommand_values() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.graph", C4);
    let out = run(&["oracle", "ecp", &c4]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("ecp 4\n"));
    let out = run(&["oracle", "alpha", &c4]);
    assert_eq!(stdout(&out), "alpha 2\nwitness 0 2\n");

    // guard violations surface as exit 2 with a message
    let mut big = String::from("p 30 29\n");
    for v in 1..30 {
        big.push_str(&format!("e 0 {v}\n"));
    }
    let big = write(dir.path(), "big.graph", &big);
    let out = run(&["oracle", "ecp", &big]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_then_solve_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.graph", C4);

    // pendant expansion of C4 partitions into 4 + 4 cliques (k = 4, not 3)
    let expanded = dir.path().join("c4x.graph");
    let out = run(&["generate", "pendant-expand", &c4, "-o", expanded.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["solve", "ecp-alpha", expanded.to_str().unwrap(), "-k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["solve", "ecp-alpha", expanded.to_str().unwrap(), "-k", "3"]);
    assert_eq!(out.status.code(), Some(1));

    // vcc gadget: C4 has a vertex clique cover of size 2
    let gadget = dir.path().join("c4.aecc");
    let out = run(&[
        "generate",
        "vcc-to-aecc",
        &c4,
        "-k",
        "2",
        "-o",
        gadget.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["solve", "aecc", gadget.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["solve", "aecc", gadget.to_str().unwrap(), "-k", "1"]);
    assert_eq!(out.status.code(), Some(1));

    // chain the second gadget and solve the produced above-alpha instance
    let chained = dir.path().join("chained.graph");
    let out = run(&[
        "generate",
        "aecc-to-eccalpha",
        gadget.to_str().unwrap(),
        "-o",
        chained.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "k 1\n");
    let out = run(&[
        "solve",
        "ecc-alpha",
        chained.to_str().unwrap(),
        "-k",
        "1",
        "--engine",
        "bounded-omega",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn isolated_vertices_are_a_distinct_error() {
    let dir = tempfile::tempdir().unwrap();
    let lonely = write(dir.path(), "lonely.graph", "p 3 1\ne 0 1\n");
    for problem in ["ecc-alpha", "ecp-alpha"] {
        let out = run(&["solve", problem, &lonely, "-k", "1"]);
        assert_eq!(out.status.code(), Some(2), "{problem}");
        let err = String::from_utf8_lossy(&out.stderr).into_owned();
        assert!(err.contains("isolated"), "{problem}: {err}");
    }
}

#[test]
fn solve_alpha_modes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.graph", C4);
    let out = run(&["solve", "alpha", &c4]);
    assert_eq!(stdout(&out), "alpha 2\nwitness 0 2\n");
    for engine in ["brute", "two-degenerate", "treewidth"] {
        let out = run(&["solve", "alpha", &c4, "-k", "2", "--engine", engine]);
        assert_eq!(out.status.code(), Some(0), "{engine}");
        let out = run(&["solve", "alpha", &c4, "-k", "3", "--engine", engine]);
        assert_eq!(out.status.code(), Some(1), "{engine}");
    }
}
