//! End-to-end checks of the command-line surface: file round trips, exit
//! codes, and the frozen benchmark rows.

use std::path::Path;
use std::process::Command;

use edgesep::cli::{EXIT_OK, EXIT_TIMEOUT, EXIT_USAGE, EXIT_VERIFICATION_FAILURE};

fn run(args: &[&str]) -> i32 {
    let mut full = vec!["edgesep"];
    full.extend_from_slice(args);
    edgesep::cli::run(full)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_edgesep"))
}

#[test]
fn gen_separate_verify_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k6.edges");
    let system = dir.path().join("k6.paths");
    let dot = dir.path().join("k6.dot");

    assert_eq!(
        run(&["gen", "clique:6", "--output", graph.to_str().unwrap()]),
        EXIT_OK
    );
    let text = std::fs::read_to_string(&graph).unwrap();
    assert!(text.starts_with("#n 6\n"));
    assert_eq!(text.lines().count(), 1 + 15);

    assert_eq!(
        run(&[
            "separate",
            graph.to_str().unwrap(),
            "--output",
            system.to_str().unwrap(),
            "--dot",
            dot.to_str().unwrap(),
        ]),
        EXIT_OK
    );
    let doc = std::fs::read_to_string(&system).unwrap();
    assert!(doc.starts_with("6 15 "));
    assert!(doc.contains("bound19="));
    assert!(doc.contains("verified=true"));
    assert!(std::fs::read_to_string(&dot)
        .unwrap()
        .contains("graph edgesep {"));

    assert_eq!(
        run(&["verify", graph.to_str().unwrap(), system.to_str().unwrap()]),
        EXIT_OK
    );
    assert_eq!(
        run(&[
            "verify",
            graph.to_str().unwrap(),
            system.to_str().unwrap(),
            "--mode",
            "weak",
        ]),
        EXIT_OK
    );
}

#[test]
fn verify_reports_violations_with_exit_code_one() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("p3.edges");
    let system = dir.path().join("bad.paths");
    assert_eq!(
        run(&["gen", "path:3", "--output", graph.to_str().unwrap()]),
        EXIT_OK
    );
    // One Hamiltonian path cannot separate two adjacent edges.
    std::fs::write(&system, "3 2 1\n0 1 2\n").unwrap();
    assert_eq!(
        run(&["verify", graph.to_str().unwrap(), system.to_str().unwrap()]),
        EXIT_VERIFICATION_FAILURE
    );
}

#[test]
fn verify_treats_invalid_paths_as_verification_failure() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("p3.edges");
    let system = dir.path().join("bad.paths");
    run(&["gen", "path:3", "--output", graph.to_str().unwrap()]);
    // 0-2 is not an edge of the two-edge path.
    std::fs::write(&system, "3 2 1\n0 2\n").unwrap();
    assert_eq!(
        run(&["verify", graph.to_str().unwrap(), system.to_str().unwrap()]),
        EXIT_VERIFICATION_FAILURE
    );
}

#[test]
fn verify_rejects_mismatched_header() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("p3.edges");
    let system = dir.path().join("other.paths");
    run(&["gen", "path:3", "--output", graph.to_str().unwrap()]);
    std::fs::write(&system, "4 2 1\n0 1\n").unwrap();
    assert_eq!(
        run(&["verify", graph.to_str().unwrap(), system.to_str().unwrap()]),
        EXIT_VERIFICATION_FAILURE
    );
}

#[test]
fn cover_writes_a_document_with_strategy_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("tri.edges");
    let out = dir.path().join("tri.cover");
    run(&["gen", "triangles:2", "--output", graph.to_str().unwrap()]);
    assert_eq!(
        run(&[
            "cover",
            graph.to_str().unwrap(),
            "--strategy",
            "greedy",
            "--output",
            out.to_str().unwrap(),
        ]),
        EXIT_OK
    );
    let doc = std::fs::read_to_string(&out).unwrap();
    assert!(doc.contains("strategy=greedy"));
    assert!(doc.contains("edge_disjoint=true"));
    assert!(doc.contains("covered=true"));
}

#[test]
fn oracle_prints_minimum_and_times_out_with_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("tri.edges");
    run(&["gen", "triangles:1", "--output", graph.to_str().unwrap()]);
    assert_eq!(run(&["oracle", graph.to_str().unwrap()]), EXIT_OK);

    let big = dir.path().join("k7.edges");
    run(&["gen", "clique:7", "--output", big.to_str().unwrap()]);
    assert_eq!(
        run(&["oracle", big.to_str().unwrap(), "--max-paths", "10"]),
        EXIT_TIMEOUT
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["gen", "blob:9"]), EXIT_USAGE);
    assert_eq!(run(&["separate", "/nonexistent/input.edges"]), EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]), EXIT_USAGE);
}

#[test]
fn bench_rows_match_frozen_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    assert_eq!(
        run(&[
            "bench",
            "clique:2",
            "edgeless:10",
            "clique:20",
            "gnp:50,0.2,1",
            "--stable-millis",
            "--output",
            csv.to_str().unwrap(),
        ]),
        EXIT_OK
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,m,system_size,ratio,bound19,strategy,millis,verified"
    );
    assert_eq!(
        lines.next().unwrap(),
        "clique:2,2,1,1,0.500000,true,best,0,true"
    );
    assert_eq!(
        lines.next().unwrap(),
        "edgeless:10,10,0,0,0.000000,true,best,0,true"
    );
    assert_eq!(
        lines.next().unwrap(),
        "clique:20,20,190,118,6.100000,false,best,0,true"
    );
    assert_eq!(
        lines.next().unwrap(),
        "\"gnp:50,0.2,1\",50,229,220,4.700000,true,best,0,true"
    );
    assert_eq!(lines.next(), None);
}

#[test]
fn gen_writes_edge_lists_that_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.edges");
    for family in ["edgeless:10", "gnp:15,0.4,3", "bipartite:2,3"] {
        assert_eq!(
            run(&["gen", family, "--output", out.to_str().unwrap()]),
            EXIT_OK
        );
        let g = edgesep::Graph::parse_edge_list(&std::fs::read_to_string(&out).unwrap()).unwrap();
        if family == "edgeless:10" {
            assert_eq!(g.vertex_count(), 10);
            assert_eq!(g.edge_count(), 0);
        }
    }
}

/// The installed binary behaves like the in-process entry point.
#[test]
fn binary_smoke_test() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c9.edges");
    let system = dir.path().join("c9.paths");
    let status = bin()
        .args(["gen", "cycle:9", "--output", graph.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let status = bin()
        .args([
            "separate",
            graph.to_str().unwrap(),
            "--strategy",
            "mk",
            "--output",
            system.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let output = bin()
        .args(["verify", graph.to_str().unwrap(), system.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).starts_with("ok:"));
    assert!(exists_and_nonempty(&graph) && exists_and_nonempty(&system));
}

fn exists_and_nonempty(p: &Path) -> bool {
    std::fs::metadata(p).map(|m| m.len() > 0).unwrap_or(false)
}
