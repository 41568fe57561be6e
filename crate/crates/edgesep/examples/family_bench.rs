//! A small benchmark sweep over named families, printing one verified row
//! per instance. The `bench` subcommand produces the same table as CSV.
//!
//! Run with: cargo run --release --example family_bench

use std::time::Instant;

use edgesep::cover::CoverStrategy;
use edgesep::families::FamilySpec;
use edgesep::separate;
use edgesep::verify::check_strong_separation;

fn main() {
    let corpus = [
        "clique:20",
        "clique:30",
        "bipartite:10,10",
        "bipartite:15,15",
        "triangles:10",
        "path:100",
        "cycle:100",
        "gnp:60,0.1,1",
        "gnp:60,0.3,1",
        "gnp:100,0.2,1",
    ];
    println!(
        "{:<16} {:>5} {:>6} {:>6} {:>7} {:>8} {:>7}",
        "family", "n", "m", "paths", "ratio", "bound19", "millis"
    );
    for descriptor in corpus {
        let spec = FamilySpec::parse(descriptor, 0).expect("descriptor is well-formed");
        let g = spec.generate();
        let started = Instant::now();
        let (system, certificate) = separate(&g, CoverStrategy::BestOf);
        let violations = check_strong_separation(&system, &g).expect("paths are valid");
        assert!(violations.is_empty(), "{descriptor}: verification failed");
        println!(
            "{:<16} {:>5} {:>6} {:>6} {:>7.3} {:>8} {:>7}",
            spec.label(),
            g.vertex_count(),
            g.edge_count(),
            system.len(),
            certificate.realized_ratio,
            certificate.bound_19_satisfied,
            started.elapsed().as_millis()
        );
    }
}
