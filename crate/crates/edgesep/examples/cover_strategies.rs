//! Compare the edge-cover strategies: greedy peeling (small, edge-disjoint,
//! no guarantee) against the recursive construction (six paths per vertex,
//! guaranteed).
//!
//! Run with: cargo run --example cover_strategies

use edgesep::cover::{cover_edges, CoverStrategy};
use edgesep::families;
use edgesep::verify::check_coverage;

fn main() {
    let instances = [
        ("clique:15", families::clique(15)),
        ("triangles:6", families::disjoint_triangles(6)),
        ("cycle:30", families::cycle_graph(30)),
        ("gnp:30,0.3,1", families::gnp(30, 0.3, 1)),
    ];
    println!(
        "{:<14} {:>4} {:>4} {:>7} {:>5} {:>5} {:>9}",
        "instance", "n", "m", "greedy", "mk", "best", "mk bound"
    );
    for (name, g) in instances {
        let mut counts = Vec::new();
        for strategy in [
            CoverStrategy::Greedy,
            CoverStrategy::RecursiveMk,
            CoverStrategy::BestOf,
        ] {
            let report = cover_edges(&g, strategy);
            assert!(
                check_coverage(&report.system, &g).is_empty(),
                "every edge must be covered"
            );
            counts.push(report.len());
        }
        println!(
            "{:<14} {:>4} {:>4} {:>7} {:>5} {:>5} {:>9}",
            name,
            g.vertex_count(),
            g.edge_count(),
            counts[0],
            counts[1],
            counts[2],
            6 * g.vertex_count()
        );
    }
}
