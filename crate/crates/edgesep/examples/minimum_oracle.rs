//! Exact minimum separating families on tiny graphs, next to the size the
//! linear construction actually spends there.
//!
//! Run with: cargo run --example minimum_oracle

use edgesep::cover::CoverStrategy;
use edgesep::families;
use edgesep::separate;
use edgesep::verify::{exhaustive_min_separator, OracleLimits, OracleMode, OracleOutcome};

fn main() {
    let instances = [
        ("clique:3", families::clique(3)),
        ("clique:4", families::clique(4)),
        ("path:5", families::path_graph(5)),
        ("cycle:5", families::cycle_graph(5)),
        ("star bipartite:1,3", families::complete_bipartite(1, 3)),
        ("bipartite:2,2", families::complete_bipartite(2, 2)),
    ];
    for (name, g) in instances {
        let (system, _) = separate(&g, CoverStrategy::BestOf);
        for mode in [OracleMode::Strong, OracleMode::Weak] {
            match exhaustive_min_separator(&g, mode, OracleLimits::default()) {
                OracleOutcome::Found(r) => {
                    print!("{name} [{mode}]: minimum {}", r.size);
                    if mode == OracleMode::Strong {
                        print!(" (construction used {})", system.len());
                    }
                    println!();
                    for p in r.system.paths() {
                        println!("    {p}");
                    }
                }
                OracleOutcome::Timeout => println!("{name} [{mode}]: TIMEOUT"),
            }
        }
    }
}
