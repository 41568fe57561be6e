//! Render a separated graph as DOT, one color per path.
//!
//! Run with: cargo run --example export_dot [OUT.dot]

use edgesep::cover::CoverStrategy;
use edgesep::families;
use edgesep::formats::write_dot;
use edgesep::separate;

fn main() {
    let g = families::cycle_graph(8);
    let (system, _) = separate(&g, CoverStrategy::BestOf);
    let dot = write_dot(&g, Some(&system));
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, dot).expect("writable output path");
            println!("wrote {path} ({} paths)", system.len());
        }
        None => print!("{dot}"),
    }
}
