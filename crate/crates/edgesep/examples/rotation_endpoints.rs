//! Walk through the rotation machinery on a small graph: the maximal path,
//! the derived endpoint set, the recorded exchanges, and the neighborhood
//! bound that makes the peeling budget work.
//!
//! Run with: cargo run --example rotation_endpoints

use edgesep::families;
use edgesep::posa::{posa_path, Parent};

fn main() {
    let g = families::gnp(12, 0.3, 7);
    println!(
        "graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );

    let r = posa_path(&g).expect("the graph has edges");
    println!("rotation-maximal path: {}", r.path());
    println!(
        "fixed end v = {}, mobile end u = {}",
        r.fixed_end(),
        r.mobile_end()
    );
    println!("derived endpoints S = {:?}", r.endpoints());
    println!("boundary N(S)      = {:?}", r.boundary());
    println!(
        "|N(S)| = {} <= 2|S| = {}",
        r.boundary().len(),
        2 * r.endpoints().len()
    );

    println!("\nhow each endpoint was first reached:");
    for &x in r.endpoints() {
        match r.parent(x).expect("every endpoint has a record") {
            Parent::Root => println!("  {x}: mobile end of the base path"),
            Parent::Exchange {
                from,
                removed,
                added,
            } => println!("  {x}: from {from}, removed {removed}, added {added}"),
        }
        let q = r.derived_path(x).expect("x is a derived endpoint");
        println!("     derived path: {q}");
    }
}
