//! Edge covers by paths, with a pluggable strategy.
//!
//! The greedy strategy peels maximal paths and is usually small but carries
//! no worst-case count guarantee. The recursive strategy repeats the
//! rotation/chord-class machinery on the cover target itself and is
//! guaranteed to finish within six paths per non-isolated vertex; its
//! threads may reuse host-path edges, so it is not edge-disjoint.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, Path, PathRole, PathSystem};
use crate::nested::{build_chord_classes, index_along_path, thread_chords, ChordKind};
use crate::posa::posa_path;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoverStrategy {
    Greedy,
    RecursiveMk,
    BestOf,
}

impl fmt::Display for CoverStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoverStrategy::Greedy => "greedy",
            CoverStrategy::RecursiveMk => "mk",
            CoverStrategy::BestOf => "best",
        };
        f.write_str(s)
    }
}

impl FromStr for CoverStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(CoverStrategy::Greedy),
            "mk" => Ok(CoverStrategy::RecursiveMk),
            "best" => Ok(CoverStrategy::BestOf),
            other => Err(format!(
                "unknown cover strategy {other:?} (expected greedy, mk, or best)"
            )),
        }
    }
}

/// The outcome of [`cover_edges`]: a family of paths inside the target graph
/// containing every one of its edges.
#[derive(Clone, Debug)]
pub struct CoverReport {
    pub system: PathSystem,
    pub strategy: CoverStrategy,
    /// Unconditional count bound, when the strategy provides one. The
    /// recursive strategy (and therefore also `best`) guarantees six paths
    /// per vertex.
    pub guaranteed_bound: Option<usize>,
    /// Whether no edge appears in two paths of the system.
    pub edge_disjoint: bool,
}

impl CoverReport {
    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }
}

/// Covers every edge of `f` by paths lying inside `f`.
pub fn cover_edges(f: &Graph, strategy: CoverStrategy) -> CoverReport {
    let report = match strategy {
        CoverStrategy::Greedy => CoverReport {
            system: into_system(greedy_cover(f)),
            strategy,
            guaranteed_bound: None,
            edge_disjoint: true,
        },
        CoverStrategy::RecursiveMk => CoverReport {
            system: into_system(recursive_mk_cover(f)),
            strategy,
            guaranteed_bound: Some(6 * f.vertex_count()),
            edge_disjoint: false,
        },
        CoverStrategy::BestOf => {
            let greedy = greedy_cover(f);
            let mk = recursive_mk_cover(f);
            let greedy_won = greedy.len() <= mk.len();
            CoverReport {
                system: into_system(if greedy_won { greedy } else { mk }),
                strategy,
                guaranteed_bound: Some(6 * f.vertex_count()),
                edge_disjoint: greedy_won,
            }
        }
    };
    debug_assert!(
        f.edges()
            .all(|e| report.system.paths().iter().any(|p| p.contains_edge(e))),
        "cover must contain every edge"
    );
    report
}

fn into_system(paths: Vec<Path>) -> PathSystem {
    let mut system = PathSystem::new();
    for p in paths {
        system.insert(p, PathRole::Cover);
    }
    system
}

/// Repeatedly grows a maximal path from the smallest vertex that still has
/// uncovered edges, then removes its edges. Edge-disjoint by construction.
fn greedy_cover(f: &Graph) -> Vec<Path> {
    let n = f.vertex_count();
    let mut rem = f.clone();
    let mut out = Vec::new();
    while rem.edge_count() > 0 {
        let start = (0..n)
            .find(|&v| rem.degree(v) > 0)
            .expect("edges remain, so some vertex has positive degree");
        let mut vertices = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        loop {
            let tail = *vertices.last().expect("nonempty");
            match rem.neighbors(tail).find(|&w| !on_path[w]) {
                Some(w) => {
                    vertices.push(w);
                    on_path[w] = true;
                }
                None => break,
            }
        }
        loop {
            let head = vertices[0];
            match rem.neighbors(head).find(|&w| !on_path[w]) {
                Some(w) => {
                    vertices.insert(0, w);
                    on_path[w] = true;
                }
                None => break,
            }
        }
        for pair in vertices.windows(2) {
            rem.remove_edge(pair[0], pair[1]);
        }
        out.push(Path::new(vertices).expect("start had positive degree"));
    }
    out
}

/// Peels the graph level by level: take a rotation-maximal path, index every
/// vertex that touches its endpoint set, thread each constant-index-sum
/// chord class over the touched edges (host-path edges included), then
/// recurse on the rest. Each level spends at most `2n' ≤ 6|S|` paths and the
/// endpoint sets are disjoint across levels, so the total stays within six
/// paths per non-isolated vertex.
fn recursive_mk_cover(f: &Graph) -> Vec<Path> {
    let mut current = f.clone();
    let mut out = Vec::new();
    while current.edge_count() > 0 {
        let r = posa_path(&current).expect("graph has an edge");
        let s = r.endpoints().clone();
        let h = current.edge_subgraph(|e| e.touches_set(&s));
        let hverts: BTreeSet<usize> = h.edges().flat_map(|e| [e.lo, e.hi]).collect();
        let idx = index_along_path(r.path(), &hverts)
            .expect("every vertex touching the endpoint set lies on the path");
        let classes =
            build_chord_classes(&h.edge_set(), &idx, ChordKind::M).expect("all endpoints indexed");
        for fam in &classes {
            out.push(thread_chords(r.path(), fam, &idx).expect("equal-sum classes are nested"));
        }
        current = current
            .delete_vertices(&s)
            .expect("endpoints are vertices of the graph");
    }
    assert!(
        out.len() <= 6 * f.non_isolated_count(),
        "recursive cover exceeded six paths per non-isolated vertex: {} > 6 * {}",
        out.len(),
        f.non_isolated_count()
    );
    out
}
