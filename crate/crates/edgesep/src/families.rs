//! Deterministic graph generators for benchmarks and tests.
//!
//! Every generator is a pure function of its arguments; `gnp` draws edges
//! from a counter-based ChaCha stream so the same seed always yields the
//! same graph, on any platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("malformed family descriptor {descriptor:?}: {reason}")]
    Malformed { descriptor: String, reason: String },
}

/// Complete graph on `n` vertices.
pub fn clique(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for w in u + 1..n {
            g.add_edge(u, w).expect("in range");
        }
    }
    g
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for w in a..a + b {
            g.add_edge(u, w).expect("in range");
        }
    }
    g
}

/// `t` vertex-disjoint triangles on `3t` vertices.
pub fn disjoint_triangles(t: usize) -> Graph {
    let mut g = Graph::new(3 * t);
    for i in 0..t {
        let base = 3 * i;
        g.add_edge(base, base + 1).expect("in range");
        g.add_edge(base + 1, base + 2).expect("in range");
        g.add_edge(base, base + 2).expect("in range");
    }
    g
}

/// Path 0 – 1 – ⋯ – (n−1). For `n ≤ 1` the graph is edgeless.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v).expect("in range");
    }
    g
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut g = path_graph(n);
    g.add_edge(n - 1, 0).expect("in range");
    g
}

/// Edgeless graph on `n` vertices.
pub fn edgeless(n: usize) -> Graph {
    Graph::new(n)
}

/// Erdős–Rényi graph: each pair independently an edge with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for w in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, w).expect("in range");
            }
        }
    }
    g
}

/// A parsed family descriptor; [`FamilySpec::generate`] realizes it.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Clique(usize),
    CompleteBipartite(usize, usize),
    Triangles(usize),
    PathGraph(usize),
    CycleGraph(usize),
    Edgeless(usize),
    Gnp { n: usize, p: f64, seed: u64 },
}

impl FamilySpec {
    /// Parses descriptors of the form `name:args`:
    ///
    /// - `clique:N`
    /// - `bipartite:A,B`
    /// - `triangles:T`
    /// - `path:N`
    /// - `cycle:N` (N ≥ 3)
    /// - `edgeless:N`
    /// - `gnp:N,P` or `gnp:N,P,SEED` (without an inline seed, `default_seed`
    ///   applies)
    pub fn parse(descriptor: &str, default_seed: u64) -> Result<Self, FamilyError> {
        let bad = |reason: &str| FamilyError::Malformed {
            descriptor: descriptor.to_string(),
            reason: reason.to_string(),
        };
        let (name, args) = descriptor
            .split_once(':')
            .ok_or_else(|| bad("expected name:args"))?;
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad("expected an integer"));
        match name {
            "clique" if parts.len() == 1 => Ok(FamilySpec::Clique(int(parts[0])?)),
            "bipartite" if parts.len() == 2 => Ok(FamilySpec::CompleteBipartite(
                int(parts[0])?,
                int(parts[1])?,
            )),
            "triangles" if parts.len() == 1 => Ok(FamilySpec::Triangles(int(parts[0])?)),
            "path" if parts.len() == 1 => Ok(FamilySpec::PathGraph(int(parts[0])?)),
            "cycle" if parts.len() == 1 => {
                let n = int(parts[0])?;
                if n < 3 {
                    return Err(bad("a cycle needs at least three vertices"));
                }
                Ok(FamilySpec::CycleGraph(n))
            }
            "edgeless" if parts.len() == 1 => Ok(FamilySpec::Edgeless(int(parts[0])?)),
            "gnp" if parts.len() == 2 || parts.len() == 3 => {
                let n = int(parts[0])?;
                let p: f64 = parts[1]
                    .parse()
                    .map_err(|_| bad("expected a probability"))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad("probability must lie in [0, 1]"));
                }
                let seed = if parts.len() == 3 {
                    parts[2]
                        .parse::<u64>()
                        .map_err(|_| bad("expected a seed"))?
                } else {
                    default_seed
                };
                Ok(FamilySpec::Gnp { n, p, seed })
            }
            _ => Err(bad("unknown family or wrong number of arguments")),
        }
    }

    pub fn generate(&self) -> Graph {
        match *self {
            FamilySpec::Clique(n) => clique(n),
            FamilySpec::CompleteBipartite(a, b) => complete_bipartite(a, b),
            FamilySpec::Triangles(t) => disjoint_triangles(t),
            FamilySpec::PathGraph(n) => path_graph(n),
            FamilySpec::CycleGraph(n) => cycle_graph(n),
            FamilySpec::Edgeless(n) => edgeless(n),
            FamilySpec::Gnp { n, p, seed } => gnp(n, p, seed),
        }
    }

    /// Canonical descriptor string; `gnp` labels always carry their seed.
    pub fn label(&self) -> String {
        match *self {
            FamilySpec::Clique(n) => format!("clique:{n}"),
            FamilySpec::CompleteBipartite(a, b) => format!("bipartite:{a},{b}"),
            FamilySpec::Triangles(t) => format!("triangles:{t}"),
            FamilySpec::PathGraph(n) => format!("path:{n}"),
            FamilySpec::CycleGraph(n) => format!("cycle:{n}"),
            FamilySpec::Edgeless(n) => format!("edgeless:{n}"),
            FamilySpec::Gnp { n, p, seed } => format!("gnp:{n},{p},{seed}"),
        }
    }
}
