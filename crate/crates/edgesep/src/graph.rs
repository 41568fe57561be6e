//! Simple undirected graphs over dense integer vertex ids, plus the [`Path`]
//! and [`PathSystem`] types that every construction in this crate produces.
//!
//! Vertex ids are `0..n-1`. Deleting vertices keeps the id space intact (the
//! deleted ids merely become isolated), so paths built inside a subgraph are
//! valid verbatim in the original graph. All values are immutable after
//! construction and safe to share across threads.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

/// Errors from direct graph construction and vertex-set operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Errors from [`Graph::parse_edge_list`], each naming the offending line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected two vertex ids, got {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex-count directive {declared} is smaller than vertex id {max_id} used by an edge")]
    BadDirective {
        line: usize,
        declared: usize,
        max_id: usize,
    },
}

/// An undirected edge, stored with `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeKey {
    pub lo: usize,
    pub hi: usize,
}

impl EdgeKey {
    /// Normalizes the endpoint order. Panics on a self-loop, which no caller
    /// constructs: every external input is validated at parse time.
    pub fn new(u: usize, w: usize) -> Self {
        assert_ne!(u, w, "EdgeKey cannot be a self-loop at {u}");
        EdgeKey {
            lo: u.min(w),
            hi: u.max(w),
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    /// True if at least one endpoint is in `s`.
    pub fn touches_set(&self, s: &BTreeSet<usize>) -> bool {
        s.contains(&self.lo) || s.contains(&self.hi)
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Simple undirected graph with sorted adjacency sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph on `n` vertices from an edge list. Duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, w) in edges {
            g.add_edge(u, w)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Adds an undirected edge. Returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, u: usize, w: usize) -> Result<bool, GraphError> {
        let n = self.vertex_count();
        for v in [u, w] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
        }
        if u == w {
            return Err(GraphError::SelfLoop(u));
        }
        let inserted = self.adj[u].insert(w);
        self.adj[w].insert(u);
        if inserted {
            self.edge_count += 1;
        }
        Ok(inserted)
    }

    /// Removes an edge if present; returns whether it existed.
    pub fn remove_edge(&mut self, u: usize, w: usize) -> bool {
        if u >= self.vertex_count() || w >= self.vertex_count() {
            return false;
        }
        let removed = self.adj[u].remove(&w);
        self.adj[w].remove(&u);
        if removed {
            self.edge_count -= 1;
        }
        removed
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(&w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// All edges in ascending `(lo, hi)` order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeKey> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&w| u < w)
                .map(move |w| EdgeKey { lo: u, hi: w })
        })
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeKey> {
        self.edges().collect()
    }

    /// Number of vertices with positive degree.
    pub fn non_isolated_count(&self) -> usize {
        self.adj.iter().filter(|nbrs| !nbrs.is_empty()).count()
    }

    /// The graph on the same id space with every edge incident to `s`
    /// removed; vertices of `s` stay as isolated ids so that paths built in
    /// the result compose with paths built here.
    pub fn delete_vertices(&self, s: &BTreeSet<usize>) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if let Some(&v) = s.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: n,
            });
        }
        Ok(self.edge_subgraph(|e| !s.contains(&e.lo) && !s.contains(&e.hi)))
    }

    /// The graph on the same id space containing exactly the edges that
    /// satisfy `keep`.
    pub fn edge_subgraph(&self, keep: impl Fn(EdgeKey) -> bool) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for e in self.edges().filter(|&e| keep(e)) {
            g.add_edge(e.lo, e.hi).expect("edges of self are valid");
        }
        g
    }

    /// Parses the edge-list text format: one `u w` pair per line, `#` lines
    /// are comments, blank lines are skipped. A `#n N` comment directive may
    /// declare the vertex count (needed to round-trip trailing isolated
    /// vertices); otherwise the count is the largest id plus one.
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut max_id: Option<usize> = None;
        let mut declared: Option<(usize, usize)> = None; // (line, n)
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("#n") {
                if let Ok(n) = rest.trim().parse::<usize>() {
                    declared = Some((line, n));
                }
                continue;
            }
            if trimmed.starts_with('#') {
                continue;
            }
            let mut nums = trimmed.split_whitespace().map(str::parse::<usize>);
            let (u, w) = match (nums.next(), nums.next(), nums.next()) {
                (Some(Ok(u)), Some(Ok(w)), None) => (u, w),
                _ => {
                    return Err(ParseError::Malformed {
                        line,
                        content: trimmed.to_string(),
                    })
                }
            };
            if u == w {
                return Err(ParseError::SelfLoop { line, vertex: u });
            }
            max_id = Some(max_id.map_or(u.max(w), |m| m.max(u).max(w)));
            edges.push((u, w));
        }
        let needed = max_id.map_or(0, |m| m + 1);
        let n = match declared {
            Some((line, n)) if n < needed => {
                return Err(ParseError::BadDirective {
                    line,
                    declared: n,
                    max_id: needed - 1,
                })
            }
            Some((_, n)) => n,
            None => needed,
        };
        let mut g = Graph::new(n);
        for (u, w) in edges {
            g.add_edge(u, w).expect("validated above");
        }
        Ok(g)
    }

    /// Serializes to the edge-list format. `parse_edge_list` round-trips it
    /// exactly, including isolated vertices, via the `#n` directive.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("#n {}\n", self.vertex_count());
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.lo, e.hi));
        }
        out
    }
}

/// Error from [`Path::new`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("a path needs at least two vertices, got {0}")]
    TooShort(usize),
}

/// A vertex sequence of length at least two. Distinctness and edge validity
/// are properties relative to a host graph and are checked by
/// [`crate::verify::is_valid_path`]; every construction in this crate only
/// produces sequences that pass it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(vertices: Vec<usize>) -> Result<Self, PathError> {
        if vertices.len() < 2 {
            return Err(PathError::TooShort(vertices.len()));
        }
        Ok(Path { vertices })
    }

    /// The two-vertex path for a single edge.
    pub fn single_edge(e: EdgeKey) -> Self {
        Path {
            vertices: vec![e.lo, e.hi],
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of edges (one less than the vertex count).
    pub fn edge_len(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Consecutive-pair edges along the path.
    pub fn edges(&self) -> impl Iterator<Item = EdgeKey> + '_ {
        self.vertices.windows(2).map(|w| EdgeKey::new(w[0], w[1]))
    }

    pub fn contains_edge(&self, e: EdgeKey) -> bool {
        self.edges().any(|f| f == e)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    /// The lexicographically smaller of the path and its reverse. Idempotent
    /// and reverse-invariant; used to deduplicate output families.
    pub fn canonical(&self) -> Path {
        let rev = self.reversed();
        if rev.vertices < self.vertices {
            rev
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Path {
    /// Space-separated vertex ids, matching the path-system text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Which family of the construction a path belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathRole {
    /// A single edge of the rotation path that meets the endpoint set.
    SingleEdge,
    /// A path from an edge cover.
    Cover,
    /// A threaded chord class with constant index sum.
    MThread,
    /// A threaded chord class with constant weighted index sum.
    NThread,
    /// Contributed by a deeper peeling level.
    Recursive,
}

impl fmt::Display for PathRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PathRole::SingleEdge => "single-edge",
            PathRole::Cover => "cover",
            PathRole::MThread => "m-thread",
            PathRole::NThread => "n-thread",
            PathRole::Recursive => "recursive",
        };
        f.write_str(s)
    }
}

/// An ordered family of canonical paths with per-path role tags and no
/// duplicates. Insertion canonicalizes, so two orientations of the same path
/// collapse.
#[derive(Clone, Debug, Default)]
pub struct PathSystem {
    paths: Vec<Path>,
    roles: Vec<PathRole>,
    seen: HashSet<Vec<usize>>,
}

impl PathSystem {
    pub fn new() -> Self {
        PathSystem::default()
    }

    /// Inserts the canonical form of `path`; returns `false` if the system
    /// already held it.
    pub fn insert(&mut self, path: Path, role: PathRole) -> bool {
        let canon = path.canonical();
        if !self.seen.insert(canon.vertices.clone()) {
            return false;
        }
        self.paths.push(canon);
        self.roles.push(role);
        true
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn roles(&self) -> &[PathRole] {
        &self.roles
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Path, PathRole)> {
        self.paths.iter().zip(self.roles.iter().copied())
    }

    pub fn contains(&self, path: &Path) -> bool {
        self.seen.contains(&path.canonical().vertices)
    }
}
