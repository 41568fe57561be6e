//! Rotation-maximal paths and their derived endpoint sets.
//!
//! Starting from a greedily maximal path `P = u ⋯ v`, an *elementary
//! exchange* at the mobile end takes a neighbor `x` of `u` on `P`, removes
//! the edge from `x` to its predecessor `x⁻`, and adds the edge `u x`. The
//! result is a path on the same vertex set that still ends at `v` but now
//! starts at `x⁻`. The endpoint set `S` is closed under such exchanges,
//! restarting with a longer path whenever some derived endpoint has a
//! neighbor off the path, until no derived path can be extended. At that
//! fixpoint the whole outside neighborhood of `S` lies on the path next to
//! `S`, which gives `|N(S)| ≤ 2|S|` because paths have maximum degree two.
//! Finding a genuinely longest path would be NP-hard; the fixpoint delivers
//! the same guarantee in polynomial time.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::graph::{EdgeKey, Graph, Path};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosaError {
    #[error("the graph has no edges")]
    EmptyGraph,
    #[error("vertex {0} is not a derived endpoint")]
    NotDerivedEndpoint(usize),
}

/// How an endpoint entered the derived set: either it is the mobile end of
/// the base path, or one exchange produced it from an earlier endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parent {
    Root,
    Exchange {
        /// Endpoint whose derived path the exchange was applied to.
        from: usize,
        /// Path edge removed by the exchange.
        removed: EdgeKey,
        /// Graph edge added by the exchange.
        added: EdgeKey,
    },
}

/// A rotation-maximal path with its derived endpoint set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosaResult {
    path: Path,
    fixed_end: usize,
    endpoints: BTreeSet<usize>,
    parents: HashMap<usize, Parent>,
    boundary: BTreeSet<usize>,
}

impl PosaResult {
    /// The base path, written from the mobile end to the fixed end.
    pub fn path(&self) -> &Path {
        &self.path
    }

    /// The end every derived path keeps.
    pub fn fixed_end(&self) -> usize {
        self.fixed_end
    }

    /// The mobile end; always a member of the endpoint set.
    pub fn mobile_end(&self) -> usize {
        self.path.first()
    }

    /// The derived endpoint set `S` (never contains the fixed end).
    pub fn endpoints(&self) -> &BTreeSet<usize> {
        &self.endpoints
    }

    /// `N(S)`: vertices outside `S` adjacent to `S` in the host graph.
    pub fn boundary(&self) -> &BTreeSet<usize> {
        &self.boundary
    }

    /// The first exchange that produced endpoint `x`, if `x` is derived.
    pub fn parent(&self, x: usize) -> Option<&Parent> {
        self.parents.get(&x)
    }

    /// Replays the recorded exchanges to rebuild the derived path from `x`
    /// to the fixed end. Its vertex set always equals the base path's.
    pub fn derived_path(&self, x: usize) -> Result<Path, PosaError> {
        if !self.endpoints.contains(&x) {
            return Err(PosaError::NotDerivedEndpoint(x));
        }
        let vertices = replay_derived(self.path.vertices(), &self.parents, x);
        Ok(Path::new(vertices).expect("derived paths keep the base length"))
    }
}

/// Walks the parent chain of `x` back to the root, then replays the
/// exchanges forward. Each exchange with pivot `y` turns the current path
/// `e ⋯ y⁻ y ⋯ v` into `y⁻ ⋯ e y ⋯ v`, i.e. reverses the prefix before `y`.
fn replay_derived(base: &[usize], parents: &HashMap<usize, Parent>, x: usize) -> Vec<usize> {
    let mut chain = Vec::new();
    let mut cur = x;
    loop {
        match parents.get(&cur).expect("endpoint has a parent record") {
            Parent::Root => break,
            Parent::Exchange { from, added, .. } => {
                chain.push(*added);
                cur = *from;
            }
        }
    }
    let mut q = base.to_vec();
    for added in chain.iter().rev() {
        let head = q[0];
        debug_assert!(added.touches(head), "added edge is incident to the head");
        let pivot = if added.lo == head { added.hi } else { added.lo };
        let iy = q
            .iter()
            .position(|&v| v == pivot)
            .expect("pivot lies on the path");
        q[..iy].reverse();
    }
    debug_assert_eq!(q[0], x);
    q
}

enum ClosureStep {
    /// Some derived endpoint had a neighbor off the path; here is the
    /// extended path (already re-extended greedily at the new head).
    Extended(Vec<usize>),
    /// Fixpoint: endpoints in discovery order plus their parent records.
    Closed {
        order: Vec<usize>,
        parents: HashMap<usize, Parent>,
    },
}

/// Computes a rotation-maximal path of `g` together with the closure of
/// endpoints derivable by elementary exchanges that fix one end.
///
/// Deterministic by construction: the initial edge comes from the smallest
/// vertex with positive degree and its smallest neighbor, every greedy
/// extension picks the smallest off-path neighbor, the fixed end is the
/// maximal-path endpoint with the larger id, and the closure explores
/// endpoints breadth-first in discovery order.
pub fn posa_path(g: &Graph) -> Result<PosaResult, PosaError> {
    let start = (0..g.vertex_count())
        .find(|&v| g.degree(v) > 0)
        .ok_or(PosaError::EmptyGraph)?;
    let next = g.neighbors(start).next().expect("positive degree");

    let mut path = vec![start, next];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[start] = true;
    on_path[next] = true;
    extend_tail(g, &mut path, &mut on_path);
    extend_head(g, &mut path, &mut on_path);
    if path[0] > *path.last().expect("nonempty") {
        path.reverse();
    }
    let fixed_end = *path.last().expect("nonempty");

    let (order, parents) = loop {
        match closure_or_extend(g, &path) {
            ClosureStep::Extended(longer) => {
                debug_assert!(longer.len() > path.len(), "each restart must grow the path");
                path = longer;
            }
            ClosureStep::Closed { order, parents } => break (order, parents),
        }
    };

    let endpoints: BTreeSet<usize> = order.iter().copied().collect();
    let boundary: BTreeSet<usize> = endpoints
        .iter()
        .flat_map(|&x| g.neighbors(x))
        .filter(|w| !endpoints.contains(w))
        .collect();

    // The guarantees everything downstream rests on. Cheap to check, so
    // check them on every call rather than trusting the construction.
    let path_boundary = path_neighborhood(&path, &endpoints);
    assert!(
        boundary.is_subset(&path_boundary),
        "outside neighborhood of the endpoint set must lie on the path next to it"
    );
    assert!(boundary.len() <= 2 * endpoints.len());
    assert!(!endpoints.contains(&fixed_end));
    debug_assert!(endpoints.contains(&path[0]));

    Ok(PosaResult {
        path: Path::new(path).expect("maximal paths have at least one edge"),
        fixed_end,
        endpoints,
        parents,
        boundary,
    })
}

/// Vertices outside `s` that are path-adjacent to a member of `s`.
fn path_neighborhood(path: &[usize], s: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (i, &v) in path.iter().enumerate() {
        if !s.contains(&v) {
            continue;
        }
        if i > 0 && !s.contains(&path[i - 1]) {
            out.insert(path[i - 1]);
        }
        if i + 1 < path.len() && !s.contains(&path[i + 1]) {
            out.insert(path[i + 1]);
        }
    }
    out
}

fn extend_tail(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool]) {
    loop {
        let tail = *path.last().expect("nonempty");
        match g.neighbors(tail).find(|&w| !on_path[w]) {
            Some(w) => {
                path.push(w);
                on_path[w] = true;
            }
            None => break,
        }
    }
}

fn extend_head(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool]) {
    loop {
        let head = path[0];
        match g.neighbors(head).find(|&w| !on_path[w]) {
            Some(w) => {
                path.insert(0, w);
                on_path[w] = true;
            }
            None => break,
        }
    }
}

/// One closure pass over the current path. Breadth-first over endpoints:
/// popping an endpoint first checks whether it can leave the path (which
/// triggers a restart with a strictly longer path) and otherwise records
/// every endpoint reachable by a single exchange of its derived path.
fn closure_or_extend(g: &Graph, path: &[usize]) -> ClosureStep {
    let mut on_path = vec![false; g.vertex_count()];
    for &v in path {
        on_path[v] = true;
    }
    let u = path[0];
    let mut parents: HashMap<usize, Parent> = HashMap::new();
    parents.insert(u, Parent::Root);
    let mut order = vec![u];
    let mut queue = VecDeque::from([u]);

    while let Some(x) = queue.pop_front() {
        let qx = replay_derived(path, &parents, x);
        if g.neighbors(x).any(|w| !on_path[w]) {
            let mut extended = qx;
            extend_head(g, &mut extended, &mut on_path);
            return ClosureStep::Extended(extended);
        }
        let pos_in_qx: HashMap<usize, usize> =
            qx.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for y in g.neighbors(x) {
            let iy = pos_in_qx[&y];
            if iy == 1 {
                // y is the successor of x: the exchange reproduces qx.
                continue;
            }
            let endpoint = qx[iy - 1];
            if let std::collections::hash_map::Entry::Vacant(slot) = parents.entry(endpoint) {
                slot.insert(Parent::Exchange {
                    from: x,
                    removed: EdgeKey::new(endpoint, y),
                    added: EdgeKey::new(x, y),
                });
                order.push(endpoint);
                queue.push_back(endpoint);
            }
        }
    }
    ClosureStep::Closed { order, parents }
}
