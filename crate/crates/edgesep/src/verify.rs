//! Independent checkers: path validity, coverage, weak/strong separation,
//! and an exhaustive minimum-separator search for tiny graphs.
//!
//! The checkers work from the definitions alone and share nothing with the
//! construction they audit. Separation is decided through per-path edge
//! bitmasks: for each edge `e`, intersecting the masks of all paths
//! containing `e` yields exactly the set of edges no path can separate `e`
//! from, so the full ordered-pair scan costs `O(|sys|·m + m²)` word
//! operations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use thiserror::Error;

use crate::graph::{EdgeKey, Graph, Path, PathRole, PathSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("path {index} ({path}) is not a valid path of the graph")]
    InvalidPath { index: usize, path: String },
}

/// Why a pair of edges failed the separation check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationReason {
    /// Strong mode: no path contains `contained_edge` without `excluded_edge`.
    NoPathWithEWithoutF,
    /// Weak mode: no path contains exactly one of the two edges.
    NoPathWithExactlyOne,
}

/// One failed pair. For the strong check the pair is ordered; for the weak
/// check it is reported once with the smaller edge first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SeparationViolation {
    pub contained_edge: EdgeKey,
    pub excluded_edge: EdgeKey,
    pub reason: ViolationReason,
}

impl fmt::Display for SeparationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            ViolationReason::NoPathWithEWithoutF => write!(
                f,
                "no path contains {} and omits {}",
                self.contained_edge, self.excluded_edge
            ),
            ViolationReason::NoPathWithExactlyOne => write!(
                f,
                "no path contains exactly one of {} and {}",
                self.contained_edge, self.excluded_edge
            ),
        }
    }
}

/// True iff the vertices of `p` are pairwise distinct and every consecutive
/// pair is an edge of `g`.
pub fn is_valid_path(g: &Graph, p: &Path) -> bool {
    let mut seen = BTreeSet::new();
    for &v in p.vertices() {
        if v >= g.vertex_count() || !seen.insert(v) {
            return false;
        }
    }
    p.vertices().windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Fixed-width bitset over edge indices.
#[derive(Clone, PartialEq, Eq)]
struct EdgeMask {
    words: Vec<u64>,
}

impl EdgeMask {
    fn zeros(m: usize) -> Self {
        EdgeMask {
            words: vec![0; m.div_ceil(64)],
        }
    }

    fn ones(m: usize) -> Self {
        let mut mask = EdgeMask {
            words: vec![u64::MAX; m.div_ceil(64)],
        };
        let spare = mask.words.len() * 64 - m;
        if spare > 0 && !mask.words.is_empty() {
            let last = mask.words.len() - 1;
            mask.words[last] >>= spare;
        }
        mask
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn and_assign(&mut self, other: &EdgeMask) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

struct MaskIndex {
    edges: Vec<EdgeKey>,
    /// For each edge `e`: intersection of the masks of every system path
    /// containing `e`; all-ones when nothing contains `e`.
    unseparated: Vec<EdgeMask>,
    covered: Vec<bool>,
}

fn build_mask_index(sys: &PathSystem, g: &Graph) -> Result<MaskIndex, VerifyError> {
    let edges: Vec<EdgeKey> = g.edges().collect();
    let m = edges.len();
    let by_key: BTreeMap<EdgeKey, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut unseparated = vec![EdgeMask::ones(m); m];
    let mut covered = vec![false; m];
    for (index, p) in sys.paths().iter().enumerate() {
        if !is_valid_path(g, p) {
            return Err(VerifyError::InvalidPath {
                index,
                path: p.to_string(),
            });
        }
        let mut mask = EdgeMask::zeros(m);
        for e in p.edges() {
            mask.set(by_key[&e]);
        }
        for e in p.edges() {
            let i = by_key[&e];
            covered[i] = true;
            unseparated[i].and_assign(&mask);
        }
    }
    Ok(MaskIndex {
        edges,
        unseparated,
        covered,
    })
}

/// Reports every ordered pair `(e, f)` of distinct edges of `g` such that no
/// path of `sys` contains `e` and omits `f`. An empty result means `sys`
/// strongly separates `g`. Violations come out sorted by `(e, f)`.
pub fn check_strong_separation(
    sys: &PathSystem,
    g: &Graph,
) -> Result<Vec<SeparationViolation>, VerifyError> {
    let idx = build_mask_index(sys, g)?;
    let m = idx.edges.len();
    let mut out = Vec::new();
    for ei in 0..m {
        if !idx.covered[ei] {
            for fi in 0..m {
                if fi != ei {
                    out.push(SeparationViolation {
                        contained_edge: idx.edges[ei],
                        excluded_edge: idx.edges[fi],
                        reason: ViolationReason::NoPathWithEWithoutF,
                    });
                }
            }
            continue;
        }
        for fi in idx.unseparated[ei].iter_ones() {
            if fi != ei {
                out.push(SeparationViolation {
                    contained_edge: idx.edges[ei],
                    excluded_edge: idx.edges[fi],
                    reason: ViolationReason::NoPathWithEWithoutF,
                });
            }
        }
    }
    Ok(out)
}

/// Weak variant: reports every unordered pair with no path containing
/// exactly one of the two edges.
pub fn check_weak_separation(
    sys: &PathSystem,
    g: &Graph,
) -> Result<Vec<SeparationViolation>, VerifyError> {
    let idx = build_mask_index(sys, g)?;
    let m = idx.edges.len();
    let mut out = Vec::new();
    for ei in 0..m {
        for fi in ei + 1..m {
            let e_stuck = !idx.covered[ei] || idx.unseparated[ei].get(fi);
            let f_stuck = !idx.covered[fi] || idx.unseparated[fi].get(ei);
            if e_stuck && f_stuck {
                out.push(SeparationViolation {
                    contained_edge: idx.edges[ei],
                    excluded_edge: idx.edges[fi],
                    reason: ViolationReason::NoPathWithExactlyOne,
                });
            }
        }
    }
    Ok(out)
}

/// Edges of `g` that appear in no path of `sys`.
pub fn check_coverage(sys: &PathSystem, g: &Graph) -> BTreeSet<EdgeKey> {
    let mut uncovered = g.edge_set();
    for p in sys.paths() {
        for e in p.edges() {
            uncovered.remove(&e);
        }
    }
    uncovered
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleMode {
    Strong,
    Weak,
}

impl fmt::Display for OracleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleMode::Strong => "strong",
            OracleMode::Weak => "weak",
        })
    }
}

/// Resource limits for the exhaustive search.
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    /// Abort if the graph has more simple paths than this.
    pub max_paths: usize,
    /// Wall-clock budget for enumeration and search combined.
    pub max_millis: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_paths: 200_000,
            max_millis: 10_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub size: usize,
    pub system: PathSystem,
}

/// Outcome of [`exhaustive_min_separator`]. `Timeout` is a distinguished
/// result rather than an error so that sweeps over many instances continue.
#[derive(Clone, Debug)]
pub enum OracleOutcome {
    Found(OracleResult),
    Timeout,
}

impl OracleOutcome {
    pub fn found(self) -> Option<OracleResult> {
        match self {
            OracleOutcome::Found(r) => Some(r),
            OracleOutcome::Timeout => None,
        }
    }
}

/// Enumerates every simple path of `g` exactly once, in canonical
/// orientation (first vertex smaller than last), by depth-first extension
/// from each start vertex in ascending order. Returns `None` when the count
/// exceeds `max_paths`.
pub fn enumerate_simple_paths(g: &Graph, max_paths: usize) -> Option<Vec<Path>> {
    fn dfs(
        g: &Graph,
        stack: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Path>,
        max_paths: usize,
    ) -> bool {
        let cur = *stack.last().expect("nonempty");
        for w in g.neighbors(cur) {
            if on_path[w] {
                continue;
            }
            stack.push(w);
            on_path[w] = true;
            if stack[0] < w {
                if out.len() == max_paths {
                    return false;
                }
                out.push(Path::new(stack.clone()).expect("at least two vertices"));
            }
            if !dfs(g, stack, on_path, out, max_paths) {
                return false;
            }
            on_path[w] = false;
            stack.pop();
        }
        true
    }

    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut stack = vec![s];
        on_path[s] = true;
        if !dfs(g, &mut stack, &mut on_path, &mut out, max_paths) {
            return None;
        }
        on_path[s] = false;
    }
    Some(out)
}

/// Finds a minimum-cardinality family of simple paths that both separates
/// the edges of `g` in the chosen mode and contains every edge. (For graphs
/// with at least two edges the separation constraints already force
/// coverage; requiring it explicitly pins down the single-edge graph, whose
/// lone edge still gets a path.)
///
/// Search: enumerate all canonical simple paths, drop paths whose covered
/// constraint set is a subset of another's, then iteratively deepen over the
/// family size, branching on the uncovered constraint with the fewest
/// candidate paths.
pub fn exhaustive_min_separator(
    g: &Graph,
    mode: OracleMode,
    limits: OracleLimits,
) -> OracleOutcome {
    let start = Instant::now();
    let m = g.edge_count();
    if m == 0 {
        return OracleOutcome::Found(OracleResult {
            size: 0,
            system: PathSystem::new(),
        });
    }
    if m > 64 {
        // Constraint masks live in single words at oracle scale.
        return OracleOutcome::Timeout;
    }
    let Some(paths) = enumerate_simple_paths(g, limits.max_paths) else {
        return OracleOutcome::Timeout;
    };
    let edges: Vec<EdgeKey> = g.edges().collect();
    let by_key: BTreeMap<EdgeKey, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let masks: Vec<u64> = paths
        .iter()
        .map(|p| p.edges().fold(0u64, |acc, e| acc | 1 << by_key[&e]))
        .collect();

    #[derive(Clone, Copy)]
    enum Constraint {
        /// Some path contains edge `e` and omits edge `f`.
        Separate { e: usize, f: usize },
        /// Some path contains exactly one of `e` and `f`.
        ExactlyOne { e: usize, f: usize },
        /// Some path contains edge `e`.
        Cover { e: usize },
    }

    impl Constraint {
        fn covered_by(self, mask: u64) -> bool {
            match self {
                Constraint::Separate { e, f } => mask & 1 << e != 0 && mask & 1 << f == 0,
                Constraint::ExactlyOne { e, f } => (mask & 1 << e != 0) != (mask & 1 << f != 0),
                Constraint::Cover { e } => mask & 1 << e != 0,
            }
        }
    }

    let mut constraints: Vec<Constraint> = Vec::new();
    match mode {
        OracleMode::Strong => {
            for e in 0..m {
                for f in 0..m {
                    if e != f {
                        constraints.push(Constraint::Separate { e, f });
                    }
                }
            }
        }
        OracleMode::Weak => {
            for e in 0..m {
                for f in e + 1..m {
                    constraints.push(Constraint::ExactlyOne { e, f });
                }
            }
        }
    }
    for e in 0..m {
        constraints.push(Constraint::Cover { e });
    }
    let nc = constraints.len();

    // Per-path covered-constraint bitsets, for dominance pruning.
    let words = nc.div_ceil(64);
    let cov_sets: Vec<Vec<u64>> = masks
        .iter()
        .map(|&mask| {
            let mut set = vec![0u64; words];
            for (ci, &c) in constraints.iter().enumerate() {
                if c.covered_by(mask) {
                    set[ci / 64] |= 1 << (ci % 64);
                }
            }
            set
        })
        .collect();
    let dominated = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let mut keep = vec![true; paths.len()];
    for i in 0..paths.len() {
        if start.elapsed().as_millis() as u64 > limits.max_millis {
            return OracleOutcome::Timeout;
        }
        if !keep[i] {
            continue;
        }
        for j in 0..paths.len() {
            if i == j || !keep[j] {
                continue;
            }
            // Drop j when i covers everything j covers; on ties the smaller
            // index survives.
            if dominated(&cov_sets[j], &cov_sets[i]) && (cov_sets[i] != cov_sets[j] || i < j) {
                keep[j] = false;
            }
        }
    }
    let kept: Vec<usize> = (0..paths.len()).filter(|&i| keep[i]).collect();

    // Candidate paths per constraint, best coverage first.
    let coverage_count =
        |p: usize| -> usize { cov_sets[p].iter().map(|w| w.count_ones() as usize).sum() };
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(nc);
    for &c in &constraints {
        let mut cs: Vec<usize> = kept
            .iter()
            .copied()
            .filter(|&p| c.covered_by(masks[p]))
            .collect();
        cs.sort_by_key(|&p| std::cmp::Reverse(coverage_count(p)));
        candidates.push(cs);
    }

    struct Search<'a> {
        constraints: &'a [Constraint],
        candidates: &'a [Vec<usize>],
        masks: &'a [u64],
        cover_depth: Vec<u32>,
        uncovered: usize,
        chosen: Vec<usize>,
        start: Instant,
        max_millis: u64,
        ticks: u32,
    }

    enum SearchOutcome {
        Found(Vec<usize>),
        Exhausted,
        TimedOut,
    }

    impl Search<'_> {
        fn dfs(&mut self, k: usize) -> SearchOutcome {
            if self.uncovered == 0 {
                return SearchOutcome::Found(self.chosen.clone());
            }
            if self.chosen.len() == k {
                return SearchOutcome::Exhausted;
            }
            self.ticks = self.ticks.wrapping_add(1);
            if self.ticks.is_multiple_of(1024)
                && self.start.elapsed().as_millis() as u64 > self.max_millis
            {
                return SearchOutcome::TimedOut;
            }
            let branch = (0..self.constraints.len())
                .filter(|&ci| self.cover_depth[ci] == 0)
                .min_by_key(|&ci| self.candidates[ci].len())
                .expect("uncovered > 0");
            let options = self.candidates[branch].clone();
            for p in options {
                if self.chosen.contains(&p) {
                    continue;
                }
                let mut newly = Vec::new();
                for (ci, c) in self.constraints.iter().enumerate() {
                    if c.covered_by(self.masks[p]) {
                        if self.cover_depth[ci] == 0 {
                            newly.push(ci);
                        }
                        self.cover_depth[ci] += 1;
                    }
                }
                self.uncovered -= newly.len();
                self.chosen.push(p);
                match self.dfs(k) {
                    SearchOutcome::Exhausted => {}
                    done => return done,
                }
                self.chosen.pop();
                self.uncovered += newly.len();
                for (ci, c) in self.constraints.iter().enumerate() {
                    if c.covered_by(self.masks[p]) {
                        self.cover_depth[ci] -= 1;
                    }
                }
            }
            SearchOutcome::Exhausted
        }
    }

    // Deepen over the family size; the all-single-edges family shows a
    // solution of size m always exists.
    for k in 1..=m {
        let mut search = Search {
            constraints: &constraints,
            candidates: &candidates,
            masks: &masks,
            cover_depth: vec![0; nc],
            uncovered: nc,
            chosen: Vec::new(),
            start,
            max_millis: limits.max_millis,
            ticks: 0,
        };
        match search.dfs(k) {
            SearchOutcome::Found(chosen) => {
                let mut system = PathSystem::new();
                for p in chosen {
                    system.insert(paths[p].clone(), PathRole::Cover);
                }
                return OracleOutcome::Found(OracleResult {
                    size: system.len(),
                    system,
                });
            }
            SearchOutcome::Exhausted => {}
            SearchOutcome::TimedOut => return OracleOutcome::Timeout,
        }
    }
    unreachable!("the all-single-edges family separates and covers at size m")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    fn sys(paths: &[&[usize]]) -> PathSystem {
        let mut s = PathSystem::new();
        for p in paths {
            s.insert(Path::new(p.to_vec()).unwrap(), PathRole::Cover);
        }
        s
    }

    #[test]
    fn path_validity_examples() {
        let tri = families::disjoint_triangles(1);
        assert!(is_valid_path(&tri, &Path::new(vec![0, 1, 2]).unwrap()));
        assert!(!is_valid_path(&tri, &Path::new(vec![0, 1, 0]).unwrap()));
        let p3 = families::path_graph(3);
        assert!(!is_valid_path(&p3, &Path::new(vec![0, 2]).unwrap()));
    }

    #[test]
    fn strong_check_examples() {
        let p3 = families::path_graph(3);
        assert!(check_strong_separation(&sys(&[&[0, 1], &[1, 2]]), &p3)
            .unwrap()
            .is_empty());
        let violations = check_strong_separation(&sys(&[&[0, 1, 2]]), &p3).unwrap();
        assert_eq!(violations.len(), 2, "one path cannot separate two edges");

        let tri = families::disjoint_triangles(1);
        assert!(
            check_strong_separation(&sys(&[&[0, 1], &[1, 2], &[0, 2]]), &tri)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn weak_check_examples() {
        let p3 = families::path_graph(3);
        assert!(check_weak_separation(&sys(&[&[0, 1]]), &p3)
            .unwrap()
            .is_empty());

        let tri = families::disjoint_triangles(1);
        let violations = check_weak_separation(&sys(&[&[0, 1, 2]]), &tri).unwrap();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].contained_edge, EdgeKey::new(0, 1));
        assert_eq!(violations[0].excluded_edge, EdgeKey::new(1, 2));
    }

    #[test]
    fn invalid_paths_are_an_error_not_a_violation() {
        let p3 = families::path_graph(3);
        let err = check_strong_separation(&sys(&[&[0, 2]]), &p3).unwrap_err();
        assert!(matches!(err, VerifyError::InvalidPath { index: 0, .. }));
    }

    #[test]
    fn coverage_examples() {
        let tri = families::disjoint_triangles(1);
        assert!(check_coverage(&sys(&[&[0, 1], &[1, 2], &[0, 2]]), &tri).is_empty());
        assert_eq!(
            check_coverage(&sys(&[&[0, 1, 2]]), &tri),
            BTreeSet::from([EdgeKey::new(0, 2)])
        );
        assert!(check_coverage(&PathSystem::new(), &Graph::new(0)).is_empty());
    }

    #[test]
    fn enumeration_is_canonical_and_complete() {
        // K3 has three single-edge paths and three two-edge paths.
        let tri = families::disjoint_triangles(1);
        let paths = enumerate_simple_paths(&tri, 100).unwrap();
        assert_eq!(paths.len(), 6);
        for p in &paths {
            assert!(p.first() < p.last());
            assert!(is_valid_path(&tri, p));
        }
        assert!(enumerate_simple_paths(&tri, 5).is_none(), "cap respected");
    }

    #[test]
    fn oracle_trivial_cases() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let r = exhaustive_min_separator(&k2, OracleMode::Strong, OracleLimits::default())
            .found()
            .unwrap();
        assert_eq!(r.size, 1);

        let p3 = families::path_graph(3);
        let r = exhaustive_min_separator(&p3, OracleMode::Strong, OracleLimits::default())
            .found()
            .unwrap();
        assert_eq!(r.size, 2);

        let empty = Graph::new(4);
        let r = exhaustive_min_separator(&empty, OracleMode::Strong, OracleLimits::default())
            .found()
            .unwrap();
        assert_eq!(r.size, 0);
    }

    #[test]
    fn oracle_triangle_minimum_is_three() {
        // Independently derivable: two paths cannot give every ordered pair
        // a separating witness in K3 (any 2-path family has some edge whose
        // only container also contains another edge both ways).
        let tri = families::disjoint_triangles(1);
        let r = exhaustive_min_separator(&tri, OracleMode::Strong, OracleLimits::default())
            .found()
            .unwrap();
        assert_eq!(r.size, 3);
        assert!(check_strong_separation(&r.system, &tri).unwrap().is_empty());
        assert!(check_coverage(&r.system, &tri).is_empty());
    }

    #[test]
    fn oracle_result_always_verifies() {
        for seed in 0..8 {
            let g = families::gnp(5, 0.6, seed);
            let r = exhaustive_min_separator(&g, OracleMode::Strong, OracleLimits::default())
                .found()
                .unwrap();
            assert!(check_strong_separation(&r.system, &g).unwrap().is_empty());
            assert!(check_coverage(&r.system, &g).is_empty());
            let w = exhaustive_min_separator(&g, OracleMode::Weak, OracleLimits::default())
                .found()
                .unwrap();
            assert!(check_weak_separation(&w.system, &g).unwrap().is_empty());
            assert!(w.size <= r.size, "weak minimum never exceeds strong");
        }
    }

    #[test]
    fn oracle_times_out_gracefully() {
        let g = families::clique(6);
        let outcome = exhaustive_min_separator(
            &g,
            OracleMode::Strong,
            OracleLimits {
                max_paths: 10,
                max_millis: 10_000,
            },
        );
        assert!(matches!(outcome, OracleOutcome::Timeout));
    }

    /// Definition-only reference scan, deliberately mask-free.
    fn naive_strong(sys: &PathSystem, g: &Graph) -> BTreeSet<(EdgeKey, EdgeKey)> {
        let mut out = BTreeSet::new();
        for e in g.edges() {
            for f in g.edges() {
                if e == f {
                    continue;
                }
                let witness = sys
                    .paths()
                    .iter()
                    .any(|p| p.contains_edge(e) && !p.contains_edge(f));
                if !witness {
                    out.insert((e, f));
                }
            }
        }
        out
    }

    fn naive_weak(sys: &PathSystem, g: &Graph) -> BTreeSet<(EdgeKey, EdgeKey)> {
        let mut out = BTreeSet::new();
        let edges: Vec<EdgeKey> = g.edges().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let witness = sys
                    .paths()
                    .iter()
                    .any(|p| p.contains_edge(e) != p.contains_edge(f));
                if !witness {
                    out.insert((e, f));
                }
            }
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn strongly_separated_implies_weakly_separated(n in 2usize..14, seed in 0u64..1u64 << 40) {
            let g = families::gnp(n, 0.4, seed);
            let (system, _) = crate::separator::separate(&g, crate::cover::CoverStrategy::BestOf);
            let strong = check_strong_separation(&system, &g).unwrap();
            prop_assert!(strong.is_empty());
            let weak = check_weak_separation(&system, &g).unwrap();
            prop_assert!(weak.is_empty());
        }

        /// The mask-based checkers agree with a direct definition scan, also
        /// on deliberately crippled systems that do violate separation.
        #[test]
        fn mask_checkers_match_the_definition(
            n in 2usize..10,
            seed in 0u64..1u64 << 40,
            keep_mod in 1usize..4,
        ) {
            let g = families::gnp(n, 0.5, seed);
            let (full, _) = crate::separator::separate(&g, crate::cover::CoverStrategy::BestOf);
            let mut system = PathSystem::new();
            for (i, (p, role)) in full.iter().enumerate() {
                if i % keep_mod == 0 {
                    system.insert(p.clone(), role);
                }
            }
            let strong: BTreeSet<(EdgeKey, EdgeKey)> = check_strong_separation(&system, &g)
                .unwrap()
                .into_iter()
                .map(|v| (v.contained_edge, v.excluded_edge))
                .collect();
            prop_assert_eq!(strong, naive_strong(&system, &g));
            let weak: BTreeSet<(EdgeKey, EdgeKey)> = check_weak_separation(&system, &g)
                .unwrap()
                .into_iter()
                .map(|v| (v.contained_edge, v.excluded_edge))
                .collect();
            prop_assert_eq!(weak, naive_weak(&system, &g));
        }
    }
}
