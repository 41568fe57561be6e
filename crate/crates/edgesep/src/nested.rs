//! Chord classes over a path and the threading that turns each class into a
//! single simple path.
//!
//! Given vertices `v_1, …, v_{n'}` listed in the order they appear along a
//! host path `P`, a chord `v_i v_j` (with `i < j`) falls into class `M_k`
//! when `i + j = k` and into class `N_k` when `i + 2j = k`. Within one class
//! the defining equation forces strict nesting: for two chords with `i > i'`
//! we get `j' > j > i > i'`. A nested class threads into one simple path by
//! starting at the innermost chord and alternately walking along `P` to the
//! next chord's same-side endpoint and traversing that chord.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::{EdgeKey, Path};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NestedError {
    /// A vertex that should lie on the host path does not; this signals a
    /// broken endpoint-neighborhood guarantee upstream.
    #[error("vertex {0} does not lie on the host path")]
    VertexOffPath(usize),
    #[error("edge endpoint {0} is not indexed along the path")]
    UnindexedEndpoint(usize),
    #[error("chords {first} and {second} are not strictly nested on the path")]
    NotNested { first: EdgeKey, second: EdgeKey },
    #[error("cannot thread an empty chord family")]
    EmptyFamily,
}

/// The vertices of a subgraph listed in host-path order, with both the
/// 1-based order index and the 0-based position along the path itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathIndexing {
    order: Vec<usize>,
    position: HashMap<usize, usize>,
    p_position: HashMap<usize, usize>,
}

impl PathIndexing {
    /// Vertices in increasing path position; `order()[i]` has index `i + 1`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 1-based order index of `v`.
    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.position.get(&v).copied()
    }

    /// 0-based position of `v` along the host path.
    pub fn path_position_of(&self, v: usize) -> Option<usize> {
        self.p_position.get(&v).copied()
    }
}

/// Orders `hverts` along `p`. Errs with [`NestedError::VertexOffPath`] if
/// some requested vertex is not on the path.
pub fn index_along_path(p: &Path, hverts: &BTreeSet<usize>) -> Result<PathIndexing, NestedError> {
    if let Some(&off) = hverts.iter().find(|v| !p.vertices().contains(v)) {
        return Err(NestedError::VertexOffPath(off));
    }
    let mut order = Vec::with_capacity(hverts.len());
    let mut position = HashMap::new();
    let mut p_position = HashMap::new();
    for (pos, &v) in p.vertices().iter().enumerate() {
        if hverts.contains(&v) {
            order.push(v);
            position.insert(v, order.len());
            p_position.insert(v, pos);
        }
    }
    Ok(PathIndexing {
        order,
        position,
        p_position,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChordKind {
    /// Class index is `i + j`.
    M,
    /// Class index is `i + 2j`.
    N,
}

impl ChordKind {
    pub fn class_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(0 < i && i < j);
        match self {
            ChordKind::M => i + j,
            ChordKind::N => i + 2 * j,
        }
    }
}

/// One nonempty chord class: chords as `(x, y)` vertex pairs with the
/// x-side order indices strictly increasing, i.e. outermost chord first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordFamily {
    pub kind: ChordKind,
    pub k: usize,
    pub chords: Vec<(usize, usize)>,
}

/// Groups `edges` into the nonempty classes of the given kind. The classes
/// partition the input; strict nesting inside each class follows from the
/// class equation and is re-checked here rather than assumed.
pub fn build_chord_classes(
    edges: &BTreeSet<EdgeKey>,
    idx: &PathIndexing,
    kind: ChordKind,
) -> Result<Vec<ChordFamily>, NestedError> {
    let mut classes: BTreeMap<usize, Vec<(usize, usize, usize)>> = BTreeMap::new();
    for e in edges {
        let (i, x, y) = match (idx.index_of(e.lo), idx.index_of(e.hi)) {
            (Some(a), Some(b)) => {
                if a < b {
                    (a, e.lo, e.hi)
                } else {
                    (b, e.hi, e.lo)
                }
            }
            (None, _) => return Err(NestedError::UnindexedEndpoint(e.lo)),
            (_, None) => return Err(NestedError::UnindexedEndpoint(e.hi)),
        };
        let j = idx.index_of(y).expect("checked above");
        debug_assert!(i < j);
        let k = kind.class_index(i, j);
        classes.entry(k).or_default().push((i, x, y));
    }
    let mut out = Vec::with_capacity(classes.len());
    for (k, mut members) in classes {
        members.sort_unstable_by_key(|&(i, _, _)| i);
        let chords: Vec<(usize, usize)> = members.into_iter().map(|(_, x, y)| (x, y)).collect();
        let fam = ChordFamily { kind, k, chords };
        check_nesting(&fam, idx)?;
        out.push(fam);
    }
    Ok(out)
}

/// Verifies strict nesting in path-position space: consecutive chords
/// `(x, y)`, `(x', y')` must satisfy `pos(x) < pos(x') < pos(y') < pos(y)`.
fn check_nesting(fam: &ChordFamily, idx: &PathIndexing) -> Result<(), NestedError> {
    let span = |(x, y): (usize, usize)| -> Result<(usize, usize), NestedError> {
        let px = idx
            .path_position_of(x)
            .ok_or(NestedError::UnindexedEndpoint(x))?;
        let py = idx
            .path_position_of(y)
            .ok_or(NestedError::UnindexedEndpoint(y))?;
        Ok((px, py))
    };
    for pair in fam.chords.windows(2) {
        let (outer, inner) = (pair[0], pair[1]);
        let (ox, oy) = span(outer)?;
        let (ix, iy) = span(inner)?;
        if !(ox < ix && ix < iy && iy < oy) {
            return Err(NestedError::NotNested {
                first: EdgeKey::new(outer.0, outer.1),
                second: EdgeKey::new(inner.0, inner.1),
            });
        }
    }
    if let Some(&(x, y)) = fam.chords.first() {
        let (px, py) = span((x, y))?;
        if px >= py {
            return Err(NestedError::NotNested {
                first: EdgeKey::new(x, y),
                second: EdgeKey::new(x, y),
            });
        }
    }
    Ok(())
}

/// Threads a nested chord family into one simple path.
///
/// Construction: start with the innermost chord, free end on its x side.
/// For each enclosing chord, walk along `p` from the free end outward to
/// that chord's same-side endpoint, traverse the chord, and continue with
/// the free end now on the opposite side. Every non-chord edge of the
/// result is an edge of `p`, and all walked segments lie strictly outside
/// the inner spans, so the result stays simple even when some chords are
/// themselves edges of `p`.
pub fn thread_chords(p: &Path, fam: &ChordFamily, idx: &PathIndexing) -> Result<Path, NestedError> {
    if fam.chords.is_empty() {
        return Err(NestedError::EmptyFamily);
    }
    check_nesting(fam, idx)?;
    let verts = p.vertices();
    let ppos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let pos = |v: usize| -> usize {
        // Chord endpoints were indexed along p, so the lookup cannot fail.
        *ppos.get(&v).expect("chord endpoint lies on the path")
    };

    let innermost = *fam.chords.last().expect("nonempty");
    let mut out = vec![innermost.1, innermost.0];
    let mut free_on_x_side = true;
    let mut free_pos = pos(innermost.0);
    for &(x, y) in fam.chords.iter().rev().skip(1) {
        if free_on_x_side {
            out.extend(verts[pos(x)..free_pos].iter().rev());
            out.push(y);
            free_pos = pos(y);
        } else {
            out.extend(&verts[free_pos + 1..=pos(y)]);
            out.push(x);
            free_pos = pos(x);
        }
        free_on_x_side = !free_on_x_side;
    }
    Ok(Path::new(out).expect("threaded paths contain at least one chord"))
}
