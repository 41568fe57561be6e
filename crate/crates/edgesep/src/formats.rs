//! Text formats: the path-system document and DOT export.
//!
//! A path-system document is a header line `n m k` (host vertex count, host
//! edge count, path count), then `k` lines holding one space-separated
//! vertex sequence each, then any number of `key=value` certificate lines.
//! Readers only need the header and the paths; the key=value block is for
//! humans and diffs.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, Path, PathSystem};
use crate::separator::SeparationCertificate;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: {what}")]
    Malformed { line: usize, what: String },
    #[error("header promises {expected} paths but the document holds {got}")]
    WrongPathCount { expected: usize, got: usize },
}

/// Renders the document. Pass the certificate to append its key=value
/// block; `extra` pairs are appended last in the given order.
pub fn write_path_system(
    g: &Graph,
    sys: &PathSystem,
    certificate: Option<&SeparationCertificate>,
    extra: &[(String, String)],
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", g.vertex_count(), g.edge_count(), sys.len());
    for p in sys.paths() {
        let _ = writeln!(out, "{p}");
    }
    if let Some(cert) = certificate {
        for (key, value) in certificate_pairs(cert) {
            let _ = writeln!(out, "{key}={value}");
        }
    }
    for (key, value) in extra {
        let _ = writeln!(out, "{key}={value}");
    }
    out
}

/// The certificate as deterministic key=value pairs.
pub fn certificate_pairs(cert: &SeparationCertificate) -> Vec<(String, String)> {
    let mut pairs = vec![
        ("total_paths".into(), cert.total_paths.to_string()),
        ("deduped_paths".into(), cert.deduped_paths.to_string()),
        ("duplicate_paths".into(), cert.duplicate_paths.to_string()),
        ("n".into(), cert.n.to_string()),
        ("ratio".into(), format!("{:.6}", cert.realized_ratio)),
        ("bound19".into(), cert.bound_19_satisfied.to_string()),
        ("levels".into(), cert.levels.len().to_string()),
    ];
    for (i, lvl) in cert.levels.iter().enumerate() {
        let mut push = |k: &str, v: String| pairs.push((format!("level.{i}.{k}"), v));
        push("s", lvl.s_size.to_string());
        push("n_prime", lvl.n_prime.to_string());
        push("count_ps", lvl.count_ps.to_string());
        push("count_d", lvl.count_d.to_string());
        push("count_m", lvl.count_m_threads.to_string());
        push("count_n", lvl.count_n_threads.to_string());
        push("cover_strategy", lvl.cover_strategy.to_string());
        push(
            "cover_guarantee",
            lvl.cover_guarantee
                .map_or_else(|| "none".to_string(), |b| b.to_string()),
        );
    }
    pairs
}

/// Parses a document back into its header and paths, ignoring the
/// certificate block.
pub fn read_path_system(text: &str) -> Result<(usize, usize, Vec<Path>), FormatError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| FormatError::Malformed {
            line: 1,
            what: format!("bad header {header:?}"),
        })?;
    let [n, m, k] = nums[..] else {
        return Err(FormatError::Malformed {
            line: 1,
            what: format!("header needs three integers, got {header:?}"),
        });
    };
    let mut paths = Vec::with_capacity(k);
    for _ in 0..k {
        let Some((idx, line)) = lines.next() else {
            return Err(FormatError::WrongPathCount {
                expected: k,
                got: paths.len(),
            });
        };
        let vertices: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| FormatError::Malformed {
                line: idx + 1,
                what: format!("bad path line {line:?}"),
            })?;
        let path = Path::new(vertices).map_err(|e| FormatError::Malformed {
            line: idx + 1,
            what: e.to_string(),
        })?;
        paths.push(path);
    }
    Ok((n, m, paths))
}

/// Fixed palette for DOT path coloring; path `i` uses color `i mod 12`.
const DOT_PALETTE: [&str; 12] = [
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c", "#fdbf6f", "#ff7f00",
    "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
];

/// Renders the graph in DOT. With a system, each edge takes the color of
/// the first path containing it (uncolored edges stay gray) and the edge
/// label names that path's index.
pub fn write_dot(g: &Graph, sys: Option<&PathSystem>) -> String {
    let mut out = String::from("graph edgesep {\n  node [shape=circle fontsize=10];\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let owner = sys.and_then(|s| s.paths().iter().position(|p| p.contains_edge(e)));
        match owner {
            Some(i) => {
                let color = DOT_PALETTE[i % DOT_PALETTE.len()];
                let _ = writeln!(
                    out,
                    "  {} -- {} [color=\"{}\" label=\"p{}\"];",
                    e.lo, e.hi, color, i
                );
            }
            None if sys.is_some() => {
                let _ = writeln!(out, "  {} -- {} [color=\"#999999\"];", e.lo, e.hi);
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.lo, e.hi);
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::CoverStrategy;
    use crate::families;
    use crate::separator::separate;

    #[test]
    fn document_round_trips_paths() {
        let g = families::clique(4);
        let (sys, cert) = separate(&g, CoverStrategy::BestOf);
        let doc = write_path_system(&g, &sys, Some(&cert), &[]);
        let (n, m, paths) = read_path_system(&doc).unwrap();
        assert_eq!(n, 4);
        assert_eq!(m, 6);
        assert_eq!(paths, sys.paths());
    }

    #[test]
    fn document_errors_are_specific() {
        assert_eq!(
            read_path_system("").unwrap_err(),
            FormatError::MissingHeader
        );
        assert!(matches!(
            read_path_system("1 2\n").unwrap_err(),
            FormatError::Malformed { line: 1, .. }
        ));
        assert!(matches!(
            read_path_system("3 2 2\n0 1\n").unwrap_err(),
            FormatError::WrongPathCount {
                expected: 2,
                got: 1
            }
        ));
        assert!(matches!(
            read_path_system("3 2 1\n0 x\n").unwrap_err(),
            FormatError::Malformed { line: 2, .. }
        ));
    }

    #[test]
    fn dot_output_colors_covered_edges() {
        let g = families::path_graph(3);
        let (sys, _) = separate(&g, CoverStrategy::BestOf);
        let dot = write_dot(&g, Some(&sys));
        assert!(dot.starts_with("graph edgesep {"));
        assert!(dot.contains("0 -- 1 [color=\"#"));
        let plain = write_dot(&g, None);
        assert!(plain.contains("0 -- 1;"));
    }
}
