//! Command-line surface. The binary is a thin shim over [`run`]; every
//! subcommand is a small wrapper around the library so that tests and the
//! examples can drive the same code paths in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or I/O error,
//! 3 oracle timeout.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cover::{cover_edges, CoverStrategy};
use crate::families::FamilySpec;
use crate::formats::{write_dot, write_path_system};
use crate::graph::Graph;
use crate::separator::separate;
use crate::verify::{
    check_coverage, check_strong_separation, check_weak_separation, exhaustive_min_separator,
    OracleLimits, OracleMode, OracleOutcome,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

/// How many violations a failing `verify` prints before truncating.
const MAX_DISPLAYED_VIOLATIONS: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "edgesep",
    about = "Build, verify, and benchmark strongly separating path systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Greedy,
    Mk,
    Best,
}

impl From<StrategyArg> for CoverStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Greedy => CoverStrategy::Greedy,
            StrategyArg::Mk => CoverStrategy::RecursiveMk,
            StrategyArg::Best => CoverStrategy::BestOf,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Strong,
    Weak,
}

#[derive(Args, Debug)]
struct OutputArg {
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a named graph family as an edge list.
    Gen {
        /// Family descriptor, e.g. clique:20, bipartite:3,4, triangles:5,
        /// path:50, cycle:50, edgeless:10, gnp:50,0.2 or gnp:50,0.2,1.
        family: String,
        /// Seed for gnp descriptors without an inline seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArg,
        /// Also write a DOT rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Build a strongly separating path system for an edge-list file and
    /// write the path-system document.
    Separate {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Best)]
        strategy: StrategyArg,
        #[command(flatten)]
        out: OutputArg,
        /// Also write a DOT rendering with one color per path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Cover the edges of a graph by paths.
    Cover {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Best)]
        strategy: StrategyArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Check a path-system document against a graph.
    Verify {
        graph: PathBuf,
        system: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
    },
    /// Exhaustive minimum separating family for a tiny graph.
    Oracle {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
        #[arg(long, default_value_t = 10_000)]
        max_millis: u64,
        #[arg(long, default_value_t = 200_000)]
        max_paths: usize,
    },
    /// Separate and verify a corpus of generated families; emit CSV rows.
    Bench {
        /// Family descriptors; a built-in corpus runs when none are given.
        families: Vec<String>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Best)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArg,
        /// Write each instance's path-system document into this directory.
        #[arg(long)]
        paths_dir: Option<PathBuf>,
        /// Report 0 in the millis column so repeated runs are byte-identical.
        #[arg(long)]
        stable_millis: bool,
    },
}

/// Parses `args` (including the program name) and runs the subcommand,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Keep clap's rendering, but force the documented usage code for
            // genuine errors (clap exits 0 for --help/--version).
            let is_error = e.use_stderr();
            let _ = e.print();
            return if is_error { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::Gen {
            family,
            seed,
            out,
            dot,
        } => {
            let spec = FamilySpec::parse(&family, seed).map_err(|e| e.to_string())?;
            let g = spec.generate();
            emit(&out, g.to_edge_list())?;
            if let Some(path) = dot {
                write_file(&path, write_dot(&g, None))?;
            }
            Ok(EXIT_OK)
        }
        Command::Separate {
            input,
            strategy,
            out,
            dot,
        } => {
            let g = read_graph(&input)?;
            let (system, certificate) = separate(&g, strategy.into());
            let violations = check_strong_separation(&system, &g).map_err(|e| e.to_string())?;
            let verified = violations.is_empty();
            let doc = write_path_system(
                &g,
                &system,
                Some(&certificate),
                &[("verified".into(), verified.to_string())],
            );
            emit(&out, doc)?;
            if let Some(path) = dot {
                write_file(&path, write_dot(&g, Some(&system)))?;
            }
            if !verified {
                eprintln!("verification failed: {} violations", violations.len());
                return Ok(EXIT_VERIFICATION_FAILURE);
            }
            Ok(EXIT_OK)
        }
        Command::Cover {
            input,
            strategy,
            out,
        } => {
            let g = read_graph(&input)?;
            let report = cover_edges(&g, strategy.into());
            let uncovered = check_coverage(&report.system, &g);
            let extra = vec![
                ("strategy".into(), report.strategy.to_string()),
                ("paths".into(), report.len().to_string()),
                (
                    "guaranteed_bound".into(),
                    report
                        .guaranteed_bound
                        .map_or_else(|| "none".into(), |b| b.to_string()),
                ),
                ("edge_disjoint".into(), report.edge_disjoint.to_string()),
                ("covered".into(), uncovered.is_empty().to_string()),
            ];
            emit(&out, write_path_system(&g, &report.system, None, &extra))?;
            if !uncovered.is_empty() {
                eprintln!("cover left {} edges uncovered", uncovered.len());
                return Ok(EXIT_VERIFICATION_FAILURE);
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            system,
            mode,
        } => {
            let g = read_graph(&graph)?;
            let text = read_file(&system)?;
            let (n, m, paths) =
                crate::formats::read_path_system(&text).map_err(|e| e.to_string())?;
            if n != g.vertex_count() || m != g.edge_count() {
                println!(
                    "header mismatch: system built for n={n} m={m}, graph has n={} m={}",
                    g.vertex_count(),
                    g.edge_count()
                );
                return Ok(EXIT_VERIFICATION_FAILURE);
            }
            let mut sys = crate::graph::PathSystem::new();
            for p in paths {
                sys.insert(p, crate::graph::PathRole::Cover);
            }
            let checked = match mode {
                ModeArg::Strong => check_strong_separation(&sys, &g),
                ModeArg::Weak => check_weak_separation(&sys, &g),
            };
            let violations = match checked {
                Ok(v) => v,
                Err(e) => {
                    // A sequence that is not a path of the graph fails
                    // verification outright.
                    println!("{e}");
                    return Ok(EXIT_VERIFICATION_FAILURE);
                }
            };
            if violations.is_empty() {
                println!("ok: {} paths separate {} edges", sys.len(), g.edge_count());
                Ok(EXIT_OK)
            } else {
                println!("{} violations", violations.len());
                for v in violations.iter().take(MAX_DISPLAYED_VIOLATIONS) {
                    println!("  {v}");
                }
                if violations.len() > MAX_DISPLAYED_VIOLATIONS {
                    println!(
                        "  ... and {} more",
                        violations.len() - MAX_DISPLAYED_VIOLATIONS
                    );
                }
                Ok(EXIT_VERIFICATION_FAILURE)
            }
        }
        Command::Oracle {
            input,
            mode,
            max_millis,
            max_paths,
        } => {
            let g = read_graph(&input)?;
            let mode = match mode {
                ModeArg::Strong => OracleMode::Strong,
                ModeArg::Weak => OracleMode::Weak,
            };
            let limits = OracleLimits {
                max_paths,
                max_millis,
            };
            match exhaustive_min_separator(&g, mode, limits) {
                OracleOutcome::Found(r) => {
                    println!("minimum {} ({mode})", r.size);
                    for p in r.system.paths() {
                        println!("{p}");
                    }
                    Ok(EXIT_OK)
                }
                OracleOutcome::Timeout => {
                    println!("TIMEOUT");
                    Ok(EXIT_TIMEOUT)
                }
            }
        }
        Command::Bench {
            families,
            strategy,
            seed,
            out,
            paths_dir,
            stable_millis,
        } => run_bench(families, strategy, seed, out, paths_dir, stable_millis),
    }
}

/// Descriptors used when `bench` is invoked with an empty corpus.
const DEFAULT_CORPUS: [&str; 6] = [
    "clique:20",
    "bipartite:10,10",
    "triangles:5",
    "path:50",
    "cycle:50",
    "gnp:50,0.2",
];

fn run_bench(
    families: Vec<String>,
    strategy: StrategyArg,
    seed: u64,
    out: OutputArg,
    paths_dir: Option<PathBuf>,
    stable_millis: bool,
) -> Result<i32, String> {
    let descriptors: Vec<String> = if families.is_empty() {
        DEFAULT_CORPUS.iter().map(|s| s.to_string()).collect()
    } else {
        families
    };
    let strategy: CoverStrategy = strategy.into();
    if let Some(dir) = &paths_dir {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    let mut csv = csv::WriterBuilder::new().from_writer(Vec::new());
    csv.write_record([
        "family",
        "n",
        "m",
        "system_size",
        "ratio",
        "bound19",
        "strategy",
        "millis",
        "verified",
    ])
    .map_err(|e| e.to_string())?;
    let mut all_verified = true;
    for descriptor in &descriptors {
        let spec = FamilySpec::parse(descriptor, seed).map_err(|e| e.to_string())?;
        let label = spec.label();
        let g = spec.generate();
        let started = Instant::now();
        let (system, certificate) = separate(&g, strategy);
        let violations = check_strong_separation(&system, &g).map_err(|e| e.to_string())?;
        let millis = if stable_millis {
            0
        } else {
            started.elapsed().as_millis() as u64
        };
        let verified = violations.is_empty();
        all_verified &= verified;
        csv.write_record([
            label.as_str(),
            &g.vertex_count().to_string(),
            &g.edge_count().to_string(),
            &system.len().to_string(),
            &format!("{:.6}", certificate.realized_ratio),
            &certificate.bound_19_satisfied.to_string(),
            &strategy.to_string(),
            &millis.to_string(),
            &verified.to_string(),
        ])
        .map_err(|e| e.to_string())?;
        if let Some(dir) = &paths_dir {
            let doc = write_path_system(
                &g,
                &system,
                Some(&certificate),
                &[("verified".into(), verified.to_string())],
            );
            write_file(&dir.join(format!("{}.paths", sanitize(&label))), doc)?;
        }
    }
    let bytes = csv.into_inner().map_err(|e| e.to_string())?;
    emit(&out, String::from_utf8(bytes).expect("CSV is UTF-8"))?;
    if all_verified {
        Ok(EXIT_OK)
    } else {
        eprintln!("bench: some instances failed verification");
        Ok(EXIT_VERIFICATION_FAILURE)
    }
}

fn sanitize(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    Graph::parse_edge_list(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &PathBuf, contents: String) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &OutputArg, contents: String) -> Result<(), String> {
    match &out.output {
        Some(path) => write_file(path, contents),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(contents.as_bytes())
                .map_err(|e| e.to_string())
        }
    }
}
