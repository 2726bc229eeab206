//! The `oddspan` command line: construct named graphs, analyze graph6
//! streams, profile forbidden families, and run the verification harness.
//!
//! All machine output is JSON with a top-level `"schema": 1` field; graphs
//! travel as graph6. Exit codes: 0 success (including verification runs whose
//! counterexamples are below-bound findings), 1 operational failure or a
//! suite-failing counterexample, 2 usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use oddspan::constructions::{
    balanced_cycle_blowup, balanced_cycle_blowup_with_order, bc_graph, bc_graph_with_order,
    complete_bipartite, cycle_graph, haggkvist_graph, haggkvist_graph_with_order, turan_graph,
};
use oddspan::enumerate::{enumerate_for_each, EnumSpec};
use oddspan::family::OddFamily;
use oddspan::graph::Graph;
use oddspan::graph6::{graph6_decode, graph6_string};
use oddspan::verify::{
    analyze_graph, random_counterexample_search, verify_theorem_exhaustive, VerificationReport,
};
use std::io::{BufRead, Write};

#[derive(Parser, Debug)]
#[command(name = "oddspan", version, about = "odd-cycle bipartiteness threshold toolkit")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a named construction as a graph6 line
    Construct {
        #[arg(long = "type", value_enum)]
        kind: ConstructKind,
        /// Total order, for kinds that accept one (errors unless divisible)
        #[arg(long)]
        n: Option<usize>,
        /// Part count for turan
        #[arg(long)]
        r: Option<usize>,
        /// Part sizes for kab
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Cycle length for cycle and blowup
        #[arg(long)]
        m: Option<usize>,
        /// Part size for blowup, bc, and haggkvist
        #[arg(long)]
        t: Option<usize>,
        /// Spine parameter for bc (spine cycle length 2*ell+1)
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Read graph6 lines on stdin, write one JSON analysis per line
    Analyze {
        /// Spectrum length ceiling (defaults to each graph's order)
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print the derived parameters and threshold for a family
    Profile {
        /// Comma-separated odd cycle lengths, e.g. 3,7,19
        #[arg(long)]
        family: String,
        /// Also evaluate the bound at this order
        #[arg(long)]
        n: Option<usize>,
    },
    /// Exhaustively verify the theorem over all graphs of one order
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Required: only exhaustive verification runs under this subcommand
        #[arg(long)]
        exhaustive: bool,
    },
    /// Randomized counterexample search near the degree boundary
    Search {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Stream canonical representatives of all graphs of one order to a file
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only graphs with at least this minimum degree
        #[arg(long = "min-degree")]
        min_degree: Option<usize>,
        /// Exclude graphs containing a cycle with a length in this list
        #[arg(long = "free")]
        free: Option<String>,
        #[arg(long)]
        out: std::path::PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConstructKind {
    Turan,
    Kab,
    Cycle,
    Blowup,
    Bc,
    Haggkvist,
}

/// Worker-count override honored by `main`.
pub const THREADS_ENV: &str = "ODDSPAN_THREADS";

/// Parses and runs one invocation. Returns the process exit code.
pub fn cli_dispatch(
    argv: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn run(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
) -> Result<i32, String> {
    match command {
        Command::Construct { kind, n, r, a, b, m, t, ell } => {
            let g = build_construction(kind, n, r, a, b, m, t, ell)?;
            writeln!(stdout, "{}", graph6_string(&g)).map_err(io_msg)?;
            Ok(0)
        }
        Command::Analyze { cap } => {
            for line in stdin.lines() {
                let line = line.map_err(io_msg)?;
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    continue;
                }
                let g = graph6_decode(trimmed.as_bytes())
                    .map_err(|e| format!("bad graph6 line {trimmed:?}: {e}"))?;
                let record = analyze_graph(&g, cap);
                writeln!(stdout, "{}", serde_json::to_string(&record).unwrap())
                    .map_err(io_msg)?;
            }
            Ok(0)
        }
        Command::Profile { family, n } => {
            let fam: OddFamily = family.parse().map_err(|e| format!("{e}"))?;
            let profile = fam.profile();
            let threshold = profile.threshold();
            let mut doc = serde_json::json!({
                "schema": 1,
                "family": fam.lengths().collect::<Vec<_>>(),
                "reducedFamily": fam.reduced().lengths().collect::<Vec<_>>(),
                "ell": profile.ell,
                "k": profile.k,
                "regime": profile.regime,
                "threshold": threshold,
            });
            if let Some(n) = n {
                let equality = (threshold.numerator * n as u64).is_multiple_of(threshold.denominator);
                doc["bound"] = serde_json::json!({
                    "n": n,
                    "equalityDegree": equality
                        .then(|| threshold.numerator * n as u64 / threshold.denominator),
                    "minStrictDegree": threshold.min_degree_strictly_above(n),
                });
            }
            writeln!(stdout, "{}", serde_json::to_string_pretty(&doc).unwrap())
                .map_err(io_msg)?;
            Ok(0)
        }
        Command::Verify { family, n, exhaustive } => {
            if !exhaustive {
                return Err("pass --exhaustive; no other verify mode exists".into());
            }
            let fam: OddFamily = family.parse().map_err(|e| format!("{e}"))?;
            let report = verify_theorem_exhaustive(&fam, n).map_err(|e| format!("{e}"))?;
            emit_report(stdout, &report)
        }
        Command::Search { family, n, trials, seed } => {
            let fam: OddFamily = family.parse().map_err(|e| format!("{e}"))?;
            let report =
                random_counterexample_search(&fam, n, trials, seed).map_err(|e| format!("{e}"))?;
            emit_report(stdout, &report)
        }
        Command::Enumerate { n, min_degree, free, out } => {
            let exclude_family = match free {
                None => None,
                Some(s) => Some(s.parse::<OddFamily>().map_err(|e| format!("{e}"))?),
            };
            let spec = EnumSpec { n, min_degree_at_least: min_degree, exclude_family };
            let file = std::fs::File::create(&out)
                .map_err(|e| format!("cannot create {}: {e}", out.display()))?;
            let mut writer = std::io::BufWriter::new(file);
            let mut write_error = None;
            let count = enumerate_for_each(&spec, |g: &Graph| {
                if write_error.is_none()
                    && let Err(e) = writeln!(writer, "{}", graph6_string(g)) {
                        write_error = Some(e);
                    }
            })
            .map_err(|e| format!("{e}"))?;
            if let Some(e) = write_error {
                return Err(io_msg(e));
            }
            writer.flush().map_err(io_msg)?;
            let summary = serde_json::json!({
                "schema": 1,
                "n": n,
                "count": count,
                "out": out.display().to_string(),
            });
            writeln!(stdout, "{}", serde_json::to_string(&summary).unwrap()).map_err(io_msg)?;
            Ok(0)
        }
    }
}

fn emit_report(stdout: &mut dyn Write, report: &VerificationReport) -> Result<i32, String> {
    writeln!(stdout, "{}", report.to_json()).map_err(io_msg)?;
    Ok(if report.suite_failure { 1 } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn build_construction(
    kind: ConstructKind,
    n: Option<usize>,
    r: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    m: Option<usize>,
    t: Option<usize>,
    ell: Option<usize>,
) -> Result<Graph, String> {
    let need = |name: &str, v: Option<usize>| v.ok_or_else(|| format!("--{name} is required"));
    let g = match kind {
        ConstructKind::Turan => turan_graph(need("n", n)?, need("r", r)?),
        ConstructKind::Kab => complete_bipartite(need("a", a)?, need("b", b)?),
        ConstructKind::Cycle => cycle_graph(need("m", m)?),
        ConstructKind::Blowup => match (t, n) {
            (Some(t), _) => balanced_cycle_blowup(need("m", m)?, t),
            (None, Some(n)) => balanced_cycle_blowup_with_order(need("m", m)?, n),
            (None, None) => return Err("blowup needs --t or --n".into()),
        },
        ConstructKind::Bc => match (t, n) {
            (Some(t), _) => bc_graph(need("ell", ell)?, t),
            (None, Some(n)) => bc_graph_with_order(need("ell", ell)?, n),
            (None, None) => return Err("bc needs --t or --n".into()),
        },
        ConstructKind::Haggkvist => match (t, n) {
            (Some(t), _) => haggkvist_graph(t),
            (None, Some(n)) => haggkvist_graph_with_order(n),
            (None, None) => return Err("haggkvist needs --t or --n".into()),
        },
    };
    g.map_err(|e| format!("{e}"))
}

fn io_msg(e: std::io::Error) -> String {
    format!("i/o failure: {e}")
}
