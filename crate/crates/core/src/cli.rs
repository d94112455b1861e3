//! Command-line front end.
//!
//! Every command prints either human-readable text or, with `--json`, a
//! single [`OutputEnvelope`]. Exit codes: 0 success, 1 sweep violations,
//! 2 input error, 3 numerical failure, 4 size guard.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bounds::{full_report, BoundsReport};
use crate::eigen::{eig_sym, format_value, GROUP_TOL};
use crate::error::{Error, Result};
use crate::graph::{generate_cdim, Edge, Graph};
use crate::io::{parse_graph, serialize_graph};
use crate::matrix::{matrix, MatrixKind};
use crate::oracle::{enumerate_dims_with_limit, DEFAULT_MAX_EDGES};
use crate::recognition::{recognize_cdim, recognize_cdim_spectral};
use crate::sweep::{run_sweep, SweepConfig, SweepMode};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct OutputEnvelope<T: Serialize> {
    pub command: String,
    pub input_digest: String,
    pub result: T,
    pub format_version: u32,
}

#[derive(Debug, Parser)]
#[command(
    name = "dimspec",
    version,
    about = "Spectra, recognition and bounds for dominating induced matchings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MatrixArg {
    A,
    L,
    Q,
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> Self {
        match m {
            MatrixArg::A => MatrixKind::Adjacency,
            MatrixArg::L => MatrixKind::Laplacian,
            MatrixArg::Q => MatrixKind::SignlessLaplacian,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the grouped spectrum of A, L or Q.
    Spectra {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "a")]
        matrix: MatrixArg,
        #[arg(long)]
        json: bool,
    },
    /// Test whether the graph is K_{M,S} and print the matching.
    Recognize {
        file: PathBuf,
        /// Use the principal-eigenvector recognizer (connected graphs only).
        #[arg(long)]
        spectral: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every eigenvalue bound on DIM size.
    Bounds {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all DIMs by brute force.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write the edge list of K_{M,S} with |M| = m and |S| = s.
    Generate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        /// Output file; standard output when omitted.
        out_file: Option<PathBuf>,
    },
    /// Check every bound against the oracle over a family of graphs.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        count: u64,
        #[arg(long, default_value_t = 0.5)]
        edge_probability: f64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in hash.iter() {
        write!(out, "{b:02x}").unwrap();
    }
    format!("sha256:{out}")
}

fn load(path: &Path) -> Result<(Graph, String)> {
    let bytes = std::fs::read(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::Parse {
        line: 0,
        message: "file is not valid UTF-8".into(),
    })?;
    Ok((parse_graph(&text)?, digest(&bytes)))
}

fn emit_json<T: Serialize>(
    out: &mut dyn Write,
    command: &str,
    input_digest: String,
    result: T,
) -> Result<()> {
    let env = OutputEnvelope {
        command: command.to_string(),
        input_digest,
        result,
        format_version: FORMAT_VERSION,
    };
    let text = serde_json::to_string_pretty(&env).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn format_matching(m: &[Edge]) -> String {
    m.iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_bound(b: Option<crate::bounds::BoundValue>) -> String {
    match b {
        Some(b) => format!("{} (raw {:.4})", b.bound, b.raw),
        None => "not applicable".into(),
    }
}

/// Text rendering of a bounds report.
pub fn render_bounds(r: &BoundsReport) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "n = {}, |E| = {}, min degree = {}",
        r.n, r.edges, r.min_degree
    )
    .unwrap();
    writeln!(
        s,
        "rho(A) = {:.4}, mu_1(L) = {:.4}, q_1(Q) = {:.4}",
        r.rho_a, r.mu_1, r.q_1
    )
    .unwrap();
    writeln!(
        s,
        "tr(L) = {}, tr(Q) = {}",
        format_value(r.trace_l),
        format_value(r.trace_q)
    )
    .unwrap();
    writeln!(s, "adjacency spectrum: {}", r.adjacency_spectrum).unwrap();
    writeln!(s, "bounds below hold for |M| if the graph has a DIM M:").unwrap();
    match r.window {
        Some(w) => writeln!(
            s,
            "  size window: [{}, {}] (m1 = {:.6}, m2 = {:.6})",
            w.lo, w.hi, w.m1, w.m2
        ),
        None => writeln!(s, "  size window: not applicable"),
    }
    .unwrap();
    writeln!(s, "  adjacency lower bound: {}", opt_bound(r.lb_adjacency)).unwrap();
    writeln!(s, "  laplacian lower bound: {}", opt_bound(r.lb_laplacian)).unwrap();
    writeln!(s, "  signless lower bound: {}", opt_bound(r.lb_signless)).unwrap();
    writeln!(
        s,
        "induced matching upper bound: {} (|Lambda-| = {}, |Lambda+| = {})",
        r.ub_lambda_count, r.lambda_minus, r.lambda_plus
    )
    .unwrap();
    writeln!(
        s,
        "(n/2)^2 >= rho(rho-1): {} (slack {:.4}{})",
        r.index_bound.holds,
        r.index_bound.slack,
        if r.index_bound.equality {
            ", equality"
        } else {
            ""
        }
    )
    .unwrap();
    for note in &r.notes {
        writeln!(s, "note: {note}").unwrap();
    }
    s
}

#[derive(Serialize)]
struct SpectraResult {
    matrix: MatrixKind,
    spectrum: crate::eigen::Spectrum,
    values: Vec<f64>,
}

#[derive(Serialize)]
struct OracleSummary {
    max_edges: usize,
    #[serde(flatten)]
    result: crate::oracle::OracleResult,
}

/// Executes one command, writing its output to `out`. Returns the exit code
/// on success paths (0, or 1 for a sweep with violations).
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Spectra {
            file,
            matrix: kind,
            json,
        } => {
            let (g, dig) = load(&file)?;
            let kind = MatrixKind::from(kind);
            let dec = eig_sym(&matrix(&g, kind))?;
            let spectrum = dec.spectrum(GROUP_TOL);
            if json {
                emit_json(
                    out,
                    "spectra",
                    dig,
                    SpectraResult {
                        matrix: kind,
                        spectrum,
                        values: dec.values,
                    },
                )?;
            } else {
                writeln!(out, "{spectrum}")?;
            }
        }
        Command::Recognize {
            file,
            spectral,
            json,
        } => {
            let (g, dig) = load(&file)?;
            let cert = if spectral {
                recognize_cdim_spectral(&g)?
            } else {
                recognize_cdim(&g)
            };
            if json {
                emit_json(out, "recognize", dig, &cert)?;
            } else {
                match &cert {
                    Some(c) => writeln!(out, "complete DIM: {}", format_matching(&c.matching))?,
                    None => writeln!(out, "none")?,
                }
            }
        }
        Command::Bounds { file, json } => {
            let (g, dig) = load(&file)?;
            let report = full_report(&g)?;
            if json {
                emit_json(out, "bounds", dig, &report)?;
            } else {
                write!(out, "{}", render_bounds(&report))?;
            }
        }
        Command::Oracle {
            file,
            max_edges,
            json,
        } => {
            let (g, dig) = load(&file)?;
            let result = enumerate_dims_with_limit(&g, max_edges)?;
            if json {
                emit_json(out, "oracle", dig, OracleSummary { max_edges, result })?;
            } else {
                if result.dims.is_empty() {
                    writeln!(out, "no DIM")?;
                } else {
                    writeln!(out, "DIMs ({}):", result.dims.len())?;
                    for m in &result.dims {
                        writeln!(out, "  {}", format_matching(m))?;
                    }
                }
                writeln!(out, "max induced matching: {}", result.max_induced_matching)?;
            }
        }
        Command::Generate { m, s, out_file } => {
            let g = generate_cdim(m, s)?;
            let text = serialize_graph(&g);
            let body = format!("# K_{{M,S}} with m = {m}, s = {s}\n{text}");
            match out_file {
                Some(path) => std::fs::write(path, body)?,
                None => out.write_all(body.as_bytes())?,
            }
        }
        Command::Sweep {
            n,
            mode,
            seed,
            count,
            edge_probability,
            jobs,
            json,
        } => {
            let mode = match mode {
                ModeArg::Exhaustive => SweepMode::Exhaustive,
                ModeArg::Random => SweepMode::Random {
                    count,
                    seed,
                    edge_probability,
                },
            };
            let config = SweepConfig { n, mode, jobs };
            let report = run_sweep(&config)?;
            let code = if report.is_clean() { 0 } else { 1 };
            if json {
                #[derive(Serialize)]
                struct SweepOut {
                    config: SweepConfig,
                    report: crate::sweep::SweepReport,
                }
                let args = serde_json::to_string(&config).map_err(|e| Error::Io(e.to_string()))?;
                emit_json(
                    out,
                    "sweep",
                    digest(args.as_bytes()),
                    SweepOut { config, report },
                )?;
            } else {
                match config.mode {
                    SweepMode::Exhaustive => writeln!(out, "sweep n = {n}, exhaustive")?,
                    SweepMode::Random { count, seed, edge_probability } => writeln!(
                        out,
                        "sweep n = {n}, random: count = {count}, seed = {seed}, p = {edge_probability}"
                    )?,
                }
                writeln!(
                    out,
                    "graphs: {}, connected: {}, with DIM: {}, complete DIM: {}, index bound equality cases: {}",
                    report.graphs,
                    report.connected_graphs,
                    report.dim_graphs,
                    report.complete_dim_graphs,
                    report.index_bound_equality_cases
                )?;
                for (name, evaluated) in &report.checks {
                    writeln!(
                        out,
                        "  {name}: {evaluated} evaluated, {} violations",
                        report.violations_of(name)
                    )?;
                }
                writeln!(out, "violations: {}", report.violation_count)?;
                for v in &report.violations {
                    writeln!(out, "  [{}] {} :: {}", v.check, v.graph, v.detail)?;
                }
            }
            return Ok(code);
        }
    }
    Ok(0)
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
