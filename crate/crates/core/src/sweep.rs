//! Soundness sweep: every bound and recognizer checked against the oracle.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    dim_lower_bound_adjacency, dim_lower_bound_laplacian, dim_lower_bound_signless,
    dim_size_window, index_bound_check, induced_matching_upper_bound, interlacing_counts,
};
use crate::closed_form::cdim_radius_upper_bounds;
use crate::eigen::{eig_sym, GROUP_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::serialize_graph;
use crate::matrix::{matrix, MatrixKind};
use crate::oracle::{self, enumerate_dims, MAX_EXHAUSTIVE_ORDER};
use crate::recognition::{recognize_cdim, recognize_cdim_spectral, DimCertificate};

/// Slack allowed when comparing computed radii against upper bounds.
const RADIUS_TOL: f64 = 1e-9;
/// Violations kept verbatim in a report; the rest are only counted.
const MAX_LISTED: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SweepMode {
    Exhaustive,
    Random {
        count: u64,
        seed: u64,
        edge_probability: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: usize,
    #[serde(flatten)]
    pub mode: SweepMode,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub graphs: u64,
    pub connected_graphs: u64,
    pub dim_graphs: u64,
    pub complete_dim_graphs: u64,
    pub index_bound_equality_cases: u64,
    /// Number of times each check was evaluated.
    pub checks: BTreeMap<String, u64>,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }

    /// Violation count for one named check.
    pub fn violations_of(&self, check: &str) -> usize {
        self.violations.iter().filter(|v| v.check == check).count()
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.graphs += other.graphs;
        self.connected_graphs += other.connected_graphs;
        self.dim_graphs += other.dim_graphs;
        self.complete_dim_graphs += other.complete_dim_graphs;
        self.index_bound_equality_cases += other.index_bound_equality_cases;
        for (k, v) in other.checks {
            *self.checks.entry(k).or_default() += v;
        }
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        self.violations.truncate(MAX_LISTED);
        self
    }
}

/// Names of the checks performed by [`check_graph`].
pub mod checks {
    pub const WINDOW: &str = "window_containment";
    pub const LB_ADJACENCY: &str = "lower_bound_adjacency";
    pub const LB_LAPLACIAN: &str = "lower_bound_laplacian";
    pub const LB_SIGNLESS: &str = "lower_bound_signless";
    pub const LAMBDA_UPPER: &str = "lambda_upper_bound";
    pub const INTERLACING: &str = "interlacing_counts";
    pub const INDEX_BOUND: &str = "index_bound_inequality";
    pub const INDEX_BOUND_EQUALITY: &str = "index_bound_equality_case";
    pub const RHO_A_UPPER: &str = "rho_a_upper_bound";
    pub const RHO_Q_UPPER: &str = "rho_q_upper_bound";
    pub const MU1_ORDER: &str = "mu1_at_most_n";
    pub const RECOGNIZERS_AGREE: &str = "recognizers_agree";
    pub const RECOGNITION_ORACLE: &str = "recognition_matches_oracle";

    pub const ALL: [&str; 13] = [
        WINDOW,
        LB_ADJACENCY,
        LB_LAPLACIAN,
        LB_SIGNLESS,
        LAMBDA_UPPER,
        INTERLACING,
        INDEX_BOUND,
        INDEX_BOUND_EQUALITY,
        RHO_A_UPPER,
        RHO_Q_UPPER,
        MU1_ORDER,
        RECOGNIZERS_AGREE,
        RECOGNITION_ORACLE,
    ];
}

struct Recorder<'a> {
    graph: &'a Graph,
    report: SweepReport,
}

impl Recorder<'_> {
    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        *self.report.checks.entry(name.to_string()).or_default() += 1;
        if !ok {
            self.report.violation_count += 1;
            if self.report.violations.len() < MAX_LISTED {
                self.report.violations.push(Violation {
                    check: name.to_string(),
                    graph: serialize_graph(self.graph).replace('\n', ";"),
                    detail: detail(),
                });
            }
        }
    }
}

/// Runs every soundness check on one graph.
pub fn check_graph(g: &Graph) -> Result<SweepReport> {
    use checks::*;

    let n = g.order();
    let nf = n as f64;
    let delta = g.min_degree();
    let a_dec = eig_sym(&matrix(g, MatrixKind::Adjacency))?;
    let lap = matrix(g, MatrixKind::Laplacian);
    let sl = matrix(g, MatrixKind::SignlessLaplacian);
    let mu1 = eig_sym(&lap)?.values[0];
    let q1 = eig_sym(&sl)?.values[0];
    let rho = a_dec.values[0];
    let spectrum = a_dec.spectrum(GROUP_TOL);
    let oracle = enumerate_dims(g)?;
    let connected = g.is_connected();

    let mut rec = Recorder {
        graph: g,
        report: SweepReport {
            graphs: 1,
            ..Default::default()
        },
    };
    if connected {
        rec.report.connected_graphs = 1;
    }

    rec.check(MU1_ORDER, mu1 <= nf + RADIUS_TOL, || {
        format!("mu1 = {mu1} > n = {n}")
    });

    let ub = induced_matching_upper_bound(&spectrum);
    let im = oracle.max_induced_matching;
    rec.check(LAMBDA_UPPER, ub >= im, || {
        format!("min(|Λ-|,|Λ+|) = {ub} < induced matching {im}")
    });
    // the counts are monotone in m, so the largest induced matching covers all
    rec.check(INTERLACING, interlacing_counts(&spectrum, im), || {
        format!("fewer than {im} eigenvalues on one side of ±1")
    });

    let cdim = recognize_cdim(g);
    let ib = index_bound_check(n, rho);

    if !oracle.dims.is_empty() {
        rec.report.dim_graphs = 1;
        rec.check(INDEX_BOUND, ib.holds, || format!("slack {:.3e}", ib.slack));

        let mut sizes: Vec<usize> = oracle.dims.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let window = dim_size_window(n, rho);
        for &m in &sizes {
            match &window {
                Ok(w) => rec.check(WINDOW, w.contains(m), || {
                    format!("m = {m} outside [{}, {}]", w.lo, w.hi)
                }),
                // only K_{M,S} with n = 4m may make the radicand vanish
                Err(_) => rec.check(WINDOW, ib.equality && cdim.is_some(), || {
                    format!("window undefined for m = {m} (rho = {rho})")
                }),
            }
            if delta >= 1 {
                let b = dim_lower_bound_adjacency(n, delta, rho)?;
                rec.check(LB_ADJACENCY, b.bound <= m as i64, || {
                    format!("{} > m = {m}", b.bound)
                });
                let b = dim_lower_bound_laplacian(n, delta, lap.trace(), mu1)?;
                rec.check(LB_LAPLACIAN, b.bound <= m as i64, || {
                    format!("{} > m = {m}", b.bound)
                });
                let b = dim_lower_bound_signless(n, delta, sl.trace(), q1)?;
                rec.check(LB_SIGNLESS, b.bound <= m as i64, || {
                    format!("{} > m = {m}", b.bound)
                });
            }
            if m >= 1 && n > 2 * m {
                let (rho_a_max, rho_q_max) = cdim_radius_upper_bounds(n, m)?;
                rec.check(RHO_A_UPPER, rho <= rho_a_max + RADIUS_TOL, || {
                    format!("rho = {rho} > {rho_a_max} (m = {m})")
                });
                rec.check(RHO_Q_UPPER, q1 <= rho_q_max + RADIUS_TOL, || {
                    format!("q1 = {q1} > {rho_q_max} (m = {m})")
                });
            }
        }

        let quarter = cdim.as_ref().is_some_and(|c| n == 4 * c.matching.len());
        if ib.equality {
            rec.report.index_bound_equality_cases = 1;
        }
        rec.check(INDEX_BOUND_EQUALITY, ib.equality == quarter, || {
            format!(
                "equality = {}, complete DIM with n = 4m = {quarter}",
                ib.equality
            )
        });
    }

    // recognition against the oracle: some DIM is complete iff recognized
    let oracle_complete: Vec<DimCertificate> = oracle
        .dims
        .iter()
        .filter_map(|m| DimCertificate::from_matching(g, m).ok().flatten())
        .filter(|c| c.complete)
        .collect();
    if cdim.is_some() {
        rec.report.complete_dim_graphs = 1;
    }
    let consistent = match &cdim {
        Some(c) => c.verify(g) && oracle_complete.first() == Some(c),
        None => oracle_complete.is_empty(),
    };
    rec.check(RECOGNITION_ORACLE, consistent, || {
        format!(
            "recognized {:?}, oracle complete DIMs {}",
            cdim.as_ref().map(|c| &c.matching),
            oracle_complete.len()
        )
    });

    if connected {
        let spectral = recognize_cdim_spectral(g)?;
        rec.check(RECOGNIZERS_AGREE, spectral == cdim, || {
            format!(
                "spectral {:?} vs combinatorial {:?}",
                spectral.as_ref().map(|c| &c.matching),
                cdim.as_ref().map(|c| &c.matching)
            )
        });
    }

    Ok(rec.report)
}

fn run_indexed<F>(total: u64, jobs: usize, make: F) -> Result<SweepReport>
where
    F: Fn(u64) -> Result<Graph> + Sync,
{
    let work = || {
        (0..total)
            .into_par_iter()
            .map(|i| make(i).and_then(|g| check_graph(&g)))
            .try_reduce(SweepReport::default, |a, b| Ok(a.merge(b)))
    };
    if jobs <= 1 {
        return (0..total).try_fold(SweepReport::default(), |acc, i| {
            Ok(acc.merge(check_graph(&make(i)?)?))
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    pool.install(work)
}

/// Runs the sweep described by `config`.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let n = config.n;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    match config.mode {
        SweepMode::Exhaustive => {
            if n > MAX_EXHAUSTIVE_ORDER {
                return Err(Error::SizeGuard(format!(
                    "exhaustive sweep is limited to n <= {MAX_EXHAUSTIVE_ORDER}, got {n}"
                )));
            }
            let total = oracle::labelled_graph_count(n);
            run_indexed(total, config.jobs, |i| Ok(oracle::graph_by_index(n, i)))
        }
        SweepMode::Random {
            count,
            seed,
            edge_probability,
        } => {
            oracle::random_graph(n, edge_probability, seed, 0)?;
            run_indexed(count, config.jobs, |i| {
                oracle::random_graph(n, edge_probability, seed, i)
            })
        }
    }
}
