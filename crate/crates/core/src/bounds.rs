//! Eigenvalue bounds on the size of a dominating induced matching.
//!
//! Every bound here is conditional: it constrains `|M|` for a DIM `M` *if*
//! one exists. None of them decides existence.

use serde::{Deserialize, Serialize};

use crate::eigen::{eig_sym, Spectrum, GROUP_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{matrix, MatrixKind};

/// Guard applied before ceilings and floors so analytically exact integers
/// are not misrounded.
pub const ROUNDING_GUARD: f64 = 1e-9;
/// One-sided tolerance when counting eigenvalues `≤ -1` and `≥ 1`.
pub const LAMBDA_TOL: f64 = 1e-7;
/// Tolerance for the `(n/2)² ≥ ρ(ρ−1)` comparison and its equality case.
pub const INDEX_BOUND_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IndexBound {
    pub holds: bool,
    pub equality: bool,
    /// `(n/2)² − ρ(ρ−1)`.
    pub slack: f64,
}

/// Checks `(n/2)² ≥ ρ(ρ−1)`, which every graph with a DIM satisfies, with
/// equality exactly for `K_{M,S}` with `n = 4m`.
pub fn index_bound_check(n: usize, rho: f64) -> IndexBound {
    let half = n as f64 / 2.0;
    let slack = half * half - rho * (rho - 1.0);
    IndexBound {
        holds: slack >= -INDEX_BOUND_TOL,
        equality: slack.abs() <= INDEX_BOUND_TOL,
        slack,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimWindow {
    pub lo: i64,
    pub hi: i64,
    /// Smaller root of `4m² − 2nm + ρ² − ρ`.
    pub m1: f64,
    /// Larger root.
    pub m2: f64,
}

impl DimWindow {
    pub fn contains(&self, m: usize) -> bool {
        let m = m as i64;
        self.lo <= m && m <= self.hi
    }
}

/// Window `[lo, hi]` for the size of any DIM of a graph other than `K_{M,S}`.
pub fn dim_size_window(n: usize, rho: f64) -> Result<DimWindow> {
    let nf = n as f64;
    let radicand = nf * nf - 4.0 * (rho * rho - rho);
    if radicand <= ROUNDING_GUARD {
        return Err(Error::NotApplicable(format!(
            "n² − 4(ρ² − ρ) = {radicand:.3e} is not positive"
        )));
    }
    let root = radicand.sqrt();
    let m1 = (nf - root) / 4.0;
    let m2 = (nf + root) / 4.0;
    Ok(DimWindow {
        lo: (m1 - ROUNDING_GUARD).ceil() as i64,
        hi: (m2 + ROUNDING_GUARD).floor() as i64,
        m1,
        m2,
    })
}

/// A lower bound on `|M|`: the raw real value and its clamped ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub raw: f64,
    pub bound: i64,
}

impl BoundValue {
    fn lower(raw: f64) -> Self {
        let bound = ((raw - ROUNDING_GUARD).ceil() as i64).max(0);
        BoundValue { raw, bound }
    }
}

fn require_min_degree(delta_min: usize) -> Result<f64> {
    if delta_min == 0 {
        return Err(Error::NotApplicable("minimum degree is 0".into()));
    }
    Ok(delta_min as f64)
}

/// `⌈n(2δ − ρ) / (2(2δ − 1))⌉` from the index ρ.
pub fn dim_lower_bound_adjacency(n: usize, delta_min: usize, rho: f64) -> Result<BoundValue> {
    let d = require_min_degree(delta_min)?;
    let raw = n as f64 * (2.0 * d - rho) / (2.0 * (2.0 * d - 1.0));
    Ok(BoundValue::lower(raw))
}

/// `⌈(tr L − n(μ₁ − 2δ)) / (2(2δ + 1))⌉` from the Laplacian spectral radius.
pub fn dim_lower_bound_laplacian(
    n: usize,
    delta_min: usize,
    trace_l: f64,
    mu1: f64,
) -> Result<BoundValue> {
    let d = require_min_degree(delta_min)?;
    let raw = (trace_l - n as f64 * (mu1 - 2.0 * d)) / (2.0 * (2.0 * d + 1.0));
    Ok(BoundValue::lower(raw))
}

/// `⌈(tr Q − n(q₁ − 2δ)) / (2(2δ − 1))⌉` from the signless Laplacian spectral radius.
pub fn dim_lower_bound_signless(
    n: usize,
    delta_min: usize,
    trace_q: f64,
    q1: f64,
) -> Result<BoundValue> {
    let d = require_min_degree(delta_min)?;
    let raw = (trace_q - n as f64 * (q1 - 2.0 * d)) / (2.0 * (2.0 * d - 1.0));
    Ok(BoundValue::lower(raw))
}

/// `(|Λ⁻|, |Λ⁺|)`: adjacency eigenvalues `≤ −1` and `≥ 1`, with multiplicity.
pub fn lambda_counts(spec: &Spectrum) -> (usize, usize) {
    let count = |pred: &dyn Fn(f64) -> bool| -> usize {
        spec.groups
            .iter()
            .filter(|g| pred(g.value))
            .map(|g| g.multiplicity)
            .sum()
    };
    (
        count(&|x| x <= -1.0 + LAMBDA_TOL),
        count(&|x| x >= 1.0 - LAMBDA_TOL),
    )
}

/// `min(|Λ⁻|, |Λ⁺|)`, an upper bound on the size of any induced matching.
pub fn induced_matching_upper_bound(spec: &Spectrum) -> usize {
    let (neg, pos) = lambda_counts(spec);
    neg.min(pos)
}

/// Whether the adjacency spectrum has at least `m` eigenvalues `≤ −1` and at least `m` `≥ 1`.
pub fn interlacing_counts(spec: &Spectrum, m: usize) -> bool {
    let (neg, pos) = lambda_counts(spec);
    neg >= m && pos >= m
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub rho_a: f64,
    pub mu_1: f64,
    pub q_1: f64,
    pub trace_l: f64,
    pub trace_q: f64,
    pub adjacency_spectrum: Spectrum,
    /// Present unless `n² − 4(ρ² − ρ) ≤ 0`.
    pub window: Option<DimWindow>,
    pub lb_adjacency: Option<BoundValue>,
    pub lb_laplacian: Option<BoundValue>,
    pub lb_signless: Option<BoundValue>,
    pub lambda_minus: usize,
    pub lambda_plus: usize,
    pub ub_lambda_count: usize,
    pub index_bound: IndexBound,
    /// Reasons for each absent bound.
    pub notes: Vec<String>,
}

/// Computes the three spectra once and evaluates every bound that applies.
pub fn full_report(g: &Graph) -> Result<BoundsReport> {
    let n = g.order();
    let delta = g.min_degree();
    let a = eig_sym(&matrix(g, MatrixKind::Adjacency))?;
    let lap = matrix(g, MatrixKind::Laplacian);
    let sl = matrix(g, MatrixKind::SignlessLaplacian);
    let mu_1 = eig_sym(&lap)?.values[0];
    let q_1 = eig_sym(&sl)?.values[0];
    let rho_a = a.values[0];
    let (trace_l, trace_q) = (lap.trace(), sl.trace());
    let adjacency_spectrum = a.spectrum(GROUP_TOL);
    let (lambda_minus, lambda_plus) = lambda_counts(&adjacency_spectrum);

    fn keep<T>(notes: &mut Vec<String>, label: &str, r: Result<T>) -> Option<T> {
        r.map_err(|e| notes.push(format!("{label}: {e}"))).ok()
    }
    let mut notes = Vec::new();
    let window = keep(&mut notes, "window", dim_size_window(n, rho_a));
    let lb_adjacency = keep(
        &mut notes,
        "adjacency lower bound",
        dim_lower_bound_adjacency(n, delta, rho_a),
    );
    let lb_laplacian = keep(
        &mut notes,
        "laplacian lower bound",
        dim_lower_bound_laplacian(n, delta, trace_l, mu_1),
    );
    let lb_signless = keep(
        &mut notes,
        "signless lower bound",
        dim_lower_bound_signless(n, delta, trace_q, q_1),
    );

    Ok(BoundsReport {
        n,
        edges: g.size(),
        min_degree: delta,
        rho_a,
        mu_1,
        q_1,
        trace_l,
        trace_q,
        adjacency_spectrum,
        window,
        lb_adjacency,
        lb_laplacian,
        lb_signless,
        lambda_minus,
        lambda_plus,
        ub_lambda_count: lambda_minus.min(lambda_plus),
        index_bound: index_bound_check(n, rho_a),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_bound_values() {
        assert!(index_bound_check(9, 2.6364).holds);
        let k2 = index_bound_check(2, 1.0);
        assert!(k2.holds && !k2.equality);
        // K_{M,S} with m = 1, s = 2: ρ² − ρ = 4
        let rho = (1.0 + 17f64.sqrt()) / 2.0;
        let eq = index_bound_check(4, rho);
        assert!(eq.holds && eq.equality);
    }

    #[test]
    fn window_values() {
        let w = dim_size_window(9, 2.6364).unwrap();
        assert_eq!((w.lo, w.hi), (1, 4));
        assert!((w.m1 - 0.254017).abs() < 1e-6);
        assert!((w.m2 - 4.245983).abs() < 1e-6);
        let w = dim_size_window(2, 1.0).unwrap();
        assert_eq!((w.lo, w.hi), (0, 1));
        assert!(matches!(
            dim_size_window(4, (1.0 + 17f64.sqrt()) / 2.0),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn adjacency_bound() {
        let b = dim_lower_bound_adjacency(9, 2, 2.6364).unwrap();
        assert!((b.raw - 2.0454).abs() < 1e-4);
        assert_eq!(b.bound, 3);
        assert_eq!(dim_lower_bound_adjacency(2, 1, 1.0).unwrap().bound, 1);
        assert!(dim_lower_bound_adjacency(3, 0, 0.0).is_err());
    }

    #[test]
    fn laplacian_bound() {
        let b = dim_lower_bound_laplacian(9, 4, 42.0, 9.0).unwrap();
        assert!((b.raw - 33.0 / 18.0).abs() < 1e-12);
        assert_eq!(b.bound, 2);
        assert_eq!(dim_lower_bound_laplacian(2, 1, 2.0, 2.0).unwrap().bound, 1);
        assert!(dim_lower_bound_laplacian(3, 0, 0.0, 0.0).is_err());
    }

    #[test]
    fn signless_bound() {
        let b = dim_lower_bound_signless(9, 2, 22.0, 5.7321).unwrap();
        assert!((b.raw - 1.0685).abs() < 1e-4);
        assert_eq!(b.bound, 2);
        assert_eq!(dim_lower_bound_signless(2, 1, 2.0, 2.0).unwrap().bound, 1);
    }

    #[test]
    fn exact_integer_raw_not_misrounded() {
        // raw = 1 up to rounding noise must give 1, not 2
        let b = BoundValue::lower(1.0 + 1e-13);
        assert_eq!(b.bound, 1);
        assert_eq!(BoundValue::lower(-3.2).bound, 0);
    }

    #[test]
    fn lambda_bounds() {
        let k2 = Spectrum::from_groups([(1.0, 1), (-1.0, 1)]);
        assert_eq!(induced_matching_upper_bound(&k2), 1);
        assert!(interlacing_counts(&k2, 1));
        assert!(!interlacing_counts(&k2, 2));
        let noisy = Spectrum::from_groups([(1.0 - 1e-12, 1), (-1.0 + 1e-12, 1)]);
        assert_eq!(induced_matching_upper_bound(&noisy), 1);
    }

    #[test]
    fn report_for_edgeless_graph() {
        let r = full_report(&Graph::null(4).unwrap()).unwrap();
        assert!(r.lb_adjacency.is_none() && r.lb_laplacian.is_none() && r.lb_signless.is_none());
        assert_eq!(r.notes.len(), 3);
        assert_eq!(r.window.map(|w| (w.lo, w.hi)), Some((0, 2)));
        assert_eq!(r.ub_lambda_count, 0);
    }

    #[test]
    fn report_for_k2() {
        let r = full_report(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(r.window.map(|w| (w.lo, w.hi)), Some((0, 1)));
        assert_eq!(r.lb_adjacency.unwrap().bound, 1);
        assert_eq!(r.ub_lambda_count, 1);
    }
}
