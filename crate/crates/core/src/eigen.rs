//! Dense symmetric eigensolver (cyclic Jacobi), spectrum grouping and
//! principal eigenpairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{MatrixKind, SymMatrix};

/// Off-diagonal Frobenius norm below `CONVERGENCE_TOL * ‖M‖_F` ends the iteration.
pub const CONVERGENCE_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
/// Default absolute tolerance for merging eigenvalues into one group.
pub const GROUP_TOL: f64 = 1e-6;

/// Eigenvalues in non-increasing order; column `i` of `vectors` pairs with `values[i]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Row-major `n x n`, eigenvectors in columns.
    vectors: Vec<f64>,
    order: usize,
    pub sweeps: usize,
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Unit-norm eigenvector for `values[i]`.
    pub fn vector(&self, i: usize) -> Vec<f64> {
        (0..self.order)
            .map(|r| self.vectors[r * self.order + i])
            .collect()
    }

    /// max over i of ‖M·vᵢ − λᵢ·vᵢ‖∞.
    pub fn max_residual(&self, m: &SymMatrix) -> f64 {
        (0..self.order)
            .map(|i| {
                let v = self.vector(i);
                let mv = m.mul_vec(&v);
                mv.iter()
                    .zip(&v)
                    .map(|(a, b)| (a - self.values[i] * b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// max |VᵀV − I| entry.
    pub fn orthogonality_error(&self) -> f64 {
        let n = self.order;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let dot: f64 = (0..n)
                    .map(|r| self.vectors[r * n + i] * self.vectors[r * n + j])
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    pub fn spectrum(&self, tol: f64) -> Spectrum {
        group_spectrum(&self.values, tol)
    }
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
pub fn eig_sym(m: &SymMatrix) -> Result<EigenDecomposition> {
    let n = m.order();
    let mut a: Vec<f64> = (0..n).flat_map(|i| m.row(i).to_vec()).collect();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = CONVERGENCE_TOL * m.frobenius_norm();
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values: Vec<f64> = idx.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &src) in idx.iter().enumerate() {
        for r in 0..n {
            vectors[r * n + col] = v[r * n + src];
        }
    }
    Ok(EigenDecomposition {
        values,
        vectors,
        order: n,
        sweeps,
    })
}

/// Eigenvalues only, non-increasing.
pub fn eigenvalues(m: &SymMatrix) -> Result<Vec<f64>> {
    eig_sym(m).map(|d| d.values)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumGroup {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues grouped with multiplicities, strictly decreasing values.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    pub groups: Vec<SpectrumGroup>,
}

impl Spectrum {
    /// Builds from `(value, multiplicity)` pairs as given; no merging or sorting.
    pub fn from_groups(groups: impl IntoIterator<Item = (f64, usize)>) -> Self {
        Spectrum {
            groups: groups
                .into_iter()
                .map(|(value, multiplicity)| SpectrumGroup {
                    value,
                    multiplicity,
                })
                .collect(),
        }
    }

    /// Total multiplicity.
    pub fn order(&self) -> usize {
        self.groups.iter().map(|g| g.multiplicity).sum()
    }

    /// Expands back to a non-increasing list of eigenvalues.
    pub fn values(&self) -> Vec<f64> {
        self.groups
            .iter()
            .flat_map(|g| std::iter::repeat_n(g.value, g.multiplicity))
            .collect()
    }

    pub fn largest(&self) -> Option<f64> {
        self.groups.first().map(|g| g.value)
    }

    /// True when both spectra have the same group structure, values within `tol`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.groups.len() == other.groups.len()
            && self
                .groups
                .iter()
                .zip(&other.groups)
                .all(|(a, b)| a.multiplicity == b.multiplicity && (a.value - b.value).abs() <= tol)
    }
}

/// Formats a value as an integer when it is one (to 1e-9), else with 4 decimals.
pub fn format_value(x: f64) -> String {
    let r = x.round();
    if (x - r).abs() <= 1e-9 {
        format!("{}", r as i64)
    } else {
        format!("{x:.4}")
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|g| {
                if g.multiplicity == 1 {
                    format_value(g.value)
                } else {
                    format!("{}^[{}]", format_value(g.value), g.multiplicity)
                }
            })
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Merges runs of adjacent values closer than `tol`; each group carries its mean.
pub fn group_spectrum(values: &[f64], tol: f64) -> Spectrum {
    let mut groups: Vec<SpectrumGroup> = Vec::new();
    let mut sum = 0.0;
    let mut prev = f64::NAN;
    for &x in values {
        match groups.last_mut() {
            Some(g) if (prev - x).abs() <= tol => {
                g.multiplicity += 1;
                sum += x;
                g.value = sum / g.multiplicity as f64;
            }
            _ => {
                groups.push(SpectrumGroup {
                    value: x,
                    multiplicity: 1,
                });
                sum = x;
            }
        }
        prev = x;
    }
    Spectrum { groups }
}

/// Largest eigenvalue with its eigenvector scaled so that the first entry is 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrincipalPair {
    pub radius: f64,
    pub vector: Vec<f64>,
    /// Number of eigenvalues within [`GROUP_TOL`] of `radius`.
    pub multiplicity: usize,
    /// 1-based vertex whose entry was scaled to 1 (vertex 1 unless its entry vanishes).
    pub pivot: usize,
}

/// True when the off-diagonal support of `m` is a connected graph.
pub fn is_irreducible(m: &SymMatrix) -> bool {
    let n = m.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for (j, &x) in m.row(i).iter().enumerate() {
            if j != i && x != 0.0 && !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}

/// Scales `v` so the entry at the first non-negligible position becomes 1.
pub fn normalize_leading(v: &[f64]) -> (Vec<f64>, usize) {
    let max = v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let pivot = v.iter().position(|x| x.abs() > 1e-8 * max).unwrap_or(0);
    let scale = v[pivot];
    (v.iter().map(|x| x / scale).collect(), pivot + 1)
}

/// Principal eigenpair of a graph matrix.
///
/// For adjacency and signless Laplacian matrices the support must be
/// connected so that the Perron vector is positive; otherwise
/// [`Error::Disconnected`] is returned. The Laplacian needs no such check.
pub fn principal_pair(m: &SymMatrix, kind: MatrixKind) -> Result<PrincipalPair> {
    if kind != MatrixKind::Laplacian && !is_irreducible(m) {
        return Err(Error::Disconnected);
    }
    let dec = eig_sym(m)?;
    let radius = dec.values[0];
    let multiplicity = dec
        .values
        .iter()
        .take_while(|&&x| (radius - x).abs() <= GROUP_TOL)
        .count();
    let (vector, pivot) = normalize_leading(&dec.vector(0));
    Ok(PrincipalPair {
        radius,
        vector,
        multiplicity,
        pivot,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::matrix::matrix;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn k2_laplacian() {
        let m = SymMatrix::from_rows(&[vec![1.0, -1.0], vec![-1.0, 1.0]]).unwrap();
        let d = eig_sym(&m).unwrap();
        assert!(close(&d.values, &[2.0, 0.0], 1e-14));
        assert!(d.max_residual(&m) < 1e-12);
    }

    #[test]
    fn triangle_adjacency() {
        let m = matrix(&Graph::complete(3).unwrap(), MatrixKind::Adjacency);
        let d = eig_sym(&m).unwrap();
        assert!(close(&d.values, &[2.0, -1.0, -1.0], 1e-12));
        assert!(d.orthogonality_error() < 1e-12);
    }

    #[test]
    fn zero_and_one_by_one() {
        let d = eig_sym(&SymMatrix::zeros(3)).unwrap();
        assert_eq!(d.values, vec![0.0; 3]);
        assert_eq!(d.sweeps, 0);
        let d = eig_sym(&SymMatrix::from_rows(&[vec![5.0]]).unwrap()).unwrap();
        assert_eq!(d.values, vec![5.0]);
    }

    #[test]
    fn grouping() {
        let s = group_spectrum(&[2.0, -1.0 - 1e-10, -1.0 + 1e-10], 1e-6);
        assert_eq!(s.groups.len(), 2);
        assert_eq!(s.groups[1].multiplicity, 2);
        assert!((s.groups[1].value + 1.0).abs() < 1e-15);
        let s = group_spectrum(&[3.0, 2.0, 1.0], 1e-6);
        assert_eq!(s.groups.len(), 3);
        assert_eq!(s.order(), 3);
        assert_eq!(group_spectrum(&[], 1e-6).order(), 0);
    }

    #[test]
    fn display_spectrum() {
        let s = Spectrum::from_groups([(9.0, 1), (6.0, 2), (-1.0, 1), (1.22875, 1)]);
        assert_eq!(s.to_string(), "9, 6^[2], -1, 1.2288");
        assert_eq!(format_value(-1e-12), "0");
    }

    #[test]
    fn principal_k2() {
        let m = matrix(&Graph::complete(2).unwrap(), MatrixKind::Adjacency);
        let p = principal_pair(&m, MatrixKind::Adjacency).unwrap();
        assert!((p.radius - 1.0).abs() < 1e-14);
        assert!(close(&p.vector, &[1.0, 1.0], 1e-12));
        assert_eq!(p.pivot, 1);
    }

    #[test]
    fn principal_rejects_disconnected() {
        let g = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        for kind in [MatrixKind::Adjacency, MatrixKind::SignlessLaplacian] {
            assert_eq!(
                principal_pair(&matrix(&g, kind), kind),
                Err(Error::Disconnected)
            );
        }
        assert!(principal_pair(&matrix(&g, MatrixKind::Laplacian), MatrixKind::Laplacian).is_ok());
    }

    #[test]
    fn principal_pivot_skips_zero_entry() {
        // Laplacian of the path 1-2-3: top eigenvector (1, -2, 1)
        let g = Graph::from_edge_list(3, &[(1, 2), (2, 3)]).unwrap();
        let p = principal_pair(&matrix(&g, MatrixKind::Laplacian), MatrixKind::Laplacian).unwrap();
        assert!((p.radius - 3.0).abs() < 1e-12);
        assert!(close(&p.vector, &[1.0, -2.0, 1.0], 1e-10));
        let (v, pivot) = normalize_leading(&[0.0, 2.0, -2.0]);
        assert_eq!(pivot, 2);
        assert_eq!(v, vec![0.0, 1.0, -1.0]);
    }
}
