//! Closed-form spectra and principal eigenvectors of complete-DIM graphs.
//!
//! A complete-DIM graph `K_{M,S}` with `|M| = m` and `|S| = s` is the join
//! `mK₂ ∨ N_s`. Labelling the matched vertices first, each of A, L and Q has
//! the block form
//!
//! ```text
//! C = [ C₁        δ·j_r·j_sᵀ ]
//!     [ δ·j_s·j_rᵀ    C₂     ]     r = 2m
//! ```
//!
//! with `C₁·j_r = γ₁·j_r` and `C₂·j_s = γ₂·j_s`. The 2×2 quotient
//! `[[γ₁, δ√(rs)], [δ√(rs), γ₂]]` carries the two "non-local" eigenvalues;
//! every eigenvector `(1, x)` of it lifts to `(j_r, √(r/s)·x·j_s)`.

use serde::{Deserialize, Serialize};

use crate::eigen::{PrincipalPair, Spectrum};
use crate::error::{Error, Result};
use crate::matrix::MatrixKind;

/// Values closer than this are merged when building a closed-form spectrum.
const MERGE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    pub kind: MatrixKind,
    pub gamma1: f64,
    pub gamma2: f64,
    /// Off-diagonal sign, ±1.
    pub delta: f64,
    /// Number of matched vertices, `2m`.
    pub r: usize,
    /// Size of the independent set.
    pub s: usize,
}

fn check_ms(m: usize, s: usize) -> Result<()> {
    if m == 0 || s == 0 {
        return Err(Error::InvalidParameter(format!(
            "need m >= 1 and s >= 1, got m={m}, s={s}"
        )));
    }
    Ok(())
}

fn split_order(n: usize, m: usize) -> Result<usize> {
    if m == 0 || n <= 2 * m {
        return Err(Error::InvalidParameter(format!(
            "need m >= 1 and n >= 2m + 1, got n={n}, m={m}"
        )));
    }
    Ok(n - 2 * m)
}

/// The kind-specific 2×2 quotient matrix.
pub fn quotient_matrix(kind: MatrixKind, m: usize, s: usize) -> Result<QuotientMatrix> {
    check_ms(m, s)?;
    let r = 2 * m;
    let (gamma1, gamma2, delta) = match kind {
        MatrixKind::Adjacency => (1.0, 0.0, 1.0),
        // C₁ = L(mK₂) + sI and C₂ = L(N_s) + rI, so the row sums are s and r.
        // Without the shift the constants would be (-s, -r).
        MatrixKind::Laplacian => (s as f64, r as f64, -1.0),
        MatrixKind::SignlessLaplacian => (s as f64 + 2.0, r as f64, 1.0),
    };
    Ok(QuotientMatrix {
        kind,
        gamma1,
        gamma2,
        delta,
        r,
        s,
    })
}

impl QuotientMatrix {
    pub fn off_diagonal(&self) -> f64 {
        self.delta * ((self.r * self.s) as f64).sqrt()
    }

    pub fn to_rows(&self) -> [[f64; 2]; 2] {
        let b = self.off_diagonal();
        [[self.gamma1, b], [b, self.gamma2]]
    }

    pub fn trace(&self) -> f64 {
        self.gamma1 + self.gamma2
    }

    pub fn determinant(&self) -> f64 {
        self.gamma1 * self.gamma2 - self.delta * self.delta * (self.r * self.s) as f64
    }

    /// `(θ₁, θ₂)` with `θ₁ ≥ θ₂`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        quotient_eigenvalues(self)
    }

    /// The `x` for which `(1, x)` is an eigenvector for `theta`.
    pub fn eigenvector_tail(&self, theta: f64) -> f64 {
        (theta - self.gamma1) / self.off_diagonal()
    }
}

pub fn quotient_eigenvalues(b: &QuotientMatrix) -> (f64, f64) {
    let sum = b.gamma1 + b.gamma2;
    let diff = b.gamma1 - b.gamma2;
    let disc = (diff * diff + 4.0 * b.delta * b.delta * (b.r * b.s) as f64).sqrt();
    ((sum + disc) / 2.0, (sum - disc) / 2.0)
}

/// Lifts a quotient eigenvector `(1, x)` to `(j_r, √(r/s)·x·j_s)`.
pub fn lift_eigenvector(x: f64, r: usize, s: usize) -> Result<Vec<f64>> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "independent part must be nonempty".into(),
        ));
    }
    let tail = (r as f64 / s as f64).sqrt() * x;
    Ok(std::iter::repeat_n(1.0, r)
        .chain(std::iter::repeat_n(tail, s))
        .collect())
}

fn adjacency_radical(n: usize, m: usize) -> f64 {
    let radicand = 1.0 + 8.0 * (m * (n - 2 * m)) as f64;
    assert!(radicand >= 0.0, "adjacency radicand must be nonnegative");
    radicand.sqrt()
}

fn signless_radical(n: usize, m: usize) -> f64 {
    let radicand = ((n + 2) * (n + 2)) as f64 - 16.0 * m as f64;
    assert!(
        radicand >= 0.0,
        "signless Laplacian radicand must be nonnegative"
    );
    radicand.sqrt()
}

/// Sorts groups by value, drops empty ones and merges coinciding values.
fn assemble(groups: Vec<(f64, usize)>) -> Spectrum {
    let mut groups: Vec<(f64, usize)> = groups.into_iter().filter(|&(_, k)| k > 0).collect();
    groups.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut merged: Vec<(f64, usize)> = Vec::with_capacity(groups.len());
    for (value, k) in groups {
        match merged.last_mut() {
            Some(last) if (last.0 - value).abs() <= MERGE_TOL => last.1 += k,
            _ => merged.push((value, k)),
        }
    }
    Spectrum::from_groups(merged)
}

/// Spectrum of A, L or Q of `K_{M,S}` on `n` vertices with `|M| = m`.
pub fn cdim_spectrum(kind: MatrixKind, n: usize, m: usize) -> Result<Spectrum> {
    let s = split_order(n, m)?;
    let nf = n as f64;
    let (mf, sf) = (m as f64, s as f64);
    let groups = match kind {
        MatrixKind::Adjacency => {
            let rad = adjacency_radical(n, m);
            vec![
                ((1.0 + rad) / 2.0, 1),
                (1.0, m - 1),
                (0.0, s - 1),
                (-1.0, m),
                ((1.0 - rad) / 2.0, 1),
            ]
        }
        MatrixKind::Laplacian => vec![
            (nf, 1),
            (sf + 2.0, m),
            (sf, m - 1),
            (2.0 * mf, s - 1),
            (0.0, 1),
        ],
        MatrixKind::SignlessLaplacian => {
            let rad = signless_radical(n, m);
            vec![
                ((2.0 + nf + rad) / 2.0, 1),
                (sf + 2.0, m - 1),
                (sf, m),
                (2.0 * mf, s - 1),
                ((2.0 + nf - rad) / 2.0, 1),
            ]
        }
    };
    Ok(assemble(groups))
}

/// Principal eigenpair of A, L or Q of `K_{M,S}`: radius and `(j_{2m}, t·j_s)`.
pub fn cdim_principal(kind: MatrixKind, n: usize, m: usize) -> Result<PrincipalPair> {
    let s = split_order(n, m)?;
    let (nf, mf, sf) = (n as f64, m as f64, s as f64);
    let (radius, tail) = match kind {
        MatrixKind::Adjacency => {
            let rho = (1.0 + adjacency_radical(n, m)) / 2.0;
            (rho, (rho - 1.0) / sf)
        }
        MatrixKind::Laplacian => (nf, -2.0 * mf / sf),
        MatrixKind::SignlessLaplacian => {
            let rho = (2.0 + nf + signless_radical(n, m)) / 2.0;
            (rho, (rho - (sf + 2.0)) / sf)
        }
    };
    let multiplicity = cdim_spectrum(kind, n, m)?.groups[0].multiplicity;
    let vector = std::iter::repeat_n(1.0, 2 * m)
        .chain(std::iter::repeat_n(tail, s))
        .collect();
    Ok(PrincipalPair {
        radius,
        vector,
        multiplicity,
        pivot: 1,
    })
}

/// Upper bounds on ρ(A(G)) and ρ(Q(G)) for any order-`n` graph with a DIM of size `m`.
pub fn cdim_radius_upper_bounds(n: usize, m: usize) -> Result<(f64, f64)> {
    split_order(n, m)?;
    let nf = n as f64;
    Ok((
        (1.0 + adjacency_radical(n, m)) / 2.0,
        (2.0 + nf + signless_radical(n, m)) / 2.0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_matrices() {
        let b = quotient_matrix(MatrixKind::Adjacency, 3, 3).unwrap();
        let r18 = 18f64.sqrt();
        assert_eq!(b.to_rows(), [[1.0, r18], [r18, 0.0]]);
        let b = quotient_matrix(MatrixKind::Laplacian, 1, 1).unwrap();
        let r2 = 2f64.sqrt();
        assert_eq!(b.to_rows(), [[1.0, -r2], [-r2, 2.0]]);
        let b = quotient_matrix(MatrixKind::SignlessLaplacian, 3, 3).unwrap();
        assert_eq!(b.to_rows(), [[5.0, r18], [r18, 6.0]]);
        assert!(quotient_matrix(MatrixKind::Adjacency, 0, 3).is_err());
        assert!(quotient_matrix(MatrixKind::Adjacency, 3, 0).is_err());
    }

    #[test]
    fn quotient_eigenvalue_values() {
        for m in 1..5 {
            for s in 1..5 {
                let b = quotient_matrix(MatrixKind::Laplacian, m, s).unwrap();
                let (t1, t2) = b.eigenvalues();
                assert!((t1 - (2 * m + s) as f64).abs() < 1e-12);
                assert!(t2.abs() < 1e-12);
            }
        }
        let (t1, t2) = quotient_matrix(MatrixKind::Adjacency, 3, 3)
            .unwrap()
            .eigenvalues();
        let r73 = 73f64.sqrt();
        assert!((t1 - (1.0 + r73) / 2.0).abs() < 1e-12);
        assert!((t2 - (1.0 - r73) / 2.0).abs() < 1e-12);
        assert!((t1 - 4.772).abs() < 1e-3 && (t2 + 3.772).abs() < 1e-3);
        let (t1, t2) = quotient_matrix(MatrixKind::SignlessLaplacian, 3, 3)
            .unwrap()
            .eigenvalues();
        assert!((t1 - 9.772).abs() < 1e-3 && (t2 - 1.228).abs() < 1e-3);
    }

    #[test]
    fn lifted_tails() {
        assert_eq!(
            lift_eigenvector(0.0, 2, 3).unwrap(),
            vec![1.0, 1.0, 0.0, 0.0, 0.0]
        );
        assert!(lift_eigenvector(1.0, 2, 0).is_err());
        let b = quotient_matrix(MatrixKind::Laplacian, 3, 3).unwrap();
        let x = b.eigenvector_tail(9.0);
        assert!((x + 2f64.sqrt()).abs() < 1e-12);
        let w = lift_eigenvector(x, 6, 3).unwrap();
        assert!((w[8] + 2.0).abs() < 1e-12);
        let b = quotient_matrix(MatrixKind::Adjacency, 3, 3).unwrap();
        let w = lift_eigenvector(b.eigenvector_tail(b.eigenvalues().0), 6, 3).unwrap();
        assert!((w[6] - 1.2573).abs() < 1e-4);
    }

    #[test]
    fn triangle_spectra() {
        assert_eq!(
            cdim_spectrum(MatrixKind::Laplacian, 3, 1).unwrap(),
            Spectrum::from_groups([(3.0, 2), (0.0, 1)])
        );
        assert_eq!(
            cdim_spectrum(MatrixKind::Adjacency, 3, 1).unwrap(),
            Spectrum::from_groups([(2.0, 1), (-1.0, 2)])
        );
        assert_eq!(
            cdim_spectrum(MatrixKind::SignlessLaplacian, 3, 1).unwrap(),
            Spectrum::from_groups([(4.0, 1), (1.0, 2)])
        );
    }

    #[test]
    fn merged_groups_on_coincidence() {
        // n = 4m: s + 2 = 2m + 2 vs 2m; m = 1, s = 2 gives s = 2m
        let l = cdim_spectrum(MatrixKind::Laplacian, 4, 1).unwrap();
        assert_eq!(l, Spectrum::from_groups([(4.0, 2), (2.0, 1), (0.0, 1)]));
        for kind in MatrixKind::ALL {
            for m in 1..8 {
                for n in 2 * m + 1..2 * m + 8 {
                    let sp = cdim_spectrum(kind, n, m).unwrap();
                    assert_eq!(sp.order(), n);
                    assert!(sp.groups.windows(2).all(|w| w[0].value > w[1].value));
                }
            }
        }
    }

    #[test]
    fn principal_vectors() {
        let p = cdim_principal(MatrixKind::Laplacian, 9, 3).unwrap();
        assert_eq!(p.radius, 9.0);
        assert_eq!(p.vector, [vec![1.0; 6], vec![-2.0; 3]].concat());
        let p = cdim_principal(MatrixKind::Adjacency, 3, 1).unwrap();
        assert!((p.radius - 2.0).abs() < 1e-15);
        assert_eq!(p.vector, vec![1.0; 3]);
        let p = cdim_principal(MatrixKind::SignlessLaplacian, 9, 3).unwrap();
        assert!((p.radius - 9.772).abs() < 1e-3);
        assert!((p.vector[8] - 1.5907).abs() < 1e-4);
        assert!(cdim_principal(MatrixKind::Adjacency, 6, 3).is_err());
    }

    #[test]
    fn radius_bounds() {
        let (a, q) = cdim_radius_upper_bounds(9, 3).unwrap();
        assert!((a - 4.772).abs() < 1e-3 && (q - 9.772).abs() < 1e-3);
        let (a, q) = cdim_radius_upper_bounds(3, 1).unwrap();
        assert!((a - 2.0).abs() < 1e-15 && (q - 4.0).abs() < 1e-15);
        assert!(cdim_radius_upper_bounds(4, 2).is_err());
    }
}
