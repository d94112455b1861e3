use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;

/// Which graph matrix to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// A(G)
    Adjacency,
    /// L(G) = D(G) - A(G)
    Laplacian,
    /// Q(G) = D(G) + A(G)
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn letter(self) -> char {
        match self {
            MatrixKind::Adjacency => 'a',
            MatrixKind::Laplacian => 'l',
            MatrixKind::SignlessLaplacian => 'q',
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless_laplacian",
        };
        f.write_str(name)
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "adjacency" => Ok(MatrixKind::Adjacency),
            "l" | "laplacian" => Ok(MatrixKind::Laplacian),
            "q" | "signless" | "signless_laplacian" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(Error::InvalidParameter(format!(
                "unknown matrix kind `{other}`"
            ))),
        }
    }
}

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    /// Builds from rows; fails unless the rows form a symmetric square array.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let order = rows.len();
        let mut m = SymMatrix::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidParameter("matrix is not square".into()));
            }
            m.data[i * order..(i + 1) * order].copy_from_slice(row);
        }
        for i in 0..order {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvalidParameter(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.order);
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Builds A(G), L(G) or Q(G). Row `i` corresponds to vertex `i + 1`.
pub fn matrix(g: &Graph, kind: MatrixKind) -> SymMatrix {
    let n = g.order();
    let mut m = SymMatrix::zeros(n);
    let off = match kind {
        MatrixKind::Laplacian => -1.0,
        _ => 1.0,
    };
    for &(u, v) in g.edges() {
        m.set_sym(u - 1, v - 1, off);
    }
    if kind != MatrixKind::Adjacency {
        for v in 1..=n {
            m.set_sym(v - 1, v - 1, g.degree(v) as f64);
        }
    }
    m
}
