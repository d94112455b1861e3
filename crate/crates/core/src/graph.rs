//! Undirected simple graphs with 1-based vertex labels.
//!
//! Vertices are labelled `1..=n` in every public function. Edges are stored
//! normalized as `(u, v)` with `u < v` and kept in lexicographic order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge `(u, v)` with `u < v`, 1-based.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair so the smaller label comes first.
pub fn normalize(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    // neighbors[v - 1] holds the sorted neighbor labels of v
    neighbors: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::from_edge_list(raw.n, &raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Builds a graph from vertex pairs, deduplicating and normalizing them.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n < 1 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for &(u, v) in pairs {
            for label in [u, v] {
                if label < 1 || label > n {
                    return Err(Error::VertexOutOfRange { label, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert(normalize(u, v));
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u - 1].push(v);
            neighbors[v - 1].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            neighbors,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn null(n: usize) -> Result<Self> {
        Graph::from_edge_list(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let pairs: Vec<Edge> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &pairs)
    }

    pub fn path(n: usize) -> Result<Self> {
        let pairs: Vec<Edge> = (1..n).map(|u| (u, u + 1)).collect();
        Graph::from_edge_list(n, &pairs)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        let mut pairs: Vec<Edge> = (1..n).map(|u| (u, u + 1)).collect();
        pairs.push((1, n));
        Graph::from_edge_list(n, &pairs)
    }

    /// Star with centre 1 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let pairs: Vec<Edge> = (2..=leaves + 1).map(|v| (1, v)).collect();
        Graph::from_edge_list(leaves + 1, &pairs)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v - 1].len()
    }

    /// Degree sequence indexed by vertex (entry `i` is the degree of vertex `i + 1`).
    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u < 1 || v < 1 || u > self.n || v > self.n {
            return false;
        }
        self.neighbors[u - 1].binary_search(&v).is_ok()
    }

    /// Minimum vertex degree.
    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![1usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            Err(Error::VertexOutOfRange {
                label: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

/// Join of two graphs: disjoint union plus every edge between them.
///
/// Vertices of `g2` are relabelled `n1 + 1 ..= n1 + n2`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n2 = g2.order();
    let mut pairs: Vec<Edge> = Vec::with_capacity(g1.size() + g2.size() + n1 * n2);
    pairs.extend_from_slice(g1.edges());
    pairs.extend(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    for u in 1..=n1 {
        for v in 1..=n2 {
            pairs.push((u, n1 + v));
        }
    }
    Graph::from_edge_list(n1 + n2, &pairs).expect("join of valid graphs is valid")
}

/// `m` disjoint copies of K₂, with edges `(2i-1, 2i)`.
pub fn matching_graph(m: usize) -> Result<Graph> {
    let pairs: Vec<Edge> = (1..=m).map(|i| (2 * i - 1, 2 * i)).collect();
    Graph::from_edge_list(2 * m, &pairs)
}

/// The complete-DIM graph `mK₂ ∨ N_s` on `2m + s` vertices.
///
/// Matched vertices are labelled `1..=2m` (pairs `(2i-1, 2i)`), the
/// independent set is `2m+1..=2m+s`.
pub fn generate_cdim(m: usize, s: usize) -> Result<Graph> {
    if m == 0 || s == 0 {
        return Err(Error::InvalidParameter(format!(
            "complete DIM graph needs m >= 1 and s >= 1, got m={m}, s={s}"
        )));
    }
    Ok(join(&matching_graph(m)?, &Graph::null(s)?))
}
