//! Exhaustive ground truth for small graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Default bound on `|E|` accepted by the enumerators.
pub const DEFAULT_MAX_EDGES: usize = 40;
/// Largest order for which [`all_graphs`] runs.
pub const MAX_EXHAUSTIVE_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    /// Every DIM, each sorted, listed in lexicographic order.
    pub dims: Vec<Vec<Edge>>,
    pub max_induced_matching: usize,
    pub min_dim_size: Option<usize>,
    pub max_dim_size: Option<usize>,
}

fn guard(g: &Graph, max_edges: usize) -> Result<()> {
    if g.size() > max_edges {
        return Err(Error::SizeGuard(format!(
            "graph has {} edges, enumeration limit is {max_edges}",
            g.size()
        )));
    }
    Ok(())
}

/// Runs both enumerations with the default edge guard.
pub fn enumerate_dims(g: &Graph) -> Result<OracleResult> {
    enumerate_dims_with_limit(g, DEFAULT_MAX_EDGES)
}

pub fn enumerate_dims_with_limit(g: &Graph, max_edges: usize) -> Result<OracleResult> {
    guard(g, max_edges)?;
    let dims = all_dims(g);
    let min_dim_size = dims.iter().map(Vec::len).min();
    let max_dim_size = dims.iter().map(Vec::len).max();
    Ok(OracleResult {
        dims,
        max_induced_matching: max_induced_matching_unchecked(g),
        min_dim_size,
        max_dim_size,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Unassigned,
    Matched,
    Independent,
}

struct DimSearch<'a> {
    g: &'a Graph,
    side: Vec<Side>,
    // matched neighbours seen so far, per vertex
    matched_deg: Vec<usize>,
    // largest neighbour label, 0 for isolated vertices
    last_neighbor: Vec<usize>,
    out: Vec<Vec<Edge>>,
}

impl DimSearch<'_> {
    fn run(&mut self, v: usize) {
        let n = self.g.order();
        if v > n {
            let m: Vec<Edge> = self
                .g
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| {
                    self.side[a - 1] == Side::Matched && self.side[b - 1] == Side::Matched
                })
                .collect();
            self.out.push(m);
            return;
        }
        for choice in [Side::Matched, Side::Independent] {
            if self.try_assign(v, choice) {
                self.run(v + 1);
            }
            self.undo(v, choice);
        }
    }

    // Assigns v and reports whether every constraint among vertices 1..=v
    // still holds. Always leaves state that `undo` reverses.
    fn try_assign(&mut self, v: usize, choice: Side) -> bool {
        self.side[v - 1] = choice;
        let mut ok = true;
        for &w in self.g.neighbors(v) {
            if w > v {
                continue;
            }
            match (choice, self.side[w - 1]) {
                (Side::Independent, Side::Independent) => ok = false,
                (Side::Matched, Side::Matched) => {
                    self.matched_deg[v - 1] += 1;
                    self.matched_deg[w - 1] += 1;
                    if self.matched_deg[w - 1] > 1 {
                        ok = false;
                    }
                }
                _ => {}
            }
        }
        if self.matched_deg[v - 1] > 1 {
            ok = false;
        }
        if !ok {
            return false;
        }
        // matched vertices whose neighbourhood is fully assigned need a partner
        let closes = |u: usize| self.last_neighbor[u - 1] <= v;
        if choice == Side::Matched && closes(v) && self.matched_deg[v - 1] != 1 {
            return false;
        }
        self.g.neighbors(v).iter().all(|&w| {
            w > v || self.side[w - 1] != Side::Matched || !closes(w) || self.matched_deg[w - 1] == 1
        })
    }

    fn undo(&mut self, v: usize, choice: Side) {
        if choice == Side::Matched {
            for &w in self.g.neighbors(v) {
                if w < v && self.side[w - 1] == Side::Matched {
                    self.matched_deg[v - 1] -= 1;
                    self.matched_deg[w - 1] -= 1;
                }
            }
        }
        self.side[v - 1] = Side::Unassigned;
    }
}

/// Every DIM of `g`, found by splitting the vertices into a 1-regular part
/// and an independent part.
fn all_dims(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.order();
    let mut search = DimSearch {
        g,
        side: vec![Side::Unassigned; n],
        matched_deg: vec![0; n],
        last_neighbor: (1..=n)
            .map(|v| g.neighbors(v).last().copied().unwrap_or(0))
            .collect(),
        out: Vec::new(),
    };
    search.run(1);
    let mut dims = search.out;
    dims.sort();
    dims
}

/// Size of a largest induced matching.
pub fn max_induced_matching(g: &Graph) -> Result<usize> {
    guard(g, DEFAULT_MAX_EDGES)?;
    Ok(max_induced_matching_unchecked(g))
}

fn max_induced_matching_unchecked(g: &Graph) -> usize {
    let mut best = 0;
    for_each_induced_matching(g, |m| best = best.max(m.len()));
    best
}

/// Every induced matching of `g`, including the empty one.
pub fn induced_matchings(g: &Graph) -> Result<Vec<Vec<Edge>>> {
    guard(g, DEFAULT_MAX_EDGES)?;
    let mut out = Vec::new();
    for_each_induced_matching(g, |m| out.push(m.to_vec()));
    Ok(out)
}

fn for_each_induced_matching(g: &Graph, mut visit: impl FnMut(&[Edge])) {
    fn rec(
        g: &Graph,
        start: usize,
        blocked: &mut Vec<u32>,
        current: &mut Vec<Edge>,
        visit: &mut dyn FnMut(&[Edge]),
    ) {
        visit(current);
        let edges = g.edges();
        for (i, &(u, v)) in edges.iter().enumerate().skip(start) {
            if blocked[u - 1] > 0 || blocked[v - 1] > 0 {
                continue;
            }
            // block the closed neighbourhoods of both endpoints
            let touched: Vec<usize> = [u, v]
                .into_iter()
                .chain(g.neighbors(u).iter().copied())
                .chain(g.neighbors(v).iter().copied())
                .collect();
            for &x in &touched {
                blocked[x - 1] += 1;
            }
            current.push((u, v));
            rec(g, i + 1, blocked, current, visit);
            current.pop();
            for &x in &touched {
                blocked[x - 1] -= 1;
            }
        }
    }
    let mut blocked = vec![0u32; g.order()];
    rec(g, 0, &mut blocked, &mut Vec::new(), &mut visit);
}

/// Pairs `(u, v)`, `u < v`, in lexicographic order.
fn all_pairs(n: usize) -> Vec<Edge> {
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect()
}

/// All `2^(n(n-1)/2)` labelled graphs on `n` vertices; bit `i` of the index
/// selects the `i`-th pair in lexicographic order.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::SizeGuard(format!(
            "exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_ORDER}, got {n}"
        )));
    }
    let pairs = all_pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| graph_from_mask(n, &pairs, mask)))
}

/// Number of labelled graphs on `n` vertices.
pub fn labelled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The graph at position `mask` of [`all_graphs`].
pub fn graph_by_index(n: usize, mask: u64) -> Graph {
    graph_from_mask(n, &all_pairs(n), mask)
}

fn graph_from_mask(n: usize, pairs: &[Edge], mask: u64) -> Graph {
    let chosen: Vec<Edge> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edge_list(n, &chosen).expect("pairs are valid")
}

/// The `index`-th graph of the random stream for `seed`.
///
/// Each index draws from its own ChaCha stream, so any partition of the
/// indices across workers reproduces the same graphs.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64, index: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {edge_probability}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let chosen: Vec<Edge> = all_pairs(n)
        .into_iter()
        .filter(|_| rng.random_bool(edge_probability))
        .collect();
    Graph::from_edge_list(n, &chosen)
}

pub fn random_graphs(
    n: usize,
    count: u64,
    edge_probability: f64,
    seed: u64,
) -> Result<impl Iterator<Item = Graph>> {
    random_graph(n, edge_probability, seed, 0)?;
    Ok((0..count).map(move |i| random_graph(n, edge_probability, seed, i).expect("validated")))
}
