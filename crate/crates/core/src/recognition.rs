//! Matching predicates and recognition of complete-DIM graphs.

use serde::{Deserialize, Serialize};

use crate::eigen::principal_pair;
use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph};
use crate::matrix::{matrix, MatrixKind};

/// Relative tolerance for grouping principal-eigenvector entries into levels.
pub const LEVEL_TOL: f64 = 1e-6;

/// A DIM together with the vertex partition it induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimCertificate {
    /// Sorted, normalized matching edges.
    pub matching: Vec<Edge>,
    /// V(M), sorted.
    pub matched_vertices: Vec<usize>,
    /// S = V \ V(M), sorted.
    pub independent: Vec<usize>,
    /// Whether every V(M)–S pair is an edge and S is nonempty.
    pub complete: bool,
}

impl DimCertificate {
    /// Builds the certificate for `m` if it is a DIM of `g`.
    pub fn from_matching(g: &Graph, m: &[Edge]) -> Result<Option<Self>> {
        if !is_dim(g, m)? {
            return Ok(None);
        }
        let mut matching: Vec<Edge> = m.iter().map(|&(u, v)| normalize(u, v)).collect();
        matching.sort_unstable();
        matching.dedup();
        let mut in_m = vec![false; g.order()];
        for &(u, v) in &matching {
            in_m[u - 1] = true;
            in_m[v - 1] = true;
        }
        let matched_vertices: Vec<usize> = (1..=g.order()).filter(|&v| in_m[v - 1]).collect();
        let independent: Vec<usize> = (1..=g.order()).filter(|&v| !in_m[v - 1]).collect();
        let cross = matched_vertices.len() * independent.len();
        let complete =
            !matching.is_empty() && !independent.is_empty() && g.size() == matching.len() + cross;
        Ok(Some(DimCertificate {
            matching,
            matched_vertices,
            independent,
            complete,
        }))
    }

    /// Re-checks every certificate invariant against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(true) = is_induced_matching(g, &self.matching) else {
            return false;
        };
        let Ok(true) = is_dim(g, &self.matching) else {
            return false;
        };
        let Ok(true) = is_independent_set(g, &self.independent) else {
            return false;
        };
        let mut all: Vec<usize> = self
            .matched_vertices
            .iter()
            .chain(&self.independent)
            .copied()
            .collect();
        all.sort_unstable();
        if all != (1..=g.order()).collect::<Vec<_>>() {
            return false;
        }
        let mut vm: Vec<usize> = self.matching.iter().flat_map(|&(u, v)| [u, v]).collect();
        vm.sort_unstable();
        if vm != self.matched_vertices {
            return false;
        }
        let is_complete = !self.matching.is_empty()
            && !self.independent.is_empty()
            && self
                .matched_vertices
                .iter()
                .all(|&x| self.independent.iter().all(|&y| g.has_edge(x, y)))
            && g.size()
                == self.matching.len() + self.matched_vertices.len() * self.independent.len();
        is_complete == self.complete
    }
}

fn check_edges(g: &Graph, m: &[Edge]) -> Result<()> {
    for &(u, v) in m {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(u, v));
        }
    }
    Ok(())
}

/// True iff no edge of `g` has both ends in `s`.
pub fn is_independent_set(g: &Graph, s: &[usize]) -> Result<bool> {
    let mut member = vec![false; g.order()];
    for &v in s {
        g.check_vertex(v)?;
        member[v - 1] = true;
    }
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| !(member[u - 1] && member[v - 1])))
}

/// Marks each vertex with the index of the M-edge covering it; `None` if
/// two M-edges share a vertex.
fn cover_map(g: &Graph, m: &[Edge]) -> Option<Vec<Option<usize>>> {
    let mut cover = vec![None; g.order()];
    for (i, &(u, v)) in m.iter().enumerate() {
        for x in [u, v] {
            if cover[x - 1].is_some() {
                return None;
            }
            cover[x - 1] = Some(i);
        }
    }
    Some(cover)
}

fn dedup_edges(m: &[Edge]) -> Vec<Edge> {
    let mut out: Vec<Edge> = m.iter().map(|&(u, v)| normalize(u, v)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// True iff `m` is a matching whose endpoints induce exactly the edges of `m`.
pub fn is_induced_matching(g: &Graph, m: &[Edge]) -> Result<bool> {
    check_edges(g, m)?;
    let m = dedup_edges(m);
    let Some(cover) = cover_map(g, &m) else {
        return Ok(false);
    };
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| match (cover[u - 1], cover[v - 1]) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }))
}

/// True iff `m` is a matching and every other edge shares an end-vertex
/// with exactly one edge of `m`.
pub fn is_dim(g: &Graph, m: &[Edge]) -> Result<bool> {
    check_edges(g, m)?;
    let m = dedup_edges(m);
    let Some(cover) = cover_map(g, &m) else {
        return Ok(false);
    };
    for &(u, v) in g.edges() {
        if m.binary_search(&(u, v)).is_ok() {
            continue;
        }
        let touching = match (cover[u - 1], cover[v - 1]) {
            (None, None) => 0,
            (Some(_), None) | (None, Some(_)) => 1,
            (Some(a), Some(b)) => {
                if a == b {
                    1
                } else {
                    2
                }
            }
        };
        if touching != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks whether `matched` (indexed by vertex − 1) splits `g` as `K_{M,S}`.
fn certify_partition(g: &Graph, matched: &[bool]) -> Option<DimCertificate> {
    let n = g.order();
    let vm_count = matched.iter().filter(|&&b| b).count();
    let s_count = n - vm_count;
    if vm_count == 0 || s_count == 0 || vm_count % 2 != 0 {
        return None;
    }
    let mut matching = Vec::with_capacity(vm_count / 2);
    for v in 1..=n {
        let (mut in_vm, mut in_s) = (0usize, 0usize);
        let mut partner = 0;
        for &w in g.neighbors(v) {
            if matched[w - 1] {
                in_vm += 1;
                partner = w;
            } else {
                in_s += 1;
            }
        }
        if matched[v - 1] {
            if in_vm != 1 || in_s != s_count {
                return None;
            }
            if v < partner {
                matching.push((v, partner));
            }
        } else if in_s != 0 || in_vm != vm_count {
            return None;
        }
    }
    let matched_vertices = (1..=n).filter(|&v| matched[v - 1]).collect();
    let independent = (1..=n).filter(|&v| !matched[v - 1]).collect();
    Some(DimCertificate {
        matching,
        matched_vertices,
        independent,
        complete: true,
    })
}

fn least(certs: impl IntoIterator<Item = DimCertificate>) -> Option<DimCertificate> {
    certs.into_iter().min_by(|a, b| a.matching.cmp(&b.matching))
}

/// Recognizes `K_{M,S}` combinatorially.
///
/// In `K_{M,S}` the matched vertices have degree `s + 1` and the independent
/// ones degree `2m`. With two distinct degrees the partition is forced; a
/// regular graph (`s + 1 = 2m`) is tested with `V(M) = N(v)` for every `v`,
/// which covers every choice of an independent vertex. Runs in
/// `O(n·(n + |E|))` and returns the lexicographically least matching.
pub fn recognize_cdim(g: &Graph) -> Option<DimCertificate> {
    let n = g.order();
    let degrees = g.degrees();
    let mut distinct = degrees.clone();
    distinct.sort_unstable();
    distinct.dedup();
    match distinct.as_slice() {
        [_] => least((1..=n).filter_map(|v| {
            let mut matched = vec![false; n];
            for &w in g.neighbors(v) {
                matched[w - 1] = true;
            }
            certify_partition(g, &matched)
        })),
        [d1, d2] => least([*d1, *d2].into_iter().filter_map(|d| {
            let matched: Vec<bool> = degrees.iter().map(|&x| x == d).collect();
            certify_partition(g, &matched)
        })),
        _ => None,
    }
}

/// Groups vector entries into levels; `None` if more than `max_levels` arise.
fn level_sets(v: &[f64], max_levels: usize) -> Option<Vec<Vec<usize>>> {
    let scale = v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let tol = LEVEL_TOL * scale.max(f64::MIN_POSITIVE);
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
    let mut levels: Vec<Vec<usize>> = Vec::new();
    let mut last = f64::NAN;
    for i in order {
        if levels.is_empty() || (v[i] - last).abs() > tol {
            if levels.len() == max_levels {
                return None;
            }
            levels.push(Vec::new());
        }
        levels.last_mut().unwrap().push(i);
        last = v[i];
    }
    Some(levels)
}

/// Recognizes `K_{M,S}` from the principal adjacency eigenvector.
///
/// The eigenvector of `K_{M,S}` is constant on `V(M)` and on `S`, so its
/// level sets propose the partition; the combinatorial check decides. A
/// single level (regular graph) falls back to [`recognize_cdim`].
pub fn recognize_cdim_spectral(g: &Graph) -> Result<Option<DimCertificate>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pair = principal_pair(&matrix(g, MatrixKind::Adjacency), MatrixKind::Adjacency)?;
    let Some(levels) = level_sets(&pair.vector, 2) else {
        return Ok(None);
    };
    if levels.len() < 2 {
        return Ok(recognize_cdim(g));
    }
    let n = g.order();
    Ok(least(levels.iter().filter_map(|level| {
        let mut matched = vec![false; n];
        for &i in level {
            matched[i] = true;
        }
        certify_partition(g, &matched)
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_cdim;

    #[test]
    fn independent_sets() {
        let k2 = Graph::complete(2).unwrap();
        assert!(!is_independent_set(&k2, &[1, 2]).unwrap());
        assert!(is_independent_set(&k2, &[]).unwrap());
        assert!(is_independent_set(&k2, &[3]).is_err());
    }

    #[test]
    fn induced_matchings() {
        let p3 = Graph::path(3).unwrap();
        assert!(!is_induced_matching(&p3, &[(1, 2), (2, 3)]).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert!(!is_induced_matching(&p4, &[(1, 2), (3, 4)]).unwrap());
        assert!(is_induced_matching(&p4, &[(2, 3)]).unwrap());
        assert_eq!(
            is_induced_matching(&p4, &[(1, 3)]),
            Err(Error::EdgeNotInGraph(1, 3))
        );
    }

    #[test]
    fn dims() {
        let k2 = Graph::complete(2).unwrap();
        assert!(is_dim(&k2, &[(1, 2)]).unwrap());
        assert!(!is_dim(&k2, &[]).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        for &e in c4.edges() {
            assert!(!is_dim(&c4, &[e]).unwrap());
        }
        assert!(is_dim(&Graph::null(3).unwrap(), &[]).unwrap());
        // P4: middle edge dominates both ends
        let p4 = Graph::path(4).unwrap();
        assert!(is_dim(&p4, &[(2, 3)]).unwrap());
        assert!(!is_dim(&p4, &[(1, 2)]).unwrap());
    }

    #[test]
    fn certificate_from_matching() {
        let h = generate_cdim(2, 2).unwrap();
        let c = DimCertificate::from_matching(&h, &[(3, 4), (1, 2)])
            .unwrap()
            .unwrap();
        assert!(c.complete);
        assert_eq!(c.matching, vec![(1, 2), (3, 4)]);
        assert_eq!(c.independent, vec![5, 6]);
        assert!(c.verify(&h));
        let p4 = Graph::path(4).unwrap();
        let c = DimCertificate::from_matching(&p4, &[(2, 3)])
            .unwrap()
            .unwrap();
        assert!(!c.complete);
        assert!(c.verify(&p4));
    }

    #[test]
    fn recognizes_generated() {
        let c = recognize_cdim(&generate_cdim(3, 3).unwrap()).unwrap();
        assert_eq!(c.matching, vec![(1, 2), (3, 4), (5, 6)]);
        assert_eq!(c.independent, vec![7, 8, 9]);
        let c = recognize_cdim(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(c.matching, vec![(1, 2)]);
        assert_eq!(c.independent, vec![3]);
    }

    #[test]
    fn rejects_non_cdim() {
        assert!(recognize_cdim(&Graph::cycle(4).unwrap()).is_none());
        assert!(recognize_cdim(&Graph::star(3).unwrap()).is_none());
        assert!(recognize_cdim(&Graph::complete(2).unwrap()).is_none());
        assert!(recognize_cdim(&Graph::null(1).unwrap()).is_none());
        assert_eq!(recognize_cdim_spectral(&Graph::cycle(4).unwrap()), Ok(None));
        assert_eq!(recognize_cdim_spectral(&Graph::star(3).unwrap()), Ok(None));
    }

    #[test]
    fn spectral_paths() {
        let g = generate_cdim(3, 3).unwrap();
        let c = recognize_cdim_spectral(&g).unwrap().unwrap();
        assert_eq!(c.matching, vec![(1, 2), (3, 4), (5, 6)]);
        // regular case, one level set
        let c = recognize_cdim_spectral(&Graph::complete(3).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(c.matching, vec![(1, 2)]);
        let c = recognize_cdim_spectral(&generate_cdim(2, 3).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(c.matching.len(), 2);
        assert_eq!(
            recognize_cdim_spectral(&Graph::null(2).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn relabelled_cdim() {
        // K_{M,S} with M = {15, 24}, S = {3, 6}
        let pairs = [
            (1, 5),
            (2, 4),
            (1, 3),
            (1, 6),
            (5, 3),
            (5, 6),
            (2, 3),
            (2, 6),
            (4, 3),
            (4, 6),
        ];
        let g = Graph::from_edge_list(6, &pairs).unwrap();
        let c = recognize_cdim(&g).unwrap();
        assert_eq!(c.matching, vec![(1, 5), (2, 4)]);
        assert!(c.verify(&g));
        assert_eq!(recognize_cdim_spectral(&g).unwrap(), Some(c));
    }
}
