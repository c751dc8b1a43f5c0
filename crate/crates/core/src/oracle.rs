//! Brute-force references and seeded instance generators.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::hstar::{Address, Label};
use crate::outerplanar::{assemble, DeltaTree};
use crate::rng::SplitMix64;

pub const MAX_MINOR_VERTICES: usize = 10;
pub const MAX_ENUMERATION_DEPTH: usize = 12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("{what} limited to {limit}, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("a delta-tree needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("keep probability {0} is outside [0, 1]")]
    BadProbability(f64),
}

/// Whether `g` has a K4 or K_{2,3} minor, by exhaustive edge contraction.
///
/// Deleting edges never helps: every minor reachable by deletions is a
/// subgraph of one reachable by contractions alone, so it suffices to look
/// for K4 or K_{2,3} subgraphs in every contraction.
pub fn has_k4_or_k23_minor(g: &Graph) -> Result<bool, OracleError> {
    let n = g.vertex_count();
    if n > MAX_MINOR_VERTICES {
        return Err(OracleError::TooLarge {
            what: "minor search vertex count",
            limit: MAX_MINOR_VERTICES,
            got: n,
        });
    }
    let mut adj = vec![0u16; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut seen = HashSet::new();
    Ok(search(adj, &mut seen))
}

fn search(adj: Vec<u16>, seen: &mut HashSet<Vec<u16>>) -> bool {
    let n = adj.len();
    let m: u32 = adj.iter().map(|a| a.count_ones()).sum::<u32>() / 2;
    if n >= 2 && m as usize > 2 * n - 3 {
        return true;
    }
    if has_forbidden_subgraph(&adj) {
        return true;
    }
    if !seen.insert(adj.clone()) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 && search(contract(&adj, u, v), seen) {
                return true;
            }
        }
    }
    false
}

/// Merges `v` into `u` and renumbers the vertices above `v` down by one.
fn contract(adj: &[u16], u: usize, v: usize) -> Vec<u16> {
    let squeeze = |mask: u16| -> u16 {
        let low = mask & ((1u16 << v) - 1);
        let high = (mask >> (v + 1)) << v;
        low | high
    };
    let mut out = Vec::with_capacity(adj.len() - 1);
    for (w, &mask) in adj.iter().enumerate() {
        if w == v {
            continue;
        }
        let mut mask = mask;
        if w == u {
            mask |= adj[v];
            mask &= !(1 << u);
        } else if mask >> v & 1 == 1 {
            mask |= 1 << u;
        }
        mask &= !(1 << v);
        out.push(squeeze(mask));
    }
    out
}

fn has_forbidden_subgraph(adj: &[u16]) -> bool {
    let n = adj.len();
    for a in 0..n {
        for b in a + 1..n {
            let common = adj[a] & adj[b];
            if common.count_ones() >= 3 {
                return true;
            }
            if adj[a] >> b & 1 == 1 {
                let mut rest = common;
                while rest != 0 {
                    let c = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if common & adj[c] != 0 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// A random Δ-tree on `n` vertices: the triangle `0, 1, 2` with base edge
/// `(0, 1)`, then each new vertex is attached to both ends of a uniformly
/// chosen outer edge other than the base.
pub fn random_delta_tree(n: usize, seed: u64) -> Result<DeltaTree, OracleError> {
    if n < 3 {
        return Err(OracleError::TooSmall(n));
    }
    let mut rng = SplitMix64::new(seed);
    let mut graph = Graph::from_edges(n, [(0, 1), (1, 2), (0, 2)]).expect("triangle");
    let mut faces = vec![[0, 1, 2]];
    // Cyclic outer face; position 0 to 1 is the base edge.
    let mut boundary = vec![0usize, 1, 2];
    for w in 3..n {
        let i = 1 + rng.below(boundary.len() - 1);
        let a = boundary[i];
        let b = boundary[(i + 1) % boundary.len()];
        graph.add_edge_if_absent(a, w);
        graph.add_edge_if_absent(b, w);
        let mut f = [a, b, w];
        f.sort_unstable();
        faces.push(f);
        boundary.insert(i + 1, w);
    }
    Ok(assemble(graph, faces, boundary, BTreeSet::new()))
}

/// Parameters for [`random_outerplanar`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub keep_prob: f64,
    pub seed: u64,
}

/// A random Δ-tree on `max(n, 3)` vertices thinned by keeping each edge with
/// probability `keep_prob`, then truncated to `n` vertices when `n < 3`.
pub fn random_outerplanar(spec: GenSpec) -> Result<Graph, OracleError> {
    if !(0.0..=1.0).contains(&spec.keep_prob) {
        return Err(OracleError::BadProbability(spec.keep_prob));
    }
    let dt = random_delta_tree(spec.n.max(3), spec.seed)?;
    let mut rng = SplitMix64::new(!spec.seed);
    let kept: Vec<Edge> = dt
        .graph
        .edges()
        .filter(|_| rng.next_f64() < spec.keep_prob)
        .filter(|&(u, v)| u < spec.n && v < spec.n)
        .collect();
    Ok(Graph::from_edges(spec.n, kept).expect("subgraph of a simple graph"))
}

/// A uniform random graph on `n` vertices with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                g.add_edge_if_absent(u, v);
            }
        }
    }
    g
}

/// The graph on `n` vertices whose edges are the set bits of `mask`, in the
/// order `(0,1), (0,2), .., (n-2, n-1)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge_if_absent(u, v);
            }
            bit += 1;
        }
    }
    g
}

/// Every address of length at most `depth` in lexicographic order with
/// `F < L < R`.
pub fn enumerate_addresses(depth: usize) -> Result<Vec<Address>, OracleError> {
    if depth > MAX_ENUMERATION_DEPTH {
        return Err(OracleError::TooLarge {
            what: "enumeration depth",
            limit: MAX_ENUMERATION_DEPTH,
            got: depth,
        });
    }
    let mut out = Vec::with_capacity((3usize.pow(depth as u32 + 1) - 1) / 2);
    let mut stack = vec![Vec::<Label>::new()];
    while let Some(path) = stack.pop() {
        if path.len() < depth {
            for l in Label::ALL.into_iter().rev() {
                let mut next = path.clone();
                next.push(l);
                stack.push(next);
            }
        }
        out.push(Address::new(path));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::{is_outerplanar, pluck_check};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn minor_examples() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(has_k4_or_k23_minor(&k4).unwrap());
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert!(!has_k4_or_k23_minor(&c5).unwrap());
        let k23_pendant = g(6, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (4, 5)]);
        assert!(has_k4_or_k23_minor(&k23_pendant).unwrap());
        // K4 subdivided: only reachable by contraction.
        let sub = g(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(has_k4_or_k23_minor(&sub).unwrap());
        // K_{2,3} with one spoke subdivided twice.
        let sub = g(
            7,
            &[
                (0, 2),
                (0, 3),
                (0, 5),
                (5, 6),
                (6, 4),
                (1, 2),
                (1, 3),
                (1, 4),
            ],
        );
        assert!(has_k4_or_k23_minor(&sub).unwrap());
        assert!(has_k4_or_k23_minor(&Graph::empty(11)).is_err());
    }

    #[test]
    fn contraction_renumbers() {
        // Path 0-1-2-3; contracting (1, 2) gives path 0-1-2.
        let adj = vec![0b0010, 0b0101, 0b1010, 0b0100];
        assert_eq!(contract(&adj, 1, 2), vec![0b010, 0b101, 0b010]);
    }

    #[test]
    fn delta_tree_generator() {
        let t = random_delta_tree(3, 9).unwrap();
        assert_eq!(t.faces, vec![[0, 1, 2]]);
        let a = random_delta_tree(10, 42).unwrap();
        assert_eq!(a, random_delta_tree(10, 42).unwrap());
        assert_eq!(a.faces.len(), 8);
        assert_eq!(a.graph.edge_count(), 17);
        assert_eq!(a.face_adjacency.len(), 7);
        assert_eq!(a.boundary.len(), 10);
        for seed in 0..200 {
            let t = random_delta_tree(50, seed).unwrap();
            assert!(pluck_check(&t.graph));
            assert!(is_outerplanar(&t.graph).is_yes());
        }
        assert!(random_delta_tree(2, 0).is_err());
    }

    #[test]
    fn outerplanar_generator() {
        let full = random_outerplanar(GenSpec {
            n: 12,
            keep_prob: 1.0,
            seed: 4,
        })
        .unwrap();
        assert_eq!(full, random_delta_tree(12, 4).unwrap().graph);
        let none = random_outerplanar(GenSpec {
            n: 12,
            keep_prob: 0.0,
            seed: 4,
        })
        .unwrap();
        assert_eq!(none, Graph::empty(12));
        for seed in 0..300 {
            let n = 1 + (seed as usize % 50);
            let g = random_outerplanar(GenSpec {
                n,
                keep_prob: 0.7,
                seed,
            })
            .unwrap();
            assert_eq!(g.vertex_count(), n);
            assert!(is_outerplanar(&g).is_yes());
        }
        assert!(random_outerplanar(GenSpec {
            n: 5,
            keep_prob: 1.5,
            seed: 0
        })
        .is_err());
    }

    #[test]
    fn address_enumeration() {
        assert_eq!(enumerate_addresses(0).unwrap(), vec![Address::root()]);
        let d1: Vec<String> = enumerate_addresses(1)
            .unwrap()
            .iter()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(d1, vec!["", "F", "L", "R"]);
        let d2: Vec<String> = enumerate_addresses(2)
            .unwrap()
            .iter()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(&d2[..5], &["", "F", "F,F", "F,L", "F,R"]);
        assert_eq!(enumerate_addresses(8).unwrap().len(), 9841);
        assert!(enumerate_addresses(13).is_err());
    }

    #[test]
    fn mask_graphs() {
        assert_eq!(graph_from_mask(3, 0b101), g(3, &[(0, 1), (1, 2)]));
        assert_eq!(graph_from_mask(4, 0b111111).edge_count(), 6);
    }
}
