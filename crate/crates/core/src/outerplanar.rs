//! Outerplanarity recognition and reduction to a Δ-tree.
//!
//! Everything here runs on one primitive: ear reduction. A degree-2 vertex
//! `v` with neighbours `u`, `w` is cut off as the triangle `uvw`, the edge
//! `uw` is added if missing, and each edge counts the triangles it has
//! bordered so far. A biconnected graph is outerplanar exactly when the
//! reduction reaches a single edge without any edge bordering three
//! triangles; the cut-off triangles are then the faces of a maximal
//! outerplanar supergraph, and the edges bordering one triangle form its
//! outer cycle.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::blocks::{blocks, components, is_biconnected};
use crate::graph::{edge, Edge, Graph};

/// Why a graph was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// More than `2n - 3` edges.
    TooManyEdges { edges: usize, bound: usize },
    /// A block with `remaining` vertices left and no vertex of degree 2.
    NoDegreeTwoVertex { remaining: usize },
    /// The edge would border three triangles.
    OverloadedEdge(Edge),
    /// A vertex lost all but one neighbour before the block was exhausted.
    DegreeCollapse(usize),
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::TooManyEdges { edges, bound } => {
                write!(f, "{edges} edges exceed the outerplanar bound {bound}")
            }
            Obstruction::NoDegreeTwoVertex { remaining } => write!(
                f,
                "a block reduces to {remaining} vertices none of which has degree 2"
            ),
            Obstruction::OverloadedEdge((u, v)) => {
                write!(f, "edge ({u}, {v}) would border three triangles")
            }
            Obstruction::DegreeCollapse(v) => {
                write!(f, "vertex {v} lost its second neighbour during reduction")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Outerplanar,
    NotOuterplanar(Obstruction),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Outerplanar)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OuterplanarError {
    #[error("graph is not outerplanar: {0}")]
    NotOuterplanar(Obstruction),
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("need at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("augmentation produced a graph that is not biconnected and outerplanar")]
    AugmentationFailed,
}

/// A maximal outerplanar graph together with its triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTree {
    pub graph: Graph,
    /// Triangles with sorted corners. Face ids are indices into this list.
    pub faces: Vec<[usize; 3]>,
    /// Pairs of face ids sharing an edge, sorted.
    pub face_adjacency: Vec<(usize, usize)>,
    /// Cyclic order of the outer face, starting at the smallest vertex.
    pub boundary: Vec<usize>,
    /// Edges of `graph` that were not in the input.
    pub added_edges: BTreeSet<Edge>,
}

/// Output of [`build_delta_tree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTreeBuild {
    pub tree: DeltaTree,
    /// The input edges; all of them are edges of `tree.graph`.
    pub original_edges: BTreeSet<Edge>,
    /// A vertex added only to reach three vertices; never part of the output.
    pub synthetic: Option<usize>,
}

impl DeltaTreeBuild {
    pub fn is_original(&self, u: usize, v: usize) -> bool {
        self.original_edges.contains(&edge(u, v))
    }
}

/// Which edge of its parent a child face hangs from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    /// The edge `{base_left, apex}`.
    BaseLeft,
    /// The edge `{base_right, apex}`.
    BaseRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceChild {
    pub face: usize,
    pub shared: Edge,
    pub slot: Slot,
}

/// The face-adjacency tree of a Δ-tree, rooted at a leaf face.
///
/// Every face is entered through its base edge `(base_left, base_right)` and
/// its children hang from the two edges through its apex. A child across
/// `{x, apex}` has roles `(x, apex, new vertex)`. The root is treated as if
/// entered through the edge opposite the edge leading to its only child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTree {
    pub root: usize,
    /// `[base_left, base_right, apex]` per face.
    pub roles: Vec<[usize; 3]>,
    /// Children per face, `BaseLeft` before `BaseRight`.
    pub children: Vec<Vec<FaceChild>>,
    pub parent: Vec<Option<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Cut off any degree-2 vertex, adding the missing chord.
    Recognize,
    /// Cut off only degree-2 vertices whose neighbours are already adjacent.
    Pluck,
}

#[derive(Debug, Clone)]
struct EarReduction {
    triangles: Vec<[usize; 3]>,
    chords: Vec<Edge>,
    boundary: Vec<usize>,
}

fn reduce(vertices: &[usize], edges: &[Edge], mode: Mode) -> Result<EarReduction, Obstruction> {
    let mut adj: BTreeMap<usize, BTreeSet<usize>> =
        vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
    for &(u, v) in edges {
        adj.get_mut(&u)
            .expect("edge endpoint outside block")
            .insert(v);
        adj.get_mut(&v)
            .expect("edge endpoint outside block")
            .insert(u);
    }
    let mut bordered: HashMap<Edge, u8> = edges.iter().map(|&e| (e, 0)).collect();
    let mut degree_two: BTreeSet<usize> = adj
        .iter()
        .filter(|(_, n)| n.len() == 2)
        .map(|(&v, _)| v)
        .collect();
    let mut triangles = Vec::new();
    let mut chords = Vec::new();

    while adj.len() > 2 {
        let ear = degree_two.iter().copied().find(|v| {
            mode == Mode::Recognize || {
                let mut it = adj[v].iter();
                let (u, w) = (*it.next().unwrap(), *it.next().unwrap());
                adj[&u].contains(&w)
            }
        });
        let Some(v) = ear else {
            return Err(Obstruction::NoDegreeTwoVertex {
                remaining: adj.len(),
            });
        };
        degree_two.remove(&v);
        let nbrs = adj.remove(&v).unwrap();
        let mut it = nbrs.into_iter();
        let (u, w) = (it.next().unwrap(), it.next().unwrap());
        for e in [edge(u, v), edge(v, w), edge(u, w)] {
            let count = bordered.entry(e).or_insert(0);
            if *count >= 2 {
                return Err(Obstruction::OverloadedEdge(e));
            }
            *count += 1;
        }
        adj.get_mut(&u).unwrap().remove(&v);
        adj.get_mut(&w).unwrap().remove(&v);
        if adj.get_mut(&u).unwrap().insert(w) {
            adj.get_mut(&w).unwrap().insert(u);
            chords.push(edge(u, w));
        }
        let mut tri = [u, v, w];
        tri.sort_unstable();
        triangles.push(tri);
        for x in [u, w] {
            match adj[&x].len() {
                2 => {
                    degree_two.insert(x);
                }
                0 | 1 if adj.len() > 2 => return Err(Obstruction::DegreeCollapse(x)),
                _ => {
                    degree_two.remove(&x);
                }
            }
        }
    }

    let boundary = if triangles.is_empty() {
        vertices.to_vec()
    } else {
        let mut ring: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&(u, v), &c) in &bordered {
            if c == 1 {
                ring.entry(u).or_default().push(v);
                ring.entry(v).or_default().push(u);
            }
        }
        let start = *ring.keys().next().unwrap();
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = *ring[&start].iter().min().unwrap();
        while cur != start {
            cycle.push(cur);
            let next = ring[&cur].iter().copied().find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
        debug_assert_eq!(cycle.len(), vertices.len());
        cycle
    };
    Ok(EarReduction {
        triangles,
        chords,
        boundary,
    })
}

/// Decides outerplanarity block by block.
pub fn is_outerplanar(g: &Graph) -> Verdict {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n >= 2 && m > 2 * n - 3 {
        return Verdict::NotOuterplanar(Obstruction::TooManyEdges {
            edges: m,
            bound: 2 * n - 3,
        });
    }
    for b in blocks(g).blocks {
        if b.vertices.len() >= 3 {
            if let Err(o) = reduce(&b.vertices, &b.edges, Mode::Recognize) {
                return Verdict::NotOuterplanar(o);
            }
        }
    }
    Verdict::Outerplanar
}

/// Adds edges until the graph is biconnected, keeping it outerplanar.
///
/// Vertices are listed in the order a walk around the outer face of an
/// outerplanar embedding first meets them: each block is traversed along its
/// outer cycle, detouring into the blocks hanging from each vertex, and
/// components are concatenated. Joining consecutive vertices of that order
/// into a cycle keeps every original edge a non-crossing chord.
pub fn augment_biconnected(g: &Graph) -> Result<Graph, OuterplanarError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(OuterplanarError::TooFewVertices { needed: 3, got: n });
    }
    if let Verdict::NotOuterplanar(o) = is_outerplanar(g) {
        return Err(OuterplanarError::NotOuterplanar(o));
    }
    if is_biconnected(g) {
        return Ok(g.clone());
    }
    let order = boundary_order(g)?;
    let mut out = g.clone();
    for i in 0..n {
        out.add_edge_if_absent(order[i], order[(i + 1) % n]);
    }
    if !is_biconnected(&out) || !is_outerplanar(&out).is_yes() {
        return Err(OuterplanarError::AugmentationFailed);
    }
    Ok(out)
}

fn boundary_order(g: &Graph) -> Result<Vec<usize>, OuterplanarError> {
    let d = blocks(g);
    let mut cycles = Vec::with_capacity(d.blocks.len());
    for b in &d.blocks {
        if b.vertices.len() >= 3 {
            let r = reduce(&b.vertices, &b.edges, Mode::Recognize)
                .map_err(OuterplanarError::NotOuterplanar)?;
            cycles.push(r.boundary);
        } else {
            cycles.push(b.vertices.clone());
        }
    }
    let mut blocks_at: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, b) in d.blocks.iter().enumerate() {
        for &v in &b.vertices {
            blocks_at[v].push(i);
        }
    }

    let mut order = Vec::with_capacity(g.vertex_count());
    let mut emitted = vec![false; g.vertex_count()];
    let mut block_done = vec![false; d.blocks.len()];
    for comp in components(g) {
        // Frames: (block cycle rotated to start at its attachment, next index).
        let mut stack: Vec<(Vec<usize>, usize)> = Vec::new();
        let mut visit = |v: usize, stack: &mut Vec<(Vec<usize>, usize)>, order: &mut Vec<usize>| {
            if !emitted[v] {
                emitted[v] = true;
                order.push(v);
            }
            // Push in reverse so the smallest block is walked first.
            for &bi in blocks_at[v].iter().rev() {
                if !block_done[bi] {
                    block_done[bi] = true;
                    let cyc = &cycles[bi];
                    let pos = cyc.iter().position(|&x| x == v).unwrap();
                    let mut rotated = cyc[pos..].to_vec();
                    rotated.extend_from_slice(&cyc[..pos]);
                    stack.push((rotated, 1));
                }
            }
        };
        visit(comp[0], &mut stack, &mut order);
        while let Some((cyc, idx)) = stack.last_mut() {
            if *idx >= cyc.len() {
                stack.pop();
                continue;
            }
            let w = cyc[*idx];
            *idx += 1;
            visit(w, &mut stack, &mut order);
        }
    }
    debug_assert_eq!(order.len(), g.vertex_count());
    Ok(order)
}

/// Triangulates a biconnected outerplanar graph.
pub fn triangulate_block(g: &Graph) -> Result<DeltaTree, OuterplanarError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(OuterplanarError::TooFewVertices { needed: 3, got: n });
    }
    if !is_biconnected(g) {
        return Err(OuterplanarError::NotBiconnected);
    }
    let vertices: Vec<usize> = (0..n).collect();
    let edges: Vec<Edge> = g.edges().collect();
    let r = reduce(&vertices, &edges, Mode::Recognize).map_err(OuterplanarError::NotOuterplanar)?;
    let mut graph = g.clone();
    for &(u, v) in &r.chords {
        graph.add_edge_if_absent(u, v);
    }
    Ok(assemble(
        graph,
        r.triangles,
        r.boundary,
        r.chords.into_iter().collect(),
    ))
}

pub(crate) fn assemble(
    graph: Graph,
    faces: Vec<[usize; 3]>,
    boundary: Vec<usize>,
    added_edges: BTreeSet<Edge>,
) -> DeltaTree {
    let mut by_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for e in [edge(f[0], f[1]), edge(f[0], f[2]), edge(f[1], f[2])] {
            by_edge.entry(e).or_default().push(fi);
        }
    }
    let mut face_adjacency: Vec<(usize, usize)> = by_edge
        .values()
        .filter(|fs| fs.len() == 2)
        .map(|fs| (fs[0].min(fs[1]), fs[0].max(fs[1])))
        .collect();
    face_adjacency.sort_unstable();
    DeltaTree {
        graph,
        faces,
        face_adjacency,
        boundary,
        added_edges,
    }
}

/// Reduces any outerplanar graph on two or more vertices to a Δ-tree
/// containing it.
pub fn build_delta_tree(g: &Graph) -> Result<DeltaTreeBuild, OuterplanarError> {
    let n = g.vertex_count();
    let original_edges = g.edge_set().clone();
    match n {
        0 | 1 => Err(OuterplanarError::TooFewVertices { needed: 2, got: n }),
        2 => {
            let mut graph = g.clone();
            let s = graph.add_vertex();
            graph.add_edge_if_absent(0, 1);
            graph.add_edge_if_absent(0, s);
            graph.add_edge_if_absent(1, s);
            let added = graph
                .edge_set()
                .difference(&original_edges)
                .copied()
                .collect();
            Ok(DeltaTreeBuild {
                tree: assemble(graph, vec![[0, 1, s]], vec![0, 1, s], added),
                original_edges,
                synthetic: Some(s),
            })
        }
        _ => {
            let aug = augment_biconnected(g)?;
            let mut tree = triangulate_block(&aug)?;
            tree.added_edges = tree
                .graph
                .edge_set()
                .difference(&original_edges)
                .copied()
                .collect();
            Ok(DeltaTreeBuild {
                tree,
                original_edges,
                synthetic: None,
            })
        }
    }
}

/// Roots the face-adjacency tree at its smallest leaf face and orients every
/// face so its children hang from the edges through its apex.
pub fn face_tree(dt: &DeltaTree) -> FaceTree {
    let nf = dt.faces.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for &(a, b) in &dt.face_adjacency {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    let root = (0..nf).find(|&f| nbrs[f].len() <= 1).unwrap_or(0);
    let mut roles = vec![[0usize; 3]; nf];
    let mut children = vec![Vec::new(); nf];
    let mut parent = vec![None; nf];
    if nf == 0 {
        return FaceTree {
            root,
            roles,
            children,
            parent,
        };
    }

    let shared = |a: usize, b: usize| -> Edge {
        let fa = dt.faces[a];
        let fb = dt.faces[b];
        let common: Vec<usize> = fa.iter().copied().filter(|x| fb.contains(x)).collect();
        debug_assert_eq!(common.len(), 2);
        edge(common[0], common[1])
    };
    let third = |f: usize, (x, y): Edge| -> usize {
        dt.faces[f]
            .iter()
            .copied()
            .find(|&z| z != x && z != y)
            .unwrap()
    };

    roles[root] = match nbrs[root].first() {
        Some(&c) => {
            let (a, b) = shared(root, c);
            [third(root, (a, b)), a, b]
        }
        None => dt.faces[root],
    };
    let mut visited = vec![false; nf];
    visited[root] = true;
    let mut stack = vec![root];
    while let Some(f) = stack.pop() {
        let [left, right, apex] = roles[f];
        let mut kids = Vec::new();
        for &c in &nbrs[f] {
            if visited[c] {
                continue;
            }
            visited[c] = true;
            let e = shared(f, c);
            let other = if e.0 == apex { e.1 } else { e.0 };
            assert!(e.0 == apex || e.1 == apex, "child edge misses the apex");
            let slot = if other == left {
                Slot::BaseLeft
            } else {
                debug_assert_eq!(other, right);
                Slot::BaseRight
            };
            roles[c] = [other, apex, third(c, e)];
            parent[c] = Some(f);
            kids.push(FaceChild {
                face: c,
                shared: e,
                slot,
            });
        }
        kids.sort_by_key(|k| k.slot);
        for k in kids.iter().rev() {
            stack.push(k.face);
        }
        children[f] = kids;
    }
    FaceTree {
        root,
        roles,
        children,
        parent,
    }
}

/// Whether `g` is a Δ-tree: repeatedly removing a degree-2 vertex with
/// adjacent neighbours must reach a triangle, and no edge may border more
/// than two of the removed triangles.
pub fn pluck_check(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != 2 * n - 3 {
        return false;
    }
    let vertices: Vec<usize> = (0..n).collect();
    let edges: Vec<Edge> = g.edges().collect();
    reduce(&vertices, &edges, Mode::Pluck).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn k23() -> Graph {
        g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    }

    #[test]
    fn recognition_examples() {
        assert!(!is_outerplanar(&complete(4)).is_yes());
        assert!(!is_outerplanar(&k23()).is_yes());
        for k in 3..12 {
            assert!(is_outerplanar(&cycle(k)).is_yes());
        }
        // K_{1,1,3}: every ear is legal on its own, the shared edge is not.
        let k113 = g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]);
        assert!(matches!(
            is_outerplanar(&k113),
            Verdict::NotOuterplanar(Obstruction::OverloadedEdge(_))
        ));
        assert!(is_outerplanar(&Graph::empty(0)).is_yes());
    }

    #[test]
    fn augment_examples() {
        let path = g(3, &[(0, 1), (1, 2)]);
        let a = augment_biconnected(&path).unwrap();
        assert_eq!(a, complete(3));

        let tri = complete(3);
        assert_eq!(augment_biconnected(&tri).unwrap(), tri);

        let two = g(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let a = augment_biconnected(&two).unwrap();
        assert!(two.is_subgraph_of(&a));
        assert!(is_biconnected(&a));
        assert!(is_outerplanar(&a).is_yes());
        assert_eq!(blocks(&a).blocks.len(), 1);

        assert!(matches!(
            augment_biconnected(&complete(4)),
            Err(OuterplanarError::NotOuterplanar(_))
        ));
    }

    #[test]
    fn augment_every_small_outerplanar_graph() {
        for n in 3..=6 {
            let pairs = n * (n - 1) / 2;
            for mask in 0..1u64 << pairs {
                let h = crate::oracle::graph_from_mask(n, mask);
                if !is_outerplanar(&h).is_yes() {
                    continue;
                }
                let a = augment_biconnected(&h).unwrap();
                assert!(h.is_subgraph_of(&a), "n={n} mask={mask}");
                assert!(is_biconnected(&a) && is_outerplanar(&a).is_yes());
            }
        }
    }

    #[test]
    fn triangulate_examples() {
        let t = triangulate_block(&complete(3)).unwrap();
        assert_eq!(t.faces.len(), 1);
        assert!(t.added_edges.is_empty());

        let t = triangulate_block(&cycle(4)).unwrap();
        assert_eq!(t.faces.len(), 2);
        assert_eq!(t.added_edges.len(), 1);

        let t = triangulate_block(&cycle(5)).unwrap();
        assert_eq!(t.faces.len(), 3);
        assert_eq!(t.added_edges.len(), 2);
        assert_eq!(t.graph.edge_count(), 7);
        assert_eq!(t.boundary, vec![0, 1, 2, 3, 4]);
        assert!(pluck_check(&t.graph));

        assert_eq!(
            triangulate_block(&g(3, &[(0, 1), (1, 2)])),
            Err(OuterplanarError::NotBiconnected)
        );
        assert!(matches!(
            triangulate_block(&complete(4)),
            Err(OuterplanarError::NotOuterplanar(_))
        ));
    }

    #[test]
    fn delta_tree_examples() {
        let b = build_delta_tree(&g(2, &[(0, 1)])).unwrap();
        assert_eq!(b.synthetic, Some(2));
        assert_eq!(b.tree.faces, vec![[0, 1, 2]]);
        assert!(pluck_check(&b.tree.graph));

        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let b = build_delta_tree(&star).unwrap();
        assert_eq!(b.tree.graph.vertex_count(), 4);
        assert_eq!(b.tree.faces.len(), 2);
        assert!(star.is_subgraph_of(&b.tree.graph));
        assert!(pluck_check(&b.tree.graph));

        let fan = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]);
        let b = build_delta_tree(&fan).unwrap();
        assert!(b.tree.added_edges.is_empty());
        assert_eq!(b.tree.graph, fan);

        assert!(build_delta_tree(&Graph::empty(1)).is_err());
        assert!(build_delta_tree(&complete(4)).is_err());
    }

    #[test]
    fn face_tree_examples() {
        let single = triangulate_block(&complete(3)).unwrap();
        let ft = face_tree(&single);
        assert!(ft.children[ft.root].is_empty());

        let two = triangulate_block(&cycle(4)).unwrap();
        let ft = face_tree(&two);
        assert_eq!(ft.children[ft.root].len(), 1);

        // fan of C6 from vertex 0
        let fan6 = g(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 2),
                (0, 3),
                (0, 4),
            ],
        );
        let dt = triangulate_block(&fan6).unwrap();
        assert_eq!(dt.faces.len(), 4);
        let ft = face_tree(&dt);
        let mut f = ft.root;
        let mut len = 1;
        while let Some(c) = ft.children[f].first() {
            assert_eq!(ft.children[f].len(), 1);
            f = c.face;
            len += 1;
        }
        assert_eq!(len, 4);
        for (f, kids) in ft.children.iter().enumerate() {
            for k in kids {
                let (a, b) = k.shared;
                assert!(dt.faces[f].contains(&a) && dt.faces[f].contains(&b));
                assert!(dt.faces[k.face].contains(&a) && dt.faces[k.face].contains(&b));
            }
        }
    }

    #[test]
    fn pluck_examples() {
        assert!(pluck_check(&complete(3)));
        assert!(!pluck_check(&complete(4)));
        assert!(!pluck_check(&cycle(4)));
        let k113 = g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]);
        assert!(!pluck_check(&k113));
    }
}
