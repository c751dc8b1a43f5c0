//! Symbolic vertex placement.
//!
//! Each rhombus node is placed as a translated and rotated copy of the unit
//! rhombus `0, 1, x, x + 1`, where `x` is `x0` or `x1` depending on the
//! node's parity bit. Positions are polynomials in `(x0, x1)`, so evaluating
//! them at any pair of unit complex numbers gives a drawing whose edges have
//! length `1`, `|x0 - 1|` or `|x1 - 1|`.
//!
//! Two independent routes compute the same positions: folding
//! [`rhombus_child`] along a node's root path, and [`psi_closed_form`] on its
//! run-length encoding. [`certify_injective`] checks exactly that distinct
//! vertices land on distinct polynomials.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bipoly::{BiPoly, Monomial, PolyError};
use crate::graph::{edge, Graph};
use crate::hstar::{canonical_corner, Address, Corner, CornerRef, Label, QrEncoding};
use crate::outerplanar::{FaceTree, Slot};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("vertex {vertex} re-encountered at {found} but already placed at {placed}")]
    Inconsistent {
        vertex: usize,
        placed: BiPoly,
        found: BiPoly,
    },
}

/// Placement of one rhombus node: positions of `v0` and `v1`, the parity
/// bit, and the number of forward steps since the last turn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhombusState {
    pub z0: BiPoly,
    pub z1: BiPoly,
    pub ty: u8,
    pub fwd_run: u64,
    /// `z1 - z0`, always a monomial with coefficient 1.
    dir: Monomial,
}

impl RhombusState {
    /// The unit direction `z1 - z0`.
    pub fn direction(&self) -> Monomial {
        self.dir
    }

    fn side(&self) -> Result<BiPoly, PolyError> {
        Ok(BiPoly::term(
            self.dir.checked_mul(Monomial::var(self.ty))?,
            1,
        ))
    }

    pub fn z2(&self) -> Result<BiPoly, PolyError> {
        self.z0.checked_add(&self.side()?)
    }

    pub fn z3(&self) -> Result<BiPoly, PolyError> {
        self.z1.checked_add(&self.side()?)
    }

    pub fn corner(&self, c: Corner) -> Result<BiPoly, PolyError> {
        match c {
            Corner::V0 => Ok(self.z0.clone()),
            Corner::V1 => Ok(self.z1.clone()),
            Corner::V2 => self.z2(),
            Corner::V3 => self.z3(),
        }
    }

    pub fn corners(&self) -> Result<[BiPoly; 4], PolyError> {
        Ok([self.z0.clone(), self.z1.clone(), self.z2()?, self.z3()?])
    }
}

/// The root rhombus `0, 1, x0, x0 + 1`.
pub fn rhombus_root() -> RhombusState {
    RhombusState {
        z0: BiPoly::zero(),
        z1: BiPoly::constant(1),
        ty: 0,
        fwd_run: 0,
        dir: Monomial::ONE,
    }
}

pub fn rhombus_child(s: &RhombusState, l: Label) -> Result<RhombusState, PolyError> {
    let turned = s.dir.checked_mul(Monomial::var(s.ty))?;
    let run_parity = (s.fwd_run & 1) as u8;
    Ok(match l {
        Label::Fwd => RhombusState {
            z0: s.z2()?,
            z1: s.z3()?,
            ty: s.ty,
            fwd_run: s.fwd_run + 1,
            dir: s.dir,
        },
        Label::Left => RhombusState {
            z0: s.z0.clone(),
            z1: s.z2()?,
            ty: s.ty ^ run_parity,
            fwd_run: 0,
            dir: turned,
        },
        Label::Right => RhombusState {
            z0: s.z1.clone(),
            z1: s.z3()?,
            ty: s.ty ^ run_parity ^ 1,
            fwd_run: 0,
            dir: turned,
        },
    })
}

/// Folds [`rhombus_child`] along an address.
pub fn rhombus_at(a: &Address) -> Result<RhombusState, PolyError> {
    a.labels()
        .iter()
        .try_fold(rhombus_root(), |s, &l| rhombus_child(&s, l))
}

/// Parity bits `nu_0..nu_m` of the nodes reached after each turn:
/// `nu_0 = 0`, `nu_i = nu_{i-1} xor q_i xor rho_i`.
pub fn turn_parities(e: &QrEncoding) -> Vec<u8> {
    let mut nu = Vec::with_capacity(e.m() + 1);
    nu.push(0u8);
    for i in 1..=e.m() {
        let prev = nu[i - 1];
        nu.push(prev ^ (e.q(i) & 1) as u8 ^ e.rho(i));
    }
    nu
}

/// Base-vertex position of the node with encoding `e`, as
/// `sum_i c_i P_i` with `P_0 = 1`, `P_i = P_{i-1} x_{nu_{i-1}}` and
/// `c_i = q_i + rho_{i+1}` (taking `q_0 = 0` and `rho_{m+1} = 0`).
///
/// The sum runs to `i = m + 1` so trailing forward steps are included;
/// for proper encodings `q_{m+1} = 0` and the last term vanishes.
pub fn psi_closed_form(e: &QrEncoding) -> Result<BiPoly, PolyError> {
    let m = e.m();
    let nu = turn_parities(e);
    let mut dir = Monomial::ONE;
    let mut out = BiPoly::zero();
    for i in 0..=m + 1 {
        if i > 0 {
            dir = dir.checked_mul(Monomial::var(nu[i - 1]))?;
        }
        let q = if i == 0 { 0 } else { e.q(i) };
        let rho_next = if i < m { e.rho(i + 1) as u64 } else { 0 };
        let c = q.checked_add(rho_next).ok_or(PolyError::Overflow)?;
        let c = i64::try_from(c).map_err(|_| PolyError::Overflow)?;
        out = out.checked_add(&BiPoly::term(dir, c))?;
    }
    Ok(out)
}

/// Symbolic positions of graph vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Placement {
    pub positions: BTreeMap<usize, BiPoly>,
}

impl Placement {
    pub fn get(&self, v: usize) -> Option<&BiPoly> {
        self.positions.get(&v)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    fn place(&mut self, v: usize, p: BiPoly) -> Result<(), EmbedError> {
        match self.positions.get(&v) {
            Some(placed) if *placed != p => Err(EmbedError::Inconsistent {
                vertex: v,
                placed: placed.clone(),
                found: p,
            }),
            Some(_) => Ok(()),
            None => {
                self.positions.insert(v, p);
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Half {
    /// Triangle `v0, v1, v2`, entered through `v0v1`.
    A,
    /// Triangle `v1, v2, v3`, entered through `v1v2`.
    B,
}

/// Places every vertex of a Δ-tree by walking its face tree in lockstep with
/// the triangles of the rhombus tree.
pub fn embed_face_tree(ft: &FaceTree) -> Result<Placement, EmbedError> {
    embed_face_tree_traced(ft).map(|(p, _)| p)
}

/// Like [`embed_face_tree`], also reporting the first rhombus corner at
/// which each vertex was placed.
pub fn embed_face_tree_traced(
    ft: &FaceTree,
) -> Result<(Placement, BTreeMap<usize, CornerRef>), EmbedError> {
    let mut placement = Placement::default();
    let mut corners = BTreeMap::new();
    if ft.roles.is_empty() {
        return Ok((placement, corners));
    }
    let mut stack = vec![(ft.root, Address::root(), rhombus_root(), Half::A)];
    while let Some((face, addr, state, half)) = stack.pop() {
        let slots = match half {
            Half::A => [Corner::V0, Corner::V1, Corner::V2],
            Half::B => [Corner::V1, Corner::V2, Corner::V3],
        };
        for (&v, &c) in ft.roles[face].iter().zip(&slots) {
            placement.place(v, state.corner(c)?)?;
            corners
                .entry(v)
                .or_insert_with(|| CornerRef::new(addr.clone(), c));
        }
        for child in ft.children[face].iter().rev() {
            let next = match (half, child.slot) {
                (Half::A, Slot::BaseLeft) => {
                    let a = addr.child(Label::Left);
                    (child.face, a, rhombus_child(&state, Label::Left)?, Half::A)
                }
                (Half::A, Slot::BaseRight) => (child.face, addr.clone(), state.clone(), Half::B),
                (Half::B, Slot::BaseLeft) => {
                    let a = addr.child(Label::Right);
                    (child.face, a, rhombus_child(&state, Label::Right)?, Half::A)
                }
                (Half::B, Slot::BaseRight) => {
                    let a = addr.child(Label::Fwd);
                    (child.face, a, rhombus_child(&state, Label::Fwd)?, Half::A)
                }
            };
            stack.push(next);
        }
    }
    Ok((placement, corners))
}

/// The portion of the infinite triangulation covered by all rhombus nodes of
/// depth at most `depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TStar {
    pub graph: Graph,
    pub placement: Placement,
    /// Canonical corner of each vertex id.
    pub corners: Vec<CornerRef>,
}

const RHOMBUS_EDGES: [(Corner, Corner); 5] = [
    (Corner::V0, Corner::V1),
    (Corner::V0, Corner::V2),
    (Corner::V2, Corner::V3),
    (Corner::V1, Corner::V3),
    (Corner::V2, Corner::V1),
];

/// Embeds every node of depth at most `depth`. Vertex ids follow the
/// preorder of nodes (children in `F, L, R` order) and corners `v0..v3`.
pub fn embed_tstar(depth: usize) -> Result<TStar, EmbedError> {
    let mut ids: HashMap<CornerRef, usize> = HashMap::new();
    let mut corners = Vec::new();
    let mut placement = Placement::default();
    let mut edges = Vec::new();
    let mut stack = vec![(Address::root(), rhombus_root())];
    while let Some((addr, state)) = stack.pop() {
        let mut local = [0usize; 4];
        for (slot, c) in Corner::ALL.into_iter().enumerate() {
            let canon = canonical_corner(&CornerRef::new(addr.clone(), c));
            let id = *ids.entry(canon.clone()).or_insert_with(|| {
                corners.push(canon);
                corners.len() - 1
            });
            placement.place(id, state.corner(c)?)?;
            local[slot] = id;
        }
        for (a, b) in RHOMBUS_EDGES {
            edges.push(edge(local[a as usize], local[b as usize]));
        }
        if addr.len() < depth {
            for l in Label::ALL.into_iter().rev() {
                stack.push((addr.child(l), rhombus_child(&state, l)?));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::from_edges(corners.len(), edges).expect("rhombus edges are simple");
    Ok(TStar {
        graph,
        placement,
        corners,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Injective,
    /// Two vertices with the same polynomial, smaller id first.
    Collision(usize, usize),
}

/// Checks that all positions are pairwise distinct polynomials.
pub fn certify_injective(p: &Placement) -> Certificate {
    let mut seen: HashMap<&BiPoly, usize> = HashMap::with_capacity(p.len());
    for (&v, poly) in &p.positions {
        if let Some(&u) = seen.get(poly) {
            return Certificate::Collision(u, v);
        }
        seen.insert(poly, v);
    }
    Certificate::Injective
}

/// Symbolic form of an edge vector `psi(u) - psi(w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeShape {
    /// `±m` for a monomial `m`: length 1.
    Unit,
    /// `±m (x_b - 1)`: length `|x_b - 1|`.
    Diagonal(u8),
}

impl EdgeShape {
    /// Length class: 0 for unit edges, `1 + b` for `|x_b - 1|`.
    pub fn class(self) -> u8 {
        match self {
            EdgeShape::Unit => 0,
            EdgeShape::Diagonal(b) => 1 + b,
        }
    }
}

pub fn edge_shape(diff: &BiPoly) -> Option<EdgeShape> {
    match diff.terms() {
        [(_, k)] if k.abs() == 1 => Some(EdgeShape::Unit),
        [(lo, a), (hi, b)] if *a == -*b && a.abs() == 1 => {
            if hi.e0 == lo.e0 + 1 && hi.e1 == lo.e1 {
                Some(EdgeShape::Diagonal(0))
            } else if hi.e1 == lo.e1 + 1 && hi.e0 == lo.e0 {
                Some(EdgeShape::Diagonal(1))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Shape of the edge `{u, w}` under `p`, if both endpoints are placed and
/// the difference has one of the three admissible forms.
pub fn classify_edge(p: &Placement, u: usize, w: usize) -> Option<EdgeShape> {
    let diff = p.get(u)?.checked_sub(p.get(w)?).ok()?;
    edge_shape(&diff)
}

/// Every edge of `g` whose placement difference is not a unit or diagonal
/// shape.
pub fn edge_shape_violations(p: &Placement, g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, w)| classify_edge(p, u, w).is_none())
        .collect()
}
