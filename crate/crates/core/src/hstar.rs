//! Addresses of rhombus nodes in the infinite ternary tree of rhombi, and
//! their run-length (QR) encoding.
//!
//! Every node is a rhombus with corners `v0, v1, v2, v3` and edges
//! `v0v1, v0v2, v2v3, v1v3, v2v1`. Its three children hang from the edges
//! `v0v2` ([`Label::Left`]), `v2v3` ([`Label::Fwd`]) and `v1v3`
//! ([`Label::Right`]); a child's `v0v1` edge is the parent's labelled edge,
//! origin to origin. A node is named by the labels on its root path.
//!
//! The QR encoding compresses that path into turn bits `rho_1..rho_m`
//! (0 = Left, 1 = Right) and the forward-run lengths `q_1..q_{m+1}` before,
//! between and after the turns. Indices on the public accessors are
//! 1-based.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// The `v2v3` arc.
    Fwd,
    /// The `v0v2` arc (turn bit 0).
    Left,
    /// The `v1v3` arc (turn bit 1).
    Right,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::Fwd, Label::Left, Label::Right];

    fn letter(self) -> char {
        match self {
            Label::Fwd => 'F',
            Label::Left => 'L',
            Label::Right => 'R',
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HstarError {
    #[error("invalid label `{0}`, expected F, L or R")]
    BadLabel(String),
    #[error("q has {q} entries and rho has {rho}, but m = {m} needs {} and {m}", m.saturating_add(1))]
    LengthMismatch { q: usize, rho: usize, m: usize },
    #[error("turn bit {0} is not 0 or 1")]
    BadBit(u8),
    #[error("encoded path is longer than {MAX_PATH_LEN} labels")]
    TooLong,
    #[error("malformed encoding `{0}`, expected `q=(..) rho=(..) m=..`")]
    BadEncoding(String),
}

/// Longest path an encoding may describe, so decoding stays bounded.
pub const MAX_PATH_LEN: u64 = 1 << 20;

/// A node of the rhombus tree, as its root path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Address(Vec<Label>);

impl Address {
    pub fn root() -> Self {
        Address(Vec::new())
    }

    pub fn new(labels: Vec<Label>) -> Self {
        Address(labels)
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, l: Label) -> Address {
        let mut v = self.0.clone();
        v.push(l);
        Address(v)
    }

    pub fn parent(&self) -> Option<(Address, Label)> {
        let (&last, init) = self.0.split_last()?;
        Some((Address(init.to_vec()), last))
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", l.letter())?;
        }
        Ok(())
    }
}

impl FromStr for Address {
    type Err = HstarError;

    /// Comma-separated `F`, `L`, `R`; the empty string is the root.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Address::root());
        }
        s.split(',')
            .map(|tok| match tok.trim() {
                "F" => Ok(Label::Fwd),
                "L" => Ok(Label::Left),
                "R" => Ok(Label::Right),
                other => Err(HstarError::BadLabel(other.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Address)
    }
}

/// The run-length encoding `(q, rho, m)` of an address.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QrEncoding {
    q: Vec<u64>,
    rho: Vec<u8>,
}

impl QrEncoding {
    /// Checks `|q| = m + 1`, `|rho| = m` and that every turn bit is 0 or 1.
    pub fn new(q: Vec<u64>, rho: Vec<u8>, m: usize) -> Result<Self, HstarError> {
        if m.checked_add(1) != Some(q.len()) || rho.len() != m {
            return Err(HstarError::LengthMismatch {
                q: q.len(),
                rho: rho.len(),
                m,
            });
        }
        if let Some(&b) = rho.iter().find(|&&b| b > 1) {
            return Err(HstarError::BadBit(b));
        }
        let total = q
            .iter()
            .try_fold(m as u64, |acc, &x| acc.checked_add(x))
            .filter(|&t| t <= MAX_PATH_LEN);
        if total.is_none() {
            return Err(HstarError::TooLong);
        }
        Ok(QrEncoding { q, rho })
    }

    pub fn m(&self) -> usize {
        self.rho.len()
    }

    /// `q_i` for `1 <= i <= m + 1`.
    pub fn q(&self, i: usize) -> u64 {
        self.q[i - 1]
    }

    /// `rho_i` for `1 <= i <= m`.
    pub fn rho(&self, i: usize) -> u8 {
        self.rho[i - 1]
    }

    pub fn q_slice(&self) -> &[u64] {
        &self.q
    }

    pub fn rho_slice(&self) -> &[u8] {
        &self.rho
    }
}

impl fmt::Display for QrEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: Vec<String>| xs.join(",");
        write!(
            f,
            "q=({}) rho=({}) m={}",
            join(self.q.iter().map(u64::to_string).collect()),
            join(self.rho.iter().map(u8::to_string).collect()),
            self.m()
        )
    }
}

impl FromStr for QrEncoding {
    type Err = HstarError;

    /// Parses the [`Display`](fmt::Display) form `q=(0,2) rho=(0) m=1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HstarError::BadEncoding(s.to_string());
        let mut parts = s.split_whitespace();
        let (Some(q), Some(rho), Some(m), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad());
        };
        fn list<T: FromStr>(field: &str, key: &str) -> Option<Vec<T>> {
            let body = field
                .strip_prefix(key)?
                .strip_prefix("=(")?
                .strip_suffix(')')?;
            if body.is_empty() {
                return Some(Vec::new());
            }
            body.split(',').map(|x| x.parse().ok()).collect()
        }
        let q = list::<u64>(q, "q").ok_or_else(bad)?;
        let rho = list::<u8>(rho, "rho").ok_or_else(bad)?;
        let m = m
            .strip_prefix("m=")
            .and_then(|x| x.parse().ok())
            .ok_or_else(bad)?;
        QrEncoding::new(q, rho, m)
    }
}

pub fn qr_encode(a: &Address) -> QrEncoding {
    let mut q = vec![0u64];
    let mut rho = Vec::new();
    for &l in a.labels() {
        match l {
            Label::Fwd => *q.last_mut().unwrap() += 1,
            Label::Left | Label::Right => {
                rho.push(u8::from(l == Label::Right));
                q.push(0);
            }
        }
    }
    QrEncoding { q, rho }
}

pub fn qr_decode(e: &QrEncoding) -> Address {
    let mut labels = Vec::new();
    for (i, &run) in e.q.iter().enumerate() {
        labels.extend(std::iter::repeat_n(Label::Fwd, run as usize));
        if let Some(&bit) = e.rho.get(i) {
            labels.push(if bit == 0 { Label::Left } else { Label::Right });
        }
    }
    Address(labels)
}

/// Parity bit choosing which angle the node's rhombus uses.
///
/// A turn flips the bit by the length of the forward run before it, plus one
/// for a right turn; forward steps keep it.
pub fn ty(a: &Address) -> u8 {
    let mut t = 0u8;
    let mut run = 0u64;
    for &l in a.labels() {
        match l {
            Label::Fwd => run += 1,
            Label::Left => {
                t ^= (run & 1) as u8;
                run = 0;
            }
            Label::Right => {
                t ^= (run & 1) as u8 ^ 1;
                run = 0;
            }
        }
    }
    t
}

/// `q_{m+1} = 0` and (`q_m > 0` or `m = 1`).
pub fn is_proper(e: &QrEncoding) -> bool {
    let m = e.m();
    if m == 0 || e.q(m + 1) != 0 {
        return false;
    }
    m == 1 || e.q(m) > 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    V0,
    V1,
    V2,
    V3,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::V0, Corner::V1, Corner::V2, Corner::V3];
}

/// A corner of a rhombus node, naming a vertex of the triangulated plane
/// graph the rhombi cover.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CornerRef {
    pub address: Address,
    pub corner: Corner,
}

impl CornerRef {
    pub fn new(address: Address, corner: Corner) -> Self {
        CornerRef { address, corner }
    }
}

/// Rewrites a corner to its unique canonical occurrence: `v0` or `v1` of the
/// root, or `v2`/`v3` of the node that introduces the vertex.
///
/// A child's `v0` and `v1` are corners of its parent: Left takes `(v0, v2)`,
/// Fwd takes `(v2, v3)` and Right takes `(v1, v3)`.
pub fn canonical_corner(c: &CornerRef) -> CornerRef {
    let mut labels = c.address.labels().to_vec();
    let mut corner = c.corner;
    while matches!(corner, Corner::V0 | Corner::V1) {
        let Some(l) = labels.pop() else { break };
        corner = match (corner, l) {
            (Corner::V0, Label::Left) => Corner::V0,
            (Corner::V0, Label::Fwd) => Corner::V2,
            (Corner::V0, Label::Right) => Corner::V1,
            (_, Label::Left) => Corner::V2,
            (_, Label::Fwd | Label::Right) => Corner::V3,
        };
    }
    CornerRef::new(Address(labels), corner)
}

/// The unique proper encoding of the vertex at a corner.
///
/// The root's `v0` and `v1` are the base vertices of its Left and Right
/// children. A vertex introduced as `v2` (`v3`) of `N` is the base vertex of
/// `N` followed by Fwd, Left (Fwd, Right).
pub fn proper_encoding(c: &CornerRef) -> QrEncoding {
    let canon = canonical_corner(c);
    let suffix: &[Label] = match canon.corner {
        Corner::V0 => &[Label::Left],
        Corner::V1 => &[Label::Right],
        Corner::V2 => &[Label::Fwd, Label::Left],
        Corner::V3 => &[Label::Fwd, Label::Right],
    };
    let mut labels = canon.address.0;
    labels.extend_from_slice(suffix);
    qr_encode(&Address(labels))
}
