//! Simple undirected graphs and the edge-list file format.
//!
//! Vertices are dense ids `0..n`. Edges are stored once each as `(min, max)`
//! pairs in a sorted set, so two graphs with the same edges compare equal no
//! matter how they were built.
//!
//! The text format is one edge per line:
//!
//! ```text
//! # a path on three vertices, plus an isolated vertex
//! n=4
//! 0 1
//! 1 2
//! ```
//!
//! A JSON document `{"n": 4, "edges": [[0, 1], [1, 2]]}` is accepted as well.
//! Files may also name vertices with arbitrary tokens (`a b`, `b c`); those
//! labels are mapped to ids in order of first appearance and kept alongside
//! the graph.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

/// An undirected edge in canonical `(smaller, larger)` order.
pub type Edge = (usize, usize);

/// Builds the canonical form of the edge `{u, v}`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected two vertex tokens, found {0}")]
    WrongTokenCount(usize),
    #[error("negative vertex id `{0}`")]
    NegativeId(String),
    #[error("vertex id `{0}` is too large")]
    IdTooLarge(String),
    #[error("malformed header `{0}`")]
    BadHeader(String),
    #[error("header n={declared} is smaller than the referenced vertex count {needed}")]
    HeaderTooSmall { declared: usize, needed: usize },
    #[error("{0} vertices exceed the limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("header must precede every edge line")]
    LateHeader,
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` `{1}`")]
    DuplicateEdge(String, String),
    #[error("invalid JSON document: {0}")]
    Json(String),
}

/// Largest vertex count accepted from a graph file.
pub const MAX_VERTICES: usize = 1 << 20;

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates (in either
    /// orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; an existing edge is an error.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange { u, v, n: self.n });
        }
        if !self.edges.insert(edge(u, v)) {
            let (a, b) = edge(u, v);
            return Err(GraphError::DuplicateEdge(a, b));
        }
        Ok(())
    }

    /// Adds `{u, v}` if absent. Returns whether the edge was new.
    pub(crate) fn add_edge_if_absent(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.edges.insert(edge(u, v))
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub(crate) fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Whether every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    /// Applies `perm` (old id -> new id) to every vertex.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        Graph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| edge(perm[u], perm[v]))
                .collect(),
        }
    }
}

impl fmt::Display for Graph {
    /// Writes the graph in the edge-list file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// A parsed graph together with the external vertex names, if the file used
/// names instead of numeric ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
}

/// Parses graph file contents, discarding vertex labels.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_labeled_graph(text).map(|lg| lg.graph)
}

/// Parses graph file contents in either the edge-list or the JSON format.
pub fn parse_labeled_graph(text: &str) -> Result<LabeledGraph, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    n: Option<usize>,
    edges: Vec<(i64, i64)>,
}

fn parse_json(text: &str) -> Result<LabeledGraph, ParseError> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        kind: ParseErrorKind::Json(e.to_string()),
    })?;
    let mut pairs = Vec::with_capacity(doc.edges.len());
    for &(u, v) in &doc.edges {
        for id in [u, v] {
            if id < 0 {
                return Err(ParseError {
                    line: 1,
                    kind: ParseErrorKind::NegativeId(id.to_string()),
                });
            }
        }
        pairs.push((1, u as usize, v as usize));
    }
    build_numeric(doc.n.map(|n| (1, n)), pairs)
}

enum Token {
    Id(usize),
    Name,
}

fn classify(tok: &str, line: usize) -> Result<Token, ParseError> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
        if tok.starts_with('-') {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::NegativeId(tok.to_string()),
            });
        }
        return tok.parse::<usize>().map(Token::Id).map_err(|_| ParseError {
            line,
            kind: ParseErrorKind::IdTooLarge(tok.to_string()),
        });
    }
    Ok(Token::Name)
}

fn parse_edge_list(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows: Vec<(usize, &str, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("n=") {
            if !rows.is_empty() || header.is_some() {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::LateHeader,
                });
            }
            let n = rest.trim().parse::<usize>().map_err(|_| ParseError {
                line,
                kind: ParseErrorKind::BadHeader(content.to_string()),
            })?;
            header = Some((line, n));
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::WrongTokenCount(toks.len()),
            });
        }
        rows.push((line, toks[0], toks[1]));
    }

    // Validate every token first so numeric errors are reported even in
    // files that otherwise use names.
    let mut numeric = Vec::with_capacity(rows.len());
    let mut named = false;
    for &(line, a, b) in &rows {
        match (classify(a, line)?, classify(b, line)?) {
            (Token::Id(u), Token::Id(v)) => numeric.push((line, u, v)),
            _ => named = true,
        }
    }
    if !named {
        return build_numeric(header, numeric);
    }

    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut pairs = Vec::with_capacity(rows.len());
    for &(line, a, b) in &rows {
        let mut uv = [0usize; 2];
        for (slot, tok) in uv.iter_mut().zip([a, b]) {
            *slot = *ids.entry(tok).or_insert_with(|| {
                labels.push(tok.to_string());
                labels.len() - 1
            });
        }
        pairs.push((line, uv[0], uv[1]));
    }
    if let Some((line, n)) = header {
        if n > MAX_VERTICES {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::TooManyVertices(n),
            });
        }
        if n < labels.len() {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::HeaderTooSmall {
                    declared: n,
                    needed: labels.len(),
                },
            });
        }
        // Unnamed trailing vertices get their id as a label.
        for id in labels.len()..n {
            labels.push(id.to_string());
        }
    }
    let n = labels.len();
    let mut graph = Graph::empty(n);
    for (line, u, v) in pairs {
        graph.insert_edge(u, v).map_err(|e| ParseError {
            line,
            kind: match e {
                GraphError::SelfLoop(_) => ParseErrorKind::SelfLoop(labels[u].clone()),
                _ => ParseErrorKind::DuplicateEdge(labels[u].clone(), labels[v].clone()),
            },
        })?;
    }
    Ok(LabeledGraph {
        graph,
        labels: Some(labels),
    })
}

fn build_numeric(
    header: Option<(usize, usize)>,
    pairs: Vec<(usize, usize, usize)>,
) -> Result<LabeledGraph, ParseError> {
    let needed = pairs
        .iter()
        .map(|&(_, u, v)| u.max(v).saturating_add(1))
        .max()
        .unwrap_or(0);
    let n = match header {
        Some((line, declared)) if declared < needed => {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::HeaderTooSmall { declared, needed },
            })
        }
        Some((_, declared)) => declared,
        None => needed,
    };
    if n > MAX_VERTICES {
        let line = header.map_or_else(|| pairs.iter().map(|p| p.0).max().unwrap_or(1), |h| h.0);
        return Err(ParseError {
            line,
            kind: ParseErrorKind::TooManyVertices(n),
        });
    }
    let mut graph = Graph::empty(n);
    for (line, u, v) in pairs {
        graph.insert_edge(u, v).map_err(|e| ParseError {
            line,
            kind: match e {
                GraphError::SelfLoop(u) => ParseErrorKind::SelfLoop(u.to_string()),
                _ => ParseErrorKind::DuplicateEdge(u.to_string(), v.to_string()),
            },
        })?;
    }
    Ok(LabeledGraph {
        graph,
        labels: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_graph("0 1\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn header_only() {
        let g = parse_graph("n=4\n").unwrap();
        assert_eq!(g, Graph::empty(4));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# hello\n\nn=5 # five\n 2   0 \n# 9 9\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn self_loop_rejected() {
        let err = parse_graph("0 1\n0 0").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, ParseErrorKind::SelfLoop(_)));
    }

    #[test]
    fn duplicate_in_either_orientation() {
        let err = parse_graph("0 1\n\n1 0").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, ParseErrorKind::DuplicateEdge(..)));
    }

    #[test]
    fn negative_and_malformed() {
        let err = parse_graph("0 -1").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::NegativeId(_)));
        let err = parse_graph("0 1 2").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::WrongTokenCount(3));
        let err = parse_graph("n=x").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::BadHeader(_)));
        let err = parse_graph("0 1\nn=3").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::LateHeader);
        let err = parse_graph("n=2\n0 5").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn json_document() {
        let g = parse_graph(r#"{"n": 4, "edges": [[0, 1], [2, 1]]}"#).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.has_edge(1, 2));
        assert!(parse_graph(r#"{"edges": [[0, 0]]}"#).is_err());
        assert!(parse_graph(r#"{"edges": [[0, -3]]}"#).is_err());
        assert!(parse_graph(r#"{"edges": [[0, 1]"#).is_err());
    }

    #[test]
    fn named_vertices() {
        let lg = parse_labeled_graph("a b\nb c\nc 7").unwrap();
        assert_eq!(lg.graph.vertex_count(), 4);
        assert_eq!(
            lg.labels.unwrap(),
            vec!["a".to_string(), "b".into(), "c".into(), "7".into()]
        );
        assert!(parse_labeled_graph("a b\nb a").is_err());
    }

    #[test]
    fn display_round_trips() {
        let g = Graph::from_edges(6, [(0, 1), (4, 2), (3, 5)]).unwrap();
        assert_eq!(parse_graph(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn vertex_limit() {
        let big = format!("n={}\n", MAX_VERTICES + 1);
        assert!(matches!(
            parse_graph(&big).unwrap_err().kind,
            ParseErrorKind::TooManyVertices(_)
        ));
        assert!(parse_labeled_graph(&format!("{big}a b\n")).is_err());
        assert!(parse_graph("0 99999999999\n").is_err());
        assert!(parse_graph(&format!("n={MAX_VERTICES}\n")).is_ok());
    }
}
