//! Degenerate drawings of outerplanar graphs with three edge lengths.
//!
//! An outerplanar graph is extended to a maximal outerplanar graph (a
//! Δ-tree), whose triangles are mapped onto an infinite trinary tree of
//! rhombi. Every vertex receives a polynomial position in two unit complex
//! numbers `x0`, `x1`; evaluating at almost any pair gives a drawing whose
//! edges have length `1`, `|x0 - 1|` or `|x1 - 1|`, up to scale.
//!
//! The stages are exposed individually and composed in [`pipeline`].

pub mod bipoly;
pub mod blocks;
pub mod embedding;
pub mod graph;
pub mod hstar;
pub mod oracle;
pub mod outerplanar;
pub mod pipeline;
pub mod realize;
pub mod rng;
pub mod selftest;

use thiserror::Error;

pub use bipoly::{BiPoly, Monomial};
pub use graph::{parse_graph, parse_labeled_graph, Graph};
pub use hstar::{Address, Label, QrEncoding};
pub use pipeline::{draw_graph, draw_tstar, DrawOutcome, ParamSource};
pub use realize::{Drawing, TorusParams};

/// Any failure of the drawing pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] graph::ParseError),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Outerplanar(#[from] outerplanar::OuterplanarError),
    #[error(transparent)]
    Address(#[from] hstar::HstarError),
    #[error(transparent)]
    Poly(#[from] bipoly::PolyError),
    #[error(transparent)]
    Embed(#[from] embedding::EmbedError),
    #[error(transparent)]
    Realize(#[from] realize::RealizeError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error("vertices {0} and {1} received the same position")]
    Collision(usize, usize),
    #[error("depth limited to {limit}, got {got}")]
    DepthLimit { limit: usize, got: usize },
    #[error(
        "no verified drawing after {attempts} attempt(s): max relative deviation {:e}, min distance {:e}",
        report.max_relative_deviation,
        report.min_distance
    )]
    Verification {
        attempts: usize,
        report: realize::VerifyReport,
    },
}

impl Error {
    /// `1` for graphs outside the domain, `2` for malformed or out-of-range
    /// input, `3` for anything that would have produced a wrong drawing.
    pub fn exit_code(&self) -> i32 {
        use outerplanar::OuterplanarError as O;
        use realize::RealizeError as R;
        match self {
            Error::Outerplanar(O::NotOuterplanar(_)) => 1,
            Error::Parse(_)
            | Error::Graph(_)
            | Error::Address(_)
            | Error::Oracle(_)
            | Error::DepthLimit { .. }
            | Error::Realize(R::BadLength(_) | R::Document(_)) => 2,
            _ => 3,
        }
    }
}
