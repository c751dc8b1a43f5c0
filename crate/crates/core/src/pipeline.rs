//! End-to-end drawing: recognise, triangulate, embed, certify, realize and
//! verify.

use crate::bipoly::BiPoly;
use crate::embedding::{certify_injective, embed_face_tree, embed_tstar, Certificate, Placement};
use crate::graph::Graph;
use crate::outerplanar::{build_delta_tree, face_tree, is_outerplanar, OuterplanarError, Verdict};
use crate::realize::{
    param_variants, realize, sample_params, verify_drawing, Drawing, TorusParams, VerifyReport,
    DEFAULT_TOLERANCE, MAX_ATTEMPTS,
};
use crate::Error;

pub const MAX_TSTAR_DEPTH: usize = 10;

/// Where torus parameters come from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamSource {
    /// Sampled from consecutive seeds starting here, retried while the
    /// drawing is near-coincident.
    Seed(u64),
    /// Solved from three target lengths, retried over equivalent solutions.
    Lengths([f64; 3]),
    /// Used as given, without retries.
    Explicit(TorusParams),
}

impl ParamSource {
    fn candidates(&self) -> Result<Vec<TorusParams>, Error> {
        Ok(match *self {
            ParamSource::Seed(s) => (0..MAX_ATTEMPTS)
                .map(|k| sample_params(s.wrapping_add(k)))
                .collect(),
            ParamSource::Lengths([a, b, c]) => param_variants(a, b, c)?,
            ParamSource::Explicit(t) => vec![t],
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DrawOutcome {
    pub drawing: Drawing,
    pub placement: Placement,
    pub report: VerifyReport,
    /// Number of parameter choices tried, including the accepted one.
    pub attempts: usize,
}

/// Certified symbolic positions for every vertex of an outerplanar graph.
pub fn embed_graph(g: &Graph) -> Result<Placement, Error> {
    if let Verdict::NotOuterplanar(why) = is_outerplanar(g) {
        return Err(OuterplanarError::NotOuterplanar(why).into());
    }
    let mut placement = Placement::default();
    match g.vertex_count() {
        0 => {}
        1 => {
            placement.positions.insert(0, BiPoly::zero());
        }
        _ => {
            let build = build_delta_tree(g)?;
            let ft = face_tree(&build.tree);
            placement = embed_face_tree(&ft)?;
            if let Some(s) = build.synthetic {
                placement.positions.remove(&s);
            }
        }
    }
    if let Certificate::Collision(u, v) = certify_injective(&placement) {
        return Err(Error::Collision(u, v));
    }
    Ok(placement)
}

/// Realizes `placement` on the edges of `g`, returning the first verified
/// drawing among the candidate parameters.
///
/// Besides passing verification, a drawing is rejected when two vertices
/// are closer than a tiny fraction of its diameter, since rounding can make
/// coincident vertices look distinct.
pub fn draw_placement(
    placement: &Placement,
    g: &Graph,
    source: ParamSource,
) -> Result<DrawOutcome, Error> {
    let candidates = source.candidates()?;
    let mut last = None;
    for (k, t) in candidates.iter().enumerate() {
        let drawing = realize(placement, t, g)?;
        let report = verify_drawing(&drawing, t, DEFAULT_TOLERANCE);
        if report.pass && !report.near_coincident() {
            return Ok(DrawOutcome {
                drawing,
                placement: placement.clone(),
                report,
                attempts: k + 1,
            });
        }
        last = Some(report);
    }
    Err(Error::Verification {
        attempts: candidates.len(),
        report: last.expect("at least one candidate"),
    })
}

/// Draws an outerplanar graph with at most three edge lengths.
pub fn draw_graph(g: &Graph, source: ParamSource) -> Result<DrawOutcome, Error> {
    let placement = embed_graph(g)?;
    draw_placement(&placement, g, source)
}

/// Draws the part of the infinite triangulation covered by rhombus nodes of
/// depth at most `depth`.
pub fn draw_tstar(depth: usize, source: ParamSource) -> Result<DrawOutcome, Error> {
    if depth > MAX_TSTAR_DEPTH {
        return Err(Error::DepthLimit {
            limit: MAX_TSTAR_DEPTH,
            got: depth,
        });
    }
    let t = embed_tstar(depth)?;
    if let Certificate::Collision(u, v) = certify_injective(&t.placement) {
        return Err(Error::Collision(u, v));
    }
    draw_placement(&t.placement, &t.graph, source)
}
