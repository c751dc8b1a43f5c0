//! Numeric drawings from symbolic placements.
//!
//! A placement is evaluated at `x0 = exp(i theta0)`, `x1 = exp(i theta1)`
//! and scaled by `scale`. Edge lengths then fall into three classes:
//! `scale`, `scale |x0 - 1|` and `scale |x1 - 1|`.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::TAU;
use std::fmt::Write as _;

use ordered_float::OrderedFloat;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bipoly::BiPoly;
use crate::embedding::{classify_edge, Placement};
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Sampled angles stay this far from `0` and `2 pi`.
pub const THETA_MARGIN: f64 = 0.05;
/// Sampled angles are redrawn when closer than this to each other.
pub const MIN_THETA_SEPARATION: f64 = 1e-3;
/// Relative tolerance for matching an edge to its length class.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Parameter draws tried before giving up on a near-coincident drawing.
pub const MAX_ATTEMPTS: u64 = 16;
/// Minimum vertex distance, relative to the diameter, accepted without a
/// retry.
pub const NEAR_COINCIDENCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RealizeError {
    #[error("edge lengths must be positive and finite, got {0}")]
    BadLength(f64),
    #[error("vertex {0} has no position")]
    MissingVertex(usize),
    #[error("edge ({u}, {v}) has length {length}, which matches no class")]
    OffClass { u: usize, v: usize, length: f64 },
    #[error("invalid drawing document: {0}")]
    Document(String),
}

/// A point `(x0, x1)` on the torus plus the overall scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusParams {
    pub theta0: f64,
    pub theta1: f64,
    pub scale: f64,
}

impl TorusParams {
    /// `[scale, scale |x0 - 1|, scale |x1 - 1|]`, using
    /// `|1 - exp(i theta)| = 2 |sin(theta / 2)|`.
    pub fn class_lengths(&self) -> [f64; 3] {
        let chord = |t: f64| 2.0 * (t / 2.0).sin().abs();
        [
            self.scale,
            self.scale * chord(self.theta0),
            self.scale * chord(self.theta1),
        ]
    }
}

/// Deterministic angles uniform in `(THETA_MARGIN, 2 pi - THETA_MARGIN)`,
/// at least `MIN_THETA_SEPARATION` apart, with unit scale.
pub fn sample_params(seed: u64) -> TorusParams {
    let mut rng = SplitMix64::new(seed);
    let span = TAU - 2.0 * THETA_MARGIN;
    let mut draw = || THETA_MARGIN + rng.next_f64() * span;
    let theta0 = draw();
    let mut theta1 = draw();
    while (theta0 - theta1).abs() < MIN_THETA_SEPARATION {
        theta1 = draw();
    }
    TorusParams {
        theta0,
        theta1,
        scale: 1.0,
    }
}

/// Parameters whose three class lengths are `{a, b, c}`.
///
/// The largest length becomes the scale and the other two are realized as
/// chords `2 s sin(theta / 2)` of the remaining classes.
pub fn solve_params(a: f64, b: f64, c: f64) -> Result<TorusParams, RealizeError> {
    Ok(param_variants(a, b, c)?[0])
}

/// Every parameter choice realizing `{a, b, c}`: both assignments of the
/// two shorter lengths to `x0`/`x1`, each angle or its reflection
/// `2 pi - theta`. The first entry is [`solve_params`]'s answer.
pub fn param_variants(a: f64, b: f64, c: f64) -> Result<Vec<TorusParams>, RealizeError> {
    for x in [a, b, c] {
        if !(x > 0.0 && x.is_finite()) {
            return Err(RealizeError::BadLength(x));
        }
    }
    let mut v = [a, b, c];
    let imax = (0..3).fold(0, |best, i| if v[i] > v[best] { i } else { best });
    v.swap(0, imax);
    let s = v[0];
    let angle = |len: f64| 2.0 * (len / (2.0 * s)).asin();
    let (t0, t1) = (angle(v[1]), angle(v[2]));
    let mut out = Vec::with_capacity(8);
    for (p, q) in [(t0, t1), (t1, t0)] {
        for (fp, fq) in [(false, false), (false, true), (true, false), (true, true)] {
            let theta0 = if fp { TAU - p } else { p };
            let theta1 = if fq { TAU - q } else { q };
            out.push(TorusParams {
                theta0,
                theta1,
                scale: s,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawnEdge {
    pub u: usize,
    pub v: usize,
    pub class: u8,
    pub original: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub params: TorusParams,
    pub points: BTreeMap<usize, (f64, f64)>,
    pub edges: Vec<DrawnEdge>,
    pub class_lengths: [f64; 3],
    /// External vertex names, when the input used them.
    pub labels: BTreeMap<usize, String>,
}

fn distance(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn relative_deviation(length: f64, class: f64) -> f64 {
    (length - class).abs() / class
}

/// Evaluates `p` at `t` on the vertices and edges of `g`.
///
/// An edge is classified symbolically when its placement difference has a
/// recognised shape, otherwise by the nearest class length; either way its
/// length must match the class within [`DEFAULT_TOLERANCE`].
pub fn realize(p: &Placement, t: &TorusParams, g: &Graph) -> Result<Drawing, RealizeError> {
    let mut points = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let poly = p.get(v).ok_or(RealizeError::MissingVertex(v))?;
        let z = poly.eval(t.theta0, t.theta1) * t.scale;
        points.insert(v, (z.re, z.im));
    }
    let class_lengths = t.class_lengths();
    let mut edges = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let length = distance(points[&u], points[&v]);
        let class = match classify_edge(p, u, v) {
            Some(shape) => shape.class(),
            None => (0..3u8)
                .min_by_key(|&c| {
                    OrderedFloat(relative_deviation(length, class_lengths[c as usize]))
                })
                .unwrap(),
        };
        if relative_deviation(length, class_lengths[class as usize]) > DEFAULT_TOLERANCE {
            return Err(RealizeError::OffClass { u, v, length });
        }
        edges.push(DrawnEdge {
            u,
            v,
            class,
            original: true,
        });
    }
    Ok(Drawing {
        params: *t,
        points,
        edges,
        class_lengths,
        labels: BTreeMap::new(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyReport {
    pub max_relative_deviation: f64,
    /// Infinite when there are fewer than two vertices.
    pub min_distance: f64,
    /// Bounding-box diagonal of the points; zero for fewer than two.
    pub diameter: f64,
    pub distinct_class_lengths: usize,
    pub pass: bool,
}

impl VerifyReport {
    /// Whether two vertices are closer than `NEAR_COINCIDENCE` times the
    /// diameter.
    pub fn near_coincident(&self) -> bool {
        self.min_distance < NEAR_COINCIDENCE * self.diameter
    }
}

/// Re-measures every edge against the class lengths implied by `t` and
/// checks that all vertices are distinct. Edges passing through vertices
/// are allowed.
pub fn verify_drawing(d: &Drawing, t: &TorusParams, tol: f64) -> VerifyReport {
    let classes = t.class_lengths();
    let mut max_dev: f64 = 0.0;
    let mut used = BTreeSet::new();
    for e in &d.edges {
        let (Some(&a), Some(&b)) = (d.points.get(&e.u), d.points.get(&e.v)) else {
            max_dev = f64::INFINITY;
            continue;
        };
        let Some(&class_len) = classes.get(e.class as usize) else {
            max_dev = f64::INFINITY;
            continue;
        };
        used.insert(e.class);
        max_dev = max_dev.max(relative_deviation(distance(a, b), class_len));
    }
    let mut distinct: Vec<f64> = Vec::new();
    for c in used {
        let len = classes[c as usize];
        if !distinct.iter().any(|&x| relative_deviation(len, x) <= tol) {
            distinct.push(len);
        }
    }
    let pts: Vec<(f64, f64)> = d.points.values().copied().collect();
    let min_distance = closest_pair_distance(&pts);
    let diameter = bounding_diagonal(&pts);
    VerifyReport {
        max_relative_deviation: max_dev,
        min_distance,
        diameter,
        distinct_class_lengths: distinct.len(),
        pass: max_dev <= tol && min_distance > 0.0,
    }
}

fn bounding_diagonal(pts: &[(f64, f64)]) -> f64 {
    if pts.len() < 2 {
        return 0.0;
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    (x1 - x0).hypot(y1 - y0)
}

/// Smallest distance between two points, by a left-to-right sweep keeping
/// the points within the current best distance ordered by `y`.
pub fn closest_pair_distance(pts: &[(f64, f64)]) -> f64 {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by_key(|&i| (OrderedFloat(pts[i].0), OrderedFloat(pts[i].1)));
    let mut best = f64::INFINITY;
    let mut active: BTreeSet<(OrderedFloat<f64>, usize)> = BTreeSet::new();
    let mut tail = 0;
    for &i in &order {
        let (x, y) = pts[i];
        while tail < order.len() && pts[order[tail]].0 < x - best {
            let j = order[tail];
            active.remove(&(OrderedFloat(pts[j].1), j));
            tail += 1;
        }
        let lo = (OrderedFloat(y - best), 0);
        let hi = (OrderedFloat(y + best), usize::MAX);
        for &(_, j) in active.range(lo..=hi) {
            best = best.min(distance(pts[i], pts[j]));
        }
        if best == 0.0 {
            return 0.0;
        }
        active.insert((OrderedFloat(y), i));
    }
    best
}

const CLASS_COLORS: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];
const SVG_EXTENT: f64 = 1000.0;

/// SVG with one line per edge, coloured by length class, and one circle per
/// vertex. Coordinates are rescaled to a 1000-unit frame with a 5% margin
/// and `y` pointing up.
pub fn emit_svg(d: &Drawing) -> String {
    let mut out = String::new();
    if d.points.is_empty() {
        out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\"></svg>\n");
        return out;
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in d.points.values() {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let unit = if span > 0.0 { SVG_EXTENT / span } else { 1.0 };
    let margin = 0.05 * if span > 0.0 { SVG_EXTENT } else { 1.0 };
    let w = (x1 - x0) * unit + 2.0 * margin;
    let h = (y1 - y0) * unit + 2.0 * margin;
    let map = |(x, y): (f64, f64)| ((x - x0) * unit + margin, (y1 - y) * unit + margin);
    let r = 0.006 * w.max(h);

    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w:.3} {h:.3}\">"
    );
    let _ = writeln!(
        out,
        "<g stroke-width=\"{:.3}\" stroke-linecap=\"round\">",
        r / 2.0
    );
    for e in &d.edges {
        let (ax, ay) = map(d.points[&e.u]);
        let (bx, by) = map(d.points[&e.v]);
        let color = CLASS_COLORS[(e.class as usize).min(2)];
        let _ = writeln!(
            out,
            "<line x1=\"{ax:.3}\" y1=\"{ay:.3}\" x2=\"{bx:.3}\" y2=\"{by:.3}\" stroke=\"{color}\"/>"
        );
    }
    out.push_str("</g>\n<g fill=\"#000000\">\n");
    for &p in d.points.values() {
        let (cx, cy) = map(p);
        let _ = writeln!(out, "<circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{r:.3}\"/>");
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexRecord {
    id: usize,
    x: f64,
    y: f64,
    poly: BiPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingDocument {
    params: TorusParams,
    class_lengths: [f64; 3],
    vertices: Vec<VertexRecord>,
    edges: Vec<DrawnEdge>,
}

/// The drawing document, vertices in id order with their exact positions.
pub fn emit_json(d: &Drawing, p: &Placement) -> String {
    let doc = DrawingDocument {
        params: d.params,
        class_lengths: d.class_lengths,
        vertices: d
            .points
            .iter()
            .map(|(&id, &(x, y))| VertexRecord {
                id,
                x,
                y,
                poly: p.get(id).cloned().unwrap_or_default(),
                label: d.labels.get(&id).cloned(),
            })
            .collect(),
        edges: d.edges.clone(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("drawing documents serialize");
    s.push('\n');
    s
}

/// Parses a drawing document back into the drawing and the placement of
/// its vertices.
pub fn parse_drawing_json(text: &str) -> Result<(Drawing, Placement), RealizeError> {
    let doc: DrawingDocument =
        serde_json::from_str(text).map_err(|e| RealizeError::Document(e.to_string()))?;
    let mut points = BTreeMap::new();
    let mut labels = BTreeMap::new();
    let mut placement = Placement::default();
    for rec in doc.vertices {
        if points.insert(rec.id, (rec.x, rec.y)).is_some() {
            return Err(RealizeError::Document(format!(
                "vertex {} listed twice",
                rec.id
            )));
        }
        if let Some(l) = rec.label {
            labels.insert(rec.id, l);
        }
        placement.positions.insert(rec.id, rec.poly);
    }
    for e in &doc.edges {
        if e.class > 2 {
            return Err(RealizeError::Document(format!(
                "edge class {} out of range",
                e.class
            )));
        }
        if !points.contains_key(&e.u) || !points.contains_key(&e.v) {
            return Err(RealizeError::Document(format!(
                "edge ({}, {}) references an unknown vertex",
                e.u, e.v
            )));
        }
    }
    Ok((
        Drawing {
            params: doc.params,
            points,
            edges: doc.edges,
            class_lengths: doc.class_lengths,
            labels,
        },
        placement,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::Monomial;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn triangle_placement() -> Placement {
        let mut p = Placement::default();
        p.positions.insert(0, BiPoly::zero());
        p.positions.insert(1, BiPoly::constant(1));
        p.positions.insert(2, BiPoly::term(Monomial::var(0), 1));
        p
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn sampling_is_deterministic_and_bounded() {
        assert_eq!(sample_params(5), sample_params(5));
        for seed in 0..1000 {
            let t = sample_params(seed);
            for th in [t.theta0, t.theta1] {
                assert!(th > THETA_MARGIN && th < TAU - THETA_MARGIN);
            }
            assert!((t.theta0 - t.theta1).abs() >= MIN_THETA_SEPARATION);
            assert_eq!(t.scale, 1.0);
        }
    }

    #[test]
    fn solve_examples() {
        let t = solve_params(1.0, 1.0, 1.0).unwrap();
        assert!((t.theta0 - FRAC_PI_3).abs() < 1e-15);
        assert!((t.theta1 - FRAC_PI_3).abs() < 1e-15);
        assert_eq!(t.scale, 1.0);

        let t = solve_params(1.0, 2.0, 1.0).unwrap();
        assert_eq!(t.scale, 2.0);
        let got = t.class_lengths();
        assert!((got[1] - 1.0).abs() < 1e-12 && (got[2] - 1.0).abs() < 1e-12);

        for v in param_variants(1.0, 0.8, 0.55).unwrap() {
            let mut got = v.class_lengths();
            got.sort_by(f64::total_cmp);
            for (g, w) in got.iter().zip([0.55, 0.8, 1.0]) {
                assert!(relative_deviation(*g, w) < 1e-9);
            }
        }
        assert!(solve_params(0.0, 1.0, 1.0).is_err());
        assert!(solve_params(1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn triangle_at_right_angle() {
        let t = TorusParams {
            theta0: FRAC_PI_2,
            theta1: 1.0,
            scale: 1.0,
        };
        let d = realize(&triangle_placement(), &t, &triangle()).unwrap();
        let close = |a: (f64, f64), b: (f64, f64)| distance(a, b) < 1e-15;
        assert!(close(d.points[&0], (0.0, 0.0)));
        assert!(close(d.points[&1], (1.0, 0.0)));
        assert!(close(d.points[&2], (0.0, 1.0)));
        let classes: Vec<u8> = d.edges.iter().map(|e| e.class).collect();
        assert_eq!(classes, vec![0, 0, 1]);
        assert!((d.class_lengths[1] - 2f64.sqrt()).abs() < 1e-15);
        let r = verify_drawing(&d, &t, DEFAULT_TOLERANCE);
        assert!(r.pass);
        assert_eq!(r.distinct_class_lengths, 2);
    }

    #[test]
    fn scaling_doubles_coordinates() {
        let t1 = TorusParams {
            theta0: 1.1,
            theta1: 2.3,
            scale: 1.5,
        };
        let t2 = TorusParams { scale: 3.0, ..t1 };
        let a = realize(&triangle_placement(), &t1, &triangle()).unwrap();
        let b = realize(&triangle_placement(), &t2, &triangle()).unwrap();
        for (v, &(x, y)) in &a.points {
            assert_eq!(b.points[v], (2.0 * x, 2.0 * y));
        }
        assert_eq!(
            verify_drawing(&a, &t1, 1e-9).pass,
            verify_drawing(&b, &t2, 1e-9).pass
        );
    }

    #[test]
    fn verification_failures() {
        let t = TorusParams {
            theta0: 1.0,
            theta1: 2.0,
            scale: 1.0,
        };
        let mut d = realize(&triangle_placement(), &t, &triangle()).unwrap();
        let mut coincident = d.clone();
        coincident.points.insert(2, coincident.points[&0]);
        let r = verify_drawing(&coincident, &t, 1e-6);
        assert!(!r.pass);
        assert_eq!(r.min_distance, 0.0);

        let (x, y) = d.points[&1];
        d.points.insert(1, (x * 1.01, y * 1.01));
        assert!(!verify_drawing(&d, &t, 1e-6).pass);
    }

    #[test]
    fn realize_rejects_off_class_edges() {
        let mut p = triangle_placement();
        p.positions.insert(2, BiPoly::constant(5));
        let t = sample_params(1);
        assert!(matches!(
            realize(&p, &t, &triangle()),
            Err(RealizeError::OffClass { .. })
        ));
        p.positions.remove(&2);
        assert_eq!(
            realize(&p, &t, &triangle()),
            Err(RealizeError::MissingVertex(2))
        );
    }

    #[test]
    fn closest_pair_matches_brute_force() {
        let mut rng = SplitMix64::new(77);
        for n in [0usize, 1, 2, 3, 10, 200] {
            let pts: Vec<(f64, f64)> = (0..n)
                .map(|_| ((rng.below(50) as f64) * 0.1, rng.next_f64()))
                .collect();
            let mut brute = f64::INFINITY;
            for i in 0..n {
                for j in i + 1..n {
                    brute = brute.min(distance(pts[i], pts[j]));
                }
            }
            assert_eq!(closest_pair_distance(&pts), brute);
        }
    }

    #[test]
    fn svg_output() {
        let t = TorusParams {
            theta0: FRAC_PI_2,
            theta1: PI,
            scale: 1.0,
        };
        let d = realize(&triangle_placement(), &t, &triangle()).unwrap();
        let svg = emit_svg(&d);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<line").count(), 3);
        let colors: BTreeSet<&str> = svg
            .match_indices("stroke=\"#")
            .map(|(i, _)| &svg[i + 8..i + 15])
            .collect();
        assert_eq!(colors.len(), 2);
        assert_eq!(svg, emit_svg(&d));

        let empty = realize(&Placement::default(), &t, &Graph::empty(0)).unwrap();
        let svg = emit_svg(&empty);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn json_round_trip() {
        let t = sample_params(3);
        let p = triangle_placement();
        let mut d = realize(&p, &t, &triangle()).unwrap();
        d.labels.insert(1, "b".into());
        let text = emit_json(&d, &p);
        let (back, placement) = parse_drawing_json(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(placement, p);
        assert!(parse_drawing_json("{}").is_err());
        assert!(parse_drawing_json(&text.replace("\"class\": 1", "\"class\": 7")).is_err());
    }
}
