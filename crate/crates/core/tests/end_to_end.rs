use std::collections::BTreeSet;

use trilength::embedding::{certify_injective, embed_tstar, Certificate};
use trilength::graph::parse_labeled_graph;
use trilength::oracle::{graph_from_mask, random_outerplanar, GenSpec};
use trilength::outerplanar::is_outerplanar;
use trilength::pipeline::{draw_graph, draw_tstar, ParamSource};
use trilength::realize::{emit_json, emit_svg, parse_drawing_json, solve_params, TorusParams};
use trilength::{parse_graph, Error};

// Counted independently by testing planarity of each graph plus an apex.
const OUTERPLANAR_ON_SIX: usize = 19714;

#[test]
fn outerplanar_count_on_six_vertices() {
    let count = (0..1u64 << 15)
        .filter(|&m| is_outerplanar(&graph_from_mask(6, m)).is_yes())
        .count();
    assert_eq!(count, OUTERPLANAR_ON_SIX);
}

#[test]
fn solved_angles_match_reference() {
    let t = solve_params(1.0, 0.8, 0.55).unwrap();
    assert_eq!(t.scale, 1.0);
    assert!((t.theta0 - 0.8230336921349761).abs() < 1e-15);
    assert!((t.theta1 - 0.5571794047833012).abs() < 1e-15);
}

#[test]
fn parse_draw_emit_parse() {
    let g = parse_graph("# fan\n0 1\n0 2\n0 3\n0 4\n1 2\n2 3\n3 4\n").unwrap();
    let d = draw_graph(&g, ParamSource::Seed(11)).unwrap();
    assert!(d.report.pass);
    assert_eq!(d.drawing.edges.len(), g.edge_count());
    let json = emit_json(&d.drawing, &d.placement);
    let (back, placement) = parse_drawing_json(&json).unwrap();
    assert_eq!(back, d.drawing);
    assert_eq!(placement, d.placement);
    assert_eq!(emit_svg(&d.drawing), emit_svg(&back));
}

#[test]
fn labels_follow_vertices() {
    let lg = parse_labeled_graph("x y\ny z\nz w\n").unwrap();
    assert_eq!(lg.labels.as_deref().unwrap(), ["x", "y", "z", "w"]);
    let d = draw_graph(&lg.graph, ParamSource::Seed(0)).unwrap();
    assert_eq!(d.drawing.points.len(), 4);
}

#[test]
fn disconnected_and_sparse_inputs() {
    for text in [
        "n=7\n0 1\n2 3\n",
        "n=5\n",
        "n=9\n0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n6 7\n",
    ] {
        let g = parse_graph(text).unwrap();
        let d = draw_graph(&g, ParamSource::Seed(5)).unwrap();
        assert_eq!(d.drawing.points.len(), g.vertex_count());
        assert!(d.report.pass, "{text:?}");
    }
}

#[test]
fn explicit_params_scale_coordinates() {
    let g = random_outerplanar(GenSpec {
        n: 40,
        keep_prob: 0.8,
        seed: 2,
    })
    .unwrap();
    let t = TorusParams {
        theta0: 1.3,
        theta1: 2.9,
        scale: 1.0,
    };
    let a = draw_graph(&g, ParamSource::Explicit(t)).unwrap();
    let b = draw_graph(&g, ParamSource::Explicit(TorusParams { scale: 2.0, ..t })).unwrap();
    for (v, &(x, y)) in &a.drawing.points {
        assert_eq!(b.drawing.points[v], (2.0 * x, 2.0 * y));
    }
}

#[test]
fn degenerate_params_are_reported() {
    let g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 0\n").unwrap();
    // x0 = x1 = -1 folds the fan onto a line with repeated points.
    let t = TorusParams {
        theta0: std::f64::consts::PI,
        theta1: std::f64::consts::PI,
        scale: 1.0,
    };
    match draw_graph(&g, ParamSource::Explicit(t)) {
        Err(e @ Error::Verification { .. }) => assert_eq!(e.exit_code(), 3),
        other => panic!("expected a verification failure, got {other:?}"),
    }
}

#[test]
fn tstar_sizes() {
    assert_eq!(embed_tstar(1).unwrap().placement.len(), 10);
    let t = embed_tstar(6).unwrap();
    assert_eq!(certify_injective(&t.placement), Certificate::Injective);
    let d = draw_tstar(6, ParamSource::Seed(0)).unwrap();
    let used: BTreeSet<u8> = d.drawing.edges.iter().map(|e| e.class).collect();
    assert!(used.len() <= 3 && d.report.pass);
}
