//! Built-in property suite run by the `selftest` command.

use std::time::{Duration, Instant};

use crate::bipoly::PolyError;
use crate::embedding::{
    certify_injective, edge_shape_violations, embed_face_tree, embed_tstar, psi_closed_form,
    rhombus_at, rhombus_child, rhombus_root, Certificate, RhombusState,
};
use crate::graph::Graph;
use crate::hstar::{
    is_proper, proper_encoding, qr_decode, qr_encode, ty, Address, Corner, CornerRef, Label,
};
use crate::oracle::{
    enumerate_addresses, graph_from_mask, has_k4_or_k23_minor, random_graph, random_outerplanar,
    GenSpec,
};
use crate::outerplanar::{build_delta_tree, face_tree, is_outerplanar, pluck_check};
use crate::pipeline::{draw_graph, ParamSource, MAX_TSTAR_DEPTH};
use crate::realize::{emit_json, parse_drawing_json};
use crate::rng::SplitMix64;

pub const MAX_SWEEP_VERTICES: usize = 7;

type Check<'a> = (&'static str, Box<dyn Fn() -> Result<(), String> + 'a>);

/// One step down the rhombus tree.
pub type Stepper = fn(&RhombusState, Label) -> Result<RhombusState, PolyError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestConfig {
    /// Exhaustive recognition sweep covers every graph on up to this many
    /// vertices.
    pub max_n: usize,
    /// Address depth for encoding, closed-form and T* checks.
    pub depth: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_n: 6,
            depth: 8,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub result: Result<(), String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.result.is_ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| o.result.is_err())
    }
}

/// A deliberately wrong stepper whose right turns skip the parity flip.
/// Exists so the harness can show the suite catches it.
pub fn mutant_right_turn_parity(s: &RhombusState, l: Label) -> Result<RhombusState, PolyError> {
    let mut next = rhombus_child(s, l)?;
    if l == Label::Right {
        next.ty ^= 1;
    }
    Ok(next)
}

pub fn run(cfg: &SelftestConfig) -> Result<SelftestReport, String> {
    run_with_stepper(cfg, rhombus_child)
}

/// Runs every check, using `step` wherever the suite walks the rhombus tree
/// itself.
pub fn run_with_stepper(cfg: &SelftestConfig, step: Stepper) -> Result<SelftestReport, String> {
    if cfg.max_n > MAX_SWEEP_VERTICES {
        return Err(format!(
            "max-n limited to {MAX_SWEEP_VERTICES}, got {}",
            cfg.max_n
        ));
    }
    if cfg.depth > MAX_TSTAR_DEPTH {
        return Err(format!(
            "depth limited to {MAX_TSTAR_DEPTH}, got {}",
            cfg.depth
        ));
    }
    let checks: [Check; 9] = [
        (
            "recognition-vs-minor-oracle",
            Box::new(|| check_oracle(cfg)),
        ),
        (
            "qr-round-trip",
            Box::new(|| check_round_trip(cfg.depth + 1)),
        ),
        ("ty-recurrence", Box::new(|| check_ty(cfg.depth, step))),
        (
            "closed-form-equivalence",
            Box::new(|| check_closed_form(cfg.depth, step)),
        ),
        (
            "proper-encoding-corners",
            Box::new(|| check_proper(cfg.depth.min(7))),
        ),
        ("tstar-injective", Box::new(|| check_tstar(cfg.depth))),
        (
            "delta-tree-structure",
            Box::new(|| check_delta_trees(cfg.seed)),
        ),
        (
            "three-length-drawings",
            Box::new(|| check_drawings(cfg.seed)),
        ),
        ("drawing-json-round-trip", Box::new(|| check_json(cfg.seed))),
    ];
    let outcomes = checks
        .iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let result = f();
            CheckOutcome {
                name,
                result,
                elapsed: start.elapsed(),
            }
        })
        .collect();
    Ok(SelftestReport { outcomes })
}

fn check_oracle(cfg: &SelftestConfig) -> Result<(), String> {
    let agree = |g: &Graph| -> Result<(), String> {
        let fast = is_outerplanar(g).is_yes();
        let slow = !has_k4_or_k23_minor(g).map_err(|e| e.to_string())?;
        if fast == slow {
            Ok(())
        } else {
            Err(format!(
                "recognition says {fast}, oracle says {slow} on {g:?}"
            ))
        }
    };
    for n in 0..=cfg.max_n {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            agree(&graph_from_mask(n, mask))?;
        }
    }
    let mut rng = SplitMix64::new(cfg.seed);
    for _ in 0..200 {
        let n = rng.range_inclusive(1, 8);
        let p = rng.next_f64();
        agree(&random_graph(n, p, rng.next_u64()))?;
    }
    Ok(())
}

fn addresses(depth: usize) -> Result<Vec<Address>, String> {
    enumerate_addresses(depth).map_err(|e| e.to_string())
}

fn check_round_trip(depth: usize) -> Result<(), String> {
    for a in addresses(depth)? {
        let e = qr_encode(&a);
        if qr_decode(&e) != a {
            return Err(format!("decode(encode({a})) = {}", qr_decode(&e)));
        }
    }
    Ok(())
}

/// Visits every node of depth at most `depth` with the state `step`
/// produces for it.
fn walk(
    depth: usize,
    step: Stepper,
    visit: &mut dyn FnMut(&Address, &RhombusState) -> Result<(), String>,
) -> Result<(), String> {
    let mut stack = vec![(Address::root(), rhombus_root())];
    while let Some((a, s)) = stack.pop() {
        visit(&a, &s)?;
        if a.len() < depth {
            for l in Label::ALL {
                let next = step(&s, l).map_err(|e| e.to_string())?;
                stack.push((a.child(l), next));
            }
        }
    }
    Ok(())
}

fn check_ty(depth: usize, step: Stepper) -> Result<(), String> {
    walk(depth, step, &mut |a, s| {
        if s.ty == ty(a) {
            Ok(())
        } else {
            Err(format!(
                "node [{a}] has parity {} but ty gives {}",
                s.ty,
                ty(a)
            ))
        }
    })
}

fn check_closed_form(depth: usize, step: Stepper) -> Result<(), String> {
    walk(depth, step, &mut |a, s| {
        let closed = psi_closed_form(&qr_encode(a)).map_err(|e| e.to_string())?;
        if closed == s.z0 {
            Ok(())
        } else {
            Err(format!(
                "node [{a}]: recursive {} but closed form {closed}",
                s.z0
            ))
        }
    })
}

fn check_proper(depth: usize) -> Result<(), String> {
    for a in addresses(depth)? {
        let s = rhombus_at(&a).map_err(|e| e.to_string())?;
        for c in Corner::ALL {
            let e = proper_encoding(&CornerRef::new(a.clone(), c));
            if !is_proper(&e) {
                return Err(format!("corner {c:?} of [{a}] got improper encoding {e}"));
            }
            let want = s.corner(c).map_err(|e| e.to_string())?;
            let got = psi_closed_form(&e).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!(
                    "corner {c:?} of [{a}] is {want} but its encoding gives {got}"
                ));
            }
        }
    }
    Ok(())
}

fn check_tstar(depth: usize) -> Result<(), String> {
    let t = embed_tstar(depth).map_err(|e| e.to_string())?;
    if let Certificate::Collision(u, v) = certify_injective(&t.placement) {
        return Err(format!("vertices {u} and {v} collide"));
    }
    match edge_shape_violations(&t.placement, &t.graph).first() {
        Some((u, v)) => Err(format!("edge ({u}, {v}) has an irregular difference")),
        None => Ok(()),
    }
}

fn check_delta_trees(seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed ^ 1);
    for _ in 0..200 {
        let spec = GenSpec {
            n: rng.range_inclusive(2, 80),
            keep_prob: rng.next_f64(),
            seed: rng.next_u64(),
        };
        let g = random_outerplanar(spec).map_err(|e| e.to_string())?;
        let b = build_delta_tree(&g).map_err(|e| format!("{spec:?}: {e}"))?;
        let t = &b.tree;
        let n = t.graph.vertex_count();
        if !pluck_check(&t.graph) || t.faces.len() != n - 2 || t.graph.edge_count() != 2 * n - 3 {
            return Err(format!("{spec:?}: result is not a delta-tree"));
        }
        if !g.is_subgraph_of(&t.graph) {
            return Err(format!("{spec:?}: original edges lost"));
        }
        let p = embed_face_tree(&face_tree(t)).map_err(|e| format!("{spec:?}: {e}"))?;
        if certify_injective(&p) != Certificate::Injective {
            return Err(format!("{spec:?}: embedding not injective"));
        }
        if !edge_shape_violations(&p, &t.graph).is_empty() {
            return Err(format!("{spec:?}: irregular edge"));
        }
    }
    Ok(())
}

fn check_drawings(seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed ^ 2);
    for _ in 0..40 {
        let spec = GenSpec {
            n: rng.range_inclusive(1, 150),
            keep_prob: 0.5 + rng.next_f64() / 2.0,
            seed: rng.next_u64(),
        };
        let g = random_outerplanar(spec).map_err(|e| e.to_string())?;
        for k in 0..2 {
            let d = draw_graph(&g, ParamSource::Seed(spec.seed.wrapping_add(k)))
                .map_err(|e| format!("{spec:?}: {e}"))?;
            if !d.report.pass || d.report.distinct_class_lengths > 3 {
                return Err(format!("{spec:?}: drawing report {:?}", d.report));
            }
        }
    }
    Ok(())
}

fn check_json(seed: u64) -> Result<(), String> {
    let g = random_outerplanar(GenSpec {
        n: 30,
        keep_prob: 0.8,
        seed,
    })
    .map_err(|e| e.to_string())?;
    let d = draw_graph(&g, ParamSource::Seed(seed)).map_err(|e| e.to_string())?;
    let text = emit_json(&d.drawing, &d.placement);
    let (drawing, placement) = parse_drawing_json(&text).map_err(|e| e.to_string())?;
    if drawing != d.drawing || placement != d.placement {
        return Err("parsed drawing differs from the emitted one".into());
    }
    Ok(())
}
