//! DOT output. Family graphs get a fixed concentric layout — outer rail,
//! inner rail, hub at the center — with their structured vertex names;
//! arbitrary graphs fall back to unpositioned nodes.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt::Write;

use hamex::constructions::{FamilyGraph, FamilyKind};
use hamex::GraphJson;

const OUTER_RADIUS: f64 = 2.2;
const INNER_RADIUS: f64 = 1.2;
const TINY_RADIUS: f64 = 1.5;

fn circle(k: usize, of: usize, radius: f64) -> (f64, f64) {
    let angle = TAU * k as f64 / of as f64 - FRAC_PI_2;
    (radius * angle.cos(), -radius * angle.sin())
}

fn positions(fam: &FamilyGraph) -> Vec<(f64, f64)> {
    let lab = fam.labeling();
    match lab.kind() {
        FamilyKind::EvenLadder | FamilyKind::OddLadder => {
            let p = lab.half();
            let mut pos = Vec::with_capacity(fam.n());
            for i in 0..p {
                pos.push(circle(i, p, OUTER_RADIUS)); // a_{i+1}
            }
            for i in 0..p {
                pos.push(circle(i, p, INNER_RADIUS)); // b_{i+1}
            }
            if lab.hub().is_some() {
                pos.push((0.0, 0.0));
            }
            pos
        }
        _ => (0..fam.n()).map(|k| circle(k, fam.n(), TINY_RADIUS)).collect(),
    }
}

pub fn family_dot(fam: &FamilyGraph) -> String {
    let lab = fam.labeling();
    let mut s = String::new();
    let _ = writeln!(s, "graph hamex_{} {{", fam.n());
    s.push_str("  layout=neato;\n");
    s.push_str("  node [shape=circle, fontsize=10, width=0.35, fixedsize=true];\n");
    for (v, &(x, y)) in positions(fam).iter().enumerate() {
        let _ = writeln!(s, "  {} [pos=\"{x:.3},{y:.3}!\"];", lab.vertex_name(v));
    }
    for &(u, v) in fam.edges() {
        let _ = writeln!(s, "  {} -- {};", lab.vertex_name(u), lab.vertex_name(v));
    }
    s.push('}');
    s
}

pub fn plain_dot(wire: &GraphJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph g{} {{", wire.n);
    s.push_str("  node [shape=circle, fontsize=10];\n");
    for v in 0..wire.n {
        let _ = writeln!(s, "  v{v};");
    }
    for e in &wire.edges {
        let _ = writeln!(s, "  v{} -- v{};", e[0], e[1]);
    }
    s.push('}');
    s
}
