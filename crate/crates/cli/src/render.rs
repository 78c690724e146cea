//! SVG and DOT output for certificates. One panel per drawing; drawn edges thick,
//! undrawn edges thin curves bent toward a face shared by their endpoints.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use clap::ValueEnum;
use uncrossed::embedding::Face;
use uncrossed::{Color, Graph, PlaneDrawing, UncrossedCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Layout {
    /// Highest-degree vertex in the center, its neighbors on a circle.
    RadialWheel,
    /// Black vertices on an inner circle, white vertices on an outer one.
    BipartiteCircular,
    /// Outer face on a circle, other vertices at the barycenter of their neighbors.
    TutteBarycentric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub layout: Layout,
    pub format: Format,
}

const PANEL: f64 = 320.0;
const RADIUS: f64 = 130.0;

type Point = (f64, f64);

fn on_circle(i: usize, k: usize, r: f64) -> Point {
    let a = TAU * i as f64 / k.max(1) as f64;
    (r * a.cos(), r * a.sin())
}

/// Longest face, ties broken by id; the designated outer face if there is one.
fn outer_face(d: &PlaneDrawing, faces: &[Face]) -> usize {
    if let Some(f) = d.outer_face() {
        return f.id;
    }
    faces.iter().max_by_key(|f| (f.walk_length(), std::cmp::Reverse(f.id))).map_or(0, |f| f.id)
}

fn radial(d: &PlaneDrawing) -> Vec<Point> {
    let rot = d.rotation();
    let n = rot.n();
    let hub = (0..n).max_by_key(|&v| (rot.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut pos = vec![(0.0, 0.0); n];
    let rim = rot.neighbors(hub).to_vec();
    let mut placed = vec![false; n];
    placed[hub] = true;
    for (i, &v) in rim.iter().enumerate() {
        pos[v] = on_circle(i, rim.len(), RADIUS);
        placed[v] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !placed[v]).collect();
    for (i, &v) in rest.iter().enumerate() {
        pos[v] = on_circle(2 * i + 1, 2 * rest.len(), RADIUS * 1.15);
    }
    pos
}

fn bipartite(host: &Graph, d: &PlaneDrawing, faces: &[Face]) -> Vec<Point> {
    let n = d.n();
    let order = appearance_order(d, faces);
    let color = |v: usize| host.coloring().map_or(Color::Black, |c| c[v]);
    let blacks: Vec<usize> = order.iter().copied().filter(|&v| color(v) == Color::Black).collect();
    let whites: Vec<usize> = order.iter().copied().filter(|&v| color(v) == Color::White).collect();
    let mut pos = vec![(0.0, 0.0); n];
    for (i, &v) in blacks.iter().enumerate() {
        pos[v] = on_circle(i, blacks.len(), RADIUS * 0.55);
    }
    for (i, &v) in whites.iter().enumerate() {
        pos[v] = on_circle(i, whites.len(), RADIUS);
    }
    pos
}

/// Vertices in order of first appearance on the outer walk, then the rest by id.
fn appearance_order(d: &PlaneDrawing, faces: &[Face]) -> Vec<usize> {
    let n = d.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    if let Some(f) = faces.get(outer_face(d, faces)) {
        for dart in &f.darts {
            if !seen[dart.tail] {
                seen[dart.tail] = true;
                order.push(dart.tail);
            }
        }
    }
    order.extend((0..n).filter(|&v| !seen[v]));
    order
}

fn tutte(d: &PlaneDrawing, faces: &[Face]) -> Vec<Point> {
    let rot = d.rotation();
    let n = rot.n();
    let mut fixed = vec![false; n];
    let mut pos = vec![(0.0, 0.0); n];
    let mut boundary = Vec::new();
    if let Some(f) = faces.get(outer_face(d, faces)) {
        for dart in &f.darts {
            if !fixed[dart.tail] {
                fixed[dart.tail] = true;
                boundary.push(dart.tail);
            }
        }
    }
    for (i, &v) in boundary.iter().enumerate() {
        pos[v] = on_circle(i, boundary.len(), RADIUS);
    }
    for _ in 0..500 {
        for v in 0..n {
            if fixed[v] || rot.degree(v) == 0 {
                continue;
            }
            let k = rot.degree(v) as f64;
            let (sx, sy) = rot.neighbors(v).iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            pos[v] = (sx / k, sy / k);
        }
    }
    pos
}

/// Positions in a math frame (y up) centered at the origin.
pub fn layout(host: &Graph, d: &PlaneDrawing, kind: Layout) -> Vec<Point> {
    let faces = d.faces();
    match kind {
        Layout::RadialWheel => radial(d),
        Layout::BipartiteCircular => bipartite(host, d, &faces),
        Layout::TutteBarycentric => tutte(d, &faces),
    }
}

/// Control point for an undrawn edge: centroid of the first face holding both ends.
fn control_point(faces: &[Face], pos: &[Point], u: usize, v: usize) -> Point {
    let mid = ((pos[u].0 + pos[v].0) / 2.0, (pos[u].1 + pos[v].1) / 2.0);
    let Some(f) = faces.iter().find(|f| f.contains(u) && f.contains(v)) else {
        return mid;
    };
    let k = f.vertices.len() as f64;
    let (sx, sy) = f.vertices.iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
    let c = (sx / k, sy / k);
    // A chord of a convex face bends through its interior; a chord through the
    // face centroid itself would be straight, so pull halfway from the midpoint.
    ((mid.0 + c.0) / 2.0, (mid.1 + c.1) / 2.0)
}

fn undrawn(host: &Graph, d: &PlaneDrawing) -> Vec<(usize, usize)> {
    let drawn = d.drawn_pairs();
    host.edges().iter().copied().filter(|e| drawn.binary_search(e).is_err()).collect()
}

fn svg(c: &UncrossedCertificate, kind: Layout) -> String {
    let panels = c.drawings.len().max(1);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = PANEL * panels as f64,
        h = PANEL
    );
    for (k, d) in c.drawings.iter().enumerate() {
        let pos = layout(&c.host, d, kind);
        let faces = d.faces();
        let ox = PANEL * k as f64 + PANEL / 2.0;
        let oy = PANEL / 2.0;
        let at = |p: Point| (ox + p.0, oy - p.1);
        let _ = writeln!(s, r#"<g id="drawing-{k}">"#);
        let _ = writeln!(s, r#"<text x="{:.2}" y="16" font-size="12" text-anchor="middle">drawing {k}</text>"#, ox);
        for (u, v) in undrawn(&c.host, d) {
            let (x1, y1) = at(pos[u]);
            let (x2, y2) = at(pos[v]);
            let (cx, cy) = at(control_point(&faces, &pos, u, v));
            let _ = writeln!(
                s,
                r##"<path class="undrawn" d="M {x1:.2} {y1:.2} Q {cx:.2} {cy:.2} {x2:.2} {y2:.2}" fill="none" stroke="#999" stroke-width="0.7"/>"##
            );
        }
        for (u, v) in d.drawn_pairs() {
            let (x1, y1) = at(pos[u]);
            let (x2, y2) = at(pos[v]);
            let _ = writeln!(
                s,
                r#"<line class="drawn" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="2.5"/>"#
            );
        }
        for (v, &p) in pos.iter().enumerate() {
            let (x, y) = at(p);
            let fill = match c.host.coloring().map(|col| col[v]) {
                Some(Color::White) => "white",
                _ => "black",
            };
            let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{fill}" stroke="black"/>"#);
            let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="9">{v}</text>"#, x + 5.0, y - 5.0);
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}

fn dot(c: &UncrossedCertificate, kind: Layout) -> String {
    let mut s = String::from("graph certificate {\n  node [shape=circle, width=0.2, fixedsize=true, fontsize=8];\n");
    for (k, d) in c.drawings.iter().enumerate() {
        let pos = layout(&c.host, d, kind);
        let _ = writeln!(s, "  subgraph cluster_{k} {{\n    label=\"drawing {k}\";");
        for (v, &(x, y)) in pos.iter().enumerate() {
            let _ = writeln!(s, "    d{k}_{v} [label=\"{v}\", pos=\"{:.2},{:.2}!\"];", x / 72.0 * 2.0, y / 72.0 * 2.0);
        }
        for (u, v) in d.drawn_pairs() {
            let _ = writeln!(s, "    d{k}_{u} -- d{k}_{v} [penwidth=3];");
        }
        for (u, v) in undrawn(&c.host, d) {
            let _ = writeln!(s, "    d{k}_{u} -- d{k}_{v} [penwidth=0.5, color=gray, style=dashed];");
        }
        s.push_str("  }\n");
    }
    s.push_str("}\n");
    s
}

pub fn render(c: &UncrossedCertificate, spec: RenderSpec) -> String {
    match spec.format {
        Format::Svg => svg(c, spec.layout),
        Format::Dot => dot(c, spec.layout),
    }
}
