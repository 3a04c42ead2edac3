//! Static DOT and SVG renderings: the polygon with a set of diagonals, and
//! the Auslander–Reiten quiver of the category with class markings.
//!
//! Output depends only on the inputs; coordinates are printed with fixed
//! precision so repeated runs are byte-identical.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write;
use std::str::FromStr;

use negcat_core::{Arc, CatParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    Polygon,
    Arquiver,
}

impl FromStr for DiagramKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "polygon" => Ok(DiagramKind::Polygon),
            "arquiver" => Ok(DiagramKind::Arquiver),
            o => Err(format!("unknown diagram kind '{o}' (polygon, arquiver)")),
        }
    }
}

impl DiagramKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagramKind::Polygon => "polygon",
            DiagramKind::Arquiver => "arquiver",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Svg,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dot" => Ok(Format::Dot),
            "svg" => Ok(Format::Svg),
            o => Err(format!("unknown format '{o}' (dot, svg)")),
        }
    }
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Dot => "dot",
            Format::Svg => "svg",
        }
    }
}

const FILLS: [&str; 3] = ["#8fd18f", "#f29a9a", "#c4c4c4"];
const OUTLINE_A: &str = "#c0392b";
const OUTLINE_B: &str = "#2e5eaa";

/// Markings for the AR quiver: fills for `E0`, `E1`, `E2`, outlines for the
/// two hearts.
#[derive(Clone, Debug, Default)]
pub struct Marking {
    pub fills: [Vec<Arc>; 3],
    pub a: Vec<Arc>,
    pub b: Vec<Arc>,
}

impl Marking {
    fn fill(&self, x: Arc) -> Option<&'static str> {
        (0..3)
            .find(|&i| self.fills[i].contains(&x))
            .map(|i| FILLS[i])
    }
}

pub fn polygon(params: &CatParams, arcs: &[Arc], format: Format) -> String {
    match format {
        Format::Dot => polygon_dot(params, arcs),
        Format::Svg => polygon_svg(params, arcs),
    }
}

fn polygon_dot(params: &CatParams, arcs: &[Arc]) -> String {
    let nn = params.polygon_size();
    let mut s = String::from("graph polygon {\n  layout=circo;\n  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];\n");
    for p in 0..nn {
        let _ = writeln!(s, "  {p};");
    }
    for p in 0..nn {
        let _ = writeln!(s, "  {p} -- {} [color=\"#999999\"];", (p + 1) % nn);
    }
    for x in sorted(arcs) {
        let _ = writeln!(
            s,
            "  {} -- {} [color=\"{OUTLINE_B}\", penwidth=2];",
            x.a, x.b
        );
    }
    s.push_str("}\n");
    s
}

fn polygon_svg(params: &CatParams, arcs: &[Arc]) -> String {
    let nn = params.polygon_size();
    let (size, c, r) = (640.0, 320.0, 260.0);
    // corners anticlockwise from the positive x-axis; SVG's y axis points down
    let corner = |p: usize, rad: f64| {
        let t = 2.0 * PI * p as f64 / nn as f64;
        (c + rad * t.cos(), c - rad * t.sin())
    };
    let mut s = svg_open(size, size);
    let pts: Vec<String> = (0..nn)
        .map(|p| {
            let (x, y) = corner(p, r);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        s,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>",
        pts.join(" ")
    );
    for x in sorted(arcs) {
        let ((x1, y1), (x2, y2)) = (corner(x.a, r), corner(x.b, r));
        let _ = writeln!(
            s,
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"{OUTLINE_B}\" stroke-width=\"2\"><title>{x}</title></line>"
        );
    }
    for p in 0..nn {
        let (x, y) = corner(p, r);
        let _ = writeln!(
            s,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.5\" fill=\"#333333\"/>"
        );
        let (lx, ly) = corner(p, r + 18.0);
        let _ = writeln!(
            s,
            "  <text x=\"{lx:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\">{p}</text>",
            ly + 4.0
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Irreducible maps out of `x`: extend one end by `w+1` corners, keeping the
/// diagonal admissible.
pub fn irreducible_targets(params: &CatParams, x: Arc) -> Vec<Arc> {
    let (nn, step) = (params.polygon_size(), params.w() + 1);
    let mut out = Vec::with_capacity(2);
    for (p, q) in [(x.a, x.b + step), (x.a + step, x.b)] {
        let (p, q) = (p % nn, q % nn);
        if p == q {
            continue;
        }
        let y = Arc::new(p.min(q), p.max(q));
        if params.check(y).is_ok() {
            out.push(y);
        }
    }
    out.sort_unstable();
    out
}

/// Mesh position of `x`: column `2a/(w+1) + k`, row `k`, where `k` is the
/// number of `(w+1)`-steps spanned by the diagonal.
fn position(params: &CatParams, x: Arc) -> (f64, usize) {
    let step = params.w() + 1;
    let k = (x.b - x.a + 1) / step;
    (2.0 * x.a as f64 / step as f64 + k as f64, k)
}

pub fn arquiver(params: &CatParams, marking: &Marking, format: Format) -> String {
    match format {
        Format::Dot => arquiver_dot(params, marking),
        Format::Svg => arquiver_svg(params, marking),
    }
}

fn node_id(x: Arc) -> String {
    format!("a{}_{}", x.a, x.b)
}

fn arquiver_dot(params: &CatParams, m: &Marking) -> String {
    let arcs = params.admissible_arcs();
    let mut s = String::from(
        "digraph arquiver {\n  rankdir=LR;\n  node [shape=box, style=rounded, fontsize=10];\n",
    );
    for &x in &arcs {
        let mut attrs = vec![format!("label=\"{x}\"")];
        if let Some(f) = m.fill(x) {
            attrs.push(format!("style=\"rounded,filled\", fillcolor=\"{f}\""));
        }
        match (m.a.contains(&x), m.b.contains(&x)) {
            (true, true) => attrs.push(format!("color=\"{OUTLINE_A}:{OUTLINE_B}\", penwidth=2")),
            (true, false) => attrs.push(format!("color=\"{OUTLINE_A}\", penwidth=2")),
            (false, true) => attrs.push(format!("color=\"{OUTLINE_B}\", penwidth=2")),
            _ => {}
        }
        let _ = writeln!(s, "  {} [{}];", node_id(x), attrs.join(", "));
    }
    for &x in &arcs {
        for y in irreducible_targets(params, x) {
            let _ = writeln!(s, "  {} -> {};", node_id(x), node_id(y));
        }
    }
    s.push_str("}\n");
    s
}

fn arquiver_svg(params: &CatParams, m: &Marking) -> String {
    let arcs = params.admissible_arcs();
    let n = params.n();
    let (dx, dy, pad) = (70.0, 70.0, 50.0);
    let max_col = arcs
        .iter()
        .map(|&x| position(params, x).0)
        .fold(0.0, f64::max);
    let (width, height) = (max_col * dx + 2.0 * pad, (n - 1) as f64 * dy + 2.0 * pad);
    let at = |x: Arc| {
        let (col, row) = position(params, x);
        (pad + col * dx, pad + (n - row) as f64 * dy)
    };
    let mut s = svg_open(width, height);
    s.push_str("  <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#666666\"/></marker></defs>\n");
    for &x in &arcs {
        let (x1, y1) = at(x);
        for y in irreducible_targets(params, x) {
            let (x2, y2) = at(y);
            // arrows crossing the seam of the strip are drawn faintly
            let (stroke, dash) = if x2 > x1 {
                ("#666666", "")
            } else {
                ("#cccccc", " stroke-dasharray=\"4 3\"")
            };
            let (len, ux, uy) = {
                let (vx, vy) = (x2 - x1, y2 - y1);
                let l = (vx * vx + vy * vy).sqrt();
                (l, vx / l, vy / l)
            };
            let shrink = 16.0_f64.min(len / 3.0);
            let _ = writeln!(
                s,
                "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{stroke}\"{dash} marker-end=\"url(#head)\"/>",
                x1 + ux * shrink,
                y1 + uy * shrink,
                x2 - ux * shrink,
                y2 - uy * shrink
            );
        }
    }
    for &x in &arcs {
        let (cx, cy) = at(x);
        let fill = m.fill(x).unwrap_or("#ffffff");
        let _ = writeln!(
            s,
            "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"13\" fill=\"{fill}\" stroke=\"#888888\" stroke-width=\"0.5\"><title>{x}</title></circle>"
        );
        if m.a.contains(&x) {
            let _ = writeln!(
                s,
                "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"13\" fill=\"none\" stroke=\"{OUTLINE_A}\" stroke-width=\"2\"/>"
            );
        }
        if m.b.contains(&x) {
            let _ = writeln!(
                s,
                "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"16\" fill=\"none\" stroke=\"{OUTLINE_B}\" stroke-width=\"2\"/>"
            );
        }
        let _ = writeln!(
            s,
            "  <text x=\"{cx:.2}\" y=\"{:.2}\" font-size=\"7\" text-anchor=\"middle\">{},{}</text>",
            cy + 2.5,
            x.a,
            x.b
        );
    }
    s.push_str("</svg>\n");
    s
}

fn svg_open(w: f64, h: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\" font-family=\"sans-serif\">\n  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
    )
}

fn sorted(arcs: &[Arc]) -> BTreeSet<Arc> {
    arcs.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use negcat_core::orbit::make_params;
    use negcat_core::ArcModel;

    #[test]
    fn irreducible_maps_are_nonzero() {
        for (w, n) in [(2, 3), (6, 5), (3, 2)] {
            let p = make_params(w, n).unwrap();
            let am = ArcModel::new(p).unwrap();
            let mut count = 0;
            for x in p.admissible_arcs() {
                for y in irreducible_targets(&p, x) {
                    assert_eq!(am.hom(x, y), 1, "{x} -> {y}");
                    count += 1;
                }
            }
            // every vertex of Z A_n / F has two arrows out except on the boundary rows
            assert_eq!(count, p.arc_count() * 2 - p.polygon_size());
        }
    }

    #[test]
    fn polygon_shapes() {
        let p = make_params(6, 5).unwrap();
        let arcs = [Arc::new(1, 7), Arc::new(7, 13)];
        let svg = polygon(&p, &arcs, Format::Svg);
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches("<text").count(), 40);
        let dot = polygon(&p, &arcs, Format::Dot);
        assert_eq!(dot.matches(" -- ").count(), 42);
    }

    #[test]
    fn arquiver_counts() {
        let p = make_params(6, 5).unwrap();
        let m = Marking {
            fills: [vec![Arc::new(1, 7)], vec![], vec![Arc::new(21, 27)]],
            ..Marking::default()
        };
        let svg = arquiver(&p, &m, Format::Svg);
        assert_eq!(svg.matches("<title>").count(), 100);
        assert_eq!(svg.matches(FILLS[0]).count(), 1);
        let dot = arquiver(&p, &m, Format::Dot);
        assert_eq!(dot.matches("label=").count(), 100);
    }
}
