//! Straight-line drawings: Tutte barycentric layout, SVG and DOT output.

use std::fmt::Write;

use crushtacean::graph::{faces, PaintedGraph, RotationSystem};
use crushtacean::Result;
use nalgebra::{DMatrix, DVector};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

/// Pins the largest face (the first one on ties) to a regular polygon and
/// puts every other vertex at the average of its neighbours. For 3-connected
/// planar graphs the drawing has no crossings.
pub fn tutte_layout(g: &PaintedGraph, rot: &RotationSystem) -> Result<Vec<[f64; 2]>> {
    let fs = faces(g, rot)?;
    let outer = fs
        .faces()
        .iter()
        .rev()
        .max_by_key(|f| f.len())
        .expect("a connected graph has a face")
        .vertices(g);
    let n = g.vertex_count();
    let mut pos = vec![[0.0; 2]; n];
    let mut pinned = vec![false; n];
    let k = outer.len() as f64;
    for (i, &v) in outer.iter().enumerate() {
        let t = std::f64::consts::TAU * i as f64 / k;
        pos[v] = [t.cos(), t.sin()];
        pinned[v] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&v| !pinned[v]).collect();
    if !free.is_empty() {
        let mut slot = vec![usize::MAX; n];
        for (i, &v) in free.iter().enumerate() {
            slot[v] = i;
        }
        let m = free.len();
        let mut a = DMatrix::<f64>::zeros(m, m);
        let mut bx = DVector::<f64>::zeros(m);
        let mut by = DVector::<f64>::zeros(m);
        for (i, &v) in free.iter().enumerate() {
            a[(i, i)] = g.degree(v) as f64;
            for &(w, _) in g.neighbors(v) {
                if pinned[w] {
                    bx[i] += pos[w][0];
                    by[i] += pos[w][1];
                } else {
                    a[(i, slot[w])] -= 1.0;
                }
            }
        }
        let lu = a.lu();
        let x = lu.solve(&bx).expect("Laplacian of a connected graph is invertible");
        let y = lu.solve(&by).expect("Laplacian of a connected graph is invertible");
        for (i, &v) in free.iter().enumerate() {
            pos[v] = [x[i], y[i]];
        }
    }
    Ok(pos)
}

fn to_canvas(p: [f64; 2]) -> (f64, f64) {
    let r = SIZE / 2.0 - MARGIN;
    (SIZE / 2.0 + r * p[0], SIZE / 2.0 - r * p[1])
}

pub fn to_svg(g: &PaintedGraph, layout: &[[f64; 2]]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    s.push_str(
        "<style>\n\
         line { stroke: #444; stroke-width: 2; }\n\
         line.painted { stroke: #2a9d3f; stroke-width: 5; }\n\
         circle { fill: #111; }\n\
         </style>\n",
    );
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (x1, y1) = to_canvas(layout[u]);
        let (x2, y2) = to_canvas(layout[v]);
        let class = if g.is_painted(e) { "painted" } else { "plain" };
        let _ = writeln!(
            s,
            r#"<line class="{class}" data-edge="{e}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#
        );
    }
    for (v, &p) in layout.iter().enumerate() {
        let (x, y) = to_canvas(p);
        let _ = writeln!(s, r#"<circle data-vertex="{v}" cx="{x:.3}" cy="{y:.3}" r="4"/>"#);
    }
    s.push_str("</svg>\n");
    s
}

pub fn to_dot(g: &PaintedGraph) -> String {
    let mut s = String::from("graph crushtacean {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(s, "  {v};");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if g.is_painted(e) {
            let _ = writeln!(s, "  {u} -- {v} [painted=true, color=green, penwidth=3];");
        } else {
            let _ = writeln!(s, "  {u} -- {v} [painted=false];");
        }
    }
    s.push_str("}\n");
    s
}
