//! Knot circles traced from a crushtacean.
//!
//! Every painted edge has two side-arcs, one along each incident face. At an
//! endpoint `v` the side-arc sits in a corner between the painted edge and an
//! unpainted edge `a`; the knot strand leaves along `a` and, at the far end
//! `w` of `a`, continues on the side-arc of `w`'s painted edge that is
//! adjacent to `a`. Knot circles are the cycles of this pairing.

use serde::Serialize;

use super::require_crushtacean;
use crate::error::Result;
use crate::graph::{faces, Dart, PaintedGraph, RotationSystem};

/// The strand running alongside a painted edge within one incident face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SideArc {
    pub painted_edge: usize,
    pub face: usize,
}

/// A closed walk alternating side-arcs and unpainted segments:
/// `arcs[i]`, then `segments[i]`, then `arcs[i + 1]`, ...
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotCircle {
    pub arcs: Vec<SideArc>,
    pub segments: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotStructure {
    pub knot_circles: Vec<KnotCircle>,
    /// For the i-th painted edge (in [`PaintedGraph::painted`] order), the
    /// knot circles carrying its two side-arcs (equal when it links one
    /// knot circle twice).
    pub crossing_links: Vec<[usize; 2]>,
}

impl KnotStructure {
    pub fn knot_count(&self) -> usize {
        self.knot_circles.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossing_links.len()
    }
}

/// Traces the knot circles of the link encoded by a crushtacean.
pub fn knot_circles(g: &PaintedGraph, rot: &RotationSystem) -> Result<KnotStructure> {
    require_crushtacean(g)?;
    let fs = faces(g, rot)?;
    let painted = g.painted();

    // side-arc 2k + s runs along dart 2p + s of the k-th painted edge p
    let arc_count = 2 * painted.len();
    // ends[arc] = [(vertex, unpainted edge) at the head, ... at the tail]
    let mut ends = vec![[(0usize, 0usize); 2]; arc_count];
    // owner[2 * v + j]: arc owning the end at v beside its j-th unpainted edge
    let mut owner = vec![usize::MAX; 2 * g.vertex_count()];
    let slot_of = |v: usize, a: usize| -> usize {
        let mut j = 0;
        for &(_, e) in g.neighbors(v) {
            if !g.is_painted(e) {
                if e == a {
                    return 2 * v + j;
                }
                j += 1;
            }
        }
        unreachable!("edge {a} is not an unpainted edge at {v}")
    };
    for (k, &p) in painted.iter().enumerate() {
        for s in 0..2 {
            let d = Dart(2 * p + s);
            let (u, v) = (d.tail(g), d.head(g));
            let head_edge = rot.successor(v, p);
            let tail_edge = rot.predecessor(u, p);
            let arc = 2 * k + s;
            ends[arc] = [(v, head_edge), (u, tail_edge)];
            owner[slot_of(v, head_edge)] = arc;
            owner[slot_of(u, tail_edge)] = arc;
        }
    }

    let mut circle_of = vec![usize::MAX; arc_count];
    let mut knot_circles = Vec::new();
    for start in 0..arc_count {
        if circle_of[start] != usize::MAX {
            continue;
        }
        let id = knot_circles.len();
        let mut arcs = Vec::new();
        let mut segments = Vec::new();
        let mut arc = start;
        // leave through the head end first
        let mut exit = ends[arc][0];
        loop {
            circle_of[arc] = id;
            let p = painted[arc / 2];
            arcs.push(SideArc {
                painted_edge: p,
                face: fs.face_of(Dart(2 * p + arc % 2)),
            });
            let (v, a) = exit;
            segments.push(a);
            let w = g.other_end(a, v);
            let next = owner[slot_of(w, a)];
            // enter `next` at (w, a) and leave through its other end
            exit = if ends[next][0] == (w, a) {
                ends[next][1]
            } else {
                ends[next][0]
            };
            arc = next;
            if arc == start {
                break;
            }
        }
        knot_circles.push(KnotCircle { arcs, segments });
    }

    let crossing_links = (0..painted.len())
        .map(|k| [circle_of[2 * k], circle_of[2 * k + 1]])
        .collect();
    Ok(KnotStructure {
        knot_circles,
        crossing_links,
    })
}
