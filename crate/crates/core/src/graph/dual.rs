use super::{faces, PaintedGraph, RotationSystem};
use crate::error::{Error, Result};

/// The planar dual of an embedded graph.
///
/// Dual vertex `f` is face `f` of [`faces`]. A dual edge is painted exactly
/// when the primal edge it crosses is painted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual {
    pub graph: PaintedGraph,
    /// Embedding of the dual induced by the primal one (each dual vertex lists
    /// its edges in face-walk order).
    pub rotation: RotationSystem,
    /// `dual_edge[e]` is the dual edge crossing primal edge `e`.
    pub dual_edge: Vec<usize>,
}

/// Builds the dual. Fails with [`Error::DualNotSimple`] when the dual would
/// have a loop (primal bridge) or parallel edges (two faces sharing more than
/// one edge), which cannot happen for 3-connected inputs.
pub fn dual(g: &PaintedGraph, rot: &RotationSystem) -> Result<Dual> {
    let fs = faces(g, rot)?;
    let mut pairs = Vec::with_capacity(g.edge_count());
    let mut painted_pairs = Vec::new();
    for e in 0..g.edge_count() {
        let (a, b) = fs.faces_of_edge(e);
        if a == b {
            return Err(Error::DualNotSimple(format!(
                "edge {e} has face {a} on both sides"
            )));
        }
        pairs.push((a.min(b), a.max(b)));
        if g.is_painted(e) {
            painted_pairs.push((a, b));
        }
    }
    let mut sorted = pairs.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DualNotSimple(format!(
            "faces {} and {} share more than one edge",
            w[0].0, w[0].1
        )));
    }
    let graph = PaintedGraph::new(fs.len(), &pairs, &painted_pairs)?;
    let dual_edge: Vec<usize> = pairs
        .iter()
        .map(|&(a, b)| graph.edge_index(a, b).expect("dual edge exists"))
        .collect();
    let order = fs
        .faces()
        .iter()
        .map(|f| f.darts().iter().map(|d| dual_edge[d.edge()]).collect())
        .collect();
    let rotation = RotationSystem::new(&graph, order)?;
    Ok(Dual {
        graph,
        rotation,
        dual_edge,
    })
}
