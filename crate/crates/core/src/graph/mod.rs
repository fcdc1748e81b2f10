//! Painted graphs: the data model, structural checks and connectivity.
//!
//! A [`PaintedGraph`] is a finite simple undirected graph together with a
//! distinguished subset of "painted" edges. Edges are stored as `(u, v)` with
//! `u < v`, sorted lexicographically, so two equal graphs always have the same
//! edge indices and the same serialization.

mod connectivity;
mod dual;
mod embedding;

pub use connectivity::{articulation_points, is_connected, is_k_connected};
pub use dual::{dual, Dual};
pub use embedding::{faces, planar_embed, Dart, Face, FaceSet, RotationSystem};

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph with a set of painted edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaintedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    painted: Vec<usize>,
    // derived from the fields above
    painted_mask: Vec<bool>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl PaintedGraph {
    /// Builds a graph from an edge list and a list of painted edge indices into
    /// that list. The result is canonicalized: endpoints are ordered, edges are
    /// sorted and painted indices are remapped to the sorted order.
    pub fn from_parts(
        vertex_count: usize,
        edges: &[(usize, usize)],
        painted: &[usize],
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen_painted = vec![false; edges.len()];
        for &p in painted {
            if p >= edges.len() {
                return Err(Error::PaintedOutOfRange {
                    index: p,
                    edge_count: edges.len(),
                });
            }
            if seen_painted[p] {
                return Err(Error::DuplicatePainted(p));
            }
            seen_painted[p] = true;
        }

        let mut tagged = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    u: a,
                    v: b,
                    vertex_count,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            tagged.push(((a.min(b), a.max(b)), seen_painted[i]));
        }
        tagged.sort_unstable();
        for w in tagged.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateEdge(w[0].0 .0, w[0].0 .1));
            }
        }

        let edges: Vec<(usize, usize)> = tagged.iter().map(|t| t.0).collect();
        let painted_mask: Vec<bool> = tagged.iter().map(|t| t.1).collect();
        let painted: Vec<usize> = (0..edges.len()).filter(|&i| painted_mask[i]).collect();

        let mut adjacency = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, i));
            adjacency[v].push((u, i));
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            if nbrs.is_empty() {
                return Err(Error::IsolatedVertex(v));
            }
            nbrs.sort_unstable();
        }

        Ok(PaintedGraph {
            vertex_count,
            edges,
            painted,
            painted_mask,
            adjacency,
        })
    }

    /// Builds a graph whose painted edges are given as vertex pairs.
    pub fn new(
        vertex_count: usize,
        edges: &[(usize, usize)],
        painted_pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let g = Self::from_parts(vertex_count, edges, &[])?;
        let mut painted = Vec::with_capacity(painted_pairs.len());
        for &(a, b) in painted_pairs {
            let idx = g.edge_index(a, b).ok_or(Error::PaintedNotAnEdge(a, b))?;
            painted.push(idx);
        }
        g.with_painted(&painted)
    }

    pub fn unpainted(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_parts(vertex_count, edges, &[])
    }

    /// Same graph, different painting (indices refer to this graph's edges).
    pub fn with_painted(&self, painted: &[usize]) -> Result<Self> {
        Self::from_parts(self.vertex_count, &self.edges, painted)
    }

    pub fn without_paint(&self) -> Self {
        let mut g = self.clone();
        g.painted.clear();
        g.painted_mask.iter_mut().for_each(|p| *p = false);
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Sorted painted edge indices.
    pub fn painted(&self) -> &[usize] {
        &self.painted
    }

    pub fn is_painted(&self, e: usize) -> bool {
        self.painted_mask[e]
    }

    /// `(neighbour, edge index)` pairs, sorted by neighbour.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Number of painted edges at `v`.
    pub fn painted_degree(&self, v: usize) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|&&(_, e)| self.painted_mask[e])
            .count()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Image of the graph under the vertex map `v -> perm[v]`, painting carried along.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::InvalidPermutation(format!(
                "relabeling has length {} for {} vertices",
                perm.len(),
                self.vertex_count
            )));
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_parts(self.vertex_count, &edges, &self.painted)
    }
}

/// Basic structural flags of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructReport {
    pub simple: bool,
    pub connected: bool,
    pub cubic: bool,
    pub min_vertices_ok: bool,
}

/// Computes the structural flags; never fails.
pub fn validate_basic(g: &PaintedGraph) -> StructReport {
    StructReport {
        // simplicity is enforced by construction
        simple: true,
        connected: is_connected(g),
        cubic: (0..g.vertex_count()).all(|v| g.degree(v) == 3),
        min_vertices_ok: g.vertex_count() >= 4,
    }
}
