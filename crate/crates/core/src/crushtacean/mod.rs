//! Crushtacean checks and classification.
//!
//! A crushtacean is a planar, cubic, 3-connected graph on at least four
//! vertices whose painted edges form a perfect matching. It encodes a flat
//! fully augmented link: each painted edge is a crossing circle, and knot
//! circles run alongside the painted edges and along the unpainted ones.

mod cuts;
mod knots;
mod report;

pub use cuts::{all_three_edge_cuts, classify_bprime, three_edge_cuts, BPrimeVerdict, EdgeCut};
pub use knots::{knot_circles, KnotCircle, KnotStructure, SideArc};
pub use report::{
    detect_reflection_multiplicity, has_universal_region, signature_screen, symmetry_report,
    ClassificationReport, ReflectionMultiplicity, SignatureScreen, SymmetryGroup,
};

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{dual, faces, is_connected, is_k_connected, planar_embed, PaintedGraph, RotationSystem};

/// Why a graph is not a crushtacean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reason {
    TooFewVertices,
    NotCubic,
    Disconnected,
    Nonplanar,
    Not3Connected,
    PaintingNotPerfectMatching,
}

impl Reason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reason::TooFewVertices => "too-few-vertices",
            Reason::NotCubic => "not-cubic",
            Reason::Disconnected => "disconnected",
            Reason::Nonplanar => "nonplanar",
            Reason::Not3Connected => "not-3-connected",
            Reason::PaintingNotPerfectMatching => "painting-not-perfect-matching",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Reason {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Outcome of [`validate_crushtacean`].
#[derive(Debug, Clone, Serialize)]
pub struct CrushtaceanValidation {
    pub valid: bool,
    pub reasons: Vec<Reason>,
    /// Vertices not incident to exactly one painted edge.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unmatched_vertices: Vec<usize>,
    /// The embedding found while checking planarity.
    #[serde(skip)]
    pub rotation: Option<RotationSystem>,
}

/// Checks every defining property and lists each one that fails.
pub fn validate_crushtacean(g: &PaintedGraph) -> CrushtaceanValidation {
    let mut reasons = Vec::new();
    if g.vertex_count() < 4 {
        reasons.push(Reason::TooFewVertices);
    }
    if (0..g.vertex_count()).any(|v| g.degree(v) != 3) {
        reasons.push(Reason::NotCubic);
    }
    let mut rotation = None;
    if !is_connected(g) {
        reasons.push(Reason::Disconnected);
    } else {
        match planar_embed(g) {
            Ok(r) => rotation = Some(r),
            Err(_) => reasons.push(Reason::Nonplanar),
        }
        if !is_k_connected(g, 3).unwrap_or(false) {
            reasons.push(Reason::Not3Connected);
        }
    }
    let unmatched_vertices: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.painted_degree(v) != 1)
        .collect();
    if !unmatched_vertices.is_empty() {
        reasons.push(Reason::PaintingNotPerfectMatching);
    }
    CrushtaceanValidation {
        valid: reasons.is_empty(),
        reasons,
        unmatched_vertices,
        rotation,
    }
}

/// Fails with [`Error::NotCrushtacean`] unless `g` is a crushtacean.
pub fn require_crushtacean(g: &PaintedGraph) -> Result<CrushtaceanValidation> {
    let v = validate_crushtacean(g);
    if v.valid {
        Ok(v)
    } else {
        Err(Error::NotCrushtacean(
            v.reasons.iter().map(|r| r.to_string()).collect(),
        ))
    }
}

/// Properties of the nerve (the planar dual).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NerveCheck {
    /// The dual is simple, every dual face is a triangle and two distinct
    /// dual faces share at most one edge.
    pub is_triangulation: bool,
    /// Every dual triangle crosses exactly one painted edge.
    pub one_painted_per_triangle: bool,
}

/// Builds the dual of a crushtacean and checks it is a triangulation in
/// which every triangle crosses exactly one painted edge.
pub fn nerve_check(g: &PaintedGraph, rot: &RotationSystem) -> Result<NerveCheck> {
    require_crushtacean(g)?;
    let d = match dual(g, rot) {
        Ok(d) => d,
        Err(Error::DualNotSimple(_)) => {
            return Ok(NerveCheck {
                is_triangulation: false,
                one_painted_per_triangle: false,
            })
        }
        Err(e) => return Err(e),
    };
    let dual_faces = faces(&d.graph, &d.rotation)?;
    let all_triangles = dual_faces.faces().iter().all(|f| f.len() == 3);
    let mut shared: HashMap<(usize, usize), usize> = HashMap::new();
    for e in 0..d.graph.edge_count() {
        let (a, b) = dual_faces.faces_of_edge(e);
        *shared.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    let share_ok = shared.iter().all(|(&(a, b), &n)| a != b && n <= 1);
    let one_painted = dual_faces.faces().iter().all(|f| {
        f.edges().iter().filter(|&&e| d.graph.is_painted(e)).count() == 1
    });
    Ok(NerveCheck {
        is_triangulation: all_triangles && share_ok,
        one_painted_per_triangle: one_painted,
    })
}
