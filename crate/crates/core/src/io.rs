//! The `painted-graph/1` JSON format.
//!
//! ```json
//! {"format":"painted-graph/1","vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],"painted":[0,5]}
//! ```
//!
//! `rotation` is optional: one list of edge indices per vertex. Reading is
//! lenient (edges in any order or orientation; painted and rotation indices
//! refer to the edge list as written) and the result is canonicalized.
//! Writing is canonical, so equal documents serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PaintedGraph, RotationSystem};

pub const FORMAT_TAG: &str = "painted-graph/1";

/// A graph plus an optional embedding, as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: PaintedGraph,
    pub rotation: Option<RotationSystem>,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    format: String,
    vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    painted: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<Vec<Vec<usize>>>,
}

impl GraphDocument {
    pub fn new(graph: PaintedGraph) -> Self {
        GraphDocument {
            graph,
            rotation: None,
        }
    }

    pub fn with_rotation(graph: PaintedGraph, rotation: RotationSystem) -> Self {
        GraphDocument {
            graph,
            rotation: Some(rotation),
        }
    }

    /// Canonical single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let wire = Wire {
            format: FORMAT_TAG.to_string(),
            vertices: self.graph.vertex_count(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            painted: self.graph.painted().to_vec(),
            rotation: self.rotation.as_ref().map(|r| r.as_lists().to_vec()),
        };
        let mut s = serde_json::to_string(&wire).expect("plain data always serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: Wire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if wire.format != FORMAT_TAG {
            return Err(Error::Parse(format!(
                "expected format {FORMAT_TAG:?}, found {:?}",
                wire.format
            )));
        }
        let edges: Vec<(usize, usize)> = wire.edges.iter().map(|e| (e[0], e[1])).collect();
        let graph = PaintedGraph::from_parts(wire.vertices, &edges, &wire.painted)?;
        let rotation = match wire.rotation {
            None => None,
            Some(lists) => {
                // rotation indices refer to the edge list as written
                let remapped = lists
                    .iter()
                    .map(|seq| {
                        seq.iter()
                            .map(|&i| {
                                let &(a, b) = edges.get(i).ok_or_else(|| {
                                    Error::InvalidRotation(format!(
                                        "edge index {i} out of range for {} edges",
                                        edges.len()
                                    ))
                                })?;
                                Ok(graph.edge_index(a, b).expect("edge was accepted"))
                            })
                            .collect::<Result<Vec<usize>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Some(RotationSystem::new(&graph, remapped)?)
            }
        };
        Ok(GraphDocument { graph, rotation })
    }
}
