//! Graph description files.
//!
//! ```json
//! {
//!   "vertices": ["v1", "v2"],
//!   "edges": [
//!     { "id": "e1", "incidences": [ { "vertex": "v1", "sign": 1 },
//!                                   { "vertex": "v2", "sign": -1 } ] }
//!   ]
//! }
//! ```
//!
//! The signed-graph shorthand replaces `edges` with
//! `"signed_edges": [ { "u": "v1", "v": "v2", "sign": -1 } ]`, expanded by
//! [`from_signed_graph`](crate::hypergraph::from_signed_graph). Exactly one of
//! the two sections must be present. Vertex order in the file is the matrix
//! order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{HypergraphBuilder, OrientedHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<EdgeEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signed_edges: Option<Vec<SignedEdgeEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub id: String,
    pub incidences: Vec<IncidenceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceEntry {
    pub vertex: String,
    pub sign: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedEdgeEntry {
    pub u: String,
    pub v: String,
    pub sign: i64,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn from_graph(g: &OrientedHypergraph) -> Self {
        let edges = g
            .edges()
            .map(|e| EdgeEntry {
                id: g.edge_name(e).to_string(),
                incidences: g
                    .incidences_of(e)
                    .iter()
                    .map(|&i| {
                        let inc = g.incidence(i);
                        IncidenceEntry {
                            vertex: g.vertex_name(inc.vertex).to_string(),
                            sign: inc.sign as i64,
                        }
                    })
                    .collect(),
            })
            .collect();
        GraphDocument {
            vertices: g.vertex_names().to_vec(),
            edges: Some(edges),
            signed_edges: None,
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn into_builder(self) -> Result<HypergraphBuilder> {
        let b = HypergraphBuilder::new().vertices(self.vertices);
        match (self.edges, self.signed_edges) {
            (Some(edges), None) => Ok(edges.into_iter().fold(b, |b, e| {
                b.edge(e.id, e.incidences.into_iter().map(|i| (i.vertex, i.sign)))
            })),
            (None, Some(signed)) => Ok(signed.into_iter().enumerate().fold(b, |b, (k, e)| {
                // same orientation convention as from_signed_graph
                b.edge(format!("e{}", k + 1), [(e.u, 1), (e.v, -e.sign)])
            })),
            _ => Err(Error::EdgeSection),
        }
    }

    /// Validated hypergraph; zero signs are rejected.
    pub fn into_graph(self) -> Result<OrientedHypergraph> {
        self.check_signed_edge_signs()?;
        self.into_builder()?.build()
    }

    /// As [`into_graph`](Self::into_graph) but accepts the 0-signed
    /// incidences written for completed graphs.
    pub fn into_graph_allowing_zero_signs(self) -> Result<OrientedHypergraph> {
        self.into_builder()?.build_allowing_zero_signs()
    }

    fn check_signed_edge_signs(&self) -> Result<()> {
        use crate::hypergraph::{ValidationReport, Violation};
        let bad: Vec<Violation> = self
            .signed_edges
            .iter()
            .flatten()
            .enumerate()
            .filter(|(_, e)| e.sign != 1 && e.sign != -1)
            .map(|(k, e)| Violation::InvalidSign {
                edge: format!("e{}", k + 1),
                vertex: e.v.clone(),
                sign: e.sign,
            })
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(ValidationReport { violations: bad }))
        }
    }
}

/// Parses and validates a graph description.
pub fn parse_graph(text: &str) -> Result<OrientedHypergraph> {
    GraphDocument::from_json(text)?.into_graph()
}

/// Serializes a graph in the `edges` form; 0-signs are written as 0.
pub fn write_graph(g: &OrientedHypergraph) -> String {
    GraphDocument::from_graph(g).to_json_pretty()
}
