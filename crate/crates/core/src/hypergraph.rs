//! Incidence-level model of oriented hypergraphs.
//!
//! An oriented hypergraph is a set of vertices, a set of edges, and a set of
//! incidences. Each incidence attaches one vertex to one edge and carries a
//! sign. A hypergraph whose edges all have exactly two incidences is a
//! bidirected graph, i.e. an orientation of a signed graph.
//!
//! Vertex order is significant: it is the row and column order of every
//! matrix built from the graph and the order used for inversion counts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

macro_rules! index_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub usize);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

index_newtype!(
    /// Position of a vertex in the graph's vertex order.
    VertexId
);
index_newtype!(
    /// Position of an edge in the graph's edge order.
    EdgeId
);
index_newtype!(
    /// Opaque incidence identifier.
    IncidenceId
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Incidence {
    pub vertex: VertexId,
    pub edge: EdgeId,
    /// +1 or -1 for user input; 0 only on incidences added by adjacency
    /// completion.
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedHypergraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    incidences: Vec<Incidence>,
    at_vertex: Vec<Vec<IncidenceId>>,
    in_edge: Vec<Vec<IncidenceId>>,
    vertex_index: BTreeMap<String, VertexId>,
}

impl OrientedHypergraph {
    /// Assembles a graph from already-resolved parts. Callers guarantee that
    /// every incidence points at an existing vertex and edge.
    pub(crate) fn from_parts(
        vertices: Vec<String>,
        edges: Vec<String>,
        incidences: Vec<Incidence>,
    ) -> Self {
        let mut at_vertex = vec![Vec::new(); vertices.len()];
        let mut in_edge = vec![Vec::new(); edges.len()];
        for (k, inc) in incidences.iter().enumerate() {
            at_vertex[inc.vertex.0].push(IncidenceId(k));
            in_edge[inc.edge.0].push(IncidenceId(k));
        }
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(k, name)| (name.clone(), VertexId(k)))
            .collect();
        OrientedHypergraph {
            vertices,
            edges,
            incidences,
            at_vertex,
            in_edge,
            vertex_index,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn incidence_count(&self) -> usize {
        self.incidences.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0]
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edges
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    /// Resolves a list of vertex names, failing on the first unknown one.
    pub fn vertex_ids<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<VertexId>> {
        names
            .iter()
            .map(|n| {
                self.vertex_id(n.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(n.as_ref().to_string()))
            })
            .collect()
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e == name).map(EdgeId)
    }

    pub fn incidence(&self, i: IncidenceId) -> &Incidence {
        &self.incidences[i.0]
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn sign(&self, i: IncidenceId) -> i8 {
        self.incidences[i.0].sign
    }

    pub fn incidences_at(&self, v: VertexId) -> &[IncidenceId] {
        &self.at_vertex[v.0]
    }

    pub fn incidences_of(&self, e: EdgeId) -> &[IncidenceId] {
        &self.in_edge[e.0]
    }

    pub fn is_bidirected(&self) -> bool {
        self.in_edge.iter().all(|incs| incs.len() == 2)
    }

    /// First edge whose size is not 2, reported as an error.
    pub fn require_bidirected(&self) -> Result<()> {
        match self.in_edge.iter().position(|incs| incs.len() != 2) {
            None => Ok(()),
            Some(e) => Err(Error::NotBidirected {
                edge: self.edges[e].clone(),
                size: self.in_edge[e].len(),
            }),
        }
    }

    /// For a 2-incidence edge, the incidence on the other end.
    pub fn opposite(&self, i: IncidenceId) -> Result<IncidenceId> {
        let e = self.incidences[i.0].edge;
        match self.in_edge[e.0].as_slice() {
            [a, b] if *a == i => Ok(*b),
            [a, b] if *b == i => Ok(*a),
            other => Err(Error::NotBidirected {
                edge: self.edges[e.0].clone(),
                size: other.len(),
            }),
        }
    }

    /// Degree in the incidence sense: a loop counts twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.at_vertex[v.0].len()
    }

    /// Whether some edge carries incidences at both `a` and `b`.
    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.at_vertex[a.0].iter().any(|&i| {
            let e = self.incidences[i.0].edge;
            self.in_edge[e.0]
                .iter()
                .any(|&j| j != i && self.incidences[j.0].vertex == b)
        })
    }

    /// Connected component label per vertex (labels are the smallest vertex
    /// index in the component).
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for incs in &self.in_edge {
            if let Some((first, rest)) = incs.split_first() {
                let a = self.incidences[first.0].vertex.0;
                for j in rest {
                    let b = self.incidences[j.0].vertex.0;
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Builds the length-1 weak walk that leaves through `tail` and arrives
    /// through `head`.
    pub fn step(&self, tail: IncidenceId, head: IncidenceId) -> Result<WeakWalk1> {
        let (t, h) = (self.incidences[tail.0], self.incidences[head.0]);
        if t.edge != h.edge {
            return Err(Error::ForeignIncidences {
                tail: tail.0,
                head: head.0,
            });
        }
        Ok(WeakWalk1 {
            tail: t.vertex,
            tail_incidence: tail,
            edge: t.edge,
            head_incidence: head,
            head: h.vertex,
        })
    }

    /// Every length-1 weak walk with tail `v`, ordered by tail incidence and
    /// then head incidence.
    pub fn steps_from(&self, v: VertexId) -> impl Iterator<Item = WeakWalk1> + '_ {
        self.at_vertex[v.0].iter().flat_map(move |&i| {
            let inc = self.incidences[i.0];
            self.in_edge[inc.edge.0].iter().map(move |&j| WeakWalk1 {
                tail: v,
                tail_incidence: i,
                edge: inc.edge,
                head_incidence: j,
                head: self.incidences[j.0].vertex,
            })
        })
    }

    /// Sign of a single step: `-σ(i)σ(j)`.
    pub fn step_sign(&self, w: &WeakWalk1) -> i8 {
        -self.sign(w.tail_incidence) * self.sign(w.head_incidence)
    }
}

/// A directed weak walk of length 1: `(tail, i, e, j, head)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakWalk1 {
    pub tail: VertexId,
    pub tail_incidence: IncidenceId,
    pub edge: EdgeId,
    pub head_incidence: IncidenceId,
    pub head: VertexId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// `(v,i,e,i,v)`
    Backstep,
    /// `(v,i,e,j,v)` with `i != j`
    Loop,
    /// `(v,i,e,j,w)` with `v != w`
    Adjacency,
}

impl WeakWalk1 {
    pub fn kind(&self) -> StepKind {
        if self.tail_incidence == self.head_incidence {
            StepKind::Backstep
        } else if self.tail == self.head {
            StepKind::Loop
        } else {
            StepKind::Adjacency
        }
    }

    pub fn is_backstep(&self) -> bool {
        self.tail_incidence == self.head_incidence
    }
}

/// `sgn(e) = -σ(i)σ(j)` for a 2-incidence edge.
pub fn edge_sign(g: &OrientedHypergraph, e: EdgeId) -> Result<i8> {
    match g.incidences_of(e) {
        [i, j] => Ok(-g.sign(*i) * g.sign(*j)),
        other => Err(Error::NotBidirected {
            edge: g.edge_name(e).to_string(),
            size: other.len(),
        }),
    }
}

/// Sign of a weak walk: `(-1)^k` times the product of its `2k` incidence
/// signs. The empty walk has sign +1.
pub fn weak_walk_sign(g: &OrientedHypergraph, walk: &[WeakWalk1]) -> Result<i8> {
    let mut sign = 1i8;
    for (k, step) in walk.iter().enumerate() {
        // re-derive the step so a forged WeakWalk1 cannot slip through
        if g.step(step.tail_incidence, step.head_incidence)? != *step {
            return Err(Error::ForeignIncidences {
                tail: step.tail_incidence.0,
                head: step.head_incidence.0,
            });
        }
        if let Some(next) = walk.get(k + 1) {
            if next.tail != step.head {
                return Err(Error::NotConcatenable { step: k });
            }
        }
        sign *= g.step_sign(step);
    }
    Ok(sign)
}

/// Builds a bidirected graph from a signed edge list `(u, v, sign)`.
///
/// Orientation: the incidence at `u` gets +1 and the incidence at `v` gets
/// `-sign`, so that `-σ(i)σ(j)` reproduces the requested edge sign. Edges are
/// named `e1, e2, ...` in input order.
pub fn from_signed_graph<S: AsRef<str>>(
    vertices: &[S],
    edges: &[(S, S, i8)],
) -> Result<OrientedHypergraph> {
    let mut b = HypergraphBuilder::new().vertices(vertices.iter().map(|v| v.as_ref()));
    for (k, (u, v, sign)) in edges.iter().enumerate() {
        b = b.edge(
            format!("e{}", k + 1),
            [(u.as_ref(), 1i8), (v.as_ref(), -*sign)],
        );
    }
    b.build()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertex(String),
    DuplicateEdge(String),
    UnknownVertex {
        edge: String,
        vertex: String,
    },
    ZeroSign {
        edge: String,
        vertex: String,
    },
    InvalidSign {
        edge: String,
        vertex: String,
        sign: i64,
    },
    EmptyEdge(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertex(v) => write!(f, "duplicate vertex id `{v}`"),
            Violation::DuplicateEdge(e) => write!(f, "duplicate edge id `{e}`"),
            Violation::UnknownVertex { edge, vertex } => {
                write!(f, "unknown vertex `{vertex}` in edge `{edge}`")
            }
            Violation::ZeroSign { edge, vertex } => write!(
                f,
                "zero sign reserved for completion (edge `{edge}`, vertex `{vertex}`)"
            ),
            Violation::InvalidSign { edge, vertex, sign } => write!(
                f,
                "incidence sign must be +1 or -1, got {sign} (edge `{edge}`, vertex `{vertex}`)"
            ),
            Violation::EmptyEdge(e) => write!(f, "edge `{e}` has no incidences"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks a built graph for user-input violations. Graphs produced by
/// adjacency completion report their 0-signed incidences here.
pub fn validate(g: &OrientedHypergraph) -> ValidationReport {
    let mut violations = Vec::new();
    let mut seen = BTreeSet::new();
    for v in g.vertex_names() {
        if !seen.insert(v.as_str()) {
            violations.push(Violation::DuplicateVertex(v.clone()));
        }
    }
    let mut seen = BTreeSet::new();
    for e in g.edges() {
        let name = g.edge_name(e);
        if !seen.insert(name) {
            violations.push(Violation::DuplicateEdge(name.to_string()));
        }
        if g.incidences_of(e).is_empty() {
            violations.push(Violation::EmptyEdge(name.to_string()));
        }
    }
    for inc in g.incidences() {
        if inc.sign == 0 {
            violations.push(Violation::ZeroSign {
                edge: g.edge_name(inc.edge).to_string(),
                vertex: g.vertex_name(inc.vertex).to_string(),
            });
        }
    }
    ValidationReport { violations }
}

/// Name-based description of a hypergraph prior to validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HypergraphBuilder {
    vertices: Vec<String>,
    edges: Vec<(String, Vec<(String, i64)>)>,
}

impl HypergraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.vertices.push(name.into());
        self
    }

    pub fn vertices<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.vertices.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn edge<I, S, N>(mut self, id: impl Into<String>, incidences: I) -> Self
    where
        I: IntoIterator<Item = (S, N)>,
        S: Into<String>,
        N: Into<i64>,
    {
        let incs = incidences
            .into_iter()
            .map(|(v, s)| (v.into(), s.into()))
            .collect();
        self.edges.push((id.into(), incs));
        self
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut vertex_names = BTreeSet::new();
        for v in &self.vertices {
            if !vertex_names.insert(v.as_str()) {
                violations.push(Violation::DuplicateVertex(v.clone()));
            }
        }
        let mut edge_names = BTreeSet::new();
        for (id, incs) in &self.edges {
            if !edge_names.insert(id.as_str()) {
                violations.push(Violation::DuplicateEdge(id.clone()));
            }
            if incs.is_empty() {
                violations.push(Violation::EmptyEdge(id.clone()));
            }
            for (v, s) in incs {
                if !vertex_names.contains(v.as_str()) {
                    violations.push(Violation::UnknownVertex {
                        edge: id.clone(),
                        vertex: v.clone(),
                    });
                }
                match *s {
                    1 | -1 => {}
                    0 => violations.push(Violation::ZeroSign {
                        edge: id.clone(),
                        vertex: v.clone(),
                    }),
                    other => violations.push(Violation::InvalidSign {
                        edge: id.clone(),
                        vertex: v.clone(),
                        sign: other,
                    }),
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn build(self) -> Result<OrientedHypergraph> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(self.assemble())
    }

    /// Builds without the zero-sign rule; used for completed graphs read back
    /// from disk. Structural violations still fail.
    pub fn build_allowing_zero_signs(self) -> Result<OrientedHypergraph> {
        let mut report = self.validate();
        report
            .violations
            .retain(|v| !matches!(v, Violation::ZeroSign { .. }));
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(self.assemble())
    }

    fn assemble(self) -> OrientedHypergraph {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.as_str(), k))
            .collect();
        let mut incidences = Vec::new();
        for (e, (_, incs)) in self.edges.iter().enumerate() {
            for (v, s) in incs {
                incidences.push(Incidence {
                    vertex: VertexId(index[v.as_str()]),
                    edge: EdgeId(e),
                    sign: *s as i8,
                });
            }
        }
        let edges = self.edges.into_iter().map(|(id, _)| id).collect();
        OrientedHypergraph::from_parts(self.vertices, edges, incidences)
    }
}
