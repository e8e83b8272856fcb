//! Adjacency completion and its applications.
//!
//! The completion `G'` of a bidirected graph adds one edge with two
//! 0-signed incidences between every pair of distinct non-adjacent vertices.
//! Every `(U;W)` sub-contributor of `G` then appears, with its struck steps
//! removed, inside the activation classes of `G'`; the 0-signs filter out
//! everything that does not exist in `G`.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::activation::activation_class_iter;
use crate::contributor::SubContributor;
use crate::error::{Error, Result};
use crate::hypergraph::{edge_sign, EdgeId, Incidence, OrientedHypergraph, VertexId};
use crate::matrix::{laplacian, vertex_minor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletedGraph {
    base: OrientedHypergraph,
    graph: OrientedHypergraph,
    added: Vec<EdgeId>,
}

impl CompletedGraph {
    pub fn base(&self) -> &OrientedHypergraph {
        &self.base
    }

    /// `G'`. Incidence and edge ids of the base graph are preserved; added
    /// edges and incidences come after them.
    pub fn graph(&self) -> &OrientedHypergraph {
        &self.graph
    }

    pub fn added_edges(&self) -> &[EdgeId] {
        &self.added
    }
}

/// Adds a 0-signed edge for every non-adjacent pair `{a, b}`, `a < b` in
/// vertex order. Loops and parallel edges are left alone.
pub fn complete(g: &OrientedHypergraph) -> Result<CompletedGraph> {
    g.require_bidirected()?;
    let mut edges = g.edge_names().to_vec();
    let mut incidences = g.incidences().to_vec();
    let mut taken: BTreeSet<String> = edges.iter().cloned().collect();
    let mut added = Vec::new();
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            let (va, vb) = (VertexId(a), VertexId(b));
            if g.adjacent(va, vb) {
                continue;
            }
            let stem = format!("{}~{}", g.vertex_name(va), g.vertex_name(vb));
            let mut name = stem.clone();
            let mut k = 1;
            while taken.contains(&name) {
                k += 1;
                name = format!("{stem}#{k}");
            }
            taken.insert(name.clone());
            let e = EdgeId(edges.len());
            edges.push(name);
            incidences.push(Incidence {
                vertex: va,
                edge: e,
                sign: 0,
            });
            incidences.push(Incidence {
                vertex: vb,
                edge: e,
                sign: 0,
            });
            added.push(e);
        }
    }
    let graph = OrientedHypergraph::from_parts(g.vertex_names().to_vec(), edges, incidences);
    Ok(CompletedGraph {
        base: g.clone(),
        graph,
        added,
    })
}

/// Removes the walks out of `us` from a contributor of `G'`.
fn trim(
    steps: &[crate::hypergraph::WeakWalk1],
    us: &[VertexId],
    ws: &[VertexId],
) -> SubContributor {
    let kept = steps
        .iter()
        .map(|s| (!us.contains(&s.tail)).then_some(*s))
        .collect();
    let mut rows = us.to_vec();
    let mut cols = ws.to_vec();
    rows.sort_unstable();
    cols.sort_unstable();
    SubContributor::from_parts_unchecked(kept, rows, cols)
}

/// Trimmed, nonzero members of the `(u;w)`-cuts of every activation class
/// of `G'`. As a set this equals the `(U;W)` sub-contributors of the base
/// graph.
pub fn universal_cut(
    gc: &CompletedGraph,
    us: &[VertexId],
    ws: &[VertexId],
) -> Result<BTreeSet<SubContributor>> {
    if us.len() != ws.len() {
        return Err(Error::SizeMismatch {
            rows: us.len(),
            cols: ws.len(),
        });
    }
    let g = &gc.graph;
    let mut out = BTreeSet::new();
    for class in activation_class_iter(g)? {
        for active in class.vector_cut(us, ws)? {
            let member = class.member(active)?;
            let t = trim(member.steps(), us, ws);
            if t.is_nonzero(g) {
                out.insert(t);
            }
        }
    }
    Ok(out)
}

/// Distinct elements of the single-element trimmed nonzero `(u;w)`-cuts of
/// the classes of `G'`. Their number is the spanning-tree count of the base
/// graph for every choice of `u` and `w`.
pub fn spanning_tree_ideals(
    gc: &CompletedGraph,
    u: VertexId,
    w: VertexId,
) -> Result<BTreeSet<SubContributor>> {
    if !gc.base.is_connected() {
        return Err(Error::Disconnected);
    }
    let g = &gc.graph;
    let mut out = BTreeSet::new();
    for class in activation_class_iter(g)? {
        let cut = class.cut(u, w);
        let mut nonzero = Vec::new();
        for &active in &cut.members {
            let t = trim(class.member(active)?.steps(), &[u], &[w]);
            if t.is_nonzero(g) {
                nonzero.push(t);
                if nonzero.len() > 1 {
                    break;
                }
            }
        }
        if nonzero.len() == 1 {
            out.extend(nonzero);
        }
    }
    Ok(out)
}

/// Brute-force spanning-tree count: edge subsets of size `|V| - 1` that
/// connect every vertex. Signs are ignored; parallel edges are distinct.
pub fn spanning_tree_count_oracle(g: &OrientedHypergraph) -> Result<BigInt> {
    g.require_bidirected()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(BigInt::from(1));
    }
    let ends: Vec<(usize, usize)> = g
        .edges()
        .filter_map(|e| match g.incidences_of(e) {
            [i, j] => {
                let (a, b) = (
                    g.incidence(*i).vertex.index(),
                    g.incidence(*j).vertex.index(),
                );
                (a != b).then_some((a, b))
            }
            _ => None,
        })
        .collect();
    let k = n - 1;
    let mut count = BigInt::from(0);
    let mut pick: Vec<usize> = (0..k).collect();
    if ends.len() < k {
        return Ok(count);
    }
    loop {
        if is_forest(n, pick.iter().map(|&x| ends[x])) {
            count += 1;
        }
        // next k-combination of ends.len()
        let m = ends.len();
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            if pick[i] != i + m - k {
                break;
            }
        }
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

fn is_forest(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Cofactor, brute-force tree count, and single-element ideal count for
/// one `(u, w)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCheck {
    pub u: VertexId,
    pub w: VertexId,
    pub cofactor: BigInt,
    pub oracle: BigInt,
    pub ideals: BigInt,
}

impl TreeCheck {
    pub fn passed(&self) -> bool {
        self.cofactor == self.oracle && self.oracle == self.ideals
    }
}

/// Three-way spanning-tree check on an ordinary (all-positive) graph.
pub fn cofactor_tree_check(g: &OrientedHypergraph, u: VertexId, w: VertexId) -> Result<TreeCheck> {
    g.require_bidirected()?;
    for e in g.edges() {
        if edge_sign(g, e)? != 1 {
            return Err(Error::SignedInput(g.edge_name(e).to_string()));
        }
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let minor = vertex_minor(&laplacian(g), &[u], &[w]);
    let mut cofactor = minor.determinant()?;
    if (u.index() + w.index()) % 2 == 1 {
        cofactor = -cofactor;
    }
    let oracle = spanning_tree_count_oracle(g)?;
    let ideals = BigInt::from(spanning_tree_ideals(&complete(g)?, u, w)?.len());
    Ok(TreeCheck {
        u,
        w,
        cofactor,
        oracle,
        ideals,
    })
}
