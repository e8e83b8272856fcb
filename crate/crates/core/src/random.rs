//! Random instance generators for verification batteries and benchmarks.
//!
//! All generators draw from a caller-supplied RNG, so a seeded RNG gives
//! reproducible instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hypergraph::{from_signed_graph, HypergraphBuilder, OrientedHypergraph, VertexId};

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("v{k}")).collect()
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> i8 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// Oriented hypergraph with `1..=max_vertices` vertices and
/// `0..=max_edges` edges. Edge sizes are drawn from
/// `min_size..=max_size`; endpoints are drawn with replacement, so loops and
/// repeated incidences at one vertex occur.
pub fn random_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    min_size: usize,
    max_size: usize,
) -> OrientedHypergraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let vs = names(n);
    let mut b = HypergraphBuilder::new().vertices(vs.iter().cloned());
    for e in 0..m {
        let size = rng.gen_range(min_size..=max_size);
        let incs: Vec<(String, i8)> = (0..size)
            .map(|_| (vs[rng.gen_range(0..n)].clone(), random_sign(rng)))
            .collect();
        b = b.edge(format!("e{}", e + 1), incs);
    }
    b.build().expect("generated input is well formed")
}

/// Bidirected multigraph on exactly `n` vertices with `m` random edges
/// (parallel edges allowed, loops with probability `loop_prob`). When
/// `cover` is set every vertex receives at least one edge, so no component
/// is adjacency-free.
pub fn random_bidirected<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    loop_prob: f64,
    cover: bool,
) -> OrientedHypergraph {
    let vs = names(n);
    let mut edges: Vec<(String, String, i8)> = Vec::new();
    let mut touched = vec![false; n];
    let push = |a: usize,
                b: usize,
                s: i8,
                edges: &mut Vec<(String, String, i8)>,
                touched: &mut Vec<bool>| {
        touched[a] = true;
        touched[b] = true;
        edges.push((vs[a].clone(), vs[b].clone(), s));
    };
    for _ in 0..m {
        let a = rng.gen_range(0..n);
        let b = if n == 1 || rng.gen_bool(loop_prob) {
            a
        } else {
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            b
        };
        let s = random_sign(rng);
        push(a, b, s, &mut edges, &mut touched);
    }
    if cover {
        for a in 0..n {
            if !touched[a] {
                let b = if n == 1 {
                    a
                } else {
                    let mut b = rng.gen_range(0..n - 1);
                    if b >= a {
                        b += 1;
                    }
                    b
                };
                let s = random_sign(rng);
                push(a, b, s, &mut edges, &mut touched);
            }
        }
    }
    from_signed_graph(&vs, &edges).expect("generated input is well formed")
}

/// Simple signed graph: each pair is an edge with probability `edge_prob`,
/// negative with probability `neg_prob`.
pub fn random_signed_graph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    edge_prob: f64,
    neg_prob: f64,
) -> OrientedHypergraph {
    let vs = names(n);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(edge_prob) {
                let s = if rng.gen_bool(neg_prob) { -1 } else { 1 };
                edges.push((vs[a].clone(), vs[b].clone(), s));
            }
        }
    }
    from_signed_graph(&vs, &edges).expect("generated input is well formed")
}

/// Balanced signed graph: a random switching of an all-positive graph.
/// Every circle of the result is positive.
pub fn random_balanced_graph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    edge_prob: f64,
) -> OrientedHypergraph {
    let vs = names(n);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(edge_prob) {
                let s = if side[a] == side[b] { 1 } else { -1 };
                edges.push((vs[a].clone(), vs[b].clone(), s));
            }
        }
    }
    from_signed_graph(&vs, &edges).expect("generated input is well formed")
}

/// Two equal-size random vertex sets `U` and `W`.
pub fn random_strikes<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    size: usize,
) -> (Vec<VertexId>, Vec<VertexId>) {
    let all: Vec<VertexId> = (0..n).map(VertexId).collect();
    let mut pick = |k: usize| {
        let mut s: Vec<VertexId> = all.choose_multiple(rng, k).copied().collect();
        s.sort_unstable();
        s
    };
    let u = pick(size);
    let w = pick(size);
    (u, w)
}

/// Every simple signed graph on `n` vertices: each of the `n(n-1)/2` pairs is
/// absent, positive, or negative.
pub fn all_signed_graphs(n: usize) -> impl Iterator<Item = OrientedHypergraph> {
    let vs = names(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut edges = Vec::new();
        for &(a, b) in &pairs {
            match code % 3 {
                1 => edges.push((vs[a].clone(), vs[b].clone(), 1)),
                2 => edges.push((vs[a].clone(), vs[b].clone(), -1)),
                _ => {}
            }
            code /= 3;
        }
        from_signed_graph(&vs, &edges).expect("generated input is well formed")
    })
}

/// Every simple unsigned graph on `n` vertices, as all-positive bidirected
/// graphs.
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = OrientedHypergraph> {
    let vs = names(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(String, String, i8)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &(a, b))| (vs[a].clone(), vs[b].clone(), 1))
            .collect();
        from_signed_graph(&vs, &edges).expect("generated input is well formed")
    })
}
