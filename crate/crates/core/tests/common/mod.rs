//! Brute-force oracles and proptest strategies shared by the integration
//! tests. Nothing here calls the matrix or contributor code under test.

#![allow(dead_code)]

use hyperkirchhoff_core::{
    from_signed_graph, HypergraphBuilder, IncidenceId, OrientedHypergraph, VertexId, WeakWalk1,
};
use proptest::prelude::*;

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let sub: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][c] as i128 * det_cofactor(&sub);
    }
    total
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                go(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Sign of a permutation given as a sequence, by counting inversions.
pub fn sequence_sign(p: &[usize]) -> i128 {
    let mut inv = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn perm_naive(m: &[Vec<i64>]) -> i128 {
    permutations(m.len())
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .map(|(r, &c)| m[r][c] as i128)
                .product::<i128>()
        })
        .sum()
}

pub fn det_leibniz(m: &[Vec<i64>]) -> i128 {
    permutations(m.len())
        .iter()
        .map(|p| {
            sequence_sign(p)
                * p.iter()
                    .enumerate()
                    .map(|(r, &c)| m[r][c] as i128)
                    .product::<i128>()
        })
        .sum()
}

fn incidence_pairs(g: &OrientedHypergraph) -> Vec<Vec<(usize, i64)>> {
    let mut per_edge = vec![Vec::new(); g.edge_count()];
    for inc in g.incidences() {
        per_edge[inc.edge.index()].push((inc.vertex.index(), inc.sign as i64));
    }
    per_edge
}

/// `L(v,w) = Σ σ(i)σ(j)` over ordered incidence pairs sharing an edge.
pub fn laplacian_oracle(g: &OrientedHypergraph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for edge in incidence_pairs(g) {
        for &(v, s) in &edge {
            for &(w, t) in &edge {
                m[v][w] += s * t;
            }
        }
    }
    m
}

/// `A(v,w) = Σ -σ(i)σ(j)` over ordered pairs of distinct incidences
/// sharing an edge.
pub fn adjacency_oracle(g: &OrientedHypergraph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for edge in incidence_pairs(g) {
        for (a, &(v, s)) in edge.iter().enumerate() {
            for (b, &(w, t)) in edge.iter().enumerate() {
                if a != b {
                    m[v][w] -= s * t;
                }
            }
        }
    }
    m
}

pub fn strike(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|(r, _)| !rows.contains(r))
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| !cols.contains(c))
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Every length-1 weak walk out of `v`, built from raw incidence pairs.
pub fn raw_steps(g: &OrientedHypergraph, v: VertexId) -> Vec<WeakWalk1> {
    let mut out = Vec::new();
    for (i, inc) in g.incidences().iter().enumerate() {
        if inc.vertex != v {
            continue;
        }
        for (j, other) in g.incidences().iter().enumerate() {
            if other.edge == inc.edge {
                out.push(WeakWalk1 {
                    tail: v,
                    tail_incidence: IncidenceId(i),
                    edge: inc.edge,
                    head_incidence: IncidenceId(j),
                    head: other.vertex,
                });
            }
        }
    }
    out
}

/// Cartesian product of the walks out of every vertex of `V \ rows`, kept
/// when the heads are distinct and avoid `cols`.
pub fn brute_sub_contributors(
    g: &OrientedHypergraph,
    rows: &[usize],
    cols: &[usize],
) -> Vec<Vec<Option<WeakWalk1>>> {
    let n = g.vertex_count();
    let options: Vec<Vec<WeakWalk1>> = (0..n).map(|v| raw_steps(g, VertexId(v))).collect();
    let mut out = Vec::new();
    let mut current: Vec<Option<WeakWalk1>> = vec![None; n];
    fn go(
        v: usize,
        rows: &[usize],
        cols: &[usize],
        options: &[Vec<WeakWalk1>],
        current: &mut Vec<Option<WeakWalk1>>,
        out: &mut Vec<Vec<Option<WeakWalk1>>>,
    ) {
        if v == options.len() {
            let heads: Vec<usize> = current.iter().flatten().map(|s| s.head.index()).collect();
            let mut seen = heads.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() == heads.len() && heads.iter().all(|h| !cols.contains(h)) {
                out.push(current.clone());
            }
            return;
        }
        if rows.contains(&v) {
            current[v] = None;
            go(v + 1, rows, cols, options, current, out);
            return;
        }
        for s in &options[v] {
            current[v] = Some(*s);
            go(v + 1, rows, cols, options, current, out);
        }
        current[v] = None;
    }
    go(0, rows, cols, &options, &mut current, &mut out);
    out
}

pub fn brute_contributors(g: &OrientedHypergraph) -> Vec<Vec<WeakWalk1>> {
    brute_sub_contributors(g, &[], &[])
        .into_iter()
        .map(|c| c.into_iter().map(Option::unwrap).collect())
        .collect()
}

/// `σ(tail)σ(head)`, the walk's entry in `L`.
pub fn walk_weight(g: &OrientedHypergraph, s: &WeakWalk1) -> i128 {
    g.sign(s.tail_incidence) as i128 * g.sign(s.head_incidence) as i128
}

/// Inversion sign of the map from kept rows to kept columns, both read in
/// vertex order.
pub fn row_col_sign(steps: &[Option<WeakWalk1>], cols: &[usize]) -> i128 {
    let n = steps.len();
    let kept_cols: Vec<usize> = (0..n).filter(|c| !cols.contains(c)).collect();
    let seq: Vec<usize> = steps
        .iter()
        .flatten()
        .map(|s| kept_cols.iter().position(|&c| c == s.head.index()).unwrap())
        .collect();
    sequence_sign(&seq)
}

pub fn names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("v{k}")).collect()
}

fn sign_of(b: bool) -> i8 {
    if b {
        1
    } else {
        -1
    }
}

/// Oriented hypergraph with edges of size `1..=max_size`.
pub fn arb_hypergraph(
    max_n: usize,
    max_m: usize,
    max_size: usize,
) -> impl Strategy<Value = OrientedHypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(
            prop::collection::vec((0..n, any::<bool>()), 1..=max_size),
            0..=max_m,
        )
        .prop_map(move |edges| {
            let vs = names(n);
            let mut b = HypergraphBuilder::new().vertices(vs.iter().cloned());
            for (k, e) in edges.into_iter().enumerate() {
                let incs: Vec<(String, i8)> = e
                    .into_iter()
                    .map(|(v, s)| (vs[v].clone(), sign_of(s)))
                    .collect();
                b = b.edge(format!("e{}", k + 1), incs);
            }
            b.build().unwrap()
        })
    })
}

/// Bidirected multigraph on `min_n..=max_n` vertices. With `cover`, every
/// vertex gets at least one edge.
pub fn arb_bidirected(
    min_n: usize,
    max_n: usize,
    max_m: usize,
    loops: bool,
    cover: bool,
) -> impl Strategy<Value = OrientedHypergraph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, any::<bool>()), 0..=max_m).prop_map(move |raw| {
            let vs = names(n);
            let mut edges: Vec<(usize, usize, i8)> = raw
                .into_iter()
                .filter(|&(a, b, _)| loops || a != b || n == 1)
                .map(|(a, b, s)| (a, b, sign_of(s)))
                .collect();
            if cover {
                for v in 0..n {
                    if !edges.iter().any(|&(a, b, _)| a == v || b == v) {
                        edges.push((v, (v + 1) % n, 1));
                    }
                }
            }
            let named: Vec<(String, String, i8)> = edges
                .into_iter()
                .map(|(a, b, s)| (vs[a].clone(), vs[b].clone(), s))
                .collect();
            from_signed_graph(&vs, &named).unwrap()
        })
    })
}

/// Connected simple signed graph: a random spanning path order plus extra
/// chords.
pub fn arb_connected_simple(
    min_n: usize,
    max_n: usize,
) -> impl Strategy<Value = OrientedHypergraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), pairs),
        )
            .prop_map(|(n, order, chords)| {
                let vs = names(n);
                let mut present = vec![vec![false; n]; n];
                for w in order.windows(2) {
                    present[w[0]][w[1]] = true;
                    present[w[1]][w[0]] = true;
                }
                let mut k = 0;
                let mut edges = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        if present[a][b] || chords[k] {
                            edges.push((vs[a].clone(), vs[b].clone(), 1i8));
                        }
                        k += 1;
                    }
                }
                from_signed_graph(&vs, &edges).unwrap()
            })
    })
}

/// Equal-size struck row and column sets.
pub fn arb_strikes(n: usize, size: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    let pick = move || prop::sample::subsequence((0..n).collect::<Vec<_>>(), size.min(n));
    (pick(), pick())
}
