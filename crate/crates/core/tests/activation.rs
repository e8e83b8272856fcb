mod common;

use std::collections::BTreeSet;

use common::*;
use hyperkirchhoff_core::activation::{activation_successors, class_of};
use hyperkirchhoff_core::{
    activation_classes, classify, contributor_sums, det_l_via_maximal_negatives,
    enumerate_contributors, from_signed_graph, pack, unpack, CycleSet, OrientedHypergraph,
    PreContributor, VertexId,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn covered() -> impl Strategy<Value = OrientedHypergraph> {
    arb_bidirected(1, 5, 6, true, true)
}

fn sign_of(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// The classes partition the contributors and each is a boolean lattice
    /// on its cycles.
    #[test]
    fn classes_partition_the_contributors(g in covered()) {
        let classes = activation_classes(&g).unwrap();
        let expected: usize = g.vertices().map(|v| g.degree(v)).product();
        prop_assert_eq!(classes.len(), expected);
        let mut seen = BTreeSet::new();
        for class in &classes {
            prop_assert_eq!(class.member_count(), BigInt::from(1u64) << class.cycle_count());
            for s in class.all_cycles().subsets() {
                let m = class.member(s).unwrap();
                prop_assert_eq!(class.locate(&m), Some(s));
                prop_assert!(seen.insert(m.steps().to_vec()));
            }
        }
        let all: BTreeSet<_> = enumerate_contributors(&g).map(|c| c.steps().to_vec()).collect();
        prop_assert_eq!(seen, all);
    }

    #[test]
    fn class_of_finds_the_containing_class(g in covered()) {
        for c in enumerate_contributors(&g).take(50) {
            let class = class_of(&g, &c).unwrap();
            prop_assert!(class.locate(&c).is_some());
        }
    }

    /// Covering relations found by blind unpacking are exactly the
    /// one-cycle extensions inside the class.
    #[test]
    fn lattice_order_matches_unpacking(g in covered()) {
        for class in activation_classes(&g).unwrap() {
            for s in class.all_cycles().subsets() {
                let m = class.member(s).unwrap();
                let got: BTreeSet<_> = activation_successors(&g, &m)
                    .unwrap()
                    .into_iter()
                    .map(|d| d.steps().to_vec())
                    .collect();
                let want: BTreeSet<_> = (0..class.cycle_count())
                    .filter(|&k| !s.contains(k))
                    .map(|k| class.member(s.with(k)).unwrap().steps().to_vec())
                    .collect();
                prop_assert_eq!(got, want);
                prop_assert_eq!(classify(&g, &m).tc, s.len());
            }
        }
    }

    /// The `(u;w)`-cut is exactly the set of members whose walk out of `u`
    /// ends at `w`, so the cuts over all `w` split the class.
    #[test]
    fn cuts_select_members_by_head(g in covered()) {
        let n = g.vertex_count();
        for class in activation_classes(&g).unwrap() {
            for u in 0..n {
                let mut total = 0;
                for w in 0..n {
                    let (u, w) = (VertexId(u), VertexId(w));
                    let cut = class.cut(u, w);
                    let want: Vec<CycleSet> = class
                        .all_cycles()
                        .subsets()
                        .filter(|&s| class.member(s).unwrap().step(u).head == w)
                        .collect();
                    let mut got = cut.members.clone();
                    got.sort();
                    prop_assert_eq!(&got, &want);
                    total += cut.len();
                }
                prop_assert_eq!(BigInt::from(total), class.member_count());
            }
        }
    }

    #[test]
    fn vector_cuts_intersect_single_cuts(g in covered(), picks in prop::collection::vec((0usize..5, 0usize..5), 1..3)) {
        let n = g.vertex_count();
        let mut us = Vec::new();
        let mut ws = Vec::new();
        for (u, w) in picks {
            if u < n && w < n && !us.contains(&VertexId(u)) {
                us.push(VertexId(u));
                ws.push(VertexId(w));
            }
        }
        for class in activation_classes(&g).unwrap() {
            let want: Vec<CycleSet> = class
                .all_cycles()
                .subsets()
                .filter(|&s| {
                    let m = class.member(s).unwrap();
                    us.iter().zip(&ws).all(|(&u, &w)| m.step(u).head == w)
                })
                .collect();
            prop_assert_eq!(class.vector_cut(&us, &ws).unwrap(), want);
        }
    }

    /// Each class sums to the product over its cycles of `1 - sign`.
    #[test]
    fn class_determinant_terms_factor(g in covered()) {
        let mut total = BigInt::from(0);
        for class in activation_classes(&g).unwrap() {
            let sum: i64 = class
                .all_cycles()
                .subsets()
                .map(|s| sign_of(classify(&g, &class.member(s).unwrap()).pc))
                .sum();
            let product: i64 = class.cycle_signs().iter().map(|&s| 1 - s as i64).product();
            prop_assert_eq!(sum, product);
            prop_assert_eq!(class.is_positive_circle_free(), product != 0);
            total += sum;
        }
        prop_assert_eq!(&total, &BigInt::from(det_cofactor(&laplacian_oracle(&g))));
        prop_assert_eq!(det_l_via_maximal_negatives(&g).unwrap(), total);
    }

    #[test]
    fn pack_and_unpack_are_inverse(g in covered()) {
        for c in enumerate_contributors(&g).take(40) {
            let p = c.as_pre();
            for v in g.vertices() {
                if p.step(v).is_backstep() {
                    let up = unpack(&g, p, v).unwrap();
                    prop_assert!(!up.step(v).is_backstep());
                    prop_assert_eq!(&pack(&g, &up, v).unwrap(), p);
                    prop_assert!(unpack(&g, p, v).is_ok() && pack(&g, p, v).is_err());
                } else {
                    let down = pack(&g, p, v).unwrap();
                    prop_assert!(down.step(v).is_backstep());
                    prop_assert_eq!(&unpack(&g, &down, v).unwrap(), p);
                    prop_assert!(unpack(&g, p, v).is_err());
                }
            }
        }
    }
}

fn pre_contributor_and_pair(
) -> impl Strategy<Value = (OrientedHypergraph, PreContributor, VertexId, VertexId)> {
    covered()
        .prop_flat_map(|g| {
            let n = g.vertex_count();
            let choices: Vec<_> = (0..n)
                .map(|v| 0..raw_steps(&g, VertexId(v)).len())
                .collect();
            (Just(g), choices, 0..n, 0..n)
        })
        .prop_map(|(g, picks, u, v)| {
            let steps = picks
                .iter()
                .enumerate()
                .map(|(k, &i)| raw_steps(&g, VertexId(k))[i])
                .collect();
            let p = PreContributor::new(&g, steps).unwrap();
            (g, p, VertexId(u), VertexId(v))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn packing_laws_on_pre_contributors((g, p, u, v) in pre_contributor_and_pair()) {
        let flip = |p: &PreContributor, x: VertexId| {
            if p.step(x).is_backstep() { unpack(&g, p, x) } else { pack(&g, p, x) }
        };
        let once = flip(&p, u).unwrap();
        prop_assert_eq!(&flip(&once, u).unwrap(), &p);
        if u != v {
            let uv = flip(&flip(&p, u).unwrap(), v).unwrap();
            let vu = flip(&flip(&p, v).unwrap(), u).unwrap();
            prop_assert_eq!(uv, vu);
        }
        for x in g.vertices() {
            if x != u {
                prop_assert_eq!(once.step(x), p.step(x));
            }
        }
    }
}

#[test]
fn balanced_graphs_have_no_negative_classes() {
    let g = from_signed_graph(
        &["v1", "v2", "v3", "v4"],
        &[
            ("v1", "v2", -1),
            ("v2", "v3", -1),
            ("v3", "v4", 1),
            ("v4", "v1", 1),
        ],
    )
    .unwrap();
    assert_eq!(det_l_via_maximal_negatives(&g).unwrap(), BigInt::from(0));
    assert_eq!(contributor_sums(&g).det_l, BigInt::from(0));
}

#[test]
fn negative_triangle_sums_to_four() {
    let g = from_signed_graph(
        &["v1", "v2", "v3"],
        &[("v1", "v2", -1), ("v2", "v3", -1), ("v1", "v3", -1)],
    )
    .unwrap();
    assert_eq!(det_l_via_maximal_negatives(&g).unwrap(), BigInt::from(4));
}

#[test]
fn activation_requires_bidirected_input_without_isolated_vertices() {
    let g = from_signed_graph(&["v1", "v2", "v3"], &[("v1", "v2", 1)]).unwrap();
    assert!(activation_classes(&g).is_err());
}
