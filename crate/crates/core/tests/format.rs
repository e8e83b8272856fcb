use hyperkirchhoff_core::format::{parse_graph, write_graph, GraphDocument};
use hyperkirchhoff_core::{complete, from_signed_graph, Error, HypergraphBuilder};

#[test]
fn k2_document() {
    let g = parse_graph(
        r#"{"vertices": ["v1", "v2"],
            "edges": [{"id": "e1", "incidences": [{"vertex": "v1", "sign": 1}, {"vertex": "v2", "sign": -1}]}]}"#,
    )
    .unwrap();
    assert_eq!(
        (g.vertex_count(), g.edge_count(), g.incidence_count()),
        (2, 1, 2)
    );
}

#[test]
fn signed_shorthand_matches_from_signed_graph() {
    let g = parse_graph(
        r#"{"vertices": ["a", "b", "c"],
            "signed_edges": [{"u": "a", "v": "b", "sign": -1}, {"u": "b", "v": "c", "sign": -1}, {"u": "a", "v": "c", "sign": -1}]}"#,
    )
    .unwrap();
    let h = from_signed_graph(
        &["a", "b", "c"],
        &[("a", "b", -1), ("b", "c", -1), ("a", "c", -1)],
    )
    .unwrap();
    assert_eq!(g, h);
}

#[test]
fn both_edge_sections_are_rejected() {
    let err = parse_graph(r#"{"vertices": ["a"], "edges": [], "signed_edges": []}"#).unwrap_err();
    assert_eq!(err, Error::EdgeSection);
    assert!(err.to_string().contains("exactly one edge section"));
}

#[test]
fn syntax_errors_carry_a_position() {
    match parse_graph("{\n  \"vertices\": [\"a\",\n}") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn validation_violations_are_reported() {
    let err = parse_graph(
        r#"{"vertices": ["a", "a"],
            "edges": [{"id": "e", "incidences": [{"vertex": "z", "sign": 2}]}]}"#,
    )
    .unwrap_err();
    let text = err.to_string();
    assert!(text.contains("`a`"), "{text}");
    assert!(text.contains("`z`"), "{text}");
}

#[test]
fn round_trip_through_json() {
    let g = HypergraphBuilder::new()
        .vertices(["a", "b", "c"])
        .edge("e", [("a", 1), ("b", -1), ("c", 1)])
        .edge("l", [("a", 1), ("a", 1)])
        .build()
        .unwrap();
    assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
}

#[test]
fn completion_serializes_zero_signs() {
    let g = from_signed_graph(&["a", "b", "c"], &[("a", "b", 1)]).unwrap();
    let text = write_graph(complete(&g).unwrap().graph());
    assert!(text.contains("\"sign\": 0"));
    assert!(parse_graph(&text).is_err());
    let back = GraphDocument::from_json(&text)
        .unwrap()
        .into_graph_allowing_zero_signs()
        .unwrap();
    assert_eq!(back.edge_count(), 3);
}
