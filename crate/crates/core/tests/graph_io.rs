use vclp::io::{self, Format, ParseError};
use vclp::{fixtures, Graph, VertexId};

#[test]
fn dimacs_round_trip_keeps_structure() {
    let g = fixtures::petersen();
    let text = io::to_dimacs(&g);
    assert!(text.starts_with("p edge 10 15\n"));
    let back = io::parse_edge_list(&text, io::detect_format(&text)).unwrap();
    assert_eq!(back.vertex_count(), 10);
    assert_eq!(back.edge_count(), 15);
    for (u, v) in g.edges() {
        assert!(back.has_edge(u, v));
    }
}

#[test]
fn edge_list_with_comments_and_gaps() {
    let text = "# triangle plus isolated label gap\n1 2\n2 3\n% other comment\n3 1\n7 8\n";
    assert_eq!(io::detect_format(text), Format::EdgeList);
    let g = io::parse_edge_list(text, Format::EdgeList).unwrap();
    assert_eq!(g.vertex_count(), 5);
    assert_eq!(g.edge_count(), 4);
    let seven = g.vertex_by_label(7).unwrap();
    assert_eq!(g.label(seven), Some(7));
    assert_eq!(g.degree(seven), 1);
}

#[test]
fn dimacs_declared_count_adds_isolated_vertices() {
    let g = io::parse_edge_list("c hi\np edge 5 1\ne 1 2\n", Format::Dimacs).unwrap();
    assert_eq!(g.vertex_count(), 5);
    assert_eq!(g.edge_count(), 1);
}

#[test]
fn parse_errors_carry_line_numbers() {
    assert_eq!(
        io::parse_edge_list("1 2\n3 3\n", Format::EdgeList),
        Err(ParseError::SelfLoop { line: 2, label: 3 })
    );
    assert!(matches!(
        io::parse_edge_list("p edge 2 1\ne 1 5\n", Format::Dimacs),
        Err(ParseError::Syntax { line: 2, .. })
    ));
    assert!(io::parse_edge_list("1 x\n", Format::EdgeList).is_err());
    assert!(io::parse_edge_list("0 1\n", Format::EdgeList).is_err());
}

#[test]
fn deletion_and_identification() {
    let g = fixtures::cycle(5);
    let h = g.delete_vertices(&[VertexId(0)]).unwrap();
    assert_eq!(h.vertex_count(), 4);
    assert_eq!(h.edge_count(), 3);
    assert!(!h.contains(VertexId(0)));
    let (m, w) = g.identify(&[VertexId(0), VertexId(2)]).unwrap();
    assert_eq!(m.vertex_count(), 4);
    let mut labels = m.input_labels(w);
    labels.sort();
    assert_eq!(labels.len(), 2);
    assert!(g.delete_vertices(&[VertexId(9)]).is_err());
}

#[test]
fn named_graph_invariants() {
    let cases: [(&str, Graph, usize, usize, Option<usize>); 5] = [
        ("petersen", fixtures::petersen(), 10, 15, Some(5)),
        ("heawood", fixtures::heawood(), 14, 21, Some(6)),
        ("mcgee", fixtures::mcgee(), 24, 36, Some(7)),
        ("cube", fixtures::cube(), 8, 12, Some(4)),
        ("k4", fixtures::complete(4), 4, 6, Some(3)),
    ];
    for (name, g, n, m, girth) in cases {
        assert_eq!(g.vertex_count(), n, "{name}");
        assert_eq!(g.edge_count(), m, "{name}");
        assert_eq!(g.girth(), girth, "{name}");
        assert!(g.is_connected(), "{name}");
    }
    assert!(fixtures::heawood().is_bipartite());
    assert!(!fixtures::petersen().is_bipartite());
    assert_eq!(fixtures::path(4).girth(), None);
}

#[test]
fn complement_and_components() {
    let g = fixtures::disjoint_union(&fixtures::cycle(4), &fixtures::path(3));
    assert_eq!(g.component_sets().len(), 2);
    let c = fixtures::complete(5).complement();
    assert_eq!(c.edge_count(), 0);
    assert_eq!(fixtures::cycle(5).complement().edge_count(), 5);
}
