use vclp::graph::Graph;
use vclp::oracle;
use vclp::reduce::{self, ReducedInstance, TraceStep};
use vclp::{fixtures, VertexId};

fn rule3_fixture() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (3, 4),
        ],
    )
}

fn ids(v: &[u32]) -> Vec<VertexId> {
    v.iter().map(|&i| VertexId(i)).collect()
}

#[test]
fn rule1_on_a_star_takes_the_centre() {
    let g = fixtures::star(4);
    let r = reduce::apply_rule1(&ReducedInstance::new(g, 1))
        .unwrap()
        .unwrap();
    assert!(r.graph.is_empty());
    assert_eq!(r.k, 0);
    assert!(r.trace.contains(&TraceStep::ForcedOnes(ids(&[0]))));
}

#[test]
fn rule2_on_a_five_cycle() {
    let g = fixtures::cycle(5);
    assert_eq!(reduce::find_rule2_set(&g).unwrap(), Some(ids(&[2, 4])));
    let inst = ReducedInstance::new(g.clone(), 3);
    let r = reduce::apply_rule2(&inst, &ids(&[2, 4])).unwrap();
    assert!(r.mu < inst.mu);
    // N(Z) = {v0, v1, v3} is charged and nothing is left
    assert_eq!(r.k, 0);
    assert!(r.graph.is_empty());
    let (vc, cover) = oracle::bf_min_vc(&r.graph).unwrap();
    assert_eq!(vc, 0);
    let lifted = reduce::lift_cover(&r.trace, &r.graph, &cover).unwrap();
    assert!(g.is_vertex_cover(&lifted));
    assert_eq!(lifted.len(), 3);
}

#[test]
fn rule3_fixture_folds_one_vertex() {
    let g = rule3_fixture();
    assert_eq!(reduce::find_rule2_set(&g).unwrap(), None);
    assert_eq!(reduce::find_rule3_set(&g).unwrap(), Some(ids(&[5])));
    let vc = oracle::bf_min_vc(&g).unwrap().0 as i64;
    let inst = ReducedInstance::new(g.clone(), vc);
    let r = reduce::apply_rule3(&inst, &ids(&[5])).unwrap();
    assert!(r.mu <= inst.mu);
    assert!(matches!(
        r.trace.last(),
        Some(TraceStep::StructionR3 { .. })
    ));
    let (vc_r, cover) = oracle::bf_min_vc(&r.graph).unwrap();
    assert_eq!(vc_r as i64 + reduce::trace_charge(&r.trace) as i64, vc);
    let lifted = reduce::lift_cover(&r.trace, &r.graph, &cover).unwrap();
    assert!(g.is_vertex_cover(&lifted));
    assert_eq!(lifted.len() as i64, vc);
}

#[test]
fn exhaustive_reduction_preserves_the_optimum() {
    let mut rng = fixtures::rng(21);
    for i in 0..300 {
        let g = fixtures::gnp(4 + i % 12, 0.3, &mut rng);
        let vc = oracle::bf_min_vc(&g).unwrap().0 as i64;
        let inst = ReducedInstance::new(g.clone(), vc);
        let r = reduce::reduce_exhaustively(&inst).unwrap();
        assert!(r.mu <= inst.mu, "graph #{i}");
        assert_eq!(r.k, vc - reduce::trace_charge(&r.trace) as i64);
        let (vc_r, cover) = oracle::bf_min_vc(&r.graph).unwrap();
        assert_eq!(vc_r as i64, r.k, "graph #{i}");
        let lifted = reduce::lift_cover(&r.trace, &r.graph, &cover).unwrap();
        assert!(
            g.is_vertex_cover(&lifted) && lifted.len() as i64 == vc,
            "graph #{i}"
        );
    }
}

#[test]
fn irreducible_graphs_are_left_alone() {
    for g in [fixtures::petersen(), fixtures::mcgee()] {
        let inst = ReducedInstance::new(g.clone(), 20);
        let r = reduce::reduce_exhaustively(&inst).unwrap();
        assert!(r.trace.is_empty());
        assert_eq!(r.graph.vertex_count(), g.vertex_count());
    }
    // bipartite: the whole graph goes through rule 1
    let r = reduce::reduce_exhaustively(&ReducedInstance::new(fixtures::heawood(), 7)).unwrap();
    assert!(r.graph.is_empty());
    assert_eq!(r.k, 0);
}

#[test]
fn trace_text_round_trip() {
    let g = rule3_fixture();
    let r = reduce::reduce_exhaustively(&ReducedInstance::new(g, 4)).unwrap();
    let text = reduce::trace_to_text(&r.trace);
    assert_eq!(reduce::parse_trace(&text).unwrap(), r.trace);
    let parsed =
        reduce::parse_trace("ONES v1 v2\nZEROS v3\nR2 Z=v4,v5 N=v6\nR3 Z=v7 N=v8,v9 z=v10\n")
            .unwrap();
    assert_eq!(parsed.len(), 4);
    assert_eq!(
        parsed.iter().map(TraceStep::charge).sum::<usize>(),
        2 + 1 + 1
    );
    assert!(reduce::parse_trace("R9 nonsense\n").is_err());
}

#[test]
fn preconditions_are_enforced() {
    // rule 1 applies to a path, so rule 3 must refuse it
    assert!(reduce::find_rule3_set(&fixtures::path(4)).is_err());
    let inst = ReducedInstance::new(fixtures::cycle(5), 3);
    assert!(reduce::apply_rule2(&inst, &ids(&[0, 1])).is_err());
}
