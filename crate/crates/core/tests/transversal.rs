use vclp::oracle;
use vclp::transversal::{self, DeletionKind, KernelStatus, TransversalError, XYKind};
use vclp::{fixtures, Graph, VertexId};

#[test]
fn encoding_shape() {
    let g = fixtures::cycle(5);
    let enc = transversal::build_xy(&g, XYKind::OCT);
    assert_eq!(enc.h.vertex_count(), 10);
    assert_eq!(enc.h.edge_count(), 5 + 5 + 5);
    assert_eq!(enc.original(VertexId(7)), (VertexId(2), 2));
    // one side is the complement for split deletion
    let enc = transversal::build_xy(&g, XYKind::SVD);
    assert_eq!(enc.h.edge_count(), 5 + 5 + 5);
    assert_eq!(enc.map_v2[&VertexId(3)], VertexId(8));
}

#[test]
fn odd_cycle_transversal_examples() {
    assert_eq!(
        transversal::solve_xy_deletion(&fixtures::cycle(5), 0, XYKind::OCT).unwrap(),
        None
    );
    let s = transversal::solve_xy_deletion(&fixtures::cycle(5), 1, XYKind::OCT)
        .unwrap()
        .unwrap();
    assert_eq!(s.len(), 1);
    let p = fixtures::petersen();
    let m = oracle::bf_min_oct(&p).unwrap().0 as i64;
    let s = transversal::solve_xy_deletion(&p, m, XYKind::OCT)
        .unwrap()
        .unwrap();
    assert!(p.delete_vertices(&s).unwrap().is_bipartite());
    assert!(transversal::solve_xy_deletion(&p, m - 1, XYKind::OCT)
        .unwrap()
        .is_none());
}

#[test]
fn split_deletion_examples() {
    // C4 is not split, C5 minus a vertex is the split graph P4, K5 is already split
    assert_eq!(
        transversal::solve_xy_deletion(&fixtures::complete(5), 0, XYKind::SVD).unwrap(),
        Some(vec![])
    );
    assert!(
        transversal::solve_xy_deletion(&fixtures::cycle(4), 0, XYKind::SVD)
            .unwrap()
            .is_none()
    );
    assert_eq!(oracle::bf_min_svd(&fixtures::cycle(5)).unwrap().0, 1);
    let s = transversal::solve_xy_deletion(&fixtures::cycle(5), 1, XYKind::SVD)
        .unwrap()
        .unwrap();
    assert!(oracle::bf_is_split_after(&fixtures::cycle(5), &s));
}

#[test]
fn konig_certificates() {
    let cert = transversal::verify_konig(&fixtures::cube())
        .unwrap()
        .unwrap();
    assert!(cert.verify(&fixtures::cube()));
    assert_eq!(cert.matching.len(), 4);
    assert!(transversal::verify_konig(&fixtures::cycle(5))
        .unwrap()
        .is_none());
    let mut rng = fixtures::rng(51);
    for _ in 0..100 {
        let g = fixtures::gnp(8, 0.3, &mut rng);
        assert_eq!(
            transversal::verify_konig(&g).unwrap().is_some(),
            oracle::bf_is_konig(&g).unwrap()
        );
    }
}

#[test]
fn cover_with_deletion_set() {
    let p = fixtures::petersen();
    let (_, oct) = oracle::bf_min_oct(&p).unwrap();
    assert!(transversal::vc_param_budget(&p, &oct, 5, DeletionKind::Oct)
        .unwrap()
        .is_none());
    let c = transversal::vc_param_budget(&p, &oct, 6, DeletionKind::Oct)
        .unwrap()
        .unwrap();
    assert!(p.is_vertex_cover(&c) && c.len() == 6);
    assert!(matches!(
        transversal::vc_param_budget(&p, &[], 6, DeletionKind::Oct),
        Err(TransversalError::InvalidDeletionSet(_))
    ));
    let c5 = fixtures::cycle(5);
    let c = transversal::vc_param_budget(&c5, &[VertexId(0)], 3, DeletionKind::Kvd)
        .unwrap()
        .unwrap();
    assert_eq!(c.len(), 3);
}

#[test]
fn kernel_examples() {
    assert_eq!(transversal::ceil_log2(40), 6);
    assert_eq!(transversal::ceil_log2(1), 0);
    assert_eq!(transversal::ceil_log2(8), 3);
    assert!(matches!(
        transversal::kernelize(&fixtures::cycle(5), 3, 0),
        Err(TransversalError::BadConstant)
    ));
    assert_eq!(
        transversal::kernelize(&fixtures::cycle(5), 2, 1)
            .unwrap()
            .status,
        KernelStatus::SolvedNo
    );
    match transversal::kernelize(&fixtures::cycle(5), 3, 1)
        .unwrap()
        .status
    {
        KernelStatus::SolvedYes(c) => assert!(fixtures::cycle(5).is_vertex_cover(&c)),
        other => panic!("expected a solved instance, got {other:?}"),
    }
}

#[test]
fn kernel_of_a_large_cubic_graph() {
    let mut rng = fixtures::rng(61);
    let g: Graph = fixtures::random_cubic(80, &mut rng);
    // with k = 40 the measure is 0 and the instance is solved outright
    assert_eq!(
        transversal::kernelize(&g, 40, 1).unwrap().status,
        KernelStatus::SolvedNo
    );
    let kern = transversal::kernelize(&g, 50, 1).unwrap();
    assert_eq!(kern.status, KernelStatus::Kernel);
    let bound = 2 * kern.k - 2 * transversal::ceil_log2(kern.k);
    assert!((kern.graph.vertex_count() as i64) <= bound);
    assert_eq!(kern.k, 50);
    assert_eq!(kern.graph.vertex_count(), 80);
}
