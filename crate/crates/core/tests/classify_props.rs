use bei::classify::{
    classify, classify_dim2, cor25_check, necessary_conditions, remark27_predicate, Certificate,
    Cor25, Remark27, Status, TreeCondition, DEFAULT_FACET_BOUND,
};
use bei::complex::{clique_complex, free_vertices, glue_at_vertex};
use bei::corpus::{self, graphs_up_to_isomorphism};
use bei::graph::{find_closed_labeling, DEFAULT_LABELING_BOUND};
use bei::resolution::{tor_table, ResolutionOptions};
use bei::Graph;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|p| p.1).map(|p| p.0).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

#[test]
fn necessary_condition_examples() {
    assert!(matches!(necessary_conditions(&Graph::star(3)), Err(Certificate::Claw { .. })));
    assert!(matches!(necessary_conditions(&Graph::cycle(5)), Err(Certificate::ChordlessCycle { .. })));
    assert!(necessary_conditions(&corpus::fig2()).is_ok());
}

#[test]
fn leaf_order_condition_examples() {
    assert!(matches!(cor25_check(&corpus::fig1(), DEFAULT_FACET_BOUND), Cor25::Yes { .. }));
    assert!(matches!(cor25_check(&Graph::complete(6), DEFAULT_FACET_BOUND), Cor25::Yes { .. }));
    assert!(matches!(cor25_check(&corpus::diamond(), DEFAULT_FACET_BOUND), Cor25::No { .. }));
    assert_eq!(classify(&corpus::diamond()).status, Status::Koszul);
    let long = Graph::path(15);
    assert_eq!(cor25_check(&long, DEFAULT_FACET_BOUND), Cor25::Unknown { facets: 14, bound: 12 });
}

#[test]
fn dim2_examples() {
    let v = classify_dim2(&corpus::fig1());
    assert_eq!(v.status, Status::Koszul);
    let tree = v
        .certificates
        .iter()
        .find_map(|c| match c {
            Certificate::IntersectionTree { tree } => Some(tree.clone()),
            _ => None,
        })
        .unwrap();
    let centre = (0..tree.nodes.len()).find(|&k| tree.degree(k) == 3).unwrap();
    assert!(tree.nodes[centre].simplex);

    let v = classify_dim2(&corpus::fig2());
    assert_eq!(v.status, Status::NotKoszul);
    assert!(matches!(
        v.certificates[..],
        [Certificate::TreeCondition { failure: TreeCondition::BlockNotLineGraph { .. } }]
    ));

    assert_eq!(classify_dim2(&Graph::path(5)).status, Status::Koszul);
    assert_eq!(classify_dim2(&Graph::complete(4)).status, Status::OutOfTheoremScope);
}

#[test]
fn classify_examples() {
    let u = corpus::fig1().disjoint_union(&Graph::cycle(4));
    let v = classify(&u);
    assert_eq!(v.status, Status::NotKoszul);
    match &v.certificates[..] {
        [Certificate::Component { vertices, verdict }] => {
            assert_eq!(vertices, &[7, 8, 9, 10]);
            assert!(matches!(verdict.certificates[0], Certificate::ChordlessCycle { .. }));
        }
        other => panic!("{other:?}"),
    }
    assert!(v.verify(&u));
    let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
    assert_eq!(classify(&two).status, Status::Koszul);
    assert_eq!(classify(&Graph::complete(5)).status, Status::Koszul);
}

#[test]
fn tree_condition_failures() {
    // a second pendant edge at vertex 1 of fig1 creates a claw
    let g = corpus::from_facets(7, &[vec![1, 2, 3], vec![1, 4], vec![2, 5], vec![3, 6], vec![1, 7]]);
    assert!(matches!(classify(&g).certificates[..], [Certificate::Claw { .. }]));
    // a diamond meeting three lines, one of them at the non-free vertex 3
    let g = corpus::from_facets(7, &[vec![1, 2, 3], vec![2, 3, 4], vec![1, 5], vec![4, 6], vec![3, 7]]);
    let v = classify(&g);
    assert_eq!(v.status, Status::NotKoszul, "{v:?}");
    assert!(v.verify(&g));
}

#[test]
fn remark27_examples() {
    assert!(matches!(
        remark27_predicate(&corpus::fig1()),
        Remark27::KoszulNotClosed { closed: Some(false), .. }
    ));
    for m in 1..=4 {
        assert!(matches!(
            remark27_predicate(&corpus::line2d(m)),
            Remark27::ClosedLineTree { labeling: Some(_) }
        ));
    }
    // diamond, edge, diamond, edge glued in a path pattern
    let d = corpus::line2d(2);
    let e = Graph::path(2);
    let g = glue_at_vertex(&d, 4, &e, 1).unwrap();
    let g = glue_at_vertex(&g, 5, &d, 1).unwrap();
    let g = glue_at_vertex(&g, 8, &e, 1).unwrap();
    match remark27_predicate(&g) {
        Remark27::ClosedLineTree { labeling: Some(lab) } => {
            assert!(bei::graph::is_closed_with_labeling(&g, &lab).unwrap().is_none())
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(remark27_predicate(&corpus::fig2()), Remark27::NotApplicable { .. }));
}

/// Non-Koszul graphs show an off-diagonal Tor entry within (3, 6) and
/// Koszul graphs show none, for every graph on at most six vertices of
/// dimension at most two, with one exception: the fig2 graph, whose
/// obstruction lies beyond the truncation.
#[test]
fn verdicts_agree_with_truncated_tor_up_to_six_vertices() {
    let opts = ResolutionOptions::new(3, 6);
    let fig2 = corpus::fig2();
    let mut checked = 0;
    let mut exceptions = Vec::new();
    for n in 1..=6 {
        for g in graphs_up_to_isomorphism(n) {
            if clique_complex(&g).dim > 2 {
                continue;
            }
            checked += 1;
            let v = classify(&g);
            assert!(matches!(v.status, Status::Koszul | Status::NotKoszul), "{:?}", g.edges());
            let off = !tor_table(&g, &opts).unwrap().off_diagonal(0).is_empty();
            if off != (v.status == Status::NotKoszul) {
                exceptions.push(g);
            }
        }
    }
    assert_eq!(checked, 166);
    assert_eq!(exceptions.len(), 1);
    assert!(exceptions[0].is_isomorphic(&fig2).unwrap());
}

#[test]
fn gluing_closure_over_corpus_pairs() {
    let entries: Vec<_> = corpus::corpus().into_iter().filter(|e| e.graph.n() <= 7).collect();
    let mut decided = 0;
    for a in &entries {
        let fa = free_vertices(&clique_complex(&a.graph));
        let Some(&v1) = fa.last() else { continue };
        for b in &entries {
            let fb = free_vertices(&clique_complex(&b.graph));
            let Some(&v2) = fb.first() else { continue };
            let g = glue_at_vertex(&a.graph, v1, &b.graph, v2).unwrap();
            let (s1, s2, s) = (classify(&a.graph).status, classify(&b.graph).status, classify(&g).status);
            let all = [s1, s2, s];
            if all.iter().all(|s| matches!(s, Status::Koszul | Status::NotKoszul)) {
                decided += 1;
                assert_eq!(
                    s == Status::Koszul,
                    s1 == Status::Koszul && s2 == Status::Koszul,
                    "{}@{v1} + {}@{v2}",
                    a.name,
                    b.name
                );
            }
        }
    }
    assert!(decided >= 100, "{decided}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn verdicts_carry_verifiable_certificates(g in arb_graph(8)) {
        let v = classify(&g);
        if matches!(v.status, Status::Koszul | Status::NotKoszul) {
            prop_assert!(!v.certificates.is_empty());
        }
        prop_assert!(v.verify(&g));
    }

    #[test]
    fn leaf_order_condition_implies_dim2_koszul(g in arb_graph(8)) {
        prop_assume!(g.is_connected() && clique_complex(&g).dim <= 2);
        if let Cor25::Yes { .. } = cor25_check(&g, DEFAULT_FACET_BOUND) {
            prop_assert_eq!(classify_dim2(&g).status, Status::Koszul);
        }
    }

    #[test]
    fn closed_graphs_are_never_rejected(g in arb_graph(7)) {
        if find_closed_labeling(&g, DEFAULT_LABELING_BOUND).unwrap().is_some() {
            prop_assert_ne!(classify(&g).status, Status::NotKoszul);
        }
    }

    #[test]
    fn necessary_failure_means_not_koszul(g in arb_graph(8)) {
        if necessary_conditions(&g).is_err() {
            prop_assert_eq!(classify(&g).status, Status::NotKoszul);
        }
    }
}
