use bei::complex::{clique_complex, free_vertices, glue_at_vertex};
use bei::corpus::{self, all_labeled_graphs};
use bei::graph::{
    find_claw, find_closed_labeling, is_chordal, is_closed_with_labeling,
    is_perfect_elimination_order, parse_graph, Chordality, DEFAULT_LABELING_BOUND,
};
use bei::{Error, Graph, Labeling};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Brute force: some vertex subset of size >= 4 induces a cycle.
fn has_induced_long_cycle(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u32..1 << n {
        if mask.count_ones() < 4 {
            continue;
        }
        let vs: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let h = g.induced_subgraph(&vs).unwrap();
        if h.is_connected() && h.vertices().all(|v| h.degree(v) == 2) {
            return true;
        }
    }
    false
}

#[test]
fn parse_examples() {
    let g = parse_graph("1 2\n2 3").unwrap();
    assert_eq!((g.n(), g.edge_count()), (3, 2));
    assert!(matches!(parse_graph("1 1"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(parse_graph("1 2\n0 3"), Err(Error::Parse { line: 2, .. })));
    let fig2 = parse_graph(&corpus::lookup("fig2").unwrap().to_graph_file()).unwrap();
    assert_eq!(fig2.n(), 6);
    assert_eq!(
        fig2.edges(),
        &[(1, 2), (1, 4), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5), (4, 6), (5, 6)]
    );
    let with_header = parse_graph("# comment\nn 5\n1 2 # trailing\n").unwrap();
    assert_eq!(with_header.n(), 5);
}

#[test]
fn induced_subgraph_examples() {
    let claw = Graph::star(3);
    assert_eq!(claw.induced_subgraph(&[1, 2]).unwrap().edges(), &[(1, 2)]);
    let c4 = Graph::cycle(4);
    assert_eq!(c4.induced_subgraph(&[1, 2, 3, 4]).unwrap(), c4);
    let fig2 = corpus::fig2();
    let h = fig2.induced_subgraph(&[1, 3, 6]).unwrap();
    assert_eq!((h.n(), h.edge_count()), (3, 0));
    assert!(fig2.induced_subgraph(&[1, 7]).is_err());
}

#[test]
fn chordality_examples() {
    assert!(is_chordal(&Graph::star(3)).is_chordal());
    match is_chordal(&Graph::cycle(4)) {
        Chordality::NotChordal { witness } => assert_eq!(witness.cycle, [1, 2, 3, 4]),
        other => panic!("{other:?}"),
    }
    assert!(is_chordal(&corpus::fig2()).is_chordal());
}

#[test]
fn claw_examples() {
    let w = find_claw(&Graph::star(3)).unwrap();
    assert_eq!((w.center, w.leaves), (1, [2, 3, 4]));
    assert!(find_claw(&Graph::complete(3)).is_none());
    assert!(find_claw(&corpus::fig1()).is_none());
}

#[test]
fn closed_examples() {
    assert!(is_closed_with_labeling(&Graph::path(3), &Labeling::identity(3)).unwrap().is_none());
    for lab in Labeling::all(4) {
        assert!(is_closed_with_labeling(&Graph::star(3), &lab).unwrap().is_some());
    }
    let v = is_closed_with_labeling(&Graph::cycle(4), &Labeling::identity(4)).unwrap().unwrap();
    assert_eq!((v.center, v.j, v.k), (1, 2, 4));
    assert!(find_closed_labeling(&Graph::complete(4), 9).unwrap().is_some());
    assert!(find_closed_labeling(&corpus::fig1(), 9).unwrap().is_none());
    assert_eq!(
        find_closed_labeling(&corpus::line2d(2), 9).unwrap(),
        Some(Labeling::identity(4))
    );
    assert!(matches!(
        find_closed_labeling(&Graph::path(10), DEFAULT_LABELING_BOUND),
        Err(Error::SearchRefused { .. })
    ));
}

#[test]
fn component_examples() {
    let two = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
    assert_eq!(two.connected_components(), [vec![1, 2], vec![3, 4]]);
    assert_eq!(Graph::cycle(5).connected_components(), [vec![1, 2, 3, 4, 5]]);
    assert_eq!(Graph::empty(3).connected_components(), [vec![1], vec![2], vec![3]]);
}

#[test]
fn glue_examples() {
    let k3 = Graph::complete(3);
    let bowtie = glue_at_vertex(&k3, 3, &k3, 1).unwrap();
    assert_eq!((bowtie.n(), bowtie.edge_count()), (5, 6));
    let e = Graph::path(2);
    assert_eq!(glue_at_vertex(&e, 2, &e, 1).unwrap(), Graph::path(3));
    assert_eq!(corpus::fig1().edge_count(), 6);
    match glue_at_vertex(&bowtie, 3, &k3, 1) {
        Err(Error::NotFree { vertex: 3, first, second }) => {
            assert_eq!((first, second), (vec![1, 2, 3], vec![3, 4, 5]))
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn chordality_matches_brute_force_on_all_graphs_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_labeled_graphs(n) {
            assert_eq!(is_chordal(&g).is_chordal(), !has_induced_long_cycle(&g), "{:?}", g.edges());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn chordal_brute_force_seven(g in arb_graph(7)) {
        prop_assert_eq!(is_chordal(&g).is_chordal(), !has_induced_long_cycle(&g));
    }

    #[test]
    fn chordality_certificates(g in arb_graph(8)) {
        match is_chordal(&g) {
            Chordality::Chordal { elimination_order } => {
                prop_assert!(is_perfect_elimination_order(&g, &elimination_order))
            }
            Chordality::NotChordal { witness } => {
                prop_assert!(witness.cycle.len() >= 4);
                prop_assert!(witness.verify(&g));
            }
        }
    }

    #[test]
    fn claw_witness_is_induced(g in arb_graph(8)) {
        if let Some(w) = find_claw(&g) {
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn closed_implies_chordal_and_claw_free(g in arb_graph(7)) {
        if let Some(lab) = find_closed_labeling(&g, DEFAULT_LABELING_BOUND).unwrap() {
            prop_assert!(is_closed_with_labeling(&g, &lab).unwrap().is_none());
            prop_assert!(is_chordal(&g).is_chordal());
            prop_assert!(find_claw(&g).is_none());
        }
    }

    #[test]
    fn induced_on_all_vertices_is_identity(g in arb_graph(8)) {
        let all: Vec<usize> = g.vertices().collect();
        prop_assert_eq!(g.induced_subgraph(&all).unwrap(), g);
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(8)) {
        let comps = g.connected_components();
        let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, g.vertices().collect::<Vec<_>>());
        for c in &comps {
            prop_assert!(g.induced_subgraph(c).unwrap().is_connected());
        }
    }

    #[test]
    fn gluing_is_symmetric_up_to_isomorphism(g1 in arb_graph(5), g2 in arb_graph(5), a in 0usize..8, b in 0usize..8) {
        let f1 = free_vertices(&clique_complex(&g1));
        let f2 = free_vertices(&clique_complex(&g2));
        prop_assume!(!f1.is_empty() && !f2.is_empty());
        let (v1, v2) = (f1[a % f1.len()], f2[b % f2.len()]);
        let ab = glue_at_vertex(&g1, v1, &g2, v2).unwrap();
        let ba = glue_at_vertex(&g2, v2, &g1, v1).unwrap();
        prop_assert_eq!(ab.n(), g1.n() + g2.n() - 1);
        prop_assert_eq!(ab.edge_count(), g1.edge_count() + g2.edge_count());
        prop_assert!(ab.is_isomorphic(&ba).unwrap());
    }

    #[test]
    fn graph_file_round_trip(g in arb_graph(8)) {
        prop_assert_eq!(parse_graph(&g.to_graph_file()).unwrap(), g);
    }
}
