use bei::complex::{
    block_decomposition, clique_complex, free_vertices, intersection_tree, is_two_dim_line_graph,
    leaf_order, standard_line_graph_facets, CliqueComplex, LineGraph2d,
};
use bei::corpus::{self, all_labeled_graphs};
use bei::graph::is_chordal;
use bei::{Error, Graph};
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

/// Maximal cliques by brute force over vertex subsets.
fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let cliques: Vec<u32> = (1u32..1 << n)
        .filter(|&m| {
            let vs: Vec<usize> = (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect();
            g.is_clique(&vs)
        })
        .collect();
    let mut out: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
        .map(|&m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

#[test]
fn clique_complex_examples() {
    let k4 = clique_complex(&Graph::complete(4));
    assert_eq!((k4.facets.clone(), k4.dim), (vec![vec![1, 2, 3, 4]], 3));
    let fig1 = clique_complex(&corpus::fig1());
    assert_eq!(fig1.facets, [vec![1, 2, 3], vec![1, 4], vec![2, 5], vec![3, 6]]);
    assert_eq!(fig1.dim, 2);
    let fig2 = clique_complex(&corpus::fig2());
    assert_eq!(fig2.facets, [vec![1, 2, 4], vec![2, 3, 5], vec![2, 4, 5], vec![4, 5, 6]]);
}

#[test]
fn free_vertex_examples() {
    assert_eq!(free_vertices(&clique_complex(&Graph::complete(5))), [1, 2, 3, 4, 5]);
    assert_eq!(free_vertices(&clique_complex(&Graph::path(3))), [1, 3]);
    assert_eq!(free_vertices(&clique_complex(&corpus::fig2())), [1, 3, 6]);
}

#[test]
fn leaf_order_examples() {
    let lo = leaf_order(&clique_complex(&corpus::diamond())).unwrap();
    assert_eq!((lo.order, lo.branch), (vec![0, 1], vec![None, Some(0)]));
    assert!(leaf_order(&clique_complex(&Graph::cycle(4))).is_none());
    let c = clique_complex(&corpus::fig1());
    let lo = leaf_order(&c).unwrap();
    assert_eq!(c.facets[lo.order[0]], [1, 2, 3]);
    assert!(lo.branch[1..].iter().all(|&b| b == Some(0)));
}

#[test]
fn line_graph_examples() {
    assert!(matches!(
        is_two_dim_line_graph(&[vec![1, 2, 3]]).unwrap(),
        LineGraph2d::Yes { length: 1, .. }
    ));
    for g in [corpus::line2d(4), corpus::fig3()] {
        let facets = clique_complex(&g).facets;
        assert!(is_two_dim_line_graph(&facets).unwrap().is_yes());
    }
    let fig2 = clique_complex(&corpus::fig2()).facets;
    match is_two_dim_line_graph(&fig2).unwrap() {
        LineGraph2d::No { reason } => assert!(reason.contains("[2, 4, 5]"), "{reason}"),
        other => panic!("{other:?}"),
    }
    assert!(matches!(is_two_dim_line_graph(&[vec![1, 2]]), Err(Error::NotTriangle(_))));
}

#[test]
fn block_decomposition_examples() {
    let b = block_decomposition(&clique_complex(&corpus::fig1())).unwrap();
    assert_eq!((b.blocks2d.len(), b.lines1d.len()), (1, 3));
    let b = block_decomposition(&clique_complex(&corpus::fig2())).unwrap();
    assert_eq!((b.blocks2d.len(), b.blocks2d[0].len(), b.lines1d.len()), (1, 4, 0));
    let b = block_decomposition(&clique_complex(&Graph::path(4))).unwrap();
    assert_eq!((b.blocks2d.len(), b.lines1d.len()), (0, 1));
    assert!(matches!(
        block_decomposition(&clique_complex(&Graph::complete(4))),
        Err(Error::DimensionTooLarge { dim: 3 })
    ));
}

#[test]
fn intersection_tree_examples() {
    let t = intersection_tree(&block_decomposition(&clique_complex(&corpus::fig1())).unwrap()).unwrap();
    assert_eq!(t.nodes.len(), 4);
    let centre = (0..4).find(|&k| t.degree(k) == 3).unwrap();
    assert!(t.nodes[centre].simplex);
    let t = intersection_tree(&block_decomposition(&clique_complex(&corpus::bowtie())).unwrap()).unwrap();
    assert_eq!((t.nodes.len(), t.edges.len(), t.edges[0].shared.clone()), (2, 1, vec![3]));
    let t = intersection_tree(&block_decomposition(&clique_complex(&corpus::diamond())).unwrap()).unwrap();
    assert_eq!((t.nodes.len(), t.edges.len()), (1, 0));
}

#[test]
fn intersection_tree_reports_every_violation() {
    // three triangles through vertex 1
    let g = corpus::from_facets(7, &[vec![1, 2, 3], vec![1, 4, 5], vec![1, 6, 7]]);
    let f = intersection_tree(&block_decomposition(&clique_complex(&g)).unwrap()).unwrap_err();
    let kinds: Vec<String> = f
        .violations
        .iter()
        .map(|v| serde_json::to_value(v).unwrap()["violation"].as_str().unwrap().to_string())
        .collect();
    assert!(kinds.contains(&"triple_intersection".to_string()), "{kinds:?}");
    assert!(kinds.contains(&"cycle".to_string()), "{kinds:?}");
}

#[test]
fn leaf_order_iff_chordal_on_all_graphs_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_labeled_graphs(n) {
            let c = clique_complex(&g);
            let lo = leaf_order(&c);
            assert_eq!(lo.is_some(), is_chordal(&g).is_chordal(), "{:?}", g.edges());
            if let Some(lo) = lo {
                assert!(lo.verify(&c));
            }
        }
    }
}

#[test]
fn standard_line_graph_free_vertices() {
    assert_eq!(free_vertices(&CliqueComplex::from_facets(standard_line_graph_facets(1))), [1, 2, 3]);
    for m in 2..=8 {
        let c = CliqueComplex::from_facets(standard_line_graph_facets(m));
        assert_eq!(free_vertices(&c), [1, m + 2]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn facets_are_the_maximal_cliques(g in arb_graph(8)) {
        let c = clique_complex(&g);
        prop_assert_eq!(&c.facets, &maximal_cliques(&g));
        for (a, b) in g.edges() {
            prop_assert!(c.facets.iter().any(|f| f.contains(a) && f.contains(b)));
        }
    }

    #[test]
    fn leaf_order_iff_chordal_seven(g in arb_graph(7)) {
        let c = clique_complex(&g);
        let lo = leaf_order(&c);
        prop_assert_eq!(lo.is_some(), is_chordal(&g).is_chordal());
        if let Some(lo) = lo {
            prop_assert!(lo.verify(&c));
        }
    }

    #[test]
    fn free_vertices_lie_in_one_facet(g in arb_graph(8)) {
        let c = clique_complex(&g);
        let free = free_vertices(&c);
        for v in g.vertices() {
            prop_assert_eq!(free.contains(&v), c.facets_containing(v).len() == 1);
        }
    }

    #[test]
    fn every_edge_in_exactly_one_block_or_line(g in arb_graph(8)) {
        let c = clique_complex(&g);
        prop_assume!(c.dim <= 2);
        let b = block_decomposition(&c).unwrap();
        for &(u, w) in g.edges() {
            let in_blocks = b
                .blocks2d
                .iter()
                .filter(|blk| blk.iter().any(|f| f.contains(&u) && f.contains(&w)))
                .count();
            let in_lines = b.lines1d.iter().filter(|l| l.edges.contains(&(u, w))).count();
            prop_assert_eq!(in_blocks + in_lines, 1);
        }
        for (i, l1) in b.lines1d.iter().enumerate() {
            for l2 in &b.lines1d[i + 1..] {
                let v1 = l1.vertices();
                prop_assert!(l2.vertices().iter().all(|v| !v1.contains(v)));
            }
        }
    }

    #[test]
    fn line_graph_relabeling_reproduces_standard(m in 1usize..8, seed in any::<u64>()) {
        // shuffle the labels of the standard complex
        let n = m + 2;
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let facets: Vec<Vec<usize>> =
            standard_line_graph_facets(m).iter().map(|f| f.iter().map(|&v| perm[v - 1]).collect()).collect();
        match is_two_dim_line_graph(&facets).unwrap() {
            LineGraph2d::Yes { length, relabeling } => {
                prop_assert_eq!(length, m);
                let map: std::collections::HashMap<usize, usize> = relabeling.into_iter().collect();
                let mut image: Vec<Vec<usize>> = facets
                    .iter()
                    .map(|f| { let mut t: Vec<usize> = f.iter().map(|v| map[v]).collect(); t.sort_unstable(); t })
                    .collect();
                image.sort();
                prop_assert_eq!(image, standard_line_graph_facets(m));
            }
            LineGraph2d::No { reason } => prop_assert!(false, "{}", reason),
        }
    }
}
