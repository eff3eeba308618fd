//! The built-in corpus. Every graph is constructed in code so its shape
//! can be reviewed here.

use crate::complex::{glue_at_vertex, standard_line_graph_facets};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub description: String,
    pub graph: Graph,
}

fn entry(name: &str, description: &str, graph: Graph) -> CorpusEntry {
    CorpusEntry { name: name.into(), description: description.into(), graph }
}

/// The graph whose maximal cliques are the given facets.
pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Graph {
    let mut g = Graph::empty(n);
    for f in facets {
        for (a, &u) in f.iter().enumerate() {
            for &w in &f[a + 1..] {
                g.add_edge(u, w).expect("facet vertices in range");
            }
        }
    }
    g
}

/// Two-dimensional line graph of length `m`: triangles
/// `{1,2,3}, {2,3,4}, ..., {m,m+1,m+2}`.
pub fn line2d(m: usize) -> Graph {
    from_facets(m + 2, &standard_line_graph_facets(m))
}

fn glue(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Graph {
    glue_at_vertex(g1, v1, g2, v2).expect("corpus gluings use free vertices")
}

/// Triangle `{1,2,3}` with a pendant edge at each corner:
/// `{1,4}, {2,5}, {3,6}`.
pub fn fig1() -> Graph {
    let edge = Graph::path(2);
    let g = glue(&Graph::complete(3), 1, &edge, 1);
    let g = glue(&g, 2, &edge, 1);
    glue(&g, 3, &edge, 1)
}

/// Four triangles `{1,2,4}, {2,3,5}, {2,4,5}, {4,5,6}`: the middle one
/// shares an edge with each of the others.
pub fn fig2() -> Graph {
    from_facets(6, &[vec![1, 2, 4], vec![2, 3, 5], vec![2, 4, 5], vec![4, 5, 6]])
}

/// The chain of triangles as drawn for two-dimensional line graphs:
/// bottom vertices `1,3,5,7,9` and top vertices `2,4,6,8`.
pub fn fig3() -> Graph {
    line2d(7)
}

/// Two triangles sharing the vertex 3.
pub fn bowtie() -> Graph {
    glue(&Graph::complete(3), 3, &Graph::complete(3), 1)
}

/// Two triangles sharing the edge `{2,3}`.
pub fn diamond() -> Graph {
    line2d(2)
}

/// Every corpus graph, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        entry("claw", "star with three leaves, centre 1", Graph::star(3)),
        entry("c4", "4-cycle", Graph::cycle(4)),
        entry("c5", "5-cycle", Graph::cycle(5)),
        entry("c6", "6-cycle", Graph::cycle(6)),
    ];
    for k in 2..=5 {
        out.push(entry(&format!("k{k}"), &format!("complete graph on {k} vertices"), Graph::complete(k)));
    }
    for k in 3..=5 {
        out.push(entry(&format!("path{k}"), &format!("path on {k} vertices"), Graph::path(k)));
    }
    for m in 1..=4 {
        out.push(entry(
            &format!("line2d-{m}"),
            &format!("two-dimensional line graph of length {m}"),
            line2d(m),
        ));
    }
    out.extend([
        entry("fig1", "triangle with a pendant edge at each corner", fig1()),
        entry("fig2", "chordal claw-free graph with a non-line block of four triangles", fig2()),
        entry("fig3", "chain of seven triangles", fig3()),
        entry("bowtie", "two triangles sharing a vertex", bowtie()),
        entry("diamond", "two triangles sharing an edge", diamond()),
    ]);
    let k3 = Graph::complete(3);
    let edge = Graph::path(2);
    out.extend([
        entry("glued-k3-path3", "triangle glued to the end of a path", glue(&k3, 3, &Graph::path(3), 1)),
        entry("glued-line2d2-edge", "diamond with a pendant edge at vertex 4", glue(&line2d(2), 4, &edge, 1)),
        entry("glued-line2d2-line2d2", "two diamonds glued end to end", glue(&line2d(2), 4, &line2d(2), 1)),
        entry("glued-fig1-k3", "fig1 with a triangle at vertex 4", glue(&fig1(), 4, &k3, 1)),
        entry("glued-k4-k3", "K4 and a triangle sharing a vertex", glue(&Graph::complete(4), 4, &k3, 1)),
        entry("glued-claw-k3", "claw with a triangle at leaf 2", glue(&Graph::star(3), 2, &k3, 1)),
        entry("glued-fig2-edge", "fig2 with a pendant edge at vertex 6", glue(&fig2(), 6, &edge, 1)),
        entry(
            "glued-k3-line2d2-triple",
            "triangle with diamonds at all three corners",
            {
                let d = line2d(2);
                let g = glue(&k3, 1, &d, 1);
                let g = glue(&g, 2, &d, 1);
                glue(&g, 3, &d, 1)
            },
        ),
    ]);
    out
}

pub fn names() -> Vec<String> {
    corpus().into_iter().map(|e| e.name).collect()
}

pub fn lookup(name: &str) -> Result<Graph> {
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.graph)
        .ok_or_else(|| Error::UnknownCorpusGraph(name.to_string()))
}

/// One representative per isomorphism class of graphs on `n <= 7`
/// vertices, the least edge set in canonical form order.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "isomorphism classes are enumerated for n <= 7 only");
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in all_labeled_graphs(n) {
        if seen.insert(g.canonical_form().expect("n within canonical form bound")) {
            out.push(g);
        }
    }
    out
}

/// Every labeled graph on `1..=n`, by edge bitmask.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).expect("valid pairs")
    })
}
