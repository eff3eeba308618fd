//! The clique complex of a graph and the combinatorics built on it: free
//! vertices, leaf orders, two-dimensional line graphs, and the block
//! decomposition with its intersection tree.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Facets (maximal cliques) of the clique complex, each sorted, listed in
/// lexicographic order. Isolated vertices are 0-dimensional facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueComplex {
    pub facets: Vec<Vec<usize>>,
    /// Largest facet size minus one; `-1` for the empty graph.
    pub dim: i64,
}

impl CliqueComplex {
    pub fn from_facets(mut facets: Vec<Vec<usize>>) -> Self {
        for f in facets.iter_mut() {
            f.sort_unstable();
        }
        facets.sort();
        let dim = facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1);
        CliqueComplex { facets, dim }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Indices of facets containing `v`.
    pub fn facets_containing(&self, v: usize) -> Vec<usize> {
        (0..self.facets.len()).filter(|&k| self.facets[k].binary_search(&v).is_ok()).collect()
    }
}

/// Maximal cliques by Bron–Kerbosch recursion with pivoting.
pub fn clique_complex(g: &Graph) -> CliqueComplex {
    let mut facets = Vec::new();
    let p: Vec<usize> = g.vertices().collect();
    bron_kerbosch(g, &mut Vec::new(), p, Vec::new(), &mut facets);
    CliqueComplex::from_facets(facets)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot: vertex of P ∪ X with the most neighbors in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (p.iter().filter(|&&w| g.has_edge(u, w)).count(), std::cmp::Reverse(u)))
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Vertices lying in exactly one of `facets`, sorted.
pub fn free_vertices_of(facets: &[Vec<usize>]) -> Vec<usize> {
    let mut count = std::collections::BTreeMap::<usize, usize>::new();
    for f in facets {
        for &v in f {
            *count.entry(v).or_default() += 1;
        }
    }
    count.into_iter().filter(|&(_, c)| c == 1).map(|(v, _)| v).collect()
}

pub fn free_vertices(c: &CliqueComplex) -> Vec<usize> {
    free_vertices_of(&c.facets)
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// An ordering of the facets in which every facet after the first is a
/// leaf of the complex generated by its predecessors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafOrder {
    /// Facet indices (into the complex's facet list) in leaf order.
    pub order: Vec<usize>,
    /// For each position, the position of a chosen branch; `None` at 0.
    pub branch: Vec<Option<usize>>,
}

impl LeafOrder {
    /// Re-checks the leaf condition and the chosen branches.
    pub fn verify(&self, c: &CliqueComplex) -> bool {
        let r = c.facets.len();
        if self.order.len() != r || self.branch.len() != r {
            return false;
        }
        let mut seen = vec![false; r];
        for &k in &self.order {
            if k >= r || std::mem::replace(&mut seen[k], true) {
                return false;
            }
        }
        for i in 0..r {
            match self.branch[i] {
                None if i == 0 => {}
                Some(j) if i > 0 && j < i => {
                    let fi = &c.facets[self.order[i]];
                    let bj = intersect(&c.facets[self.order[j]], fi);
                    if !(0..i).all(|l| is_subset(&intersect(&c.facets[self.order[l]], fi), &bj)) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }

    /// The facets in leaf order.
    pub fn facets<'a>(&self, c: &'a CliqueComplex) -> Vec<&'a Vec<usize>> {
        self.order.iter().map(|&k| &c.facets[k]).collect()
    }
}

/// Positions `j < i` of `facets[order[j]]` that are branches of
/// `facets[order[i]]` within the prefix.
pub(crate) fn branches(facets: &[Vec<usize>], order: &[usize], i: usize) -> Vec<usize> {
    let fi = &facets[order[i]];
    let inters: Vec<Vec<usize>> = (0..i).map(|l| intersect(&facets[order[l]], fi)).collect();
    (0..i).filter(|&j| inters.iter().all(|x| is_subset(x, &inters[j]))).collect()
}

/// Finds a leaf order if one exists.
///
/// Works backwards: repeatedly removes the last-indexed facet that is a
/// leaf of the remaining facets. For a clique complex, removing a leaf
/// leaves the clique complex of an induced subgraph, so the greedy choice
/// never blocks.
pub fn leaf_order(c: &CliqueComplex) -> Option<LeafOrder> {
    let r = c.facets.len();
    let mut alive: Vec<usize> = (0..r).collect();
    let mut rev = Vec::with_capacity(r);
    while alive.len() > 1 {
        let pick = alive.iter().rev().copied().find(|&f| {
            let others: Vec<usize> = alive.iter().copied().filter(|&h| h != f).collect();
            others.iter().any(|&gb| {
                let bound = intersect(&c.facets[gb], &c.facets[f]);
                others.iter().all(|&h| is_subset(&intersect(&c.facets[h], &c.facets[f]), &bound))
            })
        })?;
        alive.retain(|&h| h != pick);
        rev.push(pick);
    }
    rev.extend(alive);
    rev.reverse();
    let branch = (0..rev.len())
        .map(|i| if i == 0 { None } else { branches(&c.facets, &rev, i).first().copied() })
        .collect();
    Some(LeafOrder { order: rev, branch })
}

/// Outcome of the two-dimensional line graph test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum LineGraph2d {
    /// `relabeling[k] = (v, l)`: vertex `v` takes the standard label `l`,
    /// turning the facets into `{1,2,3}, {2,3,4}, ..., {m,m+1,m+2}`.
    Yes { length: usize, relabeling: Vec<(usize, usize)> },
    No { reason: String },
}

impl LineGraph2d {
    pub fn is_yes(&self) -> bool {
        matches!(self, LineGraph2d::Yes { .. })
    }
}

/// The standard chain of `m` triangles.
pub fn standard_line_graph_facets(m: usize) -> Vec<Vec<usize>> {
    (1..=m).map(|k| vec![k, k + 1, k + 2]).collect()
}

/// Decides whether the triangles `facets` form a complex isomorphic to the
/// standard chain `{1,2,3}, {2,3,4}, ..., {m,m+1,m+2}`.
pub fn is_two_dim_line_graph(facets: &[Vec<usize>]) -> Result<LineGraph2d> {
    let mut tris: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
    for f in facets {
        let mut t = f.clone();
        t.sort_unstable();
        t.dedup();
        if t.len() != 3 {
            return Err(Error::NotTriangle(f.clone()));
        }
        tris.push(t);
    }
    tris.sort();
    let m = tris.len();
    let no = |reason: String| Ok(LineGraph2d::No { reason });
    if m == 0 {
        return no("no triangles".into());
    }
    if m == 1 {
        let relabeling = tris[0].iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
        return Ok(LineGraph2d::Yes { length: 1, relabeling });
    }
    let adj: Vec<Vec<usize>> = (0..m)
        .map(|a| (0..m).filter(|&b| b != a && intersect(&tris[a], &tris[b]).len() == 2).collect())
        .collect();
    if let Some(a) = (0..m).find(|&a| adj[a].len() > 2) {
        return no(format!("triangle {:?} shares an edge with {} others", tris[a], adj[a].len()));
    }
    let ends: Vec<usize> = (0..m).filter(|&a| adj[a].len() == 1).collect();
    if ends.len() != 2 {
        return no("triangles sharing edges do not form a simple chain".into());
    }
    // walk the chain from the first end
    let mut path = vec![ends[0]];
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    while let Some(&next) = adj[cur].iter().find(|&&b| b != prev) {
        if path.contains(&next) {
            return no("triangles sharing edges form a cycle".into());
        }
        path.push(next);
        prev = cur;
        cur = next;
    }
    if path.len() != m {
        return no("triangles are not connected through shared edges".into());
    }
    let t: Vec<&Vec<usize>> = path.iter().map(|&k| &tris[k]).collect();
    let mut label = std::collections::BTreeMap::<usize, usize>::new();
    let shared = intersect(t[0], t[1]);
    let first = t[0].iter().copied().find(|v| !shared.contains(v)).unwrap();
    let (two, three) = if m >= 3 {
        match (t[2].contains(&shared[0]), t[2].contains(&shared[1])) {
            (false, true) => (shared[0], shared[1]),
            (true, false) => (shared[1], shared[0]),
            _ => return no("three consecutive triangles do not share exactly one vertex".into()),
        }
    } else {
        (shared[0], shared[1])
    };
    label.insert(first, 1);
    label.insert(two, 2);
    label.insert(three, 3);
    for k in 1..m {
        let new: Vec<usize> = t[k].iter().copied().filter(|v| !t[k - 1].contains(v)).collect();
        if new.len() != 1 || label.insert(new[0], k + 3).is_some() {
            return no(format!("triangle {:?} does not extend the chain by a new vertex", t[k]));
        }
    }
    for (k, tri) in t.iter().enumerate() {
        let mut img: Vec<usize> = tri.iter().map(|v| label[v]).collect();
        img.sort_unstable();
        if img != [k + 1, k + 2, k + 3] {
            return no(format!("triangle {:?} breaks the chain pattern", tri));
        }
    }
    Ok(LineGraph2d::Yes { length: m, relabeling: label.into_iter().collect() })
}

/// A maximal connected union of edges not contained in any triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub edges: Vec<(usize, usize)>,
    /// Vertices in path order when the edges form a path, starting from
    /// the smaller endpoint.
    pub path: Option<Vec<usize>>,
}

impl Line {
    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        set.into_iter().collect()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&(a, b)| vec![a, b]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Classes of triangles under the transitive closure of sharing an edge.
    pub blocks2d: Vec<Vec<Vec<usize>>>,
    pub lines1d: Vec<Line>,
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

/// Splits a complex of dimension at most two into its maximal
/// codimension-one-connected 2-dimensional blocks and its maximal
/// connected 1-dimensional pieces.
pub fn block_decomposition(c: &CliqueComplex) -> Result<BlockDecomposition> {
    if c.dim > 2 {
        return Err(Error::DimensionTooLarge { dim: c.dim as usize });
    }
    let tris: Vec<&Vec<usize>> = c.facets.iter().filter(|f| f.len() == 3).collect();
    let mut parent: Vec<usize> = (0..tris.len()).collect();
    for a in 0..tris.len() {
        for b in a + 1..tris.len() {
            if intersect(tris[a], tris[b]).len() == 2 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<Vec<usize>>> = Default::default();
    for a in 0..tris.len() {
        let root = find(&mut parent, a);
        blocks.entry(root).or_default().push(tris[a].clone());
    }
    let blocks2d: Vec<Vec<Vec<usize>>> = blocks.into_values().collect();

    let edges: Vec<(usize, usize)> =
        c.facets.iter().filter(|f| f.len() == 2).map(|f| (f[0], f[1])).collect();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (x, y) = (edges[a], edges[b]);
            if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<(usize, usize)>> = Default::default();
    for a in 0..edges.len() {
        let root = find(&mut parent, a);
        groups.entry(root).or_default().push(edges[a]);
    }
    let lines1d = groups
        .into_values()
        .map(|edges| {
            let path = edges_as_path(&edges);
            Line { edges, path }
        })
        .collect();
    Ok(BlockDecomposition { blocks2d, lines1d })
}

fn edges_as_path(edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut deg = std::collections::BTreeMap::<usize, usize>::new();
    for &(a, b) in edges {
        *deg.entry(a).or_default() += 1;
        *deg.entry(b).or_default() += 1;
    }
    if deg.values().any(|&d| d > 2) || deg.len() != edges.len() + 1 {
        return None;
    }
    let start = deg.iter().find(|&(_, &d)| d == 1).map(|(&v, _)| v)?;
    let mut path = vec![start];
    let mut used = vec![false; edges.len()];
    loop {
        let cur = *path.last().unwrap();
        let next = edges.iter().enumerate().find_map(|(k, &(a, b))| {
            if used[k] {
                None
            } else if a == cur {
                Some((k, b))
            } else if b == cur {
                Some((k, a))
            } else {
                None
            }
        });
        match next {
            Some((k, w)) => {
                used[k] = true;
                path.push(w);
            }
            None => break,
        }
    }
    (path.len() == edges.len() + 1).then_some(path)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Block2d,
    Line1d,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub kind: NodeKind,
    /// Index into `blocks2d` or `lines1d`.
    pub index: usize,
    pub vertices: Vec<usize>,
    pub facets: Vec<Vec<usize>>,
    /// A block consisting of a single triangle.
    pub simplex: bool,
}

impl TreeNode {
    pub fn free_vertices(&self) -> Vec<usize> {
        free_vertices_of(&self.facets)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub shared: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionTree {
    pub nodes: Vec<TreeNode>,
    pub edges: Vec<TreeEdge>,
}

impl IntersectionTree {
    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|e| e.a == node || e.b == node).count()
    }

    pub fn is_path(&self) -> bool {
        (0..self.nodes.len()).all(|k| self.degree(k) <= 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum TreeViolation {
    SharedTooMuch { a: usize, b: usize, shared: Vec<usize> },
    TripleIntersection { vertex: usize, nodes: Vec<usize> },
    DegreeTooLarge { node: usize, degree: usize },
    Cycle { nodes: Vec<usize> },
    Disconnected { components: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeFailure {
    /// The node graph as built, for diagnostics.
    pub graph: IntersectionTree,
    pub violations: Vec<TreeViolation>,
}

/// Builds the intersection graph of blocks and lines and checks that it
/// is a tree with pairwise intersections of at most one vertex, no vertex
/// in three nodes, and all degrees at most three. Every violation found
/// is reported.
pub fn intersection_tree(b: &BlockDecomposition) -> std::result::Result<IntersectionTree, TreeFailure> {
    let mut nodes = Vec::new();
    for (k, blk) in b.blocks2d.iter().enumerate() {
        let vs: BTreeSet<usize> = blk.iter().flatten().copied().collect();
        nodes.push(TreeNode {
            kind: NodeKind::Block2d,
            index: k,
            vertices: vs.into_iter().collect(),
            facets: blk.clone(),
            simplex: blk.len() == 1,
        });
    }
    for (k, line) in b.lines1d.iter().enumerate() {
        nodes.push(TreeNode {
            kind: NodeKind::Line1d,
            index: k,
            vertices: line.vertices(),
            facets: line.facets(),
            simplex: false,
        });
    }
    let mut edges = Vec::new();
    let mut violations = Vec::new();
    for a in 0..nodes.len() {
        for c in a + 1..nodes.len() {
            let shared = intersect(&nodes[a].vertices, &nodes[c].vertices);
            if shared.is_empty() {
                continue;
            }
            if shared.len() >= 2 {
                violations.push(TreeViolation::SharedTooMuch { a, b: c, shared: shared.clone() });
            }
            edges.push(TreeEdge { a, b: c, shared });
        }
    }
    let mut holders = std::collections::BTreeMap::<usize, Vec<usize>>::new();
    for (k, node) in nodes.iter().enumerate() {
        for &v in &node.vertices {
            holders.entry(v).or_default().push(k);
        }
    }
    for (v, hs) in holders {
        if hs.len() >= 3 {
            violations.push(TreeViolation::TripleIntersection { vertex: v, nodes: hs });
        }
    }
    let tree = IntersectionTree { nodes, edges };
    for k in 0..tree.nodes.len() {
        let d = tree.degree(k);
        if d > 3 {
            violations.push(TreeViolation::DegreeTooLarge { node: k, degree: d });
        }
    }
    // fundamental cycles against a spanning forest
    let n = tree.nodes.len();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut forest: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in &tree.edges {
        let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
        if ra == rb {
            let mut cyc = forest_path(&forest, e.a, e.b);
            cyc.sort_unstable();
            violations.push(TreeViolation::Cycle { nodes: cyc });
        } else {
            parent[ra.max(rb)] = ra.min(rb);
            forest[e.a].push(e.b);
            forest[e.b].push(e.a);
        }
    }
    let roots: BTreeSet<usize> = (0..n).map(|k| find(&mut parent, k)).collect();
    if roots.len() > 1 {
        violations.push(TreeViolation::Disconnected { components: roots.len() });
    }
    if violations.is_empty() {
        Ok(tree)
    } else {
        Err(TreeFailure { graph: tree, violations })
    }
}

fn forest_path(forest: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; forest.len()];
    prev[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in &forest[u] {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path
}

/// Glues `g1` and `g2` by identifying the free vertex `v1` of `g1` with
/// the free vertex `v2` of `g2`. Vertices of `g1` keep their labels; the
/// remaining vertices of `g2` follow in increasing order.
pub fn glue_at_vertex(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    for (g, v) in [(g1, v1), (g2, v2)] {
        if v == 0 || v > g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        let c = clique_complex(g);
        let holders = c.facets_containing(v);
        if holders.len() > 1 {
            return Err(Error::NotFree {
                vertex: v,
                first: c.facets[holders[0]].clone(),
                second: c.facets[holders[1]].clone(),
            });
        }
    }
    let n1 = g1.n();
    let map = |u: usize| match u.cmp(&v2) {
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Less => n1 + u,
        std::cmp::Ordering::Greater => n1 + u - 1,
    };
    let mut g = Graph::empty(n1 + g2.n() - 1);
    for &(a, b) in g1.edges() {
        g.add_edge(a, b)?;
    }
    for &(a, b) in g2.edges() {
        g.add_edge(map(a), map(b))?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> Graph {
        Graph::from_edges(6, &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    fn fig2() -> Graph {
        Graph::from_edges(
            6,
            &[(1, 2), (1, 4), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap()
    }

    #[test]
    fn facets_of_examples() {
        let k4 = clique_complex(&Graph::complete(4));
        assert_eq!(k4.facets, vec![vec![1, 2, 3, 4]]);
        assert_eq!(k4.dim, 3);
        let c1 = clique_complex(&fig1());
        assert_eq!(c1.facets, vec![vec![1, 2, 3], vec![1, 4], vec![2, 5], vec![3, 6]]);
        assert_eq!(c1.dim, 2);
        let c2 = clique_complex(&fig2());
        assert_eq!(
            c2.facets,
            vec![vec![1, 2, 4], vec![2, 3, 5], vec![2, 4, 5], vec![4, 5, 6]]
        );
        let e = clique_complex(&Graph::empty(2));
        assert_eq!(e.facets, vec![vec![1], vec![2]]);
        assert_eq!(e.dim, 0);
    }

    #[test]
    fn free_vertex_examples() {
        assert_eq!(free_vertices(&clique_complex(&Graph::complete(5))), vec![1, 2, 3, 4, 5]);
        assert_eq!(free_vertices(&clique_complex(&Graph::path(3))), vec![1, 3]);
        assert_eq!(free_vertices(&clique_complex(&fig2())), vec![1, 3, 6]);
    }

    #[test]
    fn leaf_orders() {
        let g = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = clique_complex(&g);
        let lo = leaf_order(&c).unwrap();
        assert_eq!(lo.order, vec![0, 1]);
        assert_eq!(lo.branch, vec![None, Some(0)]);
        assert!(lo.verify(&c));
        assert_eq!(leaf_order(&clique_complex(&Graph::cycle(4))), None);
        let c1 = clique_complex(&fig1());
        let lo = leaf_order(&c1).unwrap();
        assert_eq!(c1.facets[lo.order[0]], vec![1, 2, 3]);
        assert_eq!(&lo.branch[1..], &[Some(0), Some(0), Some(0)]);
        assert!(lo.verify(&c1));
    }

    #[test]
    fn c4_has_no_leaf_order_exhaustively() {
        // oracle: every ordering of the four edges fails the leaf condition
        let c = clique_complex(&Graph::cycle(4));
        let mut perms = vec![vec![0usize, 1, 2, 3]];
        while let Some(p) = perms.last().cloned() {
            let mut q = p.clone();
            let mut i = 3;
            while i > 0 && q[i - 1] >= q[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = 3;
            while q[j] <= q[i - 1] {
                j -= 1;
            }
            q.swap(i - 1, j);
            q[i..].reverse();
            perms.push(q);
        }
        assert_eq!(perms.len(), 24);
        for p in perms {
            let ok = (1..4).all(|i| !branches(&c.facets, &p, i).is_empty());
            assert!(!ok, "{p:?}");
        }
    }

    #[test]
    fn line_graphs() {
        assert!(is_two_dim_line_graph(&[vec![4, 7, 9]]).unwrap().is_yes());
        let fig3 = standard_line_graph_facets(5);
        // scramble: reverse labels 1..7
        let scrambled: Vec<Vec<usize>> =
            fig3.iter().map(|f| f.iter().map(|v| 8 - v).collect()).collect();
        match is_two_dim_line_graph(&scrambled).unwrap() {
            LineGraph2d::Yes { length, relabeling } => {
                assert_eq!(length, 5);
                let map: std::collections::BTreeMap<_, _> = relabeling.into_iter().collect();
                let mut img: Vec<Vec<usize>> = scrambled
                    .iter()
                    .map(|f| {
                        let mut t: Vec<usize> = f.iter().map(|v| map[v]).collect();
                        t.sort_unstable();
                        t
                    })
                    .collect();
                img.sort();
                assert_eq!(img, fig3);
            }
            other => panic!("{other:?}"),
        }
        let c2 = clique_complex(&fig2());
        match is_two_dim_line_graph(&c2.facets).unwrap() {
            LineGraph2d::No { reason } => assert!(reason.contains("[2, 4, 5]"), "{reason}"),
            other => panic!("{other:?}"),
        }
        // three triangles on a common edge
        let fan = vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5]];
        assert!(!is_two_dim_line_graph(&fan).unwrap().is_yes());
        assert!(matches!(is_two_dim_line_graph(&[vec![1, 2]]), Err(Error::NotTriangle(_))));
    }

    #[test]
    fn block_decompositions() {
        let b1 = block_decomposition(&clique_complex(&fig1())).unwrap();
        assert_eq!(b1.blocks2d, vec![vec![vec![1, 2, 3]]]);
        assert_eq!(b1.lines1d.len(), 3);
        let b2 = block_decomposition(&clique_complex(&fig2())).unwrap();
        assert_eq!(b2.blocks2d.len(), 1);
        assert_eq!(b2.blocks2d[0].len(), 4);
        assert!(b2.lines1d.is_empty());
        let b3 = block_decomposition(&clique_complex(&Graph::path(4))).unwrap();
        assert!(b3.blocks2d.is_empty());
        assert_eq!(b3.lines1d.len(), 1);
        assert_eq!(b3.lines1d[0].path, Some(vec![1, 2, 3, 4]));
        assert!(matches!(
            block_decomposition(&clique_complex(&Graph::complete(4))),
            Err(Error::DimensionTooLarge { dim: 3 })
        ));
    }

    #[test]
    fn intersection_trees() {
        let t1 = intersection_tree(&block_decomposition(&clique_complex(&fig1())).unwrap()).unwrap();
        assert_eq!(t1.nodes.len(), 4);
        assert_eq!(t1.degree(0), 3);
        assert!(t1.nodes[0].simplex);
        let bowtie = glue_at_vertex(&Graph::complete(3), 3, &Graph::complete(3), 1).unwrap();
        let t2 =
            intersection_tree(&block_decomposition(&clique_complex(&bowtie)).unwrap()).unwrap();
        assert_eq!(t2.nodes.len(), 2);
        assert_eq!(t2.edges, vec![TreeEdge { a: 0, b: 1, shared: vec![3] }]);
        let diamond = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let t3 =
            intersection_tree(&block_decomposition(&clique_complex(&diamond)).unwrap()).unwrap();
        assert_eq!(t3.nodes.len(), 1);
        assert!(t3.edges.is_empty());
    }

    #[test]
    fn intersection_tree_reports_cycles_and_triples() {
        // four triangles glued in a ring around the chordless square 1-3-5-7
        let g = Graph::from_edges(
            8,
            &[
                (1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5),
                (5, 6), (6, 7), (5, 7), (7, 8), (8, 1), (7, 1),
            ],
        )
        .unwrap();
        let fail = intersection_tree(&block_decomposition(&clique_complex(&g)).unwrap()).unwrap_err();
        assert!(fail.violations.iter().any(|v| matches!(v, TreeViolation::Cycle { .. })));
    }

    #[test]
    fn gluing() {
        let bowtie = glue_at_vertex(&Graph::complete(3), 3, &Graph::complete(3), 1).unwrap();
        assert_eq!(bowtie.n(), 5);
        assert_eq!(bowtie.edge_count(), 6);
        assert_eq!(bowtie.edges(), &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]);
        let p = glue_at_vertex(&Graph::path(2), 2, &Graph::path(2), 1).unwrap();
        assert_eq!(p, Graph::path(3));
        let mut g = Graph::complete(3);
        for v in 1..=3 {
            g = glue_at_vertex(&g, v, &Graph::path(2), 1).unwrap();
        }
        assert!(g.is_isomorphic(&fig1()).unwrap());
        match glue_at_vertex(&Graph::path(3), 2, &Graph::path(2), 1) {
            Err(Error::NotFree { vertex: 2, first, second }) => {
                assert_eq!(first, vec![1, 2]);
                assert_eq!(second, vec![2, 3]);
            }
            other => panic!("{other:?}"),
        }
    }
}
