//! Finite simple graphs on the vertex set `1..=n`, together with the
//! combinatorial predicates that govern binomial edge ideals: chordality,
//! claw-freeness and closedness with respect to a labeling.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple graph with vertices `1..=n`.
///
/// Edges are stored as sorted pairs `(i, j)` with `i < j`; the adjacency
/// matrix is kept alongside for constant-time queries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// The graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![false; n * n],
            nbrs: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
        }
        for v in [a, b] {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if self.has_edge(a, b) {
            return Ok(());
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.adj[(i - 1) * self.n + (j - 1)] = true;
        self.adj[(j - 1) * self.n + (i - 1)] = true;
        let pos = self.edges.binary_search(&(i, j)).unwrap_err();
        self.edges.insert(pos, (i, j));
        for (u, w) in [(i, j), (j, i)] {
            let list = &mut self.nbrs[u - 1];
            let pos = list.binary_search(&w).unwrap_err();
            list.insert(pos, w);
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.add_edge(i, j).unwrap();
            }
        }
        g
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i, i + 1).unwrap();
        }
        g
    }

    /// Cycle `1 - 2 - ... - m - 1`, `m >= 3`.
    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(m);
        g.add_edge(1, m).unwrap();
        g
    }

    /// Star with center 1 and `leaves` leaves; `star(3)` is the claw.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 2..=leaves + 1 {
            g.add_edge(1, v).unwrap();
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each edge `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b
            && a >= 1
            && b >= 1
            && a <= self.n
            && b <= self.n
            && self.adj[(a - 1) * self.n + (b - 1)]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v - 1].len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(k, &a)| vs[k + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Induced subgraph on `w`; vertex `w[k]` becomes `k + 1`.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<Graph> {
        for &v in w {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut seen = vec![false; self.n + 1];
        for &v in w {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidGraph(format!("vertex {v} repeated in subset")));
            }
        }
        let mut h = Graph::empty(w.len());
        for (a, &u) in w.iter().enumerate() {
            for (b, &v) in w.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(a + 1, b + 1)?;
                }
            }
        }
        Ok(h)
    }

    /// Applies `lab`: vertex `v` of `self` becomes `lab.image(v)`.
    pub fn relabel(&self, lab: &Labeling) -> Result<Graph> {
        if lab.len() != self.n {
            return Err(Error::InvalidLabeling(format!(
                "labeling has {} entries, graph has {} vertices",
                lab.len(),
                self.n
            )));
        }
        let mut h = Graph::empty(self.n);
        for &(a, b) in &self.edges {
            h.add_edge(lab.image(a), lab.image(b))?;
        }
        Ok(h)
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for &(a, b) in self.edges.iter() {
            g.add_edge(a, b).unwrap();
        }
        for &(a, b) in other.edges.iter() {
            g.add_edge(a + self.n, b + self.n).unwrap();
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n + 1];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Emits the edge-list file format: a header line `n <count>` followed
    /// by one sorted edge per line.
    pub fn to_graph_file(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for &(a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    /// Canonical form under isomorphism: the lexicographically largest
    /// upper-triangular adjacency bit string over all vertex orders that
    /// list vertices by non-increasing degree. Exponential; refused above
    /// ten vertices.
    pub fn canonical_form(&self) -> Result<Vec<bool>> {
        const MAX: usize = 10;
        if self.n > MAX {
            return Err(Error::SearchRefused {
                what: "canonical form",
                size: self.n,
                bound: MAX,
            });
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut by_deg: Vec<usize> = self.vertices().collect();
        by_deg.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        for v in by_deg {
            match classes.last_mut() {
                Some(c) if self.degree(c[0]) == self.degree(v) => c.push(v),
                _ => classes.push(vec![v]),
            }
        }
        let slot_class: Vec<usize> = classes
            .iter()
            .enumerate()
            .flat_map(|(k, c)| std::iter::repeat_n(k, c.len()))
            .collect();
        let mut best: Option<Vec<bool>> = None;
        let mut order = Vec::with_capacity(self.n);
        self.canon_rec(&classes, &slot_class, &mut vec![false; self.n + 1], &mut order, &mut best);
        Ok(best.unwrap_or_default())
    }

    fn canon_rec(
        &self,
        classes: &[Vec<usize>],
        slot_class: &[usize],
        used: &mut Vec<bool>,
        order: &mut Vec<usize>,
        best: &mut Option<Vec<bool>>,
    ) {
        if order.len() == self.n {
            let mut bits = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
            for a in 0..self.n {
                for b in a + 1..self.n {
                    bits.push(self.has_edge(order[a], order[b]));
                }
            }
            if best.as_ref().is_none_or(|b| bits > *b) {
                *best = Some(bits);
            }
            return;
        }
        for &v in &classes[slot_class[order.len()]] {
            if !used[v] {
                used[v] = true;
                order.push(v);
                self.canon_rec(classes, slot_class, used, order, best);
                order.pop();
                used[v] = false;
            }
        }
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let mut d1: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut d2: Vec<usize> = other.vertices().map(|v| other.degree(v)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

/// Parses the edge-list format. An optional first non-comment line
/// `n <count>` fixes the vertex count; otherwise it is the largest vertex
/// mentioned. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_edge = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "n" {
            if header.is_some() || seen_edge {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "header `n <count>` must come first and only once".into(),
                });
            }
            if toks.len() != 2 {
                return Err(Error::Parse { line: line_no, msg: "expected `n <count>`".into() });
            }
            let n = toks[1].parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad vertex count `{}`", toks[1]),
            })?;
            header = Some(n);
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two vertex indices, found {} tokens", toks.len()),
            });
        }
        let mut ends = [0usize; 2];
        for (k, t) in toks.iter().enumerate() {
            let v: i64 = t.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad vertex index `{t}`"),
            })?;
            if v < 1 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("vertex index {v} is below 1"),
                });
            }
            ends[k] = v as usize;
        }
        if ends[0] == ends[1] {
            return Err(Error::Parse { line: line_no, msg: format!("loop at vertex {}", ends[0]) });
        }
        if let Some(n) = header {
            if ends[0] > n || ends[1] > n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("vertex exceeds declared count {n}"),
                });
            }
        }
        seen_edge = true;
        edges.push((ends[0], ends[1]));
    }
    let n = header.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

/// A relabeling of the vertices: vertex `v` receives label `perm[v - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling(Vec<usize>);

impl Labeling {
    pub fn identity(n: usize) -> Self {
        Labeling((1..=n).collect())
    }

    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &p in &perm {
            if p == 0 || p > n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidLabeling(format!("{perm:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(Labeling(perm))
    }

    /// Parses a comma separated permutation such as `2,1,3`.
    pub fn parse(text: &str) -> Result<Self> {
        let perm = text
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidLabeling(format!("`{text}`: {e}")))?;
        Labeling::new(perm)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Labeling {
        let mut inv = vec![0; self.0.len()];
        for (v, &l) in self.0.iter().enumerate() {
            inv[l - 1] = v + 1;
        }
        Labeling(inv)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Labeling> {
        let mut cur: Option<Vec<usize>> = Some((1..=n).collect());
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            cur = next_permutation(out.clone());
            Some(Labeling(out))
        })
    }
}

fn next_permutation(mut p: Vec<usize>) -> Option<Vec<usize>> {
    let n = p.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    Some(p)
}

/// An induced claw: `center` adjacent to the three pairwise non-adjacent
/// `leaves`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl ClawWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c] = self.leaves;
        self.leaves.iter().all(|&l| g.has_edge(self.center, l))
            && !g.has_edge(a, b)
            && !g.has_edge(a, c)
            && !g.has_edge(b, c)
    }
}

/// A chordless cycle of length at least four.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordlessCycleWitness {
    pub cycle: Vec<usize>,
}

impl ChordlessCycleWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let m = self.cycle.len();
        if m < 4 {
            return false;
        }
        let mut sorted = self.cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != m {
            return false;
        }
        for a in 0..m {
            for b in a + 1..m {
                let consecutive = b == a + 1 || (a == 0 && b == m - 1);
                if g.has_edge(self.cycle[a], self.cycle[b]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Chordality {
    /// A perfect elimination ordering: each vertex is simplicial in the
    /// graph induced on itself and the vertices after it.
    Chordal { elimination_order: Vec<usize> },
    NotChordal { witness: ChordlessCycleWitness },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum cardinality search; returns vertices in visiting order.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut visited = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        // smallest vertex among those of maximum weight
        let v = (1..=n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Checks that eliminating vertices in `order` always removes a simplicial
/// vertex of the remaining graph.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut pos = vec![usize::MAX; g.n() + 1];
    for (k, &v) in order.iter().enumerate() {
        if v == 0 || v > g.n() || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = k;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        g.is_clique(&later)
    })
}

/// Decides chordality with certificates in both directions.
pub fn is_chordal(g: &Graph) -> Chordality {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    if is_perfect_elimination_order(g, &order) {
        return Chordality::Chordal { elimination_order: order };
    }
    let witness = find_chordless_cycle(g).expect("no perfect elimination order but no chordless cycle");
    Chordality::NotChordal { witness }
}

/// Searches for a chordless cycle through some vertex `v` and two
/// non-adjacent neighbors `x < y`, joined by a shortest path avoiding the
/// rest of the closed neighborhood of `v`.
fn find_chordless_cycle(g: &Graph) -> Option<ChordlessCycleWitness> {
    let n = g.n();
    for v in 1..=n {
        let nb = g.neighbors(v);
        for (a, &x) in nb.iter().enumerate() {
            for &y in &nb[a + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n + 1];
                blocked[v] = true;
                for &w in nb {
                    if w != x && w != y {
                        blocked[w] = true;
                    }
                }
                if let Some(path) = shortest_path(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(ChordlessCycleWitness { cycle: normalize_cycle(cycle) });
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![0usize; g.n() + 1];
    let mut seen = blocked.to_vec();
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Rotates a cycle to start at its least vertex, oriented towards the
/// smaller of the two neighbors.
fn normalize_cycle(cycle: Vec<usize>) -> Vec<usize> {
    let m = cycle.len();
    let start = (0..m).min_by_key(|&k| cycle[k]).unwrap();
    let fwd: Vec<usize> = (0..m).map(|k| cycle[(start + k) % m]).collect();
    let bwd: Vec<usize> = (0..m).map(|k| cycle[(start + m - k) % m]).collect();
    fwd.min(bwd)
}

/// The lexicographically least induced claw `(center, leaves)`, if any.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    for c in g.vertices() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some(ClawWitness { center: c, leaves: [a, b, d] });
                    }
                }
            }
        }
    }
    None
}

/// A triple violating closedness: `center` is adjacent to `j` and `k`,
/// both on the same side of it in the labeling, while `{j, k}` is not an
/// edge. Vertices are reported by their original names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedViolation {
    pub center: usize,
    pub j: usize,
    pub k: usize,
}

/// Checks the closed condition for `g` under the relabeling `lab`.
/// Returns the least violating triple in the relabeled numbering order.
pub fn is_closed_with_labeling(g: &Graph, lab: &Labeling) -> Result<Option<ClosedViolation>> {
    let h = g.relabel(lab)?;
    let inv = lab.inverse();
    Ok(closed_violation(&h).map(|(i, j, k)| ClosedViolation {
        center: inv.image(i),
        j: inv.image(j),
        k: inv.image(k),
    }))
}

/// Least violation `(i, j, k)`, `j < k`, of the closed condition under the
/// identity labeling.
fn closed_violation(h: &Graph) -> Option<(usize, usize, usize)> {
    for i in h.vertices() {
        let nb = h.neighbors(i);
        for (a, &j) in nb.iter().enumerate() {
            for &k in &nb[a + 1..] {
                let same_side = (j > i) == (k > i);
                if same_side && !h.has_edge(j, k) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Default vertex bound for the exhaustive closed-labeling search.
pub const DEFAULT_LABELING_BOUND: usize = 9;

/// Finds the lexicographically least labeling under which `g` is closed.
///
/// Vertices are labeled in the order `1, 2, ...`, each trying the unused
/// labels in increasing order; a partial labeling is extended only while
/// no triple of labeled vertices violates the condition.
pub fn find_closed_labeling(g: &Graph, bound: usize) -> Result<Option<Labeling>> {
    let n = g.n();
    if n > bound {
        return Err(Error::SearchRefused { what: "closed labeling search", size: n, bound });
    }
    let mut label = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    if closed_search(g, 1, &mut label, &mut used) {
        Ok(Some(Labeling(label[1..].to_vec())))
    } else {
        Ok(None)
    }
}

fn closed_search(g: &Graph, v: usize, label: &mut [usize], used: &mut [bool]) -> bool {
    let n = g.n();
    if v > n {
        return true;
    }
    for l in 1..=n {
        if used[l] {
            continue;
        }
        label[v] = l;
        used[l] = true;
        if partial_ok(g, v, label) && closed_search(g, v + 1, label, used) {
            return true;
        }
        used[l] = false;
        label[v] = 0;
    }
    false
}

/// All triples among vertices `1..=v` that involve `v` satisfy the closed
/// condition under the partial labeling.
fn partial_ok(g: &Graph, v: usize, label: &[usize]) -> bool {
    let ok = |i: usize, j: usize, k: usize| {
        if !(g.has_edge(i, j) && g.has_edge(i, k)) || g.has_edge(j, k) {
            return true;
        }
        (label[j] > label[i]) != (label[k] > label[i])
    };
    for a in 1..v {
        for b in a + 1..v {
            if !(ok(v, a, b) && ok(a, v, b) && ok(b, v, a)) {
                return false;
            }
        }
    }
    true
}
