//! Koszulness decisions for binomial edge ideals: necessary conditions,
//! the leaf-order sufficient condition, the classification for clique
//! complexes of dimension at most two, and reduction to components.

use serde::{Deserialize, Serialize};

use crate::complex::{
    block_decomposition, branches, clique_complex, intersection_tree, is_two_dim_line_graph,
    CliqueComplex, IntersectionTree, LeafOrder, LineGraph2d, NodeKind, TreeViolation,
};
use crate::error::Result;
use crate::graph::{
    find_claw, find_closed_labeling, is_chordal, ChordlessCycleWitness, Chordality, ClawWitness,
    Graph, Labeling, DEFAULT_LABELING_BOUND,
};
use crate::resolution::{tor_table, GradedTable, ResolutionOptions};

/// Default facet bound for the leaf-order search.
pub const DEFAULT_FACET_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Koszul,
    NotKoszul,
    Unknown,
    OutOfTheoremScope,
}

/// Which structural condition of the classification failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum TreeCondition {
    BlockNotLineGraph { block: Vec<Vec<usize>>, reason: String },
    LineNotPath { edges: Vec<(usize, usize)> },
    NotATree { violations: Vec<TreeViolation> },
    GluingVertexNotFree { vertex: usize, node: usize, node_facets: Vec<Vec<usize>> },
    DegreeThreeNotTriangle { node: usize, node_facets: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Claw { witness: ClawWitness },
    ChordlessCycle { witness: ChordlessCycleWitness },
    IntersectionTree { tree: IntersectionTree },
    /// Leaf order in which every facet meets each of its branches in one
    /// vertex; `facets` lists the facets in that order.
    LeafOrder { order: LeafOrder, facets: Vec<Vec<usize>> },
    TreeCondition { failure: TreeCondition },
    /// Off-diagonal Tor entries over one prime field.
    TorEvidence { table: GradedTable, off_diagonal: Vec<(usize, u16, u64)> },
    /// Verdict for the component induced on `vertices` (relabeled
    /// `1..=k` in increasing order).
    Component { vertices: Vec<usize>, verdict: Box<KoszulVerdict> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KoszulVerdict {
    pub status: Status,
    pub certificates: Vec<Certificate>,
    pub notes: Vec<String>,
}

impl KoszulVerdict {
    fn new(status: Status, certificates: Vec<Certificate>) -> Self {
        KoszulVerdict { status, certificates, notes: Vec::new() }
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    pub fn is_koszul(&self) -> bool {
        self.status == Status::Koszul
    }

    /// Re-checks every certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if matches!(self.status, Status::Koszul | Status::NotKoszul) && self.certificates.is_empty()
        {
            return false;
        }
        self.certificates.iter().all(|c| verify_certificate(c, g, self.status))
    }
}

fn verify_certificate(c: &Certificate, g: &Graph, status: Status) -> bool {
    match c {
        Certificate::Claw { witness } => witness.verify(g),
        Certificate::ChordlessCycle { witness } => witness.verify(g),
        Certificate::LeafOrder { order, facets } => {
            let cc = clique_complex(g);
            order.verify(&cc)
                && order.facets(&cc).into_iter().cloned().collect::<Vec<_>>() == *facets
                && one_vertex_branches(&cc, order)
                && is_chordal(g).is_chordal()
                && find_claw(g).is_none()
        }
        Certificate::IntersectionTree { tree } => {
            let Ok(b) = block_decomposition(&clique_complex(g)) else { return false };
            matches!(structure_check(&b), Ok(t) if t == *tree)
        }
        Certificate::TreeCondition { .. } => classify_dim2(g).certificates.contains(c),
        Certificate::TorEvidence { table, off_diagonal } => {
            *off_diagonal == table.off_diagonal(0) && (status != Status::NotKoszul || !off_diagonal.is_empty())
        }
        Certificate::Component { vertices, verdict } => match g.induced_subgraph(vertices) {
            Ok(h) => h.is_connected() && verdict.verify(&h),
            Err(_) => false,
        },
    }
}

/// Chordal and claw free, or a witness that one of them fails.
pub fn necessary_conditions(g: &Graph) -> std::result::Result<(), Certificate> {
    if let Chordality::NotChordal { witness } = is_chordal(g) {
        return Err(Certificate::ChordlessCycle { witness });
    }
    if let Some(witness) = find_claw(g) {
        return Err(Certificate::Claw { witness });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Cor25 {
    Yes { order: LeafOrder },
    No { reason: String },
    /// Too many facets for the search.
    Unknown { facets: usize, bound: usize },
}

fn intersect_len(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

fn one_vertex_branches(c: &CliqueComplex, lo: &LeafOrder) -> bool {
    (1..lo.order.len()).all(|i| {
        let fi = &c.facets[lo.order[i]];
        branches(&c.facets, &lo.order, i).iter().all(|&j| intersect_len(&c.facets[lo.order[j]], fi) == 1)
    })
}

/// Searches for a leaf order in which every facet after the first meets
/// each of its branches in exactly one vertex, for chordal claw-free
/// graphs. Depth first over facets in sorted order; prefixes are
/// remembered by their facet set since the condition depends only on it.
pub fn cor25_check(g: &Graph, facet_bound: usize) -> Cor25 {
    if let Err(c) = necessary_conditions(g) {
        let what = if matches!(c, Certificate::Claw { .. }) { "claw" } else { "chordless cycle" };
        return Cor25::No { reason: format!("graph contains a {what}") };
    }
    let c = clique_complex(g);
    let r = c.facets.len();
    if r > facet_bound {
        return Cor25::Unknown { facets: r, bound: facet_bound };
    }
    if r == 0 {
        return Cor25::Yes { order: LeafOrder { order: Vec::new(), branch: Vec::new() } };
    }
    let mut dead = std::collections::HashSet::new();
    let mut order = Vec::with_capacity(r);
    for first in 0..r {
        order.push(first);
        if cor25_extend(&c, &mut order, 1u64 << first, &mut dead) {
            let branch = (0..r)
                .map(|i| if i == 0 { None } else { branches(&c.facets, &order, i).first().copied() })
                .collect();
            return Cor25::Yes { order: LeafOrder { order, branch } };
        }
        order.pop();
    }
    Cor25::No { reason: "no leaf order meets every branch in a single vertex".into() }
}

fn cor25_extend(
    c: &CliqueComplex,
    order: &mut Vec<usize>,
    used: u64,
    dead: &mut std::collections::HashSet<u64>,
) -> bool {
    let r = c.facets.len();
    if order.len() == r {
        return true;
    }
    if dead.contains(&used) {
        return false;
    }
    for f in 0..r {
        if used >> f & 1 == 1 {
            continue;
        }
        order.push(f);
        let i = order.len() - 1;
        let br = branches(&c.facets, order, i);
        let ok = !br.is_empty()
            && br.iter().all(|&j| intersect_len(&c.facets[order[j]], &c.facets[f]) == 1);
        if ok && cor25_extend(c, order, used | 1 << f, dead) {
            return true;
        }
        order.pop();
    }
    dead.insert(used);
    false
}

/// Conditions (2)-(5) of the classification in order: blocks are
/// two-dimensional line graphs and lines are paths, the intersection tree
/// exists, gluing vertices are free on both sides, and degree-three nodes
/// are single triangles met at three distinct vertices.
fn structure_check(
    b: &crate::complex::BlockDecomposition,
) -> std::result::Result<IntersectionTree, TreeCondition> {
    for blk in &b.blocks2d {
        if let Ok(LineGraph2d::No { reason }) = is_two_dim_line_graph(blk) {
            return Err(TreeCondition::BlockNotLineGraph { block: blk.clone(), reason });
        }
    }
    for line in &b.lines1d {
        if line.path.is_none() {
            return Err(TreeCondition::LineNotPath { edges: line.edges.clone() });
        }
    }
    let tree = intersection_tree(b)
        .map_err(|f| TreeCondition::NotATree { violations: f.violations })?;
    for e in &tree.edges {
        let v = e.shared[0];
        for node in [e.a, e.b] {
            if !tree.nodes[node].free_vertices().contains(&v) {
                return Err(TreeCondition::GluingVertexNotFree {
                    vertex: v,
                    node,
                    node_facets: tree.nodes[node].facets.clone(),
                });
            }
        }
    }
    for (k, node) in tree.nodes.iter().enumerate() {
        if tree.degree(k) == 3 {
            let mut shared: Vec<usize> = tree
                .edges
                .iter()
                .filter(|e| e.a == k || e.b == k)
                .map(|e| e.shared[0])
                .collect();
            shared.sort_unstable();
            shared.dedup();
            if !(node.kind == NodeKind::Block2d && node.simplex && shared.len() == 3) {
                return Err(TreeCondition::DegreeThreeNotTriangle {
                    node: k,
                    node_facets: node.facets.clone(),
                });
            }
        }
    }
    Ok(tree)
}

/// Classification of a connected graph whose clique complex has
/// dimension at most two.
pub fn classify_dim2(g: &Graph) -> KoszulVerdict {
    let c = clique_complex(g);
    if !g.is_connected() {
        return KoszulVerdict::new(Status::OutOfTheoremScope, Vec::new())
            .note("graph is not connected; use classify for the component reduction");
    }
    if c.dim > 2 {
        return KoszulVerdict::new(Status::OutOfTheoremScope, Vec::new())
            .note(format!("clique complex has dimension {}", c.dim));
    }
    if let Err(cert) = necessary_conditions(g) {
        return KoszulVerdict::new(Status::NotKoszul, vec![cert]);
    }
    let b = block_decomposition(&c).expect("dimension checked");
    match structure_check(&b) {
        Ok(tree) => KoszulVerdict::new(Status::Koszul, vec![Certificate::IntersectionTree { tree }]),
        Err(failure) => {
            KoszulVerdict::new(Status::NotKoszul, vec![Certificate::TreeCondition { failure }])
        }
    }
}

fn classify_connected(g: &Graph, facet_bound: usize) -> KoszulVerdict {
    let c = clique_complex(g);
    let cor = cor25_check(g, facet_bound);
    let leaf_cert = |order: &LeafOrder| Certificate::LeafOrder {
        order: order.clone(),
        facets: order.facets(&c).into_iter().cloned().collect(),
    };
    if c.dim <= 2 {
        let mut v = classify_dim2(g);
        if let Cor25::Yes { order } = &cor {
            if v.status == Status::Koszul {
                v.certificates.insert(0, leaf_cert(order));
            } else {
                v = KoszulVerdict::new(Status::Koszul, vec![leaf_cert(order)])
                    .note("leaf-order condition holds but the structural classification disagrees");
            }
        }
        return v;
    }
    if let Err(cert) = necessary_conditions(g) {
        return KoszulVerdict::new(Status::NotKoszul, vec![cert]);
    }
    match cor {
        Cor25::Yes { order } => KoszulVerdict::new(Status::Koszul, vec![leaf_cert(&order)]),
        Cor25::No { reason } => KoszulVerdict::new(Status::Unknown, Vec::new())
            .note(format!("clique complex has dimension {}; {reason}", c.dim))
            .note("truncated Tor tables (tor_evidence) give evidence but not a proof"),
        Cor25::Unknown { facets, bound } => KoszulVerdict::new(Status::Unknown, Vec::new())
            .note(format!("{facets} facets exceed the leaf-order search bound {bound}"))
            .note("truncated Tor tables (tor_evidence) give evidence but not a proof"),
    }
}

/// Decides each connected component and combines: Koszul iff every
/// component is, not Koszul if some component is not, unknown otherwise.
pub fn classify(g: &Graph) -> KoszulVerdict {
    classify_with_bound(g, DEFAULT_FACET_BOUND)
}

pub fn classify_with_bound(g: &Graph, facet_bound: usize) -> KoszulVerdict {
    let comps = g.connected_components();
    if comps.len() <= 1 {
        return classify_connected(g, facet_bound);
    }
    let parts: Vec<(Vec<usize>, KoszulVerdict)> = comps
        .into_iter()
        .map(|vs| {
            let h = g.induced_subgraph(&vs).expect("component vertices are in range");
            (vs, classify_connected(&h, facet_bound))
        })
        .collect();
    let cert = |(vs, v): &(Vec<usize>, KoszulVerdict)| Certificate::Component {
        vertices: vs.clone(),
        verdict: Box::new(v.clone()),
    };
    if let Some(bad) = parts.iter().find(|p| p.1.status == Status::NotKoszul) {
        return KoszulVerdict::new(Status::NotKoszul, vec![cert(bad)]);
    }
    let status =
        if parts.iter().all(|p| p.1.is_koszul()) { Status::Koszul } else { Status::Unknown };
    KoszulVerdict::new(status, parts.iter().map(cert).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Remark27 {
    /// The intersection tree is a path; `labeling` is a closed labeling
    /// found by search (absent when the search bound was exceeded).
    ClosedLineTree { labeling: Option<Labeling> },
    /// The tree has a node of degree three; `closed` records the outcome
    /// of the labeling search.
    KoszulNotClosed { node: usize, closed: Option<bool> },
    NotApplicable { reason: String },
}

/// Splits Koszul graphs of dimension at most two by the shape of their
/// intersection tree.
pub fn remark27_predicate(g: &Graph) -> Remark27 {
    let v = classify_dim2(g);
    if v.status != Status::Koszul {
        return Remark27::NotApplicable {
            reason: format!("requires a connected Koszul graph of dimension <= 2, got {:?}", v.status),
        };
    }
    let tree = v
        .certificates
        .iter()
        .find_map(|c| match c {
            Certificate::IntersectionTree { tree } => Some(tree.clone()),
            _ => None,
        })
        .expect("Koszul verdict carries its tree");
    let search = find_closed_labeling(g, DEFAULT_LABELING_BOUND).ok();
    match (0..tree.nodes.len()).find(|&k| tree.degree(k) == 3) {
        None => Remark27::ClosedLineTree { labeling: search.flatten() },
        Some(node) => Remark27::KoszulNotClosed { node, closed: search.map(|s| s.is_some()) },
    }
}

/// Computes the Tor table of `S/J_G` and packages its off-diagonal part.
pub fn tor_evidence(g: &Graph, opts: &ResolutionOptions) -> Result<Certificate> {
    let table = tor_table(g, opts)?;
    let off_diagonal = table.off_diagonal(0);
    Ok(Certificate::TorEvidence { table, off_diagonal })
}
