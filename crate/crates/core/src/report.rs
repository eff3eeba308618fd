//! JSON reports produced by the `bei` command line tool.
//!
//! Every report is a deterministic function of its input except the
//! `timing_ms` field; [`Report::canonical_json`] drops it for comparison.

use std::time::Instant;

use serde::Serialize;

use crate::classify::{
    classify, cor25_check, necessary_conditions, remark27_predicate, Certificate, Cor25,
    KoszulVerdict, Remark27, DEFAULT_FACET_BOUND,
};
use crate::complex::{clique_complex, free_vertices, leaf_order, LeafOrder};
use crate::error::{Error, Result};
use crate::graph::{
    find_claw, find_closed_labeling, is_chordal, is_closed_with_labeling, Chordality, ClawWitness,
    Graph, Labeling, DEFAULT_LABELING_BOUND,
};
use crate::poly::{
    binomial_edge_ideal, buchberger, hilbert_series, is_quadratic_gb, Field, MonomialOrder,
    PrimeField, Rationals, Ring,
};
use crate::resolution::GradedTable;

/// Echo of the inputs that determine a report.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Input {
    pub source: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Labeling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trunc: Option<(usize, u16)>,
}

impl Input {
    pub fn new(source: impl Into<String>, g: &Graph) -> Self {
        Input { source: source.into(), n: g.n(), edges: g.edges().to_vec(), ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Closedness {
    Closed { labeling: Labeling },
    NotClosed,
    SearchRefused { reason: String },
}

impl Closedness {
    pub fn of(g: &Graph, bound: usize) -> Self {
        match find_closed_labeling(g, bound) {
            Ok(Some(labeling)) => Closedness::Closed { labeling },
            Ok(None) => Closedness::NotClosed,
            Err(e) => Closedness::SearchRefused { reason: e.to_string() },
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Closedness::Closed { .. } => Some(true),
            Closedness::NotClosed => Some(false),
            Closedness::SearchRefused { .. } => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexSummary {
    pub dim: i64,
    pub facets: Vec<Vec<usize>>,
    pub free_vertices: Vec<usize>,
    pub leaf_order: Option<LeafOrder>,
}

/// Combinatorial verdicts, each with its certificate.
#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub chordal: Chordality,
    pub claw_free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claw: Option<ClawWitness>,
    pub closed: Closedness,
    pub components: Vec<Vec<usize>>,
    pub clique_complex: ComplexSummary,
}

pub fn analyze(g: &Graph) -> Analysis {
    let c = clique_complex(g);
    let claw = find_claw(g);
    Analysis {
        chordal: is_chordal(g),
        claw_free: claw.is_none(),
        claw,
        closed: Closedness::of(g, DEFAULT_LABELING_BOUND),
        components: g.connected_components(),
        clique_complex: ComplexSummary {
            dim: c.dim,
            free_vertices: free_vertices(&c),
            leaf_order: leaf_order(&c),
            facets: c.facets,
        },
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Necessary {
    Pass,
    Fail { certificate: Certificate },
}

/// The Koszul verdict together with the individual criteria behind it.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub verdict: KoszulVerdict,
    pub certificates_verified: bool,
    pub necessary_conditions: Necessary,
    pub leaf_order_condition: Cor25,
    pub closed_line_tree: Remark27,
}

pub fn classification(g: &Graph) -> Classification {
    let verdict = classify(g);
    Classification {
        certificates_verified: verdict.verify(g),
        verdict,
        necessary_conditions: match necessary_conditions(g) {
            Ok(()) => Necessary::Pass,
            Err(certificate) => Necessary::Fail { certificate },
        },
        leaf_order_condition: cor25_check(g, DEFAULT_FACET_BOUND),
        closed_line_tree: remark27_predicate(g),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GbSummary {
    pub generators: Vec<String>,
    pub quadratic: bool,
    pub max_degree: u32,
    pub hilbert: Vec<u64>,
}

/// Field selector for Groebner basis computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(PrimeField),
    Rationals,
}

impl FieldSpec {
    /// Parses `QQ`, a prime `p`, or `GF(p)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "QQ" || t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')).unwrap_or(t);
        let p: u64 = digits.parse().map_err(|_| Error::Spec(format!("unknown field `{text}`")))?;
        Ok(FieldSpec::Prime(PrimeField::new(p)?))
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Prime(f) => f.name(),
            FieldSpec::Rationals => Rationals.name(),
        }
    }

    /// The prime field, or an error for fields the resolution engine does
    /// not support.
    pub fn prime(&self) -> Result<PrimeField> {
        match self {
            FieldSpec::Prime(f) => Ok(*f),
            FieldSpec::Rationals => {
                Err(Error::Spec("resolutions are computed over prime fields only".into()))
            }
        }
    }
}

/// Reduced Groebner basis of `J_G` for `g` relabeled by `labeling`.
pub fn gb_summary(
    g: &Graph,
    field: FieldSpec,
    order: &str,
    labeling: &Labeling,
    hilbert_degree: usize,
) -> Result<GbSummary> {
    let h = g.relabel(labeling)?;
    let order = MonomialOrder::parse(order, 2 * h.n())?;
    match field {
        FieldSpec::Prime(f) => gb_in(&h, Ring::new(h.n(), f, order)?, hilbert_degree),
        FieldSpec::Rationals => gb_in(&h, Ring::new(h.n(), Rationals, order)?, hilbert_degree),
    }
}

fn gb_in<F: Field>(g: &Graph, ring: Ring<F>, d: usize) -> Result<GbSummary> {
    let gens = binomial_edge_ideal(g, &ring)?;
    let gb = buchberger(&ring, &gens);
    Ok(GbSummary {
        generators: gb.generators.iter().map(|p| ring.render(p)).collect(),
        quadratic: is_quadratic_gb(&gb).is_ok(),
        max_degree: gb.max_degree(),
        hilbert: hilbert_series(&gb, d),
    })
}

/// Whether the lex Groebner basis for `labeling` is quadratic.
pub fn quadratic_lex_gb(g: &Graph, labeling: &Labeling) -> Result<bool> {
    let h = g.relabel(labeling)?;
    let ring = Ring::lex(h.n(), PrimeField::default());
    Ok(is_quadratic_gb(&buchberger(&ring, &binomial_edge_ideal(&h, &ring)?)).is_ok())
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Input,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GbSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<GradedTable>,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(command: &str, input: Input) -> Self {
        Report {
            command: command.into(),
            input,
            analysis: None,
            classification: None,
            groebner: None,
            table: None,
            timing_ms: 0,
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// JSON without the timing field.
    pub fn canonical_json(&self) -> String {
        canonical(self)
    }

    /// Human readable rendering.
    pub fn pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        if let Some(t) = &self.table {
            s.push('\n');
            s.push_str(&t.render());
        }
        s
    }
}

/// Serializes `value` with any top-level `timing_ms` removed.
pub fn canonical<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("reports serialize");
    if let Some(map) = v.as_object_mut() {
        map.remove("timing_ms");
    }
    v.to_string()
}

/// One row of the corpus aggregate.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusRow {
    pub name: String,
    pub n: usize,
    pub edges: usize,
    pub chordal: bool,
    pub claw_free: bool,
    pub closed: Option<bool>,
    pub dim: i64,
    pub status: crate::classify::Status,
    pub certificates_verified: bool,
    /// Lex Groebner basis checks: identity labeling and, when closed, the
    /// closed labeling found by search.
    pub closed_vs_quadratic_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tor: Option<TableOutcome>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum TableOutcome {
    Table { table: GradedTable, off_diagonal: Vec<(usize, u16, u64)> },
    Refused { reason: String },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CrossChecks {
    pub graphs: usize,
    pub within_labeling_bound: usize,
    pub closed_vs_quadratic_agreements: usize,
    pub certificates_verified: usize,
    pub disagreements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub command: String,
    pub rows: Vec<CorpusRow>,
    pub cross_checks: CrossChecks,
    pub timing_ms: u128,
}

/// Closed for the identity labeling iff the identity lex basis is
/// quadratic, and the same for the closed labeling found by search.
fn closed_vs_quadratic(g: &Graph, closed: &Closedness) -> Result<Option<bool>> {
    let Some(_) = closed.as_bool() else { return Ok(None) };
    let id = Labeling::identity(g.n());
    let mut ok = is_closed_with_labeling(g, &id)?.is_none() == quadratic_lex_gb(g, &id)?;
    if let Closedness::Closed { labeling } = closed {
        ok &= quadratic_lex_gb(g, labeling)?;
    }
    Ok(Some(ok))
}

/// Builds one corpus row; `tor` computes the Tor table within the given
/// truncation.
pub fn corpus_row(
    name: &str,
    g: &Graph,
    tor: Option<&crate::resolution::ResolutionOptions>,
) -> Result<CorpusRow> {
    let closed = Closedness::of(g, DEFAULT_LABELING_BOUND);
    let verdict = classify(g);
    let tor = tor.map(|opts| match crate::resolution::tor_table(g, opts) {
        Ok(table) => TableOutcome::Table { off_diagonal: table.off_diagonal(0), table },
        Err(e) => TableOutcome::Refused { reason: e.to_string() },
    });
    Ok(CorpusRow {
        name: name.into(),
        n: g.n(),
        edges: g.edge_count(),
        chordal: is_chordal(g).is_chordal(),
        claw_free: find_claw(g).is_none(),
        closed_vs_quadratic_agree: closed_vs_quadratic(g, &closed)?,
        closed: closed.as_bool(),
        dim: clique_complex(g).dim,
        certificates_verified: verdict.verify(g),
        status: verdict.status,
        tor,
    })
}

pub fn cross_checks(rows: &[CorpusRow]) -> CrossChecks {
    let mut c = CrossChecks { graphs: rows.len(), ..Default::default() };
    for r in rows {
        if let Some(agree) = r.closed_vs_quadratic_agree {
            c.within_labeling_bound += 1;
            if agree {
                c.closed_vs_quadratic_agreements += 1;
            } else {
                c.disagreements.push(format!("{}: closed vs quadratic lex basis", r.name));
            }
        }
        if r.certificates_verified {
            c.certificates_verified += 1;
        } else {
            c.disagreements.push(format!("{}: certificate failed to verify", r.name));
        }
    }
    c
}

/// Wall-clock timer for the `timing_ms` fields.
pub struct Timer(Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(Instant::now())
    }

    pub fn ms(&self) -> u128 {
        self.0.elapsed().as_millis()
    }
}
