//! Betti tables over `S`, Tor tables of the residue field, resolutions of
//! ideals generated by variables, and consistency checks on them.

use serde::{Deserialize, Serialize};

use super::algebra::GradedAlgebra;
use super::resolve::{Resolution, DEFAULT_GUARD};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{binomial_edge_ideal, Field, Polynomial, PrimeField, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableKind {
    #[serde(rename = "tor")]
    Tor,
    #[serde(rename = "betti_S")]
    BettiS,
    #[serde(rename = "module_over_A")]
    ModuleOverA,
}

/// Nonzero entries `(i, j, value)` within the truncation, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedTable {
    pub kind: TableKind,
    pub field: String,
    pub trunc: (usize, u16),
    pub entries: Vec<(usize, u16, u64)>,
}

impl GradedTable {
    pub fn get(&self, i: usize, j: u16) -> u64 {
        self.entries.iter().find(|e| e.0 == i && e.1 == j).map_or(0, |e| e.2)
    }

    /// Entries with `j != i + shift`.
    pub fn off_diagonal(&self, shift: u16) -> Vec<(usize, u16, u64)> {
        self.entries.iter().copied().filter(|&(i, j, _)| j != i as u16 + shift).collect()
    }

    /// Rows `i` as dense vectors indexed by `j`.
    pub fn dense(&self) -> Vec<Vec<u64>> {
        let (imax, jmax) = self.trunc;
        let mut out = vec![vec![0u64; jmax as usize + 1]; imax + 1];
        for &(i, j, v) in &self.entries {
            out[i][j as usize] = v;
        }
        out
    }

    /// Plain text grid with rows `i` and columns `j`.
    pub fn render(&self) -> String {
        let mut s = format!("{:?} over {}  (i <= {}, j <= {})\n", self.kind, self.field, self.trunc.0, self.trunc.1);
        s.push_str("  i\\j");
        for j in 0..=self.trunc.1 {
            s.push_str(&format!("{j:>6}"));
        }
        s.push('\n');
        for (i, row) in self.dense().iter().enumerate() {
            s.push_str(&format!("{i:>5}"));
            for v in row {
                if *v == 0 {
                    s.push_str("     .");
                } else {
                    s.push_str(&format!("{v:>6}"));
                }
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ResolutionOptions {
    pub field: PrimeField,
    pub i_max: usize,
    pub j_max: u16,
    pub guard: usize,
}

impl Default for ResolutionOptions {
    fn default() -> Self {
        ResolutionOptions { field: PrimeField::default(), i_max: 3, j_max: 6, guard: DEFAULT_GUARD }
    }
}

impl ResolutionOptions {
    pub fn new(i_max: usize, j_max: u16) -> Self {
        ResolutionOptions { i_max, j_max, ..Default::default() }
    }

    pub fn with_field(self, field: PrimeField) -> Self {
        ResolutionOptions { field, ..self }
    }
}

fn table(kind: TableKind, res: &Resolution, opts: &ResolutionOptions, shift: usize) -> GradedTable {
    let entries = res
        .betti()
        .into_iter()
        .filter(|&((i, j), _)| i >= shift && i - shift <= opts.i_max && j <= opts.j_max)
        .map(|((i, j), v)| (i - shift, j, v))
        .collect();
    GradedTable { kind, field: opts.field.name(), trunc: (opts.i_max, opts.j_max), entries }
}

/// Resolution of `S / J_G` over the polynomial ring.
pub fn resolution_over_s(g: &Graph, opts: &ResolutionOptions) -> Result<Resolution> {
    let alg = GradedAlgebra::polynomial_ring(g.n(), opts.field);
    let gens = binomial_edge_ideal(g, alg.ring())?;
    Resolution::cyclic(alg, &gens, opts.i_max, opts.j_max, opts.guard)
}

/// Graded Betti numbers `beta_ij` of `S / J_G` over `S`.
pub fn betti_table_over_s(g: &Graph, opts: &ResolutionOptions) -> Result<GradedTable> {
    Ok(table(TableKind::BettiS, &resolution_over_s(g, opts)?, opts, 0))
}

/// `dim_K Tor^A_i(K, K)_j` for `A = S / J_G`.
pub fn tor_table(g: &Graph, opts: &ResolutionOptions) -> Result<GradedTable> {
    let alg = GradedAlgebra::binomial_edge_ring(g, opts.field)?;
    let ring = alg.ring().clone();
    let vars: Vec<Polynomial<PrimeField>> = (0..ring.nvars()).map(|v| ring.var(v)).collect();
    let res = Resolution::cyclic(alg, &vars, opts.i_max, opts.j_max, opts.guard)?;
    Ok(table(TableKind::Tor, &res, opts, 0))
}

/// Betti numbers of the ideal of `A = S / J_G` generated by the given
/// variables (indices as in [`crate::poly::monomial::var_name`]).
/// Entry `(i, j)` is `beta^A_{i+1, j}(A / N)`.
pub fn module_resolution_over_a(
    g: &Graph,
    variables: &[usize],
    opts: &ResolutionOptions,
) -> Result<GradedTable> {
    let alg = GradedAlgebra::binomial_edge_ring(g, opts.field)?;
    let ring = alg.ring().clone();
    if let Some(&v) = variables.iter().find(|&&v| v >= ring.nvars()) {
        return Err(Error::Spec(format!("variable index {v} out of range")));
    }
    let gens: Vec<Polynomial<PrimeField>> = variables.iter().map(|&v| ring.var(v)).collect();
    let res = Resolution::cyclic(alg, &gens, opts.i_max + 1, opts.j_max, opts.guard)?;
    Ok(table(TableKind::ModuleOverA, &res, opts, 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Lemma12 {
    /// `beta_{2,j} != 0` with `j > 4`.
    NotKoszul { j: u16 },
    Inconclusive,
}

/// Quadratic-ideal obstruction: a second syzygy of degree above four.
pub fn lemma12_test(g: &Graph, j_max: u16, opts: &ResolutionOptions) -> Result<Lemma12> {
    let opts = ResolutionOptions { i_max: 2, j_max, ..*opts };
    let t = betti_table_over_s(g, &opts)?;
    Ok(match (5..=j_max).find(|&j| t.get(2, j) != 0) {
        Some(j) => Lemma12::NotKoszul { j },
        None => Lemma12::Inconclusive,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Convolution {
    Pass,
    Fail { i: usize, j: u16, expected: u64, found: u64 },
}

/// Tor table of a disjoint union against the convolution of the factors'
/// tables.
pub fn tensor_convolution_check(g1: &Graph, g2: &Graph, opts: &ResolutionOptions) -> Result<Convolution> {
    let t1 = tor_table(g1, opts)?.dense();
    let t2 = tor_table(g2, opts)?.dense();
    let tu = tor_table(&g1.disjoint_union(g2), opts)?.dense();
    for p in 0..=opts.i_max {
        for q in 0..=opts.j_max as usize {
            let mut expected = 0;
            for i in 0..=p {
                for k in 0..=q {
                    expected += t1[i][k] * t2[p - i][q - k];
                }
            }
            if expected != tu[p][q] {
                return Ok(Convolution::Fail { i: p, j: q as u16, expected, found: tu[p][q] });
            }
        }
    }
    Ok(Convolution::Pass)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Checks `sum_i (-1)^i sum_j beta_ij h^S_{t-j} = h^{S/J_G}_t` for all `t`
/// where the truncated table is complete. Returns the degrees checked or
/// the first failing degree.
pub fn euler_check_over_s(g: &Graph, t: &GradedTable) -> std::result::Result<Vec<u16>, u16> {
    let nv = 2 * g.n() as i64;
    let ring = Ring::degrevlex(g.n(), PrimeField::default());
    let gb = crate::poly::buchberger(&ring, &binomial_edge_ideal(g, &ring).expect("sizes match"));
    let top = (t.trunc.0 as u16 + 1).min(t.trunc.1);
    let h = crate::poly::hilbert_series(&gb, top as usize);
    let hs = |d: i64| binomial(nv - 1 + d, d);
    let mut checked = Vec::new();
    for d in 0..=top {
        let lhs: i64 = t
            .entries
            .iter()
            .filter(|e| e.1 <= d)
            .map(|&(i, j, v)| (if i % 2 == 0 { 1 } else { -1 }) * v as i64 * hs((d - j) as i64))
            .sum();
        if lhs != h[d as usize] as i64 {
            return Err(d);
        }
        checked.push(d);
    }
    Ok(checked)
}

/// Checks `sum_i (-1)^i sum_j Tor_ij h^A_{t-j} = [t = 0]` for `t <= i_max`.
pub fn euler_check_tor(g: &Graph, t: &GradedTable) -> std::result::Result<Vec<u16>, u16> {
    let ring = Ring::degrevlex(g.n(), PrimeField::default());
    let gb = crate::poly::buchberger(&ring, &binomial_edge_ideal(g, &ring).expect("sizes match"));
    let top = (t.trunc.0 as u16).min(t.trunc.1);
    let h = crate::poly::hilbert_series(&gb, top as usize);
    let mut checked = Vec::new();
    for d in 0..=top {
        let lhs: i64 = t
            .entries
            .iter()
            .filter(|e| e.1 <= d)
            .map(|&(i, j, v)| (if i % 2 == 0 { 1 } else { -1 }) * v as i64 * h[(d - j) as usize] as i64)
            .sum();
        if lhs != i64::from(d == 0) {
            return Err(d);
        }
        checked.push(d);
    }
    Ok(checked)
}
