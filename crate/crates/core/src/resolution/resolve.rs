//! Truncated minimal free resolutions of cyclic modules `A / N` by linear
//! algebra on multigraded pieces.
//!
//! The free module `F_i` has generators `g_k` of multidegree `deg_k`; its
//! piece in multidegree `alpha` has basis `s * g_k` with `deg_k <= alpha`
//! and `s` a standard monomial of multidegree `alpha - deg_k`. Degree by
//! degree, the kernel of `d_i` is computed on each piece, the part
//! generated from lower degrees is split off, and the complement supplies
//! the new generators of `F_{i+1}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::algebra::{multidegrees_of_total, GradedAlgebra, MultiDegree};
use super::linalg::{self, Echelon, SparseVec};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, PrimeField};

/// Default refusal threshold on the dimension of a graded piece.
pub const DEFAULT_GUARD: usize = 20_000;

/// Element of a free module: `(generator, monomial, coefficient)` terms.
pub type ModuleElement = Vec<(usize, Monomial, u64)>;

#[derive(Clone, Debug)]
pub struct Generator {
    pub degree: MultiDegree,
    /// `d(g)` in the previous free module.
    pub image: ModuleElement,
    /// Index of the originating candidate for generators of `F_1`.
    pub source: Option<usize>,
}

impl Generator {
    pub fn total_degree(&self) -> u16 {
        let n = self.degree.len() - 1;
        self.degree[..n].iter().sum()
    }
}

/// Monomial basis of a free module in one multidegree.
struct Basis {
    /// `(generator, offset, standard monomials of alpha - deg)`.
    blocks: Vec<(usize, usize, Arc<Vec<Monomial>>)>,
    offset_of: HashMap<usize, usize>,
    dim: usize,
}

impl Basis {
    fn build(alg: &mut GradedAlgebra, gens: &[Generator], alpha: &[u16]) -> Basis {
        let mut blocks = Vec::new();
        let mut offset_of = HashMap::new();
        let mut dim = 0;
        for (k, g) in gens.iter().enumerate() {
            if g.degree.iter().zip(alpha).all(|(a, b)| a <= b) {
                let rest: Vec<u16> = alpha.iter().zip(&g.degree).map(|(a, b)| a - b).collect();
                let std = alg.standard(&rest);
                if std.is_empty() {
                    continue;
                }
                offset_of.insert(k, dim);
                dim += std.len();
                blocks.push((k, dim - std.len(), std));
            }
        }
        Basis { blocks, offset_of, dim }
    }

    fn element(&self, v: &SparseVec) -> ModuleElement {
        v.iter()
            .map(|&(idx, c)| {
                let b = self.blocks.partition_point(|blk| blk.1 <= idx) - 1;
                let (k, off, std) = &self.blocks[b];
                (*k, std[idx - off].clone(), c)
            })
            .collect()
    }

    fn elements(&self) -> impl Iterator<Item = (usize, &Monomial)> {
        self.blocks.iter().flat_map(|(k, _, std)| std.iter().map(move |s| (*k, s)))
    }
}

/// `mu * e` in coordinates of `to`.
fn coordinates(alg: &mut GradedAlgebra, e: &ModuleElement, mu: &Monomial, to: &Basis) -> SparseVec {
    let p = alg.prime();
    let mut entries = Vec::new();
    for (k, s, c) in e {
        let off = to.offset_of[k];
        for &(idx, v) in alg.reduce_monomial(&s.mul(mu)).iter() {
            entries.push((off + idx, v * c % p));
        }
    }
    linalg::collect(p, entries)
}

fn check_guard(what: &str, dim: usize, guard: usize) -> Result<()> {
    if dim > guard {
        return Err(Error::SizeGuard { what: what.to_string(), dim, guard });
    }
    Ok(())
}

/// Truncated minimal free resolution of `A / N`.
pub struct Resolution {
    alg: GradedAlgebra,
    /// `levels[i]` are the generators of `F_i`; `F_0 = A`.
    pub levels: Vec<Vec<Generator>>,
    pub max_degree: u16,
    guard: usize,
}

impl Resolution {
    /// Resolves `A / N` for `N` generated by the multihomogeneous
    /// `candidates`, computing `F_0..=F_{max_level}` in total degrees up to
    /// `max_degree`.
    pub fn cyclic(
        alg: GradedAlgebra,
        candidates: &[Polynomial<PrimeField>],
        max_level: usize,
        max_degree: u16,
        guard: usize,
    ) -> Result<Resolution> {
        let h = alg.hilbert(max_degree as usize);
        check_guard(&format!("dim A_{max_degree}"), h[max_degree as usize] as usize, guard)?;
        let n = alg.vertices();
        let zero = vec![0u16; n + 1];
        let f0 = vec![Generator { degree: zero, image: Vec::new(), source: None }];
        let mut res = Resolution { alg, levels: vec![f0], max_degree, guard };
        if max_level >= 1 {
            let f1 = res.ideal_generators(candidates)?;
            res.levels.push(f1);
        }
        for i in 2..=max_level {
            let next = res.kernel_generators(i - 1)?;
            res.levels.push(next);
        }
        Ok(res)
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.alg
    }

    pub fn prime(&self) -> u64 {
        self.alg.prime()
    }

    /// `(i, j) -> number of generators of F_i of total degree j`.
    pub fn betti(&self) -> BTreeMap<(usize, u16), u64> {
        let mut out = BTreeMap::new();
        for (i, gens) in self.levels.iter().enumerate() {
            for g in gens {
                *out.entry((i, g.total_degree())).or_insert(0) += 1;
            }
        }
        out
    }

    fn variables(&self) -> Vec<(Monomial, MultiDegree)> {
        let nv = self.alg.nvars();
        (0..nv).map(|v| (Monomial::var(nv, v), self.alg.variable_degree(v))).collect()
    }

    fn min_total(gens: &[Generator]) -> u16 {
        gens.iter().map(|g| g.total_degree()).min().unwrap_or(u16::MAX)
    }

    /// Minimal generators of `N`, chosen among the candidates in order.
    fn ideal_generators(&mut self, candidates: &[Polynomial<PrimeField>]) -> Result<Vec<Generator>> {
        let n = self.alg.vertices();
        let p = self.prime();
        let vars = self.variables();
        let mut by_degree: HashMap<MultiDegree, Vec<usize>> = HashMap::new();
        for (k, c) in candidates.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let alpha = c.terms()[0].0.multidegree();
            if c.terms().iter().any(|(m, _)| m.multidegree() != alpha) {
                return Err(Error::Spec("module generator is not multihomogeneous".into()));
            }
            by_degree.entry(alpha).or_default().push(k);
        }
        let f0 = self.levels[0].clone();
        let mut span: HashMap<MultiDegree, Vec<ModuleElement>> = HashMap::new();
        let mut out = Vec::new();
        for t in 1..=self.max_degree {
            for alpha in multidegrees_of_total(n, t) {
                let b0 = Basis::build(&mut self.alg, &f0, &alpha);
                if b0.dim == 0 {
                    continue;
                }
                check_guard(&format!("free module piece {alpha:?}"), b0.dim, self.guard)?;
                let mut ech = Echelon::new(p);
                for (v, dv) in &vars {
                    if let Some(beta) = minus(&alpha, dv) {
                        if let Some(lower) = span.get(&beta) {
                            for e in lower {
                                let c = coordinates(&mut self.alg, e, v, &b0);
                                ech.insert(&c);
                            }
                        }
                    }
                }
                for &k in by_degree.get(&alpha).map(|v| v.as_slice()).unwrap_or(&[]) {
                    let c = self.alg.coordinates(&candidates[k]);
                    if ech.insert(&c) {
                        out.push(Generator {
                            degree: alpha.clone(),
                            image: b0.element(&c),
                            source: Some(k),
                        });
                    }
                }
                if ech.rank() > 0 {
                    span.insert(alpha, ech.rows().iter().map(|r| b0.element(r)).collect());
                }
            }
        }
        Ok(out)
    }

    /// Kernel of `d_i : F_i -> F_{i-1}` on the piece of multidegree `alpha`,
    /// in coordinates of the piece of `F_i`.
    fn kernel_piece(
        alg: &mut GradedAlgebra,
        fi: &[Generator],
        fim1: &[Generator],
        alpha: &[u16],
        guard: usize,
    ) -> Result<(Basis, Vec<SparseVec>)> {
        let b1 = Basis::build(alg, fi, alpha);
        if b1.dim == 0 {
            return Ok((b1, Vec::new()));
        }
        let b0 = Basis::build(alg, fim1, alpha);
        check_guard(&format!("free module piece {alpha:?}"), b1.dim.max(b0.dim), guard)?;
        let cells: Vec<(usize, Monomial)> = b1.elements().map(|(k, s)| (k, s.clone())).collect();
        let rows: Vec<SparseVec> =
            cells.iter().map(|(k, s)| coordinates(alg, &fi[*k].image, s, &b0)).collect();
        let ker = linalg::kernel(alg.prime(), &rows, b0.dim);
        Ok((b1, ker))
    }

    /// Minimal generators of `ker d_i`, which generate `F_{i+1}`.
    fn kernel_generators(&mut self, i: usize) -> Result<Vec<Generator>> {
        let n = self.alg.vertices();
        let p = self.prime();
        let vars = self.variables();
        let fi = self.levels[i].clone();
        let fim1 = self.levels[i - 1].clone();
        let mut kernels: HashMap<MultiDegree, Vec<ModuleElement>> = HashMap::new();
        let mut out = Vec::new();
        let start = Self::min_total(&fi);
        for t in start..=self.max_degree {
            for alpha in multidegrees_of_total(n, t) {
                let (b1, ker) = Self::kernel_piece(&mut self.alg, &fi, &fim1, &alpha, self.guard)?;
                if ker.is_empty() {
                    continue;
                }
                let mut ech = Echelon::new(p);
                'lower: for (v, dv) in &vars {
                    if let Some(beta) = minus(&alpha, dv) {
                        if let Some(lower) = kernels.get(&beta) {
                            for e in lower {
                                ech.insert(&coordinates(&mut self.alg, e, v, &b1));
                                if ech.rank() == ker.len() {
                                    break 'lower;
                                }
                            }
                        }
                    }
                }
                for k in &ker {
                    if ech.rank() == ker.len() {
                        break;
                    }
                    if ech.insert(k) {
                        assert_minimal(&fi, &alpha, &b1, k);
                        out.push(Generator {
                            degree: alpha.clone(),
                            image: b1.element(k),
                            source: None,
                        });
                    }
                }
                kernels.insert(alpha, ker.iter().map(|k| b1.element(k)).collect());
            }
        }
        Ok(out)
    }

    /// Whether `e` (in `F_i`, multidegree `alpha`, `i >= 1`) is a cycle that
    /// is not generated by cycles of lower degree, i.e. it survives as a
    /// minimal generator of `ker d_i`.
    pub fn is_minimal_cycle(&mut self, i: usize, alpha: &[u16], e: &ModuleElement) -> Result<bool> {
        let fi = self.levels[i].clone();
        let fim1 = self.levels[i - 1].clone();
        let p = self.prime();
        let b1 = Basis::build(&mut self.alg, &fi, alpha);
        let b0 = Basis::build(&mut self.alg, &fim1, alpha);
        let one = Monomial::one(self.alg.nvars());
        let mut image = Vec::new();
        for (k, s, c) in e {
            let part = coordinates(&mut self.alg, &fi[*k].image, s, &b0);
            image = linalg::axpy(p, &image, *c, &part);
        }
        if !image.is_empty() {
            return Ok(false);
        }
        let mut ech = Echelon::new(p);
        for (v, dv) in self.variables() {
            if let Some(beta) = minus(alpha, &dv) {
                let (bb, ker) = Self::kernel_piece(&mut self.alg, &fi, &fim1, &beta, self.guard)?;
                for k in &ker {
                    ech.insert(&coordinates(&mut self.alg, &bb.element(k), &v, &b1));
                }
            }
        }
        let target = coordinates(&mut self.alg, e, &one, &b1);
        Ok(!target.is_empty() && !ech.contains(&target))
    }

    /// Generator of `F_1` coming from candidate `k`, if it was kept.
    pub fn generator_for_candidate(&self, k: usize) -> Option<usize> {
        self.levels.get(1)?.iter().position(|g| g.source == Some(k))
    }
}

fn minus(alpha: &[u16], d: &[u16]) -> Option<MultiDegree> {
    alpha.iter().zip(d).map(|(a, b)| a.checked_sub(*b)).collect()
}

/// A minimal resolution never maps a generator onto a unit multiple of a
/// generator of the same degree.
fn assert_minimal(fi: &[Generator], alpha: &[u16], b1: &Basis, k: &SparseVec) {
    for (g, off, _) in &b1.blocks {
        if fi[*g].degree == alpha {
            assert!(
                k.binary_search_by_key(off, |e| e.0).is_err(),
                "non-minimal differential: unit entry at generator {g}"
            );
        }
    }
}
