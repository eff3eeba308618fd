//! Quotients `A = S / I` of the polynomial ring by an ideal homogeneous for
//! the fine multigrading, with standard-monomial bases of graded pieces.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::graph::Graph;
use crate::poly::{
    binomial_edge_ideal, buchberger, hilbert_series, Field, GroebnerBasis, Monomial, Polynomial,
    PrimeField, Ring,
};

/// Multidegree: vertex degrees followed by the number of `x` factors.
pub type MultiDegree = Vec<u16>;

pub struct GradedAlgebra {
    ring: Ring<PrimeField>,
    gb: GroebnerBasis<PrimeField>,
    leads: Vec<Monomial>,
    standard: HashMap<MultiDegree, Arc<Vec<Monomial>>>,
    position: HashMap<Monomial, usize>,
    nf: HashMap<Monomial, Arc<Vec<(usize, u64)>>>,
}

impl GradedAlgebra {
    /// `S / I` for the ideal generated by `gens`; its Gröbner basis is
    /// computed under degrevlex.
    pub fn new(n: usize, field: PrimeField, gens: &[Polynomial<PrimeField>]) -> Self {
        let ring = Ring::degrevlex(n, field);
        let gb = buchberger(&ring, gens);
        let leads = gb.lead_monomials();
        GradedAlgebra {
            ring,
            gb,
            leads,
            standard: HashMap::new(),
            position: HashMap::new(),
            nf: HashMap::new(),
        }
    }

    /// `S / J_G`.
    pub fn binomial_edge_ring(g: &Graph, field: PrimeField) -> Result<Self> {
        let ring = Ring::degrevlex(g.n(), field);
        let gens = binomial_edge_ideal(g, &ring)?;
        Ok(GradedAlgebra::new(g.n(), field, &gens))
    }

    /// The polynomial ring itself.
    pub fn polynomial_ring(n: usize, field: PrimeField) -> Self {
        GradedAlgebra::new(n, field, &[])
    }

    pub fn ring(&self) -> &Ring<PrimeField> {
        &self.ring
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<PrimeField> {
        &self.gb
    }

    pub fn prime(&self) -> u64 {
        self.ring.field.characteristic()
    }

    pub fn vertices(&self) -> usize {
        self.ring.vertices()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// `dim_K A_t` for `t = 0..=d`.
    pub fn hilbert(&self, d: usize) -> Vec<u64> {
        hilbert_series(&self.gb, d)
    }

    /// Multidegree of variable `v`.
    pub fn variable_degree(&self, v: usize) -> MultiDegree {
        let n = self.vertices();
        let mut d = vec![0u16; n + 1];
        d[v % n] = 1;
        if v < n {
            d[n] = 1;
        }
        d
    }

    /// Standard monomials of multidegree `alpha`, decreasing in the order.
    pub fn standard(&mut self, alpha: &[u16]) -> Arc<Vec<Monomial>> {
        if let Some(s) = self.standard.get(alpha) {
            return s.clone();
        }
        let mut list: Vec<Monomial> = monomials_of_multidegree(alpha)
            .into_iter()
            .filter(|m| !self.leads.iter().any(|l| l.divides(m)))
            .collect();
        list.sort_by(|a, b| self.ring.cmp(b, a));
        for (k, m) in list.iter().enumerate() {
            self.position.insert(m.clone(), k);
        }
        let list = Arc::new(list);
        self.standard.insert(alpha.to_vec(), list.clone());
        list
    }

    /// Monomial basis of `A_d`: the standard monomials of total degree `d`
    /// in decreasing order.
    pub fn graded_piece(&self, d: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = crate::poly::monomial::monomials_of_degree(self.nvars(), d)
            .into_iter()
            .filter(|m| !self.leads.iter().any(|l| l.divides(m)))
            .collect();
        out.sort_by(|a, b| self.ring.cmp(b, a));
        out
    }

    /// Normal form of a monomial as coefficients on the standard basis of
    /// its multidegree.
    pub fn reduce_monomial(&mut self, m: &Monomial) -> Arc<Vec<(usize, u64)>> {
        if let Some(v) = self.nf.get(m) {
            return v.clone();
        }
        let alpha = m.multidegree();
        self.standard(&alpha);
        let v = if self.leads.iter().any(|l| l.divides(m)) {
            let f = self.ring.monomial(m.clone(), 1);
            let r = self.ring.normal_form(&f, &self.gb.generators);
            let mut v: Vec<(usize, u64)> =
                r.terms().iter().map(|(t, c)| (self.position[t], *c)).collect();
            v.sort_unstable_by_key(|e| e.0);
            v
        } else {
            vec![(self.position[m], 1)]
        };
        let v = Arc::new(v);
        self.nf.insert(m.clone(), v.clone());
        v
    }

    /// Coordinates of a multihomogeneous polynomial in the standard basis
    /// of its multidegree.
    pub fn coordinates(&mut self, f: &Polynomial<PrimeField>) -> Vec<(usize, u64)> {
        let p = self.prime();
        let mut entries = Vec::new();
        for (m, c) in f.terms() {
            for &(k, v) in self.reduce_monomial(m).iter() {
                entries.push((k, self.ring.field.mul(&v, c) % p));
            }
        }
        super::linalg::collect(p, entries)
    }
}

/// All monomials with the given multidegree.
pub fn monomials_of_multidegree(alpha: &[u16]) -> Vec<Monomial> {
    let n = alpha.len() - 1;
    let mut out = Vec::new();
    let mut xs = vec![0u16; n];
    fn rec(alpha: &[u16], n: usize, i: usize, left: u16, xs: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == n {
            if left == 0 {
                let mut e = xs.clone();
                e.extend((0..n).map(|k| alpha[k] - xs[k]));
                out.push(Monomial::from_exps(e));
            }
            return;
        }
        let rest: u16 = alpha[i + 1..n].iter().sum();
        for a in 0..=alpha[i].min(left) {
            if left - a > rest {
                continue;
            }
            xs[i] = a;
            rec(alpha, n, i + 1, left - a, xs, out);
        }
        xs[i] = 0;
    }
    rec(alpha, n, 0, alpha[n], &mut xs, &mut out);
    out
}

/// All multidegrees over `n` vertices of total degree `t`.
pub fn multidegrees_of_total(n: usize, t: u16) -> Vec<MultiDegree> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(n: usize, i: usize, left: u16, t: u16, cur: &mut Vec<u16>, out: &mut Vec<MultiDegree>) {
        if i + 1 == n {
            cur[i] = left;
            for x in 0..=t {
                let mut a = cur.clone();
                a.push(x);
                out.push(a);
            }
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a;
            rec(n, i + 1, left - a, t, cur, out);
        }
    }
    if n == 0 {
        if t == 0 {
            out.push(vec![0]);
        }
        return out;
    }
    rec(n, 0, t, t, &mut cur, &mut out);
    out
}
