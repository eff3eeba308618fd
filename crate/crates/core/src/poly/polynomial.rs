//! Sparse polynomials and the ring context that carries their field and
//! monomial order.

use std::cmp::Ordering;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Terms sorted strictly decreasing under the ring's order; no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Common vertex multidegree of all terms, if there is one.
    pub fn vertex_multidegree(&self) -> Option<Vec<u16>> {
        let first = self.terms.first()?.0.vertex_degree();
        self.terms.iter().all(|(m, _)| m.vertex_degree() == first).then_some(first)
    }
}

/// The polynomial ring `K[x_1..x_n, y_1..y_n]` with a monomial order.
#[derive(Clone, Debug)]
pub struct Ring<F: Field> {
    n: usize,
    pub field: F,
    pub order: MonomialOrder,
}

impl<F: Field> Ring<F> {
    /// Ring for a graph on `n` vertices (`2n` variables).
    pub fn new(n: usize, field: F, order: MonomialOrder) -> Result<Self> {
        if order.nvars() != 2 * n {
            return Err(Error::Spec(format!(
                "order on {} variables used for a ring with {} variables",
                order.nvars(),
                2 * n
            )));
        }
        Ok(Ring { n, field, order })
    }

    pub fn lex(n: usize, field: F) -> Self {
        Ring { n, field, order: MonomialOrder::lex(2 * n) }
    }

    pub fn degrevlex(n: usize, field: F) -> Self {
        Ring { n, field, order: MonomialOrder::degrevlex(2 * n) }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Ring::new(self.n, self.field.clone(), order)
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    pub fn x(&self, i: usize) -> usize {
        i - 1
    }

    pub fn y(&self, i: usize) -> usize {
        self.n + i - 1
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        let mut terms = terms;
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn monomial(&self, m: Monomial, c: F::Elem) -> Polynomial<F> {
        self.from_terms(vec![(m, c)])
    }

    pub fn var(&self, v: usize) -> Polynomial<F> {
        self.monomial(Monomial::var(self.nvars(), v), self.field.one())
    }

    pub fn constant(&self, c: i64) -> Polynomial<F> {
        self.monomial(Monomial::one(self.nvars()), self.field.from_i64(c))
    }

    /// `f_{ij} = x_i y_j - x_j y_i`.
    pub fn edge_binomial(&self, i: usize, j: usize) -> Polynomial<F> {
        let nv = self.nvars();
        let a = Monomial::var(nv, self.x(i)).mul(&Monomial::var(nv, self.y(j)));
        let b = Monomial::var(nv, self.x(j)).mul(&Monomial::var(nv, self.y(i)));
        self.from_terms(vec![(a, self.field.one()), (b, self.field.from_i64(-1))])
    }

    /// `self + c * m * q`, merging the sorted term lists.
    pub fn add_scaled(
        &self,
        p: &Polynomial<F>,
        c: &F::Elem,
        m: &Monomial,
        q: &Polynomial<F>,
    ) -> Polynomial<F> {
        let f = &self.field;
        let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
        let mut a = p.terms.iter().peekable();
        let mut b = q.terms.iter().map(|(qm, qc)| (qm.mul(m), f.mul(qc, c))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => self.order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let s = f.add(ac, &bc);
                    if !f.is_zero(&s) {
                        out.push((am.clone(), s));
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        self.add_scaled(p, &self.field.one(), &Monomial::one(self.nvars()), q)
    }

    pub fn sub(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        self.add_scaled(p, &self.field.from_i64(-1), &Monomial::one(self.nvars()), q)
    }

    pub fn scale(&self, p: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: p.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(a, c))).collect() }
    }

    pub fn mul_monomial(&self, p: &Polynomial<F>, m: &Monomial) -> Polynomial<F> {
        Polynomial { terms: p.terms.iter().map(|(pm, c)| (pm.mul(m), c.clone())).collect() }
    }

    pub fn mul(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        let mut acc = Polynomial::zero();
        for (m, c) in &q.terms {
            acc = self.add_scaled(&acc, c, m, p);
        }
        acc
    }

    pub fn make_monic(&self, p: &Polynomial<F>) -> Polynomial<F> {
        match p.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(p, &self.field.inv(c)),
        }
    }

    /// Re-sorts a polynomial built under another order.
    pub fn reorder(&self, p: &Polynomial<F>) -> Polynomial<F> {
        self.from_terms(p.terms.clone())
    }

    /// Full reduction of `f` by `basis`: the largest reducible term is
    /// always reduced first, by the first basis element whose lead
    /// monomial divides it.
    pub fn normal_form(&self, f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
        let fld = &self.field;
        let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
        let mut p = f.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            match basis.iter().find(|g| !g.is_zero() && g.lead_monomial().divides(&m)) {
                Some(g) => {
                    let (gm, gc) = &g.terms[0];
                    let q = gm.quotient_of(&m);
                    let coef = fld.neg(&fld.mul(&c, &fld.inv(gc)));
                    p = self.add_scaled(&p, &coef, &q, g);
                }
                None => {
                    rem.push((m, c));
                    p.terms.remove(0);
                }
            }
        }
        Polynomial { terms: rem }
    }

    /// Canonical text, terms in decreasing order, e.g. `x1*y2 - x2*y1`.
    pub fn render(&self, p: &Polynomial<F>) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut s = String::new();
        for (k, (m, c)) in p.terms.iter().enumerate() {
            let neg = f.is_negative(c);
            let abs = if neg { f.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff = f.format(&abs);
            if m.is_one() {
                s.push_str(&coeff);
            } else if abs == f.one() {
                s.push_str(&m.render());
            } else {
                s.push_str(&format!("{coeff}*{}", m.render()));
            }
        }
        s
    }
}

/// Generators `f_{ij}` of the binomial edge ideal, one per edge `i < j`,
/// in edge order.
pub fn binomial_edge_ideal<F: Field>(g: &Graph, ring: &Ring<F>) -> Result<Vec<Polynomial<F>>> {
    if ring.vertices() != g.n() {
        return Err(Error::RingMismatch { ring: ring.vertices(), graph: g.n() });
    }
    Ok(g.edges().iter().map(|&(i, j)| ring.edge_binomial(i, j)).collect())
}
