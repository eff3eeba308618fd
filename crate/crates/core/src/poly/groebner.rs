//! Buchberger's algorithm with the coprime and chain criteria, producing
//! reduced Gröbner bases.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    /// Monic generators sorted by decreasing lead monomial.
    pub generators: Vec<Polynomial<F>>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.lead_monomial().clone()).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.total_degree()).max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// `Ok(())` when every element has degree at most two, otherwise the
/// largest degree found.
pub fn is_quadratic_gb<F: Field>(gb: &GroebnerBasis<F>) -> std::result::Result<(), u32> {
    match gb.max_degree() {
        d if d <= 2 => Ok(()),
        d => Err(d),
    }
}

fn s_polynomial<F: Field>(ring: &Ring<F>, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let fld = &ring.field;
    let left = ring.scale(&ring.mul_monomial(f, &fm.quotient_of(&l)), &fld.inv(fc));
    ring.add_scaled(&left, &fld.neg(&fld.inv(gc)), &gm.quotient_of(&l), g)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed by increasing degree of their lcm (ties by index),
/// pairs with coprime lead monomials are skipped, and Buchberger's chain
/// criterion drops `(i, j)` when some `k` has lead monomial dividing the
/// lcm and both `(i, k)`, `(j, k)` are already treated.
pub fn buchberger<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> GroebnerBasis<F> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut queue: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<Polynomial<F>>,
                queue: &mut BinaryHeap<Reverse<(u32, usize, usize)>>,
                pending: &mut HashSet<(usize, usize)>,
                p: Polynomial<F>| {
        let j = basis.len();
        for (i, b) in basis.iter().enumerate() {
            let d = b.lead_monomial().lcm(p.lead_monomial()).degree();
            queue.push(Reverse((d, j, i)));
            pending.insert((i, j));
        }
        basis.push(p);
    };

    for g in gens {
        let g = ring.reorder(g);
        if !g.is_zero() {
            let g = ring.make_monic(&g);
            push(&mut basis, &mut queue, &mut pending, g);
        }
    }

    while let Some(Reverse((_, j, i))) = queue.pop() {
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].lead_monomial(), basis[j].lead_monomial());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead_monomial().divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let r = ring.normal_form(&s, &basis);
        if !r.is_zero() {
            let r = ring.make_monic(&r);
            push(&mut basis, &mut queue, &mut pending, r);
        }
    }
    reduce_basis(ring, basis)
}

/// Minimalizes and interreduces a Gröbner basis.
fn reduce_basis<F: Field>(ring: &Ring<F>, basis: Vec<Polynomial<F>>) -> GroebnerBasis<F> {
    let mut keep: Vec<Polynomial<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.lead_monomial();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && h.lead_monomial().divides(lm) && (h.lead_monomial() != lm || l < k)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Polynomial<F>> =
            keep.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, h)| h.clone()).collect();
        let r = ring.normal_form(&keep[k], &others);
        debug_assert!(!r.is_zero() && r.lead_monomial() == keep[k].lead_monomial());
        reduced.push(ring.make_monic(&r));
    }
    reduced.sort_by(|a, b| ring.cmp(b.lead_monomial(), a.lead_monomial()));
    GroebnerBasis { generators: reduced, order: ring.order.clone(), reduced: true }
}

/// Checks the Buchberger criterion directly: every S-polynomial reduces to
/// zero.
pub fn is_groebner_basis<F: Field>(ring: &Ring<F>, gb: &[Polynomial<F>]) -> bool {
    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            let s = s_polynomial(ring, &gb[i], &gb[j]);
            if !ring.normal_form(&s, gb).is_zero() {
                return false;
            }
        }
    }
    true
}
