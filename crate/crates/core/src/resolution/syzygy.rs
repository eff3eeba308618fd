//! The explicit degree-`m` syzygy among the binomials of an `m`-cycle:
//! `g = sum_i (prod_j x_j) / (x_i x_{i+1}) e_i` with `e_i -> f_{i,i+1}`.

use serde::{Deserialize, Serialize};

use super::tables::{resolution_over_s, ResolutionOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{Field, Monomial, Polynomial, PrimeField, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSyzygy {
    pub m: usize,
    /// Coefficient of `e_i` for `i = 1..=m`.
    pub coordinates: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyReport {
    pub m: usize,
    pub coordinates: Vec<String>,
    pub total_degree: u32,
    /// Vertex degrees followed by the number of `x` factors.
    pub multidegree: Vec<u16>,
    pub epsilon_is_zero: bool,
    pub betti_2m: u64,
    pub minimal: bool,
}

impl SyzygyReport {
    pub fn verified(&self) -> bool {
        self.epsilon_is_zero && self.betti_2m >= 1 && self.minimal
    }
}

pub fn cycle_syzygy(m: usize) -> Result<CycleSyzygy> {
    if m < 4 {
        return Err(Error::Spec(format!("cycle syzygy needs m >= 4, got {m}")));
    }
    let nv = 2 * m;
    let coordinates = (0..m)
        .map(|i| {
            let mut e = vec![0u16; nv];
            for (j, slot) in e.iter_mut().enumerate().take(m) {
                if j != i && j != (i + 1) % m {
                    *slot = 1;
                }
            }
            Monomial::from_exps(e)
        })
        .collect();
    Ok(CycleSyzygy { m, coordinates })
}

impl CycleSyzygy {
    /// `e_i -> f_{i,i+1}`, indices modulo `m`.
    pub fn presentation<F: Field>(&self, ring: &Ring<F>) -> Vec<Polynomial<F>> {
        (1..=self.m).map(|i| ring.edge_binomial(i, i % self.m + 1)).collect()
    }

    /// `epsilon(g) = sum_i g_i f_{i,i+1}`.
    pub fn epsilon<F: Field>(&self, ring: &Ring<F>) -> Polynomial<F> {
        let mut acc = Polynomial::zero();
        for (c, f) in self.coordinates.iter().zip(self.presentation(ring)) {
            acc = ring.add(&acc, &ring.mul_monomial(&f, c));
        }
        acc
    }

    pub fn multidegree(&self) -> Vec<u16> {
        let mut d = self.coordinates[0].multidegree();
        d[0] += 1;
        d[1] += 1;
        d[self.m] += 1;
        d
    }

    /// Checks `epsilon(g) = 0`, `beta_{2,m}(S/J_C) >= 1` and that `g` is a
    /// minimal generator of the first syzygies in its multidegree.
    pub fn verify(&self, field: PrimeField, guard: usize) -> Result<SyzygyReport> {
        let m = self.m;
        let ring = Ring::lex(m, field);
        let epsilon_is_zero = self.epsilon(&ring).is_zero();
        let cycle = Graph::cycle(m);
        let opts = ResolutionOptions { field, i_max: 2, j_max: m as u16, guard };
        let mut res = resolution_over_s(&cycle, &opts)?;
        let betti_2m = res.betti().get(&(2, m as u16)).copied().unwrap_or(0);
        let edges = cycle.edges().to_vec();
        let mut element = Vec::new();
        let mut complete = true;
        for (i, c) in self.coordinates.iter().enumerate() {
            let (a, b) = (i + 1, (i + 1) % m + 1);
            let k = edges.iter().position(|&e| e == (a.min(b), a.max(b))).expect("cycle edge");
            // The candidate is f_{min,max}; f_{m,1} = -f_{1,m}.
            let sign = if a < b { 1 } else { field.characteristic() - 1 };
            match res.generator_for_candidate(k) {
                Some(gk) => element.push((gk, c.clone(), sign)),
                None => complete = false,
            }
        }
        let minimal = complete && res.is_minimal_cycle(1, &self.multidegree(), &element)?;
        Ok(SyzygyReport {
            m,
            coordinates: self.coordinates.iter().map(|c| c.render()).collect(),
            total_degree: self.coordinates[0].degree() + 2,
            multidegree: self.multidegree(),
            epsilon_is_zero,
            betti_2m,
            minimal,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::DEFAULT_GUARD;

    #[test]
    fn four_cycle_coordinates() {
        let s = cycle_syzygy(4).unwrap();
        let shown: Vec<String> = s.coordinates.iter().map(|c| c.render()).collect();
        assert_eq!(shown, ["x3*x4", "x1*x4", "x1*x2", "x2*x3"]);
        assert!(cycle_syzygy(3).is_err());
    }

    #[test]
    fn cycle_syzygies_verify() {
        for m in 4..=5 {
            let r = cycle_syzygy(m).unwrap().verify(PrimeField::default(), DEFAULT_GUARD).unwrap();
            assert!(r.verified(), "{r:?}");
            assert_eq!(r.total_degree, m as u32);
        }
    }

    #[test]
    fn sign_flip_breaks_the_relation() {
        let s = cycle_syzygy(4).unwrap();
        let ring = Ring::lex(4, PrimeField::default());
        let f = s.presentation(&ring);
        let mut acc = ring.mul_monomial(&f[0], &s.coordinates[0]);
        for k in 1..4 {
            let term = ring.mul_monomial(&f[k], &s.coordinates[k]);
            acc = if k == 3 { ring.sub(&acc, &term) } else { ring.add(&acc, &term) };
        }
        assert!(!acc.is_zero());
    }
}
