//! Hilbert series of quotients by monomial ideals, via the numerator
//! recursion `K(I) = K(I + (x)) + t K(I : x)`.

use super::field::Field;
use super::groebner::GroebnerBasis;
use super::monomial::Monomial;

/// Default degree bound for Hilbert coefficients.
pub const DEFAULT_HILBERT_DEGREE: usize = 10;

/// `h_0..h_d` of `S / in(I)`, which equals that of `S / I`.
pub fn hilbert_series<F: Field>(gb: &GroebnerBasis<F>, d: usize) -> Vec<u64> {
    hilbert_series_of_monomials(&gb.lead_monomials(), gb.order.nvars(), d)
}

/// `h_0..h_d` of `K[z_1..z_nvars] / (gens)`.
pub fn hilbert_series_of_monomials(gens: &[Monomial], nvars: usize, d: usize) -> Vec<u64> {
    let num = numerator(minimalize(gens.to_vec()), nvars);
    // 1/(1-t)^N has coefficients C(N-1+k, k).
    let mut denom = vec![0i128; d + 1];
    let mut c: i128 = 1;
    for (k, slot) in denom.iter_mut().enumerate() {
        *slot = c;
        c = c * (nvars as i128 + k as i128) / (k as i128 + 1);
    }
    (0..=d)
        .map(|t| {
            let v: i128 = (0..=t.min(num.len().saturating_sub(1)))
                .map(|k| num[k] as i128 * denom[t - k])
                .sum();
            u64::try_from(v).expect("Hilbert coefficient is nonnegative")
        })
        .collect()
}

/// Numerator `K(t)` of the series written as `K(t) / (1 - t)^nvars`.
pub fn numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (v, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    let (pivot, &most) = counts
        .iter()
        .enumerate()
        .max_by_key(|&(v, &c)| (c, std::cmp::Reverse(v)))
        .unwrap_or((0, &0));
    if most <= 1 {
        // Pairwise coprime: product of (1 - t^deg).
        let mut out = vec![1i64];
        for m in &gens {
            let deg = m.degree() as usize;
            let mut next = vec![0i64; out.len() + deg];
            for (k, &a) in out.iter().enumerate() {
                next[k] += a;
                next[k + deg] -= a;
            }
            out = next;
        }
        return out;
    }
    let x = Monomial::var(nvars, pivot);
    let mut plus: Vec<Monomial> = gens.iter().filter(|m| !x.divides(m)).cloned().collect();
    plus.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| if x.divides(m) { x.quotient_of(m) } else { m.clone() })
        .collect();
    let a = numerator(minimalize(plus), nvars);
    let b = numerator(minimalize(colon), nvars);
    let mut out = vec![0i64; a.len().max(b.len() + 1)];
    for (k, v) in a.into_iter().enumerate() {
        out[k] += v;
    }
    for (k, v) in b.into_iter().enumerate() {
        out[k + 1] += v;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}
