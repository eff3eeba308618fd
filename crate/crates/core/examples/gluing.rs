//! Gluing two graphs at free vertices: the result is Koszul exactly when
//! both pieces are, and its Hilbert series differs by `(1 - t)^2`.
//!
//! `cargo run --example gluing`

use bei::classify::classify;
use bei::complex::{clique_complex, free_vertices, glue_at_vertex};
use bei::corpus;
use bei::poly::{binomial_edge_ideal, buchberger, hilbert_series, PrimeField, Ring};
use bei::Graph;

fn hilbert(g: &Graph, d: usize) -> Vec<i64> {
    let ring = Ring::degrevlex(g.n(), PrimeField::default());
    let gb = buchberger(&ring, &binomial_edge_ideal(g, &ring).unwrap());
    hilbert_series(&gb, d).into_iter().map(|h| h as i64).collect()
}

fn main() -> bei::Result<()> {
    let pairs = [("k3", "path3"), ("fig1", "k3"), ("line2d-2", "bowtie"), ("claw", "k3"), ("fig2", "k2")];
    for (a, b) in pairs {
        let (g1, g2) = (corpus::lookup(a)?, corpus::lookup(b)?);
        let v1 = *free_vertices(&clique_complex(&g1)).last().unwrap();
        let v2 = free_vertices(&clique_complex(&g2))[0];
        let glued = glue_at_vertex(&g1, v1, &g2, v2)?;
        let (k1, k2, k) = (classify(&g1).is_koszul(), classify(&g2).is_koszul(), classify(&glued).is_koszul());
        println!("{a}@{v1} + {b}@{v2}: {k1} and {k2} -> {k} ({} vertices)", glued.n());

        // the product of the pieces' series, times (1 - t)^2
        let d = 6;
        let (h1, h2, h) = (hilbert(&g1, d), hilbert(&g2, d), hilbert(&glued, d));
        let product: Vec<i64> = (0..=d).map(|t| (0..=t).map(|s| h1[s] * h2[t - s]).sum()).collect();
        let shifted: Vec<i64> = (0..=d)
            .map(|t| product[t] - 2 * if t >= 1 { product[t - 1] } else { 0 } + if t >= 2 { product[t - 2] } else { 0 })
            .collect();
        println!("  glued {h:?}\n  predicted {shifted:?}");
    }
    Ok(())
}
