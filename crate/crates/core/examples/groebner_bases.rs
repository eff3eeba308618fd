//! Reduced Groebner bases of binomial edge ideals and their Hilbert
//! functions under different orders and fields.
//!
//! `cargo run --example groebner_bases`

use bei::graph::Graph;
use bei::poly::{binomial_edge_ideal, buchberger, hilbert_series, MonomialOrder, PrimeField, Rationals, Ring};

fn main() -> bei::Result<()> {
    let c4 = Graph::cycle(4);

    let lex = Ring::lex(4, Rationals);
    let gb = buchberger(&lex, &binomial_edge_ideal(&c4, &lex)?);
    println!("C4, lex over QQ, max degree {}:", gb.max_degree());
    for p in &gb.generators {
        println!("  {}", lex.render(p));
    }

    let grevlex = Ring::new(4, PrimeField::new(101)?, MonomialOrder::degrevlex(8))?;
    let gb2 = buchberger(&grevlex, &binomial_edge_ideal(&c4, &grevlex)?);
    println!("C4, degrevlex over GF(101): {} generators, max degree {}", gb2.len(), gb2.max_degree());

    // the Hilbert function does not depend on the order
    println!("Hilbert function (lex):       {:?}", hilbert_series(&gb, 8));
    println!("Hilbert function (degrevlex): {:?}", hilbert_series(&gb2, 8));
    Ok(())
}
