//! The Tor table of a disjoint union is the convolution of the tables of
//! its components.
//!
//! `cargo run --release --example tensor_products`

use bei::corpus;
use bei::resolution::{tensor_convolution_check, ResolutionOptions};
use bei::Graph;

fn main() -> bei::Result<()> {
    let opts = ResolutionOptions::new(3, 5);
    let pairs: [(Graph, Graph, &str); 4] = [
        (Graph::complete(2), Graph::complete(2), "K2 + K2"),
        (Graph::complete(3), Graph::empty(1), "K3 + point"),
        (corpus::lookup("claw")?, Graph::complete(2), "claw + K2"),
        (Graph::path(3), Graph::cycle(4), "path3 + C4"),
    ];
    for (g1, g2, label) in pairs {
        println!("{label}: {:?}", tensor_convolution_check(&g1, &g2, &opts)?);
    }
    Ok(())
}
