//! Resolving the ideal generated by a set of variables inside `S/J_G`.
//! For the fig2 graph, the ideal `(x5, x6, y5, y6)` eventually fails to
//! have a linear resolution.
//!
//! `cargo run --release --example module_resolutions`

use bei::corpus;
use bei::poly::parse_var;
use bei::resolution::{module_resolution_over_a, ResolutionOptions};

fn main() -> bei::Result<()> {
    let g = corpus::lookup("fig2")?;
    let vars: Vec<usize> = ["x5", "x6", "y5", "y6"].iter().map(|v| parse_var(v, g.n())).collect::<bei::Result<_>>()?;
    for (i, j) in [(2, 6), (4, 8)] {
        let t = module_resolution_over_a(&g, &vars, &ResolutionOptions::new(i, j))?;
        println!("{}", t.render());
        println!("entries with j > i + 1: {:?}\n", t.off_diagonal(1));
    }
    Ok(())
}
