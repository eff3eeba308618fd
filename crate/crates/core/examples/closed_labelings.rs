//! Closed labelings and quadratic lex Groebner bases.
//!
//! `cargo run --example closed_labelings`

use bei::corpus;
use bei::graph::{find_closed_labeling, is_closed_with_labeling, DEFAULT_LABELING_BOUND};
use bei::report::quadratic_lex_gb;
use bei::Labeling;

fn main() -> bei::Result<()> {
    for name in ["path4", "line2d-3", "c4", "claw", "fig1", "fig2"] {
        let g = corpus::lookup(name)?;
        let id = Labeling::identity(g.n());
        let violation = is_closed_with_labeling(&g, &id)?;
        let found = find_closed_labeling(&g, DEFAULT_LABELING_BOUND)?;
        println!(
            "{name:<9} identity: closed={:<5} quadratic={:<5} violation={:?}",
            violation.is_none(),
            quadratic_lex_gb(&g, &id)?,
            violation.map(|v| (v.center, v.j, v.k)),
        );
        match found {
            Some(lab) => println!(
                "          closed labeling {:?}, quadratic={}",
                lab.as_slice(),
                quadratic_lex_gb(&g, &lab)?
            ),
            None => println!("          no labeling is closed"),
        }
    }
    Ok(())
}
