//! Tor tables of `S/J_G` and the Betti tables of `S/J_G` over `S`.
//! Off-diagonal Tor entries certify that an algebra is not Koszul.
//!
//! `cargo run --release --example tor_tables`

use bei::corpus;
use bei::resolution::{betti_table_over_s, lemma12_test, tor_table, Lemma12, ResolutionOptions};

fn main() -> bei::Result<()> {
    let opts = ResolutionOptions::new(3, 6);
    for name in ["claw", "c4", "fig1", "fig2"] {
        let g = corpus::lookup(name)?;
        let t = tor_table(&g, &opts)?;
        println!("{name}\n{}", t.render());
        println!("off-diagonal: {:?}\n", t.off_diagonal(0));
    }

    for m in 4..=6 {
        let g = corpus::lookup(&format!("c{m}"))?;
        let t = betti_table_over_s(&g, &ResolutionOptions::new(2, 6))?;
        let verdict = lemma12_test(&g, 6, &opts)?;
        let label = match verdict {
            Lemma12::NotKoszul { j } => format!("second syzygy in degree {j}"),
            Lemma12::Inconclusive => "inconclusive".into(),
        };
        println!("C{m}: beta_(2,{m}) = {}, {label}", t.get(2, m as u16));
    }
    Ok(())
}
