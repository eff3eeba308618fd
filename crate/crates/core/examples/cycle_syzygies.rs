//! The degree-`m` syzygy among the binomials of an `m`-cycle, checked for
//! being a syzygy and for minimality.
//!
//! `cargo run --release --example cycle_syzygies`

use bei::poly::{PrimeField, Rationals, Ring};
use bei::resolution::{cycle_syzygy, DEFAULT_GUARD};

fn main() -> bei::Result<()> {
    for m in 4..=6 {
        let s = cycle_syzygy(m)?;
        let ring = Ring::degrevlex(m, Rationals);
        let report = s.verify(PrimeField::default(), DEFAULT_GUARD)?;
        println!("m = {m}");
        for (f, c) in s.presentation(&ring).iter().zip(&report.coordinates) {
            println!("  ({c}) * ({})", ring.render(f));
        }
        println!(
            "  sum = {:?}, multidegree {:?}, beta_(2,{m}) = {}, minimal = {}",
            ring.render(&s.epsilon(&ring)),
            report.multidegree,
            report.betti_2m,
            report.minimal
        );
    }
    Ok(())
}
