//! Koszul verdicts with certificates for the built-in corpus.
//!
//! `cargo run --example koszul_classification`

use bei::classify::{classify, remark27_predicate, Certificate};
use bei::corpus;

fn main() {
    for e in corpus::corpus() {
        let v = classify(&e.graph);
        let kinds: Vec<&str> = v
            .certificates
            .iter()
            .map(|c| match c {
                Certificate::Claw { .. } => "claw",
                Certificate::ChordlessCycle { .. } => "chordless cycle",
                Certificate::IntersectionTree { .. } => "intersection tree",
                Certificate::LeafOrder { .. } => "leaf order",
                Certificate::TreeCondition { .. } => "tree condition",
                Certificate::TorEvidence { .. } => "tor",
                Certificate::Component { .. } => "component",
            })
            .collect();
        println!(
            "{:<26} {:<11} verified={} {:?}",
            e.name,
            serde_json::to_value(v.status).unwrap().as_str().unwrap(),
            v.verify(&e.graph),
            kinds
        );
    }
    let fig1 = corpus::lookup("fig1").unwrap();
    println!("\nfig1 tree shape: {:?}", remark27_predicate(&fig1));
}
