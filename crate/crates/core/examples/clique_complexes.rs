//! Clique complexes, free vertices, leaf orders and the block
//! decomposition used by the classification.
//!
//! `cargo run --example clique_complexes`

use bei::complex::{block_decomposition, clique_complex, free_vertices, intersection_tree, leaf_order};
use bei::corpus;

fn main() -> bei::Result<()> {
    for name in ["fig1", "fig2", "fig3", "bowtie", "glued-k3-line2d2-triple", "c5"] {
        let g = corpus::lookup(name)?;
        let c = clique_complex(&g);
        println!("{name}: dim {} facets {:?}", c.dim, c.facets);
        println!("  free vertices {:?}", free_vertices(&c));
        match leaf_order(&c) {
            Some(lo) => println!("  leaf order {:?} branches {:?}", lo.order, lo.branch),
            None => println!("  no leaf order"),
        }
        if c.dim > 2 {
            continue;
        }
        let b = block_decomposition(&c)?;
        println!("  {} two-dimensional blocks, {} lines", b.blocks2d.len(), b.lines1d.len());
        match intersection_tree(&b) {
            Ok(t) => {
                let degrees: Vec<usize> = (0..t.nodes.len()).map(|k| t.degree(k)).collect();
                println!("  intersection tree, node degrees {degrees:?}");
            }
            Err(f) => println!("  no intersection tree: {:?}", f.violations),
        }
    }
    Ok(())
}
