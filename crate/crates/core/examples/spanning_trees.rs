//! Enumerate 2-trees of the 2-skeleton of the 6-vertex simplex and check the matrix-tree identity.
//!
//! ```not_rust
//! cargo run --release --example spanning_trees
//! ```

use std::collections::BTreeMap;

use celltrees::families::simplex_skeleton;
use celltrees::laplacian::SpecializationSampler;
use celltrees::trees::{cmtt_sides, collect_trees, tree_count_report};

fn main() -> celltrees::Result<()> {
    let cx = simplex_skeleton(6, 2)?;
    let trees = collect_trees(&cx, 2)?;
    let mut by_torsion = BTreeMap::new();
    for t in &trees {
        *by_torsion.entry(t.torsion_order.to_string()).or_insert(0u64) += 1;
    }
    println!("{} trees, by torsion order: {by_torsion:?}", trees.len());
    if let Some(t) = trees.iter().find(|t| t.torsion_order > 1.into()) {
        println!("a tree with torsion: {:?}", t.cells);
    }

    let x = SpecializationSampler::new(42).sample(cx.variables());
    let report = tree_count_report(&cx, 2, &x)?;
    println!("tau = {}, weighted tau = {}", report.tau, report.tau_hat);
    for k in 0..=2 {
        let (spectral, enumerative) = cmtt_sides(&cx, k, &x)?;
        println!("k={k}: spectral side == enumerative side: {}", spectral == enumerative);
    }
    Ok(())
}
