//! Weighted tree counts of hypercubes.
//!
//! ```not_rust
//! cargo run --release --example hypercube_counts
//! ```

use celltrees::closed_forms::{cube_tau_hat, CubeWeights};
use celltrees::families::{hypercube, CubeSpec};
use celltrees::laplacian::SpecializationSampler;
use celltrees::trees::tau_hat;

fn main() -> celltrees::Result<()> {
    println!("unweighted counts from the closed form:");
    for n in 1..=6 {
        let w = CubeWeights::ones(n);
        let row: Vec<String> = (0..=n as isize).map(|k| cube_tau_hat(k, &w).map(|t| t.to_string())).collect::<Result<_, _>>()?;
        println!("  Q_{n}: {}", row.join(" "));
    }

    let n = 3;
    let cx = hypercube(CubeSpec { n })?;
    let x = SpecializationSampler::new(9).sample(cx.variables());
    let w = CubeWeights::from_specialization(n, &x)?;
    for k in 0..=n as isize {
        let formula = cube_tau_hat(k, &w)?;
        println!("Q_3 k={k}: weighted count {formula}, matches enumeration: {}", formula == tau_hat(&cx, k, &x)?);
    }
    Ok(())
}
