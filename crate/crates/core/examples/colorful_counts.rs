//! Closed-form tree counts of complete colorful complexes against brute force.
//!
//! ```not_rust
//! cargo run --release --example colorful_counts
//! ```

use celltrees::closed_forms::{adin_tau, colorful_tau_hat, colorful_weights};
use celltrees::families::{complete_colorful, ColorfulSpec};
use celltrees::laplacian::SpecializationSampler;
use celltrees::trees::{tau, tau_hat};

fn main() -> celltrees::Result<()> {
    for sizes in [vec![2, 2, 2], vec![2, 3, 2], vec![3, 3]] {
        let cx = complete_colorful(&ColorfulSpec::new(sizes.clone()))?;
        let x = SpecializationSampler::new(1).sample(cx.variables());
        let w = colorful_weights(&sizes, &x)?;
        for k in 0..=cx.dim() {
            let formula = colorful_tau_hat(k, &w)?;
            let brute = tau_hat(&cx, k, &x)?;
            println!(
                "{sizes:?} k={k}: tau {} (formula {}), weighted agree: {}",
                tau(&cx, k)?,
                adin_tau(k, &sizes)?,
                formula == brute
            );
        }
    }
    Ok(())
}
