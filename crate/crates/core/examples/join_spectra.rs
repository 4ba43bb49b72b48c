//! Total Laplacian spectra of a join from the spectra of its factors.
//!
//! The suspension of `K_4` is the join with two isolated points.
//!
//! ```not_rust
//! cargo run --example join_spectra
//! ```

use num_rational::BigRational;

use celltrees::closed_forms::{
    colorful_weights, complete_graph_total_spectra, edgeless_total_spectra, join_spectrum, simplex_weights,
    suspension_tau_hat,
};
use celltrees::families::{complete_colorful, join, simplex_skeleton, ColorfulSpec};
use celltrees::laplacian::{total_laplacian, SpecializationSampler};
use celltrees::trees::tau_hat;

fn main() -> celltrees::Result<()> {
    let graph = simplex_skeleton(4, 1)?;
    let poles = complete_colorful(&ColorfulSpec::new([2]))?;
    let cx = join(&graph, &poles)?;
    let x = SpecializationSampler::new(3).sample(cx.variables());
    let xs = simplex_weights(4, &x)?;
    let ys = colorful_weights(&[2], &x)?.remove(0);

    let factors = [complete_graph_total_spectra(&xs), edgeless_total_spectra(&ys)];
    for k in -1..=cx.dim() {
        let predicted = join_spectrum(&factors, k)?;
        let exact = predicted.matches_exactly(&total_laplacian(&cx, k, &x)?)?;
        println!("k={k:>2}: {predicted}  (matches: {exact})");
    }
    let apexes: [BigRational; 2] = [ys[0].clone(), ys[1].clone()];
    for k in 0..=2 {
        println!("tau_hat_{k} formula == enumeration: {}", suspension_tau_hat(k, &xs, &apexes)? == tau_hat(&cx, k, &x)?);
    }
    Ok(())
}
