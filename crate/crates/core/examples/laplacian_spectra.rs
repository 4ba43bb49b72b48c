//! Weighted Laplacians of the octahedron at a random rational point.
//!
//! ```not_rust
//! cargo run --example laplacian_spectra
//! ```

use celltrees::families::{complete_colorful, ColorfulSpec};
use celltrees::laplacian::{laplacian, pi_hat, LaplacianKind, SpecializationSampler};

fn main() -> celltrees::Result<()> {
    let oct = complete_colorful(&ColorfulSpec::new([2, 2, 2]))?;
    let x = SpecializationSampler::new(7).sample(oct.variables());
    println!("weights: {x}");
    for k in -1..=oct.dim() {
        for kind in [LaplacianKind::UpDown, LaplacianKind::DownUp, LaplacianKind::Total] {
            let m = laplacian(&oct, kind, k, &x)?;
            let p = m.char_poly()?;
            println!("{kind:>3} k={k:>2} size {:>2} zero roots {:>2} pdet {}", m.rows(), p.zero_root_multiplicity(), p.pdet());
        }
    }
    for k in 0..=oct.dim() {
        println!("pi_hat_{k} = {}", pi_hat(&oct, k, &x)?);
    }
    Ok(())
}
