//! Write a complex and a weight file as JSON, read them back and report.
//!
//! ```not_rust
//! cargo run --example json_documents
//! ```

use celltrees::families::{hypercube, CubeSpec};
use celltrees::io::{read_weights, tree_report_value, weights_to_value, ComplexDocument};
use celltrees::laplacian::SpecializationSampler;
use celltrees::trees::tree_count_report;

fn main() -> celltrees::Result<()> {
    let dir = std::env::temp_dir().join("celltrees-example");
    std::fs::create_dir_all(&dir)?;
    let cube = ComplexDocument::new("cube 2", hypercube(CubeSpec { n: 2 })?).with_metadata("n", 2);
    let path = dir.join("square.json");
    cube.write(&path)?;
    let back = ComplexDocument::read(&path)?;
    println!("round trip identical: {}", back.to_canonical_string() == cube.to_canonical_string());

    let x = SpecializationSampler::new(5).sample(back.complex.variables());
    let weights = dir.join("weights.json");
    std::fs::write(&weights, weights_to_value(&x).to_string())?;
    let x = read_weights(&weights)?;
    for k in 0..=2 {
        let report = tree_count_report(&back.complex, k, &x)?;
        println!("{}", tree_report_value(&back.name, &report));
    }
    Ok(())
}
