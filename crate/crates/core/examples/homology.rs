//! Reduced homology orders, including torsion, for a few complexes.
//!
//! ```not_rust
//! cargo run --example homology
//! ```

use celltrees::complex::{CellComplex, CellSpec, HomologyOrder};
use celltrees::families::{hypercube, simplex_skeleton, CubeSpec};

fn describe(name: &str, cx: &CellComplex) {
    let groups: Vec<String> = (-1..=cx.dim())
        .map(|k| match cx.homology_order(k) {
            HomologyOrder::Finite(n) => n.to_string(),
            HomologyOrder::Infinite => "inf".into(),
        })
        .collect();
    println!("{name:<14} f={:?} |H~|={groups:?} acyclic-below-top={}", cx.f_vector(), cx.is_apc());
}

fn main() -> celltrees::Result<()> {
    describe("K_5 graph", &simplex_skeleton(5, 1)?);
    describe("sphere S^2", &simplex_skeleton(4, 2)?);
    describe("cube surface", &hypercube(CubeSpec { n: 3 })?.skeleton(2)?);

    // a loop with two discs attached by degree-two maps, then a ball between them
    let doubled = CellComplex::new(vec![
        CellSpec::new("v", 0),
        CellSpec::new("e", 1),
        CellSpec::new("f", 2).with_face("e", 2),
        CellSpec::new("g", 2).with_face("e", 2),
        CellSpec::new("s", 3).with_face("f", 1).with_face("g", -1),
    ])?;
    describe("doubled disc", &doubled);
    Ok(())
}
