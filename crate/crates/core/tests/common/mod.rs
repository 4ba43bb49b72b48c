#![allow(dead_code)]

use celltrees::complex::{CellComplex, CellSpec, Monomial};
use celltrees::families::simplicial_complex;
use celltrees::laplacian::{specialization_battery, Specialization};

/// Six-vertex triangulation of the real projective plane.
pub const RP2_FACETS: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [1, 2, 6],
    [2, 3, 5],
    [3, 4, 6],
    [2, 4, 5],
    [3, 5, 6],
    [2, 4, 6],
];

pub fn rp2() -> CellComplex {
    simplicial_complex(&RP2_FACETS.map(|f| f.to_vec())).unwrap()
}

/// A vertex, a loop, two discs glued on with degree 2 and a 3-cell between them.
/// Each cell is weighted by its own variable `X_<id>`.
pub fn doubled_disc_complex() -> CellComplex {
    let cell = |id: &str, dim| CellSpec::new(id, dim).with_weight(Monomial::var(format!("X_{id}")));
    CellComplex::new(vec![
        cell("v", 0),
        cell("e", 1),
        cell("f", 2).with_face("e", 2),
        cell("g", 2).with_face("e", 2),
        cell("s", 3).with_face("f", 1).with_face("g", -1),
    ])
    .unwrap()
}

/// The all-ones point followed by `points` seeded random points.
pub fn battery(cx: &CellComplex, seed: u64, points: usize) -> Vec<Specialization> {
    let vars: Vec<String> = cx.variables().into_iter().collect();
    specialization_battery(&vars, seed, points)
}
