//! Exact integer linear algebra on a boundary matrix.
//!
//! ```not_rust
//! cargo run --example smith_normal_form
//! ```

use celltrees::families::simplicial_complex;
use celltrees::linalg::IntegerMatrix;

fn main() -> celltrees::Result<()> {
    // six-vertex projective plane
    let facets = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
    ];
    let rp2 = simplicial_complex(&facets.map(|f| f.to_vec()))?;
    let d2 = rp2.boundary_matrix(2);
    let snf = d2.smith_normal_form();
    println!("boundary of the triangles: {}x{}, rank {}", d2.rows(), d2.cols(), snf.rank());
    println!("invariant factors: {:?}", snf.invariant_factors.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("torsion order: {}", snf.torsion_order());

    let m = IntegerMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]])?;
    let q = m.to_rational();
    let p = q.char_poly()?;
    println!("char poly of a path Laplacian minor: {p}");
    println!("det {} pdet {}", m.determinant()?, q.pdet()?);
    Ok(())
}
