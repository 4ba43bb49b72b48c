//! Generators for simplex skeleta, complete colorful complexes, simplicial
//! joins and hypercubes, each with its canonical weighting.
//!
//! Simplicial faces are oriented by sorting their vertices in a global order
//! and alternating signs by position. Variable names: `v[i]` for simplex
//! vertices, `X[q.i]` for colorful vertices, `q[i]`, `y[i]`, `z[i]` for the cube.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;

use crate::complex::{CellComplex, CellSpec, Monomial};
use crate::error::{Error, Result};

/// A vertex of a simplicial complex: its cell id and its weight.
#[derive(Clone, Debug)]
struct Vertex {
    label: String,
    weight: Monomial,
}

/// One simplicial face: sorted indices into the global vertex order, and its weight.
struct Face {
    vertices: Vec<usize>,
    weight: Monomial,
}

fn face_id(vertices: &[Vertex], face: &[usize]) -> String {
    face.iter().map(|&v| vertices[v].label.as_str()).join(",")
}

/// Assembles a simplicial complex from a downward-closed set of nonempty faces.
fn assemble(vertices: &[Vertex], faces: Vec<Face>) -> Result<CellComplex> {
    let specs = faces
        .iter()
        .map(|face| {
            let dim = face.vertices.len() - 1;
            let mut spec = CellSpec::new(face_id(vertices, &face.vertices), dim).with_weight(face.weight.clone());
            if dim > 0 {
                for i in 0..face.vertices.len() {
                    let mut sub = face.vertices.clone();
                    sub.remove(i);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    spec = spec.with_face(face_id(vertices, &sub), sign);
                }
            }
            spec
        })
        .collect();
    CellComplex::new(specs)
}

fn vertex_product(vertices: &[Vertex], face: &[usize]) -> Monomial {
    face.iter().fold(Monomial::one(), |acc, &v| acc.times(&vertices[v].weight))
}

fn padded(i: usize, max: usize) -> String {
    let width = max.to_string().len();
    format!("{i:0width$}")
}

fn simplex_vertices(n: usize) -> Vec<Vertex> {
    (1..=n)
        .map(|i| Vertex { label: padded(i, n), weight: Monomial::var(format!("v[{i}]")) })
        .collect()
}

/// `K_n^d`: the d-skeleton of the simplex on `n` vertices, with face weight `∏_{i∈σ} v[i]`.
pub fn simplex_skeleton(n: usize, d: isize) -> Result<CellComplex> {
    if d < -1 || d > n as isize - 1 {
        return Err(Error::Argument(format!("simplex skeleton needs -1 <= d <= n-1, got n={n}, d={d}")));
    }
    let vertices = simplex_vertices(n);
    let mut faces = Vec::new();
    for size in 1..=(d + 1) as usize {
        for face in (0..n).combinations(size) {
            let weight = vertex_product(&vertices, &face);
            faces.push(Face { vertices: face, weight });
        }
    }
    assemble(&vertices, faces)
}

/// Simplicial complex generated by the given facets on vertices `1..=n`,
/// with vertex variables `v[i]` and product weights.
pub fn simplicial_complex(facets: &[Vec<usize>]) -> Result<CellComplex> {
    let n = facets.iter().flatten().copied().max().unwrap_or(0);
    if facets.iter().flatten().any(|&v| v == 0) {
        return Err(Error::Argument("vertices are numbered from 1".into()));
    }
    let vertices = simplex_vertices(n);
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for facet in facets {
        let mut sorted: Vec<usize> = facet.iter().map(|v| v - 1).collect();
        sorted.sort_unstable();
        sorted.dedup();
        for size in 1..=sorted.len() {
            all.extend(sorted.iter().copied().combinations(size));
        }
    }
    let faces = all
        .into_iter()
        .map(|f| {
            let weight = vertex_product(&vertices, &f);
            Face { vertices: f, weight }
        })
        .collect();
    assemble(&vertices, faces)
}

/// Parameters of a complete colorful complex `Δ_{n_1,…,n_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulSpec {
    pub sizes: Vec<usize>,
    /// Restrict to this skeleton.
    pub skeleton: Option<isize>,
}

impl ColorfulSpec {
    pub fn new(sizes: impl Into<Vec<usize>>) -> Self {
        Self { sizes: sizes.into(), skeleton: None }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return Err(Error::Argument(format!("color class sizes must be positive, got {:?}", self.sizes)));
        }
        Ok(())
    }
}

/// Name of the weight variable of vertex `i` of color `q` (both 1-based).
pub fn colorful_variable(q: usize, i: usize) -> String {
    format!("X[{q}.{i}]")
}

/// The complete colorful complex: faces have at most one vertex of each color,
/// weighted by the product of their vertex variables `X[q.i]`.
pub fn complete_colorful(spec: &ColorfulSpec) -> Result<CellComplex> {
    spec.validate()?;
    let r = spec.sizes.len();
    let max_n = spec.sizes.iter().copied().max().unwrap_or(1);
    let mut vertices = Vec::new();
    let mut classes = Vec::new();
    for (q, &n) in spec.sizes.iter().enumerate() {
        let start = vertices.len();
        for i in 1..=n {
            vertices.push(Vertex {
                label: format!("{}.{}", padded(q + 1, r), padded(i, max_n)),
                weight: Monomial::var(colorful_variable(q + 1, i)),
            });
        }
        classes.push(start..vertices.len());
    }
    let top = spec.skeleton.unwrap_or(r as isize - 1);
    if top < -1 || top > r as isize - 1 {
        return Err(Error::Argument(format!("skeleton {top} outside -1..={}", r - 1)));
    }
    let mut faces = Vec::new();
    for size in 1..=(top + 1) as usize {
        for colors in (0..r).combinations(size) {
            for face in colors.iter().map(|&q| classes[q].clone()).multi_cartesian_product() {
                let weight = vertex_product(&vertices, &face);
                faces.push(Face { vertices: face, weight });
            }
        }
    }
    assemble(&vertices, faces)
}

/// Vertex sets of every cell of a simplicial complex, as sorted positions among its 0-cells.
///
/// Fails unless each k-cell has exactly k+1 boundary faces with coefficients ±1
/// spanning k+1 vertices.
fn simplicial_structure(cx: &CellComplex) -> Result<BTreeMap<String, Vec<usize>>> {
    let mut sets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (j, v) in cx.cells(0).iter().enumerate() {
        sets.insert(v.id.clone(), vec![j]);
    }
    for k in 1..=cx.dim() {
        for cell in cx.cells(k) {
            let boundary = cx.boundary_of(&cell.id).expect("cell exists");
            let unit = boundary.iter().all(|(_, c)| **c == BigInt::from(1) || **c == BigInt::from(-1));
            if boundary.len() != k as usize + 1 || !unit {
                return Err(Error::Argument(format!("cell {:?} is not a simplex", cell.id)));
            }
            let mut union = BTreeSet::new();
            for (face, _) in &boundary {
                union.extend(sets[&face.id].iter().copied());
            }
            if union.len() != k as usize + 1 {
                return Err(Error::Argument(format!("cell {:?} is not a simplex", cell.id)));
            }
            sets.insert(cell.id.clone(), union.into_iter().collect());
        }
    }
    let distinct: BTreeSet<&Vec<usize>> = sets.values().collect();
    if distinct.len() != sets.len() {
        return Err(Error::Argument("two cells share a vertex set; not simplicial".into()));
    }
    Ok(sets)
}

/// Simplicial join `Δ1 * Δ2`: faces `σ1 ⊔ σ2`, weights `x_{σ1} x_{σ2}`.
///
/// The vertices of `Δ1` precede those of `Δ2` in the orientation order.
pub fn join(first: &CellComplex, second: &CellComplex) -> Result<CellComplex> {
    let shared: Vec<String> = first.variables().intersection(&second.variables()).cloned().collect();
    if !shared.is_empty() {
        return Err(Error::Argument(format!("join factors share weight variables {shared:?}")));
    }
    let ids_a: BTreeSet<&str> = first.cells(0).iter().map(|c| c.id.as_str()).collect();
    if let Some(clash) = second.cells(0).iter().find(|c| ids_a.contains(c.id.as_str())) {
        return Err(Error::Argument(format!("join factors share vertex label {:?}", clash.id)));
    }
    let sets_a = simplicial_structure(first)?;
    let sets_b = simplicial_structure(second)?;

    let offset = first.f(0);
    let vertices: Vec<Vertex> = first
        .cells(0)
        .iter()
        .chain(second.cells(0))
        .map(|c| Vertex { label: c.id.clone(), weight: c.weight.clone() })
        .collect();

    // every cell of each factor, plus the empty cell
    let side = |cx: &CellComplex, sets: &BTreeMap<String, Vec<usize>>, shift: usize| {
        let mut out = vec![(Vec::new(), Monomial::one())];
        for cell in cx.all_cells() {
            out.push((sets[&cell.id].iter().map(|v| v + shift).collect::<Vec<_>>(), cell.weight.clone()));
        }
        out
    };
    let mut faces = Vec::new();
    for (va, wa) in side(first, &sets_a, 0) {
        for (vb, wb) in side(second, &sets_b, offset) {
            if va.is_empty() && vb.is_empty() {
                continue;
            }
            let mut vertices_of = va.clone();
            vertices_of.extend(vb);
            faces.push(Face { vertices: vertices_of, weight: wa.times(&wb) });
        }
    }
    assemble(&vertices, faces)
}

/// Parameters of the hypercube `Q_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubeSpec {
    pub n: usize,
}

/// The cube `[0,1]^n` with its `3^n` cells `σ_1 × … × σ_n`, `σ_i ∈ {0, 1, I}`.
///
/// Cell ids are the words in parentheses, e.g. `(0I1)`. The boundary replaces
/// the i-th `I` by `1` with sign `(−1)^(number of earlier I's)` and by `0` with
/// the opposite sign. Weight `q_A y_B z_C` where A, B, C are the positions of
/// `I`, `0`, `1`.
pub fn hypercube(spec: CubeSpec) -> Result<CellComplex> {
    let n = spec.n;
    let mut specs = Vec::new();
    for word in std::iter::repeat(['0', '1', 'I']).take(n).multi_cartesian_product() {
        specs.push(cube_cell(&word));
    }
    if specs.is_empty() {
        specs.push(cube_cell(&[]));
    }
    CellComplex::new(specs)
}

fn cube_id(word: &[char]) -> String {
    format!("({})", word.iter().collect::<String>())
}

fn cube_cell(word: &[char]) -> CellSpec {
    let dim = word.iter().filter(|&&c| c == 'I').count();
    let weight = Monomial::from_exponents(word.iter().enumerate().map(|(i, c)| {
        let var = match c {
            'I' => format!("q[{}]", i + 1),
            '0' => format!("y[{}]", i + 1),
            _ => format!("z[{}]", i + 1),
        };
        (var, 1)
    }));
    let mut spec = CellSpec::new(cube_id(word), dim).with_weight(weight);
    let mut seen = 0;
    for (i, &c) in word.iter().enumerate() {
        if c != 'I' {
            continue;
        }
        let sign = if seen % 2 == 0 { 1 } else { -1 };
        seen += 1;
        let mut upper = word.to_vec();
        upper[i] = '1';
        let mut lower = word.to_vec();
        lower[i] = '0';
        spec = spec.with_face(cube_id(&upper), sign).with_face(cube_id(&lower), -sign);
    }
    spec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_skeleton_counts() {
        assert_eq!(simplex_skeleton(4, 1).unwrap().f_vector(), vec![1, 4, 6]);
        assert_eq!(simplex_skeleton(6, 2).unwrap().f_vector(), vec![1, 6, 15, 20]);
        let tri = simplex_skeleton(3, 2).unwrap();
        for k in -1..=2 {
            assert_eq!(tri.homology_order(k), crate::complex::HomologyOrder::Finite(1.into()));
        }
        assert!(simplex_skeleton(3, 3).is_err());
        assert!(simplex_skeleton(3, -2).is_err());
        assert_eq!(simplex_skeleton(3, -1).unwrap().dim(), -1);
    }

    #[test]
    fn simplex_weights_are_vertex_products() {
        let k = simplex_skeleton(3, 1).unwrap();
        let e = k.cell("1,3").unwrap();
        assert_eq!(e.weight, Monomial::from_exponents([("v[1]", 1), ("v[3]", 1)]));
        let big = simplex_skeleton(12, 0).unwrap();
        let ids: Vec<&str> = big.cells(0).iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids[..3], ["01", "02", "03"]);
    }

    #[test]
    fn colorful_counts() {
        assert_eq!(complete_colorful(&ColorfulSpec::new([2, 2])).unwrap().f_vector(), vec![1, 4, 4]);
        let oct = complete_colorful(&ColorfulSpec::new([2, 2, 2])).unwrap();
        assert_eq!(oct.f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(oct.reduced_betti(2), 1);
        assert!(oct.is_apc());
        let single = complete_colorful(&ColorfulSpec::new([4])).unwrap();
        assert_eq!(single.f_vector(), vec![1, 4]);
        assert!(complete_colorful(&ColorfulSpec::new([2, 0])).is_err());
        let skel = complete_colorful(&ColorfulSpec { sizes: vec![2, 2, 2], skeleton: Some(1) }).unwrap();
        assert_eq!(skel.f_vector(), vec![1, 6, 12]);
    }

    #[test]
    fn join_of_points_is_an_edge() {
        let a = complete_colorful(&ColorfulSpec::new([1])).unwrap();
        let b = simplex_skeleton(1, 0).unwrap();
        let e = join(&a, &b).unwrap();
        assert_eq!(e.f_vector(), vec![1, 2, 1]);
        assert!(join(&b, &b).is_err());
    }

    #[test]
    fn join_of_edgeless_is_colorful() {
        let sizes = [2usize, 3, 2];
        let factors: Vec<CellComplex> = sizes
            .iter()
            .enumerate()
            .map(|(q, &n)| {
                let specs = (1..=n)
                    .map(|i| {
                        CellSpec::new(format!("{}.{}", q + 1, i), 0).with_weight(Monomial::var(colorful_variable(q + 1, i)))
                    })
                    .collect();
                CellComplex::new(specs).unwrap()
            })
            .collect();
        let joined = join(&join(&factors[0], &factors[1]).unwrap(), &factors[2]).unwrap();
        let direct = complete_colorful(&ColorfulSpec::new(sizes)).unwrap();
        assert_eq!(joined, direct);
    }

    #[test]
    fn suspension_of_triangle() {
        let kn = simplex_skeleton(3, 1).unwrap();
        let two = complete_colorful(&ColorfulSpec::new([2])).unwrap();
        let s = join(&kn, &two).unwrap();
        assert_eq!(s.f_vector(), vec![1, 5, 9, 6]);
        assert_eq!(s.reduced_betti(2), 1);
        assert!(s.is_apc());
    }

    #[test]
    fn join_rejects_non_simplicial() {
        let q2 = hypercube(CubeSpec { n: 2 }).unwrap();
        let p = simplex_skeleton(1, 0).unwrap();
        assert!(matches!(join(&q2, &p), Err(Error::Argument(_))));
    }

    #[test]
    fn hypercube_structure() {
        let q0 = hypercube(CubeSpec { n: 0 }).unwrap();
        assert_eq!(q0.f_vector(), vec![1, 1]);
        let q1 = hypercube(CubeSpec { n: 1 }).unwrap();
        let d = q1.boundary_matrix(1);
        assert_eq!((d.rows(), d.cols()), (2, 1));
        // rows (0), (1)
        assert_eq!(d[(0, 0)], BigInt::from(-1));
        assert_eq!(d[(1, 0)], BigInt::from(1));
        assert_eq!(hypercube(CubeSpec { n: 2 }).unwrap().f_vector(), vec![1, 4, 4, 1]);
        let q3 = hypercube(CubeSpec { n: 3 }).unwrap();
        assert_eq!(q3.f_vector(), vec![1, 8, 12, 6, 1]);
        let graph = q3.skeleton(1).unwrap();
        assert_eq!(graph.f_vector(), vec![1, 8, 12]);
        let surface = q3.skeleton(2).unwrap();
        assert_eq!(surface.reduced_betti(2), 1);
        assert_eq!(surface.reduced_betti(1), 0);
        assert_eq!(surface.reduced_betti(0), 0);
        assert!(q3.is_apc());
        let c = q3.cell("(I0I)").unwrap();
        assert_eq!(c.weight, Monomial::from_exponents([("q[1]", 1), ("y[2]", 1), ("q[3]", 1)]));
    }
}
