//! Brute-force enumeration of cellular spanning trees and their
//! torsion-squared weighted counts.
//!
//! A k-tree is a set `T` of k-cells with `|T| = rank ∂_k` whose columns in
//! `∂_k` are independent; together with the full (k−1)-skeleton it has finite
//! `H̃_{k−1}`, of order `h` equal to the product of the invariant factors of
//! the column submatrix `∂_k[:, T]`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::complex::{CellComplex, HomologyOrder};
use crate::error::{Error, Result};
use crate::laplacian::{cell_weight_product, cell_weights, pi_hat, updown_laplacian, Specialization};
use crate::linalg::{invariant_factors_checked, rank_checked, IntegerMatrix};

/// One k-tree and the order of its codimension-one homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRecord {
    /// Ids of the k-cells, in matrix order.
    pub cells: Vec<String>,
    pub torsion_order: BigInt,
}

/// Summary of the k-trees of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCountReport {
    pub k: isize,
    /// `τ_k = Σ h²`.
    pub tau: BigInt,
    /// `τ̂_k = Σ h² ∏_{σ∈T} X_σ` at the report's specialization.
    pub tau_hat: BigRational,
    pub tree_count: u64,
    pub max_torsion: BigInt,
}

/// Column data of `∂_k` prepared for repeated subset tests.
struct TreeProblem<'a> {
    complex: &'a CellComplex,
    k: isize,
    rank: usize,
    /// `∂_k` row-major, if all entries fit in `i64`.
    small: Option<Vec<Vec<i64>>>,
    big: IntegerMatrix,
}

impl<'a> TreeProblem<'a> {
    fn new(complex: &'a CellComplex, k: isize) -> Result<Self> {
        if k < -1 || k > complex.dim() {
            return Err(Error::Argument(format!("tree dimension {k} outside -1..={}", complex.dim())));
        }
        if !complex.is_apc() {
            return Err(Error::Unsupported("spanning trees need a complex acyclic in positive codimension".into()));
        }
        let big = complex.boundary_matrix(k);
        let rank = big.rank();
        let small = big.to_i64_rows();
        Ok(Self { complex, k, rank, small, big })
    }

    fn candidates(&self) -> itertools::Combinations<std::ops::Range<usize>> {
        (0..self.complex.f(self.k)).combinations(self.rank)
    }

    /// Torsion order if the columns are independent.
    fn evaluate(&self, cols: &[usize]) -> Option<BigInt> {
        if let Some(small) = &self.small {
            let sub: Vec<Vec<i64>> = small.iter().map(|row| cols.iter().map(|&j| row[j]).collect()).collect();
            if let Some(r) = rank_checked(sub.clone()) {
                if r < cols.len() {
                    return None;
                }
                if let Some(f) = invariant_factors_checked(sub) {
                    return Some(f.into_iter().map(BigInt::from).product());
                }
            }
        }
        let sub = self.big.select_columns(cols);
        if sub.rank() < cols.len() {
            return None;
        }
        Some(sub.smith_normal_form().torsion_order())
    }

    fn record(&self, cols: &[usize], torsion_order: BigInt) -> TreeRecord {
        let cells = self.complex.cells(self.k);
        TreeRecord { cells: cols.iter().map(|&j| cells[j].id.clone()).collect(), torsion_order }
    }

    /// Recomputes `|H̃_{k−1}(Δ_T)|` from the subcomplex.
    fn cross_check(&self, cols: &[usize], torsion: &BigInt) {
        if self.k < 0 {
            return;
        }
        let sub = self
            .complex
            .skeleton(self.k)
            .and_then(|s| s.restrict_top(cols))
            .expect("valid skeleton");
        assert_eq!(
            sub.homology_order(self.k - 1),
            HomologyOrder::Finite(torsion.clone()),
            "column torsion disagrees with subcomplex homology for {cols:?}"
        );
    }
}

/// Streaming enumeration of k-trees in lexicographic order of cell positions.
pub struct TreeIter<'a> {
    problem: TreeProblem<'a>,
    candidates: itertools::Combinations<std::ops::Range<usize>>,
    found: usize,
}

impl Iterator for TreeIter<'_> {
    type Item = TreeRecord;

    fn next(&mut self) -> Option<TreeRecord> {
        for cols in self.candidates.by_ref() {
            if let Some(h) = self.problem.evaluate(&cols) {
                if cfg!(debug_assertions) && self.found % 50 == 0 {
                    self.problem.cross_check(&cols, &h);
                }
                self.found += 1;
                return Some(self.problem.record(&cols, h));
            }
        }
        None
    }
}

/// Enumerates the k-trees of an APC complex.
pub fn enumerate_trees(cx: &CellComplex, k: isize) -> Result<TreeIter<'_>> {
    let problem = TreeProblem::new(cx, k)?;
    let candidates = problem.candidates();
    Ok(TreeIter { problem, candidates, found: 0 })
}

const CHUNK: usize = 4096;

/// All k-trees, evaluated in parallel chunks on the current rayon pool; same order as [`enumerate_trees`].
pub fn collect_trees(cx: &CellComplex, k: isize) -> Result<Vec<TreeRecord>> {
    let problem = TreeProblem::new(cx, k)?;
    let mut out = Vec::new();
    let mut candidates = problem.candidates();
    loop {
        let chunk: Vec<Vec<usize>> = candidates.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let found: Vec<(Vec<usize>, BigInt)> = chunk
            .into_par_iter()
            .filter_map(|cols| problem.evaluate(&cols).map(|h| (cols, h)))
            .collect();
        for (cols, h) in found {
            if cfg!(debug_assertions) && out.len() % 50 == 0 {
                problem.cross_check(&cols, &h);
            }
            out.push(problem.record(&cols, h));
        }
    }
    Ok(out)
}

/// `τ_k`: sum of squared torsion orders over the k-trees.
pub fn tau(cx: &CellComplex, k: isize) -> Result<BigInt> {
    Ok(collect_trees(cx, k)?.iter().map(|t| &t.torsion_order * &t.torsion_order).sum())
}

fn weighted_sum(cx: &CellComplex, k: isize, trees: &[TreeRecord], x: &Specialization) -> Result<BigRational> {
    let weights = cell_weights(cx, k, x)?;
    let cells = cx.cells(k);
    let mut total = BigRational::zero();
    for t in trees {
        let mut term = BigRational::from_integer(&t.torsion_order * &t.torsion_order);
        for id in &t.cells {
            let j = cells.binary_search_by(|c| c.id.as_str().cmp(id)).expect("tree cell exists");
            term *= &weights[j];
        }
        total += term;
    }
    Ok(total)
}

/// `τ̂_k`: torsion-squared weighted tree count at a specialization.
pub fn tau_hat(cx: &CellComplex, k: isize, x: &Specialization) -> Result<BigRational> {
    weighted_sum(cx, k, &collect_trees(cx, k)?, x)
}

/// Enumerates once and reports `τ_k`, `τ̂_k`, the tree count and the largest torsion order.
pub fn tree_count_report(cx: &CellComplex, k: isize, x: &Specialization) -> Result<TreeCountReport> {
    let trees = collect_trees(cx, k)?;
    let tau = trees.iter().map(|t| &t.torsion_order * &t.torsion_order).sum();
    let tau_hat = weighted_sum(cx, k, &trees, x)?;
    let max_torsion = trees.iter().map(|t| t.torsion_order.clone()).max().unwrap_or_else(BigInt::zero);
    Ok(TreeCountReport { k, tau, tau_hat, tree_count: trees.len() as u64, max_torsion })
}

/// Both sides of the weighted matrix-tree identity
/// `π̂_k · |H̃_{k−2}|² · X_{(k−1)} = τ̂_k · τ̂_{k−1}`, as `(spectral, enumerative)`.
pub fn cmtt_sides(cx: &CellComplex, k: isize, x: &Specialization) -> Result<(BigRational, BigRational)> {
    if k < 0 || k > cx.dim() {
        return Err(Error::Argument(format!("matrix-tree index {k} outside 0..={}", cx.dim())));
    }
    if !cx.is_apc() {
        return Err(Error::Unsupported("matrix-tree identity needs an APC complex".into()));
    }
    let HomologyOrder::Finite(h) = cx.homology_order(k - 2) else {
        return Err(Error::Unsupported(format!("H̃_{} is infinite", k - 2)));
    };
    let spectral = pi_hat(cx, k, x)? * BigRational::from_integer(&h * &h) * cell_weight_product(cx, k - 1, x)?;
    let enumerative = tau_hat(cx, k, x)? * tau_hat(cx, k - 1, x)?;
    Ok((spectral, enumerative))
}

pub fn verify_cmtt(cx: &CellComplex, k: isize, x: &Specialization) -> Result<bool> {
    let (a, b) = cmtt_sides(cx, k, x)?;
    Ok(a == b)
}

/// Weighted tree count of a connected graph from the up-down Laplacian on vertices:
/// `(∏ X_v / Σ X_v) · pdet L`.
pub fn graph_tau_hat(cx: &CellComplex, x: &Specialization) -> Result<BigRational> {
    if cx.dim() != 1 {
        return Err(Error::Unsupported(format!("expected a graph, got dimension {}", cx.dim())));
    }
    if cx.reduced_betti(0) != 0 {
        return Err(Error::Unsupported("graph is disconnected".into()));
    }
    let weights = cell_weights(cx, 0, x)?;
    let product: BigRational = weights.iter().product();
    let sum: BigRational = weights.iter().sum();
    Ok(product / sum * updown_laplacian(cx, 0, x)?.pdet()?)
}

/// Classical weighted Kirchhoff count for a graph: the determinant of the
/// edge-weighted Laplacian `∂ diag(X_e) ∂^T` with the first vertex deleted.
/// Vertex weights do not enter.
pub fn kirchhoff_tau_hat(cx: &CellComplex, x: &Specialization) -> Result<BigRational> {
    if cx.dim() != 1 {
        return Err(Error::Unsupported(format!("expected a graph, got dimension {}", cx.dim())));
    }
    let d = cx.boundary_matrix(1).to_rational();
    let lap = d.scale_cols(&cell_weights(cx, 1, x)?).mul(&d.transpose())?;
    let rest: Vec<usize> = (1..lap.rows()).collect();
    lap.submatrix(&rest, &rest).determinant()
}

/// Outcome of testing one pair `(S, T)` of the top boundary map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmatrixCheck {
    pub nonsingular: bool,
    /// `Δ_T` is a d-tree and `Δ_{S̄}` is a (d−1)-tree.
    pub double_tree: bool,
    /// When nonsingular: `(det ∂̂_{S,T})²` and the homology-order prediction
    /// `(|H̃_{d−1}(Δ_T)| |H̃_{d−2}(Δ_{S̄})| / |H̃_{d−2}(Δ)|)² X_T / X_S`.
    pub squared: Option<(BigRational, BigRational)>,
}

impl SubmatrixCheck {
    pub fn holds(&self) -> bool {
        self.nonsingular == self.double_tree && self.squared.as_ref().map_or(true, |(a, b)| a == b)
    }
}

fn positions(cx: &CellComplex, k: isize, ids: &[String]) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(ids.len());
    for id in ids {
        match cx.position(id) {
            Some((d, j)) if d as isize == k => out.push(j),
            _ => return Err(Error::Argument(format!("{id:?} is not a {k}-cell"))),
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.len() != ids.len() {
        return Err(Error::Argument("repeated cell ids".into()));
    }
    Ok(out)
}

fn finite(order: HomologyOrder) -> Option<BigInt> {
    order.finite().cloned()
}

/// Tests a square submatrix `∂_{S,T}` of the top boundary map: it is
/// nonsingular exactly when `Δ_T` and `Δ_{S̄}` are trees, and then its
/// weighted determinant squared is predicted by homology orders.
pub fn submatrix_determinant_check(
    cx: &CellComplex,
    s: &[String],
    t: &[String],
    x: &Specialization,
) -> Result<SubmatrixCheck> {
    let d = cx.dim();
    if d < 1 {
        return Err(Error::Argument("submatrix check needs a complex of dimension at least 1".into()));
    }
    let size = cx.f(d) - cx.reduced_betti(d);
    if s.len() != size || t.len() != size {
        return Err(Error::Argument(format!(
            "|S| = {} and |T| = {} must both equal f_d - betti_d = {size}",
            s.len(),
            t.len()
        )));
    }
    let rows = positions(cx, d - 1, s)?;
    let cols = positions(cx, d, t)?;
    let sub = cx.boundary_matrix(d).submatrix(&rows, &cols);
    let det = sub.determinant()?;
    let nonsingular = !det.is_zero();

    let delta_t = cx.restrict_top(&cols)?;
    let t_tree = delta_t.reduced_betti(d) == 0;
    let lower = cx.skeleton(d - 1)?;
    let complement: Vec<usize> = (0..cx.f(d - 1)).filter(|j| rows.binary_search(j).is_err()).collect();
    let delta_s = lower.restrict_top(&complement)?;
    let s_count = complement.len() == lower.f(d - 1) - lower.reduced_betti(d - 1);
    let s_tree = s_count && delta_s.reduced_betti(d - 1) == 0;
    let double_tree = t_tree && s_tree;

    let squared = if nonsingular {
        let ws = cell_weights(cx, d - 1, x)?;
        let wt = cell_weights(cx, d, x)?;
        let ws: Vec<BigRational> = rows.iter().map(|&i| ws[i].clone()).collect();
        let wt: Vec<BigRational> = cols.iter().map(|&j| wt[j].clone()).collect();
        let q = sub.to_rational();
        // det(D_S^{-1} ∂ D_T)^2 = det(W_S^{-1} ∂ W_T ∂^T)
        let gram = q.scale_cols(&wt).mul(&q.transpose())?.scale_rows(&ws.iter().map(|w| w.recip()).collect::<Vec<_>>());
        let weighted = gram.determinant()?;
        let (Some(ht), Some(hs), Some(hd)) = (
            finite(delta_t.homology_order(d - 1)),
            finite(delta_s.homology_order(d - 2)),
            finite(cx.homology_order(d - 2)),
        ) else {
            return Err(Error::Unsupported("infinite homology in the determinant formula".into()));
        };
        let ratio = BigRational::new(ht * hs, hd);
        let xt: BigRational = wt.iter().product();
        let xs: BigRational = ws.iter().product();
        Some((weighted, &ratio * &ratio * xt / xs))
    } else {
        None
    };
    Ok(SubmatrixCheck { nonsingular, double_tree, squared })
}

pub fn verify_submatrix_determinant(cx: &CellComplex, s: &[String], t: &[String], x: &Specialization) -> Result<bool> {
    Ok(submatrix_determinant_check(cx, s, t, x)?.holds())
}

/// `Σ_{S,T} (det ∂̂_{S,T})²` over all square submatrices of the top boundary
/// map of size `rank ∂_d`. By Binet–Cauchy this is the pseudodeterminant of
/// the up-down Laplacian in degree d−1.
pub fn binet_cauchy_expansion(cx: &CellComplex, x: &Specialization) -> Result<BigRational> {
    let d = cx.dim();
    let full = cx.boundary_matrix(d);
    let r = full.rank();
    let ws = cell_weights(cx, d - 1, x)?;
    let wt = cell_weights(cx, d, x)?;
    let mut total = BigRational::zero();
    for rows in (0..full.rows()).combinations(r) {
        for cols in (0..full.cols()).combinations(r) {
            let det = full.submatrix(&rows, &cols).determinant()?;
            if det.is_zero() {
                continue;
            }
            let xt: BigRational = cols.iter().map(|&j| wt[j].clone()).product();
            let xs: BigRational = rows.iter().map(|&i| ws[i].clone()).product();
            total += BigRational::from_integer(&det * &det) * xt / xs;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::families::{complete_colorful, simplex_skeleton, ColorfulSpec};
    use crate::laplacian::rat;

    #[test]
    fn triangle_trees() {
        let k3 = simplex_skeleton(3, 1).unwrap();
        let trees: Vec<TreeRecord> = enumerate_trees(&k3, 1).unwrap().collect();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.torsion_order == BigInt::one()));
        assert_eq!(trees[0].cells, vec!["1,2", "1,3"]);
        assert_eq!(collect_trees(&k3, 1).unwrap(), trees);
    }

    #[test]
    fn vertex_and_empty_trees() {
        let k3 = simplex_skeleton(3, 1).unwrap();
        let zero: Vec<TreeRecord> = enumerate_trees(&k3, 0).unwrap().collect();
        assert_eq!(zero.len(), 3);
        assert_eq!(zero[1].cells, vec!["2"]);
        let empty: Vec<TreeRecord> = enumerate_trees(&k3, -1).unwrap().collect();
        assert_eq!(empty, vec![TreeRecord { cells: vec![], torsion_order: BigInt::one() }]);
        assert_eq!(tau(&k3, -1).unwrap(), BigInt::one());
    }

    #[test]
    fn non_apc_rejected() {
        let g = crate::families::simplicial_complex(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert!(matches!(enumerate_trees(&g, 1), Err(Error::Unsupported(_))));
        assert!(matches!(tau(&g, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn triangle_weighted_count() {
        let k3 = simplex_skeleton(3, 1).unwrap();
        let (a, b, c) = (rat(2), rat(3), BigRational::new(5.into(), 7.into()));
        let x = Specialization::from_pairs([("v[1]", a.clone()), ("v[2]", b.clone()), ("v[3]", c.clone())]).unwrap();
        let expected = &a * &b * &c * (&a + &b + &c);
        assert_eq!(tau_hat(&k3, 1, &x).unwrap(), expected);
        assert_eq!(graph_tau_hat(&k3, &x).unwrap(), expected);
        assert_eq!(kirchhoff_tau_hat(&k3, &x).unwrap(), expected);
    }

    #[test]
    fn cmtt_on_triangle() {
        let k3 = simplex_skeleton(3, 1).unwrap();
        let x = Specialization::ones_for(&k3);
        assert_eq!(cmtt_sides(&k3, 1, &x).unwrap(), (rat(9), rat(9)));
        assert!(verify_cmtt(&k3, 0, &x).unwrap());
    }

    #[test]
    fn graph_counts() {
        let k22 = complete_colorful(&ColorfulSpec::new([2, 2])).unwrap();
        assert_eq!(graph_tau_hat(&k22, &Specialization::ones_for(&k22)).unwrap(), rat(4));
        let tri = simplex_skeleton(3, 2).unwrap();
        assert!(graph_tau_hat(&tri, &Specialization::ones_for(&tri)).is_err());
    }

    #[test]
    fn triangle_submatrices_exhaustive() {
        let k3 = simplex_skeleton(3, 1).unwrap();
        let x = Specialization::from_pairs([("v[1]", rat(2)), ("v[2]", rat(3)), ("v[3]", rat(11))]).unwrap();
        let verts: Vec<String> = k3.cells(0).iter().map(|c| c.id.clone()).collect();
        let edges: Vec<String> = k3.cells(1).iter().map(|c| c.id.clone()).collect();
        let mut nonsingular = 0;
        for s in verts.iter().cloned().combinations(2) {
            for t in edges.iter().cloned().combinations(2) {
                let check = submatrix_determinant_check(&k3, &s, &t, &x).unwrap();
                assert!(check.holds(), "{s:?} {t:?} {check:?}");
                nonsingular += check.nonsingular as usize;
            }
        }
        // every 2-edge subset is a tree and every single vertex is a 0-tree
        assert_eq!(nonsingular, 9);
        assert!(submatrix_determinant_check(&k3, &verts[..1], &edges[..2], &x).is_err());
    }
}
