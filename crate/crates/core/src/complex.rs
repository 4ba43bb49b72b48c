//! Finite cell complexes given by signed boundary incidences.
//!
//! The empty cell of dimension −1 is always present and never stored: every
//! 0-cell has coefficient +1 on it, so all homology here is reduced homology.
//! Within each dimension cells are kept in lexicographic order of their ids,
//! and every matrix uses that order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;

/// A monomial in named weight variables, as variable → exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: impl Into<String>) -> Self {
        let mut m = Self::default();
        m.0.insert(name.into(), 1);
        m
    }

    pub fn from_exponents<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut m = Self::default();
        for (v, e) in pairs {
            if e > 0 {
                *m.0.entry(v.into()).or_insert(0) += e;
            }
        }
        m
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, e) in &other.0 {
            *out.0.entry(v.clone()).or_insert(0) += e;
        }
        out
    }

    pub fn exponents(&self) -> &BTreeMap<String, u32> {
        &self.0
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
    pub weight: Monomial,
}

/// Input description of one cell: id, dimension, boundary as `(face id, coefficient)`, weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSpec {
    pub id: String,
    pub dim: usize,
    pub boundary: Vec<(String, BigInt)>,
    pub weight: Monomial,
}

impl CellSpec {
    pub fn new(id: impl Into<String>, dim: usize) -> Self {
        Self { id: id.into(), dim, boundary: Vec::new(), weight: Monomial::one() }
    }

    pub fn with_face(mut self, face: impl Into<String>, coefficient: i64) -> Self {
        self.boundary.push((face.into(), BigInt::from(coefficient)));
        self
    }

    pub fn with_weight(mut self, weight: Monomial) -> Self {
        self.weight = weight;
        self
    }
}

/// Order of a homology group: finite, or infinite when the Betti number is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyOrder {
    Finite(BigInt),
    Infinite,
}

impl HomologyOrder {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Self::Finite(n) => Some(n),
            Self::Infinite => None,
        }
    }
}

impl fmt::Display for HomologyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(n) => write!(f, "{n}"),
            Self::Infinite => write!(f, "infinite"),
        }
    }
}

/// An immutable finite cell complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    /// `cells[k]` are the k-cells, sorted by id.
    cells: Vec<Vec<Cell>>,
    /// `boundary[k][j]` lists `(row index in cells[k-1], coefficient)` for the j-th k-cell; empty for k = 0.
    boundary: Vec<Vec<Vec<(usize, BigInt)>>>,
    index: HashMap<String, (usize, usize)>,
}

impl CellComplex {
    /// The complex containing only the empty cell.
    pub fn empty() -> Self {
        Self { cells: Vec::new(), boundary: Vec::new(), index: HashMap::new() }
    }

    /// Builds and validates a complex: unique ids, faces of dimension exactly one
    /// lower, no explicit boundary on 0-cells, and `∂∂ = 0`.
    pub fn new(specs: Vec<CellSpec>) -> Result<Self> {
        let top = specs.iter().map(|s| s.dim + 1).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<CellSpec>> = vec![Vec::new(); top];
        let mut seen = BTreeSet::new();
        for spec in specs {
            if !seen.insert(spec.id.clone()) {
                return Err(Error::Format(format!("duplicate cell id {:?}", spec.id)));
            }
            by_dim[spec.dim].push(spec);
        }
        for level in &mut by_dim {
            level.sort_by(|a, b| a.id.cmp(&b.id));
        }

        let mut index = HashMap::new();
        for (k, level) in by_dim.iter().enumerate() {
            for (j, spec) in level.iter().enumerate() {
                index.insert(spec.id.clone(), (k, j));
            }
        }

        let mut boundary = Vec::with_capacity(top);
        for (k, level) in by_dim.iter().enumerate() {
            let mut cols = Vec::with_capacity(level.len());
            for spec in level {
                if k == 0 && !spec.boundary.is_empty() {
                    return Err(Error::Format(format!(
                        "0-cell {:?} lists boundary faces; the augmentation is implicit",
                        spec.id
                    )));
                }
                let mut col: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (face, coef) in &spec.boundary {
                    match index.get(face) {
                        Some(&(fk, fj)) if fk + 1 == k => *col.entry(fj).or_insert_with(BigInt::zero) += coef,
                        Some(&(fk, _)) => {
                            return Err(Error::Format(format!(
                                "cell {:?} of dimension {k} lists face {face:?} of dimension {fk}",
                                spec.id
                            )))
                        }
                        None => {
                            return Err(Error::Format(format!("cell {:?} lists unknown face {face:?}", spec.id)))
                        }
                    }
                }
                cols.push(col.into_iter().filter(|(_, c)| !c.is_zero()).collect());
            }
            boundary.push(cols);
        }

        let cells = by_dim
            .into_iter()
            .map(|level| {
                level.into_iter().map(|s| Cell { id: s.id, dim: s.dim, weight: s.weight }).collect()
            })
            .collect();
        let complex = Self { cells, boundary, index };
        complex.check_boundary_squares_to_zero()?;
        Ok(complex)
    }

    fn check_boundary_squares_to_zero(&self) -> Result<()> {
        for k in 1..=self.dim() + 1 {
            let prod = self.boundary_matrix(k - 1).mul(&self.boundary_matrix(k))?;
            if !prod.is_zero() {
                return Err(Error::Format(format!("boundary maps do not compose to zero in degree {k}")));
            }
        }
        Ok(())
    }

    /// Dimension; −1 for the complex with only the empty cell.
    pub fn dim(&self) -> isize {
        self.cells.len() as isize - 1
    }

    /// Number of k-cells, with `f_{−1} = 1`.
    pub fn f(&self, k: isize) -> usize {
        match k {
            -1 => 1,
            k if k >= 0 && k <= self.dim() => self.cells[k as usize].len(),
            _ => 0,
        }
    }

    /// `(f_{−1}, f_0, …, f_d)`.
    pub fn f_vector(&self) -> Vec<usize> {
        (-1..=self.dim()).map(|k| self.f(k)).collect()
    }

    /// The k-cells in matrix order. Empty for k outside `0..=dim`.
    pub fn cells(&self, k: isize) -> &[Cell] {
        if k >= 0 && k <= self.dim() {
            &self.cells[k as usize]
        } else {
            &[]
        }
    }

    pub fn all_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().flatten()
    }

    pub fn cell(&self, id: &str) -> Option<&Cell> {
        self.index.get(id).map(|&(k, j)| &self.cells[k][j])
    }

    /// Position of a cell within its dimension.
    pub fn position(&self, id: &str) -> Option<(usize, usize)> {
        self.index.get(id).copied()
    }

    /// Boundary of a cell as `(face, coefficient)`; empty for 0-cells.
    pub fn boundary_of(&self, id: &str) -> Option<Vec<(&Cell, &BigInt)>> {
        let &(k, j) = self.index.get(id)?;
        Some(self.boundary[k][j].iter().map(|(r, c)| (&self.cells[k - 1][*r], c)).collect())
    }

    /// All weight variables appearing on any cell, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        self.all_cells().flat_map(|c| c.weight.variables().map(str::to_owned)).collect()
    }

    /// Matrix of `∂_k` with rows indexed by the (k−1)-cells and columns by the k-cells.
    ///
    /// `∂_0` is the 1×f_0 augmentation row of ones; `∂_{−1}` is 0×1.
    pub fn boundary_matrix(&self, k: isize) -> IntegerMatrix {
        let rows = if k >= 0 { self.f(k - 1) } else { 0 };
        let cols = self.f(k);
        if k == 0 {
            return IntegerMatrix::from_fn(rows, cols, |_, _| BigInt::one());
        }
        let mut m = IntegerMatrix::zeros(rows, cols);
        if k >= 1 && k <= self.dim() {
            for (j, col) in self.boundary[k as usize].iter().enumerate() {
                for (i, c) in col {
                    m[(*i, j)] = c.clone();
                }
            }
        }
        m
    }

    /// Subcomplex of all cells of dimension ≤ k.
    pub fn skeleton(&self, k: isize) -> Result<Self> {
        if k < -1 || k > self.dim() {
            return Err(Error::Argument(format!("skeleton dimension {k} outside -1..={}", self.dim())));
        }
        let keep = (k + 1) as usize;
        let cells: Vec<Vec<Cell>> = self.cells[..keep].to_vec();
        let boundary = self.boundary[..keep].to_vec();
        let index = self.index.iter().filter(|(_, (d, _))| *d < keep).map(|(id, p)| (id.clone(), *p)).collect();
        Ok(Self { cells, boundary, index })
    }

    /// The complex whose top cells are exactly `top` and whose lower skeleton is `Δ_{(d−1)}`.
    pub fn top_subcomplex<S: AsRef<str>>(&self, top: &[S]) -> Result<Self> {
        let d = self.dim();
        if d < 0 {
            if top.is_empty() {
                return Ok(self.clone());
            }
            return Err(Error::Argument("the empty complex has no top cells".into()));
        }
        let mut keep = BTreeSet::new();
        for id in top {
            let id = id.as_ref();
            match self.index.get(id) {
                Some(&(k, j)) if k as isize == d => {
                    keep.insert(j);
                }
                Some(_) => return Err(Error::Argument(format!("cell {id:?} is not a top cell"))),
                None => return Err(Error::Argument(format!("unknown cell {id:?}"))),
            }
        }
        self.restrict_top(&keep.into_iter().collect::<Vec<_>>())
    }

    /// Like [`top_subcomplex`](Self::top_subcomplex) but by sorted positions among the top cells.
    pub(crate) fn restrict_top(&self, positions: &[usize]) -> Result<Self> {
        let d = self.dim();
        if positions.is_empty() {
            return self.skeleton(d - 1);
        }
        let du = d as usize;
        let mut cells = self.cells.clone();
        let mut boundary = self.boundary.clone();
        cells[du] = positions.iter().map(|&j| self.cells[du][j].clone()).collect();
        boundary[du] = positions.iter().map(|&j| self.boundary[du][j].clone()).collect();
        let mut index: HashMap<String, (usize, usize)> =
            self.index.iter().filter(|(_, (k, _))| *k < du).map(|(id, p)| (id.clone(), *p)).collect();
        for (j, c) in cells[du].iter().enumerate() {
            index.insert(c.id.clone(), (du, j));
        }
        Ok(Self { cells, boundary, index })
    }

    /// Reduced Betti number `f_k − rank ∂_k − rank ∂_{k+1}`.
    pub fn reduced_betti(&self, k: isize) -> usize {
        let f = self.f(k);
        if f == 0 {
            return 0;
        }
        f - self.boundary_matrix(k).rank() - self.boundary_matrix(k + 1).rank()
    }

    /// `|H̃_k(Δ; ℤ)|`.
    ///
    /// When the Betti number vanishes the group is the torsion of
    /// `coker ∂_{k+1}`, because `ker ∂_k` is a saturated sublattice.
    pub fn homology_order(&self, k: isize) -> HomologyOrder {
        if self.reduced_betti(k) > 0 {
            return HomologyOrder::Infinite;
        }
        HomologyOrder::Finite(self.boundary_matrix(k + 1).smith_normal_form().torsion_order())
    }

    /// Acyclic in positive codimension: `β̃_k = 0` for every `k < dim`.
    pub fn is_apc(&self) -> bool {
        (-1..self.dim()).all(|k| self.reduced_betti(k) == 0)
    }

    /// Product of the cell weights over all k-cells, as a monomial.
    pub fn weight_product(&self, k: isize) -> Monomial {
        if k == -1 {
            return Monomial::one();
        }
        self.cells(k).iter().fold(Monomial::one(), |acc, c| acc.times(&c.weight))
    }

    /// Same complex with the sign of one cell's orientation flipped
    /// (its boundary column and its row in the coboundary both negate).
    pub fn with_flipped_orientation(&self, id: &str) -> Result<Self> {
        let &(k, j) = self.index.get(id).ok_or_else(|| Error::Argument(format!("unknown cell {id:?}")))?;
        let mut out = self.clone();
        if k == 0 {
            return Err(Error::Argument("0-cells are oriented by the augmentation".into()));
        }
        for (_, c) in &mut out.boundary[k][j] {
            *c = -c.clone();
        }
        if k + 1 < out.boundary.len() {
            for col in &mut out.boundary[k + 1] {
                for (r, c) in col.iter_mut() {
                    if *r == j {
                        *c = -c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rebuilds the cell descriptions (the inverse of [`CellComplex::new`]).
    pub fn to_specs(&self) -> Vec<CellSpec> {
        let mut out = Vec::new();
        for (k, level) in self.cells.iter().enumerate() {
            for (j, cell) in level.iter().enumerate() {
                let boundary = self.boundary[k][j]
                    .iter()
                    .map(|(r, c)| (self.cells[k - 1][*r].id.clone(), c.clone()))
                    .collect();
                out.push(CellSpec { id: cell.id.clone(), dim: k, boundary, weight: cell.weight.clone() });
            }
        }
        out
    }
}
