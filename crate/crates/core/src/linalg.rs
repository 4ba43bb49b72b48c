//! Exact dense linear algebra over the integers and the rationals.
//!
//! Everything here is arbitrary precision. The hot loops in tree enumeration
//! go through the checked-`i64` fast paths ([`rank_checked`],
//! [`invariant_factors_checked`]) and fall back to `BigInt` on overflow.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// Dense row-major matrix of reduced rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

macro_rules! dense_common {
    ($ty:ident, $elem:ty) => {
        impl $ty {
            pub fn zeros(rows: usize, cols: usize) -> Self {
                Self { rows, cols, entries: vec![<$elem>::zero(); rows * cols] }
            }

            pub fn identity(n: usize) -> Self {
                let mut m = Self::zeros(n, n);
                for i in 0..n {
                    m[(i, i)] = <$elem>::one();
                }
                m
            }

            pub fn from_rows<T: Into<$elem> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
                let nrows = rows.len();
                let ncols = rows.first().map_or(0, Vec::len);
                let mut entries = Vec::with_capacity(nrows * ncols);
                for row in rows {
                    if row.len() != ncols {
                        return Err(Error::Dimension(format!(
                            "ragged rows: expected {ncols} columns, found {}",
                            row.len()
                        )));
                    }
                    entries.extend(row.iter().cloned().map(Into::into));
                }
                Ok(Self { rows: nrows, cols: ncols, entries })
            }

            pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> $elem) -> Self {
                let mut entries = Vec::with_capacity(rows * cols);
                for i in 0..rows {
                    for j in 0..cols {
                        entries.push(f(i, j));
                    }
                }
                Self { rows, cols, entries }
            }

            pub fn rows(&self) -> usize {
                self.rows
            }

            pub fn cols(&self) -> usize {
                self.cols
            }

            pub fn is_square(&self) -> bool {
                self.rows == self.cols
            }

            pub fn is_zero(&self) -> bool {
                self.entries.iter().all(Zero::is_zero)
            }

            pub fn row(&self, i: usize) -> &[$elem] {
                &self.entries[i * self.cols..(i + 1) * self.cols]
            }

            pub fn transpose(&self) -> Self {
                Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
            }

            /// Submatrix on the given row and column index lists, in the given order.
            pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
                Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
            }

            pub fn select_columns(&self, cols: &[usize]) -> Self {
                let rows: Vec<usize> = (0..self.rows).collect();
                self.submatrix(&rows, cols)
            }

            pub fn mul(&self, other: &Self) -> Result<Self> {
                if self.cols != other.rows {
                    return Err(Error::Dimension(format!(
                        "cannot multiply {}x{} by {}x{}",
                        self.rows, self.cols, other.rows, other.cols
                    )));
                }
                let mut out = Self::zeros(self.rows, other.cols);
                for i in 0..self.rows {
                    for l in 0..self.cols {
                        let a = &self[(i, l)];
                        if a.is_zero() {
                            continue;
                        }
                        for j in 0..other.cols {
                            let b = &other[(l, j)];
                            if !b.is_zero() {
                                out[(i, j)] += a * b;
                            }
                        }
                    }
                }
                Ok(out)
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                if self.rows != other.rows || self.cols != other.cols {
                    return Err(Error::Dimension(format!(
                        "cannot add {}x{} and {}x{}",
                        self.rows, self.cols, other.rows, other.cols
                    )));
                }
                let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
                Ok(Self { rows: self.rows, cols: self.cols, entries })
            }
        }

        impl std::ops::Index<(usize, usize)> for $ty {
            type Output = $elem;
            fn index(&self, (i, j): (usize, usize)) -> &$elem {
                assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
                &self.entries[i * self.cols + j]
            }
        }

        impl std::ops::IndexMut<(usize, usize)> for $ty {
            fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut $elem {
                assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
                &mut self.entries[i * self.cols + j]
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for i in 0..self.rows {
                    let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
                    writeln!(f, "[{}]", row.join(", "))?;
                }
                Ok(())
            }
        }
    };
}

dense_common!(IntegerMatrix, BigInt);
dense_common!(RationalMatrix, BigRational);

impl IntegerMatrix {
    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| BigRational::from_integer(e.clone())).collect(),
        }
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        if let Some(small) = self.to_i64_rows() {
            if let Some(r) = rank_checked(small) {
                return r;
            }
        }
        let big: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rank_checked(big).expect("BigInt arithmetic cannot overflow")
    }

    pub fn smith_normal_form(&self) -> SnfResult {
        if let Some(small) = self.to_i64_rows() {
            if let Some(factors) = invariant_factors_checked(small) {
                return SnfResult { invariant_factors: factors.into_iter().map(BigInt::from).collect() };
            }
        }
        let big: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let factors = invariant_factors_checked(big).expect("BigInt arithmetic cannot overflow");
        SnfResult { invariant_factors: factors }
    }

    pub fn determinant(&self) -> Result<BigInt> {
        let d = self.to_rational().determinant()?;
        Ok(d.to_integer())
    }
}

impl RationalMatrix {
    /// Left-multiplies by `diag(d)`.
    pub fn scale_rows(&self, d: &[BigRational]) -> Self {
        assert_eq!(d.len(), self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| &d[i] * &self[(i, j)])
    }

    /// Right-multiplies by `diag(d)`.
    pub fn scale_cols(&self, d: &[BigRational]) -> Self {
        assert_eq!(d.len(), self.cols);
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * &d[j])
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let pivot = a[(rank, col)].clone();
            for r in rank + 1..a.rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &pivot;
                for c in col..a.cols {
                    let delta = &factor * &a[(rank, c)];
                    a[(r, c)] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!("{what} needs a square matrix, got {}x{}", self.rows, self.cols)))
        }
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Result<BigRational> {
        self.require_square("determinant")?;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &pivot;
                for c in col..n {
                    let delta = &factor * &a[(col, c)];
                    a[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Monic characteristic polynomial `det(λI - M)`.
    ///
    /// Reduces to upper Hessenberg form by similarity, then runs the
    /// standard three-term recurrence on the leading principal blocks.
    pub fn char_poly(&self) -> Result<UniPoly> {
        self.require_square("char_poly")?;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(p) = (m..n).find(|&r| !h[(r, m - 1)].is_zero()) else {
                continue;
            };
            h.swap_rows(p, m);
            h.swap_cols(p, m);
            let pivot = h[(m, m - 1)].clone();
            for i in m + 1..n {
                if h[(i, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(i, m - 1)] / &pivot;
                for j in 0..n {
                    let delta = &u * &h[(m, j)];
                    h[(i, j)] -= delta;
                }
                for j in 0..n {
                    let delta = &u * &h[(j, i)];
                    h[(j, m)] += delta;
                }
            }
        }

        // polys[m] = char poly of the leading m x m block.
        let mut polys: Vec<UniPoly> = vec![UniPoly::one()];
        for m in 0..n {
            let lin = UniPoly::new(vec![-h[(m, m)].clone(), BigRational::one()]);
            let mut next = lin.mul(&polys[m]);
            let mut sub_product = BigRational::one();
            for i in (0..m).rev() {
                sub_product *= &h[(i + 1, i)];
                if sub_product.is_zero() {
                    break;
                }
                let coeff = &h[(i, m)] * &sub_product;
                if !coeff.is_zero() {
                    next = next.sub(&polys[i].scale(&coeff));
                }
            }
            polys.push(next);
        }
        Ok(polys.pop().expect("at least the constant polynomial"))
    }

    /// Product of the nonzero eigenvalues; 1 for a nilpotent (including empty) matrix.
    pub fn pdet(&self) -> Result<BigRational> {
        Ok(self.char_poly()?.pdet())
    }
}

/// Invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Positive, nondecreasing under divisibility, zeros omitted.
    pub invariant_factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Product of the invariant factors, which is the order of the torsion
    /// part of the cokernel.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

/// Univariate polynomial in λ with rational coefficients; `coeffs[i]` multiplies λ^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![BigRational::one()] }
    }

    /// `(λ - root)^multiplicity`
    pub fn linear_power(root: &BigRational, multiplicity: u64) -> Self {
        let lin = Self::new(vec![-root.clone(), BigRational::one()]);
        (0..multiplicity).fold(Self::one(), |acc, _| acc.mul(&lin))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let out = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out the largest power of λ.
    pub fn strip_zero_roots(&self) -> Self {
        Self { coeffs: self.coeffs[self.zero_root_multiplicity()..].to_vec() }
    }

    /// For a monic `λ^m (λ^s + … + c_0)` with `c_0 ≠ 0`, returns `(-1)^s c_0`.
    pub fn pdet(&self) -> BigRational {
        let stripped = self.strip_zero_roots();
        let Some(s) = stripped.degree() else {
            return BigRational::one();
        };
        let c0 = stripped.coeffs[0].clone() / stripped.coeffs[s].clone();
        if s % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Substitutes `λ -> λ / c`, then rescales to stay monic: roots get multiplied by `c`.
    pub fn scale_roots(&self, c: &BigRational) -> Self {
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * num_traits::pow(c.clone(), n - i))
            .collect();
        Self::new(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Returns `None` if an intermediate value overflows `T`.
pub fn rank_checked<T>(mut a: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + CheckedMul + CheckedSub,
{
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            let lead = a[r][col].clone();
            for c in col + 1..cols {
                let x = pivot.checked_mul(&a[r][c])?.checked_sub(&lead.checked_mul(&a[rank][c])?)?;
                a[r][c] = x / prev.clone();
            }
            a[r][col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Invariant factors by integer row and column reduction.
///
/// Pivots on the entry of least absolute value to keep coefficients small.
/// Returns `None` if an intermediate value overflows `T`.
pub fn invariant_factors_checked<T>(mut a: Vec<Vec<T>>) -> Option<Vec<T>>
where
    T: Clone + Integer + Signed + CheckedAdd + CheckedMul + CheckedSub,
{
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    a[i][j] = a[i][j].checked_sub(&q.checked_mul(&a[t][j])?)?;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = row[j].checked_sub(&q.checked_mul(&row[t])?)?;
                    row[j] = v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // The pivot row and column are clear. Enforce divisibility of the rest.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] = a[t][j].checked_add(&a[i][j])?;
                        }
                        continue;
                    }
                }
            }
            // move the smallest remaining entry of row t / column t into the pivot
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    Some(diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn imat(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn rmat(rows: &[Vec<i64>]) -> RationalMatrix {
        imat(rows).to_rational()
    }

    fn k3_laplacian() -> RationalMatrix {
        rmat(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(IntegerMatrix::identity(3).rank(), 3);
        assert_eq!(IntegerMatrix::zeros(3, 3).rank(), 0);
        // edges 12, 13, 23 of the triangle graph
        let d1 = imat(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(d1.rank(), 2);
        assert_eq!(d1.to_rational().rank(), 2);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(RationalMatrix::identity(2).determinant().unwrap(), q(1));
        assert_eq!(rmat(&[vec![2, 1], vec![1, 2]]).determinant().unwrap(), q(3));
        assert_eq!(rmat(&[vec![4, 5, 6], vec![0, 0, 0], vec![1, 2, 3]]).determinant().unwrap(), q(0));
        assert!(matches!(RationalMatrix::zeros(2, 3).determinant(), Err(Error::Dimension(_))));
        assert_eq!(RationalMatrix::zeros(0, 0).determinant().unwrap(), q(1));
    }

    #[test]
    fn smith_examples() {
        let snf = imat(&[vec![2, 0], vec![0, 0]]).smith_normal_form();
        assert_eq!(snf.invariant_factors, vec![BigInt::from(2)]);
        let snf = IntegerMatrix::identity(4).smith_normal_form();
        assert_eq!(snf.invariant_factors, vec![BigInt::one(); 4]);
        let snf = imat(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).smith_normal_form();
        assert_eq!(snf.invariant_factors, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn char_poly_examples() {
        let p = rmat(&[vec![0]]).char_poly().unwrap();
        assert_eq!(p.coeffs(), &[q(0), q(1)]);
        let p = RationalMatrix::identity(2).char_poly().unwrap();
        assert_eq!(p.coeffs(), &[q(1), q(-2), q(1)]);
        let p = k3_laplacian().char_poly().unwrap();
        assert_eq!(p.coeffs(), &[q(0), q(9), q(-6), q(1)]);
        assert_eq!(p.to_string(), "λ^3 - 6λ^2 + 9λ");
        assert!(RationalMatrix::zeros(1, 2).char_poly().is_err());
        assert_eq!(RationalMatrix::zeros(0, 0).char_poly().unwrap(), UniPoly::one());
    }

    #[test]
    fn pdet_examples() {
        let d = RationalMatrix::from_fn(3, 3, |i, j| if i == j { [q(2), q(3), q(0)][i].clone() } else { q(0) });
        assert_eq!(d.pdet().unwrap(), q(6));
        assert_eq!(RationalMatrix::zeros(3, 3).pdet().unwrap(), q(1));
        assert_eq!(RationalMatrix::zeros(0, 0).pdet().unwrap(), q(1));
        assert_eq!(k3_laplacian().pdet().unwrap(), q(9));
        // nilpotent: all eigenvalues zero
        assert_eq!(rmat(&[vec![0, 1], vec![0, 0]]).pdet().unwrap(), q(1));
    }

    #[test]
    fn hessenberg_handles_zero_subdiagonal_pivots() {
        // needs a row swap during reduction
        let m = rmat(&[vec![1, 2, 3, 4], vec![0, 5, 6, 7], vec![8, 0, 0, 1], vec![2, 3, 0, 1]]);
        let p = m.char_poly().unwrap();
        for t in -3..=3 {
            let x = q(t);
            let shifted = RationalMatrix::identity(4)
                .scale_rows(&[x.clone(), x.clone(), x.clone(), x.clone()])
                .add(&m.scale_rows(&[q(-1), q(-1), q(-1), q(-1)]))
                .unwrap();
            assert_eq!(p.eval(&x), shifted.determinant().unwrap());
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let m = imat(&[vec![big, 3], vec![5, big]]);
        assert_eq!(m.rank(), 2);
        let snf = m.smith_normal_form();
        assert_eq!(snf.rank(), 2);
        let det: BigInt = BigInt::from(big) * BigInt::from(big) - BigInt::from(15);
        assert_eq!(snf.torsion_order(), det.abs());
    }
}
