//! Weighted boundary and Laplacian operators at rational specializations.
//!
//! The weighted boundary `D_{k−1}^{-1} ∂_k D_k` needs square roots of the
//! weights. Every operator here is instead returned conjugated by `D_k`, which
//! makes all entries rational in the weights and leaves the spectrum unchanged:
//!
//! * up-down:  `W_k^{-1} ∂_{k+1} W_{k+1} ∂_{k+1}^T`
//! * down-up:  `∂_k^T W_{k−1}^{-1} ∂_k W_k`
//! * total:    the sum of the two (same conjugating matrix, so still similar)
//!
//! with `W_j = diag(X_σ : σ ∈ Δ_j)`. Spectra are compared through exact
//! characteristic polynomials, never by root finding.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Cell, CellComplex, Monomial};
use crate::error::{Error, Result};
use crate::linalg::{RationalMatrix, UniPoly};

/// Strictly positive rational values for named weight variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Specialization {
    values: BTreeMap<String, BigRational>,
}

impl Specialization {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every listed variable set to 1.
    pub fn ones<I, S>(vars: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self { values: vars.into_iter().map(|v| (v.into(), BigRational::one())).collect() }
    }

    /// Every variable of the complex set to 1.
    pub fn ones_for(cx: &CellComplex) -> Self {
        Self::ones(cx.variables())
    }

    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, BigRational)>,
        S: Into<String>,
    {
        let mut out = Self::new();
        for (k, v) in pairs {
            out.set(k, v)?;
        }
        Ok(out)
    }

    /// Sets a value, rejecting zero and negative weights.
    pub fn set(&mut self, var: impl Into<String>, value: BigRational) -> Result<()> {
        let var = var.into();
        if !value.is_positive() {
            return Err(Error::Specialization(format!("weight of {var} must be positive, got {value}")));
        }
        self.values.insert(var, value);
        Ok(())
    }

    pub fn get(&self, var: &str) -> Result<&BigRational> {
        self.values.get(var).ok_or_else(|| Error::Specialization(format!("variable {var} is not assigned")))
    }

    pub fn values(&self) -> &BTreeMap<String, BigRational> {
        &self.values
    }

    pub fn evaluate(&self, m: &Monomial) -> Result<BigRational> {
        let mut out = BigRational::one();
        for (var, e) in m.exponents() {
            out *= num_traits::pow(self.get(var)?.clone(), *e as usize);
        }
        Ok(out)
    }

    /// Multiplies every value by `c`.
    pub fn scaled(&self, c: &BigRational) -> Result<Self> {
        Self::from_pairs(self.values.iter().map(|(k, v)| (k.clone(), v * c)))
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Deterministic stream of pseudo-random positive specializations.
///
/// Values are `p/q` with `1 ≤ p ≤ 97`, `1 ≤ q ≤ 13`, drawn per variable in
/// sorted name order from a ChaCha8 stream.
#[derive(Clone, Debug)]
pub struct SpecializationSampler {
    rng: ChaCha8Rng,
}

impl SpecializationSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn sample<I, S>(&mut self, vars: I) -> Specialization
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = vars.into_iter().map(Into::into).collect();
        names.sort();
        names.dedup();
        let values = names
            .into_iter()
            .map(|v| {
                let p: i64 = self.rng.gen_range(1..=97);
                let q: i64 = self.rng.gen_range(1..=13);
                (v, BigRational::new(p.into(), q.into()))
            })
            .collect();
        Specialization { values }
    }
}

/// The all-ones point followed by `points` seeded random points.
pub fn specialization_battery(vars: &[String], seed: u64, points: usize) -> Vec<Specialization> {
    let mut sampler = SpecializationSampler::new(seed);
    let mut out = vec![Specialization::ones(vars.iter().cloned())];
    out.extend((0..points).map(|_| sampler.sample(vars.iter().cloned())));
    out
}

/// `X_σ` at the specialization.
pub fn weight_of_cell(cell: &Cell, x: &Specialization) -> Result<BigRational> {
    x.evaluate(&cell.weight)
}

/// Weights of the k-cells in matrix order; `[1]` for the empty cell.
pub fn cell_weights(cx: &CellComplex, k: isize, x: &Specialization) -> Result<Vec<BigRational>> {
    if k == -1 {
        return Ok(vec![BigRational::one()]);
    }
    cx.cells(k).iter().map(|c| weight_of_cell(c, x)).collect()
}

/// `X_{(k)} = ∏_{σ ∈ Δ_k} X_σ`, which is 1 when there are no k-cells.
pub fn cell_weight_product(cx: &CellComplex, k: isize, x: &Specialization) -> Result<BigRational> {
    Ok(cell_weights(cx, k, x)?.iter().product())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LaplacianKind {
    UpDown,
    DownUp,
    Total,
}

impl fmt::Display for LaplacianKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::UpDown => "ud",
            Self::DownUp => "du",
            Self::Total => "tot",
        })
    }
}

fn check_degree(cx: &CellComplex, k: isize) -> Result<()> {
    if k < -1 || k > cx.dim() {
        return Err(Error::Argument(format!("Laplacian degree {k} outside -1..={}", cx.dim())));
    }
    Ok(())
}

fn inverse(values: &[BigRational]) -> Vec<BigRational> {
    values.iter().map(|v| v.recip()).collect()
}

/// `W_k^{-1} ∂_{k+1} W_{k+1} ∂_{k+1}^T`, similar to the weighted up-down Laplacian in degree k.
pub fn updown_laplacian(cx: &CellComplex, k: isize, x: &Specialization) -> Result<RationalMatrix> {
    check_degree(cx, k)?;
    let d = cx.boundary_matrix(k + 1).to_rational();
    let lower = cell_weights(cx, k, x)?;
    let upper = cell_weights(cx, k + 1, x)?;
    d.scale_cols(&upper).mul(&d.transpose()).map(|m| m.scale_rows(&inverse(&lower)))
}

/// `∂_k^T W_{k−1}^{-1} ∂_k W_k`, similar to the weighted down-up Laplacian in degree k.
///
/// In degree −1 this is the 1×1 zero matrix.
pub fn downup_laplacian(cx: &CellComplex, k: isize, x: &Specialization) -> Result<RationalMatrix> {
    check_degree(cx, k)?;
    if k == -1 {
        return Ok(RationalMatrix::zeros(1, 1));
    }
    let d = cx.boundary_matrix(k).to_rational();
    let lower = cell_weights(cx, k - 1, x)?;
    let here = cell_weights(cx, k, x)?;
    d.transpose().mul(&d.scale_rows(&inverse(&lower))).map(|m| m.scale_cols(&here))
}

/// Sum of the up-down and down-up forms, similar to the weighted total Laplacian.
pub fn total_laplacian(cx: &CellComplex, k: isize, x: &Specialization) -> Result<RationalMatrix> {
    updown_laplacian(cx, k, x)?.add(&downup_laplacian(cx, k, x)?)
}

pub fn laplacian(cx: &CellComplex, kind: LaplacianKind, k: isize, x: &Specialization) -> Result<RationalMatrix> {
    match kind {
        LaplacianKind::UpDown => updown_laplacian(cx, k, x),
        LaplacianKind::DownUp => downup_laplacian(cx, k, x),
        LaplacianKind::Total => total_laplacian(cx, k, x),
    }
}

/// `π̂_k`: pseudodeterminant of the up-down Laplacian in degree k−1, checked
/// against the down-up Laplacian in degree k.
pub fn pi_hat(cx: &CellComplex, k: isize, x: &Specialization) -> Result<BigRational> {
    if k < 0 || k > cx.dim() {
        return Err(Error::Argument(format!("pi_hat index {k} outside 0..={}", cx.dim())));
    }
    let up = updown_laplacian(cx, k - 1, x)?.pdet()?;
    let down = downup_laplacian(cx, k, x)?.pdet()?;
    if up != down {
        return Err(Error::InvariantViolation(format!(
            "pdet of up-down Laplacian in degree {} is {up} but pdet of down-up in degree {k} is {down}",
            k - 1
        )));
    }
    Ok(up)
}

/// Nonzero spectra of the up-down Laplacian in degree k and the down-up
/// Laplacian in degree k+1 agree (char polys equal after removing λ factors).
/// In the top degree the partner is empty, so the up-down spectrum must be all zero.
pub fn verify_updown_downup_identity(cx: &CellComplex, k: isize, x: &Specialization) -> Result<bool> {
    let ud = updown_laplacian(cx, k, x)?.char_poly()?.strip_zero_roots();
    if k == cx.dim() {
        return Ok(ud == UniPoly::one());
    }
    let du = downup_laplacian(cx, k + 1, x)?.char_poly()?.strip_zero_roots();
    Ok(ud == du)
}

/// The nonzero spectrum of the total Laplacian is the union of the nonzero
/// spectra of its two parts.
pub fn verify_total_decomposition(cx: &CellComplex, k: isize, x: &Specialization) -> Result<bool> {
    let tot = total_laplacian(cx, k, x)?.char_poly()?.strip_zero_roots();
    let ud = updown_laplacian(cx, k, x)?.char_poly()?.strip_zero_roots();
    let du = downup_laplacian(cx, k, x)?.char_poly()?.strip_zero_roots();
    Ok(tot == ud.mul(&du))
}

/// A finite multiset of rational eigenvalues.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpectrumDescriptor {
    /// Sorted by value, values distinct, multiplicities positive.
    entries: Vec<(BigRational, u64)>,
}

impl SpectrumDescriptor {
    pub fn new(entries: impl IntoIterator<Item = (BigRational, u64)>) -> Self {
        let mut merged: BTreeMap<BigRational, u64> = BTreeMap::new();
        for (v, m) in entries {
            if m > 0 {
                *merged.entry(v).or_insert(0) += m;
            }
        }
        Self { entries: merged.into_iter().collect() }
    }

    pub fn entries(&self) -> &[(BigRational, u64)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, value: &BigRational) -> u64 {
        self.entries.iter().find(|(v, _)| v == value).map_or(0, |(_, m)| *m)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.entries.iter().chain(&other.entries).cloned())
    }

    pub fn nonzero(&self) -> Self {
        Self { entries: self.entries.iter().filter(|(v, _)| !v.is_zero()).cloned().collect() }
    }

    /// `∏ (λ − v)^m`.
    pub fn char_poly(&self) -> UniPoly {
        self.entries.iter().fold(UniPoly::one(), |acc, (v, m)| acc.mul(&UniPoly::linear_power(v, *m)))
    }

    /// Product of the nonzero eigenvalues with multiplicity.
    pub fn pdet(&self) -> BigRational {
        self.entries
            .iter()
            .filter(|(v, _)| !v.is_zero())
            .map(|(v, m)| num_traits::pow(v.clone(), *m as usize))
            .product()
    }

    /// Equal to the matrix's spectrum up to the multiplicity of 0.
    pub fn matches_up_to_zero(&self, m: &RationalMatrix) -> Result<bool> {
        Ok(m.char_poly()?.strip_zero_roots() == self.nonzero().char_poly())
    }

    /// Exactly the matrix's spectrum.
    pub fn matches_exactly(&self, m: &RationalMatrix) -> Result<bool> {
        Ok(m.char_poly()? == self.char_poly())
    }
}

impl fmt::Display for SpectrumDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(v, m)| if *m == 1 { v.to_string() } else { format!("{v}: {m}") })
            .collect();
        write!(f, "{{{}}}", parts.join("; "))
    }
}

/// Rational from an integer.
#[cfg(test)]
pub(crate) fn rat(n: impl Into<num_bigint::BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
