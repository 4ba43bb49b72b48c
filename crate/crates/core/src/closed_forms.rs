//! Closed-form tree counts and Laplacian spectra for simplex skeleta,
//! complete colorful complexes, joins and hypercubes, evaluated exactly at a
//! specialization.
//!
//! Every exponent goes through [`binom_ext`], whose convention extends the
//! binomial coefficient to all integer pairs; several formulas rely on
//! values such as `C(−1, 0) = 1` or `C(−1, −2) = −1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::colorful_variable;
use crate::laplacian::{Specialization, SpectrumDescriptor};

/// Binomial coefficient on all of `ℤ²`:
/// the falling factorial over `k!` for `k > 0`; 1 when `k = 0` or `n = k`;
/// otherwise `C(n+1, k+1) − C(n, k+1)`.
pub fn binom_ext(n: i64, k: i64) -> BigInt {
    if k > 0 {
        let mut r = BigInt::one();
        for i in 0..k {
            r = r * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        return r;
    }
    if k == 0 || n == k {
        return BigInt::one();
    }
    // Unwind the recursion upward in k: level t holds C(m, −t) for m in n..=n+K−t.
    let depth = (-k) as usize;
    let mut row = vec![BigInt::one(); depth + 1];
    for t in 1..=depth {
        let lower = -(t as i64);
        row = (0..=depth - t)
            .map(|j| {
                let m = n + j as i64;
                if m == lower {
                    BigInt::one()
                } else {
                    &row[j + 1] - &row[j]
                }
            })
            .collect();
    }
    row.swap_remove(0)
}

/// `base^e` for an integer (possibly negative) exponent.
pub fn rational_pow(base: &BigRational, e: &BigInt) -> Result<BigRational> {
    if e.is_zero() {
        return Ok(BigRational::one());
    }
    if base.is_zero() {
        return if e.is_positive() {
            Ok(BigRational::zero())
        } else {
            Err(Error::InvariantViolation("zero raised to a negative power".into()))
        };
    }
    let Some(m) = e.abs().to_u32() else {
        return Err(Error::InvariantViolation(format!("exponent {e} too large")));
    };
    let p = num_traits::pow(base.clone(), m as usize);
    Ok(if e.is_negative() { p.recip() } else { p })
}

fn masks(r: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << r)
}

fn members(mask: u32, r: usize) -> impl Iterator<Item = usize> {
    (0..r).filter(move |&t| mask & (1 << t) != 0)
}

fn product_over(mask: u32, sizes: &[usize], f: impl Fn(usize) -> i64) -> BigInt {
    members(mask, sizes.len()).map(|t| BigInt::from(f(sizes[t]))).product()
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() || sizes.iter().any(|&n| n == 0) {
        return Err(Error::Argument(format!("color class sizes must be positive and nonempty, got {sizes:?}")));
    }
    if sizes.len() > 20 {
        return Err(Error::Unsupported("more than 20 color classes".into()));
    }
    Ok(())
}

fn check_colorful_k(k: isize, sizes: &[usize]) -> Result<()> {
    check_sizes(sizes)?;
    if k < -1 || k >= sizes.len() as isize {
        return Err(Error::Argument(format!("k = {k} outside -1..={}", sizes.len() - 1)));
    }
    Ok(())
}

/// Exponent of `P_q` in the colorful tree count: the signed sum over
/// `J ⊆ [r]∖{q}` with `|J| ≤ k−1` of `(−1)^{k−1−|J|} ∏_{t∈J} n_t`.
/// `color` is 0-based.
pub fn colorful_exponent(k: isize, color: usize, sizes: &[usize]) -> BigInt {
    let r = sizes.len();
    masks(r)
        .filter(|m| m & (1 << color) == 0 && (m.count_ones() as isize) <= k - 1)
        .map(|m| {
            let term = product_over(m, sizes, |n| n as i64);
            if (k - 1 - m.count_ones() as isize) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `τ_d(K_n^d) = n^{C(n−2, d)}`.
pub fn kalai_tau(n: usize, d: usize) -> Result<BigInt> {
    if d < 1 || d + 1 > n {
        return Err(Error::Argument(format!("need 1 <= d <= n-1, got n={n}, d={d}")));
    }
    let e = binom_ext(n as i64 - 2, d as i64);
    Ok(rational_pow(&BigRational::from_integer(n.into()), &e)?.to_integer())
}

/// `τ̂_d(K_n^d) = (∏ X_i)^{C(n−2, d−1)} (Σ X_i)^{C(n−2, d)}` for vertex weights `X_1..X_n`.
pub fn kalai_tau_hat(d: usize, vertex_weights: &[BigRational]) -> Result<BigRational> {
    let n = vertex_weights.len();
    if d < 1 || d + 1 > n {
        return Err(Error::Argument(format!("need 1 <= d <= n-1, got n={n}, d={d}")));
    }
    let product: BigRational = vertex_weights.iter().product();
    let sum: BigRational = vertex_weights.iter().sum();
    Ok(rational_pow(&product, &binom_ext(n as i64 - 2, d as i64 - 1))?
        * rational_pow(&sum, &binom_ext(n as i64 - 2, d as i64))?)
}

/// Vertex weights `v[1..n]` of a simplex skeleton.
pub fn simplex_weights(n: usize, x: &Specialization) -> Result<Vec<BigRational>> {
    (1..=n).map(|i| x.get(&format!("v[{i}]")).cloned()).collect()
}

/// Vertex weights of a complete colorful complex grouped by color, read from `X[q.i]`.
pub fn colorful_weights(sizes: &[usize], x: &Specialization) -> Result<Vec<Vec<BigRational>>> {
    sizes
        .iter()
        .enumerate()
        .map(|(q, &n)| (1..=n).map(|i| x.get(&colorful_variable(q + 1, i)).cloned()).collect())
        .collect()
}

/// Adin's unweighted count for `Δ_{n_1,…,n_r}`.
pub fn adin_tau(k: isize, sizes: &[usize]) -> Result<BigInt> {
    let ones: Vec<Vec<BigRational>> = sizes.iter().map(|&n| vec![BigRational::one(); n]).collect();
    check_colorful_k(k, sizes)?;
    let value = colorful_b(k, &ones)?;
    if !value.is_integer() {
        return Err(Error::InvariantViolation(format!("non-integral count {value}")));
    }
    Ok(value.to_integer())
}

fn sizes_of(weights: &[Vec<BigRational>]) -> Vec<usize> {
    weights.iter().map(Vec::len).collect()
}

/// `B_k = ∏_{|J| ≤ k} (Σ_{q∉J} S_q)^{C(r−2−|J|, k−|J|) ∏_{t∈J}(n_t − 1)}`.
fn colorful_b(k: isize, weights: &[Vec<BigRational>]) -> Result<BigRational> {
    let sizes = sizes_of(weights);
    let r = sizes.len();
    let s: Vec<BigRational> = weights.iter().map(|w| w.iter().sum()).collect();
    let mut out = BigRational::one();
    for m in masks(r).filter(|m| (m.count_ones() as isize) <= k) {
        let j = m.count_ones() as i64;
        let e = binom_ext(r as i64 - 2 - j, k as i64 - j) * product_over(m, &sizes, |n| n as i64 - 1);
        let lambda: BigRational = (0..r).filter(|q| m & (1 << q) == 0).map(|q| s[q].clone()).sum();
        out *= rational_pow(&lambda, &e)?;
    }
    Ok(out)
}

/// Degree-weighted tree count `τ̂_k(Δ_{n_1,…,n_r}) = A_k B_k` with
/// `A_k = ∏_q P_q^{E_{k,q}}`. `weights[q]` lists the vertex weights of color q.
pub fn colorful_tau_hat(k: isize, weights: &[Vec<BigRational>]) -> Result<BigRational> {
    let sizes = sizes_of(weights);
    check_colorful_k(k, &sizes)?;
    let mut a = BigRational::one();
    for (q, w) in weights.iter().enumerate() {
        let p: BigRational = w.iter().product();
        a *= rational_pow(&p, &colorful_exponent(k, q, &sizes))?;
    }
    Ok(a * colorful_b(k, weights)?)
}

/// The k = 1 case written out for complete multipartite graphs:
/// `(∏ X)(Σ X)^{r−2} ∏_t (Σ_{q≠t} S_q)^{n_t − 1}`.
pub fn clark_tau_hat(weights: &[Vec<BigRational>]) -> Result<BigRational> {
    let sizes = sizes_of(weights);
    check_sizes(&sizes)?;
    let r = sizes.len();
    if r < 2 {
        return Err(Error::Argument("need at least two color classes".into()));
    }
    let s: Vec<BigRational> = weights.iter().map(|w| w.iter().sum()).collect();
    let all_product: BigRational = weights.iter().flatten().product();
    let all_sum: BigRational = s.iter().sum();
    let mut out = all_product * rational_pow(&all_sum, &BigInt::from(r as i64 - 2))?;
    for (t, &n) in sizes.iter().enumerate() {
        out *= rational_pow(&(&all_sum - &s[t]), &BigInt::from(n as i64 - 1))?;
    }
    Ok(out)
}

/// Spanning trees of `K_{n_1,…,n_r}`: `n^{r−2} ∏_t (n − n_t)^{n_t − 1}`.
pub fn austin_tau(sizes: &[usize]) -> Result<BigInt> {
    let ones: Vec<Vec<BigRational>> = sizes.iter().map(|&n| vec![BigRational::one(); n]).collect();
    Ok(clark_tau_hat(&ones)?.to_integer())
}

/// Top-dimensional count `τ̂_{r−1}`:
/// `∏_q P_q^{∏_{i≠q} n_i − ∏_{i≠q}(n_i − 1)} S_q^{∏_{i≠q}(n_i − 1)}`.
pub fn colorful_top_tau_hat(weights: &[Vec<BigRational>]) -> Result<BigRational> {
    let sizes = sizes_of(weights);
    check_sizes(&sizes)?;
    let mut out = BigRational::one();
    for (q, w) in weights.iter().enumerate() {
        let others = || sizes.iter().enumerate().filter(move |&(i, _)| i != q).map(|(_, &n)| n as i64);
        let full: BigInt = others().map(BigInt::from).product();
        let reduced: BigInt = others().map(|n| BigInt::from(n - 1)).product();
        let p: BigRational = w.iter().product();
        let s: BigRational = w.iter().sum();
        out *= rational_pow(&p, &(full - &reduced))? * rational_pow(&s, &reduced)?;
    }
    Ok(out)
}

/// Total Laplacian spectrum of `Δ_{n_1,…,n_r}` in degree k: `λ_J = Σ_{q∉J} S_q`
/// with multiplicity `C(r−|J|, k+1−|J|) ∏_{t∈J}(n_t − 1)` for `|J| ≤ k+1`.
pub fn colorful_spectrum(k: isize, weights: &[Vec<BigRational>]) -> Result<SpectrumDescriptor> {
    let sizes = sizes_of(weights);
    check_colorful_k(k, &sizes)?;
    let r = sizes.len();
    let s: Vec<BigRational> = weights.iter().map(|w| w.iter().sum()).collect();
    let mut entries = Vec::new();
    for m in masks(r).filter(|m| (m.count_ones() as isize) <= k + 1) {
        let j = m.count_ones() as i64;
        let mult = binom_ext(r as i64 - j, k as i64 + 1 - j) * product_over(m, &sizes, |n| n as i64 - 1);
        let lambda: BigRational = (0..r).filter(|q| m & (1 << q) == 0).map(|q| s[q].clone()).sum();
        let mult = mult
            .to_u64()
            .ok_or_else(|| Error::InvariantViolation(format!("multiplicity {mult} is not a small nonnegative integer")))?;
        entries.push((lambda, mult));
    }
    Ok(SpectrumDescriptor::new(entries))
}

/// Total Laplacian spectrum of a join in degree k from the spectra of its factors.
///
/// `factors[q][i]` is the total spectrum of the q-th factor in degree `i − 1`,
/// so each list starts at the empty cell. The result collects all sums
/// `λ_1 + … + λ_r` with `λ_q` taken in degree `k_q` and `Σ k_q = k − r + 1`.
pub fn join_spectrum(factors: &[Vec<SpectrumDescriptor>], k: isize) -> Result<SpectrumDescriptor> {
    if factors.is_empty() || factors.iter().any(Vec::is_empty) {
        return Err(Error::Argument("every join factor needs spectra from degree -1 upward".into()));
    }
    let r = factors.len() as isize;
    let top: isize = factors.iter().map(|f| f.len() as isize - 1).sum::<isize>() - 1;
    if k < -1 || k > top {
        return Err(Error::Argument(format!("degree {k} outside -1..={top} for this join")));
    }
    // Fold one factor at a time, tracking the partial degree sum.
    let mut partial: Vec<(isize, Vec<(BigRational, u64)>)> = vec![(0, vec![(BigRational::zero(), 1)])];
    for factor in factors {
        let mut next: Vec<(isize, Vec<(BigRational, u64)>)> = Vec::new();
        for (sum, entries) in &partial {
            for (i, spectrum) in factor.iter().enumerate() {
                let degree = sum + i as isize - 1;
                let combined: Vec<(BigRational, u64)> = entries
                    .iter()
                    .flat_map(|(a, ma)| spectrum.entries().iter().map(move |(b, mb)| (a + b, ma * mb)))
                    .collect();
                match next.iter_mut().find(|(d, _)| *d == degree) {
                    Some((_, e)) => e.extend(combined),
                    None => next.push((degree, combined)),
                }
            }
        }
        partial = next;
    }
    let target = k - r + 1;
    let entries = partial.into_iter().filter(|(d, _)| *d == target).flat_map(|(_, e)| e);
    Ok(SpectrumDescriptor::new(entries))
}

/// Total spectra of the edgeless complex on vertices with the given weights,
/// in degrees −1 and 0: `{S}` and `{S; 0 : n−1}`.
pub fn edgeless_total_spectra(weights: &[BigRational]) -> Vec<SpectrumDescriptor> {
    let s: BigRational = weights.iter().sum();
    vec![
        SpectrumDescriptor::new([(s.clone(), 1)]),
        SpectrumDescriptor::new([(s, 1), (BigRational::zero(), weights.len() as u64 - 1)]),
    ]
}

/// Total spectra of the complete graph `K_n` in degrees −1, 0, 1:
/// `{S}`, `{S : n}`, `{S : n−1; 0 : C(n−1, 2)}`.
pub fn complete_graph_total_spectra(weights: &[BigRational]) -> Vec<SpectrumDescriptor> {
    let n = weights.len() as u64;
    let s: BigRational = weights.iter().sum();
    let cycles = binom_ext(n as i64 - 1, 2).to_u64().unwrap_or(0);
    vec![
        SpectrumDescriptor::new([(s.clone(), 1)]),
        SpectrumDescriptor::new([(s.clone(), n)]),
        SpectrumDescriptor::new([(s, n.saturating_sub(1)), (BigRational::zero(), cycles)]),
    ]
}

fn small_binom(n: usize, k: i64) -> u64 {
    binom_ext(n as i64, k).to_u64().unwrap_or(0)
}

/// Total spectrum of the suspension `K_n * K̄_2` in degree k ∈ −1..=2, in terms of
/// `S_X` (sum of the `K_n` weights) and `S_Y` (sum of the two apex weights).
pub fn suspension_total_spectrum(n: usize, k: isize, s_x: &BigRational, s_y: &BigRational) -> Result<SpectrumDescriptor> {
    let both = s_x + s_y;
    let c = small_binom(n - 1, 2);
    let n = n as u64;
    Ok(match k {
        -1 => SpectrumDescriptor::new([(both, 1)]),
        0 => SpectrumDescriptor::new([(both, n + 1), (s_x.clone(), 1)]),
        1 => SpectrumDescriptor::new([(s_y.clone(), c), (both, 2 * n - 1), (s_x.clone(), n)]),
        2 => SpectrumDescriptor::new([
            (BigRational::zero(), c),
            (s_x.clone(), n - 1),
            (s_y.clone(), c),
            (both, n - 1),
        ]),
        _ => return Err(Error::Argument(format!("suspension degree {k} outside -1..=2"))),
    })
}

/// Nonzero up-down spectrum of the suspension in degree k ∈ −1..=1.
pub fn suspension_updown_spectrum(n: usize, k: isize, s_x: &BigRational, s_y: &BigRational) -> Result<SpectrumDescriptor> {
    let both = s_x + s_y;
    let m = n as u64;
    Ok(match k {
        -1 => SpectrumDescriptor::new([(both, 1)]),
        0 => SpectrumDescriptor::new([(both, m), (s_x.clone(), 1)]),
        1 => SpectrumDescriptor::new([(s_y.clone(), small_binom(n - 1, 2)), (both, m - 1), (s_x.clone(), m - 1)]),
        _ => return Err(Error::Argument(format!("suspension up-down degree {k} outside -1..=1"))),
    })
}

/// `π̂_k` of the suspension for k ∈ 0..=2.
pub fn suspension_pi_hat(n: usize, k: isize, s_x: &BigRational, s_y: &BigRational) -> Result<BigRational> {
    let both = s_x + s_y;
    let pow = |b: &BigRational, e: i64| rational_pow(b, &BigInt::from(e));
    let n = n as i64;
    match k {
        0 => Ok(both),
        1 => Ok(s_x * pow(&both, n)?),
        2 => Ok(pow(s_x, n - 1)? * pow(s_y, binom_ext(n - 1, 2).to_i64().unwrap_or(0))? * pow(&both, n - 1)?),
        _ => Err(Error::Argument(format!("suspension π̂ index {k} outside 0..=2"))),
    }
}

/// `τ̂_k` of the suspension `K_n * K̄_2` for k ∈ 0..=2, given the `K_n` vertex
/// weights and the two apex weights.
pub fn suspension_tau_hat(k: isize, xs: &[BigRational], ys: &[BigRational; 2]) -> Result<BigRational> {
    let n = xs.len() as i64;
    let s_x: BigRational = xs.iter().sum();
    let s_y = &ys[0] + &ys[1];
    let p_x: BigRational = xs.iter().product();
    let p_y = &ys[0] * &ys[1];
    let pow = |b: &BigRational, e: i64| rational_pow(b, &BigInt::from(e));
    match k {
        0 => Ok(s_x + s_y),
        1 => Ok(&p_x * &p_y * pow(&(&s_x + &s_y), n - 1)? * &s_x),
        2 => Ok(pow(&p_x, n)?
            * pow(&p_y, n - 1)?
            * pow(&s_x, n - 2)?
            * pow(&s_y, binom_ext(n - 1, 2).to_i64().unwrap_or(0))?),
        _ => Err(Error::Argument(format!("suspension tree index {k} outside 0..=2"))),
    }
}

/// The two displayed octahedron counts (`Δ_{2,2,2}`), k ∈ {1, 2}.
pub fn octahedron_tau_hat(k: isize, weights: &[Vec<BigRational>]) -> Result<BigRational> {
    if sizes_of(weights) != [2, 2, 2] {
        return Err(Error::Argument("octahedron weights must be three pairs".into()));
    }
    let all: BigRational = weights.iter().flatten().product();
    let s: Vec<BigRational> = weights.iter().map(|w| w.iter().sum()).collect();
    match k {
        2 => Ok(num_traits::pow(all, 3) * &s[0] * &s[1] * &s[2]),
        1 => Ok(all * (&s[1] + &s[2]) * (&s[0] + &s[2]) * (&s[0] + &s[1]) * (&s[0] + &s[1] + &s[2])),
        _ => Err(Error::Argument(format!("octahedron display index {k} must be 1 or 2"))),
    }
}

/// Hypercube weights per coordinate: `q_i` on the open interval, `y_i` at 0, `z_i` at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeWeights {
    pub q: Vec<BigRational>,
    pub y: Vec<BigRational>,
    pub z: Vec<BigRational>,
}

impl CubeWeights {
    /// Reads `q[i]`, `y[i]`, `z[i]` for `i = 1..=n`.
    pub fn from_specialization(n: usize, x: &Specialization) -> Result<Self> {
        let read = |prefix: &str| (1..=n).map(|i| x.get(&format!("{prefix}[{i}]")).cloned()).collect::<Result<Vec<_>>>();
        Ok(Self { q: read("q")?, y: read("y")?, z: read("z")? })
    }

    pub fn ones(n: usize) -> Self {
        let one = vec![BigRational::one(); n];
        Self { q: one.clone(), y: one.clone(), z: one }
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }
}

/// `u_S = Σ_{i∈S} q_i (1/y_i + 1/z_i)`.
fn cube_u(w: &CubeWeights, mask: u32) -> BigRational {
    members(mask, w.n()).map(|i| &w.q[i] * (w.y[i].recip() + w.z[i].recip())).sum()
}

/// Weighted tree count `τ̂_k(Q_n)`:
/// `q_{[n]}^{Σ_{i=k−1}^{n−1} C(n−1,i) C(i−1,k−2)} ∏_{|S|>k} (Σ_{i∈S} q_i(y_i+z_i) ∏_{j∈S∖i} y_j z_j)^{C(|S|−2, k−1)}`.
pub fn cube_tau_hat(k: isize, w: &CubeWeights) -> Result<BigRational> {
    let n = w.n();
    if k < 0 || k > n as isize {
        return Err(Error::Argument(format!("cube tree index {k} outside 0..={n}")));
    }
    if n > 20 {
        return Err(Error::Unsupported("cube dimension above 20".into()));
    }
    let (n64, k64) = (n as i64, k as i64);
    let q_exponent: BigInt = (k64 - 1..=n64 - 1).map(|i| binom_ext(n64 - 1, i) * binom_ext(i - 1, k64 - 2)).sum();
    let q_all: BigRational = w.q.iter().product();
    let mut out = rational_pow(&q_all, &q_exponent)?;
    for m in masks(n).filter(|m| m.count_ones() as isize > k) {
        let base: BigRational = members(m, n)
            .map(|i| {
                let others: BigRational = members(m, n).filter(|&j| j != i).map(|j| &w.y[j] * &w.z[j]).product();
                &w.q[i] * (&w.y[i] + &w.z[i]) * others
            })
            .sum();
        out *= rational_pow(&base, &binom_ext(m.count_ones() as i64 - 2, k64 - 1))?;
    }
    Ok(out)
}

/// Nonzero spectrum of the up-down Laplacian of `Q_n` in degree k−1:
/// `u_S` with multiplicity `C(|S|−1, k−1)` for `|S| ≥ k`.
pub fn cube_spectrum(k: isize, w: &CubeWeights) -> Result<SpectrumDescriptor> {
    let n = w.n();
    if k < 1 || k > n as isize {
        return Err(Error::Argument(format!("cube spectrum index {k} outside 1..={n}")));
    }
    let mut entries = Vec::new();
    for m in masks(n).filter(|m| m.count_ones() as isize >= k) {
        let mult = binom_ext(m.count_ones() as i64 - 1, k as i64 - 1);
        let mult = mult.to_u64().ok_or_else(|| Error::InvariantViolation(format!("multiplicity {mult}")))?;
        entries.push((cube_u(w, m), mult));
    }
    Ok(SpectrumDescriptor::new(entries))
}

/// Product of the weights of all j-cells of `Q_n` in closed form:
/// `q_{[n]}^{C(n−1, j−1) 2^{n−j}} (y_{[n]} z_{[n]})^{C(n−1, j) 2^{n−j−1}}`; 1 for `j = −1`.
pub fn cube_cell_weight_product(j: isize, w: &CubeWeights) -> Result<BigRational> {
    let n = w.n() as i64;
    if j < -1 || j > n as isize {
        return Err(Error::Argument(format!("cube cell dimension {j} outside -1..={n}")));
    }
    if j == -1 || n == 0 {
        return Ok(BigRational::one());
    }
    let j = j as i64;
    let scaled = |c: BigInt, shift: i64| if c.is_zero() { c } else { c << (shift as usize) };
    let q_exp = scaled(binom_ext(n - 1, j - 1), n - j);
    let yz_exp = scaled(binom_ext(n - 1, j), n - j - 1);
    let q_all: BigRational = w.q.iter().product();
    let yz_all: BigRational = w.y.iter().chain(&w.z).product();
    Ok(rational_pow(&q_all, &q_exp)? * rational_pow(&yz_all, &yz_exp)?)
}

/// Both sides of `Σ_{i=K}^{N} C(i, K) C(N, i) = C(N, K) 2^{N−K}`, counting
/// triples `(A, B, C)` partitioning `[N]` with `|A| = K`.
pub fn triple_count_sides(n: i64, k: i64) -> (BigInt, BigInt) {
    let lhs: BigInt = (k..=n).map(|i| binom_ext(i, k) * binom_ext(n, i)).sum();
    let c = binom_ext(n, k);
    let rhs = if c.is_zero() { c } else { c << ((n - k) as usize) };
    (lhs, rhs)
}

/// Checks the triple-count identity; for `K < 0` both sides must vanish.
pub fn triple_count_identity(n: i64, k: i64) -> bool {
    let (lhs, rhs) = triple_count_sides(n, k);
    lhs == rhs && (k >= 0 || lhs.is_zero())
}
